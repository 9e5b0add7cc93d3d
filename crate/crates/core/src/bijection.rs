//! The splitting bijection, the tail involution, and their exhaustive
//! verifiers.
//!
//! For a tailed shape (mu', n^l) with n in {1, 2}, `pi_star` splits a
//! filling into its body (shape mu') and tail (shape (n^l)); `tau` is the
//! involution that swaps tail-row entries upward while the boundary
//! condition xAx and then the interior condition xXxX hold (the identity
//! when n = 1). The verifiers check, by exhaustion over all fillings with
//! a bounded alphabet, that inv(tau(T)) = inv(pi_star(T)) and that
//! maj(tau(T)) is congruent to maj(pi_star(T)) mod l, along with the
//! stepwise swap lemmas the proof of that fact rests on.

use std::fmt;

use rayon::prelude::*;

use crate::composition::Composition;
use crate::engine::ShapeSpec;
use crate::enumerate::{chunk_count, for_each_in_chunk, EnumerationBudget, StatsTable};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::partition::Partition;

/// A tailed shape restricted to tail widths 1 and 2 (the widths the
/// involution is defined for).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailShape {
    spec: ShapeSpec,
}

impl TailShape {
    pub fn new(mu_prime: Partition, n: usize, l: usize) -> Result<Self> {
        if n != 1 && n != 2 {
            return Err(Error::InvalidTailShape {
                reason: format!("tail width must be 1 or 2, got {n}"),
            });
        }
        Ok(TailShape {
            spec: ShapeSpec::new(mu_prime, n, l)?,
        })
    }

    /// Number of body rows (the row index where the tail starts is k+1).
    pub fn k(&self) -> usize {
        self.spec.mu_prime().len()
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn l(&self) -> usize {
        self.spec.l()
    }

    pub fn mu_prime(&self) -> &Partition {
        self.spec.mu_prime()
    }

    pub fn tail(&self) -> Partition {
        self.spec.tail()
    }

    pub fn mu(&self) -> Partition {
        self.spec.mu()
    }
}

/// A filling split into its body and tail components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFilling {
    pub body: Filling,
    pub tail: Filling,
}

impl SplitFilling {
    /// maj of the couple: maj(body) + maj(tail).
    pub fn maj(&self) -> u64 {
        self.body.maj() + self.tail.maj()
    }

    /// inv of the couple: inv(body) + inv(tail).
    pub fn inv(&self) -> i64 {
        self.body.inv() + self.tail.inv()
    }

    /// Componentwise sum of the two evaluations.
    pub fn evaluation(&self, m: usize) -> Result<Composition> {
        Ok(self.body.evaluation(m)?.add(&self.tail.evaluation(m)?))
    }
}

fn require_shape(filling: &Filling, expected: &Partition) -> Result<()> {
    if filling.shape() != expected {
        return Err(Error::ShapeMismatch {
            expected: expected.to_string(),
            got: filling.shape().to_string(),
        });
    }
    Ok(())
}

/// Splits a filling of (mu', n^l) into body and tail. In reading order the
/// tail rows come first (they sit on top), so the split is a prefix/suffix
/// split of the entry list.
pub fn pi_star(filling: &Filling, ts: &TailShape) -> Result<SplitFilling> {
    require_shape(filling, &ts.mu())?;
    let tail_cells = ts.n() * ts.l();
    let entries = filling.entries();
    let tail = Filling::new(ts.tail(), entries[..tail_cells].to_vec())?;
    let body = Filling::new(ts.mu_prime().clone(), entries[tail_cells..].to_vec())?;
    Ok(SplitFilling { body, tail })
}

/// Reassembles a split filling; inverse of [`pi_star`].
pub fn pi_star_inverse(split: &SplitFilling, ts: &TailShape) -> Result<Filling> {
    require_shape(&split.body, ts.mu_prime())?;
    require_shape(&split.tail, &ts.tail())?;
    let mut entries = split.tail.entries().to_vec();
    entries.extend_from_slice(split.body.entries());
    Filling::new(ts.mu(), entries)
}

/// Boundary condition: a width-2 row (a, b) over a row whose first entry
/// is `below`. Holds when a <= below < b or b <= below < a.
pub fn cond_xax(a: u32, b: u32, below: u32) -> bool {
    (a <= below && below < b) || (b <= below && below < a)
}

/// Interior condition: a width-2 row (a, b) over a width-2 row
/// (below_left, below_right). Holds when one of eight inequality chains
/// does; the chains are pairwise mutually exclusive.
pub fn cond_xxxx(a: u32, b: u32, below_left: u32, below_right: u32) -> bool {
    let (big_a, big_b) = (below_left, below_right);
    (a <= big_a && big_a < b && b <= big_b)
        || (big_a < b && b <= big_b && big_b < a)
        || (b <= big_a && big_a < a && a <= big_b)
        || (big_a < a && a <= big_b && big_b < b)
        || (a <= big_b && big_b < b && b <= big_a)
        || (big_b < b && b <= big_a && big_a < a)
        || (b <= big_b && big_b < a && a <= big_a)
        || (big_b < a && a <= big_a && big_a < b)
}

/// Which condition licensed a swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapRule {
    /// The boundary step between the top body row and the first tail row.
    XAx,
    /// An interior step between two tail rows.
    XXxX,
}

/// One step of the involution: row `row` had its two entries swapped,
/// producing `result`.
#[derive(Clone, Debug)]
pub struct TauStep {
    pub row: usize,
    pub rule: SwapRule,
    pub result: Filling,
}

/// Offset of tail row `row` (k+1 <= row <= k+l) in the reading-order entry
/// list of (mu', 2^l).
fn tail_row_offset(ts: &TailShape, row: usize) -> usize {
    2 * (ts.k() + ts.l() - row)
}

/// Runs the swap algorithm on the reading-order entries of a width-2-tail
/// filling, returning the rows swapped in order.
fn tau_sweep(entries: &mut [u32], k: usize, l: usize) -> Vec<(usize, SwapRule)> {
    if l == 0 {
        return Vec::new();
    }
    let first_tail = 2 * (l - 1);
    let below = entries[2 * l]; // row k, column 1
    if !cond_xax(entries[first_tail], entries[first_tail + 1], below) {
        return Vec::new();
    }
    entries.swap(first_tail, first_tail + 1);
    let mut steps = vec![(k + 1, SwapRule::XAx)];
    for j in 1..l {
        let lower = 2 * (l - j);
        let upper = lower - 2;
        if !cond_xxxx(
            entries[upper],
            entries[upper + 1],
            entries[lower],
            entries[lower + 1],
        ) {
            break;
        }
        entries.swap(upper, upper + 1);
        steps.push((k + j + 1, SwapRule::XXxX));
    }
    steps
}

/// The involution on fillings of (mu', n^l). The identity for n = 1; for
/// n = 2 it swaps the first tail row if the boundary rows satisfy xAx, then
/// keeps swapping the next row up while consecutive tail rows satisfy xXxX.
/// Shape and evaluation are preserved.
pub fn tau(filling: &Filling, ts: &TailShape) -> Result<Filling> {
    Ok(tau_trace(filling, ts)?.0)
}

/// As [`tau`], also reporting each swap with the intermediate filling.
pub fn tau_trace(filling: &Filling, ts: &TailShape) -> Result<(Filling, Vec<TauStep>)> {
    require_shape(filling, &ts.mu())?;
    if ts.n() == 1 {
        return Ok((filling.clone(), Vec::new()));
    }
    let mut entries = filling.entries().to_vec();
    let mut steps = Vec::new();
    let mut sweep_entries = filling.entries().to_vec();
    for (row, rule) in tau_sweep(&mut sweep_entries, ts.k(), ts.l()) {
        let off = tail_row_offset(ts, row);
        entries.swap(off, off + 1);
        steps.push(TauStep {
            row,
            rule,
            result: Filling::new(ts.mu(), entries.clone())?,
        });
    }
    debug_assert_eq!(
        entries, sweep_entries,
        "trace replay drifted from the sweep"
    );
    let result = steps
        .last()
        .map(|s| s.result.clone())
        .unwrap_or_else(|| filling.clone());
    Ok((result, steps))
}

/// A verifier counterexample: the enumeration index it was found at and a
/// rendered explanation.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub case_index: u64,
    pub detail: String,
}

/// Outcome of an exhaustive verification sweep.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "VERIFIED {} cases", self.cases),
            Some(ce) => write!(
                f,
                "COUNTEREXAMPLE at case {} of {}:\n{}",
                ce.case_index, self.cases, ce.detail
            ),
        }
    }
}

/// Sweeps every filling of `mu` with entries bounded by `m`, in
/// deterministic parallel chunks. `check` returns a failure description;
/// the reported counterexample is always the first in enumeration order.
fn sweep(
    mu: &Partition,
    m: usize,
    max_states: u64,
    check: impl Fn(&[u32]) -> Option<String> + Sync,
) -> Result<VerificationReport> {
    let budget = EnumerationBudget::new(m, max_states)?;
    let total = budget.ensure(mu)?;
    let chunks = chunk_count(mu, m);
    let chunk_size = total / chunks;
    let found: Vec<Option<(u64, String)>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut local = 0u64;
            let mut first: Option<(u64, String)> = None;
            for_each_in_chunk(mu, m, chunk, |entries| {
                if first.is_none() {
                    if let Some(detail) = check(entries) {
                        first = Some((chunk * chunk_size + local, detail));
                    }
                }
                local += 1;
            });
            first
        })
        .collect();
    let counterexample = found
        .into_iter()
        .flatten()
        .next()
        .map(|(case_index, detail)| Counterexample { case_index, detail });
    Ok(VerificationReport {
        cases: total,
        counterexample,
    })
}

fn render_filling(mu: &Partition, entries: &[u32]) -> String {
    Filling::new(mu.clone(), entries.to_vec())
        .map(|f| f.to_string())
        .unwrap_or_else(|_| format!("{entries:?}"))
}

/// Exhaustively checks that tau is an involution preserving shape and
/// evaluation on all fillings of (mu', n^l) with entries at most `m`.
pub fn verify_involution(ts: &TailShape, m: usize, max_states: u64) -> Result<VerificationReport> {
    let mu = ts.mu();
    let k = ts.k();
    let l = ts.l();
    let n1 = ts.n() == 1;
    let shape = mu.clone();
    sweep(&shape, m, max_states, move |entries| {
        if n1 {
            return None;
        }
        let mut once = entries.to_vec();
        tau_sweep(&mut once, k, l);
        let mut counts = vec![0u32; m];
        let mut counts_once = vec![0u32; m];
        for (&e, &o) in entries.iter().zip(&once) {
            counts[e as usize - 1] += 1;
            counts_once[o as usize - 1] += 1;
        }
        if counts != counts_once {
            return Some(format!(
                "evaluation not preserved\nT      = {}\ntau(T) = {}",
                render_filling(&mu, entries),
                render_filling(&mu, &once)
            ));
        }
        let mut twice = once.clone();
        tau_sweep(&mut twice, k, l);
        if twice != entries {
            return Some(format!(
                "tau(tau(T)) differs from T\nT           = {}\ntau(T)      = {}\ntau(tau(T)) = {}",
                render_filling(&mu, entries),
                render_filling(&mu, &once),
                render_filling(&mu, &twice)
            ));
        }
        None
    })
}

/// Exhaustively checks the statistic contract of the involution against
/// the split: inv(tau(T)) = inv(pi_star(T)) and maj(tau(T)) congruent to
/// maj(pi_star(T)) mod l, on all fillings with entries at most `m`.
pub fn verify_theorem(ts: &TailShape, m: usize, max_states: u64) -> Result<VerificationReport> {
    let mu = ts.mu();
    let k = ts.k();
    let l = ts.l();
    let n = ts.n();
    let tail_cells = n * l;
    let mu_table = StatsTable::new(&mu);
    let body_table = StatsTable::new(ts.mu_prime());
    let tail_table = StatsTable::new(&ts.tail());
    let shape = mu.clone();
    sweep(&shape, m, max_states, move |entries| {
        let (tau_maj, tau_inv) = if n == 1 {
            mu_table.maj_inv(entries)
        } else {
            let mut swapped = entries.to_vec();
            tau_sweep(&mut swapped, k, l);
            mu_table.maj_inv(&swapped)
        };
        let (tail_maj, tail_inv) = tail_table.maj_inv(&entries[..tail_cells]);
        let (body_maj, body_inv) = body_table.maj_inv(&entries[tail_cells..]);
        let split_maj = body_maj + tail_maj;
        let split_inv = body_inv + tail_inv;
        let maj_ok = if l == 0 {
            tau_maj == split_maj
        } else {
            tau_maj % l as u64 == split_maj % l as u64
        };
        if !maj_ok || tau_inv != split_inv {
            return Some(format!(
                "statistics disagree on T = {}\nmaj(tau(T)) = {tau_maj}, maj(pi*(T)) = {split_maj} (mod {l})\ninv(tau(T)) = {tau_inv}, inv(pi*(T)) = {split_inv}",
                render_filling(&mu, entries)
            ));
        }
        None
    })
}

/// Outcome of the two-row swap lemma suite.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    /// Entry triples checked for the boundary (xAx) lemmas.
    pub boundary_tuples: u64,
    /// Entry quadruples checked for the interior lemmas.
    pub interior_tuples: u64,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn cases(&self) -> u64 {
        self.boundary_tuples + self.interior_tuples
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verified() {
            write!(
                f,
                "VERIFIED {} cases ({} boundary tuples, {} interior tuples)",
                self.cases(),
                self.boundary_tuples,
                self.interior_tuples
            )
        } else {
            writeln!(
                f,
                "FAILED {} of {} cases:",
                self.failures.len(),
                self.cases()
            )?;
            for failure in &self.failures {
                writeln!(f, "{failure}")?;
            }
            Ok(())
        }
    }
}

fn two_rows(upper: &[u32], lower: &[u32]) -> Filling {
    Filling::from_rows_top_down(vec![upper.to_vec(), lower.to_vec()]).unwrap()
}

/// The four lower-row-swap conditions under which descent and inversion
/// sets are preserved exactly.
fn set_stable_conditions(a: u32, b: u32, big_a: u32, big_b: u32) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let (big_lo, big_hi) = (big_a.min(big_b), big_a.max(big_b));
    hi <= big_lo                      // a,b <= A,B
        || (a <= big_lo && big_hi < b) // a <= A,B < b
        || big_hi < lo                 // A,B < a,b
        || (b <= big_lo && big_hi < a) // b <= A,B < a
}

/// The two lower-row-swap conditions under which descent counts and the
/// restricted inv are preserved.
fn count_stable_conditions(a: u32, b: u32, big_a: u32, big_b: u32) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    (big_a < lo && hi <= big_b) || (big_b < lo && hi <= big_a)
}

/// Exhaustively checks the two-row swap lemmas over all entry tuples
/// bounded by `max_entry`:
/// boundary rows (xAx and its complement) relate the same-row inversions
/// before a swap to the restricted inv after it; lower-row swaps under the
/// stable conditions preserve descent/inversion data; the double swap under
/// xXxX preserves descent counts and the restricted inv; and every lower
/// row with distinct entries falls under one of those conditions.
pub fn verify_lemmas(max_entry: u32) -> LemmaReport {
    let mut failures = Vec::new();
    let range = 1..=max_entry;

    // Boundary lemmas, on a 2x2 shape and on a 2-over-3 shape (the extra
    // lower cells must be irrelevant).
    let mut boundary_tuples = 0u64;
    for a in range.clone() {
        for b in range.clone() {
            for big_a in range.clone() {
                boundary_tuples += 1;
                for hidden in range.clone() {
                    check_boundary_lemma(&mut failures, &[a, b], &[big_a, hidden]);
                    for hidden2 in range.clone() {
                        check_boundary_lemma(&mut failures, &[a, b], &[big_a, hidden, hidden2]);
                    }
                }
            }
        }
    }

    let mut interior_tuples = 0u64;
    for a in range.clone() {
        for b in range.clone() {
            for big_a in range.clone() {
                for big_b in range.clone() {
                    interior_tuples += 1;
                    check_interior_lemmas(&mut failures, a, b, big_a, big_b);
                }
            }
        }
    }

    LemmaReport {
        boundary_tuples,
        interior_tuples,
        failures,
    }
}

/// If (a,b) over A satisfies xAx, the same-row inversions of the upper row
/// equal the restricted inv after swapping the upper row; otherwise they
/// equal the restricted inv of the unswapped filling.
fn check_boundary_lemma(failures: &mut Vec<String>, upper: &[u32], lower: &[u32]) {
    let t = two_rows(upper, lower);
    let same_row = t.inv_sets(2).unwrap().0.len() as i64;
    let (a, b) = (upper[0], upper[1]);
    if cond_xax(a, b, lower[0]) {
        let swapped = two_rows(&[b, a], lower);
        let after = swapped.inv_rows(2).unwrap();
        if same_row != after {
            failures.push(format!(
                "xAx swap lemma fails: |Inv_2({t})| = {same_row} but inv_2,1({swapped}) = {after}"
            ));
        }
    } else {
        let unswapped = t.inv_rows(2).unwrap();
        if same_row != unswapped {
            failures.push(format!(
                "no-swap lemma fails: |Inv_2({t})| = {same_row} but inv_2,1({t}) = {unswapped}"
            ));
        }
    }
}

fn check_interior_lemmas(failures: &mut Vec<String>, a: u32, b: u32, big_a: u32, big_b: u32) {
    let t = two_rows(&[a, b], &[big_a, big_b]);
    let lower_swapped = two_rows(&[a, b], &[big_b, big_a]);

    if set_stable_conditions(a, b, big_a, big_b) {
        let same = t.des_rows(2).unwrap() == lower_swapped.des_rows(2).unwrap()
            && t.inv_sets(2).unwrap() == lower_swapped.inv_sets(2).unwrap();
        if !same {
            failures.push(format!(
                "set-stability fails under lower swap: {t} vs {lower_swapped}"
            ));
        }
    }

    if count_stable_conditions(a, b, big_a, big_b) {
        let des_eq = t.des_rows(2).unwrap().len() == lower_swapped.des_rows(2).unwrap().len();
        let inv_eq = t.inv_rows(2).unwrap() == lower_swapped.inv_rows(2).unwrap();
        if !des_eq || !inv_eq {
            failures.push(format!(
                "count-stability fails under lower swap: {t} vs {lower_swapped}"
            ));
        }
    }

    if cond_xxxx(a, b, big_a, big_b) {
        let double = two_rows(&[b, a], &[big_b, big_a]);
        let des_eq = t.des_rows(2).unwrap().len() == double.des_rows(2).unwrap().len();
        let inv_eq = t.inv_rows(2).unwrap() == double.inv_rows(2).unwrap();
        if !des_eq || !inv_eq {
            failures.push(format!("double-swap stability fails: {t} vs {double}"));
        }
    }

    // Coverage: distinct lower entries always satisfy one of the swap
    // conditions.
    if big_a != big_b
        && !(cond_xxxx(a, b, big_a, big_b)
            || set_stable_conditions(a, b, big_a, big_b)
            || count_stable_conditions(a, b, big_a, big_b))
    {
        failures.push(format!("coverage fails: {t} satisfies no swap condition"));
    }
}

/// Replays the swap algorithm filling by filling, asserting after each
/// interior swap that the row-pair statistics agree with the input filling,
/// checking the boundary step against the xAx lemmas, and closing with
/// maj(pi_star(T)) + l * (|Des_{k+1,k}(tau(T))| + the body descents of T in
/// tail columns) = maj(tau(T)) together with inv(pi_star(T)) = inv(tau(T)).
/// The boundary descents are counted on the output filling: the boundary
/// swap can create or destroy a descent in row k+1, and it is the swapped
/// row whose descents carry the weight l. For a one-row body the body
/// correction term is empty.
pub fn verify_key_lemma(ts: &TailShape, m: usize, max_states: u64) -> Result<VerificationReport> {
    if ts.n() != 2 {
        return Err(Error::InvalidTailShape {
            reason: "the swap algorithm replay requires tail width 2".to_string(),
        });
    }
    let mu = ts.mu();
    let k = ts.k();
    let l = ts.l();
    let n = ts.n();

    let shape = mu.clone();
    sweep(&shape, m, max_states, move |entries| {
        let filling = Filling::new(mu.clone(), entries.to_vec()).expect("valid enumeration state");
        let (result, steps) = tau_trace(&filling, ts).expect("shape matches by construction");
        let split = pi_star(&filling, ts).expect("shape matches by construction");

        if l >= 1 {
            let boundary_same_row = filling.inv_sets(k + 1).unwrap().0.len() as i64;
            match steps.first() {
                None => {
                    let unswapped = filling.inv_rows(k + 1).unwrap();
                    if boundary_same_row != unswapped {
                        return Some(format!(
                            "boundary no-swap relation fails on T = {filling}: |Inv_{}| = {boundary_same_row}, inv_{},{} = {unswapped}",
                            k + 1, k + 1, k
                        ));
                    }
                }
                Some(first) => {
                    debug_assert_eq!(first.rule, SwapRule::XAx);
                    let after = first.result.inv_rows(k + 1).unwrap();
                    if boundary_same_row != after {
                        return Some(format!(
                            "boundary swap relation fails on T = {filling}: |Inv_{}| = {boundary_same_row}, inv after swap = {after}",
                            k + 1
                        ));
                    }
                }
            }
        }

        for step in steps.iter().skip(1) {
            let i = step.row; // the swapped row; its pair is (row, row - 1)
            let maj_before = filling.maj_rows(i).unwrap();
            let maj_after = step.result.maj_rows(i).unwrap();
            let inv_before = filling.inv_rows(i).unwrap();
            let inv_after = step.result.inv_rows(i).unwrap();
            if maj_before != maj_after || inv_before != inv_after {
                return Some(format!(
                    "interior swap changed a row-pair statistic on T = {filling} at row {i}:\nmaj {maj_before} -> {maj_after}, inv {inv_before} -> {inv_after}\nafter swap: {}",
                    step.result
                ));
            }
        }

        // Closing identity. Body descents in columns <= n pick up leg l
        // when the tail is stacked on top; for k = 1 the sum is empty. The
        // boundary descents are those of the output filling.
        let boundary_descents = if l >= 1 {
            result.des_rows(k + 1).unwrap().len() as u64
        } else {
            0
        };
        let body_transport: u64 = (2..=k)
            .map(|i| {
                filling
                    .des_rows(i)
                    .unwrap()
                    .iter()
                    .filter(|c| c.col <= n)
                    .count() as u64
            })
            .sum();
        let lhs = split.maj() + l as u64 * (boundary_descents + body_transport);
        let rhs = result.maj();
        if lhs != rhs {
            return Some(format!(
                "closing maj identity fails on T = {filling}: split maj {} + {l} * ({boundary_descents} + {body_transport}) = {lhs}, maj(tau(T)) = {rhs}",
                split.maj()
            ));
        }
        if split.inv() != result.inv() {
            return Some(format!(
                "closing inv identity fails on T = {filling}: inv(pi*(T)) = {}, inv(tau(T)) = {}",
                split.inv(),
                result.inv()
            ));
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rows(rows: &[&[u32]]) -> Filling {
        Filling::from_rows_top_down(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// The width-2-tail example: mu' = (3,3), n = 2, l = 5.
    fn tail_example() -> (TailShape, Filling) {
        let ts = TailShape::new(shape(&[3, 3]), 2, 5).unwrap();
        let t = rows(&[
            &[1, 4],
            &[3, 5],
            &[2, 6],
            &[1, 3],
            &[2, 4],
            &[3, 3, 3],
            &[4, 4, 4],
        ]);
        (ts, t)
    }

    #[test]
    fn split_of_tail_example() {
        let (ts, t) = tail_example();
        let split = pi_star(&t, &ts).unwrap();
        assert_eq!(split.body, rows(&[&[3, 3, 3], &[4, 4, 4]]));
        assert_eq!(
            split.tail,
            rows(&[&[1, 4], &[3, 5], &[2, 6], &[1, 3], &[2, 4]])
        );
        assert_eq!(split.maj(), 8);
        assert_eq!(split.inv(), 2);
        assert_eq!(pi_star_inverse(&split, &ts).unwrap(), t);
    }

    #[test]
    fn split_of_width_1_tail() {
        let ts = TailShape::new(shape(&[2, 2]), 1, 3).unwrap();
        let t = rows(&[&[2], &[1], &[3], &[2, 3], &[1, 2]]);
        let split = pi_star(&t, &ts).unwrap();
        assert_eq!(split.body, rows(&[&[2, 3], &[1, 2]]));
        assert_eq!(split.tail, rows(&[&[2], &[1], &[3]]));
        assert_eq!(split.body.maj(), 2);
        assert_eq!(split.tail.maj(), 1);
        assert_eq!(split.maj(), 3);
        assert_eq!(split.inv(), 0);
        assert_eq!(t.maj(), 9);
        assert_eq!(t.inv(), 0);
        assert_eq!(t.maj() % 3, split.maj() % 3);
    }

    #[test]
    fn split_with_empty_tail() {
        let ts = TailShape::new(shape(&[2, 1]), 1, 0).unwrap();
        let t = rows(&[&[5], &[1, 2]]);
        let split = pi_star(&t, &ts).unwrap();
        assert_eq!(split.body, t);
        assert_eq!(split.tail.shape(), &Partition::empty());
    }

    #[test]
    fn split_rejects_wrong_shape() {
        let (ts, _) = tail_example();
        let wrong = rows(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            pi_star(&wrong, &ts),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn split_evaluation_is_additive() {
        let (ts, t) = tail_example();
        let split = pi_star(&t, &ts).unwrap();
        assert_eq!(split.evaluation(6).unwrap(), t.evaluation(6).unwrap());
        assert_eq!(t.evaluation(6).unwrap().entries(), &[2, 2, 5, 5, 1, 1]);
    }

    #[test]
    fn boundary_condition_examples() {
        assert!(cond_xax(2, 4, 3));
        assert!(!cond_xax(5, 5, 5));
        assert!(cond_xax(4, 2, 3));
    }

    #[test]
    fn interior_condition_examples() {
        assert!(cond_xxxx(1, 3, 2, 4)); // 1 <= 2 < 3 <= 4
        assert!(!cond_xxxx(1, 1, 1, 1));
    }

    #[test]
    fn condition_symmetries() {
        for a in 1..=8u32 {
            for b in 1..=8 {
                for big_a in 1..=8 {
                    assert_eq!(cond_xax(a, b, big_a), cond_xax(b, a, big_a));
                    for big_b in 1..=8 {
                        assert_eq!(cond_xxxx(a, b, big_a, big_b), cond_xxxx(b, a, big_b, big_a));
                    }
                }
            }
        }
    }

    #[test]
    fn interior_chains_are_mutually_exclusive() {
        for a in 1..=6u32 {
            for b in 1..=6 {
                for big_a in 1..=6 {
                    for big_b in 1..=6 {
                        let (x, y) = (big_a, big_b);
                        let chains = [
                            a <= x && x < b && b <= y,
                            x < b && b <= y && y < a,
                            b <= x && x < a && a <= y,
                            x < a && a <= y && y < b,
                            a <= y && y < b && b <= x,
                            y < b && b <= x && x < a,
                            b <= y && y < a && a <= x,
                            y < a && a <= x && x < b,
                        ];
                        assert!(
                            chains.iter().filter(|&&c| c).count() <= 1,
                            "chains overlap at ({a},{b},{x},{y})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tau_trace_reproduces_the_worked_example() {
        let (ts, t) = tail_example();
        let (result, steps) = tau_trace(&t, &ts).unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[0].rule, SwapRule::XAx);
        assert_eq!(steps[0].row, 3);
        assert_eq!(
            steps[0].result,
            rows(&[
                &[1, 4],
                &[3, 5],
                &[2, 6],
                &[1, 3],
                &[4, 2],
                &[3, 3, 3],
                &[4, 4, 4]
            ])
        );
        assert_eq!(steps[1].rule, SwapRule::XXxX);
        assert_eq!(
            steps[1].result,
            rows(&[
                &[1, 4],
                &[3, 5],
                &[2, 6],
                &[3, 1],
                &[4, 2],
                &[3, 3, 3],
                &[4, 4, 4]
            ])
        );
        assert_eq!(
            steps[2].result,
            rows(&[
                &[1, 4],
                &[3, 5],
                &[6, 2],
                &[3, 1],
                &[4, 2],
                &[3, 3, 3],
                &[4, 4, 4]
            ])
        );
        assert_eq!(result, steps[2].result);
        assert_eq!(result.maj(), 13);
        assert_eq!(result.inv(), 2);
        // 13 = 8 + 5 * 1 and 13 = 8 (mod 5)
        assert_eq!(result.maj() % 5, pi_star(&t, &ts).unwrap().maj() % 5);
    }

    #[test]
    fn tau_is_identity_when_the_boundary_fails() {
        let ts = TailShape::new(shape(&[2]), 2, 1).unwrap();
        let t = rows(&[&[3, 3], &[2, 1]]);
        // xAx(3, 3, 2) is false
        assert_eq!(tau(&t, &ts).unwrap(), t);
    }

    #[test]
    fn tau_is_an_involution_on_the_example() {
        let (ts, t) = tail_example();
        let once = tau(&t, &ts).unwrap();
        assert_eq!(tau(&once, &ts).unwrap(), t);
    }

    #[test]
    fn tau_for_width_1_is_identity() {
        let ts = TailShape::new(shape(&[2, 2]), 1, 3).unwrap();
        let t = rows(&[&[2], &[1], &[3], &[2, 3], &[1, 2]]);
        assert_eq!(tau(&t, &ts).unwrap(), t);
    }

    #[test]
    fn involution_verified_exhaustively_small() {
        let ts = TailShape::new(shape(&[2]), 2, 1).unwrap();
        let report = verify_involution(&ts, 3, 100_000).unwrap();
        assert!(report.verified(), "{report}");
        assert_eq!(report.cases, 81); // 3^4

        let ts2 = TailShape::new(shape(&[2]), 2, 2).unwrap();
        let report2 = verify_involution(&ts2, 4, 100_000).unwrap();
        assert!(report2.verified(), "{report2}");
        assert_eq!(report2.cases, 4096);
    }

    #[test]
    fn involution_trivial_for_unit_alphabet() {
        let ts = TailShape::new(shape(&[2]), 2, 3).unwrap();
        let report = verify_involution(&ts, 1, 100).unwrap();
        assert!(report.verified());
        assert_eq!(report.cases, 1);
    }

    #[test]
    fn theorem_verified_for_width_1() {
        let ts = TailShape::new(shape(&[2, 2]), 1, 3).unwrap();
        let report = verify_theorem(&ts, 4, 100_000).unwrap();
        assert!(report.verified(), "{report}");
        assert_eq!(report.cases, 4u64.pow(7));
    }

    #[test]
    fn theorem_verified_for_width_2_small() {
        let ts = TailShape::new(shape(&[2]), 2, 2).unwrap();
        let report = verify_theorem(&ts, 4, 100_000).unwrap();
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn lemma_suite_passes() {
        let report = verify_lemmas(6);
        assert!(report.verified(), "{report}");
        assert_eq!(report.boundary_tuples, 216);
        assert_eq!(report.interior_tuples, 1296);
        assert_eq!(report.cases(), 1512);
    }

    #[test]
    fn double_swap_preserves_statistics_on_a_chain_case() {
        // (1,3) over (2,4) satisfies the first chain; reverse both rows.
        let t = two_rows(&[1, 3], &[2, 4]);
        let double = two_rows(&[3, 1], &[4, 2]);
        assert_eq!(
            t.des_rows(2).unwrap().len(),
            double.des_rows(2).unwrap().len()
        );
        assert_eq!(t.inv_rows(2).unwrap(), double.inv_rows(2).unwrap());
    }

    #[test]
    fn key_lemma_on_the_worked_example_shape() {
        let ts = TailShape::new(shape(&[2]), 2, 2).unwrap();
        let report = verify_key_lemma(&ts, 4, 100_000).unwrap();
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn key_lemma_with_wide_body() {
        // A two-row body exercises the body transport correction.
        let ts = TailShape::new(shape(&[2, 2]), 2, 1).unwrap();
        let report = verify_key_lemma(&ts, 3, 100_000).unwrap();
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn key_lemma_with_body_wider_than_the_tail() {
        // Body descents in column 3 sit outside the tail's columns and
        // must not be scaled by l in the closing identity.
        let ts = TailShape::new(shape(&[3, 3]), 2, 1).unwrap();
        let report = verify_key_lemma(&ts, 3, 100_000).unwrap();
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn wide_boundary_row_reads_its_first_entry() {
        // The boundary condition reads the entry below the left tail cell;
        // the rest of a width-3 top body row is irrelevant to the swap.
        let ts = TailShape::new(shape(&[3]), 2, 2).unwrap();
        let theorem = verify_theorem(&ts, 3, 100_000).unwrap();
        assert!(theorem.verified(), "{theorem}");
        let involution = verify_involution(&ts, 3, 100_000).unwrap();
        assert!(involution.verified(), "{involution}");
        let key = verify_key_lemma(&ts, 3, 100_000).unwrap();
        assert!(key.verified(), "{key}");

        let swaps = rows(&[&[1, 3], &[2, 4], &[2, 9, 1]]);
        let swapped = tau(&swaps, &ts).unwrap();
        assert_eq!(
            swapped,
            rows(&[&[3, 1], &[4, 2], &[2, 9, 1]]),
            "xAx on (2,4) over 2, then xXxX on (1,3) over (4,2)"
        );
    }

    #[test]
    fn width_1_tail_structural_facts() {
        // Width-1 tails admit no attacking pairs into the row below the
        // boundary, and the unique candidate descent cell has arm 0.
        let ts = TailShape::new(shape(&[2, 2]), 1, 3).unwrap();
        let mu = ts.mu();
        let k = ts.k();
        assert_eq!(mu.att_row_below(k + 1).unwrap(), vec![]);
        assert_eq!(mu.arm(crate::partition::Cell::new(k + 1, 1)).unwrap(), 0);
    }

    #[test]
    fn statistic_transport_through_the_split() {
        // Body pairs: maj_{i,i-1}(T) = maj_{i,i-1}(body) + l * (descents in
        // columns <= n); inv transports exactly. Tail pairs transport with
        // the index shift. Exhaustive on a shape whose body is wider than
        // the tail, so the column filter matters.
        let ts = TailShape::new(shape(&[3, 3]), 2, 2).unwrap();
        let mu = ts.mu();
        let k = ts.k();
        let l = ts.l() as u64;
        let budget = EnumerationBudget::new(2, 100_000).unwrap();
        for t in crate::enumerate::enumerate_fillings(&mu, &budget).unwrap() {
            let split = pi_star(&t, &ts).unwrap();
            for i in 2..=k {
                let filtered = split
                    .body
                    .des_rows(i)
                    .unwrap()
                    .iter()
                    .filter(|c| c.col <= ts.n())
                    .count() as u64;
                assert_eq!(
                    t.maj_rows(i).unwrap(),
                    split.body.maj_rows(i).unwrap() + l * filtered
                );
                assert_eq!(t.inv_rows(i).unwrap(), split.body.inv_rows(i).unwrap());
            }
            for i in 2..=ts.l() {
                assert_eq!(t.maj_rows(k + i).unwrap(), split.tail.maj_rows(i).unwrap());
                assert_eq!(t.inv_rows(k + i).unwrap(), split.tail.inv_rows(i).unwrap());
            }
        }
    }

    #[test]
    fn transport_is_verbatim_on_rectangular_bodies() {
        // For a rectangular body of the tail's width every descent column
        // is <= n, so the unfiltered form holds.
        let ts = TailShape::new(shape(&[2, 2]), 2, 2).unwrap();
        let mu = ts.mu();
        let k = ts.k();
        let l = ts.l() as u64;
        let budget = EnumerationBudget::new(2, 100_000).unwrap();
        for t in crate::enumerate::enumerate_fillings(&mu, &budget).unwrap() {
            let split = pi_star(&t, &ts).unwrap();
            for i in 2..=k {
                assert_eq!(
                    t.maj_rows(i).unwrap(),
                    split.body.maj_rows(i).unwrap()
                        + l * split.body.des_rows(i).unwrap().len() as u64
                );
            }
        }
    }

    #[test]
    fn pi_star_round_trip_exhaustive_small() {
        let ts = TailShape::new(shape(&[2]), 2, 1).unwrap();
        let budget = EnumerationBudget::new(2, 1_000).unwrap();
        for t in crate::enumerate::enumerate_fillings(&ts.mu(), &budget).unwrap() {
            let split = pi_star(&t, &ts).unwrap();
            assert_eq!(pi_star_inverse(&split, &ts).unwrap(), t);
            assert_eq!(split.evaluation(2).unwrap(), t.evaluation(2).unwrap());
        }
    }

    #[test]
    fn tail_shape_validation() {
        assert!(TailShape::new(shape(&[2]), 3, 1).is_err());
        assert!(TailShape::new(shape(&[1]), 2, 1).is_err());
        assert!(TailShape::new(shape(&[2]), 2, 0).is_ok());
    }
}
