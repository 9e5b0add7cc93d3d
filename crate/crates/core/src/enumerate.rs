//! Exhaustive enumeration over fillings.
//!
//! Fillings of a shape with entries in {1..m} are walked in odometer order
//! over the reading-order cells: the first reading-order cell is the most
//! significant digit. The odometer prefix (the first two cells) also
//! partitions the space into chunks for deterministic parallel sweeps.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::partition::Partition;

/// Default cap on the number of enumerated states.
pub const DEFAULT_MAX_STATES: u64 = 20_000_000;

/// Alphabet size plus a refusal threshold on m^|shape|.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    alphabet: usize,
    max_states: u64,
}

impl EnumerationBudget {
    pub fn new(alphabet: usize, max_states: u64) -> Result<Self> {
        if alphabet < 1 {
            return Err(Error::AlphabetTooSmall);
        }
        Ok(EnumerationBudget {
            alphabet,
            max_states,
        })
    }

    /// Budget with the default state cap.
    pub fn with_default_cap(alphabet: usize) -> Result<Self> {
        EnumerationBudget::new(alphabet, DEFAULT_MAX_STATES)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn max_states(&self) -> u64 {
        self.max_states
    }

    /// m^|shape| (may exceed u64).
    pub fn states(&self, shape: &Partition) -> u128 {
        (self.alphabet as u128)
            .checked_pow(shape.size() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Errors with the offending count when the shape is over budget,
    /// otherwise returns the state count.
    pub fn ensure(&self, shape: &Partition) -> Result<u64> {
        let states = self.states(shape);
        if states > self.max_states as u128 {
            return Err(Error::BudgetExceeded {
                shape: shape.to_string(),
                alphabet: self.alphabet,
                states,
                max_states: self.max_states,
            });
        }
        Ok(states as u64)
    }
}

/// Iterator over every filling of a shape with entries in {1..m}, in
/// odometer order.
#[derive(Debug)]
pub struct FillingIter {
    shape: Partition,
    alphabet: u32,
    state: Option<Vec<u32>>,
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        let entries = self.state.as_ref()?.clone();
        let filling = Filling::new(self.shape.clone(), entries).expect("odometer state is valid");
        let state = self.state.as_mut().unwrap();
        advance(state, self.alphabet, 0);
        // the odometer wraps back to all-1s after the final state
        if state.iter().all(|&e| e == 1) {
            self.state = None;
        }
        Some(filling)
    }
}

/// Ticks the odometer on `entries[from..]`: the last position is the
/// fastest digit. Wraps to all-1s after the final state.
fn advance(entries: &mut [u32], alphabet: u32, from: usize) {
    let mut p = entries.len();
    while p > from {
        if entries[p - 1] < alphabet {
            entries[p - 1] += 1;
            return;
        }
        entries[p - 1] = 1;
        p -= 1;
    }
}

/// Yields every filling of `shape` with entries in {1..budget.alphabet}.
pub fn enumerate_fillings(shape: &Partition, budget: &EnumerationBudget) -> Result<FillingIter> {
    budget.ensure(shape)?;
    Ok(FillingIter {
        shape: shape.clone(),
        alphabet: budget.alphabet() as u32,
        state: Some(vec![1; shape.size()]),
    })
}

/// Iterator over the fillings of a fixed evaluation: the distinct
/// rearrangements of the evaluation's multiset of labels over the
/// reading-order cells, in ascending lexicographic order.
#[derive(Debug)]
pub struct EvaluationFillings {
    shape: Partition,
    state: Option<Vec<u32>>,
}

impl Iterator for EvaluationFillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        let entries = self.state.as_ref()?.clone();
        let filling = Filling::new(self.shape.clone(), entries).expect("permutation is valid");
        if !next_multiset_permutation(self.state.as_mut().unwrap()) {
            self.state = None;
        }
        Some(filling)
    }
}

/// Standard next-permutation step; returns false after the last one.
fn next_multiset_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Yields exactly the fillings of `shape` whose evaluation is `nu`
/// (a multinomial-many stream, not a filtered full enumeration).
pub fn enumerate_fillings_with_evaluation(
    shape: &Partition,
    nu: &Composition,
) -> Result<EvaluationFillings> {
    if nu.size() != shape.size() {
        return Err(Error::EvaluationSizeMismatch {
            shape: shape.to_string(),
            evaluation_size: nu.size(),
            cells: shape.size(),
        });
    }
    let mut start = Vec::with_capacity(shape.size());
    for (label, &count) in nu.entries().iter().enumerate() {
        start.extend(std::iter::repeat_n(label as u32 + 1, count));
    }
    Ok(EvaluationFillings {
        shape: shape.clone(),
        state: Some(start),
    })
}

/// Per-shape tables for computing (maj, inv) of an entry slice in a single
/// pass: descent geometry and the attacking pairs as reading-order indices.
pub(crate) struct StatsTable {
    ncells: usize,
    /// (cell, cell directly below, leg+1, arm) for every cell with a row
    /// below it.
    descent_slots: Vec<(usize, usize, u64, i64)>,
    /// attacking pairs (earlier, later) in reading-order indices
    pairs: Vec<(usize, usize)>,
}

impl StatsTable {
    pub(crate) fn new(shape: &Partition) -> Self {
        let len = shape.len();
        let index_of = |row: usize, col: usize| -> usize {
            let above: usize = (row + 1..=len).map(|r| shape.part(r)).sum();
            above + col - 1
        };
        let mut descent_slots = Vec::new();
        let mut pairs = Vec::new();
        for row in (1..=len).rev() {
            for pair in shape.att_same_row(row).expect("row in range") {
                pairs.push((
                    index_of(pair.0.row, pair.0.col),
                    index_of(pair.1.row, pair.1.col),
                ));
            }
            if row >= 2 {
                for pair in shape.att_row_below(row).expect("row in range") {
                    pairs.push((
                        index_of(pair.0.row, pair.0.col),
                        index_of(pair.1.row, pair.1.col),
                    ));
                }
                for col in 1..=shape.part(row) {
                    let cell = crate::partition::Cell::new(row, col);
                    descent_slots.push((
                        index_of(row, col),
                        index_of(row - 1, col),
                        shape.leg(cell).expect("cell in shape") as u64 + 1,
                        shape.arm(cell).expect("cell in shape") as i64,
                    ));
                }
            }
        }
        StatsTable {
            ncells: shape.size(),
            descent_slots,
            pairs,
        }
    }

    /// (maj, inv) of `entries` (reading order), in one pass.
    pub(crate) fn maj_inv(&self, entries: &[u32]) -> (u64, i64) {
        debug_assert_eq!(entries.len(), self.ncells);
        let mut inversions = 0i64;
        for &(earlier, later) in &self.pairs {
            if entries[earlier] > entries[later] {
                inversions += 1;
            }
        }
        let mut maj = 0u64;
        let mut arms = 0i64;
        for &(cell, below, leg_plus_one, arm) in &self.descent_slots {
            if entries[cell] > entries[below] {
                maj += leg_plus_one;
                arms += arm;
            }
        }
        (maj, inversions - arms)
    }
}

/// Number of odometer chunks: alphabet^min(2, cells).
pub(crate) fn chunk_count(shape: &Partition, alphabet: usize) -> u64 {
    (alphabet as u64).pow(shape.size().min(2) as u32)
}

/// Visits every filling of the chunk (a fixed prefix on the first one or
/// two reading-order cells) in odometer order. The visitor receives the
/// reading-order entry slice.
pub(crate) fn for_each_in_chunk(
    shape: &Partition,
    alphabet: usize,
    chunk: u64,
    mut visit: impl FnMut(&[u32]),
) {
    let n = shape.size();
    let m = alphabet as u32;
    let prefix = n.min(2);
    let mut entries = vec![1u32; n];
    let mut c = chunk;
    for p in (0..prefix).rev() {
        entries[p] = (c % m as u64) as u32 + 1;
        c /= m as u64;
    }
    debug_assert_eq!(c, 0);
    loop {
        visit(&entries);
        if n == prefix {
            return;
        }
        advance(&mut entries, m, prefix);
        if entries[prefix..].iter().all(|&e| e == 1) {
            return;
        }
    }
}
