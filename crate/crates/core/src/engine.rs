//! Assembling modified Macdonald polynomials from fillings and checking
//! the root-of-unity factorization.
//!
//! H~_mu(X;q,t) in m variables is the generating function summing
//! q^inv(T) t^maj(T) X^T over all fillings T of mu with entries in {1..m}.
//! At t = zeta_l (handled exactly via reduction mod Phi_l) the expansion
//! of a tailed shape (mu', n^l) must factor as the product of the
//! expansions of mu' and (n^l); the checker compares both sides
//! coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::composition::Composition;
use crate::cyclotomic::{CyclotomicElement, CyclotomicPolynomial};
use crate::enumerate::{chunk_count, for_each_in_chunk, EnumerationBudget, StatsTable};
use crate::error::{Error, Result};
use crate::expansion::MonomialExpansion;
use crate::partition::Partition;
use crate::poly::QTPolynomial;

/// A tailed shape (mu', n^l): the body mu' with l rows of width n stacked
/// on top. Valid when the last part of mu' is at least n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeSpec {
    mu_prime: Partition,
    n: usize,
    l: usize,
}

impl ShapeSpec {
    pub fn new(mu_prime: Partition, n: usize, l: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidTailShape {
                reason: "tail width n must be at least 1".to_string(),
            });
        }
        if mu_prime.is_empty() {
            return Err(Error::InvalidTailShape {
                reason: "body partition must be non-empty".to_string(),
            });
        }
        let last = *mu_prime.parts().last().unwrap();
        if last < n {
            return Err(Error::InvalidTailShape {
                reason: format!("last body part {last} is smaller than tail width {n}"),
            });
        }
        Ok(ShapeSpec { mu_prime, n, l })
    }

    pub fn mu_prime(&self) -> &Partition {
        &self.mu_prime
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// The tail (n^l) as a partition.
    pub fn tail(&self) -> Partition {
        Partition::new(vec![self.n; self.l]).expect("n >= 1")
    }

    /// The full shape (mu', n^l).
    pub fn mu(&self) -> Partition {
        let mut parts = self.mu_prime.parts().to_vec();
        parts.extend(std::iter::repeat_n(self.n, self.l));
        Partition::new(parts).expect("last body part >= n")
    }
}

/// The expansion of H~_shape in `budget.alphabet()` variables: the
/// coefficient of the exponent vector nu sums q^inv t^maj over the fillings
/// with evaluation nu.
pub fn macdonald_polynomial(
    shape: &Partition,
    budget: &EnumerationBudget,
) -> Result<MonomialExpansion<QTPolynomial>> {
    let total = budget.ensure(shape)?;
    let m = budget.alphabet();
    let table = StatsTable::new(shape);
    let partials: Vec<BTreeMap<Composition, QTPolynomial>> = (0..chunk_count(shape, m))
        .into_par_iter()
        .map(|chunk| {
            let mut acc: BTreeMap<Composition, QTPolynomial> = BTreeMap::new();
            for_each_in_chunk(shape, m, chunk, |entries| {
                let (maj, inv) = table.maj_inv(entries);
                let inv = u32::try_from(inv)
                    .expect("inv is non-negative on complete fillings of a partition shape");
                let mut counts = vec![0usize; m];
                for &e in entries {
                    counts[e as usize - 1] += 1;
                }
                acc.entry(Composition::new(counts))
                    .or_default()
                    .add_term((inv, maj as u32), BigInt::from(1));
            });
            acc
        })
        .collect();

    let mut expansion = MonomialExpansion::new(m);
    let mut merged: BTreeMap<Composition, QTPolynomial> = BTreeMap::new();
    for partial in partials {
        for (nu, poly) in partial {
            match merged.remove(&nu) {
                Some(prev) => {
                    merged.insert(nu, prev.add(&poly));
                }
                None => {
                    merged.insert(nu, poly);
                }
            }
        }
    }
    let mut seen = BigInt::from(0);
    for (nu, poly) in merged {
        seen += poly.eval_at_one();
        expansion.insert_pruned(nu, poly, QTPolynomial::is_zero);
    }
    assert_eq!(
        seen,
        BigInt::from(total),
        "every filling must be counted exactly once"
    );
    Ok(expansion)
}

/// Specializes every coefficient of an expansion at t = zeta_l.
pub fn specialize_expansion(
    expansion: &MonomialExpansion<QTPolynomial>,
    l: u32,
) -> Result<MonomialExpansion<CyclotomicElement>> {
    expansion.specialize(l)
}

/// One disagreeing coefficient between the two sides of an identity.
#[derive(Clone, Debug)]
pub struct CoefficientMismatch {
    pub exponents: Composition,
    pub left: String,
    pub right: String,
}

impl fmt::Display for CoefficientMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MISMATCH at nu={}: left={}, right={}",
            self.exponents, self.left, self.right
        )
    }
}

/// Outcome of a factorization check at a root of unity.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub mu: Partition,
    pub mu_prime: Partition,
    pub n: usize,
    pub l: usize,
    pub vars: usize,
    /// Fillings enumerated over all three shapes.
    pub cases: u64,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl FactorizationReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "factorization of H~_{} as H~_{} * H~_{} at l={} in {} variables",
            self.mu,
            self.mu_prime,
            Partition::new(vec![self.n; self.l]).unwrap(),
            self.l,
            self.vars
        )?;
        if self.verified() {
            write!(f, "VERIFIED {} cases", self.cases)
        } else {
            writeln!(f, "FAILED after {} cases:", self.cases)?;
            for m in &self.mismatches {
                writeln!(f, "{m}")?;
            }
            Ok(())
        }
    }
}

/// Checks H~_{(mu',n^l)}(X;q,zeta_l) = H~_{mu'}(X;q,zeta_l) *
/// H~_{(n^l)}(X;q,zeta_l) in `vars` variables, exactly.
pub fn check_factorization(
    spec: &ShapeSpec,
    vars: usize,
    max_states: u64,
) -> Result<FactorizationReport> {
    if spec.l() < 1 {
        return Err(Error::RootOrderTooSmall);
    }
    let l = spec.l() as u32;
    let budget = EnumerationBudget::new(vars, max_states)?;
    let mu = spec.mu();
    let tail = spec.tail();

    let whole = macdonald_polynomial(&mu, &budget)?;
    let body = macdonald_polynomial(spec.mu_prime(), &budget)?;
    let tail_exp = macdonald_polynomial(&tail, &budget)?;

    let modulus = CyclotomicPolynomial::new(l)?;
    let left = specialize_expansion(&whole, l)?;
    let right =
        specialize_expansion(&body, l)?.mul_in(&specialize_expansion(&tail_exp, l)?, &modulus)?;

    let mismatches = left
        .differences(&right)?
        .into_iter()
        .map(|(nu, a, b)| CoefficientMismatch {
            exponents: nu,
            left: render_or_zero(a),
            right: render_or_zero(b),
        })
        .collect();

    let cases = budget.ensure(&mu)? + budget.ensure(spec.mu_prime())? + budget.ensure(&tail)?;
    Ok(FactorizationReport {
        mu,
        mu_prime: spec.mu_prime().clone(),
        n: spec.n(),
        l: spec.l(),
        vars,
        cases,
        mismatches,
    })
}

fn render_or_zero<C: fmt::Display>(c: Option<&C>) -> String {
    match c {
        Some(c) => c.to_string(),
        None => "0".to_string(),
    }
}

/// Outcome of the q/t conjugation cross-check.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub shape: Partition,
    pub conjugate: Partition,
    pub vars: usize,
    pub cases: u64,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl SymmetryReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conjugation symmetry of H~_{} against H~_{} with q and t exchanged, {} variables",
            self.shape, self.conjugate, self.vars
        )?;
        if self.verified() {
            write!(f, "VERIFIED {} cases", self.cases)
        } else {
            writeln!(f, "FAILED after {} cases:", self.cases)?;
            for m in &self.mismatches {
                writeln!(f, "{m}")?;
            }
            Ok(())
        }
    }
}

/// Cross-validation oracle for the statistic conventions: the expansion of
/// a shape in (q, t) must equal the expansion of its conjugate with q and t
/// exchanged.
pub fn check_conjugation_symmetry(
    shape: &Partition,
    vars: usize,
    max_states: u64,
) -> Result<SymmetryReport> {
    let budget = EnumerationBudget::new(vars, max_states)?;
    let conj = shape.conjugate();
    let ours = macdonald_polynomial(shape, &budget)?;
    let theirs = macdonald_polynomial(&conj, &budget)?.swap_qt();
    let mismatches = ours
        .differences(&theirs)?
        .into_iter()
        .map(|(nu, a, b)| CoefficientMismatch {
            exponents: nu,
            left: render_or_zero(a),
            right: render_or_zero(b),
        })
        .collect();
    let cases = budget.ensure(shape)? + budget.ensure(&conj)?;
    Ok(SymmetryReport {
        shape: shape.clone(),
        conjugate: conj,
        vars,
        cases,
        mismatches,
    })
}
