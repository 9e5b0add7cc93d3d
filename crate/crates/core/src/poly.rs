//! Exact sparse polynomials in q and t with unbounded integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in q and t over the integers. Terms are keyed by
/// `(q_exponent, t_exponent)`; zero coefficients are never stored, so
/// structural equality is polynomial equality. Term order is ascending in
/// the q-exponent, then in the t-exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial::default()
    }

    pub fn one() -> Self {
        QTPolynomial::term(1, 0, 0)
    }

    /// The single term `coeff * q^qe * t^te` (empty when `coeff` is 0).
    pub fn term(coeff: i64, qe: u32, te: u32) -> Self {
        let mut p = QTPolynomial::zero();
        p.add_term((qe, te), BigInt::from(coeff));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, qe: u32, te: u32) -> BigInt {
        self.terms.get(&(qe, te)).cloned().unwrap_or_default()
    }

    /// Adds `delta` to the coefficient of one term, pruning zeros.
    pub fn add_term(&mut self, key: (u32, u32), delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += delta;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (&key, coeff) in &other.terms {
            out.add_term(key, coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> QTPolynomial {
        QTPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &QTPolynomial) -> QTPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QTPolynomial) -> QTPolynomial {
        let mut out = QTPolynomial::zero();
        for (&(qa, ta), ca) in &self.terms {
            for (&(qb, tb), cb) in &other.terms {
                out.add_term((qa + qb, ta + tb), ca * cb);
            }
        }
        out
    }

    /// Swaps the roles of q and t.
    pub fn swap_qt(&self) -> QTPolynomial {
        QTPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(q, t), c)| ((t, q), c.clone()))
                .collect(),
        }
    }

    /// The value at q = 1, t = 1 (the sum of all coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Writes one rendered term into `f`. `coeff` must be non-zero; its sign is
/// handled by the caller.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    magnitude: &BigInt,
    qe: u32,
    te: u32,
) -> fmt::Result {
    let mut wrote = false;
    if !magnitude.is_one() || (qe == 0 && te == 0) {
        write!(f, "{magnitude}")?;
        wrote = true;
    }
    for (name, e) in [("q", qe), ("t", te)] {
        if e > 0 {
            if wrote {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            wrote = true;
        }
    }
    Ok(())
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = ((u32, u32), &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    let mut any = false;
    for ((qe, te), coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        any = true;
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write_term(f, &coeff.abs(), qe, te)?;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(&k, c)| (k, c)))
    }
}

impl fmt::Debug for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPolynomial[{self}]")
    }
}
