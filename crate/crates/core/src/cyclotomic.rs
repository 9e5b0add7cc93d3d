//! Cyclotomic polynomials and exact arithmetic at roots of unity.
//!
//! Specializing t at a primitive l-th root of unity is carried out as
//! arithmetic in `Z[q]` tensor `Z[t]/Phi_l(t)`: a `QTPolynomial` reduces to a
//! [`CyclotomicElement`] whose t-degree is below phi(l). Equality of two
//! polynomials at the root is exactly equality of their reduced forms, so
//! no numerical tolerance ever appears.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{write_terms, QTPolynomial};

/// The l-th cyclotomic polynomial Phi_l(t), monic with integer
/// coefficients, stored in ascending degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicPolynomial {
    l: u32,
    coeffs: Vec<BigInt>,
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divs.sort_unstable();
    divs
}

/// Exact division of dense integer polynomials; panics if the division is
/// not exact (it always is for products of cyclotomic factors).
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(rem.len() > dd);
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        // den is monic throughout this module
        quot[i] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

impl CyclotomicPolynomial {
    /// Computes Phi_l by dividing t^l - 1 by the product of Phi_d over the
    /// proper divisors d of l.
    pub fn new(l: u32) -> Result<Self> {
        if l == 0 {
            return Err(Error::RootOrderTooSmall);
        }
        let mut num = vec![BigInt::zero(); l as usize + 1];
        num[0] = BigInt::from(-1);
        num[l as usize] = BigInt::from(1);
        let mut coeffs = num;
        for d in divisors(l) {
            if d < l {
                coeffs = exact_div(&coeffs, &CyclotomicPolynomial::new(d)?.coeffs);
            }
        }
        Ok(CyclotomicPolynomial { l, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    /// The degree phi(l) (Euler totient).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients in ascending degree, including the leading 1.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Reduces a dense polynomial in t modulo Phi_l, in place, returning
    /// the remainder truncated to degree < phi(l).
    fn reduce_dense(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.len() - 1;
            let c = std::mem::take(&mut poly[top]);
            if !c.is_zero() {
                for (j, m) in self.coeffs.iter().enumerate().take(d) {
                    poly[top - d + j] -= &c * m;
                }
            }
            poly.pop();
        }
        poly.resize(d, BigInt::zero());
        poly
    }
}

impl fmt::Display for CyclotomicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| ((0u32, e as u32), c)),
        )
    }
}

/// A polynomial in q with coefficients in `Z[t]/Phi_l(t)`: the exact value of
/// a `QTPolynomial` at t = zeta_l. The map `rep` sends each q-exponent to
/// the coefficient vector of t^0..t^{phi(l)-1}; all-zero vectors are pruned,
/// so structural equality is equality at the root.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    l: u32,
    phi: usize,
    rep: BTreeMap<u32, Vec<BigInt>>,
}

impl CyclotomicElement {
    pub fn zero(modulus: &CyclotomicPolynomial) -> Self {
        CyclotomicElement {
            l: modulus.order(),
            phi: modulus.degree(),
            rep: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn rep(&self) -> &BTreeMap<u32, Vec<BigInt>> {
        &self.rep
    }

    fn insert(&mut self, qe: u32, vec: Vec<BigInt>) {
        if vec.iter().any(|c| !c.is_zero()) {
            self.rep.insert(qe, vec);
        }
    }

    pub fn add(&self, other: &CyclotomicElement) -> Result<CyclotomicElement> {
        self.require_same_order(other)?;
        let mut out = self.clone();
        for (&qe, vec) in &other.rep {
            let mut sum = out
                .rep
                .remove(&qe)
                .unwrap_or_else(|| vec![BigInt::zero(); out.phi]);
            for (s, v) in sum.iter_mut().zip(vec) {
                *s += v;
            }
            out.insert(qe, sum);
        }
        Ok(out)
    }

    /// Product in `Z[q]` tensor `Z[t]/Phi_l`; `modulus` must be Phi_l for the
    /// common order l.
    pub fn mul(
        &self,
        other: &CyclotomicElement,
        modulus: &CyclotomicPolynomial,
    ) -> Result<CyclotomicElement> {
        self.require_same_order(other)?;
        assert_eq!(modulus.order(), self.l, "modulus order mismatch");
        let phi = self.phi;
        let mut out = CyclotomicElement::zero(modulus);
        for (&qa, va) in &self.rep {
            for (&qb, vb) in &other.rep {
                let mut prod = vec![BigInt::zero(); 2 * phi.max(1)];
                for (i, a) in va.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in vb.iter().enumerate() {
                        prod[i + j] += a * b;
                    }
                }
                let reduced = modulus.reduce_dense(prod);
                let qe = qa + qb;
                let mut sum = out
                    .rep
                    .remove(&qe)
                    .unwrap_or_else(|| vec![BigInt::zero(); phi]);
                for (s, v) in sum.iter_mut().zip(&reduced) {
                    *s += v;
                }
                out.insert(qe, sum);
            }
        }
        Ok(out)
    }

    fn require_same_order(&self, other: &CyclotomicElement) -> Result<()> {
        if self.l != other.l {
            return Err(Error::RootOrderMismatch {
                left: self.l,
                right: other.l,
            });
        }
        Ok(())
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.rep.iter().flat_map(|(&qe, vec)| {
                vec.iter()
                    .enumerate()
                    .map(move |(te, c)| ((qe, te as u32), c))
            }),
        )?;
        write!(f, " (mod Phi_{})", self.l)
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicElement[{self}]")
    }
}

/// Reduces every t-power of `p` modulo Phi_l, leaving q untouched.
pub fn specialize_t(p: &QTPolynomial, l: u32) -> Result<CyclotomicElement> {
    let modulus = CyclotomicPolynomial::new(l)?;
    Ok(specialize_t_with(p, &modulus))
}

/// As [`specialize_t`] with a precomputed modulus.
pub fn specialize_t_with(p: &QTPolynomial, modulus: &CyclotomicPolynomial) -> CyclotomicElement {
    let phi = modulus.degree();
    let mut grouped: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for (&(qe, te), coeff) in p.terms() {
        let dense = grouped
            .entry(qe)
            .or_insert_with(|| vec![BigInt::zero(); te as usize + 1]);
        if dense.len() <= te as usize {
            dense.resize(te as usize + 1, BigInt::zero());
        }
        dense[te as usize] += coeff;
    }
    let mut out = CyclotomicElement::zero(modulus);
    for (qe, dense) in grouped {
        let mut reduced = modulus.reduce_dense(dense);
        reduced.resize(phi, BigInt::zero());
        out.insert(qe, reduced);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(
            CyclotomicPolynomial::new(1).unwrap().coeffs(),
            coeffs(&[-1, 1]).as_slice()
        );
        assert_eq!(
            CyclotomicPolynomial::new(2).unwrap().coeffs(),
            coeffs(&[1, 1]).as_slice()
        );
        assert_eq!(
            CyclotomicPolynomial::new(3).unwrap().coeffs(),
            coeffs(&[1, 1, 1]).as_slice()
        );
        assert_eq!(
            CyclotomicPolynomial::new(6).unwrap().coeffs(),
            coeffs(&[1, -1, 1]).as_slice()
        );
        assert_eq!(
            CyclotomicPolynomial::new(12).unwrap().coeffs(),
            coeffs(&[1, 0, -1, 0, 1]).as_slice()
        );
        assert!(CyclotomicPolynomial::new(0).is_err());
    }

    #[test]
    fn divisor_product_recovers_t_l_minus_1() {
        for l in 1..=30u32 {
            let mut product = QTPolynomial::one();
            for d in divisors(l) {
                let phi = CyclotomicPolynomial::new(d).unwrap();
                let mut as_poly = QTPolynomial::zero();
                for (e, c) in phi.coeffs().iter().enumerate() {
                    as_poly.add_term((0, e as u32), c.clone());
                }
                product = product.mul(&as_poly);
            }
            let expected = QTPolynomial::term(1, 0, l).sub(&QTPolynomial::one());
            assert_eq!(product, expected, "divisor product failed at l = {l}");
        }
    }

    #[test]
    fn specializing_phi_itself_gives_zero() {
        let p = QTPolynomial::one()
            .add(&QTPolynomial::term(1, 0, 1))
            .add(&QTPolynomial::term(1, 0, 2));
        assert!(specialize_t(&p, 3).unwrap().is_zero());
    }

    #[test]
    fn square_of_minus_one() {
        let e = specialize_t(&QTPolynomial::term(1, 0, 2), 2).unwrap();
        assert_eq!(e, specialize_t(&QTPolynomial::one(), 2).unwrap());
        assert_eq!(e.to_string(), "1 (mod Phi_2)");
    }

    #[test]
    fn cube_root_reduction() {
        // 1 + q*t^3 + t at a primitive cube root: t^3 = 1.
        let p = QTPolynomial::one()
            .add(&QTPolynomial::term(1, 1, 3))
            .add(&QTPolynomial::term(1, 0, 1));
        let e = specialize_t(&p, 3).unwrap();
        let expected = QTPolynomial::one()
            .add(&QTPolynomial::term(1, 1, 0))
            .add(&QTPolynomial::term(1, 0, 1));
        assert_eq!(e, specialize_t(&expected, 3).unwrap());
        assert_eq!(e.to_string(), "1 + t + q (mod Phi_3)");
    }

    #[test]
    fn specialize_at_1_substitutes_t_equals_1() {
        let p = QTPolynomial::term(3, 2, 5)
            .add(&QTPolynomial::term(-1, 2, 1))
            .add(&QTPolynomial::term(7, 0, 2));
        let e = specialize_t(&p, 1).unwrap();
        // phi(1) = 1, so each q-power collapses to the coefficient sum.
        assert_eq!(e.rep().get(&2).unwrap(), &coeffs(&[2]));
        assert_eq!(e.rep().get(&0).unwrap(), &coeffs(&[7]));
    }

    #[test]
    fn morphism_on_a_fixed_pair() {
        let p = QTPolynomial::term(2, 1, 4).add(&QTPolynomial::term(-3, 0, 2));
        let r = QTPolynomial::term(1, 2, 3).add(&QTPolynomial::one());
        for l in [2u32, 3, 4, 6, 12] {
            let modulus = CyclotomicPolynomial::new(l).unwrap();
            let sp = specialize_t_with(&p, &modulus);
            let sr = specialize_t_with(&r, &modulus);
            assert_eq!(
                specialize_t_with(&p.add(&r), &modulus),
                sp.add(&sr).unwrap()
            );
            assert_eq!(
                specialize_t_with(&p.mul(&r), &modulus),
                sp.mul(&sr, &modulus).unwrap()
            );
        }
    }

    #[test]
    fn mismatched_orders_error() {
        let a = specialize_t(&QTPolynomial::one(), 2).unwrap();
        let b = specialize_t(&QTPolynomial::one(), 3).unwrap();
        assert!(matches!(a.add(&b), Err(Error::RootOrderMismatch { .. })));
    }
}
