//! Monomial expansions: symmetric polynomials in m variables stored as a
//! map from exponent vectors to coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::composition::Composition;
use crate::cyclotomic::{specialize_t_with, CyclotomicElement, CyclotomicPolynomial};
use crate::error::{Error, Result};
use crate::poly::QTPolynomial;

/// A finite map from length-m exponent vectors to coefficients. The
/// coefficient type is either [`QTPolynomial`] (generic q, t) or
/// [`CyclotomicElement`] (after specializing t at a root of unity).
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialExpansion<C> {
    nvars: usize,
    coeffs: BTreeMap<Composition, C>,
}

impl<C: Clone + Eq> MonomialExpansion<C> {
    pub fn new(nvars: usize) -> Self {
        MonomialExpansion {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Composition, C> {
        &self.coeffs
    }

    pub fn get(&self, nu: &Composition) -> Option<&C> {
        self.coeffs.get(nu)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Inserts a coefficient, dropping it if `is_zero` says so.
    pub fn insert_pruned(&mut self, nu: Composition, c: C, is_zero: impl Fn(&C) -> bool) {
        debug_assert_eq!(nu.len(), self.nvars);
        if !is_zero(&c) {
            self.coeffs.insert(nu, c);
        }
    }

    /// True iff both expansions store identical coefficient maps.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.require_same_vars(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Exponent vectors where the two expansions disagree, with both
    /// coefficients (`None` = absent, i.e. zero).
    #[allow(clippy::type_complexity)]
    pub fn differences<'a>(
        &'a self,
        other: &'a Self,
    ) -> Result<Vec<(Composition, Option<&'a C>, Option<&'a C>)>> {
        self.require_same_vars(other)?;
        let mut out = Vec::new();
        let keys: std::collections::BTreeSet<&Composition> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        for nu in keys {
            let a = self.coeffs.get(nu);
            let b = other.coeffs.get(nu);
            if a != b {
                out.push((nu.clone(), a, b));
            }
        }
        Ok(out)
    }

    /// Convolution product: the coefficient of `nu` in the result sums
    /// `A[nu'] * B[nu'']` over all splittings `nu = nu' + nu''`.
    pub fn mul_with(
        &self,
        other: &Self,
        mul: impl Fn(&C, &C) -> C,
        add: impl Fn(&C, &C) -> C,
        is_zero: impl Fn(&C) -> bool,
    ) -> Result<Self> {
        self.require_same_vars(other)?;
        let mut acc: BTreeMap<Composition, C> = BTreeMap::new();
        for (na, ca) in &self.coeffs {
            for (nb, cb) in &other.coeffs {
                let key = na.add(nb);
                let prod = mul(ca, cb);
                match acc.remove(&key) {
                    Some(prev) => {
                        acc.insert(key, add(&prev, &prod));
                    }
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !is_zero(c));
        Ok(MonomialExpansion {
            nvars: self.nvars,
            coeffs: acc,
        })
    }

    /// Applies `f` to every coefficient, pruning the results `is_zero`
    /// rejects.
    pub fn map_coeffs<D: Clone + Eq>(
        &self,
        f: impl Fn(&C) -> D,
        is_zero: impl Fn(&D) -> bool,
    ) -> MonomialExpansion<D> {
        let mut out = MonomialExpansion::new(self.nvars);
        for (nu, c) in &self.coeffs {
            out.insert_pruned(nu.clone(), f(c), &is_zero);
        }
        out
    }

    /// Checks that coefficients are constant on permutation orbits of the
    /// exponent vectors and returns one representative per sorted vector
    /// (a partition, trailing zeros stripped). A violation reports the two
    /// offending compositions and both coefficients.
    pub fn symmetry_canonicalize(&self) -> Result<BTreeMap<Vec<usize>, C>>
    where
        C: fmt::Display,
    {
        let mut reps: BTreeMap<Vec<usize>, (Composition, C)> = BTreeMap::new();
        for (nu, c) in &self.coeffs {
            let key = nu.sorted_parts();
            match reps.get(&key) {
                Some((first_nu, first_c)) => {
                    if first_c != c {
                        return Err(Error::NotSymmetric {
                            first: first_nu.to_string(),
                            second: nu.to_string(),
                            first_coeff: first_c.to_string(),
                            second_coeff: c.to_string(),
                        });
                    }
                }
                None => {
                    reps.insert(key, (nu.clone(), c.clone()));
                }
            }
        }
        // Orbits must also be complete: every rearrangement of a stored
        // vector must itself be stored (a missing one means coefficient 0).
        for (key, (nu, c)) in &reps {
            let count = self
                .coeffs
                .keys()
                .filter(|other| &other.sorted_parts() == key)
                .count();
            if count != orbit_size(key, self.nvars) {
                return Err(Error::NotSymmetric {
                    first: nu.to_string(),
                    second: format!("a rearrangement of {nu}"),
                    first_coeff: c.to_string(),
                    second_coeff: "0".to_string(),
                });
            }
        }
        Ok(reps.into_iter().map(|(k, (_, c))| (k, c)).collect())
    }

    fn require_same_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }
}

/// Number of distinct rearrangements of the multiset `parts` padded with
/// zeros to length `nvars`.
fn orbit_size(parts: &[usize], nvars: usize) -> usize {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_default() += 1;
    }
    *mult.entry(0).or_default() += nvars - parts.len();
    let mut size = 1usize;
    let mut remaining = nvars;
    for &m in mult.values() {
        size *= binomial(remaining, m);
        remaining -= m;
    }
    size
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

impl MonomialExpansion<QTPolynomial> {
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(
            other,
            QTPolynomial::mul,
            QTPolynomial::add,
            QTPolynomial::is_zero,
        )
    }

    /// Specializes every coefficient at t = zeta_l, pruning coefficients
    /// that vanish at the root.
    pub fn specialize(&self, l: u32) -> Result<MonomialExpansion<CyclotomicElement>> {
        let modulus = CyclotomicPolynomial::new(l)?;
        Ok(self.map_coeffs(
            |c| specialize_t_with(c, &modulus),
            CyclotomicElement::is_zero,
        ))
    }

    /// Swaps q and t in every coefficient.
    pub fn swap_qt(&self) -> Self {
        self.map_coeffs(QTPolynomial::swap_qt, QTPolynomial::is_zero)
    }
}

impl MonomialExpansion<CyclotomicElement> {
    pub fn mul_in(&self, other: &Self, modulus: &CyclotomicPolynomial) -> Result<Self> {
        self.mul_with(
            other,
            |a, b| a.mul(b, modulus).expect("orders agree within an expansion"),
            |a, b| a.add(b).expect("orders agree within an expansion"),
            CyclotomicElement::is_zero,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(entries: &[usize]) -> Composition {
        Composition::new(entries.to_vec())
    }

    /// x1 + x2 as an expansion in two variables.
    fn e1() -> MonomialExpansion<QTPolynomial> {
        let mut a = MonomialExpansion::new(2);
        a.insert_pruned(comp(&[1, 0]), QTPolynomial::one(), QTPolynomial::is_zero);
        a.insert_pruned(comp(&[0, 1]), QTPolynomial::one(), QTPolynomial::is_zero);
        a
    }

    #[test]
    fn square_of_power_sum() {
        let p = e1().mul(&e1()).unwrap();
        assert_eq!(p.get(&comp(&[2, 0])).unwrap(), &QTPolynomial::one());
        assert_eq!(p.get(&comp(&[1, 1])).unwrap(), &QTPolynomial::term(2, 0, 0));
        assert_eq!(p.get(&comp(&[0, 2])).unwrap(), &QTPolynomial::one());
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn product_with_empty_is_empty() {
        let empty: MonomialExpansion<QTPolynomial> = MonomialExpansion::new(2);
        assert!(e1().mul(&empty).unwrap().is_empty());
    }

    #[test]
    fn equality_detects_extra_terms() {
        let a = e1();
        let mut b = e1();
        assert!(a.equals(&b).unwrap());
        b.insert_pruned(comp(&[2, 0]), QTPolynomial::one(), QTPolynomial::is_zero);
        assert!(!a.equals(&b).unwrap());
        let diffs = a.differences(&b).unwrap();
        assert_eq!(diffs.len(), 1);
        assert_eq!(diffs[0].0, comp(&[2, 0]));
        assert!(diffs[0].1.is_none());
    }

    #[test]
    fn mismatched_variable_counts_error() {
        let a = e1();
        let b: MonomialExpansion<QTPolynomial> = MonomialExpansion::new(3);
        assert!(matches!(
            a.mul(&b),
            Err(Error::VariableCountMismatch { .. })
        ));
    }

    #[test]
    fn canonicalize_collapses_orbits() {
        let p = e1().mul(&e1()).unwrap();
        let canon = p.symmetry_canonicalize().unwrap();
        assert_eq!(canon.len(), 2);
        assert_eq!(canon.get(&vec![2]).unwrap(), &QTPolynomial::one());
        assert_eq!(
            canon.get(&vec![1, 1]).unwrap(),
            &QTPolynomial::term(2, 0, 0)
        );
    }

    #[test]
    fn canonicalize_reports_asymmetry() {
        let mut a = MonomialExpansion::new(2);
        a.insert_pruned(comp(&[1, 0]), QTPolynomial::one(), QTPolynomial::is_zero);
        a.insert_pruned(
            comp(&[0, 1]),
            QTPolynomial::term(2, 0, 0),
            QTPolynomial::is_zero,
        );
        assert!(matches!(
            a.symmetry_canonicalize(),
            Err(Error::NotSymmetric { .. })
        ));

        let mut b = MonomialExpansion::new(2);
        b.insert_pruned(comp(&[1, 0]), QTPolynomial::one(), QTPolynomial::is_zero);
        assert!(matches!(
            b.symmetry_canonicalize(),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn degree_additivity() {
        let p = e1().mul(&e1()).unwrap();
        for nu in p.coeffs().keys() {
            assert_eq!(nu.size(), 2);
        }
    }
}
