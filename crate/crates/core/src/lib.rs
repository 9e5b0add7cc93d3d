//! Exact combinatorics engine for modified Macdonald polynomials.
//!
//! The crate computes H~_mu(X;q,t) as the generating function of the inv
//! and maj statistics over fillings of a Young diagram, specializes t at
//! primitive roots of unity through cyclotomic reduction, and verifies by
//! exhaustive enumeration both the factorization
//! H~_{(mu',n^l)}(X;q,zeta_l) = H~_{mu'}(X;q,zeta_l) * H~_{(n^l)}(X;q,zeta_l)
//! for tail widths n = 1, 2 and the split/swap bijections behind it.
//!
//! Everything is exact: coefficients are unbounded integers, roots of
//! unity live in `Z[t]/Phi_l(t)`, and every verdict is a coefficient-by-
//! coefficient or filling-by-filling comparison.

pub mod bijection;
pub mod composition;
pub mod cyclotomic;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod expansion;
pub mod filling;
pub mod partition;
pub mod poly;

pub use bijection::{
    cond_xax, cond_xxxx, pi_star, pi_star_inverse, tau, tau_trace, verify_involution,
    verify_key_lemma, verify_lemmas, verify_theorem, Counterexample, LemmaReport, SplitFilling,
    SwapRule, TailShape, TauStep, VerificationReport,
};
pub use composition::Composition;
pub use cyclotomic::{specialize_t, CyclotomicElement, CyclotomicPolynomial};
pub use engine::{
    check_conjugation_symmetry, check_factorization, macdonald_polynomial, specialize_expansion,
    CoefficientMismatch, FactorizationReport, ShapeSpec, SymmetryReport,
};
pub use enumerate::{
    enumerate_fillings, enumerate_fillings_with_evaluation, EnumerationBudget, DEFAULT_MAX_STATES,
};
pub use error::{Error, Result};
pub use expansion::MonomialExpansion;
pub use filling::Filling;
pub use partition::{Cell, CellPair, Partition};
pub use poly::QTPolynomial;
