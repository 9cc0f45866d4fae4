//! Exact low-degree L2-Betti data for finitely presented groups, computed on
//! the Cayley 2-complex of a finite permutation realization, together with a
//! coboundary-truncation routine that turns an unbounded 0-cochain on a graph
//! into a bounded one with a certified lp error.
//!
//! The computational pipeline:
//!
//! 1. parse a presentation ([`words`]),
//! 2. enumerate the finite group a permutation assignment generates
//!    ([`realization`]),
//! 3. assemble the two boundary matrices of the quotient Cayley 2-complex
//!    ([`complex`], with Fox derivatives from [`fox`] as a cross-check),
//! 4. take exact ranks over the rationals ([`linalg`]),
//! 5. report normalized Betti numbers and the deficiency-type invariant
//!    `delta2 = beta1 - beta0 + 1` ([`betti`]).
//!
//! All Betti arithmetic is exact: matrix ranks are computed fraction-free
//! over arbitrary-precision integers and the reported numbers are rationals.
//! Floating point appears only where a result is a certified bound rather
//! than an exact value ([`truncation`]).

pub mod betti;
pub mod complex;
pub mod error;
pub mod fox;
pub mod linalg;
pub mod rational;
pub mod realization;
pub mod truncation;
pub mod words;

pub use betti::{
    betti1_exhaustion, betti_invariants, sweep_quotients, BettiReport, QuotientFamilySpec,
    RealizationSpec, SweepMember, SweepOutcome,
};
pub use complex::{BoundaryMode, CayleyComplex};
pub use error::{Error, Result};
pub use fox::{fox_derivative, FreeRingElement};
pub use linalg::{rank_exact, rank_mod_p, SparseRationalMatrix};
pub use rational::{format_rational, format_significant, parse_rational, Rational};
pub use realization::{realize, realize_with_cap, FiniteGroupRealization, DEFAULT_ORDER_CAP};
pub use truncation::{
    approximate_bounded, approximate_bounded_complex, coboundary, exterior_edges, lp_deficit,
    truncate, BoundedApproximation, Cochain0, Cochain1, ComplexApproximation, Graph,
};
pub use words::{free_reduce, parse_word, render_word, FreeWord, Letter, Presentation};
