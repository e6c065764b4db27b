//! Brute-force reference implementations used only in tests.
//!
//! Everything in this crate recomputes quantities from first principles
//! (dense state vectors, explicit operator sums, exact diagonalization,
//! numerical norm maximization) so that the closed forms and samplers in
//! `star-core` can be checked against an independent code path.

pub mod diamond;
pub mod fermion;
pub mod statevec;
pub mod stats;
pub mod transversal;

pub use statevec::StateVec;
