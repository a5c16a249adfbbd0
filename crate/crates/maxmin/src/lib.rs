//! Max-min (fuzzy) linear algebra over a bounded chain.
//!
//! Scalars live on a finite chain `0 = O < ... < I = top`; addition is
//! `max`, multiplication is `min`. This crate works with square matrices
//! and vectors over that semiring and answers structural questions that
//! come up when matrices model fuzzy relations or discrete-event systems:
//!
//! * [`spectral`] — fixed points of `x -> A ⊗ x` (eigenvectors), the
//!   greatest eigenvector, and orbit transients/periods;
//! * [`digraph`] — threshold digraphs, level permutations and their cycle
//!   structure, and the canonical constant eigenvector level `γ`;
//! * [`conformism`] — an arithmetic test deciding whether every
//!   eigenvector inside an interval box is the *only* preimage of itself
//!   in the box, with explicit two-preimage witnesses when it is not;
//! * [`solver`] — max-min linear systems `A ⊗ x = b` under box
//!   constraints: principal solution, solvability, uniqueness, and a
//!   standard system reduction;
//! * [`robustness`] — weak robustness (every orbit that stabilizes does so
//!   at an eigenvector) globally and relative to a box, plus how
//!   simplicity propagates upward along constant scalings;
//! * [`oracle`] — exhaustive finite-grid enumeration used to cross-check
//!   every analytic verdict on small instances;
//! * [`sampling`] — seeded random instance generators;
//! * [`instance`] — a small TOML file format for instances, used by the
//!   `maxmin` binary and the runnable examples.
//!
//! The `examples/` directory is the tour: each example exercises one
//! capability end to end on desk-sized data.

pub mod cli;
pub mod conformism;
pub mod digraph;
pub mod error;
pub mod instance;
pub mod matrix;
pub mod oracle;
pub mod robustness;
pub mod sampling;
pub mod scalar;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};
pub use matrix::{IntervalVector, Matrix, Vector};
pub use scalar::Scalar;
