//! Exact determinants of multiplication maps in the monomial complete
//! intersection `R = K[x,y] / <x^(d+1), y^(q+1)>` over the rationals.
//!
//! * [`ring`] builds bases, representation matrices and brute-force
//!   determinants `D_{d,q}(a; b)`;
//! * [`formulas`] evaluates the Schur-polynomial closed forms for the same
//!   determinants;
//! * [`symfunc`], [`partitions`], [`linalg`] and [`mpoly`] provide the exact
//!   machinery, generic over the [`ExactRing`] contract so every identity can
//!   be checked numerically or as a polynomial identity;
//! * [`verify`] runs seeded verification sweeps and [`cli`] exposes it all on
//!   the command line.

pub mod cli;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod json;
pub mod linalg;
pub mod mpoly;
pub mod partitions;
pub mod ring;
pub mod sampling;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactRing, Rational};
pub use formulas::{det_corollary, det_schur_expansion, discrepancy_report, SplitForms};
pub use linalg::ExactMatrix;
pub use mpoly::MultiPoly;
pub use partitions::Partition;
pub use ring::{det_direct, FormList, LinearForm, RingParams};
