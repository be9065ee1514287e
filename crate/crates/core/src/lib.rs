//! Exact-arithmetic construction and machine verification of the
//! super-Jordanian deformation of `sl(N|1)` at desk scale (`N = 2..5`,
//! fundamental representation and its graded tensor powers).
//!
//! Everything is computed over exact coefficient rings (`Q[h]`, `Q(q)`);
//! every verified statement is an exact polynomial matrix identity. The
//! crate is organized around the pipeline:
//!
//! * [`scalars`] / [`superlinalg`]: exact rings and graded linear algebra;
//! * [`classical`]: the classical superalgebra and its relation suites;
//! * [`jordanian`]: the nonlinear deformation map, the deformed relation
//!   catalogs and the automorphism check;
//! * [`hopf`]: coproducts, derived antipodes, counits and the Hopf axioms;
//! * [`rmatrix`]: the q-side, the contraction limit, universal and
//!   contracted R-matrices, Yang-Baxter / intertwining / RLL checks.
//!
//! With the default `parallel` feature, independent checks and large matrix
//! products run on rayon; disabling default features gives a fully
//! sequential build with identical results.

pub mod classical;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod jordanian;
pub mod labels;
pub mod relations;
pub mod report;
pub mod rmatrix;
pub mod scalars;
pub mod superlinalg;

pub use error::{Error, Result};
