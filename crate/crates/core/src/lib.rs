//! Noncommutative network calculus: double brackets on path algebras of perfect
//! planar and cylindrical networks, r-matrix formulas, Lax equations and
//! refactorization dynamics, all checked by exact symbolic computation.

pub mod algebra;
pub mod error;
pub mod scalar;

pub use error::{Error, Result};
pub mod io;
pub mod network;
pub mod bracket;
pub mod report;
pub mod rmatrix;
pub mod integrable;
pub mod refactor;
