//! Sign-restricted (0,±1)-matrices.
//!
//! An `m x n` matrix with entries in `{-1, 0, 1}` is sign-restricted (an SRM)
//! when every column prefix sum, read from the top, is 0 or 1 and every row
//! prefix sum, read from the left, is nonnegative.

pub mod bruhat;
pub mod decompose;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod interchange;
pub mod io;
pub mod margins;
pub mod matrix;
pub mod multichain;
pub mod polytope;
pub mod sample;
pub mod srm;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{inverse_sum_matrix, sum_matrix, IntMatrix, SignMatrix, SumMatrix};
pub use srm::{is_srm, validate_srm, Srm, Violation};
