//! Exact Clebsch-Gordan coordinate matrices M(m, n, k).
//!
//! The unnormalized coefficient c_{m,n,k}(i, j) is an integer defined on the
//! cone 0 <= i <= m, 0 <= j <= n, 0 <= i + j - k <= m + n - 2k. This crate
//! evaluates it exactly, builds the matrices, moves points around with the
//! 72 Regge symmetries, computes central values, rebuilds the neighbourhood of
//! the centre from rational multiplier lattices, enumerates zero families and
//! scans parameter ranges for proper zeros.

pub mod arith;
pub mod central;
pub mod coeff;
pub mod error;
pub mod families;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod point;
pub mod scan;
pub mod suites;
pub mod symmetry;

pub use coeff::{eval_c, small_k_closed_form};
pub use error::{CgError, Result};
pub use matrix::{build_matrix, CGMatrix, ProperZero, Violation};
pub use point::{from_regge, in_cone, to_regge, ParamPoint, ReggeSymbol};
