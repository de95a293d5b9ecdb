//! Exact-arithmetic construction of the rank `n^2 + 1` algebra `T_n`, the braid
//! group action on it, and the spectral/dimensional analysis of the resulting
//! representation matrices.
//!
//! Everything is computed over exact fields: arbitrary-precision rationals, or
//! the field of rational functions in the parameter `mu`. There are no floats
//! and no tolerances anywhere; equality is equality of canonical forms.
//!
//! The crate is `no_std` (with `alloc`). IO, serialization and the CLI live in
//! the companion `braidtn-cli` crate.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod braid;
pub mod error;
pub mod exact;
pub mod free_group;
pub mod matrix;
pub mod report;
pub mod tn;

pub use error::Error;
pub use exact::{Poly, RatFn, Rational, Scalar};
pub use matrix::Matrix;
pub use report::{CheckEntry, Report};
