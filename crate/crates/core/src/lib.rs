//! Exact computations with covariant bimodules over quantum homogeneous
//! spaces of finite-dimensional Hopf algebras.
//!
//! Everything is exact: scalars come from a [`field::Field`] (the rationals
//! or a prime field), and every law is checked as an equality of matrices.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod calculus;
pub mod check;
pub mod error;
pub mod examples;
pub mod field;
pub mod functors;
pub mod group;
pub mod homogeneous;
pub mod hopf;
pub mod linalg;
pub mod module;

pub use error::{Error, Result};
