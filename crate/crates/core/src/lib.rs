//! Exact verification kernel for hook-length expansion identities.
//!
//! Everything here is `no_std` + `alloc`: arbitrary-precision rationals,
//! dense univariate polynomials with canonical rational functions, truncated
//! power series, integer partitions and their hooks, standard Young tableaux
//! with row insertion, involutions, and the identity checks built on top of
//! them. No floating point is used anywhere.
//!
//! IO, timing, the worker pool and the command line live in the `hookforge`
//! companion crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod identity;
pub mod involutions;
pub mod partitions;
pub mod tableaux;

pub use error::{Error, Result};
pub use exact::{BigRational, Coefficient, Polynomial, PowerSeries, RationalFunction};
pub use partitions::{Cell, CornerProfile, Partition};
pub use tableaux::StandardTableau;
