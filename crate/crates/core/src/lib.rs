//! Exact computational homological algebra over the rationals: basic
//! algebras, complexes of projectives, tilting complexes, the tensor
//! construction for tilting complexes, Auslander-Reiten knitting and
//! derived invariants.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod ar;
pub mod complex;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod resolution;
pub mod scalar;
pub mod tensor;
pub mod tilting;

pub use error::{Error, Result};
pub use linalg::{Matrix, Polynomial};
pub use scalar::Scalar;
