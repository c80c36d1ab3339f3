//! Exact-arithmetic toolkit for magic squares viewed as matrices.
//!
//! Squares are classified, transformed and analysed through permutation
//! matrices: dihedral images and conjugations generate families, magic
//! classifying permutations detect the classical order-4 types and their
//! generalisations, and the spectrum of `A - (μ/n)E` exposes the `±λ` pairing
//! of type A squares. Exhaustive enumeration covers orders 3 and 4.

pub mod classify;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod magic;
pub mod perms;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, RatMatrix};
pub use magic::Square;
pub use perms::PermMatrix;
