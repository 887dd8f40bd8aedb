//! Exact computations for affine Weyl groups, alcove walks, nonsymmetric
//! Macdonald polynomials, level-zero crystals and affine Hecke modules.

pub mod crystal;
pub mod error;
pub mod heckemod;
pub mod macdonald;
pub mod par;
pub mod walks;
pub mod rootdata;
pub mod weyl;
pub mod xring;

pub use error::{Error, Result};
