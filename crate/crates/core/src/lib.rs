//! Exact computations with the radical of module categories of bound quiver
//! algebras over the rationals: radical filtrations and depths of morphisms,
//! postprojective and preinjective partitions, and the Delta-good category of
//! a quasi-hereditary algebra.

pub mod algebra;
pub mod ar;
pub mod category;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod format;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod presets;
pub mod qh;
pub mod radical;
pub mod rep;

pub use error::{Error, Result};
