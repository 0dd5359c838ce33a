//! Exact computations with finite-dimensional algebras given by quivers with
//! relations, and enumeration of their two-term silting complexes (support
//! τ-tilting pairs) by mutation.

pub mod algebra;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod io;
pub mod linalg;
pub mod reductions;
pub mod rep;
pub mod silting;

pub use error::{Error, Result};
pub use field::{Field, Fp, Q};
