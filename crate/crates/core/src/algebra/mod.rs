//! Algebras from quivers with relations, and their invariants.

pub mod build;
pub mod catalog;
pub mod constructions;
pub mod fdalg;
pub mod presentation;
pub mod structure;

pub use build::{build, build_algebra, DEFAULT_LENGTH_CAP, MAX_LENGTH_CAP};
pub use catalog::{catalog, catalog_names, commutative_ladder, preprojective, DynkinKind};
pub use constructions::{
    ideal_generated_by, idempotent_quotient, quotient_by_ideal, radical_square_zero, trivial_extension,
};
pub use fdalg::{BasisElem, FiniteDimAlgebra, Subspace, SubspaceRole};
pub use presentation::{Arrow, Coef, FieldKind, FieldSpec, PathWord, Presentation, Quiver, Relation};
pub use structure::{
    cartan_report, center, ejr_certificate, is_symmetric, radical, right_socle, socle, structural_subspaces,
    symmetrizing_form, trace_form_radical, CartanReport, StructuralSubspaces,
};
