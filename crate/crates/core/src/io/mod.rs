//! Presentation files, DOT and JSON output.

pub mod export;
pub mod parse;
pub mod serialize;

pub use export::{node_id, to_dot, to_json};
pub use parse::{parse_algebra_file, parse_field_kind, parse_scalar};
pub use serialize::serialize_presentation;
