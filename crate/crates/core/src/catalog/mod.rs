//! Documents, named algebras and random instances.

mod builtin;
mod format;
mod random;

pub use builtin::{builtin, catalog, CATALOG, FAMILIES};
pub use format::{parse, parse_document, serialize, serialize_document, AlgebraDocument};
pub use random::{random_solvable, Family, MAX_AMBIENT};
