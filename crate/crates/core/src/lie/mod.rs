//! Lie algebras by structure constants.

mod algebra;
mod ops;
mod quotient;

pub use algebra::{JacobiViolation, LieAlgebra};
pub use ops::{SeriesKind, SeriesResult};
pub use quotient::{Quotient, Restriction};
