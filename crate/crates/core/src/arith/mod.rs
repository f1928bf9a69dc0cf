//! Exact scalars over the rationals and prime fields.

mod poly;
mod scalar;

pub use poly::{eval as poly_eval, roots_in_field};
pub use scalar::{Field, Scalar, MAX_PRIME};
