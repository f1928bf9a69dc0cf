//! Exact dense linear algebra over a [`Field`](crate::arith::Field).

mod charpoly;
mod matrix;
mod subspace;
pub mod vector;

pub use charpoly::{char_poly, eigenspace, faddeev_leverrier, hessenberg};
pub use matrix::Matrix;
pub use subspace::Subspace;
pub use vector::Vector;
