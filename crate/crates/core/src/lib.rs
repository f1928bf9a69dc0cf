//! Exact decision procedures for c-ideals of finite-dimensional Lie
//! algebras over the rationals and prime fields.
//!
//! A subalgebra `B` of `L` is a c-ideal when some ideal `C` satisfies
//! `L = B + C` and `B ∩ C ≤ B_L`, where the core `B_L` is the largest ideal
//! of `L` inside `B`. The crate provides:
//!
//! * exact scalars and dense linear algebra ([`arith`], [`linalg`]),
//! * Lie algebras by structure constants ([`lie`]),
//! * the core operator and brute-force lattice oracles over finite fields
//!   ([`lattice`]),
//! * the c-ideal decision engine ([`cideal`]),
//! * structural predicates such as supersolvability and the classification
//!   of algebras whose lines are all c-ideals ([`structure`]),
//! * a document format, a built-in catalog and a random generator
//!   ([`catalog`]),
//! * theorem-verification suites ([`harness`]).

pub mod arith;
pub mod catalog;
pub mod cideal;
mod error;
pub mod harness;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod structure;

pub use arith::{Field, Scalar};
pub use error::{Error, Result};
pub use lattice::Budget;
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Subspace, Vector};
