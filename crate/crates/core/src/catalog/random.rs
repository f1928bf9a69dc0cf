//! Seeded random solvable and nilpotent algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Subspace, Vector};

use super::builtin::matrices;

/// Matrix algebra the samples are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `t(n)`, upper triangular; every subalgebra is solvable.
    UpperTriangular,
    /// `n(n)`, strictly upper triangular; every subalgebra is nilpotent.
    StrictlyUpper,
}

pub const MAX_AMBIENT: usize = 5;

/// The subalgebra of `t(n)` or `n(n)` generated by `target_dim` random
/// elements, on the RREF basis of that subalgebra. Deterministic per seed.
pub fn random_solvable(seed: u64, field: Field, family: Family, ambient_n: usize, target_dim: usize) -> Result<LieAlgebra> {
    let q = field.modulus().ok_or(Error::FieldNotFinite(field))?;
    if ambient_n == 0 || ambient_n > MAX_AMBIENT {
        return Err(Error::BadParams(format!("ambient size {ambient_n} not in 1..={MAX_AMBIENT}")));
    }
    let t = matrices(field, ambient_n, family == Family::StrictlyUpper)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Vector> = (0..target_dim.min(t.dim()))
        .map(|_| (0..t.dim()).map(|_| field.residue(rng.gen_range(0..q))).collect())
        .collect();
    let span = Subspace::span_unchecked(field, t.dim(), gens);
    let s = t.closure_unchecked(&span);
    Ok(t.restrict(&s)?.algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::serialize;
    use crate::structure::{is_nilpotent, is_solvable};

    #[test]
    fn outputs_are_solvable_and_valid() {
        for seed in 0..40 {
            let l = random_solvable(seed, Field::prime(3).unwrap(), Family::UpperTriangular, 3, 2).unwrap();
            assert!(l.validate().is_empty());
            assert!(is_solvable(&l));
        }
    }

    #[test]
    fn strictly_upper_samples_are_nilpotent() {
        for seed in 0..40 {
            let l = random_solvable(seed, Field::prime(2).unwrap(), Family::StrictlyUpper, 4, 3).unwrap();
            assert!(is_nilpotent(&l));
        }
    }

    #[test]
    fn replay_is_identical() {
        let f = Field::prime(5).unwrap();
        let a = random_solvable(17, f, Family::UpperTriangular, 3, 2).unwrap();
        let b = random_solvable(17, f, Family::UpperTriangular, 3, 2).unwrap();
        assert_eq!(serialize(&a), serialize(&b));
    }

    #[test]
    fn rejects_rationals_and_large_ambients() {
        assert!(matches!(random_solvable(1, Field::Q, Family::UpperTriangular, 3, 2), Err(Error::FieldNotFinite(_))));
        assert!(matches!(
            random_solvable(1, Field::prime(2).unwrap(), Family::UpperTriangular, 6, 2),
            Err(Error::BadParams(_))
        ));
    }
}
