//! The core operator `B_L` and brute-force lattice oracles.
//!
//! Everything that enumerates needs a finite field and an [`Budget`]; an
//! enumeration that would exceed its budget fails before doing any work
//! instead of returning a partial answer.

mod enumerate;
mod weights;

use std::env;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Subspace, Vector};
use crate::structure;

pub use enumerate::{gaussian_binomial, projective_points, subspace_count, subspaces, SubspaceIter};
pub(crate) use enumerate::all_words;
pub use weights::{one_dim_ideals, OneDimIdeals};

/// Cap on the number of candidates a brute-force oracle may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT: u64 = 1_000_000;
    pub const ENV_VAR: &'static str = "LIE_CIDEAL_BUDGET";

    pub fn new(max_subspaces: u64) -> Result<Budget> {
        if max_subspaces == 0 {
            return Err(Error::BadParams("budget must be positive".into()));
        }
        Ok(Budget(max_subspaces))
    }

    /// The default, or the value of `LIE_CIDEAL_BUDGET` when set.
    pub fn from_env() -> Result<Budget> {
        match env::var(Self::ENV_VAR) {
            Ok(v) => {
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadParams(format!("{}={v} is not a count", Self::ENV_VAR)))?;
                Budget::new(n)
            }
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn max_subspaces(self) -> u64 {
        self.0
    }

    pub fn check(self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            Err(Error::BudgetExceeded {
                required,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(Self::DEFAULT)
    }
}

/// `B_L`, the largest ideal of `L` inside the subalgebra `B`.
///
/// Iterates `B_{i+1} = {x ∈ B_i : [x, L] ≤ B_i}` to its fixed point.
pub fn core_of(l: &LieAlgebra, b: &Subspace) -> Result<Subspace> {
    l.require_subalgebra(b)?;
    Ok(core_unchecked(l, b))
}

pub(crate) fn core_unchecked(l: &LieAlgebra, b: &Subspace) -> Subspace {
    let mut cur = b.clone();
    loop {
        if l.is_ideal_unchecked(&cur) {
            return cur;
        }
        let next = cur.intersect_unchecked(&l.central_preimage(&cur).expect("same ambient"));
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// `{x : [x, U] ≤ U}`
pub fn normalizer(l: &LieAlgebra, u: &Subspace) -> Result<Subspace> {
    l.normalizer(u)
}

pub fn enum_subspaces(l: &LieAlgebra, dim: Option<usize>, budget: Budget) -> Result<SubspaceIter> {
    subspaces(l.field(), l.dim(), dim, budget)
}

pub fn enum_subalgebras(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    Ok(enum_subspaces(l, None, budget)?
        .filter(|s| l.is_subalgebra_unchecked(s))
        .collect())
}

pub fn enum_ideals(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    Ok(enum_subspaces(l, None, budget)?.filter(|s| l.is_ideal_unchecked(s)).collect())
}

/// One vector per line of `L/S`, supported on the non-pivot columns of `S`.
fn complement_points(l: &LieAlgebra, s: &Subspace, budget: Budget) -> Result<Vec<Vector>> {
    let reps = s.non_pivots();
    let field = l.field();
    Ok(projective_points(field, reps.len(), budget)?
        .map(|p| {
            let mut v = vector::zero_vector(field, l.dim());
            for (&c, x) in reps.iter().zip(&p) {
                v[c] = x.clone();
            }
            v
        })
        .collect())
}

/// `S` is maximal among subalgebras satisfying `keep` when no single extra
/// vector generates a subalgebra satisfying `keep`: any larger such
/// subalgebra would contain the closure of `S + Fx` for some `x ∉ S`.
fn is_maximal_by_extension(
    l: &LieAlgebra,
    s: &Subspace,
    budget: Budget,
    keep: impl Fn(&Subspace) -> bool,
) -> Result<bool> {
    for x in complement_points(l, s, budget)? {
        let t = l.closure_unchecked(&s.extend_unchecked(&[x]));
        if keep(&t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proper subalgebras not strictly contained in another proper subalgebra.
pub fn maximal_subalgebras(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in enum_subalgebras(l, budget)? {
        if !s.is_full() && is_maximal_by_extension(l, &s, budget, |t| !t.is_full())? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Nilpotent subalgebras maximal among nilpotent subalgebras.
pub fn maximal_nilpotent_subalgebras(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for s in enum_subalgebras(l, budget)? {
        if structure::nilpotent_unchecked(l, &s)
            && is_maximal_by_extension(l, &s, budget, |t| structure::nilpotent_unchecked(l, t))?
        {
            out.push(s);
        }
    }
    Ok(out)
}

/// Nilpotent self-normalizing subalgebras.
pub fn cartan_subalgebras(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    Ok(enum_subalgebras(l, budget)?
        .into_iter()
        .filter(|h| structure::nilpotent_unchecked(l, h) && &l.normalizer(h).expect("same ambient") == h)
        .collect())
}

/// The line spanned by `v`, or an error for the zero vector.
pub fn line(l: &LieAlgebra, v: &[Scalar]) -> Result<Subspace> {
    if v.len() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            got: v.len(),
        });
    }
    let s = Subspace::line(l.field(), v)?;
    if s.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::catalog::builtin;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn core_examples() {
        let l = builtin("heisenberg", Field::Q).unwrap();
        let x = l.span_of_names(&["x"]).unwrap();
        assert!(core_of(&l, &x).unwrap().is_zero());
        let xz = l.span_of_names(&["x", "z"]).unwrap();
        assert_eq!(core_of(&l, &xz).unwrap(), xz);
        let yz = l.span_of_names(&["y", "z"]).unwrap();
        assert_eq!(core_of(&l, &yz).unwrap(), yz);
        assert!(matches!(core_of(&l, &l.span_of_names(&["x", "y"]).unwrap()), Err(Error::NotSubalgebra)));
    }

    #[test]
    fn nonabelian_core_drops_to_derived() {
        let l = builtin("nonabelian2", Field::Q).unwrap();
        assert!(core_of(&l, &l.span_of_names(&["x"]).unwrap()).unwrap().is_zero());
        let y = l.span_of_names(&["y"]).unwrap();
        assert_eq!(core_of(&l, &y).unwrap(), y);
    }

    #[test]
    fn ideal_enumeration() {
        let a = builtin("abelian(2)", gf(3)).unwrap();
        assert_eq!(enum_ideals(&a, Budget::default()).unwrap().len(), 6);
        let s = builtin("sl2", gf(5)).unwrap();
        assert_eq!(enum_subspaces(&s, None, Budget::default()).unwrap().count(), 64);
        let ideals = enum_ideals(&s, Budget::default()).unwrap();
        assert_eq!(ideals, vec![s.zero_subspace(), s.full_subspace()]);
        let h = builtin("heisenberg", gf(2)).unwrap();
        let ideals = enum_ideals(&h, Budget::default()).unwrap();
        let z = h.span_of_names(&["z"]).unwrap();
        let lines: Vec<_> = ideals.iter().filter(|i| i.dim() == 1).collect();
        assert_eq!(lines, vec![&z]);
        assert!(ideals.iter().all(|i| i.is_zero() || z.leq(i).unwrap()));
    }

    #[test]
    fn maximal_subalgebra_examples() {
        let one = builtin("abelian(1)", gf(2)).unwrap();
        assert_eq!(maximal_subalgebras(&one, Budget::default()).unwrap(), vec![one.zero_subspace()]);
        let h = builtin("heisenberg", gf(2)).unwrap();
        let m = maximal_subalgebras(&h, Budget::default()).unwrap();
        let z = h.span_of_names(&["z"]).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|s| s.dim() == 2 && z.leq(s).unwrap()));
        let s = builtin("sl2", gf(5)).unwrap();
        let m = maximal_subalgebras(&s, Budget::default()).unwrap();
        assert!(m.contains(&s.span_of_names(&["e", "h"]).unwrap()));
    }

    #[test]
    fn maximal_nilpotent_examples() {
        let h = builtin("heisenberg", gf(3)).unwrap();
        assert_eq!(maximal_nilpotent_subalgebras(&h, Budget::default()).unwrap(), vec![h.full_subspace()]);
        let b = builtin("nonabelian2", gf(3)).unwrap();
        let m = maximal_nilpotent_subalgebras(&b, Budget::default()).unwrap();
        assert_eq!(m.len(), 4);
        assert!(m.iter().all(|s| s.dim() == 1));
        let hz = builtin("heisenberg+abelian(1)", gf(2)).unwrap();
        assert_eq!(maximal_nilpotent_subalgebras(&hz, Budget::default()).unwrap(), vec![hz.full_subspace()]);
    }

    #[test]
    fn cartan_examples() {
        let a = builtin("abelian(3)", gf(2)).unwrap();
        assert_eq!(cartan_subalgebras(&a, Budget::default()).unwrap(), vec![a.full_subspace()]);
        let b = builtin("nonabelian2", gf(3)).unwrap();
        let c = cartan_subalgebras(&b, Budget::default()).unwrap();
        // span{x + a y} for a = 0, 1, 2
        assert_eq!(c.len(), 3);
        assert!(!c.contains(&b.span_of_names(&["y"]).unwrap()));
        assert!(c.contains(&b.span_of_names(&["x"]).unwrap()));
        let s = builtin("sl2", gf(5)).unwrap();
        assert!(cartan_subalgebras(&s, Budget::default()).unwrap().contains(&s.span_of_names(&["h"]).unwrap()));
    }

    #[test]
    fn enumeration_requires_finite_field() {
        let l = builtin("heisenberg", Field::Q).unwrap();
        assert!(matches!(enum_ideals(&l, Budget::default()), Err(Error::FieldNotFinite(_))));
        assert!(matches!(maximal_subalgebras(&l, Budget::default()), Err(Error::FieldNotFinite(_))));
    }

    #[test]
    fn budget_parsing() {
        assert!(Budget::new(0).is_err());
        assert_eq!(Budget::default().max_subspaces(), 1_000_000);
    }
}
