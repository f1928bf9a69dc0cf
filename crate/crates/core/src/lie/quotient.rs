use super::LieAlgebra;
use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::linalg::{vector, Subspace, Vector};

/// `L/I` on the basis of standard vectors at the non-pivot columns of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    reps: Vec<usize>,
    parent_dim: usize,
}

impl Quotient {
    /// Coordinates of `v + I` in the quotient basis.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.ideal.reduce(v);
        self.reps.iter().map(|&c| r[c].clone()).collect()
    }

    /// The coset representative supported on the non-pivot columns.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut out = vector::zero_vector(self.algebra.field(), self.parent_dim);
        for (&c, x) in self.reps.iter().zip(coords) {
            out[c] = x.clone();
        }
        out
    }

    /// Image `(S + I)/I`.
    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vector> = s.basis_rows().map(|r| self.project(r)).collect();
        Subspace::span_unchecked(self.algebra.field(), self.algebra.dim(), vs)
    }

    /// Full preimage of a subspace of the quotient; always contains `I`.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let lifted: Vec<Vector> = s.basis_rows().map(|r| self.lift(r)).collect();
        self.ideal.extend_unchecked(&lifted)
    }
}

/// A subalgebra regarded as a Lie algebra on its RREF basis.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub algebra: LieAlgebra,
    pub subalgebra: Subspace,
}

impl Restriction {
    /// Local coordinates of an ambient vector lying in the subalgebra.
    pub fn to_local(&self, v: &[Scalar]) -> Option<Vector> {
        self.subalgebra.coordinates(v)
    }

    pub fn to_ambient(&self, coords: &[Scalar]) -> Vector {
        self.subalgebra.combine(coords)
    }

    /// A subspace of the subalgebra expressed in local coordinates.
    pub fn local_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let vs = s
            .basis_rows()
            .map(|r| self.to_local(r).ok_or(Error::PreconditionUnmet("subspace leaves the subalgebra".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span_unchecked(self.algebra.field(), self.algebra.dim(), vs))
    }

    pub fn ambient_subspace(&self, local: &Subspace) -> Subspace {
        let vs: Vec<Vector> = local.basis_rows().map(|r| self.to_ambient(r)).collect();
        Subspace::span_unchecked(self.algebra.field(), self.subalgebra.ambient(), vs)
    }
}

impl LieAlgebra {
    /// `L/I`; fails unless `I` is an ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_subspace(ideal)?;
        if !self.is_ideal_unchecked(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let reps = ideal.non_pivots();
        let field = self.field();
        let names: Vec<String> = reps.iter().map(|&c| self.names()[c].clone()).collect();
        let mut q = Quotient {
            algebra: LieAlgebra::abelian(field, 0),
            ideal: ideal.clone(),
            reps,
            parent_dim: self.dim(),
        };
        let mut brackets = Vec::new();
        for (a, &i) in q.reps.iter().enumerate() {
            for (b, &j) in q.reps.iter().enumerate().skip(a + 1) {
                let c = q.project(&self.basis_bracket(i, j));
                if !vector::is_zero(&c) {
                    brackets.push((a, b, c));
                }
            }
        }
        q.algebra = LieAlgebra::from_brackets_unvalidated(field, names, &brackets)?;
        Ok(q)
    }

    /// The subalgebra `s` as a Lie algebra in its own right.
    pub fn restrict(&self, s: &Subspace) -> Result<Restriction> {
        self.require_subalgebra(s)?;
        let field = self.field();
        let rows = s.basis_vectors();
        let names: Vec<String> = rows
            .iter()
            .zip(s.pivots())
            .enumerate()
            .map(|(r, (row, &p))| {
                if row.iter().enumerate().all(|(c, x)| if c == p { x.is_one() } else { x.is_zero() }) {
                    self.names()[p].clone()
                } else {
                    format!("b{r}")
                }
            })
            .collect();
        let mut brackets = Vec::new();
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                let c = self.bracket_unchecked(&rows[a], &rows[b]);
                let local = s.coordinates(&c).expect("closed under bracket");
                if !vector::is_zero(&local) {
                    brackets.push((a, b, local));
                }
            }
        }
        Ok(Restriction {
            algebra: LieAlgebra::from_brackets_unvalidated(field, names, &brackets)?,
            subalgebra: s.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn q(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Field::Q.from_i64(x)).collect()
    }

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets(Field::Q, names(&["x", "y", "z"]), &[(0, 1, q(&[0, 0, 1]))]).unwrap()
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let l = h3();
        let qt = l.quotient(&l.zero_subspace()).unwrap();
        assert_eq!(qt.algebra, l);
    }

    #[test]
    fn heisenberg_mod_centre_is_abelian() {
        let l = h3();
        let qt = l.quotient(&l.centre()).unwrap();
        assert_eq!(qt.algebra.dim(), 2);
        assert!(qt.algebra.is_abelian());
        let v = q(&[2, 3, 5]);
        assert_eq!(qt.project(&v), q(&[2, 3]));
        assert_eq!(qt.project(&qt.lift(&q(&[7, -1]))), q(&[7, -1]));
        assert!(matches!(l.quotient(&l.span_of_names(&["x"]).unwrap()), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn nonabelian_mod_derived() {
        let l = LieAlgebra::from_brackets(Field::Q, names(&["x", "y"]), &[(0, 1, q(&[0, 1]))]).unwrap();
        let qt = l.quotient(&l.derived_algebra()).unwrap();
        assert_eq!(qt.algebra.dim(), 1);
        assert!(qt.algebra.is_abelian());
    }

    #[test]
    fn preimages() {
        let l = h3();
        let qt = l.quotient(&l.centre()).unwrap();
        let line = Subspace::span(Field::Q, 2, &[q(&[1, 0])]).unwrap();
        assert_eq!(qt.preimage(&line), l.span_of_names(&["x", "z"]).unwrap());
        assert_eq!(qt.project_subspace(&l.span_of_names(&["x", "z"]).unwrap()), line);
    }

    #[test]
    fn restriction_to_ideal() {
        let l = h3();
        let r = l.restrict(&l.span_of_names(&["y", "z"]).unwrap()).unwrap();
        assert_eq!(r.algebra.dim(), 2);
        assert!(r.algebra.is_abelian());
        assert_eq!(r.algebra.names(), &["y".to_string(), "z".to_string()]);
        let s = Subspace::span(Field::Q, 3, &[q(&[1, 1, 0]), q(&[0, 0, 1])]).unwrap();
        let r = l.restrict(&s).unwrap();
        assert_eq!(r.to_ambient(&r.to_local(&q(&[2, 2, 3])).unwrap()), q(&[2, 2, 3]));
    }
}
