use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Subspace, Vector};

/// A Jacobi identity failure on basis elements `(i, j, k)`, `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` and
/// `[e_i, e_i]` follow from antisymmetry, so antisymmetry cannot be violated
/// and the Jacobi identity is the only axiom left to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    names: Vec<String>,
    table: Vec<Vector>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds an algebra from sparse brackets `(i, j, [e_i, e_j])` and checks
    /// the Jacobi identity. Missing pairs bracket to zero.
    pub fn from_brackets(field: Field, names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let l = LieAlgebra::from_brackets_unvalidated(field, names, brackets)?;
        match l.validate().first() {
            None => Ok(l),
            Some(v) => Err(Error::JacobiViolation(v.triple.0, v.triple.1, v.triple.2)),
        }
    }

    /// Like [`LieAlgebra::from_brackets`] but keeps a tensor that may violate
    /// Jacobi, for inspection through [`LieAlgebra::validate`].
    pub fn from_brackets_unvalidated(
        field: Field,
        names: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let n = names.len();
        let mut table = vec![vector::zero_vector(field, n); n * n.saturating_sub(1) / 2];
        let mut seen = vec![false; table.len()];
        for (i, j, coeffs) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange(format!("bracket ({i}, {j}) in dimension {n}")));
            }
            if i >= j {
                return Err(Error::IndexOutOfRange(format!("bracket ({i}, {j}) needs i < j")));
            }
            vector::check_len(n, coeffs)?;
            vector::check_field(field, coeffs)?;
            let k = pair_index(n, i, j);
            if seen[k] {
                return Err(Error::Malformed(format!("duplicate bracket ({i}, {j})")));
            }
            seen[k] = true;
            table[k] = coeffs.clone();
        }
        Ok(LieAlgebra { field, names, table })
    }

    pub fn abelian(field: Field, n: usize) -> Self {
        let names = (0..n).map(|i| format!("e{i}")).collect();
        LieAlgebra::from_brackets_unvalidated(field, names, &[]).expect("empty table")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `[e_i, e_j]` for any pair of basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => vector::scale(&self.field.from_i64(-1), &self.table[pair_index(n, j, i)]),
            std::cmp::Ordering::Equal => vector::zero_vector(self.field, n),
        }
    }

    /// Nonzero stored brackets `(i, j, [e_i, e_j])` with `i < j`, in order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, &Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = &self.table[pair_index(n, i, j)];
                if !vector::is_zero(c) {
                    out.push((i, j, c));
                }
            }
        }
        out
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        vector::check_len(self.dim(), v)?;
        vector::check_field(self.field, v)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zero_vector(self.field, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let c = &self.table[k];
                k += 1;
                if vector::is_zero(c) {
                    continue;
                }
                let w = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                vector::axpy(&mut out, &w, c);
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]`; column `k` is `[x, e_k]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|k| self.bracket_unchecked(x, &vector::unit_vector(self.field, n, k)))
            .collect();
        Matrix::from_columns(self.field, n, &columns)
    }

    /// Every basis triple `i < j < k` on which the Jacobi identity fails.
    ///
    /// The Jacobiator is alternating and trilinear once the bracket is
    /// antisymmetric, so distinct basis triples are a complete test.
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(i, j, k);
                    if !vector::is_zero(&r) {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        out
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim();
        let e = |a| vector::unit_vector(self.field, n, a);
        let term = |a: usize, b: usize, c: usize| self.bracket_unchecked(&e(a), &self.basis_bracket(b, c));
        vector::add(&vector::add(&term(i, j, k), &term(j, k, i)), &term(k, i, j))
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn unit(&self, i: usize) -> Vector {
        vector::unit_vector(self.field, self.dim(), i)
    }

    /// Span of the basis vectors named in `labels`.
    pub fn span_of_names(&self, labels: &[&str]) -> Result<Subspace> {
        let vectors = labels
            .iter()
            .map(|l| {
                self.names
                    .iter()
                    .position(|n| n == l)
                    .map(|i| self.unit(i))
                    .ok_or_else(|| Error::IndexOutOfRange(format!("no basis element `{l}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.field, self.dim(), &vectors)
    }

    pub(crate) fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: u.ambient(),
            });
        }
        if u.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: u.field(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn q(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Field::Q.from_i64(x)).collect()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets(Field::Q, names(&["x", "y", "z"]), &[(0, 1, q(&[0, 0, 1]))]).unwrap()
    }

    #[test]
    fn abelian_and_heisenberg_validate() {
        assert!(LieAlgebra::abelian(Field::Q, 4).validate().is_empty());
        assert!(h3().validate().is_empty());
    }

    #[test]
    fn jacobi_counterexample() {
        let bad = vec![(0, 1, q(&[1, 0, 0])), (1, 2, q(&[0, 1, 0])), (0, 2, q(&[0, 0, 1]))];
        let l = LieAlgebra::from_brackets_unvalidated(Field::Q, names(&["x", "y", "z"]), &bad).unwrap();
        let v = l.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (0, 1, 2));
        assert_eq!(v[0].residual, q(&[1, -1, -1]));
        assert_eq!(
            LieAlgebra::from_brackets(Field::Q, names(&["x", "y", "z"]), &bad),
            Err(Error::JacobiViolation(0, 1, 2))
        );
    }

    #[test]
    fn brackets() {
        let l = h3();
        let x = q(&[1, 0, 0]);
        let y = q(&[0, 1, 0]);
        assert_eq!(l.bracket(&x, &y).unwrap(), q(&[0, 0, 1]));
        assert_eq!(l.bracket(&y, &x).unwrap(), q(&[0, 0, -1]));
        let u = q(&[3, -2, 7]);
        assert_eq!(l.bracket(&u, &u).unwrap(), q(&[0, 0, 0]));
        assert!(matches!(l.bracket(&q(&[1, 0]), &y), Err(Error::DimensionMismatch { .. })));
        let ad = l.ad(&x).unwrap();
        assert_eq!(ad.mul_vec(&y).unwrap(), q(&[0, 0, 1]));
    }

    #[test]
    fn nonabelian_two() {
        let l = LieAlgebra::from_brackets(Field::Q, names(&["x", "y"]), &[(0, 1, q(&[0, 1]))]).unwrap();
        assert_eq!(l.bracket(&q(&[1, 0]), &q(&[0, 1])).unwrap(), q(&[0, 1]));
    }

    #[test]
    fn table_shape_errors() {
        let n = names(&["x", "y"]);
        assert!(matches!(
            LieAlgebra::from_brackets(Field::Q, n.clone(), &[(1, 0, q(&[0, 1]))]),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            LieAlgebra::from_brackets(Field::Q, n.clone(), &[(0, 2, q(&[0, 1]))]),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            LieAlgebra::from_brackets(Field::Q, n, &[(0, 1, q(&[0, 1, 0]))]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
