use std::cmp::Ordering;
use std::fmt;

use super::matrix::{rref_in_place, Matrix};
use super::vector::{self, Vector};
use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^n` held by its reduced row-echelon basis.
///
/// The RREF basis is unique, so two values are equal exactly when they
/// describe the same subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        for v in vectors {
            vector::check_len(ambient, v)?;
            vector::check_field(field, v)?;
        }
        Ok(Subspace::span_unchecked(field, ambient, vectors.to_vec()))
    }

    pub(crate) fn span_unchecked(field: Field, ambient: usize, mut rows: Vec<Vector>) -> Subspace {
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: Matrix::from_rows_unchecked(field, ambient, rows),
            pivots,
        }
    }

    /// Trusts that `rows` is already in reduced row-echelon form.
    pub(crate) fn from_rref_unchecked(
        field: Field,
        ambient: usize,
        rows: Vec<Vector>,
        pivots: Vec<usize>,
    ) -> Subspace {
        debug_assert_eq!(rows.len(), pivots.len());
        Subspace {
            ambient,
            basis: Matrix::from_rows_unchecked(field, ambient, rows),
            pivots,
        }
    }

    pub fn line(field: Field, v: &[Scalar]) -> Result<Subspace> {
        Subspace::span(field, v.len(), &[v.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_iter()
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis_rows().map(<[Scalar]>::to_vec).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        vector::check_field(self.field(), v)
    }

    /// `v` minus its component along the basis; zero exactly when `v` lies
    /// in the subspace. Entries at pivot columns of the result are zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis_rows().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -&out[p];
                vector::axpy(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient || !self.contains_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = vector::zero_vector(self.field(), self.ambient);
        for (c, row) in coords.iter().zip(self.basis_rows()) {
            vector::axpy(&mut out, c, row);
        }
        out
    }

    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis_rows().all(|r| other.contains_unchecked(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Subspace) -> Subspace {
        if other.leq_unchecked(self) {
            return self.clone();
        }
        let rows: Vec<Vector> = self.basis_rows().chain(other.basis_rows()).map(<[Scalar]>::to_vec).collect();
        Subspace::span_unchecked(self.field(), self.ambient, rows)
    }

    /// Adds the vectors to the subspace.
    pub(crate) fn extend_unchecked(&self, vectors: &[Vector]) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(vectors.iter().cloned());
        Subspace::span_unchecked(self.field(), self.ambient, rows)
    }

    /// Exact intersection from the left kernel of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Subspace) -> Subspace {
        if self.leq_unchecked(other) {
            return self.clone();
        }
        if other.leq_unchecked(self) {
            return other.clone();
        }
        let field = self.field();
        let a = self.dim();
        let stacked: Vec<Vector> = self.basis_rows().chain(other.basis_rows()).map(<[Scalar]>::to_vec).collect();
        // columns of the transpose are the stacked rows; its kernel holds the
        // relations sum(alpha_i u_i) + sum(beta_j v_j) = 0
        let system = Matrix::from_rows_unchecked(field, stacked.len(), transpose_rows(&stacked, self.ambient));
        let relations = system.nullspace();
        let vectors: Vec<Vector> = relations
            .basis_rows()
            .map(|rel| {
                let mut out = vector::zero_vector(field, self.ambient);
                for (c, u) in rel[..a].iter().zip(&stacked[..a]) {
                    vector::axpy(&mut out, c, u);
                }
                out
            })
            .collect();
        Subspace::span_unchecked(field, self.ambient, vectors)
    }

    /// Column indices that are not pivots.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Standard basis vectors at the non-pivot columns; together with the
    /// subspace they span the ambient space.
    pub fn complement_reps(&self) -> Vec<Vector> {
        self.non_pivots()
            .into_iter()
            .map(|c| vector::unit_vector(self.field(), self.ambient, c))
            .collect()
    }

    /// Parses semicolon-separated vectors; `0` or an empty string is the zero subspace.
    pub fn parse(field: Field, ambient: usize, text: &str) -> Result<Subspace> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Subspace::zero(field, ambient));
        }
        let vectors = text
            .split(';')
            .map(|s| vector::parse_vector(field, s))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(field, ambient, &vectors)
    }
}

fn transpose_rows(rows: &[Vector], cols: usize) -> Vec<Vector> {
    (0..cols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self.basis_rows().map(vector::format_vector).collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// Serialized as its RREF basis rows.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.basis_rows())
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: dimension, then pivot columns, then basis entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field()
            .cmp(&other.field())
            .then(self.ambient.cmp(&other.ambient))
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}
