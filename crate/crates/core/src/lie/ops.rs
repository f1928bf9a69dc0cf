use serde::Serialize;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A derived or lower central series, without repeated terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    /// True when the series settles on a nonzero term instead of reaching 0.
    pub stabilized: bool,
}

impl SeriesResult {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has a first term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Term `k` in the 1-based indexing `L^1 = L`; terms past the end repeat
    /// the last one.
    pub fn term(&self, k: usize) -> &Subspace {
        let idx = k.saturating_sub(1).min(self.terms.len() - 1);
        &self.terms[idx]
    }
}

impl LieAlgebra {
    /// `[U, V]`, the span of all brackets of basis vectors.
    pub fn span_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        Ok(self.span_product_unchecked(u, v))
    }

    pub(crate) fn span_product_unchecked(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut out = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                let c = self.bracket_unchecked(a, b);
                if !vector::is_zero(&c) {
                    out.push(c);
                }
            }
        }
        Subspace::span_unchecked(self.field(), self.dim(), out)
    }

    /// `[L, L]`
    pub fn derived_algebra(&self) -> Subspace {
        let full = self.full_subspace();
        self.span_product_unchecked(&full, &full)
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_algebra().is_zero()
    }

    /// Least subalgebra containing `u`.
    pub fn subalgebra_closure(&self, u: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        Ok(self.closure_unchecked(u))
    }

    pub(crate) fn closure_unchecked(&self, u: &Subspace) -> Subspace {
        let mut cur = u.clone();
        loop {
            let next = cur.sum_unchecked(&self.span_product_unchecked(&cur, &cur));
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.check_subspace(u)?;
        Ok(self.is_subalgebra_unchecked(u))
    }

    pub(crate) fn is_subalgebra_unchecked(&self, u: &Subspace) -> bool {
        let rows: Vec<&[crate::arith::Scalar]> = u.basis_rows().collect();
        for (a, x) in rows.iter().enumerate() {
            for y in &rows[a + 1..] {
                if !u.contains_unchecked(&self.bracket_unchecked(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.check_subspace(u)?;
        Ok(self.is_ideal_unchecked(u))
    }

    pub(crate) fn is_ideal_unchecked(&self, u: &Subspace) -> bool {
        if u.is_full() || u.is_zero() {
            return true;
        }
        u.basis_rows().all(|x| {
            (0..self.dim()).all(|i| u.contains_unchecked(&self.bracket_unchecked(&self.unit(i), x)))
        })
    }

    pub(crate) fn require_subalgebra(&self, u: &Subspace) -> Result<()> {
        if self.is_subalgebra(u)? {
            Ok(())
        } else {
            Err(Error::NotSubalgebra)
        }
    }

    /// Derived series (`next = [cur, cur]`) or lower central series
    /// (`next = [L, cur]`) starting at the subalgebra `start`.
    pub fn series(&self, kind: SeriesKind, start: &Subspace) -> Result<SeriesResult> {
        self.require_subalgebra(start)?;
        let full = self.full_subspace();
        Ok(self.iterate_series(kind, start, |cur| match kind {
            SeriesKind::Derived => self.span_product_unchecked(cur, cur),
            SeriesKind::LowerCentral => self.span_product_unchecked(&full, cur),
        }))
    }

    pub fn derived_series(&self) -> SeriesResult {
        self.series(SeriesKind::Derived, &self.full_subspace()).expect("L is a subalgebra")
    }

    pub fn lower_central_series(&self) -> SeriesResult {
        self.series(SeriesKind::LowerCentral, &self.full_subspace()).expect("L is a subalgebra")
    }

    /// Lower central series of the subalgebra `s` viewed as an algebra in
    /// its own right: `next = [s, cur]`.
    pub fn lower_central_within(&self, s: &Subspace) -> Result<SeriesResult> {
        self.require_subalgebra(s)?;
        Ok(self.iterate_series(SeriesKind::LowerCentral, s, |cur| self.span_product_unchecked(s, cur)))
    }

    fn iterate_series(&self, kind: SeriesKind, start: &Subspace, step: impl Fn(&Subspace) -> Subspace) -> SeriesResult {
        let mut terms = vec![start.clone()];
        loop {
            let cur = terms.last().expect("nonempty");
            if cur.is_zero() {
                break;
            }
            let next = step(cur);
            if next.dim() == cur.dim() {
                break;
            }
            terms.push(next);
        }
        let stabilized = !terms.last().expect("nonempty").is_zero();
        SeriesResult { kind, terms, stabilized }
    }

    /// All `x` with `[x, t] ∈ w` for every target vector `t`.
    pub(crate) fn solve_bracket_into(&self, targets: &[Vector], w: &Subspace) -> Subspace {
        let n = self.dim();
        let free = w.non_pivots();
        let mut rows: Vec<Vector> = Vec::new();
        for t in targets {
            let images: Vec<Vector> = (0..n).map(|i| w.reduce(&self.bracket_unchecked(&self.unit(i), t))).collect();
            for &k in &free {
                let row: Vector = images.iter().map(|img| img[k].clone()).collect();
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return self.full_subspace();
        }
        Matrix::from_rows_unchecked(self.field(), n, rows).nullspace()
    }

    /// `C_L(A) = {x : [x, A] = 0}`.
    pub fn centralizer(&self, a: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        Ok(self.solve_bracket_into(&a.basis_vectors(), &self.zero_subspace()))
    }

    /// `Z(L)`.
    pub fn centre(&self) -> Subspace {
        self.centralizer(&self.full_subspace()).expect("same ambient")
    }

    /// `{x : [x, U] ≤ U}`.
    pub fn normalizer(&self, u: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        Ok(self.solve_bracket_into(&u.basis_vectors(), u))
    }

    /// `{x : [x, L] ≤ W}`; for an ideal `W` this is the preimage of the
    /// centre of `L/W`.
    pub fn central_preimage(&self, w: &Subspace) -> Result<Subspace> {
        self.check_subspace(w)?;
        let units: Vec<Vector> = (0..self.dim()).map(|i| self.unit(i)).collect();
        Ok(self.solve_bracket_into(&units, w))
    }

    /// `0 = Z_0 < Z_1 < ... `, iterating `Z_{k+1} = {x : [x, L] ≤ Z_k}` until it
    /// stops growing.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut terms = vec![self.zero_subspace()];
        loop {
            let cur = terms.last().expect("nonempty");
            let next = self.central_preimage(cur).expect("same ambient");
            if next.dim() == cur.dim() {
                return terms;
            }
            terms.push(next);
        }
    }

    /// Block-diagonal sum; each summand becomes an ideal and they commute.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        let (m, k) = (self.dim(), other.dim());
        let n = m + k;
        let mut names = self.names().to_vec();
        for name in other.names() {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let embed = |v: &Vector, offset: usize| {
            let mut out = vector::zero_vector(self.field(), n);
            out[offset..offset + v.len()].clone_from_slice(v);
            out
        };
        let mut brackets = Vec::new();
        for (i, j, c) in self.nonzero_brackets() {
            brackets.push((i, j, embed(c, 0)));
        }
        for (i, j, c) in other.nonzero_brackets() {
            brackets.push((i + m, j + m, embed(c, m)));
        }
        LieAlgebra::from_brackets_unvalidated(self.field(), names, &brackets)
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

    fn nonabelian2() -> LieAlgebra {
        LieAlgebra::from_brackets(Field::Q, names(&["x", "y"]), &[(0, 1, q(&[0, 1]))]).unwrap()
    }

    fn sl2(field: Field) -> LieAlgebra {
        let v = |xs: &[i64]| xs.iter().map(|&x| field.from_i64(x)).collect::<Vector>();
        LieAlgebra::from_brackets(
            field,
            names(&["e", "f", "h"]),
            &[(0, 1, v(&[0, 0, 1])), (0, 2, v(&[-2, 0, 0])), (1, 2, v(&[0, 2, 0]))],
        )
        .unwrap()
    }

    #[test]
    fn products() {
        let l = h3();
        let full = l.full_subspace();
        assert!(l.span_product(&full, &l.zero_subspace()).unwrap().is_zero());
        assert_eq!(l.derived_algebra(), l.span_of_names(&["z"]).unwrap());
        let s = sl2(Field::Q);
        assert!(s.derived_algebra().is_full());
    }

    #[test]
    fn closures() {
        let l = h3();
        let xz = l.span_of_names(&["x", "z"]).unwrap();
        assert_eq!(l.subalgebra_closure(&xz).unwrap(), xz);
        assert!(l.subalgebra_closure(&l.span_of_names(&["x", "y"]).unwrap()).unwrap().is_full());
        let s = sl2(Field::Q);
        assert!(s.subalgebra_closure(&s.span_of_names(&["e", "f"]).unwrap()).unwrap().is_full());
    }

    #[test]
    fn series_examples() {
        let a = LieAlgebra::abelian(Field::Q, 3);
        assert_eq!(a.derived_series().dims(), vec![3, 0]);
        let l = h3();
        let lc = l.lower_central_series();
        assert_eq!(lc.dims(), vec![3, 1, 0]);
        assert!(lc.term(3).is_zero());
        assert!(!lc.stabilized);
        let d = sl2(Field::Q).derived_series();
        assert_eq!(d.dims(), vec![3]);
        assert!(d.stabilized);
        assert!(matches!(
            l.series(SeriesKind::Derived, &l.span_of_names(&["x", "y"]).unwrap()),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn centralizers() {
        let l = h3();
        assert!(l.centralizer(&l.zero_subspace()).unwrap().is_full());
        assert_eq!(l.centre(), l.span_of_names(&["z"]).unwrap());
        assert!(nonabelian2().centre().is_zero());
    }

    #[test]
    fn normalizers() {
        let l = h3();
        assert!(l.normalizer(&l.span_of_names(&["y", "z"]).unwrap()).unwrap().is_full());
        assert_eq!(
            l.normalizer(&l.span_of_names(&["x"]).unwrap()).unwrap(),
            l.span_of_names(&["x", "z"]).unwrap()
        );
        let b = nonabelian2();
        let x = b.span_of_names(&["x"]).unwrap();
        assert_eq!(b.normalizer(&x).unwrap(), x);
    }

    #[test]
    fn ideals_and_subalgebras() {
        let l = h3();
        assert!(l.is_ideal(&l.zero_subspace()).unwrap());
        assert!(l.is_ideal(&l.full_subspace()).unwrap());
        assert!(l.is_ideal(&l.span_of_names(&["y", "z"]).unwrap()).unwrap());
        let s = sl2(Field::Q);
        let eh = s.span_of_names(&["e", "h"]).unwrap();
        assert!(s.is_subalgebra(&eh).unwrap());
        assert!(!s.is_ideal(&eh).unwrap());
    }

    #[test]
    fn direct_sums() {
        let a = LieAlgebra::abelian(Field::Q, 1);
        let l = a.direct_sum(&nonabelian2()).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.validate().is_empty());
        assert_eq!(l.centre(), Subspace::span(Field::Q, 3, &[q(&[1, 0, 0])]).unwrap());
        let hh = h3().direct_sum(&h3()).unwrap();
        assert_eq!(hh.dim(), 6);
        assert!(hh.validate().is_empty());
        assert!(hh.lower_central_series().reaches_zero());
        let zero = LieAlgebra::abelian(Field::Q, 0);
        assert_eq!(h3().direct_sum(&zero).unwrap(), h3());
        assert!(h3().direct_sum(&LieAlgebra::abelian(Field::prime(3).unwrap(), 1)).is_err());
    }

    #[test]
    fn upper_central() {
        let l = h3();
        let dims: Vec<usize> = l.upper_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 3]);
        let dims: Vec<usize> = nonabelian2().upper_central_series().iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0]);
    }
}
