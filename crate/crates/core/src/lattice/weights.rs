//! One-dimensional ideals as common eigenvectors of `ad L`.
//!
//! `Fv` is an ideal exactly when `v` is an eigenvector of every `ad e_i`, so
//! the one-dimensional ideals are the lines inside the nonzero weight spaces
//! `W_χ = {v : [e_i, v] = χ_i v for all i}`. An eigenvalue of `ad e_i` on a
//! common eigenvector lies in the ground field and is a root of the
//! characteristic polynomial, so backtracking over those roots finds every
//! weight space. Distinct weights give independent spaces, and every line in
//! a single weight space is an ideal; over infinite fields the list of
//! weight spaces is the finite description of the infinitely many lines.

use crate::arith::{roots_in_field, Scalar};
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{char_poly, eigenspace, Subspace};

use super::{projective_points, Budget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimIdeals {
    /// Nonzero weight spaces in canonical order.
    pub spaces: Vec<Subspace>,
    /// `χ_i` for each space.
    pub weights: Vec<Vec<Scalar>>,
}

impl OneDimIdeals {
    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// The line of the first basis row of each space, least first. Over a
    /// prime field this is the least one-dimensional ideal in canonical order.
    pub fn least(&self) -> Option<Subspace> {
        self.spaces
            .iter()
            .map(|w| Subspace::span_unchecked(w.field(), w.ambient(), vec![w.basis().row(0).to_vec()]))
            .min()
    }

    /// Every line, which requires a finite field.
    pub fn lines(&self, budget: Budget) -> Result<Vec<Subspace>> {
        let mut out = Vec::new();
        for w in &self.spaces {
            for p in projective_points(w.field(), w.dim(), budget)? {
                out.push(Subspace::span_unchecked(w.field(), w.ambient(), vec![w.combine(&p)]));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Whether `s` is a line inside one of the weight spaces.
    pub fn contains_line(&self, s: &Subspace) -> bool {
        s.dim() == 1 && self.spaces.iter().any(|w| s.leq_unchecked(w))
    }
}

/// All one-dimensional ideals of `L`, over any supported field.
pub fn one_dim_ideals(l: &LieAlgebra) -> OneDimIdeals {
    let n = l.dim();
    let ads: Vec<_> = (0..n).map(|i| l.ad(&l.unit(i)).expect("basis vector")).collect();
    let mut roots: Vec<Option<Vec<Scalar>>> = vec![None; n];
    let mut found = Vec::new();
    let mut weight = Vec::new();
    search(&ads, &mut roots, 0, l.full_subspace(), &mut weight, &mut found);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let (spaces, weights) = found.into_iter().unzip();
    OneDimIdeals { spaces, weights }
}

fn search(
    ads: &[crate::linalg::Matrix],
    roots: &mut [Option<Vec<Scalar>>],
    i: usize,
    space: Subspace,
    weight: &mut Vec<Scalar>,
    found: &mut Vec<(Subspace, Vec<Scalar>)>,
) {
    if i == ads.len() {
        if !space.is_zero() {
            found.push((space, weight.clone()));
        }
        return;
    }
    if roots[i].is_none() {
        let poly = char_poly(&ads[i]).expect("square");
        roots[i] = Some(roots_in_field(&poly).expect("monic"));
    }
    let candidates = roots[i].clone().expect("computed");
    for lambda in candidates {
        let e = eigenspace(&ads[i], &lambda).expect("same field");
        let next = space.intersect_unchecked(&e);
        if next.is_zero() {
            continue;
        }
        weight.push(lambda);
        search(ads, roots, i + 1, next, weight, found);
        weight.pop();
    }
}
