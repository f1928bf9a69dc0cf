//! Structural predicates and invariants.

use serde::Serialize;

use crate::error::Result;
use crate::lattice::{core_unchecked, enum_ideals, maximal_subalgebras, one_dim_ideals, Budget};
use crate::lie::{LieAlgebra, SeriesKind};
use crate::linalg::{vector, Subspace, Vector};

pub(crate) fn nilpotent_unchecked(l: &LieAlgebra, s: &Subspace) -> bool {
    l.lower_central_within(s).expect("subalgebra").reaches_zero()
}

pub(crate) fn solvable_unchecked(l: &LieAlgebra, s: &Subspace) -> bool {
    l.series(SeriesKind::Derived, s).expect("subalgebra").reaches_zero()
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    l.derived_series().reaches_zero()
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    l.lower_central_series().reaches_zero()
}

/// Solvability of a subalgebra as an algebra in its own right.
pub fn is_solvable_subalgebra(l: &LieAlgebra, s: &Subspace) -> Result<bool> {
    l.require_subalgebra(s)?;
    Ok(solvable_unchecked(l, s))
}

pub fn is_nilpotent_subalgebra(l: &LieAlgebra, s: &Subspace) -> Result<bool> {
    l.require_subalgebra(s)?;
    Ok(nilpotent_unchecked(l, s))
}

/// A flag `0 = I_0 < I_1 < ... < I_n = L` of ideals with `dim I_k = k`,
/// or `None` when `L` is not supersolvable.
pub fn supersolvable_flag(l: &LieAlgebra) -> Option<Vec<Subspace>> {
    if is_nilpotent(l) {
        return Some(central_flag(l));
    }
    let a = one_dim_ideals(l).least()?;
    let q = l.quotient(&a).expect("ideal");
    let rest = supersolvable_flag(&q.algebra)?;
    let mut flag = vec![l.zero_subspace()];
    flag.extend(rest.iter().map(|s| q.preimage(s)));
    Some(flag)
}

pub fn is_supersolvable(l: &LieAlgebra) -> bool {
    supersolvable_flag(l).is_some()
}

/// Refines the upper central series; every subspace between consecutive
/// terms is an ideal.
fn central_flag(l: &LieAlgebra) -> Vec<Subspace> {
    let mut flag = vec![l.zero_subspace()];
    let terms = l.upper_central_series();
    for next in terms.iter().skip(1) {
        for row in next.basis_vectors().into_iter().rev() {
            let cur = flag.last().expect("nonempty");
            if !cur.contains_unchecked(&row) {
                let grown = cur.extend_unchecked(&[row]);
                flag.push(grown);
            }
        }
    }
    flag
}

/// Whether `flag` is a complete flag of ideals of `L`.
pub fn verify_flag(l: &LieAlgebra, flag: &[Subspace]) -> bool {
    flag.len() == l.dim() + 1
        && flag.iter().enumerate().all(|(k, s)| s.ambient() == l.dim() && s.dim() == k && l.is_ideal_unchecked(s))
        && flag.windows(2).all(|w| w[0].leq_unchecked(&w[1]))
}

/// `(nilradical, solvable radical)`, from the ideal enumeration.
pub fn radicals(l: &LieAlgebra, budget: Budget) -> Result<(Subspace, Subspace)> {
    let ideals = enum_ideals(l, budget)?;
    let mut nil = l.zero_subspace();
    let mut rad = l.zero_subspace();
    for i in &ideals {
        if nilpotent_unchecked(l, i) {
            nil = nil.sum_unchecked(i);
        }
        if solvable_unchecked(l, i) {
            rad = rad.sum_unchecked(i);
        }
    }
    Ok((nil, rad))
}

/// `(F(L), φ(L))`: the intersection of the maximal subalgebras and its core.
pub fn frattini(l: &LieAlgebra, budget: Budget) -> Result<(Subspace, Subspace)> {
    let f = maximal_subalgebras(l, budget)?
        .iter()
        .fold(l.full_subspace(), |acc, m| acc.intersect_unchecked(m));
    let phi = core_unchecked(l, &f);
    Ok((f, phi))
}

/// Minimal nonzero ideals, in canonical order.
pub fn minimal_ideals(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    let nonzero: Vec<Subspace> = enum_ideals(l, budget)?.into_iter().filter(|i| !i.is_zero()).collect();
    Ok(nonzero
        .iter()
        .filter(|i| !nonzero.iter().any(|j| j.dim() < i.dim() && j.leq_unchecked(i)))
        .cloned()
        .collect())
}

/// Sum of the minimal abelian ideals.
pub fn abelian_socle(l: &LieAlgebra, budget: Budget) -> Result<Subspace> {
    Ok(minimal_ideals(l, budget)?
        .iter()
        .filter(|i| l.span_product_unchecked(i, i).is_zero())
        .fold(l.zero_subspace(), |acc, i| acc.sum_unchecked(i)))
}

/// If `ad w` acts on the abelian subspace `d` as `λ·id` with `λ ≠ 0`,
/// returns `λ`. `d` must be nonzero.
fn scalar_action(l: &LieAlgebra, w: &[crate::arith::Scalar], d: &Subspace) -> Option<crate::arith::Scalar> {
    let first = d.basis().row(0);
    let p = d.pivots()[0];
    let lambda = l.bracket_unchecked(w, first)[p].clone();
    if lambda.is_zero() {
        return None;
    }
    d.basis_rows()
        .all(|b| l.bracket_unchecked(w, b) == vector::scale(&lambda, b))
        .then_some(lambda)
}

/// The `x` with `L = L² ⊕ Fx`, `L²` abelian and `[x, y] = y` on `L²`.
/// One-dimensional algebras are not almost abelian.
pub fn almost_abelian_witness(l: &LieAlgebra) -> Option<Vector> {
    let d = l.derived_algebra();
    if d.is_zero() || d.dim() + 1 != l.dim() || !l.span_product_unchecked(&d, &d).is_zero() {
        return None;
    }
    let w = d.complement_reps().pop().expect("codimension one");
    let lambda = scalar_action(l, &w, &d)?;
    Some(vector::scale(&lambda.inv().expect("nonzero"), &w))
}

pub fn is_almost_abelian(l: &LieAlgebra) -> bool {
    almost_abelian_witness(l).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Thm52Case {
    #[serde(rename = "CaseI_Lcubed_zero")]
    CaseILcubedZero,
    #[serde(rename = "CaseII_abelian_plus_almost_abelian")]
    CaseIIAbelianPlusAlmostAbelian,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Abelian ideal; equals the centre.
    pub a: Subspace,
    /// Almost abelian ideal `L² ⊕ Fx`.
    pub b: Subspace,
    pub x: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm52Verdict {
    pub case: Thm52Case,
    pub decomposition: Option<Decomposition>,
}

impl Thm52Verdict {
    /// Whether the classifier predicts that every line is a c-ideal.
    pub fn all_lines_cideal(&self) -> bool {
        self.case != Thm52Case::Neither
    }
}

/// Either `L³ = 0`, or `L = A ⊕ B` with `A` an abelian ideal and `B` an
/// almost abelian ideal, or neither.
pub fn classify_thm52(l: &LieAlgebra) -> Thm52Verdict {
    let lcs = l.lower_central_series();
    if lcs.term(3).is_zero() {
        return Thm52Verdict {
            case: Thm52Case::CaseILcubedZero,
            decomposition: None,
        };
    }
    let neither = Thm52Verdict {
        case: Thm52Case::Neither,
        decomposition: None,
    };
    let d = l.derived_algebra();
    let z = l.centre();
    if !l.span_product_unchecked(&d, &d).is_zero() || !z.intersect_unchecked(&d).is_zero() {
        return neither;
    }
    let zd = z.sum_unchecked(&d);
    if zd.dim() + 1 != l.dim() {
        return neither;
    }
    let w = zd.complement_reps().pop().expect("codimension one");
    let Some(lambda) = scalar_action(l, &w, &d) else {
        return neither;
    };
    let x = vector::scale(&lambda.inv().expect("nonzero"), &w);
    let b = d.extend_unchecked(std::slice::from_ref(&x));
    let dec = Decomposition { a: z, b, x };
    assert!(verify_decomposition(l, &dec), "direct decomposition failed to re-verify");
    Thm52Verdict {
        case: Thm52Case::CaseIIAbelianPlusAlmostAbelian,
        decomposition: Some(dec),
    }
}

/// Independent check of `L = A ⊕ B` with the stated properties.
pub fn verify_decomposition(l: &LieAlgebra, dec: &Decomposition) -> bool {
    let (a, b) = (&dec.a, &dec.b);
    if !(l.is_ideal_unchecked(a) && l.is_ideal_unchecked(b)) {
        return false;
    }
    if !a.intersect_unchecked(b).is_zero() || !a.sum_unchecked(b).is_full() {
        return false;
    }
    if !l.span_product_unchecked(a, a).is_zero() || !b.contains_unchecked(&dec.x) {
        return false;
    }
    let b2 = l.span_product_unchecked(b, b);
    !b2.is_zero()
        && b2.dim() + 1 == b.dim()
        && l.span_product_unchecked(&b2, &b2).is_zero()
        && b2.basis_rows().all(|y| l.bracket_unchecked(&dec.x, y) == y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub field: crate::arith::Field,
    pub dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub abelian: bool,
    /// Steps for the derived series to reach 0, when it does.
    pub derived_len: Option<usize>,
    /// Steps for the lower central series to reach 0, when it does.
    pub nilpotency_class: Option<usize>,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub centre: Subspace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supersolvable_flag: Option<Vec<Subspace>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilradical: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solvable_radical: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frattini_subalgebra: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frattini_ideal: Option<Subspace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian_socle: Option<Subspace>,
}

/// Everything above; the enumeration-backed parts only over prime fields.
pub fn analyze(l: &LieAlgebra, budget: Budget) -> Result<StructureProfile> {
    let ds = l.derived_series();
    let lcs = l.lower_central_series();
    let flag = supersolvable_flag(l);
    let steps = |s: &crate::lie::SeriesResult| s.reaches_zero().then(|| s.terms.len() - 1);
    let mut p = StructureProfile {
        field: l.field(),
        dim: l.dim(),
        solvable: ds.reaches_zero(),
        nilpotent: lcs.reaches_zero(),
        supersolvable: flag.is_some(),
        abelian: l.is_abelian(),
        derived_len: steps(&ds),
        nilpotency_class: steps(&lcs),
        derived_dims: ds.dims(),
        lower_central_dims: lcs.dims(),
        centre: l.centre(),
        supersolvable_flag: flag,
        nilradical: None,
        solvable_radical: None,
        frattini_subalgebra: None,
        frattini_ideal: None,
        abelian_socle: None,
    };
    if l.field().is_finite() {
        let (nil, rad) = radicals(l, budget)?;
        let (f, phi) = frattini(l, budget)?;
        p.nilradical = Some(nil);
        p.solvable_radical = Some(rad);
        p.frattini_subalgebra = Some(f);
        p.frattini_ideal = Some(phi);
        p.abelian_socle = Some(abelian_socle(l, budget)?);
    }
    Ok(p)
}

/// Exhaustive search for a complete flag of ideals through enumerated
/// ideals; independent of the recursive decision.
pub fn supersolvable_by_search(l: &LieAlgebra, budget: Budget) -> Result<bool> {
    let ideals = enum_ideals(l, budget)?;
    let mut reachable = vec![l.zero_subspace()];
    for k in 1..=l.dim() {
        reachable = ideals
            .iter()
            .filter(|i| i.dim() == k && reachable.iter().any(|r| r.leq_unchecked(i)))
            .cloned()
            .collect();
        if reachable.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::catalog::builtin;
    use crate::lattice::core_of;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn solvable_and_nilpotent() {
        let a = builtin("abelian(3)", Field::Q).unwrap();
        assert!(is_solvable(&a) && is_nilpotent(&a));
        let b = builtin("nonabelian2", Field::Q).unwrap();
        assert!(is_solvable(&b) && !is_nilpotent(&b));
        let s = builtin("sl2", Field::Q).unwrap();
        assert!(!is_solvable(&s) && !is_nilpotent(&s));
        let x = b.span_of_names(&["x"]).unwrap();
        assert!(is_nilpotent_subalgebra(&b, &x).unwrap());
    }

    #[test]
    fn supersolvable_examples() {
        let h = builtin("heisenberg", Field::Q).unwrap();
        let flag = supersolvable_flag(&h).unwrap();
        let names = |xs: &[&str]| h.span_of_names(xs).unwrap();
        assert_eq!(flag, vec![h.zero_subspace(), names(&["z"]), names(&["y", "z"]), h.full_subspace()]);
        assert!(!is_supersolvable(&builtin("sl2", gf(5)).unwrap()));
        assert!(is_supersolvable(&builtin("abelian(2)", Field::Q).unwrap()));
        let t = builtin("upper_triangular(2)", Field::Q).unwrap();
        assert!(verify_flag(&t, &supersolvable_flag(&t).unwrap()));
        assert!(!is_supersolvable(&builtin("nonsplit3", Field::Q).unwrap()));
    }

    #[test]
    fn radical_examples() {
        let h = builtin("heisenberg", gf(2)).unwrap();
        assert_eq!(radicals(&h, Budget::default()).unwrap(), (h.full_subspace(), h.full_subspace()));
        let b = builtin("nonabelian2", gf(3)).unwrap();
        assert_eq!(radicals(&b, Budget::default()).unwrap(), (b.span_of_names(&["y"]).unwrap(), b.full_subspace()));
        let s = builtin("sl2", gf(5)).unwrap();
        assert_eq!(radicals(&s, Budget::default()).unwrap(), (s.zero_subspace(), s.zero_subspace()));
    }

    #[test]
    fn frattini_examples() {
        let a = builtin("abelian(2)", gf(3)).unwrap();
        assert!(frattini(&a, Budget::default()).unwrap().0.is_zero());
        let h = builtin("heisenberg", gf(2)).unwrap();
        let z = h.span_of_names(&["z"]).unwrap();
        assert_eq!(frattini(&h, Budget::default()).unwrap(), (z.clone(), z));
        let b = builtin("nonabelian2", gf(3)).unwrap();
        assert!(frattini(&b, Budget::default()).unwrap().0.is_zero());
    }

    #[test]
    fn socle_examples() {
        let a = builtin("abelian(2)", gf(2)).unwrap();
        assert_eq!(abelian_socle(&a, Budget::default()).unwrap(), a.full_subspace());
        let h = builtin("heisenberg", gf(2)).unwrap();
        assert_eq!(abelian_socle(&h, Budget::default()).unwrap(), h.span_of_names(&["z"]).unwrap());
        let s = builtin("sl2", gf(5)).unwrap();
        assert!(abelian_socle(&s, Budget::default()).unwrap().is_zero());
    }

    #[test]
    fn almost_abelian_examples() {
        let b = builtin("nonabelian2", Field::Q).unwrap();
        assert_eq!(almost_abelian_witness(&b), Some(b.unit(0)));
        assert!(!is_almost_abelian(&builtin("abelian(1)", Field::Q).unwrap()));
        assert!(!is_almost_abelian(&builtin("abelian(2)", Field::Q).unwrap()));
        assert!(!is_almost_abelian(&builtin("heisenberg", Field::Q).unwrap()));
        assert!(is_almost_abelian(&builtin("almost_abelian(4)", gf(3)).unwrap()));
    }

    #[test]
    fn classifier_examples() {
        let h = builtin("heisenberg", Field::Q).unwrap();
        assert_eq!(classify_thm52(&h).case, Thm52Case::CaseILcubedZero);
        let l = builtin("abelian(1)+nonabelian2", Field::Q).unwrap();
        let v = classify_thm52(&l);
        assert_eq!(v.case, Thm52Case::CaseIIAbelianPlusAlmostAbelian);
        let dec = v.decomposition.unwrap();
        assert_eq!(dec.a, l.span_of_names(&["e0"]).unwrap());
        assert_eq!(dec.b, l.span_of_names(&["x", "y"]).unwrap());
        assert_eq!(classify_thm52(&builtin("sl2", Field::Q).unwrap()).case, Thm52Case::Neither);
        assert_eq!(classify_thm52(&builtin("nonabelian2+nonabelian2", Field::Q).unwrap()).case, Thm52Case::Neither);
    }

    #[test]
    fn profile_implications() {
        for name in ["heisenberg", "sl2", "nonabelian2+abelian(2)", "filiform(4)"] {
            let l = builtin(name, gf(3)).unwrap();
            let p = analyze(&l, Budget::default()).unwrap();
            assert!(!p.nilpotent || p.solvable);
            assert!(!p.supersolvable || p.solvable);
            assert!(!p.abelian || p.nilpotent);
            assert_eq!(p.frattini_ideal, Some(core_of(&l, p.frattini_subalgebra.as_ref().unwrap()).unwrap()));
        }
        let q = analyze(&builtin("heisenberg", Field::Q).unwrap(), Budget::default()).unwrap();
        assert!(q.nilradical.is_none() && q.frattini_subalgebra.is_none());
        assert_eq!(q.nilpotency_class, Some(2));
    }

    #[test]
    fn flag_search_agrees() {
        for name in ["heisenberg", "sl2", "nonsplit3", "upper_triangular(2)", "almost_abelian(3)"] {
            let l = builtin(name, gf(3)).unwrap();
            assert_eq!(supersolvable_by_search(&l, Budget::default()).unwrap(), is_supersolvable(&l), "{name}");
        }
    }
}
