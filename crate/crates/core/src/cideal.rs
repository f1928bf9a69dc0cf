//! Deciding whether a subalgebra is a c-ideal.
//!
//! The search works in `L̄ = L/B_L`, where a witness is exactly an ideal
//! complement of `B̄ = B/B_L`; its preimage is then a witness in `L`.

use serde::Serialize;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::lattice::{self, all_words, core_unchecked, enum_ideals, Budget};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Subspace, Vector};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    IdealIsTriviallyCideal,
    LineRule,
    ExhaustiveEnumeration,
    CharacteristicLattice,
    DerivedTerm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CIdealVerdict {
    pub answer: Answer,
    /// The ideal `C`, present exactly when the answer is `Yes`.
    pub certificate: Option<Subspace>,
    pub method: Method,
    pub exhaustive: bool,
}

impl CIdealVerdict {
    fn yes(l: &LieAlgebra, b: &Subspace, c: Subspace, method: Method) -> Result<Self> {
        if !verify_certificate(l, b, &c) {
            return Err(Error::CertificateRejected(format!("{c} for {b}")));
        }
        Ok(CIdealVerdict {
            answer: Answer::Yes,
            certificate: Some(c),
            method,
            exhaustive: true,
        })
    }

    fn no(method: Method) -> Self {
        CIdealVerdict {
            answer: Answer::No,
            certificate: None,
            method,
            exhaustive: true,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

/// `C` is an ideal, `B + C = L` and `B ∩ C ≤ B_L`.
pub fn verify_certificate(l: &LieAlgebra, b: &Subspace, c: &Subspace) -> bool {
    if l.check_subspace(b).is_err() || l.check_subspace(c).is_err() || !l.is_subalgebra_unchecked(b) {
        return false;
    }
    l.is_ideal_unchecked(c)
        && b.sum_unchecked(c).is_full()
        && b.intersect_unchecked(c).leq_unchecked(&core_unchecked(l, b))
}

/// `Fx` is a c-ideal iff it is an ideal or `x ∉ L²`.
pub fn line_cideal(l: &LieAlgebra, x: &[Scalar]) -> Result<CIdealVerdict> {
    let fx = lattice::line(l, x)?;
    if l.is_ideal_unchecked(&fx) {
        return CIdealVerdict::yes(l, &fx, l.full_subspace(), Method::LineRule);
    }
    let d = l.derived_algebra();
    if d.contains_unchecked(x) {
        return Ok(CIdealVerdict::no(Method::LineRule));
    }
    // a hyperplane above L² missing x
    let k = d.extend_unchecked(&d.extend_unchecked(&[x.to_vec()]).complement_reps());
    CIdealVerdict::yes(l, &fx, k, Method::LineRule)
}

/// Decides whether the subalgebra `b` is a c-ideal of `L`.
///
/// Over a prime field the answer is always `Yes` or `No`. Over `Q` an
/// answer of `Unknown` means no witness was found among characteristic
/// ideals of `L/B_L`.
pub fn is_cideal(l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<CIdealVerdict> {
    l.require_subalgebra(b)?;
    if l.is_ideal_unchecked(b) {
        return CIdealVerdict::yes(l, b, l.full_subspace(), Method::IdealIsTriviallyCideal);
    }
    if b.dim() == 1 {
        return line_cideal(l, b.basis().row(0));
    }
    let core = core_unchecked(l, b);
    let q = l.quotient(&core)?;
    let lb = &q.algebra;
    let bb = q.project_subspace(b);
    let want = lb.dim() - bb.dim();
    let lift = |c: &Subspace| q.preimage(c);
    let is_complement = |c: &Subspace| c.dim() == want && bb.intersect_unchecked(c).is_zero();

    for c in lb.derived_series().terms.iter().chain(&lb.lower_central_series().terms) {
        if is_complement(c) {
            return CIdealVerdict::yes(l, b, lift(c), Method::DerivedTerm);
        }
    }

    if l.field().is_finite() {
        return match ideal_complement(lb, &bb, budget)? {
            Some(c) => CIdealVerdict::yes(l, b, lift(&c), Method::ExhaustiveEnumeration),
            None => Ok(CIdealVerdict::no(Method::ExhaustiveEnumeration)),
        };
    }

    for c in characteristic_ideals(lb) {
        if is_complement(&c) {
            return CIdealVerdict::yes(l, b, lift(&c), Method::CharacteristicLattice);
        }
    }
    Ok(CIdealVerdict {
        answer: Answer::Unknown,
        certificate: None,
        method: Method::CharacteristicLattice,
        exhaustive: false,
    })
}

/// An ideal `C` with `L = B ⊕ C`, over a prime field.
///
/// Every complement of `B` is the graph `{w + φ(w)}` of a linear map
/// `φ : W → B`, where `W` is spanned by the unit vectors off the pivots
/// of `B`; there are `q^(dim W · dim B)` of them.
fn ideal_complement(l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<Option<Subspace>> {
    let field = l.field();
    let q = field.modulus().ok_or(Error::FieldNotFinite(field))? as u128;
    let ws = b.complement_reps();
    let bs = b.basis_vectors();
    let entries = ws.len() * bs.len();
    budget.check(q.checked_pow(entries as u32).unwrap_or(u128::MAX))?;
    for word in all_words(field, entries) {
        let rows: Vec<Vector> = ws
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let mut v = w.clone();
                for (j, bj) in bs.iter().enumerate() {
                    vector::axpy(&mut v, &word[k * bs.len() + j], bj);
                }
                v
            })
            .collect();
        let c = Subspace::span_unchecked(field, l.dim(), rows);
        if l.is_ideal_unchecked(&c) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

const LATTICE_CAP: usize = 256;

/// Ideals built from series, centralizers, weight spaces and one level of
/// quotients, closed under sum and intersection up to a fixed cap.
pub fn characteristic_ideals(l: &LieAlgebra) -> Vec<Subspace> {
    let mut seeds = basic_ideals(l);
    for i in seeds.clone() {
        if i.is_zero() || i.is_full() {
            continue;
        }
        let q = l.quotient(&i).expect("ideal");
        seeds.extend(basic_ideals(&q.algebra).iter().map(|s| q.preimage(s)));
    }
    let mut out: Vec<Subspace> = Vec::new();
    for s in seeds {
        if !out.contains(&s) && out.len() < LATTICE_CAP {
            out.push(s);
        }
    }
    let mut changed = true;
    while changed && out.len() < LATTICE_CAP {
        changed = false;
        let snapshot = out.clone();
        'outer: for (a_i, a) in snapshot.iter().enumerate() {
            for c in &snapshot[a_i + 1..] {
                for r in [a.sum_unchecked(c), a.intersect_unchecked(c)] {
                    if !out.contains(&r) {
                        out.push(r);
                        changed = true;
                        if out.len() >= LATTICE_CAP {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(|i| l.is_ideal_unchecked(i)));
    out
}

fn basic_ideals(l: &LieAlgebra) -> Vec<Subspace> {
    let mut v: Vec<Subspace> = Vec::new();
    v.extend(l.derived_series().terms);
    v.extend(l.lower_central_series().terms);
    v.extend(l.upper_central_series());
    let centralizers: Vec<Subspace> = v.iter().map(|i| l.centralizer(i).expect("same ambient")).collect();
    v.extend(centralizers);
    v.extend(lattice::one_dim_ideals(l).spaces);
    v.push(l.zero_subspace());
    v
}

/// Definitional oracle: scans every ideal, with the core computed as the
/// sum of the enumerated ideals inside `B`.
pub fn cideal_brute_force(l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<Option<Subspace>> {
    l.require_subalgebra(b)?;
    Ok(cideal_among(b, &enum_ideals(l, budget)?))
}

/// The same scan over a precomputed list of all ideals of `L`.
pub fn cideal_among(b: &Subspace, ideals: &[Subspace]) -> Option<Subspace> {
    let core = ideals
        .iter()
        .filter(|i| i.leq_unchecked(b))
        .fold(Subspace::zero(b.field(), b.ambient()), |acc, i| acc.sum_unchecked(i));
    ideals
        .iter()
        .find(|c| b.sum_unchecked(c).is_full() && b.intersect_unchecked(c).leq_unchecked(&core))
        .cloned()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrattiniCheck {
    pub pass: bool,
    pub verdict: CIdealVerdict,
    pub is_ideal: bool,
    pub in_frattini_ideal: bool,
    pub frattini_ideal: Subspace,
}

/// For `B ≤ F(C)` with `C` a subalgebra: if `B` is a c-ideal then `B` is an
/// ideal inside `φ(L)`.
pub fn frattini_consequence_check(
    l: &LieAlgebra,
    b: &Subspace,
    c_sub: &Subspace,
    budget: Budget,
) -> Result<FrattiniCheck> {
    let r = l.restrict(c_sub)?;
    let (f_local, _) = structure::frattini(&r.algebra, budget)?;
    let f = r.ambient_subspace(&f_local);
    l.check_subspace(b)?;
    if !b.leq_unchecked(&f) {
        return Err(Error::PreconditionUnmet(format!("{b} is not inside F(C) = {f}")));
    }
    let verdict = is_cideal(l, b, budget)?;
    let (_, phi) = structure::frattini(l, budget)?;
    let is_ideal = l.is_ideal_unchecked(b);
    let in_phi = b.leq_unchecked(&phi);
    Ok(FrattiniCheck {
        pass: !verdict.is_yes() || (is_ideal && in_phi),
        verdict,
        is_ideal,
        in_frattini_ideal: in_phi,
        frattini_ideal: phi,
    })
}
