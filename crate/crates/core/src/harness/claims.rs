//! Witness claims and their independent replay.
//!
//! A failing report lists the facts it relied on as [`Claim`]s. Replaying
//! recomputes every fact through brute-force definitions (ideal
//! enumeration, pairwise maximality, flag search) instead of the decision
//! procedures that produced the report.

use serde::Serialize;

use crate::cideal::cideal_brute_force;
use crate::error::Result;
use crate::lattice::{enum_ideals, enum_subalgebras, Budget};
use crate::lie::LieAlgebra;
use crate::linalg::{Subspace, Vector};
use crate::structure::{self, supersolvable_by_search};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    Solvable { holds: bool },
    Supersolvable { holds: bool },
    /// `B` is (or is not) a c-ideal of `L`.
    CIdeal { b: Subspace, holds: bool },
    /// `B` is (or is not) a c-ideal of the subalgebra `K`.
    CIdealIn { k: Subspace, b: Subspace, holds: bool },
    /// `B/I` is (or is not) a c-ideal of `L/I`.
    CIdealModulo { i: Subspace, b: Subspace, holds: bool },
    /// These are exactly the maximal subalgebras of the subalgebra `of`.
    MaximalSubalgebras { of: Subspace, list: Vec<Subspace> },
    /// These are exactly the maximal nilpotent subalgebras of `L`.
    MaximalNilpotent { list: Vec<Subspace> },
    /// `U/A` is a maximal nilpotent subalgebra of `L/A`.
    MaximalNilpotentModulo { a: Subspace, u: Subspace },
    /// The classifier answer (`true` for either structural case).
    Classifier { all_lines: bool },
    Ideal { b: Subspace, holds: bool },
    /// `B ≤ φ(L)`.
    InFrattiniIdeal { b: Subspace, holds: bool },
    /// `B ≤ F(C)` for the subalgebra `C`.
    InFrattiniOf { c: Subspace, b: Subspace },
    MinimalAbelianIdeal { a: Subspace },
    CoreFreeMaximal { m: Subspace },
    /// `Fx` spans (or does not span) an ideal.
    LineIsIdeal { x: Vector, holds: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub summary: String,
    pub claims: Vec<Claim>,
}

impl Witness {
    pub fn new(summary: impl Into<String>, claims: Vec<Claim>) -> Self {
        Witness {
            summary: summary.into(),
            claims,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Replay {
    /// Per claim, whether the independent recomputation agrees.
    pub confirmed: Vec<bool>,
}

impl Replay {
    /// Every claim stands, so the witness contradicts the theorem itself.
    pub fn confirms_violation(&self) -> bool {
        self.confirmed.iter().all(|&c| c)
    }

    /// Indices of claims the recomputation refutes.
    pub fn refuted(&self) -> Vec<usize> {
        self.confirmed.iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| i).collect()
    }
}

pub fn replay(l: &LieAlgebra, w: &Witness, budget: Budget) -> Result<Replay> {
    let confirmed = w.claims.iter().map(|c| check(l, c, budget)).collect::<Result<_>>()?;
    Ok(Replay { confirmed })
}

/// Maximal elements by pairwise comparison.
fn maximal_among(items: &[Subspace]) -> Vec<Subspace> {
    items
        .iter()
        .filter(|s| !items.iter().any(|t| t.dim() > s.dim() && s.leq_unchecked(t)))
        .cloned()
        .collect()
}

fn sorted(mut v: Vec<Subspace>) -> Vec<Subspace> {
    v.sort();
    v
}

fn def_maximal_subalgebras(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    let proper: Vec<Subspace> = enum_subalgebras(l, budget)?.into_iter().filter(|s| !s.is_full()).collect();
    Ok(maximal_among(&proper))
}

fn def_maximal_nilpotent(l: &LieAlgebra, budget: Budget) -> Result<Vec<Subspace>> {
    let nil: Vec<Subspace> = enum_subalgebras(l, budget)?
        .into_iter()
        .filter(|s| structure::nilpotent_unchecked(l, s))
        .collect();
    Ok(maximal_among(&nil))
}

fn def_core(l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<Subspace> {
    Ok(enum_ideals(l, budget)?
        .iter()
        .filter(|i| i.leq_unchecked(b))
        .fold(l.zero_subspace(), |acc, i| acc.sum_unchecked(i)))
}

fn def_frattini(l: &LieAlgebra, budget: Budget) -> Result<Subspace> {
    Ok(def_maximal_subalgebras(l, budget)?
        .iter()
        .fold(l.full_subspace(), |acc, m| acc.intersect_unchecked(m)))
}

fn check(l: &LieAlgebra, claim: &Claim, budget: Budget) -> Result<bool> {
    Ok(match claim {
        Claim::Solvable { holds } => l.derived_series().reaches_zero() == *holds,
        Claim::Supersolvable { holds } => supersolvable_by_search(l, budget)? == *holds,
        Claim::CIdeal { b, holds } => l.is_subalgebra(b)? && cideal_brute_force(l, b, budget)?.is_some() == *holds,
        Claim::CIdealIn { k, b, holds } => {
            let r = l.restrict(k)?;
            let local = r.local_subspace(b)?;
            r.algebra.is_subalgebra(&local)? && cideal_brute_force(&r.algebra, &local, budget)?.is_some() == *holds
        }
        Claim::CIdealModulo { i, b, holds } => {
            let q = l.quotient(i)?;
            let bb = q.project_subspace(b);
            i.leq(b)? && cideal_brute_force(&q.algebra, &bb, budget)?.is_some() == *holds
        }
        Claim::MaximalSubalgebras { of, list } => {
            let r = l.restrict(of)?;
            let found: Vec<Subspace> = def_maximal_subalgebras(&r.algebra, budget)?
                .iter()
                .map(|m| r.ambient_subspace(m))
                .collect();
            sorted(found) == sorted(list.clone())
        }
        Claim::MaximalNilpotent { list } => sorted(def_maximal_nilpotent(l, budget)?) == sorted(list.clone()),
        Claim::MaximalNilpotentModulo { a, u } => {
            let q = l.quotient(a)?;
            a.leq(u)? && def_maximal_nilpotent(&q.algebra, budget)?.contains(&q.project_subspace(u))
        }
        Claim::Classifier { all_lines } => structure::classify_thm52(l).all_lines_cideal() == *all_lines,
        Claim::Ideal { b, holds } => l.is_ideal(b)? == *holds,
        Claim::InFrattiniIdeal { b, holds } => {
            let f = def_frattini(l, budget)?;
            b.leq(&def_core(l, &f, budget)?)? == *holds
        }
        Claim::InFrattiniOf { c, b } => {
            let r = l.restrict(c)?;
            let f = r.ambient_subspace(&def_frattini(&r.algebra, budget)?);
            b.leq(&f)?
        }
        Claim::MinimalAbelianIdeal { a } => {
            let ideals = enum_ideals(l, budget)?;
            !a.is_zero()
                && ideals.contains(a)
                && l.span_product(a, a)?.is_zero()
                && !ideals.iter().any(|j| !j.is_zero() && j.dim() < a.dim() && j.leq_unchecked(a))
        }
        Claim::CoreFreeMaximal { m } => {
            def_maximal_subalgebras(l, budget)?.contains(m) && def_core(l, m, budget)?.is_zero()
        }
        Claim::LineIsIdeal { x, holds } => l.is_ideal(&crate::lattice::line(l, x)?)? == *holds,
    })
}
