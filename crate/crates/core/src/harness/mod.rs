//! Theorem-verification suites over catalogs and random algebras.
//!
//! Each suite turns one structural statement into an exhaustive check on a
//! single algebra and returns a [`TheoremReport`]. Suites whose hypotheses
//! cannot be met, such as enumeration over `Q` or an exhausted budget, are
//! reported as skipped, never as passing.

mod claims;
mod run;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::arith::Scalar;
use crate::cideal::{is_cideal, line_cideal, CIdealVerdict};
use crate::error::{Error, Result};
use crate::lattice::Budget;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

pub use claims::{replay, Claim, Replay, Witness};
pub use run::{cartan_statistics, fuzz, fuzz_id, run_catalog, CartanStats, FuzzConfig, FuzzFailure, FuzzSummary};
pub use suites::run_suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
    ];

    /// One-line statement of what the suite asserts.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => "every maximal subalgebra is a c-ideal iff L is solvable",
            TheoremId::T2 => "a solvable maximal subalgebra that is a c-ideal exists iff L is solvable",
            TheoremId::T3 => "all maximal nilpotent subalgebras c-ideals implies L solvable",
            TheoremId::T4 => "maximal nilpotent subalgebras of L/A lift to C + A",
            TheoremId::T5 => "solvable, with maximal subalgebras of maximal nilpotents c-ideals, implies supersolvable",
            TheoremId::T6 => "same premise with maximal nilpotents of dimension >= 2 implies supersolvable",
            TheoremId::T7 => "Fx is a c-ideal iff Fx is an ideal or x is not in L^2",
            TheoremId::T8 => "all lines c-ideals iff L^3 = 0 or L = A + B (abelian plus almost abelian)",
            TheoremId::T9 => "a c-ideal of L is a c-ideal of every intermediate subalgebra",
            TheoremId::T10 => "B is a c-ideal of L iff B/I is a c-ideal of L/I",
            TheoremId::T11 => "a c-ideal inside F(C) is an ideal inside the Frattini ideal",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", *self as usize + 1)
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        t.strip_prefix(['T', 't'])
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|n| (1..=11).contains(n))
            .map(|n| TheoremId::ALL[n - 1])
            .ok_or_else(|| Error::BadParams(format!("unknown suite `{t}`")))
    }
}

/// `all` or a comma separated list such as `T1,T7,T8`.
pub fn parse_suites(text: &str) -> Result<Vec<TheoremId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut v: Vec<TheoremId> = text.split(',').map(str::parse).collect::<Result<_>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub algebra_id: String,
    pub status: Status,
    /// Why a suite was skipped, or a short note on a pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Number of instances checked.
    pub checked: usize,
    pub witnesses: Vec<Witness>,
    #[serde(serialize_with = "micros")]
    pub timing: Duration,
}

fn micros<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_micros() as u64)
}

impl TheoremReport {
    /// Equality ignoring timing.
    pub fn same_outcome(&self, other: &TheoremReport) -> bool {
        self.theorem_id == other.theorem_id
            && self.algebra_id == other.algebra_id
            && self.status == other.status
            && self.reason == other.reason
            && self.checked == other.checked
            && self.witnesses == other.witnesses
    }
}

/// The c-ideal decision used by the suites. The enumeration oracles used for
/// replay never go through this trait, so a wrong decider shows up as a
/// failing report instead of a silently consistent one.
pub trait CIdealDecider: Sync {
    fn decide(&self, l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<CIdealVerdict>;

    fn decide_line(&self, l: &LieAlgebra, x: &[Scalar]) -> Result<CIdealVerdict> {
        line_cideal(l, x)
    }
}

/// The library's own decision procedure.
#[derive(Clone, Copy, Debug, Default)]
pub struct Engine;

impl CIdealDecider for Engine {
    fn decide(&self, l: &LieAlgebra, b: &Subspace, budget: Budget) -> Result<CIdealVerdict> {
        is_cideal(l, b, budget)
    }
}
