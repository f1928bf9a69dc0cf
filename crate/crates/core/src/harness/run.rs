use rayon::prelude::*;
use serde::Serialize;

use super::{run_suite, CIdealDecider, Status, TheoremId, TheoremReport};
use crate::arith::Field;
use crate::catalog::{random_solvable, AlgebraDocument, Family};
use crate::error::Result;
use crate::lattice::{cartan_subalgebras, Budget};
use crate::lie::LieAlgebra;

/// Runs the suites on every entry in parallel. Reports are sorted by
/// algebra id, then suite.
pub fn run_catalog(
    entries: &[(String, LieAlgebra)],
    suites: &[TheoremId],
    budget: Budget,
    decider: &dyn CIdealDecider,
) -> Vec<TheoremReport> {
    let mut reports: Vec<TheoremReport> = entries
        .par_iter()
        .flat_map_iter(|(id, l)| run_suite(l, id, suites, budget, decider))
        .collect();
    reports.sort_by(|a, b| (&a.algebra_id, a.theorem_id).cmp(&(&b.algebra_id, b.theorem_id)));
    reports
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: u64,
    pub field: Field,
    pub family: Family,
    pub ambient: usize,
    pub suites: Vec<TheoremId>,
    pub budget: Budget,
}

#[derive(Clone, Debug)]
pub struct FuzzFailure {
    pub document: AlgebraDocument,
    pub report: TheoremReport,
}

#[derive(Clone, Debug)]
pub struct FuzzSummary {
    pub algebras: usize,
    pub reports: Vec<TheoremReport>,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn count(&self, status: Status) -> usize {
        self.reports.iter().filter(|r| r.status == status).count()
    }
}

/// Number of random generators used for `seed`.
fn generators(seed: u64) -> usize {
    1 + (seed % 3) as usize
}

pub fn fuzz_id(field: Field, family: Family, ambient: usize, seed: u64) -> String {
    let tag = match family {
        Family::UpperTriangular => "t",
        Family::StrictlyUpper => "n",
    };
    format!("fuzz-{field}-{tag}{ambient}-s{seed}")
}

/// Runs the suites on `count` seeded samples starting at `seed`. Failing
/// samples come back as documents tagged with their seed for replay.
pub fn fuzz(cfg: &FuzzConfig, decider: &dyn CIdealDecider) -> Result<FuzzSummary> {
    let samples: Vec<(u64, LieAlgebra)> = (cfg.seed..cfg.seed + cfg.count)
        .map(|s| Ok((s, random_solvable(s, cfg.field, cfg.family, cfg.ambient, generators(s))?)))
        .collect::<Result<_>>()?;
    let per_sample: Vec<(u64, &LieAlgebra, Vec<TheoremReport>)> = samples
        .par_iter()
        .map(|(s, l)| {
            let id = fuzz_id(cfg.field, cfg.family, cfg.ambient, *s);
            (*s, l, run_suite(l, &id, &cfg.suites, cfg.budget, decider))
        })
        .collect();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (s, l, rs) in per_sample {
        for r in rs {
            if r.status == Status::Fail {
                let document = AlgebraDocument::new(l.clone())
                    .with_meta("seed", s)
                    .with_meta("generators", generators(s))
                    .with_meta("ambient", cfg.ambient)
                    .with_meta("suite", r.theorem_id);
                failures.push(FuzzFailure {
                    document,
                    report: r.clone(),
                });
            }
            reports.push(r);
        }
    }
    Ok(FuzzSummary {
        algebras: samples.len(),
        reports,
        failures,
    })
}

/// How many Cartan subalgebras are c-ideals. Informational only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanStats {
    pub algebra_id: String,
    pub cartans: usize,
    pub cideals: usize,
    pub solvable: bool,
}

pub fn cartan_statistics(
    entries: &[(String, LieAlgebra)],
    budget: Budget,
    decider: &dyn CIdealDecider,
) -> Result<Vec<CartanStats>> {
    entries
        .par_iter()
        .map(|(id, l)| {
            let cartans = cartan_subalgebras(l, budget)?;
            let mut cideals = 0;
            for h in &cartans {
                if decider.decide(l, h, budget)?.is_yes() {
                    cideals += 1;
                }
            }
            Ok(CartanStats {
                algebra_id: id.clone(),
                cartans: cartans.len(),
                cideals,
                solvable: crate::structure::is_solvable(l),
            })
        })
        .collect()
}
