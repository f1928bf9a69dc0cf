use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::time::Instant;

use super::claims::{Claim, Witness};
use super::{CIdealDecider, Status, TheoremId, TheoremReport};
use crate::cideal::{cideal_among, verify_certificate, Answer};
use crate::error::{Error, Result};
use crate::lattice::{
    enum_ideals, enum_subalgebras, maximal_nilpotent_subalgebras, maximal_subalgebras, projective_points, Budget,
};
use crate::lie::LieAlgebra;
use crate::linalg::{vector, Subspace, Vector};
use crate::structure::{self, classify_thm52, is_solvable, is_supersolvable, minimal_ideals};

enum Outcome {
    Pass { checked: usize, note: Option<String> },
    Fail { checked: usize, witnesses: Vec<Witness> },
    Skip(String),
}

fn pass(checked: usize) -> Result<Outcome> {
    Ok(Outcome::Pass { checked, note: None })
}

fn fail(checked: usize, w: Witness) -> Result<Outcome> {
    Ok(Outcome::Fail {
        checked,
        witnesses: vec![w],
    })
}

const NEEDS_FINITE: &str = "requires subalgebra enumeration, available over prime fields only";

/// Lazily computed enumerations shared by the suites of one algebra.
struct Ctx<'a> {
    l: &'a LieAlgebra,
    budget: Budget,
    decider: &'a dyn CIdealDecider,
    subalgebras: OnceCell<Vec<Subspace>>,
    ideals: OnceCell<Vec<Subspace>>,
    maximal: OnceCell<Vec<Subspace>>,
    maxnilp: OnceCell<Vec<Subspace>>,
    verdicts: RefCell<HashMap<Subspace, bool>>,
}

fn cached(cell: &OnceCell<Vec<Subspace>>, f: impl FnOnce() -> Result<Vec<Subspace>>) -> Result<&[Subspace]> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

/// A decided answer; `Unknown` cannot occur where enumeration is possible.
fn decided(answer: Answer) -> Result<bool> {
    match answer {
        Answer::Yes => Ok(true),
        Answer::No => Ok(false),
        Answer::Unknown => Err(Error::PreconditionUnmet("undecided c-ideal verdict over a prime field".into())),
    }
}

impl<'a> Ctx<'a> {
    fn subalgebras(&self) -> Result<&[Subspace]> {
        cached(&self.subalgebras, || enum_subalgebras(self.l, self.budget))
    }

    fn ideals(&self) -> Result<&[Subspace]> {
        cached(&self.ideals, || enum_ideals(self.l, self.budget))
    }

    fn maximal(&self) -> Result<&[Subspace]> {
        cached(&self.maximal, || maximal_subalgebras(self.l, self.budget))
    }

    fn maxnilp(&self) -> Result<&[Subspace]> {
        cached(&self.maxnilp, || maximal_nilpotent_subalgebras(self.l, self.budget))
    }

    fn cideal(&self, b: &Subspace) -> Result<bool> {
        if let Some(&v) = self.verdicts.borrow().get(b) {
            return Ok(v);
        }
        let v = decided(self.decider.decide(self.l, b, self.budget)?.answer)?;
        self.verdicts.borrow_mut().insert(b.clone(), v);
        Ok(v)
    }

    fn cideal_in(&self, l: &LieAlgebra, b: &Subspace) -> Result<bool> {
        decided(self.decider.decide(l, b, self.budget)?.answer)
    }
}

/// Runs the selected suites on one algebra, in suite order.
pub fn run_suite(
    l: &LieAlgebra,
    algebra_id: &str,
    suites: &[TheoremId],
    budget: Budget,
    decider: &dyn CIdealDecider,
) -> Vec<TheoremReport> {
    let ctx = Ctx {
        l,
        budget,
        decider,
        subalgebras: OnceCell::new(),
        ideals: OnceCell::new(),
        maximal: OnceCell::new(),
        maxnilp: OnceCell::new(),
        verdicts: RefCell::new(HashMap::new()),
    };
    let mut ids = suites.to_vec();
    ids.sort();
    ids.dedup();
    ids.into_iter()
        .map(|id| {
            let start = Instant::now();
            let finite = l.field().is_finite();
            let outcome = match id {
                TheoremId::T2 => t2(&ctx),
                TheoremId::T8 => t8(&ctx),
                _ if !finite => Ok(Outcome::Skip(NEEDS_FINITE.into())),
                TheoremId::T1 => t1(&ctx),
                TheoremId::T3 => t3(&ctx),
                TheoremId::T4 => t4(&ctx),
                TheoremId::T5 => t5(&ctx),
                TheoremId::T6 => t6(&ctx),
                TheoremId::T7 => t7(&ctx),
                TheoremId::T9 => t9(&ctx),
                TheoremId::T10 => t10(&ctx),
                TheoremId::T11 => t11(&ctx),
            };
            report(id, algebra_id, outcome, start)
        })
        .collect()
}

fn report(id: TheoremId, algebra_id: &str, outcome: Result<Outcome>, start: Instant) -> TheoremReport {
    let (status, reason, checked, witnesses) = match outcome {
        Ok(Outcome::Pass { checked, note }) => (Status::Pass, note, checked, Vec::new()),
        Ok(Outcome::Fail { checked, witnesses }) => (Status::Fail, None, checked, witnesses),
        Ok(Outcome::Skip(r)) => (Status::Skipped, Some(r), 0, Vec::new()),
        Err(e @ (Error::BudgetExceeded { .. } | Error::FieldNotFinite(_))) => {
            (Status::Skipped, Some(e.to_string()), 0, Vec::new())
        }
        Err(e) => (
            Status::Fail,
            Some(e.to_string()),
            0,
            vec![Witness::new(format!("decision procedure error: {e}"), Vec::new())],
        ),
    };
    TheoremReport {
        theorem_id: id,
        algebra_id: algebra_id.to_string(),
        status,
        reason,
        checked,
        witnesses,
        timing: start.elapsed(),
    }
}

fn t1(ctx: &Ctx) -> Result<Outcome> {
    let solvable = is_solvable(ctx.l);
    let max = ctx.maximal()?;
    let mut non = Vec::new();
    for m in max {
        if !ctx.cideal(m)? {
            non.push(m.clone());
        }
    }
    let listing = Claim::MaximalSubalgebras {
        of: ctx.l.full_subspace(),
        list: max.to_vec(),
    };
    match (solvable, non.first()) {
        (true, None) | (false, Some(_)) => pass(max.len()),
        (true, Some(m)) => fail(
            max.len(),
            Witness::new(
                "solvable, but a maximal subalgebra is not a c-ideal",
                vec![Claim::Solvable { holds: true }, listing, Claim::CIdeal { b: m.clone(), holds: false }],
            ),
        ),
        (false, None) => {
            let mut claims = vec![Claim::Solvable { holds: false }, listing];
            claims.extend(max.iter().map(|m| Claim::CIdeal { b: m.clone(), holds: true }));
            fail(max.len(), Witness::new("not solvable, yet every maximal subalgebra is a c-ideal", claims))
        }
    }
}

/// Codimension-one subalgebras that can be written down without
/// enumeration: hyperplanes above `L²` and coordinate hyperplanes.
fn hyperplane_candidates(l: &LieAlgebra) -> Vec<Subspace> {
    let n = l.dim();
    let d = l.derived_algebra();
    let reps = d.complement_reps();
    let mut out = Vec::new();
    for skip in 0..reps.len() {
        let others: Vec<Vector> = reps.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, r)| r.clone()).collect();
        out.push(d.extend_unchecked(&others));
    }
    for skip in 0..n {
        let units: Vec<Vector> = (0..n).filter(|&k| k != skip).map(|k| l.unit(k)).collect();
        let h = l.zero_subspace().extend_unchecked(&units);
        if l.is_subalgebra_unchecked(&h) && !out.contains(&h) {
            out.push(h);
        }
    }
    out
}

fn t2(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    if l.dim() == 0 {
        return Ok(Outcome::Skip("the zero algebra has no maximal subalgebras".into()));
    }
    let solvable = is_solvable(l);
    if l.field().is_finite() {
        if !solvable {
            return Ok(Outcome::Skip(
                "the converse direction needs characteristic zero, or an algebraically closed field of characteristic > 5"
                    .into(),
            ));
        }
        let max = ctx.maximal()?;
        for m in max {
            if structure::solvable_unchecked(l, m) && ctx.cideal(m)? {
                return pass(max.len());
            }
        }
        let mut claims = vec![
            Claim::Solvable { holds: true },
            Claim::MaximalSubalgebras {
                of: l.full_subspace(),
                list: max.to_vec(),
            },
        ];
        claims.extend(
            max.iter()
                .filter(|m| structure::solvable_unchecked(l, m))
                .map(|m| Claim::CIdeal { b: m.clone(), holds: false }),
        );
        return fail(max.len(), Witness::new("solvable, but no solvable maximal subalgebra is a c-ideal", claims));
    }
    // characteristic zero: only certificate-backed answers count
    let candidates = hyperplane_candidates(l);
    for m in &candidates {
        if !structure::solvable_unchecked(l, m) {
            continue;
        }
        let v = ctx.decider.decide(l, m, ctx.budget)?;
        let certified = v.answer == Answer::Yes && v.certificate.as_ref().is_some_and(|c| verify_certificate(l, m, c));
        if certified {
            return if solvable {
                pass(candidates.len())
            } else {
                fail(
                    candidates.len(),
                    Witness::new(
                        "a solvable maximal subalgebra is a c-ideal of a non-solvable algebra",
                        vec![Claim::Solvable { holds: false }, Claim::CIdeal { b: m.clone(), holds: true }],
                    ),
                )
            };
        }
    }
    Ok(Outcome::Skip("no certified solvable maximal c-ideal among the codimension-one candidates".into()))
}

fn t3(ctx: &Ctx) -> Result<Outcome> {
    let maxnilp = ctx.maxnilp()?;
    for c in maxnilp {
        if !ctx.cideal(c)? {
            return pass(maxnilp.len());
        }
    }
    if is_solvable(ctx.l) {
        return pass(maxnilp.len());
    }
    let mut claims = vec![
        Claim::Solvable { holds: false },
        Claim::MaximalNilpotent { list: maxnilp.to_vec() },
    ];
    claims.extend(maxnilp.iter().map(|c| Claim::CIdeal { b: c.clone(), holds: true }));
    fail(maxnilp.len(), Witness::new("every maximal nilpotent subalgebra is a c-ideal of a non-solvable algebra", claims))
}

fn t4(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let maxnilp = ctx.maxnilp()?;
    let mut checked = 0;
    for a in ctx.ideals()? {
        let q = l.quotient(a)?;
        for ub in maximal_nilpotent_subalgebras(&q.algebra, ctx.budget)? {
            let u = q.preimage(&ub);
            checked += 1;
            if !maxnilp.iter().any(|c| c.sum_unchecked(a) == u) {
                return fail(
                    checked,
                    Witness::new(
                        "a maximal nilpotent subalgebra of L/A is not C + A",
                        vec![
                            Claim::MaximalNilpotentModulo { a: a.clone(), u },
                            Claim::MaximalNilpotent { list: maxnilp.to_vec() },
                        ],
                    ),
                );
            }
        }
    }
    pass(checked)
}

/// Every maximal subalgebra of every maximal nilpotent subalgebra is a
/// c-ideal. Returns the claims supporting the answer and, when it fails,
/// the offending subalgebra.
struct Premise {
    holds: bool,
    claims: Vec<Claim>,
    min_maxnilp_dim: usize,
}

fn premise(ctx: &Ctx) -> Result<Premise> {
    let l = ctx.l;
    let maxnilp = ctx.maxnilp()?;
    let mut claims = vec![Claim::MaximalNilpotent { list: maxnilp.to_vec() }];
    for c in maxnilp {
        let r = l.restrict(c)?;
        let subs: Vec<Subspace> = maximal_subalgebras(&r.algebra, ctx.budget)?
            .iter()
            .map(|d| r.ambient_subspace(d))
            .collect();
        claims.push(Claim::MaximalSubalgebras {
            of: c.clone(),
            list: subs.clone(),
        });
        for d in subs {
            let yes = ctx.cideal(&d)?;
            claims.push(Claim::CIdeal { b: d, holds: yes });
            if !yes {
                return Ok(Premise {
                    holds: false,
                    claims,
                    min_maxnilp_dim: 0,
                });
            }
        }
    }
    Ok(Premise {
        holds: true,
        claims,
        min_maxnilp_dim: maxnilp.iter().map(Subspace::dim).min().unwrap_or(0),
    })
}

/// The same premise evaluated in `L/A`, through the decider.
fn premise_modulo(ctx: &Ctx, a: &Subspace) -> Result<Option<Vec<Claim>>> {
    let q = ctx.l.quotient(a)?;
    for ub in maximal_nilpotent_subalgebras(&q.algebra, ctx.budget)? {
        let r = q.algebra.restrict(&ub)?;
        for d in maximal_subalgebras(&r.algebra, ctx.budget)? {
            let db = r.ambient_subspace(&d);
            if !ctx.cideal_in(&q.algebra, &db)? {
                return Ok(Some(vec![
                    Claim::MaximalNilpotentModulo {
                        a: a.clone(),
                        u: q.preimage(&ub),
                    },
                    Claim::CIdealModulo {
                        i: a.clone(),
                        b: q.preimage(&db),
                        holds: false,
                    },
                ]));
            }
        }
    }
    Ok(None)
}

/// The two reduction lemmas behind the supersolvability results, checked on
/// the minimal abelian ideals when the premise holds.
fn lemma_fixtures(ctx: &Ctx, p: &Premise) -> Result<Option<Witness>> {
    let l = ctx.l;
    let minimal_abelian: Vec<Subspace> = minimal_ideals(l, ctx.budget)?
        .into_iter()
        .filter(|a| l.span_product_unchecked(a, a).is_zero())
        .collect();
    let core_free = ctx
        .maximal()?
        .iter()
        .find(|m| crate::lattice::core_of(l, m).map(|c| c.is_zero()).unwrap_or(false))
        .cloned();
    for a in &minimal_abelian {
        if let Some(extra) = premise_modulo(ctx, a)? {
            let mut claims = p.claims.clone();
            claims.push(Claim::MinimalAbelianIdeal { a: a.clone() });
            claims.extend(extra);
            return Ok(Some(Witness::new("the premise does not pass to L/A", claims)));
        }
        if let Some(m) = &core_free {
            if a.dim() != 1 {
                let mut claims = p.claims.clone();
                claims.push(Claim::MinimalAbelianIdeal { a: a.clone() });
                claims.push(Claim::CoreFreeMaximal { m: m.clone() });
                return Ok(Some(Witness::new(
                    "a core-free maximal subalgebra exists but a minimal abelian ideal is not a line",
                    claims,
                )));
            }
        }
    }
    Ok(None)
}

fn t5(ctx: &Ctx) -> Result<Outcome> {
    let p = premise(ctx)?;
    if !p.holds {
        return pass(1);
    }
    if let Some(w) = lemma_fixtures(ctx, &p)? {
        return fail(1, w);
    }
    let solvable = is_solvable(ctx.l);
    if !solvable || is_supersolvable(ctx.l) {
        return Ok(Outcome::Pass {
            checked: 1,
            note: solvable.then(|| "premise holds; supersolvable".to_string()),
        });
    }
    let mut claims = p.claims;
    claims.push(Claim::Solvable { holds: true });
    claims.push(Claim::Supersolvable { holds: false });
    fail(1, Witness::new("solvable and the premise holds, but not supersolvable", claims))
}

fn t6(ctx: &Ctx) -> Result<Outcome> {
    let p = premise(ctx)?;
    if !p.holds || p.min_maxnilp_dim < 2 || is_supersolvable(ctx.l) {
        return pass(1);
    }
    let mut claims = p.claims;
    claims.push(Claim::Supersolvable { holds: false });
    fail(
        1,
        Witness::new("maximal nilpotents of dimension >= 2 and the premise holds, but not supersolvable", claims),
    )
}

fn t7(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let d = l.derived_algebra();
    let ideals = ctx.ideals()?;
    let mut checked = 0;
    for x in projective_points(l.field(), l.dim(), ctx.budget)? {
        let line = Subspace::span_unchecked(l.field(), l.dim(), vec![x.clone()]);
        let decided = ctx.decider.decide_line(l, &x)?;
        let oracle = cideal_among(&line, ideals).is_some();
        let ideal = l.is_ideal_unchecked(&line);
        let rule = ideal || !d.contains_unchecked(&x);
        checked += 1;
        if decided.is_yes() != oracle {
            return fail(
                checked,
                Witness::new(
                    "line verdict disagrees with the enumeration",
                    vec![Claim::CIdeal {
                        b: line,
                        holds: decided.is_yes(),
                    }],
                ),
            );
        }
        if rule != oracle {
            return fail(
                checked,
                Witness::new(
                    "the ideal-or-outside-L^2 rule disagrees with the enumeration",
                    vec![
                        Claim::CIdeal { b: line, holds: oracle },
                        Claim::LineIsIdeal { x, holds: ideal },
                    ],
                ),
            );
        }
    }
    pass(checked)
}

fn t8(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let predicted = classify_thm52(l).all_lines_cideal();
    if !l.field().is_finite() {
        if !predicted {
            return Ok(Outcome::Skip("over Q only the classifier-positive direction can be spot-checked".into()));
        }
        let n = l.dim();
        let mut spots: Vec<Vector> = (0..n).map(|i| l.unit(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                spots.push(vector::add(&l.unit(i), &l.unit(j)));
            }
        }
        for x in &spots {
            if !ctx.decider.decide_line(l, x)?.is_yes() {
                let b = Subspace::span_unchecked(l.field(), n, vec![x.clone()]);
                return fail(
                    spots.len(),
                    Witness::new(
                        "classifier says every line is a c-ideal, but one is not",
                        vec![Claim::Classifier { all_lines: true }, Claim::CIdeal { b, holds: false }],
                    ),
                );
            }
        }
        return pass(spots.len());
    }
    let mut lines = Vec::new();
    let mut bad = None;
    for x in projective_points(l.field(), l.dim(), ctx.budget)? {
        let yes = ctx.decider.decide_line(l, &x)?.is_yes();
        let line = Subspace::span_unchecked(l.field(), l.dim(), vec![x]);
        if !yes && bad.is_none() {
            bad = Some(line.clone());
        }
        lines.push(line);
    }
    let checked = lines.len();
    match (predicted, bad) {
        (true, Some(b)) => {
            return fail(
                checked,
                Witness::new(
                    "classifier positive, but a line is not a c-ideal",
                    vec![Claim::Classifier { all_lines: true }, Claim::CIdeal { b, holds: false }],
                ),
            )
        }
        (false, None) => {
            let mut claims = vec![Claim::Classifier { all_lines: false }];
            claims.extend(lines.into_iter().map(|b| Claim::CIdeal { b, holds: true }));
            return fail(checked, Witness::new("classifier negative, yet every line is a c-ideal", claims));
        }
        _ => {}
    }
    // all lines c-ideals iff every x in L² spans an ideal
    let d = l.derived_algebra();
    let mut derived_lines_ideal = true;
    let mut offending = None;
    for p in projective_points(l.field(), d.dim(), ctx.budget)? {
        let x = d.combine(&p);
        if !l.is_ideal_unchecked(&Subspace::span_unchecked(l.field(), l.dim(), vec![x.clone()])) {
            derived_lines_ideal = false;
            offending = Some(x);
            break;
        }
    }
    if derived_lines_ideal != predicted {
        let mut claims = vec![Claim::Classifier { all_lines: predicted }];
        if let Some(x) = offending {
            claims.push(Claim::LineIsIdeal { x, holds: false });
        }
        return fail(checked, Witness::new("all-lines criterion disagrees with lines inside L^2", claims));
    }
    pass(checked)
}

fn t9(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let subs = ctx.subalgebras()?;
    let mut checked = 0;
    for b in subs {
        if !ctx.cideal(b)? {
            continue;
        }
        for k in subs.iter().filter(|k| b.leq_unchecked(k)) {
            let r = l.restrict(k)?;
            let local = r.local_subspace(b)?;
            checked += 1;
            if !ctx.cideal_in(&r.algebra, &local)? {
                return fail(
                    checked,
                    Witness::new(
                        "a c-ideal of L is not a c-ideal of an intermediate subalgebra",
                        vec![
                            Claim::CIdeal { b: b.clone(), holds: true },
                            Claim::CIdealIn {
                                k: k.clone(),
                                b: b.clone(),
                                holds: false,
                            },
                        ],
                    ),
                );
            }
        }
    }
    pass(checked)
}

fn t10(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let ideals = ctx.ideals()?;
    let mut checked = 0;
    for b in ctx.subalgebras()? {
        let upstairs = ctx.cideal(b)?;
        for i in ideals.iter().filter(|i| i.leq_unchecked(b)) {
            let q = l.quotient(i)?;
            let downstairs = ctx.cideal_in(&q.algebra, &q.project_subspace(b))?;
            checked += 1;
            if upstairs != downstairs {
                return fail(
                    checked,
                    Witness::new(
                        "c-ideal verdicts differ between L and L/I",
                        vec![
                            Claim::CIdeal {
                                b: b.clone(),
                                holds: upstairs,
                            },
                            Claim::CIdealModulo {
                                i: i.clone(),
                                b: b.clone(),
                                holds: downstairs,
                            },
                        ],
                    ),
                );
            }
        }
    }
    pass(checked)
}

fn t11(ctx: &Ctx) -> Result<Outcome> {
    let l = ctx.l;
    let (_, phi) = structure::frattini(l, ctx.budget)?;
    let subs = ctx.subalgebras()?;
    let mut checked = 0;
    for c in subs {
        let r = l.restrict(c)?;
        let (f_local, _) = structure::frattini(&r.algebra, ctx.budget)?;
        let f = r.ambient_subspace(&f_local);
        for b in subs.iter().filter(|b| b.leq_unchecked(&f)) {
            checked += 1;
            if !ctx.cideal(b)? {
                continue;
            }
            let ideal = l.is_ideal_unchecked(b);
            let inside = b.leq_unchecked(&phi);
            if !(ideal && inside) {
                return fail(
                    checked,
                    Witness::new(
                        "a c-ideal inside F(C) is not an ideal inside the Frattini ideal",
                        vec![
                            Claim::InFrattiniOf {
                                c: c.clone(),
                                b: b.clone(),
                            },
                            Claim::CIdeal { b: b.clone(), holds: true },
                            Claim::Ideal { b: b.clone(), holds: ideal },
                            Claim::InFrattiniIdeal { b: b.clone(), holds: inside },
                        ],
                    ),
                );
            }
        }
    }
    pass(checked)
}
