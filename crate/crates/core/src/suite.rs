//! The desk-scale acceptance sweep: every identity checked exactly over
//! fixed parameter ranges.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::Rational;
use crate::structure::{
    c_coeff, mn_combination, multiply_p, p_expand, partitions, straighten_measure, Partition,
    Rewrite,
};
use crate::tring::TPoly;
use crate::vertex::{LambdaVector, RhoSpec};
use crate::virasoro::{TheoremCase, Verifier};

/// Result of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
    /// Failure descriptions, in deterministic order.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2}: {} ({} checks, {} failed)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks,
            self.failed
        )
    }
}

/// Outcome of a single check: `Ok(())` or a description of the failure.
type Outcome = std::result::Result<(), String>;

struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn absorb(&mut self, outcomes: Vec<Outcome>) {
        self.checks += outcomes.len();
        self.failures.extend(outcomes.into_iter().filter_map(|o| o.err()));
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.absorb(vec![if ok { Ok(()) } else { Err(what()) }]);
    }

    fn finish(self, id: u32, title: &str, start: Instant) -> CriterionReport {
        let failed = self.failures.len();
        CriterionReport {
            id,
            title: title.to_string(),
            passed: failed == 0,
            checks: self.checks,
            failed,
            failures: self.failures,
            notes: self.notes,
            elapsed: start.elapsed(),
        }
    }
}

fn run_cases(v: &Verifier, cases: &[TheoremCase]) -> Vec<Outcome> {
    cases
        .par_iter()
        .map(|c| match v.verify(c) {
            Ok(verdict) if verdict.equal => Ok(()),
            Ok(verdict) => Err(format!("{c:?}: diff {}", verdict.diff)),
            Err(e) => Err(format!("{c:?}: {e}")),
        })
        .collect()
}

/// All integer vectors of length ≤ `max_len` with parts in `[lo, hi]` and
/// part sum ≤ `max_size`, including the empty vector.
pub fn vectors(max_len: usize, lo: i64, hi: i64, max_size: i64) -> Vec<LambdaVector> {
    let mut out = vec![LambdaVector::empty()];
    let mut layer = vec![Vec::<i64>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for x in lo..=hi {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out.extend(
            next.iter()
                .filter(|w| w.iter().sum::<i64>() <= max_size)
                .map(|w| LambdaVector(w.clone())),
        );
        layer = next;
    }
    out
}

/// Partitions of size ≤ `max_size` with at most `max_len` parts, as labels.
pub fn partition_labels(max_size: u32, max_len: usize) -> Vec<LambdaVector> {
    (0..=max_size)
        .flat_map(partitions)
        .filter(|p| p.len() <= max_len)
        .map(|p| p.to_lambda())
        .collect()
}

fn xi(n: u32) -> RhoSpec {
    RhoSpec::xi(n).expect("n ≥ 2")
}

fn zero_rho() -> RhoSpec {
    RhoSpec::Value(Rational::zero())
}

fn theorem_1_2_labels() -> Vec<LambdaVector> {
    let mut labels = partition_labels(6, 3);
    for extra in [vec![0], vec![0, 2], vec![2, -1, 1], vec![1, 0, 2]] {
        labels.push(LambdaVector(extra));
    }
    labels
}

pub const TITLES: [&str; 11] = [
    "L_m^(n) on Q^(n), m >= 0",
    "L_-m^(n) on Q^(n)",
    "Lhat_-m^(n) on Q^(n)",
    "Virasoro bracket with central term",
    "multiplication formula and power-sum expansion",
    "derivative formula",
    "straightening soundness and termination",
    "coefficient spot checks",
    "Schur operators, base and hook identities, border strips",
    "no t_kn in Q^(n)",
    "vertex operator lemmas",
];

/// Run criterion `id` (1 to 11).
pub fn run_criterion(id: u32, v: &Verifier) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    match id {
        1 => criterion_t1_1(v, &mut t),
        2 => criterion_t1_2(v, &mut t),
        3 => {
            let cases = cross_12(|n, m, lambda| TheoremCase::T3_3 { n, m, lambda });
            t.absorb(run_cases(v, &cases));
        }
        4 => criterion_bracket(v, &mut t),
        5 => criterion_mult(v, &mut t),
        6 => criterion_deriv(v, &mut t),
        7 => criterion_straighten(v, &mut t),
        8 => criterion_coefficients(&mut t),
        9 => criterion_schur(v, &mut t),
        10 => criterion_root_free(v, &mut t),
        11 => criterion_lemmas(v, &mut t),
        _ => t.check(false, || format!("no criterion {id}")),
    }
    let title = TITLES.get(id as usize - 1).copied().unwrap_or("unknown");
    t.finish(id, title, start)
}

/// Criteria 1 to 11 in order.
pub fn run_desk(v: &Verifier) -> Vec<CriterionReport> {
    (1..=11).map(|id| run_criterion(id, v)).collect()
}

fn criterion_t1_1(v: &Verifier, t: &mut Tally) {
    let labels = vectors(3, -2, 4, 8);
    let mut cases = Vec::new();
    for n in 2..=4 {
        for m in 0..=2 {
            for lambda in &labels {
                cases.push(TheoremCase::T1_1 { n, m, lambda: lambda.clone() });
            }
        }
    }
    t.absorb(run_cases(v, &cases));
}

fn cross_12<F: Fn(u32, i64, LambdaVector) -> TheoremCase>(make: F) -> Vec<TheoremCase> {
    let labels = theorem_1_2_labels();
    let mut cases = Vec::new();
    for n in 2..=3 {
        for m in 1..=2 {
            for lambda in &labels {
                cases.push(make(n, m, lambda.clone()));
            }
        }
    }
    cases
}

fn criterion_t1_2(v: &Verifier, t: &mut Tally) {
    let cases = cross_12(|n, m, lambda| TheoremCase::T1_2 { n, m, lambda });
    t.absorb(run_cases(v, &cases));
    let anchor = TheoremCase::T1_2 { n: 2, m: 1, lambda: LambdaVector(vec![0]) };
    match v.verify(&anchor) {
        Ok(verdict) => {
            let both = (verdict.lhs.to_text(), verdict.rhs.to_text());
            t.check(
                verdict.equal && both.0 == "1/2*t1^2" && both.1 == "1/2*t1^2",
                || format!("anchor sides {} and {}", both.0, both.1),
            );
        }
        Err(e) => t.check(false, || format!("anchor: {e}")),
    }
}

fn criterion_bracket(v: &Verifier, t: &mut Tally) {
    let mut cases = Vec::new();
    for n in 2..=3u32 {
        for i in -2..=2i64 {
            for j in -2..=2i64 {
                cases.push(TheoremCase::Bracket { n, i, j, degree: 8 });
            }
        }
    }
    let outcomes: Vec<Outcome> = cases
        .par_iter()
        .map(|c| {
            let TheoremCase::Bracket { n, i, j, .. } = *c else { unreachable!() };
            let verdict = v.verify(c).map_err(|e| format!("{c:?}: {e}"))?;
            if !verdict.equal {
                return Err(format!("{c:?}: diff {}", verdict.diff));
            }
            let nn = n as i64;
            let want = if i + j == 0 {
                Rational::new(nn * nn * (nn - 1) * (i * i * i - i), 12)
            } else {
                Rational::zero()
            };
            let got = verdict.central.and_then(|s| s.as_rational());
            if got != Some(want.clone()) {
                return Err(format!("{c:?}: central {got:?}, expected {want}"));
            }
            Ok(())
        })
        .collect();
    t.absorb(outcomes);
    let two = v
        .verify(&TheoremCase::Bracket { n: 2, i: 2, j: -2, degree: 0 })
        .ok()
        .and_then(|verdict| verdict.central)
        .and_then(|c| c.as_rational());
    t.check(two == Some(Rational::from_int(2)), || {
        format!("central term at n=2, i=2 is {two:?}, expected 2")
    });
}

fn mult_deriv_labels() -> Vec<LambdaVector> {
    vectors(3, -2, 4, 6)
}

fn criterion_mult(v: &Verifier, t: &mut Tally) {
    let labels = mult_deriv_labels();
    let mut cases = Vec::new();
    for rho in [RhoSpec::Generic, zero_rho(), xi(2), xi(3)] {
        for r in 1..=5u32 {
            if rho.root_order().is_some_and(|n| r % n == 0) {
                continue;
            }
            for lambda in &labels {
                cases.push(TheoremCase::MultFormula { r, lambda: lambda.clone(), rho: rho.clone() });
            }
        }
    }
    t.absorb(run_cases(v, &cases));
    let generic = v.cache(&RhoSpec::Generic);
    let outcomes: Vec<Outcome> = (1..=6u32)
        .into_par_iter()
        .map(|r| {
            let got = p_expand(r, &RhoSpec::Generic)
                .and_then(|q| q.evaluate(&generic))
                .map_err(|e| format!("p_expand({r}): {e}"))?;
            let want = TPoly::var(generic.field(), r)
                .scale_rational(&Rational::from_int(r as i64));
            if got.sub(&want).map_err(|e| e.to_string())?.is_zero() {
                Ok(())
            } else {
                Err(format!("p_expand({r}) evaluates to {got}"))
            }
        })
        .collect();
    t.absorb(outcomes);
}

fn criterion_deriv(v: &Verifier, t: &mut Tally) {
    let labels = mult_deriv_labels();
    let mut cases = Vec::new();
    for rho in [RhoSpec::Generic, xi(2), xi(3)] {
        for r in 1..=5u32 {
            for lambda in &labels {
                cases.push(TheoremCase::DerivFormula { r, lambda: lambda.clone(), rho: rho.clone() });
            }
        }
    }
    t.absorb(run_cases(v, &cases));
}

fn criterion_straighten(v: &Verifier, t: &mut Tally) {
    let labels = vectors(4, -3, 4, i64::MAX);
    for rho in [RhoSpec::Generic, zero_rho(), xi(2), xi(3)] {
        let cache = v.cache(&rho);
        let st = v.straightener(&rho);
        let outcomes: Vec<Outcome> = labels
            .par_iter()
            .map(|lambda| {
                let measure = straighten_measure(lambda);
                if let Rewrite::Expand(terms) = st.rewrite_once(lambda) {
                    if let Some((bad, _)) = terms.iter().find(|(l, _)| straighten_measure(l) >= measure) {
                        return Err(format!("{rho}: step {lambda} -> {bad} does not lower the measure"));
                    }
                }
                let q = st.straighten(lambda);
                if let Some((bad, _)) = q.terms().find(|(l, _)| !l.is_partition()) {
                    return Err(format!("{rho}: {lambda} straightens to non-partition {bad}"));
                }
                let got = q.evaluate(&cache).map_err(|e| e.to_string())?;
                let want = cache.hl_q(lambda.parts());
                if got.sub(&want).map_err(|e| e.to_string())?.is_zero() {
                    Ok(())
                } else {
                    Err(format!("{rho}: straighten({lambda}) = {q} disagrees with Q"))
                }
            })
            .collect();
        t.absorb(outcomes);
    }
}

fn criterion_coefficients(t: &mut Tally) {
    let zero = zero_rho();
    for size in 1..=8 {
        for mu in partitions(size) {
            let parts = mu.parts();
            let is_hook = parts[1..].iter().all(|&x| x == 1);
            let want = if is_hook {
                if parts.len() % 2 == 1 { 1 } else { -1 }
            } else {
                0
            };
            let got = c_coeff(&mu, &zero).ok().and_then(|c| c.as_rational());
            t.check(got == Some(Rational::from_int(want)), || {
                format!("c_{mu}(0) = {got:?}, expected {want}")
            });
        }
    }
    let x2 = xi(2);
    for k in 1..=8u32 {
        for m in 0..k.min(9 - k) {
            let mu = if m == 0 { vec![k] } else { vec![k, m] };
            let mu = Partition::new(mu).expect("partition");
            let want = Rational::new(if m % 2 == 0 { 1 } else { -1 }, 2);
            let got = c_coeff(&mu, &x2).ok().and_then(|c| c.as_rational());
            t.check(got == Some(want.clone()), || {
                format!("c_{mu}(xi_2) = {got:?}, expected {want}")
            });
        }
    }
    let mut restricted = (0usize, 0usize);
    for n in 2..=3u32 {
        let rho = xi(n);
        for size in 1..=8 {
            for mu in partitions(size).into_iter().filter(|p| p.len() > n as usize) {
                let value = c_coeff(&mu, &rho);
                let vanishes = matches!(&value, Ok(c) if c.is_zero());
                if mu.multiplicities().iter().all(|&(_, k)| k < n) {
                    restricted.0 += 1;
                    restricted.1 += vanishes as usize;
                }
                t.check(vanishes, || match value {
                    Ok(c) => format!("vanishing claim: c_{mu}(xi_{n}) = {c}, not 0"),
                    Err(e) => format!("vanishing claim: c_{mu}(xi_{n}): {e}"),
                });
            }
        }
    }
    t.notes.push(format!(
        "vanishing holds on {} of {} partitions whose multiplicities are all below n",
        restricted.1, restricted.0
    ));
}

fn criterion_schur(v: &Verifier, t: &mut Tally) {
    let mut labels = partition_labels(8, 3);
    labels.extend(vectors(3, -2, 4, 8).into_iter().filter(|l| !l.is_partition()));
    let mut cases = Vec::new();
    for m in 1..=4 {
        for lambda in &labels {
            cases.push(TheoremCase::TA3 { m, lambda: lambda.clone() });
            cases.push(TheoremCase::TA4 { m, lambda: lambda.clone() });
        }
        cases.push(TheoremCase::SchurNormalization { m, degree: 8 });
    }
    for m in 1..=6 {
        cases.push(TheoremCase::BaseA { m });
        cases.push(TheoremCase::RemarkA { m });
    }
    t.absorb(run_cases(v, &cases));
    let zero = zero_rho();
    let st = v.straightener(&zero);
    let mut pairs = Vec::new();
    for r in 1..=4u32 {
        for size in 0..=6 {
            for lambda in partitions(size) {
                pairs.push((r, lambda));
            }
        }
    }
    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|(r, lambda)| {
            let oracle = mn_combination(*r, lambda);
            let via_formula = multiply_p(*r, &lambda.to_lambda(), &zero)
                .map(|q| st.straighten_combination(&q))
                .map_err(|e| e.to_string())?;
            if oracle == via_formula {
                Ok(())
            } else {
                Err(format!("p_{r} s_{lambda}: border strips {oracle}, formula {via_formula}"))
            }
        })
        .collect();
    t.absorb(outcomes);
}

fn criterion_root_free(v: &Verifier, t: &mut Tally) {
    let mut labels = partition_labels(8, 3);
    labels.extend(vectors(3, -2, 4, 8).into_iter().filter(|l| !l.is_partition()));
    for n in 2..=3u32 {
        let cache = v.cache(&xi(n));
        let outcomes: Vec<Outcome> = labels
            .par_iter()
            .map(|lambda| {
                let q = cache.hl_q(lambda.parts());
                match q.variables().into_iter().find(|a| a % n == 0) {
                    None => Ok(()),
                    Some(a) => Err(format!("Q^({n})_{lambda} involves t{a}")),
                }
            })
            .collect();
        t.absorb(outcomes);
    }
    // ρ = −1 over Q and ρ = ξ₂ over Q(ξ₂) must give the same polynomials.
    let minus_one = v.cache(&RhoSpec::Value(Rational::from_int(-1)));
    let x2 = v.cache(&xi(2));
    let outcomes: Vec<Outcome> = labels
        .par_iter()
        .map(|lambda| {
            let a = minus_one
                .hl_q(lambda.parts())
                .embed(x2.field())
                .map_err(|e| e.to_string())?;
            let b = x2.hl_q(lambda.parts());
            if a.sub(&b).map_err(|e| e.to_string())?.is_zero() {
                Ok(())
            } else {
                Err(format!("Q_{lambda} differs between rho = -1 and xi:2"))
            }
        })
        .collect();
    t.absorb(outcomes);
}

fn criterion_lemmas(v: &Verifier, t: &mut Tally) {
    const D: u32 = 6;
    let rhos = [RhoSpec::Generic, zero_rho(), xi(2), xi(3)];
    let mut cases = Vec::new();
    for rho in &rhos {
        for m in -2..=2 {
            for s in -4..=6 {
                cases.push(TheoremCase::Exchange { m, s, rho: rho.clone(), degree: D });
            }
        }
        for r in -4..=6 {
            for k in 1..=4u32 {
                cases.push(TheoremCase::PowerSumB { k, r, rho: rho.clone(), degree: D });
                if !rho.root_order().is_some_and(|n| k % n == 0) {
                    cases.push(TheoremCase::PerpB { k, r, rho: rho.clone(), degree: D });
                }
            }
            cases.push(TheoremCase::HomogeneousIdentity { r, rho: rho.clone(), degree: D });
        }
    }
    for r in -4..=6 {
        for m in [-2i64, -1, 1, 2] {
            for n in 2..=3 {
                cases.push(TheoremCase::LhatB { n, m, r, degree: D });
                if m > 0 {
                    cases.push(TheoremCase::LtildeB { n, m, r, degree: D });
                }
            }
            cases.push(TheoremCase::SchurLhatB { m, r, degree: D });
            cases.push(TheoremCase::SchurLB { m, r, degree: D });
        }
    }
    for n in 2..=3 {
        for m in 1..=2 {
            for lambda in theorem_1_2_labels() {
                cases.push(TheoremCase::VExpansion { n, m, lambda });
            }
        }
    }
    t.absorb(run_cases(v, &cases));
}
