use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::operators::{build_operator, Family, VirasoroSpec};
use super::rhs;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};
use crate::structure::{multiply_p, partitions, QCombination, Straightener};
use crate::tring::{commutator_apply, LinOperator, Monomial, TPoly};
use crate::vertex::{LambdaVector, QCache, RhoSpec};

/// A single checkable identity with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "theorem")]
pub enum TheoremCase {
    #[serde(rename = "T1.1")]
    T1_1 { n: u32, m: i64, lambda: LambdaVector },
    #[serde(rename = "T1.2")]
    T1_2 { n: u32, m: i64, lambda: LambdaVector },
    #[serde(rename = "T3.3")]
    T3_3 { n: u32, m: i64, lambda: LambdaVector },
    #[serde(rename = "TA.3")]
    TA3 { m: i64, lambda: LambdaVector },
    #[serde(rename = "TA.4")]
    TA4 { m: i64, lambda: LambdaVector },
    BaseA { m: i64 },
    RemarkA { m: i64 },
    Bracket { n: u32, i: i64, j: i64, degree: u32 },
    MultFormula { r: u32, lambda: LambdaVector, rho: RhoSpec },
    DerivFormula { r: u32, lambda: LambdaVector, rho: RhoSpec },
    /// V_m^(n) Q_λ against its expansion.
    VExpansion { n: u32, m: i64, lambda: LambdaVector },
    /// The two forms of L_m^S agree for m ≥ 1.
    SchurNormalization { m: i64, degree: u32 },
    /// B_{m−1}B_s − ρB_mB_{s−1} = ρB_sB_{m−1} − B_{s−1}B_m.
    Exchange { m: i64, s: i64, rho: RhoSpec, degree: u32 },
    /// p_k B_r = B_r p_k + B_{r+k}.
    PowerSumB { k: u32, r: i64, rho: RhoSpec, degree: u32 },
    /// t_k^⊥ B_r = (1/k) B_{r−k} + B_r t_k^⊥.
    PerpB { k: u32, r: i64, rho: RhoSpec, degree: u32 },
    /// [L̂_m, B_r] at ρ = ξₙ.
    LhatB { n: u32, m: i64, r: i64, degree: u32 },
    /// [L̃_m, B_r] at ρ = ξₙ, m ≥ 1.
    LtildeB { n: u32, m: i64, r: i64, degree: u32 },
    /// Σ_{k≤N} (1−ρ^k) B_{r−k} p_k f rewritten through B_r f and B_{r+k} ∂_k f.
    HomogeneousIdentity { r: i64, rho: RhoSpec, degree: u32 },
    /// [L̂^S_m, B_r] at ρ = 0.
    SchurLhatB { m: i64, r: i64, degree: u32 },
    /// [L^S_m, B_r] at ρ = 0.
    SchurLB { m: i64, r: i64, degree: u32 },
}

impl TheoremCase {
    /// The specialization of ρ the case lives at.
    pub fn rho(&self) -> Result<RhoSpec> {
        use TheoremCase::*;
        match self {
            T1_1 { n, .. }
            | T1_2 { n, .. }
            | T3_3 { n, .. }
            | VExpansion { n, .. }
            | LhatB { n, .. }
            | LtildeB { n, .. } => RhoSpec::xi(*n),
            MultFormula { rho, .. }
            | DerivFormula { rho, .. }
            | Exchange { rho, .. }
            | PowerSumB { rho, .. }
            | PerpB { rho, .. }
            | HomogeneousIdentity { rho, .. } => Ok(rho.clone()),
            TA3 { .. }
            | TA4 { .. }
            | BaseA { .. }
            | RemarkA { .. }
            | Bracket { .. }
            | SchurNormalization { .. }
            | SchurLhatB { .. }
            | SchurLB { .. } => Ok(RhoSpec::Value(Rational::zero())),
        }
    }

    pub fn field(&self) -> Result<Field> {
        Ok(self.rho()?.field())
    }

    /// Check the parameter ranges each identity is stated for.
    pub fn check_hypotheses(&self) -> Result<()> {
        use TheoremCase::*;
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        let n_ok = |n: u32| n >= 2;
        match *self {
            T1_1 { n, m, .. } if !n_ok(n) || m < 0 => fail("T1.1 needs n ≥ 2, m ≥ 0".to_string()),
            T1_2 { n, m, .. } | T3_3 { n, m, .. } | VExpansion { n, m, .. }
                if !n_ok(n) || m < 1 =>
            {
                fail(format!("needs n ≥ 2, m ≥ 1, got n={n}, m={m}"))
            }
            TA3 { m, .. } | TA4 { m, .. } | BaseA { m } | RemarkA { m } | SchurNormalization { m, .. }
                if m < 1 =>
            {
                fail(format!("needs m ≥ 1, got {m}"))
            }
            Bracket { n, .. } if !n_ok(n) => fail(format!("needs n ≥ 2, got {n}")),
            MultFormula { r, .. } | DerivFormula { r, .. } if r < 1 => {
                fail("needs r ≥ 1".to_string())
            }
            PowerSumB { k, .. } | PerpB { k, .. } if k < 1 => fail("needs k ≥ 1".to_string()),
            LhatB { n, m, .. } if !n_ok(n) || m == 0 => {
                fail(format!("needs n ≥ 2, m ≠ 0, got n={n}, m={m}"))
            }
            LtildeB { n, m, .. } if !n_ok(n) || m < 1 => {
                fail(format!("needs n ≥ 2, m ≥ 1, got n={n}, m={m}"))
            }
            SchurLhatB { m, .. } | SchurLB { m, .. } if m == 0 => {
                fail("needs m ≠ 0".to_string())
            }
            _ => Ok(()),
        }
    }
}

/// Outcome of comparing both sides of an identity.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub case: TheoremCase,
    pub equal: bool,
    pub lhs: TPoly,
    pub rhs: TPoly,
    pub diff: TPoly,
    /// For bracket cases: the scalar left by [L_i, L_j] − n(i−j)L_{i+j} on 1.
    pub central: Option<Scalar>,
}

impl Verdict {
    pub fn new(case: TheoremCase, lhs: TPoly, rhs: TPoly) -> Result<Self> {
        let diff = lhs.sub(&rhs)?;
        Ok(Verdict {
            case,
            equal: diff.is_zero(),
            lhs,
            rhs,
            diff,
            central: None,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "case": serde_json::to_value(&self.case).expect("case serializes"),
            "equal": self.equal,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "diff": self.diff.to_json(),
        });
        if let Some(c) = &self.central {
            v["central"] = Value::String(c.to_string());
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("verdict JSON: {what}"));
        let case: TheoremCase = serde_json::from_value(v.get("case").cloned().ok_or_else(|| bad("case"))?)
            .map_err(|e| bad(&e.to_string()))?;
        let field = case.field()?;
        let poly = |key: &str| TPoly::from_json(&field, v.get(key).ok_or_else(|| bad(key))?);
        let central = match v.get("central").and_then(Value::as_str) {
            Some(text) => Some(Scalar::parse(&field, text)?),
            None => None,
        };
        Ok(Verdict {
            equal: v.get("equal").and_then(Value::as_bool).ok_or_else(|| bad("equal"))?,
            lhs: poly("lhs")?,
            rhs: poly("rhs")?,
            diff: poly("diff")?,
            central,
            case,
        })
    }
}

/// All monomials of degree ≤ d, in increasing degree.
pub fn monomials_up_to(d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| partitions(k).into_iter().map(|p| Monomial::from_parts(p.parts())))
        .collect()
}

/// Runs theorem cases, sharing Q_λ caches per value of ρ.
pub struct Verifier {
    memoize: bool,
    limit: Option<usize>,
    caches: Mutex<HashMap<String, Arc<QCache>>>,
    straighteners: Mutex<HashMap<String, Arc<Straightener>>>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Self::with_options(true, None)
    }

    pub fn with_options(memoize: bool, limit: Option<usize>) -> Self {
        Verifier {
            memoize,
            limit,
            caches: Mutex::new(HashMap::new()),
            straighteners: Mutex::new(HashMap::new()),
        }
    }

    pub fn cache(&self, rho: &RhoSpec) -> Arc<QCache> {
        let mut caches = self.caches.lock().expect("cache table");
        caches
            .entry(rho.to_string())
            .or_insert_with(|| Arc::new(QCache::with_options(rho.clone(), self.memoize, self.limit)))
            .clone()
    }

    pub fn straightener(&self, rho: &RhoSpec) -> Arc<Straightener> {
        let mut table = self.straighteners.lock().expect("straightener table");
        table
            .entry(rho.to_string())
            .or_insert_with(|| Arc::new(Straightener::new(rho.clone())))
            .clone()
    }

    pub fn verify(&self, case: &TheoremCase) -> Result<Verdict> {
        use TheoremCase::*;
        case.check_hypotheses()?;
        let rho = case.rho()?;
        let cache = self.cache(&rho);
        let field = rho.field();
        let q = |lambda: &LambdaVector| cache.hl_q(lambda.parts());
        let op = |family: Family, n: Option<u32>, m: i64| {
            build_operator(&VirasoroSpec::new(family, n, m)?, &field)
        };
        let theorem = |lhs: TPoly, rhs: QCombination| Verdict::new(case.clone(), lhs, rhs.evaluate(&cache)?);
        match case {
            T1_1 { n, m, lambda } => theorem(
                op(Family::Lmn, Some(*n), *m)?.apply(&q(lambda))?,
                rhs::rhs_t1_1(*n, *m, lambda)?,
            ),
            T1_2 { n, m, lambda } => theorem(
                op(Family::Lmn, Some(*n), -m)?.apply(&q(lambda))?,
                rhs::rhs_t1_2(*n, *m, lambda)?,
            ),
            T3_3 { n, m, lambda } => theorem(
                op(Family::Lhat, Some(*n), -m)?.apply(&q(lambda))?,
                rhs::rhs_t3_3(*n, *m, lambda)?,
            ),
            VExpansion { n, m, lambda } => theorem(
                op(Family::Vmn, Some(*n), *m)?.apply(&q(lambda))?,
                rhs::rhs_v_expansion(*n, *m, lambda)?,
            ),
            TA3 { m, lambda } => theorem(
                op(Family::LS, None, *m)?.apply(&q(lambda))?,
                rhs::rhs_ta3(*m, lambda)?,
            ),
            TA4 { m, lambda } => theorem(
                op(Family::LS, None, -m)?.apply(&q(lambda))?,
                rhs::rhs_ta4(*m, lambda)?,
            ),
            BaseA { m } => theorem(
                op(Family::LS, None, -m)?.apply(&TPoly::one(&field))?,
                rhs::rhs_base_a(*m)?,
            ),
            RemarkA { m } => {
                let mut lhs = TPoly::zero(&field);
                for k in 1..*m {
                    let pp = TPoly::one(&field).mul_var(k as u32).mul_var((m - k) as u32);
                    lhs.add_scaled(&pp, &Scalar::from_int(&field, k * (m - k)))?;
                }
                theorem(lhs, rhs::rhs_remark_a(*m)?)
            }
            MultFormula { r, lambda, rho } => {
                let lhs = q(lambda).mul_var(*r).scale_rational(&Rational::from_int(*r as i64));
                theorem(lhs, multiply_p(*r, lambda, rho)?)
            }
            DerivFormula { r, lambda, rho } => {
                let gap = rho.one_minus_rho_pow(*r as i64)?;
                let mut comb = QCombination::zero(&field);
                for i in 0..lambda.len() {
                    comb.add_term(lambda.shifted(i, -(*r as i64)), &gap)?;
                }
                theorem(q(lambda).derivative(*r), comb)
            }
            Bracket { n, i, j, degree } => self.bracket(case, *n, *i, *j, *degree),
            SchurNormalization { m, degree } => {
                let full = op(Family::LS, None, *m)?;
                let plain = op(Family::LSNoTail, None, *m)?;
                extensional(case, &field, *degree, |f| Ok((full.apply(f)?, plain.apply(f)?)))
            }
            Exchange { m, s, rho, degree } => {
                let b = |k: i64, f: &TPoly| cache.apply_b(k, f);
                let r = rho.rho();
                extensional(case, &field, *degree, |f| {
                    let lhs = b(m - 1, &b(*s, f)?)?.sub(&b(*m, &b(s - 1, f)?)?.scale(&r)?)?;
                    let rhs = b(*s, &b(m - 1, f)?)?.scale(&r)?.sub(&b(s - 1, &b(*m, f)?)?)?;
                    Ok((lhs, rhs))
                })
            }
            PowerSumB { k, r, degree, .. } => {
                let p = |f: &TPoly| f.mul_var(*k).scale_rational(&Rational::from_int(*k as i64));
                extensional(case, &field, *degree, |f| {
                    let lhs = p(&cache.apply_b(*r, f)?);
                    let rhs = cache.apply_b(*r, &p(f))?.add(&cache.apply_b(r + *k as i64, f)?)?;
                    Ok((lhs, rhs))
                })
            }
            PerpB { k, r, degree, .. } => {
                let inv_k = Rational::new(1, *k as i64);
                extensional(case, &field, *degree, |f| {
                    let lhs = cache.perp_t(*k, &cache.apply_b(*r, f)?)?;
                    let rhs = cache
                        .apply_b(r - *k as i64, f)?
                        .scale_rational(&inv_k)
                        .add(&cache.apply_b(*r, &cache.perp_t(*k, f)?)?)?;
                    Ok((lhs, rhs))
                })
            }
            LhatB { n, m, r, degree } => {
                let lhat = op(Family::Lhat, Some(*n), *m)?;
                let mn = m * *n as i64;
                extensional(case, &field, *degree, |f| {
                    let lhs = commutator_b(&lhat, &cache, *r, f)?;
                    let mut rhs = TPoly::zero(&field);
                    if mn > 0 {
                        let c = Scalar::from_int(&field, r - mn);
                        rhs.add_scaled(&cache.apply_b(r - mn, f)?, &c)?;
                        for k in 1..=mn {
                            let t = cache.apply_b(r - mn + k, &f.derivative(k as u32))?;
                            rhs = rhs.sub(&t)?;
                        }
                    } else {
                        rhs.add_scaled(&cache.apply_b(r - mn, f)?, &Scalar::from_int(&field, *r))?;
                        for k in 1..=-mn {
                            let pk = f.mul_var(k as u32).scale_rational(&Rational::from_int(k));
                            let c = -&rho.one_minus_rho_pow(k)?;
                            rhs.add_scaled(&cache.apply_b(r - mn - k, &pk)?, &c)?;
                        }
                    }
                    Ok((lhs, rhs))
                })
            }
            LtildeB { n, m, r, degree } => {
                let ltilde = op(Family::Ltilde, Some(*n), *m)?;
                let mn = m * *n as i64;
                extensional(case, &field, *degree, |f| {
                    let lhs = commutator_b(&ltilde, &cache, *r, f)?;
                    let mut rhs = TPoly::zero(&field);
                    rhs.add_scaled(&cache.apply_b(r - mn, f)?, &Scalar::from_int(&field, *r))?;
                    for k in 1..=mn {
                        // (1 − ξ^{−k}) p_k^⊥ = −ξ^{−k} ∂_k, including n | k as a limit
                        let c = -&rho.rho_pow(-k)?;
                        rhs.add_scaled(&cache.apply_b(r - mn + k, &f.derivative(k as u32))?, &c)?;
                    }
                    Ok((lhs, rhs))
                })
            }
            HomogeneousIdentity { r, rho, degree } => {
                extensional(case, &field, *degree, |f| {
                    let a = f.degree() as i64;
                    let big_n = a.max(a + r) + 1;
                    let mut lhs = TPoly::zero(&field);
                    let mut rhs = TPoly::zero(&field);
                    let mut lead = Scalar::from_int(&field, *r);
                    for k in 1..=big_n {
                        let gap = rho.one_minus_rho_pow(k)?;
                        let pk = f.mul_var(k as u32).scale_rational(&Rational::from_int(k));
                        lhs.add_scaled(&cache.apply_b(r - k, &pk)?, &gap)?;
                        lead -= &gap;
                        let t = cache.apply_b(r + k, &f.derivative(k as u32))?;
                        rhs = rhs.sub(&t)?;
                    }
                    rhs.add_scaled(&cache.apply_b(*r, f)?, &lead)?;
                    Ok((lhs, rhs))
                })
            }
            SchurLhatB { m, r, degree } => {
                let lhat = op(Family::LSHat, None, *m)?;
                extensional(case, &field, *degree, |f| {
                    let lhs = commutator_b(&lhat, &cache, *r, f)?;
                    let mut rhs = TPoly::zero(&field);
                    if *m > 0 {
                        rhs.add_scaled(&cache.apply_b(r - m, f)?, &Scalar::from_int(&field, r - m))?;
                        for k in 1..=*m {
                            rhs = rhs.sub(&cache.apply_b(r - m + k, &f.derivative(k as u32))?)?;
                        }
                    } else {
                        rhs.add_scaled(&cache.apply_b(r - m, f)?, &Scalar::from_int(&field, *r))?;
                        for k in 1..=-m {
                            let pk = f.mul_var(k as u32).scale_rational(&Rational::from_int(k));
                            rhs = rhs.sub(&cache.apply_b(r - m - k, &pk)?)?;
                        }
                    }
                    Ok((lhs, rhs))
                })
            }
            SchurLB { m, r, degree } => {
                let ls = op(Family::LS, None, *m)?;
                let c = Scalar::from_rational(&field, Rational::new(2 * r - m - 1, 2));
                extensional(case, &field, *degree, |f| {
                    let lhs = commutator_b(&ls, &cache, *r, f)?;
                    let mut rhs = TPoly::zero(&field);
                    rhs.add_scaled(&cache.apply_b(r - m, f)?, &c)?;
                    let inner = if *m > 0 {
                        f.derivative(*m as u32)
                    } else {
                        f.mul_var((-m) as u32).scale_rational(&Rational::from_int(-m))
                    };
                    rhs = rhs.sub(&cache.apply_b(*r, &inner)?)?;
                    Ok((lhs, rhs))
                })
            }
        }
    }

    fn bracket(&self, case: &TheoremCase, n: u32, i: i64, j: i64, degree: u32) -> Result<Verdict> {
        let field = Field::Rational;
        let li = build_operator(&VirasoroSpec::l(n, i), &field)?;
        let lj = build_operator(&VirasoroSpec::l(n, j), &field)?;
        let lij = build_operator(&VirasoroSpec::l(n, i + j), &field)?;
        let nn = n as i64;
        let factor = Scalar::from_int(&field, nn * (i - j));
        let central = if i + j == 0 {
            Rational::new(nn * nn * (nn - 1) * (i * i * i - i), 12)
        } else {
            Rational::zero()
        };
        let central = Scalar::from_rational(&field, central);
        let one = TPoly::one(&field);
        let observed = commutator_apply(&li, &lj, &one)?.sub(&lij.apply(&one)?.scale(&factor)?)?;
        let mut verdict = extensional(case, &field, degree, |f| {
            let lhs = commutator_apply(&li, &lj, f)?;
            let mut rhs = lij.apply(f)?.scale(&factor)?;
            rhs.add_scaled(f, &central)?;
            Ok((lhs, rhs))
        })?;
        verdict.central = Some(observed.coeff(&Monomial::one()));
        Ok(verdict)
    }
}

/// [A, B_r] f.
fn commutator_b(a: &LinOperator, cache: &QCache, r: i64, f: &TPoly) -> Result<TPoly> {
    a.apply(&cache.apply_b(r, f)?)?.sub(&cache.apply_b(r, &a.apply(f)?)?)
}

/// Compare two linear maps on every monomial of degree ≤ `degree`. On the
/// first mismatch the verdict carries that monomial's images; otherwise the
/// images of the sum of all monomials.
fn extensional<F>(case: &TheoremCase, field: &Field, degree: u32, sides: F) -> Result<Verdict>
where
    F: Fn(&TPoly) -> Result<(TPoly, TPoly)>,
{
    let one = Scalar::one(field);
    let mut lhs_sum = TPoly::zero(field);
    let mut rhs_sum = TPoly::zero(field);
    for mono in monomials_up_to(degree) {
        let f = TPoly::term(mono, one.clone());
        let (lhs, rhs) = sides(&f)?;
        if !lhs.sub(&rhs)?.is_zero() {
            return Verdict::new(case.clone(), lhs, rhs);
        }
        lhs_sum.add_scaled(&lhs, &one)?;
        rhs_sum.add_scaled(&rhs, &one)?;
    }
    Verdict::new(case.clone(), lhs_sum, rhs_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LambdaVector {
        LambdaVector(v.to_vec())
    }

    #[test]
    fn documented_cases() {
        let v = Verifier::new();
        let b = v
            .verify(&TheoremCase::Bracket { n: 2, i: 2, j: -2, degree: 4 })
            .unwrap();
        assert!(b.equal);
        assert_eq!(b.central.unwrap().to_string(), "2");
        let t = v
            .verify(&TheoremCase::T1_1 { n: 2, m: 1, lambda: lv(&[3, 1]) })
            .unwrap();
        assert!(t.equal, "{}", t.diff);
        let r = v.verify(&TheoremCase::RemarkA { m: 3 }).unwrap();
        assert!(r.equal);
        let anchor = v
            .verify(&TheoremCase::T1_2 { n: 2, m: 1, lambda: lv(&[0]) })
            .unwrap();
        assert!(anchor.equal);
        assert_eq!(anchor.lhs.to_text(), "1/2*t1^2");
        assert_eq!(anchor.rhs.to_text(), "1/2*t1^2");
    }

    #[test]
    fn more_theorems() {
        let v = Verifier::new();
        let cases = [
            TheoremCase::T1_2 { n: 3, m: 1, lambda: lv(&[1]) },
            TheoremCase::T3_3 { n: 2, m: 1, lambda: lv(&[1]) },
            TheoremCase::T3_3 { n: 3, m: 1, lambda: lv(&[2]) },
            TheoremCase::T3_3 { n: 2, m: 2, lambda: lv(&[]) },
            TheoremCase::TA3 { m: 2, lambda: lv(&[3, 1]) },
            TheoremCase::TA4 { m: 3, lambda: lv(&[2, 1]) },
            TheoremCase::VExpansion { n: 3, m: 1, lambda: lv(&[2, 1]) },
            TheoremCase::BaseA { m: 4 },
        ];
        for c in cases {
            let verdict = v.verify(&c).unwrap();
            assert!(verdict.equal, "{c:?}: {}", verdict.diff);
        }
    }

    #[test]
    fn lemma_cases() {
        let v = Verifier::new();
        let x3 = RhoSpec::xi(3).unwrap();
        let cases = [
            TheoremCase::Exchange { m: 1, s: 3, rho: RhoSpec::Generic, degree: 3 },
            TheoremCase::PowerSumB { k: 2, r: -1, rho: x3.clone(), degree: 4 },
            TheoremCase::PerpB { k: 2, r: 1, rho: x3.clone(), degree: 4 },
            TheoremCase::LhatB { n: 2, m: 1, r: 2, degree: 4 },
            TheoremCase::LhatB { n: 3, m: -1, r: -1, degree: 4 },
            TheoremCase::LtildeB { n: 2, m: 2, r: 3, degree: 4 },
            TheoremCase::HomogeneousIdentity { r: -2, rho: RhoSpec::Generic, degree: 3 },
            TheoremCase::SchurLhatB { m: 2, r: 1, degree: 4 },
            TheoremCase::SchurLB { m: -2, r: 0, degree: 4 },
            TheoremCase::SchurNormalization { m: 3, degree: 5 },
        ];
        for c in cases {
            let verdict = v.verify(&c).unwrap();
            assert!(verdict.equal, "{c:?}: {}", verdict.diff);
        }
    }

    #[test]
    fn hypotheses_and_adjoint_errors() {
        let v = Verifier::new();
        assert!(v.verify(&TheoremCase::T1_2 { n: 2, m: 0, lambda: lv(&[]) }).is_err());
        let x2 = RhoSpec::xi(2).unwrap();
        assert!(matches!(
            v.verify(&TheoremCase::PerpB { k: 2, r: 0, rho: x2, degree: 2 }),
            Err(Error::AdjointUndefined { .. })
        ));
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = Verifier::new();
        let verdict = v
            .verify(&TheoremCase::T1_2 { n: 3, m: 1, lambda: lv(&[1]) })
            .unwrap();
        let back = Verdict::from_json(&verdict.to_json()).unwrap();
        assert_eq!(back.to_json(), verdict.to_json());
        let b = v.verify(&TheoremCase::Bracket { n: 3, i: 1, j: -1, degree: 3 }).unwrap();
        assert_eq!(Verdict::from_json(&b.to_json()).unwrap().to_json(), b.to_json());
    }
}
