use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};
use crate::structure::{c_coeff, partitions, Partition, QCombination};
use crate::vertex::{LambdaVector, RhoSpec};

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn rat(field: &Field, n: i64, d: i64) -> Scalar {
    Scalar::from_rational(field, Rational::new(n, d))
}

/// (μ, c_μ(ρ)) for every μ ⊢ k.
fn c_table(k: i64, rho: &RhoSpec) -> Result<Vec<(LambdaVector, Scalar)>> {
    partitions(k as u32)
        .into_iter()
        .map(|mu| Ok((mu.to_lambda(), c_coeff(&mu, rho)?)))
        .collect()
}

fn hook_label(k: i64, ones: i64) -> LambdaVector {
    Partition::hook(k as u32, ones as usize).to_lambda()
}

fn divides(n: u32, k: i64) -> bool {
    k % n as i64 == 0
}

/// Right-hand side of L_m^(n) Q_λ for m ≥ 0.
pub fn rhs_t1_1(n: u32, m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 0, || format!("needs m ≥ 0, got {m}"))?;
    let rho = RhoSpec::xi(n)?;
    let field = rho.field();
    let mn = m * n as i64;
    let l = lambda.len();
    let mut out = QCombination::zero(&field);
    for (i, &x) in lambda.parts().iter().enumerate() {
        out.add_term(lambda.shifted(i, -mn), &Scalar::from_int(&field, x))?;
    }
    for k in 1..mn {
        let c = rho.one_minus_rho_pow(-k)?;
        for i in 0..l {
            for j in 0..i {
                out.add_term(lambda.shifted2(i, -k, j, -(mn - k)), &c)?;
            }
        }
    }
    if m == 0 {
        let nn = n as i64;
        out.add_term(lambda.clone(), &rat(&field, nn * nn - 1, 24))?;
    }
    Ok(out)
}

/// Right-hand side of L_{−m}^(n) Q_λ for m ≥ 1.
pub fn rhs_t1_2(n: u32, m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let rho = RhoSpec::xi(n)?;
    let field = rho.field();
    let mn = m * n as i64;
    let l = lambda.len();
    let mut out = QCombination::zero(&field);
    let shift = rat(&field, m * (n as i64 - 1), 2);
    for (i, &x) in lambda.parts().iter().enumerate() {
        let c = &Scalar::from_int(&field, x) + &shift;
        out.add_term(lambda.shifted(i, mn), &c)?;
    }
    let half = rat(&field, 1, 2);
    for k in (1..mn).filter(|&k| !divides(n, k)) {
        let xk = rho.rho_pow(k)?;
        for i in 0..l {
            for j in 0..i {
                out.add_term(lambda.shifted2(i, k, j, mn - k), &xk)?;
            }
        }
        let cs = c_table(k, &rho)?;
        for i in 0..l {
            let head = lambda.shifted(i, mn - k);
            for (mu, c) in &cs {
                out.add_term(head.concat(mu.parts()), &(&xk * c))?;
            }
        }
        for (mu, c) in &cs {
            let hc = &half * c;
            for j in 0..mu.len() {
                out.add_term(lambda.concat(mu.shifted(j, mn - k).parts()), &hc)?;
            }
        }
        for (nu, d) in c_table(mn - k, &rho)? {
            for (mu, c) in &cs {
                let label = lambda.concat(mu.parts()).concat(nu.parts());
                out.add_term(label, &(&(&half * c) * &d))?;
            }
        }
    }
    Ok(out)
}

/// Right-hand side of L̂_{−m}^(n) Q_λ for m ≥ 1. Terms with n | k carry the
/// factor ξₙ^k − 1 = 0 and are omitted.
pub fn rhs_t3_3(n: u32, m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let rho = RhoSpec::xi(n)?;
    let field = rho.field();
    let mn = m * n as i64;
    let l = lambda.len();
    let mut out = QCombination::zero(&field);
    for (i, &x) in lambda.parts().iter().enumerate() {
        out.add_term(lambda.shifted(i, mn), &Scalar::from_int(&field, x))?;
    }
    for k in (1..=mn).filter(|&k| !divides(n, k)) {
        let w = -&rho.one_minus_rho_pow(k)?;
        for i in 0..l {
            for j in 0..i {
                out.add_term(lambda.shifted2(i, k, j, mn - k), &w)?;
            }
        }
        let cs = c_table(k, &rho)?;
        for i in 0..l {
            let head = lambda.shifted(i, mn - k);
            for (mu, c) in &cs {
                out.add_term(head.concat(mu.parts()), &(&w * c))?;
            }
        }
    }
    Ok(out)
}

/// V_m^(n) Q_λ expanded by the multiplication formula, m ≥ 1.
pub fn rhs_v_expansion(n: u32, m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let rho = RhoSpec::xi(n)?;
    let field = rho.field();
    let mn = m * n as i64;
    let l = lambda.len();
    let two = Scalar::from_int(&field, 2);
    let mut out = QCombination::zero(&field);
    let lead = Scalar::from_int(&field, m * (n as i64 - 1));
    for i in 0..l {
        out.add_term(lambda.shifted(i, mn), &lead)?;
    }
    for k in (1..mn).filter(|&k| !divides(n, k)) {
        let cs = c_table(k, &rho)?;
        for (mu, c) in &cs {
            for j in 0..mu.len() {
                out.add_term(lambda.concat(mu.shifted(j, mn - k).parts()), c)?;
            }
        }
        for (nu, d) in c_table(mn - k, &rho)? {
            for (mu, c) in &cs {
                out.add_term(lambda.concat(mu.parts()).concat(nu.parts()), &(c * &d))?;
            }
        }
        for i in 0..l {
            for j in 0..i {
                out.add_term(lambda.shifted2(i, k, j, mn - k), &two)?;
            }
            let head = lambda.shifted(i, mn - k);
            for (mu, c) in &cs {
                out.add_term(head.concat(mu.parts()), &(&two * c))?;
            }
        }
    }
    Ok(out)
}

/// Right-hand side of L_m^S s_λ for m ≥ 1, at ρ = 0.
pub fn rhs_ta3(m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let field = Field::Rational;
    let mut out = QCombination::zero(&field);
    for (idx, &x) in lambda.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        let c = rat(&field, 2 * x - (2 * i + m - 1), 2);
        out.add_term(lambda.shifted(idx, -m), &c)?;
    }
    Ok(out)
}

/// Right-hand side of L_{−m}^S s_λ for m ≥ 1, at ρ = 0.
pub fn rhs_ta4(m: i64, lambda: &LambdaVector) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let field = Field::Rational;
    let l = lambda.len() as i64;
    let mut out = QCombination::zero(&field);
    for (idx, &x) in lambda.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        let c = rat(&field, 2 * (x - i) + m + 1, 2);
        out.add_term(lambda.shifted(idx, m), &c)?;
    }
    for k in 1..=m {
        let sign = if (m - k) % 2 == 0 { -1 } else { 1 };
        let c = rat(&field, sign * (2 * (l - k) + m + 1), 2);
        out.add_term(lambda.concat(hook_label(k, m - k).parts()), &c)?;
    }
    Ok(out)
}

/// Right-hand side of L_{−m}^S · 1 as a signed sum over hooks.
pub fn rhs_base_a(m: i64) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let field = Field::Rational;
    let mut out = QCombination::zero(&field);
    for k in 1..=m {
        let sign = if (m - k + 1) % 2 == 0 { 1 } else { -1 };
        let c = rat(&field, sign * (m + 1 - 2 * k), 2);
        out.add_term(hook_label(k, m - k), &c)?;
    }
    Ok(out)
}

/// Σ_{k=1}^m (−1)^{m−k} (2k − m − 1) s_{(k,1^{m−k})}.
pub fn rhs_remark_a(m: i64) -> Result<QCombination> {
    require(m >= 1, || format!("needs m ≥ 1, got {m}"))?;
    let field = Field::Rational;
    let mut out = QCombination::zero(&field);
    for k in 1..=m {
        let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
        let c = Scalar::from_int(&field, sign * (2 * k - m - 1));
        out.add_term(hook_label(k, m - k), &c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::QCache;

    fn lv(v: &[i64]) -> LambdaVector {
        LambdaVector(v.to_vec())
    }

    #[test]
    fn t1_1_small_cases() {
        assert_eq!(rhs_t1_1(2, 0, &lv(&[1])).unwrap().to_text(), "9/8*Q[1]");
        assert_eq!(rhs_t1_1(2, 1, &lv(&[1])).unwrap().to_text(), "1*Q[-1]");
    }

    #[test]
    fn t1_2_anchor_evaluates_to_half_t1_squared() {
        let cache = QCache::new(RhoSpec::xi(2).unwrap());
        for lam in [lv(&[0]), lv(&[])] {
            let q = rhs_t1_2(2, 1, &lam).unwrap();
            assert_eq!(q.evaluate(&cache).unwrap().to_text(), "1/2*t1^2");
        }
    }

    #[test]
    fn schur_examples() {
        let zero = QCache::new(RhoSpec::Value(Rational::zero()));
        let ta3 = rhs_ta3(1, &lv(&[2])).unwrap();
        assert_eq!(ta3.to_text(), "1*Q[1]");
        assert!(rhs_ta3(1, &lv(&[1])).unwrap().is_empty());
        let ta4 = rhs_ta4(1, &lv(&[1])).unwrap();
        assert_eq!(ta4.evaluate(&zero).unwrap().to_text(), "2*t2");
        let base = rhs_ta4(2, &lv(&[])).unwrap();
        assert_eq!(base, rhs_base_a(2).unwrap());
        assert_eq!(base.evaluate(&zero).unwrap().to_text(), "1/2*t1^2");
    }
}
