use super::{partitions, Partition, QCombination};
use crate::error::{Error, Result};
use crate::exactnum::{RatFunc, Rational, Scalar, UniPoly};
use crate::vertex::{LambdaVector, RhoSpec};

/// φ_k(ρ) = Π_{i=1}^k (1 − ρ^i).
pub fn phi_poly(k: u32) -> UniPoly {
    (1..=k).fold(UniPoly::one(), |acc, i| {
        &acc * &(-&UniPoly::x_pow_minus_one(i as usize))
    })
}

/// b_μ(ρ) = Π_i φ_{m_i(μ)}(ρ).
pub fn b_poly(mu: &Partition) -> UniPoly {
    mu.multiplicities()
        .iter()
        .fold(UniPoly::one(), |acc, &(_, m)| &acc * &phi_poly(m))
}

/// c_μ(ρ) = (−1)^{l−1} ρ^{n(μ) − l(l−1)/2} φ_{l−1}(ρ) / b_μ(ρ) in Q(ρ).
pub fn c_generic(mu: &Partition) -> RatFunc {
    let l = mu.len() as u32;
    if l == 0 {
        return RatFunc::zero();
    }
    let shift = mu.n_stat() - l * (l - 1) / 2;
    let sign = if l % 2 == 1 { 1 } else { -1 };
    let num = (&UniPoly::monomial(Rational::from_int(sign), shift as usize)) * &phi_poly(l - 1);
    RatFunc::new(num, b_poly(mu)).expect("b_μ is nonzero")
}

/// c_μ at the given ρ, as a limit of the generic value.
pub fn c_coeff(mu: &Partition, rho: &RhoSpec) -> Result<Scalar> {
    rho.specialize(&c_generic(mu)).map_err(|e| match e {
        Error::Pole { at } => Error::SingularCoefficient {
            mu: mu.parts().to_vec(),
            at,
        },
        other => other,
    })
}

fn refuse_divisible(r: u32, rho: &RhoSpec) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("power sum index must be ≥ 1".into()));
    }
    match rho.root_order() {
        Some(n) if r.is_multiple_of(n) => Err(Error::UnsupportedExpansion {
            r,
            at: rho.to_string(),
        }),
        _ => Ok(()),
    }
}

/// p_r = Σ_{μ⊢r} c_μ(ρ) Q_μ.
pub fn p_expand(r: u32, rho: &RhoSpec) -> Result<QCombination> {
    refuse_divisible(r, rho)?;
    let field = rho.field();
    let mut out = QCombination::zero(&field);
    for mu in partitions(r) {
        out.add_term(mu.to_lambda(), &c_coeff(&mu, rho)?)?;
    }
    Ok(out)
}

/// p_r Q_λ = Σ_i Q_{λ+rε_i} + Σ_{μ⊢r} c_μ(ρ) Q_{(λ,μ)}.
pub fn multiply_p(r: u32, lambda: &LambdaVector, rho: &RhoSpec) -> Result<QCombination> {
    refuse_divisible(r, rho)?;
    let field = rho.field();
    let one = Scalar::one(&field);
    let mut out = QCombination::zero(&field);
    for i in 0..lambda.len() {
        out.add_term(lambda.shifted(i, r as i64), &one)?;
    }
    for mu in partitions(r) {
        let tail = mu.to_lambda();
        out.add_term(lambda.concat(tail.parts()), &c_coeff(&mu, rho)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generic_values() {
        for r in 1..=3 {
            assert_eq!(c_generic(&p(&[r])).to_string(), "(-1)/(ρ - 1)");
        }
        assert_eq!(c_generic(&p(&[1, 1])).to_string(), "(1)/(ρ^2 - 1)");
    }

    #[test]
    fn root_of_unity_values() {
        let x2 = RhoSpec::xi(2).unwrap();
        assert_eq!(c_coeff(&p(&[2, 1]), &x2).unwrap().to_string(), "-1/2");
        // a 0/0 limit: (1,1,1) at ξ₂
        assert_eq!(c_coeff(&p(&[1, 1, 1]), &x2).unwrap().to_string(), "1/2");
        assert!(matches!(
            c_coeff(&p(&[1, 1]), &x2),
            Err(Error::SingularCoefficient { .. })
        ));
    }

    #[test]
    fn hooks_at_zero() {
        let zero = RhoSpec::Value(Rational::zero());
        for k in 1..=4 {
            for j in 0..=3 {
                let want = if j % 2 == 0 { 1 } else { -1 };
                let got = c_coeff(&Partition::hook(k, j), &zero).unwrap();
                assert_eq!(got.as_rational(), Some(Rational::from_int(want)));
            }
        }
        assert!(c_coeff(&p(&[2, 2]), &zero).unwrap().is_zero());
    }

    #[test]
    fn refusals() {
        let x2 = RhoSpec::xi(2).unwrap();
        assert!(matches!(
            p_expand(4, &x2),
            Err(Error::UnsupportedExpansion { r: 4, .. })
        ));
        assert!(multiply_p(3, &LambdaVector(vec![1]), &x2).is_ok());
    }
}
