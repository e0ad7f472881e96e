use super::{Monomial, TPoly};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::vertex::RhoSpec;

/// ⟨t_λ, t_λ⟩ = Π_k m_k! / (k^{m_k} (1 − ρ^k)^{m_k}).
pub fn monomial_norm(m: &Monomial, rho: &RhoSpec) -> Result<Scalar> {
    let field = rho.field();
    let mut acc = Scalar::one(&field);
    for &(k, e) in m.pairs() {
        let gap = rho.one_minus_rho_pow(k as i64)?;
        if gap.is_zero() {
            return Err(Error::DegeneratePairing {
                part: k,
                at: rho.to_string(),
            });
        }
        let num = Rational::factorial(e);
        let den = Rational::from_int(k as i64).pow(e as i64)?;
        let denom = gap.pow(e as i64)?.scale(&den);
        acc = acc.try_mul(&Scalar::from_rational(&field, num).try_div(&denom)?)?;
    }
    Ok(acc)
}

/// Bilinear extension of ⟨t_λ, t_μ⟩ = δ_{λμ} z_λ(ρ)/(Π λ_i)².
pub fn inner_product(f: &TPoly, g: &TPoly, rho: &RhoSpec) -> Result<Scalar> {
    let field = rho.field();
    field.check_same(f.field())?;
    field.check_same(g.field())?;
    let mut acc = Scalar::zero(&field);
    for (m, a) in f.terms() {
        let b = g.coeff(m);
        if b.is_zero() {
            continue;
        }
        let w = monomial_norm(m, rho)?;
        acc = acc.try_add(&a.try_mul(&b)?.try_mul(&w)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_norms() {
        let g = RhoSpec::Generic;
        let field = g.field();
        assert!(inner_product(&TPoly::one(&field), &TPoly::one(&field), &g)
            .unwrap()
            .is_one());
        let t1 = TPoly::var(&field, 1);
        assert_eq!(inner_product(&t1, &t1, &g).unwrap().to_string(), "(-1)/(ρ - 1)");
        let t2 = TPoly::var(&field, 2);
        assert_eq!(
            inner_product(&t2, &t2, &g).unwrap().to_string(),
            "(-1/2)/(ρ^2 - 1)"
        );
        assert!(inner_product(&t1, &t2, &g).unwrap().is_zero());
    }

    #[test]
    fn degenerate_at_roots_of_unity() {
        let xi = RhoSpec::xi(2).unwrap();
        let t2 = TPoly::var(&xi.field(), 2);
        assert!(matches!(
            inner_product(&t2, &t2, &xi),
            Err(Error::DegeneratePairing { part: 2, .. })
        ));
        let t1 = TPoly::var(&xi.field(), 1);
        assert_eq!(inner_product(&t1, &t1, &xi).unwrap().to_string(), "1/2");
    }
}
