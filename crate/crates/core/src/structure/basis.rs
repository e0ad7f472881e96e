use super::{partitions, QCombination};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::tring::{Monomial, TPoly};
use crate::vertex::{QCache, RhoSpec};

/// Expand a polynomial in the basis {Q_μ : μ partition} by solving the
/// triangular-free linear system against the t_ν coefficients, degree by
/// degree. Only offered at generic ρ and ρ = 0.
pub fn expand_in_q_basis(f: &TPoly, cache: &QCache) -> Result<QCombination> {
    let rho = cache.rho();
    let allowed = match rho {
        RhoSpec::Generic => true,
        RhoSpec::Value(r) => r.is_zero(),
        RhoSpec::RootOfUnity(_) => false,
    };
    if !allowed {
        return Err(Error::InvalidParameter(format!(
            "basis expansion is only available at generic ρ and ρ = 0, not {rho}"
        )));
    }
    let field = cache.field().clone();
    field.check_same(f.field())?;
    let mut out = QCombination::zero(&field);
    let mut degrees: Vec<u32> = f.terms().map(|(m, _)| m.degree()).collect();
    degrees.dedup();
    for d in degrees {
        let parts = partitions(d);
        let monos: Vec<Monomial> = parts.iter().map(|p| Monomial::from_parts(p.parts())).collect();
        let size = parts.len();
        // rows: monomials, columns: Q_μ, last column: f
        let mut a: Vec<Vec<Scalar>> = monos
            .iter()
            .map(|m| {
                let mut row: Vec<Scalar> = parts
                    .iter()
                    .map(|mu| cache.hl_q(mu.to_lambda().parts()).coeff(m))
                    .collect();
                row.push(f.coeff(m));
                row
            })
            .collect();
        let solution = solve(&mut a, size).ok_or_else(|| {
            Error::InvalidParameter(format!("Q-basis is degenerate in degree {d} at {rho}"))
        })?;
        for (mu, c) in parts.iter().zip(solution) {
            out.add_term(mu.to_lambda(), &c)?;
        }
    }
    Ok(out)
}

/// Gauss-Jordan elimination on an augmented square system.
fn solve(a: &mut [Vec<Scalar>], n: usize) -> Option<Vec<Scalar>> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inverse().ok()?;
        for x in &mut a[col][col..=n] {
            *x = &*x * &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate().take(n) {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..=n].iter_mut().zip(&pivot_row[col..=n]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    Some(a.iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn schur_expansion_of_t1_squared() {
        let zero = QCache::new(RhoSpec::Value(Rational::zero()));
        let f = TPoly::term(Monomial::from_pairs([(1, 2)]), Scalar::one(zero.field()));
        let q = expand_in_q_basis(&f, &zero).unwrap();
        assert_eq!(q.to_text(), "1*Q[2] + 1*Q[1,1]");
        assert!(expand_in_q_basis(&f, &QCache::new(RhoSpec::xi(2).unwrap())).is_err());
    }
}
