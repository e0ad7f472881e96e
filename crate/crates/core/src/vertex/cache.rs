use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{LambdaVector, RhoSpec};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};
use crate::structure::QCombination;
use crate::tring::TPoly;

/// Vertex operators B_m and memoized Hall-Littlewood polynomials Q_λ at a
/// fixed ρ. Safe to share between threads.
pub struct QCache {
    rho: RhoSpec,
    field: Field,
    /// `one_row[s]` = Q_(s), the u^s coefficient of exp(Σ (1−ρ^k) t_k u^k).
    one_row: RwLock<Vec<Arc<TPoly>>>,
    memo: Option<RwLock<HashMap<Vec<i64>, Arc<TPoly>>>>,
    limit: Option<usize>,
}

impl QCache {
    pub fn new(rho: RhoSpec) -> Self {
        Self::with_options(rho, true, None)
    }

    /// `memoize = false` recomputes every Q_λ from scratch; `limit` caps
    /// the number of stored Q_λ.
    pub fn with_options(rho: RhoSpec, memoize: bool, limit: Option<usize>) -> Self {
        let field = rho.field();
        let one = Arc::new(TPoly::one(&field));
        QCache {
            rho,
            field,
            one_row: RwLock::new(vec![one]),
            memo: memoize.then(|| RwLock::new(HashMap::new())),
            limit,
        }
    }

    pub fn rho(&self) -> &RhoSpec {
        &self.rho
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of memoized Q_λ.
    pub fn cached(&self) -> usize {
        self.memo
            .as_ref()
            .map_or(0, |m| m.read().expect("cache lock").len())
    }

    /// Q_(s), with Q_(s) = 0 for s < 0, from s·Q_(s) = Σ_k k(1−ρ^k) t_k Q_(s−k).
    pub fn creation_coeff(&self, s: i64) -> Arc<TPoly> {
        if s < 0 {
            return Arc::new(TPoly::zero(&self.field));
        }
        let s = s as usize;
        if let Some(p) = self.one_row.read().expect("cache lock").get(s) {
            return p.clone();
        }
        let mut rows = self.one_row.write().expect("cache lock");
        while rows.len() <= s {
            let j = rows.len();
            let mut acc = TPoly::zero(&self.field);
            for k in 1..=j {
                let c = self
                    .rho
                    .one_minus_rho_pow(k as i64)
                    .expect("nonnegative power")
                    .scale(&Rational::new(k as i64, j as i64));
                if c.is_zero() {
                    continue;
                }
                let term = rows[j - k].mul_var(k as u32);
                acc.add_scaled(&term, &c).expect("same field");
            }
            rows.push(Arc::new(acc));
        }
        rows[s].clone()
    }

    /// The u^m coefficient of B(u)·f.
    pub fn apply_b(&self, m: i64, f: &TPoly) -> Result<TPoly> {
        self.field.check_same(f.field())?;
        let mut out = TPoly::zero(&self.field);
        if f.is_zero() {
            return Ok(out);
        }
        let d = f.degree() as i64;
        if m + d < 0 {
            return Ok(out);
        }
        // D_j = u^{-j} coefficient of exp(−Σ (1/k) ∂_k u^{-k}) f
        let mut ds: Vec<TPoly> = vec![f.clone()];
        for j in 1..=d {
            let mut acc = TPoly::zero(&self.field);
            for k in 1..=j {
                let prev = &ds[(j - k) as usize];
                if prev.is_zero() {
                    continue;
                }
                let dk = prev.derivative(k as u32);
                acc.add_scaled(&dk, &Scalar::one(&self.field))?;
            }
            ds.push(acc.scale_rational(&Rational::new(-1, j)));
        }
        for (j, dj) in ds.iter().enumerate() {
            let s = m + j as i64;
            if s < 0 || dj.is_zero() {
                continue;
            }
            let q = self.creation_coeff(s);
            out.add_scaled(&q.mul(dj)?, &Scalar::one(&self.field))?;
        }
        Ok(out)
    }

    /// Q_λ = B_{λ1} ⋯ B_{λl} · 1.
    pub fn hl_q(&self, lambda: &[i64]) -> Arc<TPoly> {
        let lam = LambdaVector::from(lambda);
        let lam = lam.without_trailing_zeros();
        if lam.is_empty() {
            return self.creation_coeff(0);
        }
        if LambdaVector::from(lam).tail_vanishes() {
            return Arc::new(TPoly::zero(&self.field));
        }
        if let Some(memo) = &self.memo {
            if let Some(p) = memo.read().expect("cache lock").get(lam) {
                return p.clone();
            }
        }
        let rest = self.hl_q(&lam[1..]);
        let value = Arc::new(self.apply_b(lam[0], &rest).expect("same field"));
        if let Some(memo) = &self.memo {
            let mut w = memo.write().expect("cache lock");
            if self.limit.is_none_or(|cap| w.len() < cap) {
                w.insert(lam.to_vec(), value.clone());
            }
        }
        value
    }

    /// t_r^⊥ f = (1/(r(1−ρ^r))) ∂f/∂t_r.
    pub fn perp_t(&self, r: u32, f: &TPoly) -> Result<TPoly> {
        let gap = self.rho.one_minus_rho_pow(r as i64)?;
        if r == 0 || gap.is_zero() {
            return Err(Error::AdjointUndefined {
                r,
                at: self.rho.to_string(),
            });
        }
        let c = gap.scale(&Rational::from_int(r as i64)).inverse()?;
        f.derivative(r).scale(&c)
    }

    /// p_k^⊥ Q_λ = Σ_i Q_{λ−kε_i}, as a formal combination.
    pub fn perp_p(&self, k: u32, lambda: &LambdaVector) -> Result<QCombination> {
        let gap = self.rho.one_minus_rho_pow(k as i64)?;
        if k == 0 || gap.is_zero() {
            return Err(Error::AdjointUndefined {
                r: k,
                at: self.rho.to_string(),
            });
        }
        let mut out = QCombination::zero(&self.field);
        let one = Scalar::one(&self.field);
        for i in 0..lambda.len() {
            out.add_term(lambda.shifted(i, -(k as i64)), &one)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RatFunc;
    use crate::tring::Monomial;

    fn generic() -> QCache {
        QCache::new(RhoSpec::Generic)
    }

    #[test]
    fn one_row_polynomials() {
        let c = generic();
        assert_eq!(c.apply_b(0, &TPoly::one(c.field())).unwrap().to_text(), "(1)");
        assert_eq!(c.hl_q(&[1]).to_text(), "(-ρ + 1)*t1");
        assert_eq!(
            c.hl_q(&[2]).to_text(),
            "(1/2*ρ^2 - ρ + 1/2)*t1^2 + (-ρ^2 + 1)*t2"
        );
        assert!(c.apply_b(-1, &TPoly::one(c.field())).unwrap().is_zero());
    }

    #[test]
    fn second_application() {
        // B_1 (1−ρ)t1 = (1−ρ)²t1² − (1−ρ)(1−ρ²)t2 − (1−ρ)³t1²/2
        let c = generic();
        let f = c.hl_q(&[1]);
        let got = c.apply_b(1, &f).unwrap();
        let one_minus = RatFunc::from_poly(crate::exactnum::UniPoly::from_ints(&[1, -1]));
        let a = one_minus.pow(2).unwrap().sub(&one_minus.pow(3).unwrap().scale(&Rational::new(1, 2)));
        let b = one_minus
            .mul(&RatFunc::from_poly(crate::exactnum::UniPoly::from_ints(&[1, 0, -1])))
            .neg();
        let want = TPoly::from_terms(
            c.field(),
            [
                (Monomial::from_pairs([(1, 2)]), Scalar::Func(a)),
                (Monomial::var(2), Scalar::Func(b)),
            ],
        )
        .unwrap();
        assert_eq!(got, want);
        assert_eq!(*c.hl_q(&[1, 1]), want);
    }

    #[test]
    fn specializations() {
        let s = QCache::new(RhoSpec::Value(Rational::zero()));
        assert_eq!(s.hl_q(&[1, 1]).to_text(), "1/2*t1^2 - 1*t2");
        let x2 = QCache::new(RhoSpec::xi(2).unwrap());
        assert_eq!(x2.hl_q(&[2]).to_text(), "2*t1^2");
        assert!(x2.hl_q(&[1, 1]).is_zero());
        assert_eq!(x2.hl_q(&[0, 2]).to_text(), "-2*t1^2");
        assert!(generic().hl_q(&[2, -1]).is_zero());
        assert_eq!(generic().hl_q(&[]).to_text(), "(1)");
    }

    #[test]
    fn adjoint_helpers() {
        let c = generic();
        let t1 = TPoly::var(c.field(), 1);
        assert_eq!(c.perp_t(1, &t1).unwrap().to_text(), "(-1)/(ρ - 1)");
        let x3 = QCache::new(RhoSpec::xi(3).unwrap());
        let t2sq = TPoly::term(Monomial::from_pairs([(2, 2)]), Scalar::one(x3.field()));
        let got = x3.perp_t(2, &t2sq).unwrap();
        let inv = x3.rho().one_minus_rho_pow(2).unwrap().inverse().unwrap();
        assert_eq!(got, TPoly::var(x3.field(), 2).scale(&inv).unwrap());
        let x2 = QCache::new(RhoSpec::xi(2).unwrap());
        assert!(matches!(
            x2.perp_t(2, &TPoly::var(x2.field(), 2)),
            Err(Error::AdjointUndefined { r: 2, .. })
        ));
        let p = c.perp_p(1, &LambdaVector(vec![2, 1])).unwrap();
        assert_eq!(p.to_text(), "(1)*Q[2,0] + (1)*Q[1,1]");
        let p = c.perp_p(3, &LambdaVector(vec![1])).unwrap();
        assert!(p.evaluate(&c).unwrap().is_zero());
    }

    #[test]
    fn memo_matches_fresh() {
        let memo = QCache::new(RhoSpec::xi(3).unwrap());
        let fresh = QCache::with_options(RhoSpec::xi(3).unwrap(), false, None);
        for lam in [vec![3, 1, 2], vec![2, 2], vec![0, 4, -1], vec![1, 2, 3]] {
            assert_eq!(memo.hl_q(&lam), fresh.hl_q(&lam));
            assert_eq!(memo.hl_q(&lam), fresh.hl_q(&lam));
        }
        assert!(memo.cached() > 0);
        assert_eq!(fresh.cached(), 0);
    }
}
