use std::collections::HashMap;
use std::sync::RwLock;

use super::QCombination;
use crate::exactnum::{Field, Scalar};
use crate::vertex::{LambdaVector, RhoSpec};

/// One rewriting step applied to the leftmost violation of a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// A negative tail sum: the label is zero.
    Zero,
    /// Already a partition (or empty).
    Normal,
    /// Drop a trailing zero part.
    DropZero(LambdaVector),
    /// Exchange-relation expansion at an adjacent ascent.
    Expand(Vec<(LambdaVector, Scalar)>),
}

/// Rewrites Q_λ for arbitrary λ ∈ Z^l into Q_μ with μ a partition, using the
/// quadratic relations among the B_m.
pub struct Straightener {
    rho: RhoSpec,
    field: Field,
    rho_sq_minus_one: Scalar,
    rho_minus_one: Scalar,
    memo: RwLock<HashMap<LambdaVector, QCombination>>,
}

impl Straightener {
    pub fn new(rho: RhoSpec) -> Self {
        let field = rho.field();
        let one = Scalar::one(&field);
        let r = rho.rho();
        Straightener {
            rho_sq_minus_one: &(&r * &r) - &one,
            rho_minus_one: &r - &one,
            field,
            rho,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn rho(&self) -> &RhoSpec {
        &self.rho
    }

    fn rho_pow(&self, k: i64) -> Scalar {
        self.rho.rho_pow(k).expect("nonnegative power")
    }

    pub fn rewrite_once(&self, lambda: &LambdaVector) -> Rewrite {
        if lambda.tail_vanishes() {
            return Rewrite::Zero;
        }
        let parts = lambda.parts();
        if parts.last() == Some(&0) {
            return Rewrite::DropZero(LambdaVector(parts[..parts.len() - 1].to_vec()));
        }
        let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) else {
            return Rewrite::Normal;
        };
        let (a, b) = (parts[i], parts[i + 1]);
        let r = b - a;
        let with = |x: i64, y: i64| {
            let mut v = parts.to_vec();
            v[i] = x;
            v[i + 1] = y;
            LambdaVector(v)
        };
        let mut out = vec![(with(b, a), self.rho.rho())];
        let last = if r % 2 == 1 { (r - 1) / 2 } else { r / 2 - 1 };
        for s in 1..=last {
            let c = &self.rho_sq_minus_one * &self.rho_pow(s - 1);
            out.push((with(b - s, a + s), c));
        }
        if r % 2 == 0 {
            let h = r / 2;
            let c = &self.rho_pow(h - 1) * &self.rho_minus_one;
            out.push((with(b - h, a + h), c));
        }
        Rewrite::Expand(out)
    }

    pub fn straighten(&self, lambda: &LambdaVector) -> QCombination {
        if let Some(q) = self.memo.read().expect("straighten lock").get(lambda) {
            return q.clone();
        }
        let result = match self.rewrite_once(lambda) {
            Rewrite::Zero => QCombination::zero(&self.field),
            Rewrite::Normal => QCombination::single(lambda.clone(), Scalar::one(&self.field)),
            Rewrite::DropZero(next) => self.straighten(&next),
            Rewrite::Expand(terms) => {
                let mut acc = QCombination::zero(&self.field);
                for (label, c) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    acc.add_scaled(&self.straighten(&label), &c)
                        .expect("same field");
                }
                acc
            }
        };
        self.memo
            .write()
            .expect("straighten lock")
            .insert(lambda.clone(), result.clone());
        result
    }

    /// Straighten every label of a combination.
    pub fn straighten_combination(&self, q: &QCombination) -> QCombination {
        let mut acc = QCombination::zero(&self.field);
        for (label, c) in q.terms() {
            acc.add_scaled(&self.straighten(label), c).expect("same field");
        }
        acc
    }
}

/// Σ i·λ_i, which every expansion step strictly decreases.
pub fn straighten_measure(lambda: &LambdaVector) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| (i as i64 + 1) * x)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LambdaVector {
        LambdaVector(v.to_vec())
    }

    #[test]
    fn documented_examples() {
        let g = Straightener::new(RhoSpec::Generic);
        assert_eq!(g.straighten(&lv(&[1, 2])).to_text(), "(ρ)*Q[2,1]");
        assert_eq!(
            g.straighten(&lv(&[1, 3])).to_text(),
            "(ρ)*Q[3,1] + (ρ - 1)*Q[2,2]"
        );
        assert_eq!(g.straighten(&lv(&[2, -1, 1])).to_text(), "(ρ - 1)*Q[2]");
        let x2 = Straightener::new(RhoSpec::xi(2).unwrap());
        assert_eq!(
            x2.straighten(&lv(&[0, 2])).to_text(),
            "-1*Q[2] - 2*Q[1,1]"
        );
        assert_eq!(g.straighten(&lv(&[0])).to_text(), "(1)*Q[]");
        assert!(g.straighten(&lv(&[1, -2])).is_empty());
    }

    #[test]
    fn each_step_lowers_the_measure() {
        let g = Straightener::new(RhoSpec::Generic);
        let l = lv(&[-1, 0, 3, 1]);
        match g.rewrite_once(&l) {
            Rewrite::Expand(terms) => {
                for (t, _) in terms {
                    assert!(straighten_measure(&t) < straighten_measure(&l));
                }
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
