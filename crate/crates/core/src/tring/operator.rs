use std::fmt;

use super::{Monomial, TPoly};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};

/// Multiply by t_a, or differentiate in t_a.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Prim {
    Mul(u32),
    Der(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PrimKind {
    Mul,
    Der,
}

impl PrimKind {
    fn at(self, index: i64) -> Option<Prim> {
        let a = u32::try_from(index).ok().filter(|&a| a >= 1)?;
        Some(match self {
            PrimKind::Mul => Prim::Mul(a),
            PrimKind::Der => Prim::Der(a),
        })
    }
}

impl fmt::Display for Prim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prim::Mul(a) => write!(f, "t{a}"),
            Prim::Der(a) => write!(f, "d{a}"),
        }
    }
}

/// `coeff · f₁ ∘ f₂` with at most two primitive factors, applied right to left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpTerm {
    coeff: Scalar,
    factors: Vec<Prim>,
}

impl OpTerm {
    pub fn new(coeff: Scalar, factors: Vec<Prim>) -> Self {
        assert!(factors.len() <= 2, "operator terms have at most two factors");
        OpTerm { coeff, factors }
    }

    /// Build from signed indices; `None` when an index is ≤ 0 (t_k = 0 and
    /// ∂/∂t_k = 0 for such k).
    pub fn from_indices(coeff: Scalar, factors: &[(PrimKind, i64)]) -> Option<Self> {
        let prims = factors
            .iter()
            .map(|&(kind, idx)| kind.at(idx))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeff, prims))
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn factors(&self) -> &[Prim] {
        &self.factors
    }

    /// Image of a single monomial: integer multiplier and resulting monomial.
    fn act(&self, m: &Monomial) -> Option<(u64, Monomial)> {
        let mut mult = 1u64;
        let mut cur = m.clone();
        for p in self.factors.iter().rev() {
            match *p {
                Prim::Mul(a) => cur = cur.times_var(a),
                Prim::Der(a) => {
                    let (e, d) = cur.derive(a)?;
                    mult *= e as u64;
                    cur = d;
                }
            }
        }
        Some((mult, cur))
    }
}

impl fmt::Display for OpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coeff.term_text())?;
        for p in &self.factors {
            write!(f, "*{p}")?;
        }
        Ok(())
    }
}

/// The family k ↦ scale·(slope·k + offset)·Π prim(k + shift) for k in
/// `start..=end` (unbounded when `end` is `None`), optionally skipping k
/// divisible by `skip_multiples_of`.
#[derive(Clone, Debug)]
pub struct FamilyRule {
    pub scale: Scalar,
    pub slope: Rational,
    pub offset: Rational,
    pub factors: Vec<(PrimKind, i64)>,
    pub start: i64,
    pub end: Option<i64>,
    pub skip_multiples_of: Option<u32>,
}

impl FamilyRule {
    fn member(&self, k: i64) -> Option<OpTerm> {
        if let Some(n) = self.skip_multiples_of {
            if k.rem_euclid(n as i64) == 0 {
                return None;
            }
        }
        let c = &(&self.slope * &Rational::from_int(k)) + &self.offset;
        if c.is_zero() {
            return None;
        }
        let factors: Vec<(PrimKind, i64)> =
            self.factors.iter().map(|&(kind, s)| (kind, k + s)).collect();
        OpTerm::from_indices(self.scale.scale(&c), &factors)
    }

    /// Values of k for which the member can act nontrivially on a
    /// polynomial whose variables are `vars`.
    fn active_indices(&self, vars: &[u32]) -> Vec<i64> {
        let in_range = |k: i64| k >= self.start && self.end.is_none_or(|e| k <= e);
        match self.factors.last() {
            Some(&(PrimKind::Der, shift)) => vars
                .iter()
                .map(|&a| a as i64 - shift)
                .filter(|&k| in_range(k))
                .collect(),
            _ => {
                let end = self.end.expect("validated: multiplicative families are finite");
                (self.start..=end).collect()
            }
        }
    }
}

impl fmt::Display for FamilyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum[k={}..", self.start)?;
        if let Some(e) = self.end {
            write!(f, "{e}")?;
        }
        if let Some(n) = self.skip_multiples_of {
            write!(f, ", {n}!|k")?;
        }
        write!(
            f,
            "] {}*({}*k + {})",
            self.scale.term_text(),
            self.slope,
            self.offset
        )?;
        for &(kind, shift) in &self.factors {
            let sym = match kind {
                PrimKind::Mul => "t",
                PrimKind::Der => "d",
            };
            match shift {
                0 => write!(f, "*{sym}{{k}}")?,
                s if s > 0 => write!(f, "*{sym}{{k+{s}}}")?,
                s => write!(f, "*{sym}{{k-{}}}", -s)?,
            }
        }
        Ok(())
    }
}

/// A linear operator on the t-polynomial ring, kept as data.
#[derive(Clone, Debug)]
pub struct LinOperator {
    field: Field,
    terms: Vec<OpTerm>,
    families: Vec<FamilyRule>,
}

impl LinOperator {
    pub fn zero(field: &Field) -> Self {
        LinOperator {
            field: field.clone(),
            terms: Vec::new(),
            families: Vec::new(),
        }
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut op = Self::zero(&c.field());
        op.terms.push(OpTerm::new(c, Vec::new()));
        op
    }

    pub fn mul(field: &Field, a: u32) -> Self {
        let mut op = Self::zero(field);
        op.terms.push(OpTerm::new(Scalar::one(field), vec![Prim::Mul(a)]));
        op
    }

    pub fn der(field: &Field, a: u32) -> Self {
        let mut op = Self::zero(field);
        op.terms.push(OpTerm::new(Scalar::one(field), vec![Prim::Der(a)]));
        op
    }

    /// Σ_{k≥1} k t_k ∂/∂t_k, the degree operator.
    pub fn grading(field: &Field) -> Self {
        let mut op = Self::zero(field);
        op.families.push(FamilyRule {
            scale: Scalar::one(field),
            slope: Rational::one(),
            offset: Rational::zero(),
            factors: vec![(PrimKind::Mul, 0), (PrimKind::Der, 0)],
            start: 1,
            end: None,
            skip_multiples_of: None,
        });
        op
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    pub fn families(&self) -> &[FamilyRule] {
        &self.families
    }

    /// Append `coeff · Π prims`, silently dropping terms with an index ≤ 0.
    pub fn push_term(&mut self, coeff: Scalar, factors: &[(PrimKind, i64)]) -> Result<()> {
        self.field.check_same(&coeff.field())?;
        if coeff.is_zero() {
            return Ok(());
        }
        if let Some(t) = OpTerm::from_indices(coeff, factors) {
            self.terms.push(t);
        }
        Ok(())
    }

    pub fn push_family(&mut self, rule: FamilyRule) -> Result<()> {
        self.field.check_same(&rule.scale.field())?;
        if rule.factors.len() > 2 {
            return Err(Error::InvalidParameter(
                "operator family with more than two factors".into(),
            ));
        }
        let der_last = matches!(rule.factors.last(), Some(&(PrimKind::Der, _)));
        if rule.end.is_none() && !der_last {
            return Err(Error::InvalidParameter(
                "unbounded operator family must end in a derivative".into(),
            ));
        }
        self.families.push(rule);
        Ok(())
    }

    pub fn plus(&self, other: &LinOperator) -> Result<LinOperator> {
        self.field.check_same(&other.field)?;
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out.families.extend(other.families.iter().cloned());
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> Result<LinOperator> {
        self.field.check_same(&c.field())?;
        Ok(LinOperator {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| OpTerm::new(&t.coeff * c, t.factors.clone()))
                .collect(),
            families: self
                .families
                .iter()
                .map(|r| FamilyRule {
                    scale: &r.scale * c,
                    ..r.clone()
                })
                .collect(),
        })
    }

    /// Finite terms together with the family members that can act on a
    /// polynomial in the variables `vars`.
    pub fn instantiate(&self, vars: &[u32]) -> Vec<OpTerm> {
        let mut out = self.terms.clone();
        for rule in &self.families {
            out.extend(
                rule.active_indices(vars)
                    .into_iter()
                    .filter_map(|k| rule.member(k)),
            );
        }
        out
    }

    /// Every term whose primitive indices are all ≤ `bound`, families
    /// listed member by member in increasing k.
    pub fn expand_up_to(&self, bound: u32) -> Vec<OpTerm> {
        let vars: Vec<u32> = (1..=bound).collect();
        let mut out: Vec<OpTerm> = self
            .terms
            .iter()
            .filter(|t| t.factors.iter().all(|p| index_of(p) <= bound))
            .cloned()
            .collect();
        for rule in &self.families {
            let mut ks = rule.active_indices(&vars);
            ks.sort_unstable();
            out.extend(
                ks.into_iter()
                    .filter_map(|k| rule.member(k))
                    .filter(|t| t.factors.iter().all(|p| index_of(p) <= bound)),
            );
        }
        out
    }

    pub fn apply(&self, f: &TPoly) -> Result<TPoly> {
        self.field.check_same(f.field())?;
        let ops = self.instantiate(&f.variables());
        let mut out = TPoly::zero(&self.field);
        for (m, c) in f.terms() {
            for op in &ops {
                if let Some((mult, image)) = op.act(m) {
                    let k = op.coeff.scale(&Rational::from_int(mult as i64));
                    out.add_term(image, &(&k * c));
                }
            }
        }
        Ok(out)
    }
}

fn index_of(p: &Prim) -> u32 {
    match *p {
        Prim::Mul(a) | Prim::Der(a) => a,
    }
}

impl fmt::Display for LinOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        parts.extend(self.families.iter().map(|r| r.to_string()));
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// A(B(f)) − B(A(f)).
pub fn commutator_apply(a: &LinOperator, b: &LinOperator, f: &TPoly) -> Result<TPoly> {
    a.apply(&b.apply(f)?)?.sub(&b.apply(&a.apply(f)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n, d))
    }

    #[test]
    fn derivative_and_grading() {
        let q = Field::Rational;
        let f = TPoly::term(Monomial::from_pairs([(1, 2)]), rat(1, 2));
        assert_eq!(LinOperator::der(&q, 1).apply(&f).unwrap().to_text(), "1*t1");
        let g = TPoly::term(Monomial::from_pairs([(1, 1), (3, 1)]), rat(1, 1));
        assert_eq!(LinOperator::grading(&q).apply(&g).unwrap().to_text(), "4*t1*t3");
    }

    #[test]
    fn quadratic_tail() {
        let q = Field::Rational;
        let mut op = LinOperator::zero(&q);
        op.push_term(rat(1, 2), &[(PrimKind::Mul, 1), (PrimKind::Mul, 1)])
            .unwrap();
        assert_eq!(op.apply(&TPoly::one(&q)).unwrap().to_text(), "1/2*t1^2");
        op.push_term(rat(5, 1), &[(PrimKind::Mul, 0)]).unwrap();
        assert_eq!(op.terms().len(), 1);
    }

    #[test]
    fn canonical_commutation() {
        let q = Field::Rational;
        let r = commutator_apply(
            &LinOperator::der(&q, 1),
            &LinOperator::mul(&q, 1),
            &TPoly::one(&q),
        )
        .unwrap();
        assert_eq!(r.to_text(), "1");
    }

    #[test]
    fn unbounded_multiplicative_family_rejected() {
        let q = Field::Rational;
        let mut op = LinOperator::zero(&q);
        let rule = FamilyRule {
            scale: Scalar::one(&q),
            slope: Rational::one(),
            offset: Rational::zero(),
            factors: vec![(PrimKind::Mul, 0)],
            start: 1,
            end: None,
            skip_multiples_of: None,
        };
        assert!(op.push_family(rule).is_err());
    }
}
