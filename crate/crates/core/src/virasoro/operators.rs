use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};
use crate::tring::{FamilyRule, LinOperator, PrimKind};

/// Operator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// L_m^(n), the Virasoro operators at ρ = ξₙ.
    Lmn,
    /// Σ_{k≥1} k t_k ∂_{k+mn}.
    Lhat,
    /// L̂_m + ½ W_m, for m ≥ 1.
    Ltilde,
    /// Σ_{k=1}^{mn−1} ∂_k ∂_{mn−k}, for m ≥ 1.
    Wmn,
    /// Σ_{k=1, n∤k}^{mn−1} p_k p_{mn−k}, for m ≥ 1.
    Vmn,
    /// Schur Virasoro operator, including the quadratic tail for m < 0.
    LS,
    /// Schur Virasoro operator without the quadratic tail.
    LSNoTail,
    /// Σ_{k≥1} k t_k ∂_{k+m}.
    LSHat,
    /// The second-order part of L^S_m, unhalved.
    WS,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Lmn => "L",
            Family::Lhat => "Lhat",
            Family::Ltilde => "Ltilde",
            Family::Wmn => "W",
            Family::Vmn => "V",
            Family::LS => "LS",
            Family::LSNoTail => "LSnotail",
            Family::LSHat => "LShat",
            Family::WS => "WS",
        }
    }

    pub fn needs_n(self) -> bool {
        matches!(
            self,
            Family::Lmn | Family::Lhat | Family::Ltilde | Family::Wmn | Family::Vmn
        )
    }

    const ALL: [Family; 9] = [
        Family::Lmn,
        Family::Lhat,
        Family::Ltilde,
        Family::Wmn,
        Family::Vmn,
        Family::LS,
        Family::LSNoTail,
        Family::LSHat,
        Family::WS,
    ];
}

/// Which operator to build: a family, the root order n (for the ξₙ
/// families) and the mode m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirasoroSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub m: i64,
}

impl VirasoroSpec {
    pub fn new(family: Family, n: Option<u32>, m: i64) -> Result<Self> {
        let spec = VirasoroSpec { family, n, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn l(n: u32, m: i64) -> Self {
        VirasoroSpec { family: Family::Lmn, n: Some(n), m }
    }

    pub fn schur(m: i64) -> Self {
        VirasoroSpec { family: Family::LS, n: None, m }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match (self.family.needs_n(), self.n) {
            (true, None) => return bad(format!("{} needs n", self.family.name())),
            (true, Some(n)) if n < 2 => return bad(format!("n must be at least 2, got {n}")),
            (false, Some(_)) => return bad(format!("{} takes no n", self.family.name())),
            _ => {}
        }
        if matches!(self.family, Family::Ltilde | Family::Wmn | Family::Vmn) && self.m < 1 {
            return bad(format!("{} needs m ≥ 1, got {}", self.family.name(), self.m));
        }
        Ok(())
    }

    fn step(&self) -> i64 {
        self.m * self.n.unwrap_or(1) as i64
    }
}

impl fmt::Display for VirasoroSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        if let Some(n) = self.n {
            write!(f, "n={n},")?;
        }
        write!(f, "m={}", self.m)
    }
}

impl FromStr for VirasoroSpec {
    type Err = Error;

    /// `L:n=2,m=-1`, `Lhat:n=3,m=2`, `LS:m=-2`, …
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad operator spec {s:?}"));
        let (name, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown operator family {name:?}")))?;
        let (mut n, mut m) = (None, None);
        for kv in args.split(',').filter(|x| !x.trim().is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            match k.trim() {
                "n" => n = Some(v.trim().parse().map_err(|_| bad())?),
                "m" => m = Some(v.trim().parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        VirasoroSpec::new(family, n, m.ok_or_else(bad)?)
    }
}

fn half(field: &Field) -> Scalar {
    Scalar::from_rational(field, Rational::new(1, 2))
}

/// Σ_{k≥1} k t_k ∂_{k+shift}, skipping multiples of `skip`.
fn shift_family(field: &Field, shift: i64, skip: Option<u32>) -> FamilyRule {
    FamilyRule {
        scale: Scalar::one(field),
        slope: Rational::one(),
        offset: Rational::zero(),
        factors: vec![(PrimKind::Mul, 0), (PrimKind::Der, shift)],
        start: 1,
        end: None,
        skip_multiples_of: skip,
    }
}

/// c · Σ_{k=1, skip∤k}^{total−1} ∂_k ∂_{total−k}.
fn push_second_derivatives(
    op: &mut LinOperator,
    total: i64,
    c: &Scalar,
    skip: Option<u32>,
) -> Result<()> {
    for k in 1..total {
        if skip.is_some_and(|n| k % n as i64 == 0) {
            continue;
        }
        op.push_term(c.clone(), &[(PrimKind::Der, k), (PrimKind::Der, total - k)])?;
    }
    Ok(())
}

/// c · Σ_{k=1, skip∤k}^{total−1} k(total−k) t_k t_{total−k}.
fn push_products(op: &mut LinOperator, total: i64, c: &Scalar, skip: Option<u32>) -> Result<()> {
    for k in 1..total {
        if skip.is_some_and(|n| k % n as i64 == 0) {
            continue;
        }
        let w = c.scale(&Rational::from_int(k * (total - k)));
        op.push_term(w, &[(PrimKind::Mul, k), (PrimKind::Mul, total - k)])?;
    }
    Ok(())
}

/// The operator described by `spec`, with coefficients in `field`.
pub fn build_operator(spec: &VirasoroSpec, field: &Field) -> Result<LinOperator> {
    spec.validate()?;
    let mut op = LinOperator::zero(field);
    let step = spec.step();
    let half = half(field);
    let one = Scalar::one(field);
    match spec.family {
        Family::Lmn => {
            let n = spec.n.expect("validated");
            op.push_family(shift_family(field, step, Some(n)))?;
            if step > 0 {
                push_second_derivatives(&mut op, step, &half, Some(n))?;
            }
            if step < 0 {
                // −½ Σ k(mn+k) t_k t_{−mn−k} = ½ Σ k(−mn−k) t_k t_{−mn−k}
                push_products(&mut op, -step, &half, Some(n))?;
            }
            if step == 0 {
                let c = Rational::new((n * n) as i64 - 1, 24);
                op.push_term(Scalar::from_rational(field, c), &[])?;
            }
        }
        Family::Lhat | Family::LSHat => op.push_family(shift_family(field, step, None))?,
        Family::Ltilde => {
            op.push_family(shift_family(field, step, None))?;
            push_second_derivatives(&mut op, step, &half, None)?;
        }
        Family::Wmn => push_second_derivatives(&mut op, step, &one, None)?,
        Family::Vmn => push_products(&mut op, step, &one, spec.n)?,
        Family::LS | Family::LSNoTail => {
            op.push_family(shift_family(field, step, None))?;
            push_second_derivatives(&mut op, step, &half, None)?;
            if spec.family == Family::LS && step < 0 {
                push_products(&mut op, -step, &half, None)?;
            }
        }
        Family::WS => {
            if step >= 0 {
                push_second_derivatives(&mut op, step, &one, None)?;
            } else {
                push_products(&mut op, -step, &one, None)?;
            }
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tring::{Monomial, TPoly};

    fn t(pairs: &[(u32, u32)], c: Rational) -> TPoly {
        TPoly::term(Monomial::from_pairs(pairs.iter().copied()), Scalar::Rat(c))
    }

    #[test]
    fn documented_actions() {
        let q = Field::Rational;
        let l0 = build_operator(&VirasoroSpec::l(2, 0), &q).unwrap();
        let f = t(&[(1, 1)], Rational::from_int(2));
        assert_eq!(l0.apply(&f).unwrap().to_text(), "9/4*t1");
        let lm1 = build_operator(&VirasoroSpec::l(2, -1), &q).unwrap();
        assert_eq!(lm1.apply(&TPoly::one(&q)).unwrap().to_text(), "1/2*t1^2");
        let ls = build_operator(&VirasoroSpec::schur(-2), &q).unwrap();
        assert_eq!(ls.apply(&TPoly::one(&q)).unwrap().to_text(), "1/2*t1^2");
    }

    #[test]
    fn l1_term_list_skips_even_indices() {
        let op = build_operator(&VirasoroSpec::l(2, 1), &Field::Rational).unwrap();
        let listed: Vec<String> = op.expand_up_to(6).iter().map(|t| t.to_string()).collect();
        assert_eq!(listed[0], "1/2*d1*d1");
        assert!(listed.contains(&"1*t1*d3".to_string()));
        assert!(listed.contains(&"3*t3*d5".to_string()));
        assert!(!listed.iter().any(|s| s.contains("t2*") || s.contains("t4*")));
    }

    #[test]
    fn parse_and_validate() {
        let s: VirasoroSpec = "L:n=2,m=-1".parse().unwrap();
        assert_eq!(s, VirasoroSpec::l(2, -1));
        assert_eq!(s.to_string(), "L:n=2,m=-1");
        assert!("W:n=2,m=0".parse::<VirasoroSpec>().is_err());
        assert!("LS:n=2,m=1".parse::<VirasoroSpec>().is_err());
        assert!("L:m=1".parse::<VirasoroSpec>().is_err());
        assert!("Q:n=2,m=1".parse::<VirasoroSpec>().is_err());
    }
}
