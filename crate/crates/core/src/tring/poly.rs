use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::Monomial;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Rational, Scalar};

/// A finitely supported polynomial in t1, t2, … over one coefficient field.
#[derive(Clone, PartialEq, Eq)]
pub struct TPoly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TPoly {
    pub fn zero(field: &Field) -> Self {
        TPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(&c.field());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable t_a.
    pub fn var(field: &Field, a: u32) -> Self {
        Self::term(Monomial::var(a), Scalar::one(field))
    }

    /// Collect terms; coefficients must all lie in `field`.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(
        field: &Field,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero(field);
        for (m, c) in terms {
            field.check_same(&c.field())?;
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.field))
    }

    /// Highest degree among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().next().map_or(0, Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Largest variable index occurring.
    pub fn max_var(&self) -> u32 {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    /// Sorted indices of the variables that occur.
    pub fn variables(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(a, _)| a))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn involves(&self, a: u32) -> bool {
        self.terms.keys().any(|m| m.exponent(a) > 0)
    }

    /// Add `c·m` in place. The caller guarantees `c` is in this field.
    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &TPoly, c: &Scalar) -> Result<()> {
        self.field.check_same(&other.field)?;
        self.field.check_same(&c.field())?;
        if c.is_zero() {
            return Ok(());
        }
        let unit = c.is_one();
        for (m, a) in &other.terms {
            if unit {
                self.add_term(m.clone(), a);
            } else {
                self.add_term(m.clone(), &(a * c));
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &TPoly) -> Result<TPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one(&self.field))?;
        Ok(out)
    }

    pub fn sub(&self, other: &TPoly) -> Result<TPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(&self.field, -1))?;
        Ok(out)
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<TPoly> {
        self.field.check_same(&c.field())?;
        if c.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        Ok(TPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> TPoly {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        TPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.scale(c))).collect(),
        }
    }

    pub fn mul(&self, other: &TPoly) -> Result<TPoly> {
        self.field.check_same(&other.field)?;
        let mut out = Self::zero(&self.field);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), &(a * b));
            }
        }
        Ok(out)
    }

    /// Multiplication by t_a.
    pub fn mul_var(&self, a: u32) -> TPoly {
        TPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times_var(a), c.clone()))
                .collect(),
        }
    }

    /// ∂/∂t_a.
    pub fn derivative(&self, a: u32) -> TPoly {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            if let Some((e, d)) = m.derive(a) {
                out.add_term(d, &c.scale(&Rational::from_int(e as i64)));
            }
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> TPoly {
        TPoly {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apply `f` to every coefficient, landing in `field`; zeros are dropped.
    pub fn map_coeffs<F>(&self, field: &Field, mut f: F) -> Result<TPoly>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut out = Self::zero(field);
        for (m, c) in &self.terms {
            let v = f(c)?;
            field.check_same(&v.field())?;
            out.add_term(m.clone(), &v);
        }
        Ok(out)
    }

    /// Re-embed a polynomial with rational-valued coefficients into `field`.
    pub fn embed(&self, field: &Field) -> Result<TPoly> {
        self.map_coeffs(field, |c| c.embed(field))
    }

    /// Canonical text, e.g. `1/2*t1^2 - 1*t2`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_rational();
            let body = if neg { (-c).term_text() } else { c.term_text() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
            if !m.is_one() {
                out.push('*');
                out.push_str(&m.to_string());
            }
        }
        out
    }

    /// JSON form: a list of `{"monomial": {"1": e1, …}, "coeff": "<text>"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mono: serde_json::Map<String, Value> = m
                        .pairs()
                        .iter()
                        .map(|&(a, e)| (a.to_string(), json!(e)))
                        .collect();
                    json!({"monomial": mono, "coeff": c.to_string()})
                })
                .collect(),
        )
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<TPoly> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let items = v.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut out = Self::zero(field);
        for item in items {
            let mono = item
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing monomial"))?;
            let mut pairs = Vec::new();
            for (k, e) in mono {
                let a: u32 = k.parse().map_err(|_| bad("variable index"))?;
                let e = e.as_u64().ok_or_else(|| bad("exponent"))? as u32;
                if a == 0 {
                    return Err(bad("variable index"));
                }
                pairs.push((a, e));
            }
            let c = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coeff"))?;
            out.add_term(Monomial::from_pairs(pairs), &Scalar::parse(field, c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly[{:?}]({})", self.field, self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RatFunc;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n, d))
    }

    #[test]
    fn canonical_text() {
        let f = Field::Rational;
        let p = TPoly::from_terms(
            &f,
            [
                (Monomial::var(2), q(-1, 1)),
                (Monomial::from_pairs([(1, 2)]), q(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_text(), "1/2*t1^2 - 1*t2");
        assert_eq!(TPoly::zero(&f).to_text(), "0");
        assert_eq!(TPoly::one(&f).neg().to_text(), "-1");

        let g = Field::RationalFunction;
        let r = TPoly::term(Monomial::var(1), Scalar::Func(RatFunc::rho()));
        assert_eq!(r.sub(&TPoly::one(&g)).unwrap().to_text(), "(ρ)*t1 + (-1)");
    }

    #[test]
    fn ring_operations() {
        let f = Field::Rational;
        let t1 = TPoly::var(&f, 1);
        let t2 = TPoly::var(&f, 2);
        let p = t1.add(&t2).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.to_text(), "1*t2^2 + 2*t1*t2 + 1*t1^2");
        assert!(!sq.is_homogeneous());
        assert_eq!(sq.derivative(1).to_text(), "2*t2 + 2*t1");
        assert_eq!(sq.derivative(3).to_text(), "0");
        assert!(sq.sub(&sq).unwrap().is_zero());
        assert!(t1.add(&TPoly::var(&Field::RationalFunction, 1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = Field::cyclotomic(3);
        let z = match &f {
            Field::Cyclotomic(c) => Scalar::Cyc(crate::exactnum::Cyclotomic::generator(c)),
            _ => unreachable!(),
        };
        let p = TPoly::term(Monomial::from_pairs([(1, 1), (4, 2)]), z)
            .add(&TPoly::one(&f))
            .unwrap();
        let back = TPoly::from_json(&f, &p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_text(), "(z)*t1*t4^2 + 1");
    }
}
