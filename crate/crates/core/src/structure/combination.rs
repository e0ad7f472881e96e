use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::tring::TPoly;
use crate::vertex::{LambdaVector, QCache};

/// A formal finite combination Σ c_λ Q_λ.
#[derive(Clone, PartialEq, Eq)]
pub struct QCombination {
    field: Field,
    terms: BTreeMap<LambdaVector, Scalar>,
}

impl QCombination {
    pub fn zero(field: &Field) -> Self {
        QCombination {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn single(label: LambdaVector, c: Scalar) -> Self {
        let mut q = Self::zero(&c.field());
        if !c.is_zero() {
            q.terms.insert(label, c);
        }
        q
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Terms in ascending label order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&LambdaVector, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &LambdaVector) -> Scalar {
        self.terms
            .get(label)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn add_term(&mut self, label: LambdaVector, c: &Scalar) -> Result<()> {
        self.field.check_same(&c.field())?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(label) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().try_add(c)?;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &QCombination, c: &Scalar) -> Result<()> {
        self.field.check_same(&other.field)?;
        for (label, a) in &other.terms {
            self.add_term(label.clone(), &a.try_mul(c)?)?;
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> Result<QCombination> {
        let mut out = Self::zero(&self.field);
        out.add_scaled(self, c)?;
        Ok(out)
    }

    /// Σ c_λ Q_λ evaluated through the vertex-operator construction.
    pub fn evaluate(&self, cache: &QCache) -> Result<TPoly> {
        self.field.check_same(cache.field())?;
        let mut out = TPoly::zero(&self.field);
        for (label, c) in &self.terms {
            out.add_scaled(&cache.hl_q(label.parts()), c)?;
        }
        Ok(out)
    }

    /// Canonical text, labels in descending lexicographic order, e.g.
    /// `(ρ)*Q[3,1] + (ρ - 1)*Q[2,2]`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (label, c)) in self.terms.iter().rev().enumerate() {
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
            out.push_str("*Q");
            out.push_str(&label.to_string());
        }
        out
    }

    /// JSON form: a list of `{"label": [..], "coeff": "<text>"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(label, c)| json!({"label": label.parts(), "coeff": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<QCombination> {
        let bad = |what: &str| Error::Parse(format!("combination JSON: {what}"));
        let items = v.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut out = Self::zero(field);
        for item in items {
            let label: Vec<i64> = item
                .get("label")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing label"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("label entry")))
                .collect::<Result<_>>()?;
            let c = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coeff"))?;
            out.add_term(LambdaVector(label), &Scalar::parse(field, c)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for QCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for QCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QCombination[{:?}]({})", self.field, self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn text_and_json() {
        let f = Field::Rational;
        let mut q = QCombination::zero(&f);
        q.add_term(LambdaVector(vec![1, 1]), &Scalar::from_int(&f, -2))
            .unwrap();
        q.add_term(LambdaVector(vec![2]), &Scalar::from_int(&f, -1))
            .unwrap();
        assert_eq!(q.to_text(), "-1*Q[2] - 2*Q[1,1]");
        let back = QCombination::from_json(&f, &q.to_json()).unwrap();
        assert_eq!(back, q);
        q.add_term(LambdaVector(vec![2]), &Scalar::Rat(Rational::one()))
            .unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(QCombination::zero(&f).to_text(), "0");
    }
}
