//! Coefficient field values tagged with the field they live in.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use super::{Cyclotomic, CyclotomicField, RatFunc, Rational, UniPoly};
use crate::error::{Error, Result};

/// One of the three coefficient fields: Q, Q(ξₙ) or Q(ρ).
#[derive(Clone)]
pub enum Field {
    Rational,
    Cyclotomic(Arc<CyclotomicField>),
    RationalFunction,
}

impl Field {
    pub fn cyclotomic(n: u32) -> Self {
        Field::Cyclotomic(CyclotomicField::new(n))
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Cyclotomic(c) => format!("Q(ξ_{})", c.order()),
            Field::RationalFunction => "Q(ρ)".to_string(),
        }
    }

    pub fn check_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.name(),
                right: other.name(),
            })
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::RationalFunction, Field::RationalFunction) => true,
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) => a.order() == b.order(),
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An exact scalar in one of the supported fields.
///
/// The `std::ops` impls panic on mixed-field operands or division by
/// zero; the `try_*` methods report those as errors instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
    Func(RatFunc),
}

impl Scalar {
    pub fn zero(field: &Field) -> Self {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// Rationals embed into every field.
    pub fn from_rational(field: &Field, c: Rational) -> Self {
        match field {
            Field::Rational => Scalar::Rat(c),
            Field::Cyclotomic(f) => Scalar::Cyc(Cyclotomic::from_rational(f, c)),
            Field::RationalFunction => Scalar::Func(RatFunc::from_rational(c)),
        }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, Rational::from_int(n))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Cyc(c) => Field::Cyclotomic(c.field().clone()),
            Scalar::Func(_) => Field::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
            Scalar::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Cyc(c) => c.is_one(),
            Scalar::Func(f) => f.is_one(),
        }
    }

    /// The value as a rational, when it is one (in any field).
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Cyc(c) => c.as_rational(),
            Scalar::Func(f) => f.as_rational(),
        }
    }

    /// Re-embed a rational-valued scalar into `field`.
    pub fn embed(&self, field: &Field) -> Result<Self> {
        if &self.field() == field {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(r) => Ok(Self::from_rational(field, r)),
            None => Err(Error::FieldMismatch {
                left: self.field().name(),
                right: field.name(),
            }),
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch {
            left: self.field().name(),
            right: other.field().name(),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a + b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Ok(Scalar::Cyc(a.add(b)?)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a - b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Ok(Scalar::Cyc(a.sub(b)?)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a.sub(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Ok(Scalar::Cyc(a.mul(b)?)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a.mul(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a.checked_div(b)?)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Ok(Scalar::Cyc(a.div(b)?)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a.div(b)?)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip()?)),
            Scalar::Cyc(a) => Ok(Scalar::Cyc(a.inverse()?)),
            Scalar::Func(a) => Ok(Scalar::Func(a.inverse()?)),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        match self {
            Scalar::Rat(a) => Ok(Scalar::Rat(a.pow(e)?)),
            Scalar::Cyc(a) => Ok(Scalar::Cyc(a.pow(e)?)),
            Scalar::Func(a) => Ok(Scalar::Func(a.pow(e)?)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a * c),
            Scalar::Cyc(a) => Scalar::Cyc(a.scale(c)),
            Scalar::Func(a) => Scalar::Func(a.scale(c)),
        }
    }

    /// Parse the canonical text of an element of `field`.
    pub fn parse(field: &Field, text: &str) -> Result<Scalar> {
        match field {
            Field::Rational => Ok(Scalar::Rat(text.trim().parse()?)),
            Field::Cyclotomic(f) => {
                let t = text.trim();
                let t = t
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .unwrap_or(t);
                Ok(Scalar::Cyc(Cyclotomic::from_unipoly(f, &UniPoly::parse(t, "z")?)))
            }
            Field::RationalFunction => Ok(Scalar::Func(text.parse()?)),
        }
    }

    /// True when the canonical text carries a leading minus sign that can
    /// be pulled out of a sum (plain negative rational constants).
    pub(crate) fn is_negative_rational(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Cyc(c) => c.as_rational().is_some_and(|r| r.is_negative()),
            Scalar::Func(_) => false,
        }
    }

    /// Text used as the coefficient of a term inside a sum: rational
    /// constants bare, anything compound parenthesized.
    pub(crate) fn term_text(&self) -> String {
        match self {
            Scalar::Rat(r) => r.to_string(),
            Scalar::Cyc(c) => match c.as_rational() {
                Some(r) => r.to_string(),
                None => format!("({c})"),
            },
            Scalar::Func(f) => f.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => fmt::Display::fmt(r, f),
            Scalar::Cyc(c) => fmt::Display::fmt(c, f),
            Scalar::Func(r) => fmt::Display::fmt(r, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Cyc(c) => write!(f, "{c:?}"),
            Scalar::Func(r) => write!(f, "{r}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar subtraction")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar multiplication")
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("scalar division")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
            Scalar::Func(a) => Scalar::Func(a.neg()),
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_examples() {
        let q = Field::Rational;
        let a = Scalar::from_rational(&q, Rational::new(1, 2));
        let b = Scalar::from_rational(&q, Rational::new(1, 3));
        assert_eq!((&a + &b).to_string(), "5/6");

        let c2 = Field::cyclotomic(2);
        let xi = Scalar::Cyc(Cyclotomic::generator(match &c2 {
            Field::Cyclotomic(f) => f,
            _ => unreachable!(),
        }));
        assert!((&xi * &xi).is_one());
    }

    #[test]
    fn errors_are_explicit() {
        let a = Scalar::one(&Field::Rational);
        let b = Scalar::one(&Field::RationalFunction);
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(
            a.try_div(&Scalar::zero(&Field::Rational)),
            Err(Error::DivisionByZero)
        ));
        assert!(Scalar::zero(&Field::cyclotomic(3)).inverse().is_err());
        assert!(Scalar::zero(&Field::RationalFunction).inverse().is_err());
    }

    #[test]
    fn embedding_rationals() {
        let c3 = Field::cyclotomic(3);
        let half = Scalar::from_rational(&Field::Rational, Rational::new(1, 2));
        let e = half.embed(&c3).unwrap();
        assert_eq!(e.field(), c3);
        assert_eq!(e.as_rational(), Some(Rational::new(1, 2)));
        let rho = Scalar::Func(RatFunc::rho());
        assert!(rho.embed(&Field::Rational).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let c3 = Field::cyclotomic(3);
        let f = match &c3 {
            Field::Cyclotomic(f) => f.clone(),
            _ => unreachable!(),
        };
        let v = Scalar::Cyc(Cyclotomic::root_power(&f, 2));
        assert_eq!(Scalar::parse(&c3, &v.to_string()).unwrap(), v);
        assert_eq!(Scalar::parse(&c3, &v.term_text()).unwrap(), v);
        let r = Scalar::Func(RatFunc::rho().inverse().unwrap());
        assert_eq!(Scalar::parse(&Field::RationalFunction, &r.to_string()).unwrap(), r);
    }
}
