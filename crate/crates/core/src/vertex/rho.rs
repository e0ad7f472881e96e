use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField, Field, RatFunc, Rational, Scalar};

/// Where the parameter ρ lives: a rational value, a primitive root of
/// unity ξₙ, or the indeterminate of Q(ρ).
#[derive(Clone)]
pub enum RhoSpec {
    Value(Rational),
    RootOfUnity(Arc<CyclotomicField>),
    Generic,
}

impl RhoSpec {
    pub fn xi(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "root of unity order must be at least 2, got {n}"
            )));
        }
        Ok(RhoSpec::RootOfUnity(CyclotomicField::new(n)))
    }

    pub fn value(r: Rational) -> Self {
        RhoSpec::Value(r)
    }

    pub fn field(&self) -> Field {
        match self {
            RhoSpec::Value(_) => Field::Rational,
            RhoSpec::RootOfUnity(f) => Field::Cyclotomic(f.clone()),
            RhoSpec::Generic => Field::RationalFunction,
        }
    }

    /// n for ρ = ξₙ.
    pub fn root_order(&self) -> Option<u32> {
        match self {
            RhoSpec::RootOfUnity(f) => Some(f.order()),
            _ => None,
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, RhoSpec::Generic)
    }

    /// ρ as an element of its field.
    pub fn rho(&self) -> Scalar {
        match self {
            RhoSpec::Value(r) => Scalar::Rat(r.clone()),
            RhoSpec::RootOfUnity(f) => Scalar::Cyc(Cyclotomic::generator(f)),
            RhoSpec::Generic => Scalar::Func(RatFunc::rho()),
        }
    }

    /// ρ^k; negative k needs ρ ≠ 0.
    pub fn rho_pow(&self, k: i64) -> Result<Scalar> {
        match self {
            RhoSpec::RootOfUnity(f) => Ok(Scalar::Cyc(Cyclotomic::root_power(f, k))),
            _ => self.rho().pow(k),
        }
    }

    /// 1 − ρ^k.
    pub fn one_minus_rho_pow(&self, k: i64) -> Result<Scalar> {
        Scalar::one(&self.field()).try_sub(&self.rho_pow(k)?)
    }

    /// Limit of a rational function of ρ at this specialization.
    pub fn specialize(&self, f: &RatFunc) -> Result<Scalar> {
        match self {
            RhoSpec::Generic => Ok(Scalar::Func(f.clone())),
            RhoSpec::RootOfUnity(field) => Ok(Scalar::Cyc(f.specialize_at_root(field)?)),
            RhoSpec::Value(r) => Ok(Scalar::Rat(f.specialize_at_rational(r)?)),
        }
    }
}

impl PartialEq for RhoSpec {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RhoSpec::Value(a), RhoSpec::Value(b)) => a == b,
            (RhoSpec::RootOfUnity(a), RhoSpec::RootOfUnity(b)) => a.order() == b.order(),
            (RhoSpec::Generic, RhoSpec::Generic) => true,
            _ => false,
        }
    }
}

impl Eq for RhoSpec {}

impl fmt::Display for RhoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoSpec::Value(r) => write!(f, "{r}"),
            RhoSpec::RootOfUnity(c) => write!(f, "xi:{}", c.order()),
            RhoSpec::Generic => f.write_str("generic"),
        }
    }
}

impl fmt::Debug for RhoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RhoSpec {
    type Err = Error;

    /// `generic`, `xi:<n>`, or a rational such as `0`, `-1`, `2/3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "generic" {
            return Ok(RhoSpec::Generic);
        }
        if let Some(n) = s.strip_prefix("xi:") {
            let n: u32 = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad root of unity order in {s:?}")))?;
            return RhoSpec::xi(n);
        }
        Ok(RhoSpec::Value(s.parse()?))
    }
}

impl Serialize for RhoSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RhoSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["0", "-1", "2/3", "xi:2", "xi:5", "generic"] {
            assert_eq!(s.parse::<RhoSpec>().unwrap().to_string(), s);
        }
        assert!("xi:1".parse::<RhoSpec>().is_err());
        assert!("xi:".parse::<RhoSpec>().is_err());
        assert!("rho".parse::<RhoSpec>().is_err());
    }

    #[test]
    fn powers() {
        let xi3 = RhoSpec::xi(3).unwrap();
        assert!(xi3.rho_pow(3).unwrap().is_one());
        assert!(xi3.one_minus_rho_pow(6).unwrap().is_zero());
        assert_eq!(xi3.rho_pow(-1).unwrap(), xi3.rho_pow(2).unwrap());
        assert!(RhoSpec::Value(Rational::zero()).rho_pow(-1).is_err());
        assert!(RhoSpec::Value(Rational::zero()).rho_pow(0).unwrap().is_one());
    }
}
