//! Rational functions in ρ over the rationals, plus limits at ρ = r and
//! ρ = ξₙ by cancelling common vanishing factors.

use std::fmt;
use std::sync::Arc;

use super::{cyclotomic_poly, Cyclotomic, CyclotomicField, Rational, UniPoly};
use crate::error::{Error, Result};

/// `num / den`, with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(num: UniPoly) -> Self {
        RatFunc {
            num,
            den: UniPoly::one(),
        }
    }

    /// The indeterminate ρ.
    pub fn rho() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].recip().expect("nonzero");
            return Self::from_poly(num.scale(&inv));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num + &other.num);
        }
        if self.den == other.den {
            return Self::reduced(&self.num + &other.num, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::reduced(num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = other.den.exact_div(&g1).expect("gcd divides");
        let c = other.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().expect("nonzero").clone();
        let inv = lc.recip().expect("nonzero");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let e = e as u32;
        Ok(RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    /// lim_{ρ→ξₙ} of this function, cancelling powers of Φₙ shared by the
    /// numerator and denominator.
    pub fn specialize_at_root(&self, field: &Arc<CyclotomicField>) -> Result<Cyclotomic> {
        let n = field.order();
        let phi_n = cyclotomic_poly(n);
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        loop {
            let num_res = Cyclotomic::from_unipoly(field, &num);
            let den_res = Cyclotomic::from_unipoly(field, &den);
            if !den_res.is_zero() {
                return num_res.div(&den_res);
            }
            if !num_res.is_zero() {
                return Err(Error::Pole {
                    at: format!("xi:{n}"),
                });
            }
            num = num.exact_div(&phi_n)?;
            den = den.exact_div(&phi_n)?;
        }
    }

    /// lim_{ρ→r}, cancelling powers of (ρ − r).
    pub fn specialize_at_rational(&self, r: &Rational) -> Result<Rational> {
        let linear = UniPoly::from_coeffs(vec![-r, Rational::one()]);
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        loop {
            let nv = num.eval(r);
            let dv = den.eval(r);
            if !dv.is_zero() {
                return nv.checked_div(&dv);
            }
            if !nv.is_zero() {
                return Err(Error::Pole { at: r.to_string() });
            }
            num = num.exact_div(&linear)?;
            den = den.exact_div(&linear)?;
        }
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;

    /// Parse `(num)` or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed rational function {s:?}"));
        let s = s.trim();
        let body = s.strip_prefix('(').ok_or_else(bad)?;
        let (num, rest) = match body.find(")/(") {
            Some(pos) => (&body[..pos], Some(&body[pos + 3..])),
            None => (body.strip_suffix(')').ok_or_else(bad)?, None),
        };
        let num = UniPoly::parse(num, "ρ")?;
        let den = match rest {
            Some(d) => UniPoly::parse(d.strip_suffix(')').ok_or_else(bad)?, "ρ")?,
            None => UniPoly::one(),
        };
        RatFunc::new(num, den)
    }
}

/// Canonical text: `(num)/(den)` in descending powers of ρ, or `(num)`
/// when the denominator is 1.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num.to_string_descending("ρ"))?;
        if !self.den.is_one() {
            write!(f, "/({})", self.den.to_string_descending("ρ"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn kept_reduced_and_monic() {
        // (1 - ρ²)/(2 - 2ρ) = (1 + ρ)/2
        let f = rf(&[1, 0, -1], &[2, -2]);
        assert!(f.den().is_one());
        assert_eq!(f.num(), &UniPoly::from_coeffs(vec![Rational::new(1, 2), Rational::new(1, 2)]));
        let g = rf(&[1], &[2, -1]);
        assert_eq!(g.den(), &UniPoly::from_ints(&[-2, 1]));
        assert_eq!(g.to_string(), "(-1)/(ρ - 2)");
        assert!(RatFunc::new(UniPoly::one(), UniPoly::zero()).is_err());
        assert_eq!("(-1)/(ρ - 2)".parse::<RatFunc>().unwrap(), g);
        assert_eq!("(ρ)".parse::<RatFunc>().unwrap(), RatFunc::rho());
    }

    #[test]
    fn root_specialization() {
        let f2 = CyclotomicField::new(2);
        let f3 = CyclotomicField::new(3);
        // 1/(1-ρ) at ξ₂ = −1
        assert_eq!(
            rf(&[1], &[1, -1]).specialize_at_root(&f2).unwrap().as_rational(),
            Some(Rational::new(1, 2))
        );
        // (1-ρ³)/(1-ρ) at ξ₃
        assert!(rf(&[1, 0, 0, -1], &[1, -1]).specialize_at_root(&f3).unwrap().is_zero());
        // (1-ρ²)/(1-ρ⁴) at ξ₂: cancel one Φ₂
        assert_eq!(
            rf(&[1, 0, -1], &[1, 0, 0, 0, -1]).specialize_at_root(&f2).unwrap().as_rational(),
            Some(Rational::new(1, 2))
        );
        // 1/(1+ρ) has a pole at ξ₂
        assert!(matches!(
            rf(&[1], &[1, 1]).specialize_at_root(&f2),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn rational_specialization() {
        assert!(rf(&[0, 1], &[1, -1]).specialize_at_rational(&Rational::zero()).unwrap().is_zero());
        let f = rf(&[-1, 1], &[1, 0, -1]);
        assert_eq!(f.specialize_at_rational(&Rational::zero()).unwrap(), Rational::from_int(-1));
        assert!(matches!(
            f.specialize_at_rational(&Rational::from_int(-1)),
            Err(Error::Pole { .. })
        ));
        let g = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(g.specialize_at_rational(&Rational::one()).unwrap(), Rational::from_int(2));
    }
}
