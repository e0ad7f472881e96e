//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// Coefficient `i` multiplies `x^i`. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^degree - 1`, or `1 - x^degree` via negation.
    pub fn x_pow_minus_one(degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[0] = Rational::from_int(-1);
        coeffs[degree] = &coeffs[degree] + &Rational::one();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "inexact polynomial division of ({self}) by ({divisor})"
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s)` with `g = gcd(self, m)` monic and `s * self ≡ g (mod m)`.
    pub fn gcd_cofactor(&self, m: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.leading().cloned() {
            None => (Self::zero(), Self::zero()),
            Some(lc) => {
                let inv = lc.recip().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv))
            }
        }
    }

    /// Text form with descending powers of `symbol`, e.g. `x^2 - 1/2*x + 3`.
    pub fn to_string_descending(&self, symbol: &str) -> String {
        let terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        join_terms(&terms, symbol)
    }

    /// Text form with ascending powers of `symbol`, e.g. `-1/2 + 1/2*z`.
    pub fn to_string_ascending(&self, symbol: &str) -> String {
        let terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        join_terms(&terms, symbol)
    }
}

impl UniPoly {
    /// Parse the text produced by the `to_string_*` methods (either order).
    pub fn parse(text: &str, symbol: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed polynomial {text:?}"));
        let t = text.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut rest = t;
        let mut neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            neg = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (p, m) => p.or(m),
            };
            match cut {
                None => {
                    terms.push((neg, rest));
                    break;
                }
                Some(c) => {
                    terms.push((neg, &rest[..c]));
                    neg = &rest[c..c + 3] == " - ";
                    rest = &rest[c + 3..];
                }
            }
        }
        let mut acc = UniPoly::zero();
        for (neg, body) in terms {
            let (coeff, power) = if let Some(pos) = body.find(symbol) {
                let c = match body[..pos].strip_suffix('*') {
                    Some(c) => c.parse::<Rational>()?,
                    None if pos == 0 => Rational::one(),
                    None => return Err(bad()),
                };
                let tail = &body[pos + symbol.len()..];
                let p = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (c, p)
            } else {
                (body.parse::<Rational>()?, 0)
            };
            let coeff = if neg { -&coeff } else { coeff };
            acc = &acc + &UniPoly::monomial(coeff, power);
        }
        Ok(acc)
    }
}

fn join_terms(terms: &[(usize, &Rational)], symbol: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (power, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        match (*power, a.is_one()) {
            (0, _) => out.push_str(&a.to_string()),
            (p, true) => out.push_str(&power_text(symbol, p)),
            (p, false) => {
                out.push_str(&a.to_string());
                out.push('*');
                out.push_str(&power_text(symbol, p));
            }
        }
    }
    out
}

fn power_text(symbol: &str, p: usize) -> String {
    if p == 1 {
        symbol.to_string()
    } else {
        format!("{symbol}^{p}")
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_descending("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let c = UniPoly::from_ints(&[2, 2]);
        assert_eq!(a.gcd(&c), b);
        assert!(a.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn cofactor_inverts_modulo() {
        let m = UniPoly::from_ints(&[1, 1, 1]);
        let a = UniPoly::from_ints(&[2, 1]);
        let (g, s) = a.gcd_cofactor(&m);
        assert!(g.is_one());
        assert!((&(&s * &a) - &UniPoly::one()).rem(&m).unwrap().is_zero());
    }

    #[test]
    fn text_forms() {
        let p = UniPoly::from_coeffs(vec![
            Rational::new(-1, 2),
            Rational::new(1, 2),
            Rational::zero(),
            Rational::from_int(-1),
        ]);
        assert_eq!(p.to_string_ascending("z"), "-1/2 + 1/2*z - z^3");
        assert_eq!(p.to_string_descending("ρ"), "-ρ^3 + 1/2*ρ - 1/2");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::parse("-1/2 + 1/2*z - z^3", "z").unwrap(), p);
        assert_eq!(UniPoly::parse("-ρ^3 + 1/2*ρ - 1/2", "ρ").unwrap(), p);
        assert!(UniPoly::parse("0", "z").unwrap().is_zero());
        assert!(UniPoly::parse("2*", "z").is_err());
    }
}
