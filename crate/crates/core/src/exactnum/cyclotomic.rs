//! The cyclotomic field Q(ξₙ), elements stored in the power basis
//! 1, ξ, …, ξ^{φ(n)-1} reduced modulo the n-th cyclotomic polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Φₙ, by exact division of xⁿ − 1 by Φ_d for every proper divisor d of n.
pub fn cyclotomic_poly(n: u32) -> UniPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut memo = BTreeMap::new();
    cyclotomic_rec(n, &mut memo)
}

fn cyclotomic_rec(n: u32, memo: &mut BTreeMap<u32, UniPoly>) -> UniPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = UniPoly::x_pow_minus_one(n as usize);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_rec(d, memo);
            p = p.exact_div(&phi_d).expect("cyclotomic factors divide x^n - 1");
        }
    }
    memo.insert(n, p.clone());
    p
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// Precomputed data for arithmetic in Q(ξₙ).
pub struct CyclotomicField {
    order: u32,
    modulus: UniPoly,
    /// `reductions[j]` = coordinates of ξ^{φ+j}, for 0 ≤ j < φ − 1.
    reductions: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        let modulus = cyclotomic_poly(order);
        let phi = modulus.degree().expect("nonzero") ;
        let reductions = (phi..(2 * phi).saturating_sub(1))
            .map(|k| {
                let r = UniPoly::monomial(Rational::one(), k)
                    .rem(&modulus)
                    .expect("monic modulus");
                (0..phi).map(|i| r.coeff(i)).collect()
            })
            .collect();
        Arc::new(CyclotomicField {
            order,
            modulus,
            reductions,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(n), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero")
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ξ_{})", self.order)
    }
}

/// An element of Q(ξₙ).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coords: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, c: Rational) -> Self {
        let mut z = Self::zero(field);
        z.coords[0] = c;
        z
    }

    /// The image of a polynomial in ξ under reduction modulo Φₙ.
    pub fn from_unipoly(field: &Arc<CyclotomicField>, p: &UniPoly) -> Self {
        let r = p.rem(&field.modulus).expect("monic modulus");
        Cyclotomic {
            field: field.clone(),
            coords: (0..field.degree()).map(|i| r.coeff(i)).collect(),
        }
    }

    /// ξₙ itself.
    pub fn generator(field: &Arc<CyclotomicField>) -> Self {
        Self::from_unipoly(field, &UniPoly::x())
    }

    /// ξₙ^k for any integer k.
    pub fn root_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.order as i64;
        let e = k.rem_euclid(n) as usize;
        Self::from_unipoly(field, &UniPoly::monomial(Rational::one(), e))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::FieldMismatch {
                left: format!("Q(ξ_{})", self.field.order),
                right: format!("Q(ξ_{})", other.field.order),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let phi = self.field.degree();
        if let Some(c) = other.as_rational() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_rational() {
            return Ok(other.scale(&c));
        }
        let mut full = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += &(a * b);
                }
            }
        }
        let mut coords: Vec<Rational> = full[..phi].to_vec();
        for (j, c) in full[phi..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, r) in self.field.reductions[j].iter().enumerate() {
                if !r.is_zero() {
                    coords[k] += &(c * r);
                }
            }
        }
        Ok(Cyclotomic {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, c.recip()?));
        }
        let (g, s) = self.to_unipoly().gcd_cofactor(&self.field.modulus);
        debug_assert!(g.is_one(), "Φₙ is irreducible");
        Ok(Self::from_unipoly(&self.field, &s))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Self::from_rational(&self.field, Rational::one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coords == other.coords
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coords.hash(state);
    }
}

/// Canonical text: ascending powers of `z`, e.g. `-1/2 + 1/2*z`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_unipoly().to_string_ascending("z"))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.field.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), UniPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
        for n in 1..=30 {
            assert_eq!(cyclotomic_poly(n).degree(), Some(euler_phi(n)));
        }
    }

    #[test]
    fn root_relations() {
        let f2 = CyclotomicField::new(2);
        let xi = Cyclotomic::generator(&f2);
        assert!(xi.mul(&xi).unwrap().is_one());
        assert_eq!(xi.as_rational(), Some(Rational::from_int(-1)));

        let f3 = CyclotomicField::new(3);
        let xi = Cyclotomic::generator(&f3);
        let one = Cyclotomic::from_rational(&f3, Rational::one());
        let s = one.add(&xi).unwrap().add(&xi.mul(&xi).unwrap()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_and_mismatch() {
        let f5 = CyclotomicField::new(5);
        let a = Cyclotomic::from_unipoly(&f5, &UniPoly::from_ints(&[3, -1, 2]));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_one());
        let f3 = CyclotomicField::new(3);
        let b = Cyclotomic::generator(&f3);
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
        assert!(Cyclotomic::zero(&f5).inverse().is_err());
    }

    #[test]
    fn display_ascending() {
        let f3 = CyclotomicField::new(3);
        let v = Cyclotomic::from_unipoly(
            &f3,
            &UniPoly::from_coeffs(vec![Rational::new(-1, 2), Rational::new(1, 2)]),
        );
        assert_eq!(v.to_string(), "-1/2 + 1/2*z");
        // ξ₃² = −1 − ξ₃
        assert_eq!(Cyclotomic::root_power(&f3, 2).to_string(), "-1 - z");
        assert_eq!(Cyclotomic::root_power(&f3, -1), Cyclotomic::root_power(&f3, 2));
    }
}
