use std::cmp::Ordering;
use std::fmt;

/// A monomial t_{a1}^{e1} t_{a2}^{e2} … with `deg t_a = a`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    /// `(index, exponent)`, indices strictly increasing, exponents ≥ 1.
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(a: u32) -> Self {
        assert!(a >= 1, "variable index must be positive");
        Monomial {
            deg: a,
            exps: vec![(a, 1)],
        }
    }

    /// Build from `(index, exponent)` pairs in any order; repeated indices
    /// accumulate and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (a, e) in pairs {
            assert!(a >= 1, "variable index must be positive");
            if e == 0 {
                continue;
            }
            match exps.binary_search_by_key(&a, |&(i, _)| i) {
                Ok(pos) => exps[pos].1 += e,
                Err(pos) => exps.insert(pos, (a, e)),
            }
        }
        let deg = exps.iter().map(|&(a, e)| a * e).sum();
        Monomial { deg, exps }
    }

    /// The monomial t_λ = Π t_{λ_i} for positive parts.
    pub fn from_parts(parts: &[u32]) -> Self {
        Self::from_pairs(parts.iter().map(|&p| (p, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, a: u32) -> u32 {
        match self.exps.binary_search_by_key(&a, |&(i, _)| i) {
            Ok(pos) => self.exps[pos].1,
            Err(_) => 0,
        }
    }

    pub fn max_index(&self) -> u32 {
        self.exps.last().map_or(0, |&(a, _)| a)
    }

    /// Parts of the partition whose t-monomial this is, largest first.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, e) in self.exps.iter().rev() {
            out.extend(std::iter::repeat_n(a, e as usize));
        }
        out
    }

    pub fn times_var(&self, a: u32) -> Self {
        let mut m = self.clone();
        m.deg += a;
        match m.exps.binary_search_by_key(&a, |&(i, _)| i) {
            Ok(pos) => m.exps[pos].1 += 1,
            Err(pos) => m.exps.insert(pos, (a, 1)),
        }
        m
    }

    /// ∂/∂t_a applied to the monomial: `(exponent, monomial with t_a lowered)`.
    pub fn derive(&self, a: u32) -> Option<(u32, Self)> {
        let pos = self.exps.binary_search_by_key(&a, |&(i, _)| i).ok()?;
        let mut m = self.clone();
        let e = m.exps[pos].1;
        if e == 1 {
            m.exps.remove(pos);
        } else {
            m.exps[pos].1 -= 1;
        }
        m.deg -= a;
        Some((e, m))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, e) = self.exps[i];
            let (b, f) = other.exps[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    exps.push((a, e));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((b, f));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a, e + f));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }
}

/// Graded descending, then exponent vectors compared from t1 upward with
/// the larger exponent first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match other.deg.cmp(&self.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(a, e)), Some(&(b, f))) => match a.cmp(&b) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => {
                        if e != f {
                            return f.cmp(&e);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (idx, &(a, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "t{a}")?;
            } else {
                write!(f, "t{a}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let t1sq = Monomial::from_pairs([(1, 2)]);
        let t2 = Monomial::var(2);
        let t1 = Monomial::var(1);
        let t1t2 = Monomial::from_pairs([(1, 1), (2, 1)]);
        let t3 = Monomial::var(3);
        let t1cube = Monomial::from_pairs([(1, 3)]);
        let mut v = vec![t3.clone(), t1.clone(), t1t2.clone(), t2.clone(), t1cube.clone(), t1sq.clone()];
        v.sort();
        assert_eq!(v, vec![t1cube, t1t2, t3, t1sq, t2, t1]);
    }

    #[test]
    fn derivative_and_product() {
        let m = Monomial::from_pairs([(3, 1), (1, 2)]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.to_string(), "t1^2*t3");
        let (e, d) = m.derive(1).unwrap();
        assert_eq!((e, d.to_string()), (2, "t1*t3".to_string()));
        assert!(m.derive(2).is_none());
        assert_eq!(d.times_var(1), m);
        assert_eq!(Monomial::var(1).mul(&Monomial::var(3)).mul(&Monomial::var(1)), m);
        assert_eq!(m.parts(), vec![3, 1, 1]);
    }
}
