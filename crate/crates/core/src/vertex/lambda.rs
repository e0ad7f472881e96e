use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arbitrary integer vector λ ∈ Z^l labelling Q_λ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaVector(pub Vec<i64>);

impl LambdaVector {
    pub fn new(parts: Vec<i64>) -> Self {
        LambdaVector(parts)
    }

    pub fn empty() -> Self {
        LambdaVector(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ| = Σ λ_i.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Some tail sum Σ_{i≥j} λ_i is negative, which forces Q_λ = 0.
    pub fn tail_vanishes(&self) -> bool {
        let mut acc = 0i64;
        self.0.iter().rev().any(|&x| {
            acc += x;
            acc < 0
        })
    }

    /// Weakly decreasing with positive entries.
    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&x| x > 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// λ + δ·ε_i (0-based `i`).
    pub fn shifted(&self, i: usize, delta: i64) -> Self {
        let mut v = self.0.clone();
        v[i] += delta;
        LambdaVector(v)
    }

    /// λ + a·ε_i + b·ε_j.
    pub fn shifted2(&self, i: usize, a: i64, j: usize, b: i64) -> Self {
        let mut v = self.0.clone();
        v[i] += a;
        v[j] += b;
        LambdaVector(v)
    }

    /// The concatenation (λ, μ).
    pub fn concat(&self, tail: &[i64]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        LambdaVector(v)
    }

    pub fn without_trailing_zeros(&self) -> &[i64] {
        let end = self.0.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        &self.0[..end]
    }
}

impl From<Vec<i64>> for LambdaVector {
    fn from(v: Vec<i64>) -> Self {
        LambdaVector(v)
    }
}

impl From<&[i64]> for LambdaVector {
    fn from(v: &[i64]) -> Self {
        LambdaVector(v.to_vec())
    }
}

impl fmt::Display for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for LambdaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LambdaVector {
    type Err = Error;

    /// Comma separated integers, optionally bracketed; empty means l = 0.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(LambdaVector::empty());
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer {p:?} in vector {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(LambdaVector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display() {
        let l: LambdaVector = "2,-1, 1".parse().unwrap();
        assert_eq!(l.to_string(), "[2,-1,1]");
        assert_eq!("[2,1]".parse::<LambdaVector>().unwrap(), LambdaVector(vec![2, 1]));
        assert!("".parse::<LambdaVector>().unwrap().is_empty());
        assert!("1,x".parse::<LambdaVector>().is_err());
    }

    #[test]
    fn statistics() {
        assert!(LambdaVector(vec![2, -1]).tail_vanishes());
        assert!(!LambdaVector(vec![2, -1, 1]).tail_vanishes());
        assert!(LambdaVector(vec![3, 1, 1]).is_partition());
        assert!(!LambdaVector(vec![1, 2]).is_partition());
        assert!(!LambdaVector(vec![1, 0]).is_partition());
        assert_eq!(LambdaVector(vec![1, 0, 2, 0, 0]).without_trailing_zeros(), &[1, 0, 2]);
    }
}
