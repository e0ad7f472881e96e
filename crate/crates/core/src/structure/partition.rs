use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::LambdaVector;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// (k, 1^j).
    pub fn hook(k: u32, ones: usize) -> Self {
        assert!(k >= 1);
        let mut v = vec![k];
        v.extend(std::iter::repeat_n(1, ones));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// n(λ) = Σ (i−1) λ_i.
    pub fn n_stat(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_lambda(&self) -> LambdaVector {
        LambdaVector(self.0.iter().map(|&p| p as i64).collect())
    }

    pub fn from_lambda(l: &LambdaVector) -> Result<Self> {
        if !l.is_partition() {
            return Err(Error::InvalidParameter(format!("{l} is not a partition")));
        }
        Ok(Partition(l.parts().iter().map(|&p| p as u32).collect()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_lambda(), f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with largest part ≤ `max_part` and at most `max_len` parts.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, max_part.min(n), max_len, &mut cur, &mut out);
    out
}

fn rec(n: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() >= max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        rec(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        let p4: Vec<String> = partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_bounded(6, 6, 2).len(), 4);
    }

    #[test]
    fn statistics() {
        let p = Partition::new(vec![3, 3, 1]).unwrap();
        assert_eq!(p.n_stat(), 5);
        assert_eq!(p.multiplicities(), vec![(3, 2), (1, 1)]);
        assert!(!p.is_strict());
        assert_eq!(Partition::hook(2, 2).to_string(), "[2,1,1]");
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
