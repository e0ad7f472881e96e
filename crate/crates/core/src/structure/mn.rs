use std::collections::{BTreeSet, VecDeque};

use super::{partitions, Partition, QCombination};
use crate::exactnum::{Field, Scalar};

/// Border-strip expansion p_r s_λ = Σ (−1)^{ht(μ/λ)} s_μ, by brute force over
/// all partitions μ ⊇ λ with |μ| = |λ| + r.
pub fn mn_expand(r: u32, lambda: &Partition) -> Vec<(Partition, i64)> {
    let mut out = Vec::new();
    for mu in partitions(lambda.size() + r) {
        if let Some(rows) = border_strip_rows(lambda, &mu) {
            let sign = if rows % 2 == 1 { 1 } else { -1 };
            out.push((mu, sign));
        }
    }
    out
}

/// The same expansion as a rational combination of Schur labels.
pub fn mn_combination(r: u32, lambda: &Partition) -> QCombination {
    let field = Field::Rational;
    let mut q = QCombination::zero(&field);
    for (mu, sign) in mn_expand(r, lambda) {
        q.add_term(mu.to_lambda(), &Scalar::from_int(&field, sign))
            .expect("rational field");
    }
    q
}

/// Number of rows of μ/λ when it is a connected skew shape without a 2×2
/// block, otherwise `None`.
fn border_strip_rows(lambda: &Partition, mu: &Partition) -> Option<usize> {
    let lam = |i: usize| lambda.parts().get(i).copied().unwrap_or(0);
    let m = mu.parts();
    if m.len() < lambda.len() || (0..m.len()).any(|i| m[i] < lam(i)) {
        return None;
    }
    let cells: BTreeSet<(usize, u32)> = (0..m.len())
        .flat_map(|i| (lam(i)..m[i]).map(move |j| (i, j)))
        .collect();
    if cells.is_empty() {
        return None;
    }
    for &(i, j) in &cells {
        if cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)) {
            return None;
        }
    }
    let start = *cells.iter().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((i, j)) = queue.pop_front() {
        let mut nbrs = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nbrs.push((i - 1, j));
        }
        if j > 0 {
            nbrs.push((i, j - 1));
        }
        for c in nbrs {
            if cells.contains(&c) && seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    let rows: BTreeSet<usize> = cells.iter().map(|&(i, _)| i).collect();
    Some(rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_strips() {
        assert_eq!(mn_combination(1, &p(&[1])).to_text(), "1*Q[2] + 1*Q[1,1]");
        assert_eq!(mn_combination(2, &p(&[1])).to_text(), "1*Q[3] - 1*Q[1,1,1]");
        assert_eq!(mn_combination(2, &Partition::empty()).to_text(), "1*Q[2] - 1*Q[1,1]");
        assert_eq!(
            mn_combination(3, &Partition::empty()).to_text(),
            "1*Q[3] - 1*Q[2,1] + 1*Q[1,1,1]"
        );
    }
}
