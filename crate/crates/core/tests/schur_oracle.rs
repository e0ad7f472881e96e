//! Q_λ at ρ = 0 against Jacobi-Trudi determinants in complete symmetric
//! functions, with h_r built from r·h_r = Σ_k k·t_k·h_{r−k}.

use hlvir::exactnum::{Field, Rational, Scalar};
use hlvir::structure::partitions;
use hlvir::tring::TPoly;
use hlvir::vertex::{QCache, RhoSpec};

fn complete(max: usize) -> Vec<TPoly> {
    let q = Field::Rational;
    let mut h = vec![TPoly::one(&q)];
    for r in 1..=max {
        let mut acc = TPoly::zero(&q);
        for k in 1..=r {
            let term = h[r - k].mul_var(k as u32).scale_rational(&Rational::from_int(k as i64));
            acc = acc.add(&term).unwrap();
        }
        h.push(acc.scale_rational(&Rational::new(1, r as i64)));
    }
    h
}

fn det(m: &[Vec<TPoly>]) -> TPoly {
    let q = Field::Rational;
    if m.is_empty() {
        return TPoly::one(&q);
    }
    let mut acc = TPoly::zero(&q);
    for (j, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<TPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let sign = Scalar::from_int(&q, if j % 2 == 0 { 1 } else { -1 });
        acc = acc.add(&entry.mul(&det(&minor)).unwrap().scale(&sign).unwrap()).unwrap();
    }
    acc
}

#[test]
fn hall_littlewood_at_zero_are_schur_functions() {
    let q = Field::Rational;
    let h = complete(7);
    let hk = |k: i64| if k < 0 { TPoly::zero(&q) } else { h[k as usize].clone() };
    let cache = QCache::new(RhoSpec::Value(Rational::zero()));
    for size in 0..=7 {
        for mu in partitions(size) {
            let parts: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
            let l = parts.len();
            let matrix: Vec<Vec<TPoly>> = (0..l)
                .map(|i| (0..l).map(|j| hk(parts[i] - i as i64 + j as i64)).collect())
                .collect();
            assert_eq!(*cache.hl_q(&parts), det(&matrix), "mu = {mu}");
        }
    }
}
