//! Hankel transform: `k_n = det[a_{i+j}]_{0 <= i,j <= n}`.
//!
//! Under `L^(h,y)` the transform scales as `k_n -> h^(n(n+1)) k_n`,
//! independently of `y`.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::operator::{apply, BinomialOperator};
use crate::sequences::SequencePrefix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HankelResult {
    pub determinants: Vec<Rational>,
}

/// `k_0..k_m` with `m = (N - 1) / 2`; `k_n` needs `a_{2n}`.
pub fn hankel_transform(a: &SequencePrefix) -> HankelResult {
    let m = (a.len() - 1) / 2;
    let determinants = (0..=m)
        .map(|n| {
            let size = n + 1;
            let matrix = (0..size)
                .map(|i| (0..size).map(|j| a[i + j].clone()).collect())
                .collect();
            determinant(matrix)
        })
        .collect();
    HankelResult { determinants }
}

/// Fraction-free (Bareiss) elimination with row swaps on zero pivots.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Does `H(L^(h,y)(a))_n = h^(n(n+1)) H(a)_n` hold for every computable `n`?
pub fn hankel_scaling_check(a: &SequencePrefix, h: &Rational, y: &Rational) -> bool {
    let before = hankel_transform(a);
    let after = hankel_transform(&apply(&BinomialOperator::new(h.clone(), y.clone()), a));
    before
        .determinants
        .iter()
        .zip(&after.determinants)
        .enumerate()
        .all(|(n, (k, kt))| *kt == h.pow((n * (n + 1)) as u32) * k)
}
