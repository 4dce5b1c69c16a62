//! Exact scalars, binomial coefficients and monic polynomials.

mod poly;
mod rational;

pub use poly::MonicPolynomial;
pub use rational::{q, z, Rational};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `n` choose `k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rows `0..=n` of Pascal's triangle as rationals, `rows[m][j] = C(m, j)`.
pub(crate) fn pascal_rows(n: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            if j == 0 || j == m {
                row.push(Rational::one());
            } else {
                let prev = &rows[m - 1];
                row.push(&prev[j - 1] + &prev[j]);
            }
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(10, 10), BigInt::from(1));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binomial_matches_pascal() {
        let rows = pascal_rows(40);
        for n in 0..=40u64 {
            for k in 0..=n {
                assert_eq!(Rational::from(binomial(n, k)), rows[n as usize][k as usize]);
            }
        }
    }
}
