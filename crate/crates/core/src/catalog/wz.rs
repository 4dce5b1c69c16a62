//! Telescoping certificate for `L^(-1,4)(sigma C) = sigma C`.
//!
//! With `F(h,n) = C(n,h) (-1)^h 4^(n-h) C_{h+1}` and
//! `R(h,n) = 4h(h+2) / (n+1-h)`,
//!
//! `2(2n+3) F(h,n) - (n+3) F(h,n+1) = F(h+1,n) R(h+1,n) - F(h,n) R(h,n)`.
//!
//! Summing over `0 <= h <= n-1` turns `sum_h F(h,n)` into a solution of the
//! Catalan recurrence `2(2n+3) a_n = (n+3) a_{n+1}`.

use crate::arith::{binomial, Rational};

use super::catalan;

/// `F(h, n)`, zero for `h > n`.
pub fn catalan_wz_term(h: u64, n: u64) -> Rational {
    if h > n {
        return Rational::zero();
    }
    Rational::from(binomial(n, h))
        * Rational::sign_pow(h as usize)
        * Rational::from(4).pow((n - h) as u32)
        * catalan(h + 1)
}

/// `R(h, n)`; `None` at the pole `h = n + 1`.
pub fn wz_certificate_ratio(h: u64, n: u64) -> Option<Rational> {
    let denom = Rational::from(n as i64 + 1 - h as i64);
    let numer = Rational::from(4 * h * (h + 2));
    denom.recip().map(|d| numer * d)
}

/// First `(h, n)` with `n <= n_max`, `h <= n - 1` where the pointwise
/// certificate identity fails.
pub fn wz_certificate_failure(n_max: u64) -> Option<(u64, u64)> {
    for n in 0..=n_max {
        let lhs_scale = Rational::from(2 * (2 * n + 3));
        let rhs_scale = Rational::from(n + 3);
        for h in 0..n {
            let lhs = &lhs_scale * catalan_wz_term(h, n) - &rhs_scale * catalan_wz_term(h, n + 1);
            // h + 1 <= n keeps R(h + 1, n) away from its pole.
            let upper = catalan_wz_term(h + 1, n) * wz_certificate_ratio(h + 1, n).expect("h + 1 <= n");
            let lower = catalan_wz_term(h, n) * wz_certificate_ratio(h, n).expect("h <= n");
            if lhs != upper - lower {
                return Some((h, n));
            }
        }
    }
    None
}

pub fn wz_certificate_check(n_max: u64) -> bool {
    wz_certificate_failure(n_max).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    #[test]
    fn first_instance_by_hand() {
        // n = 1, h = 0: F(0,1) = 4, F(0,2) = 16, F(1,1) = -2, R(1,1) = 12.
        assert_eq!(catalan_wz_term(0, 1), z(4));
        assert_eq!(catalan_wz_term(0, 2), z(16));
        assert_eq!(catalan_wz_term(1, 1), z(-2));
        assert_eq!(wz_certificate_ratio(1, 1), Some(z(12)));
        assert_eq!(wz_certificate_ratio(0, 1), Some(z(0)));
        assert_eq!(z(10) * z(4) - z(4) * z(16), z(-2) * z(12) - z(0));
        assert!(wz_certificate_check(1));
    }

    #[test]
    fn certificate_holds() {
        assert_eq!(wz_certificate_failure(20), None);
    }

    #[test]
    fn pole_location() {
        assert_eq!(wz_certificate_ratio(4, 3), None);
        assert_eq!(wz_certificate_ratio(3, 3), Some(z(60)));
        assert_eq!(wz_certificate_ratio(1, 2), Some(q(12, 2)));
    }

    #[test]
    fn rows_sum_to_shifted_catalan() {
        for n in 0..25 {
            let s: Rational = (0..=n).map(|h| catalan_wz_term(h, n)).sum();
            assert_eq!(s, catalan(n + 1));
        }
    }
}
