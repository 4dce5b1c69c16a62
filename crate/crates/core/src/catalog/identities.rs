//! Exact verification of the catalog identities over an index range.
//!
//! Every identity is evaluated term by term with no tolerance. Each case
//! carries the status it is expected to have: all of them pass except
//! `triangular_printed`, the formula as usually printed, which fails at
//! `n = 1` (`T_1 = 1` while the right-hand side is `-1`). Its corrected
//! form, `triangular_fixed`, states that `L^(-1,2)` fixes
//! `T' = (0, 0, 1, 3, 6, ...)`.

use std::fmt;

use serde::Serialize;

use crate::arith::{binomial, MonicPolynomial, Rational};
use crate::error::{Error, Result};
use crate::operator::{apply, transform_recurrence, BinomialOperator};
use crate::sequences::{right_shift, variant_sequence, Degree2Spec, LinearRecurrence, SequencePrefix};

use super::{catalan, catalan_wz_term, wz_certificate_failure, NamedSequence};

pub const IDENTITY_KEYS: [&str; 17] = [
    "a001333_fixed",
    "catalan_even",
    "catalan_fixed",
    "catalan_holonomic",
    "catalan_odd",
    "catalan_recurrence",
    "catalan_wz",
    "choose4",
    "choose4_recurrence",
    "fibonacci_decimation",
    "lucas_decimation",
    "lucas_even_sum",
    "lucas_odd_sum",
    "spivey_steil_map",
    "triangular_fixed",
    "triangular_printed",
    "variant_shift",
];

/// Result of checking one identity over `range_start..=range_end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub key: String,
    pub range_start: usize,
    pub range_end: usize,
    pub passed: bool,
    pub first_mismatch: Option<usize>,
    pub expected_pass: bool,
    pub expected_mismatch: Option<usize>,
}

impl IdentityCase {
    pub fn as_expected(&self) -> bool {
        self.passed == self.expected_pass && self.first_mismatch == self.expected_mismatch
    }
}

impl fmt::Display for IdentityCase {
    /// `key range=a..b status=pass|fail first_mismatch=n|- expected=...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "pass" } else { "fail" };
        let idx = |m: Option<usize>| m.map_or("-".to_string(), |i| i.to_string());
        write!(
            f,
            "{} range={}..{} status={} first_mismatch={} expected={}",
            self.key,
            self.range_start,
            self.range_end,
            status(self.passed),
            idx(self.first_mismatch),
            status(self.expected_pass),
        )?;
        if !self.as_expected() {
            f.write_str(" UNEXPECTED")?;
        }
        Ok(())
    }
}

fn int(n: u64) -> Rational {
    Rational::from(n)
}

fn binom(n: u64, k: u64) -> Rational {
    Rational::from(binomial(n, k))
}

/// First index in `lo..=hi` where `holds` is false.
fn scan(lo: usize, hi: usize, mut holds: impl FnMut(usize) -> bool) -> Option<usize> {
    (lo..=hi).find(|&n| !holds(n))
}

fn first_mismatch_of(a: &SequencePrefix, b: &SequencePrefix) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.first_mismatch(b)
}

/// `sum_{h=0}^{n} C(n,h) (-1)^h 4^(n-h) C_{h+1}`, equal to `C_{n+1}`.
pub fn catalan_recurrence_sum(n: u64) -> Rational {
    alternating_catalan_sum(n, n)
}

fn alternating_catalan_sum(n: u64, upper: u64) -> Rational {
    (0..=upper)
        .map(|h| {
            binom(n, h) * Rational::sign_pow(h as usize) * Rational::from(4).pow((n - h) as u32) * catalan(h + 1)
        })
        .sum()
}

/// `1/(4n) sum_{h=0}^{n-2} C(n,h) (-1)^h 4^(n-h) C_{h+1}`, equal to `C_n` for
/// even `n >= 2`.
pub fn catalan_even_sum(n: u64) -> Rational {
    assert!(n >= 2);
    alternating_catalan_sum(n, n - 2) / &int(4 * n)
}

/// `1/2 sum_{h=0}^{n-1} C(n,h) (-1)^h 4^(n-h) C_{h+1}`, equal to `C_{n+1}` for
/// odd `n`.
pub fn catalan_odd_sum(n: u64) -> Rational {
    assert!(n >= 1);
    alternating_catalan_sum(n, n - 1) / &int(2)
}

/// `sum_{i=0}^{n} C(n,i) F_k^i F_{k-1}^(n-i) x_i`.
fn decimation_sum(x: &SequencePrefix, fib: &SequencePrefix, k: usize, n: usize) -> Rational {
    (0..=n)
        .map(|i| binom(n as u64, i as u64) * fib[k].pow(i as u32) * fib[k - 1].pow((n - i) as u32) * &x[i])
        .sum()
}

/// Parameter pairs exercised by `variant_shift`.
const VARIANT_PARAMS: [(i64, i64, i64, i64); 6] =
    [(1, 1, 1, 1), (-1, 1, 1, 1), (1, 1, -1, 1), (2, 3, 5, 7), (-3, 2, 1, 4), (0, 1, 3, 1)];

pub fn verify_identity(key: &str, n_max: usize) -> Result<IdentityCase> {
    let n64 = n_max as u64;
    let (lo, mismatch) = match key {
        "catalan_fixed" => {
            let s = right_shift(&NamedSequence::Catalan.prefix(n_max + 2)?)?;
            (0, apply(&BinomialOperator::new(-1, 4), &s).first_mismatch(&s))
        }
        "catalan_recurrence" => (0, scan(0, n_max, |n| catalan_recurrence_sum(n as u64) == catalan(n as u64 + 1))),
        "catalan_even" => (
            2,
            scan(2, n_max, |n| n % 2 == 1 || catalan_even_sum(n as u64) == catalan(n as u64)),
        ),
        "catalan_odd" => (
            1,
            scan(1, n_max, |n| n % 2 == 0 || catalan_odd_sum(n as u64) == catalan(n as u64 + 1)),
        ),
        "catalan_wz" => (0, wz_certificate_failure(n64).map(|(_, n)| n as usize)),
        "catalan_holonomic" => (
            0,
            // Both the certificate's row sums and sigma(C) obey
            // 2(2n+3) a_n = (n+3) a_{n+1}.
            scan(0, n_max, |n| {
                let n = n as u64;
                let row = |m: u64| -> Rational { (0..=m).map(|h| catalan_wz_term(h, m)).sum() };
                let lhs_scale = int(2 * (2 * n + 3));
                &lhs_scale * row(n) == int(n + 3) * row(n + 1)
                    && lhs_scale * catalan(n + 1) == int(n + 3) * catalan(n + 2)
            }),
        ),
        "lucas_even_sum" => {
            let l = NamedSequence::Lucas.prefix(n_max + 1)?;
            (
                2,
                scan(2, n_max, |n| {
                    n % 2 == 1 || (0..n).map(|i| binom(n as u64, i as u64) * Rational::sign_pow(i) * &l[i]).sum::<Rational>().is_zero()
                }),
            )
        }
        "lucas_odd_sum" => {
            let l = NamedSequence::Lucas.prefix(n_max + 1)?;
            (
                1,
                scan(1, n_max, |n| {
                    n % 2 == 0 || {
                        let s: Rational = (0..n).map(|i| binom(n as u64, i as u64) * Rational::sign_pow(i) * &l[i]).sum();
                        s / &int(2) == l[n]
                    }
                }),
            )
        }
        "a001333_fixed" => {
            let a = NamedSequence::A001333.prefix(n_max + 1)?;
            (0, apply(&BinomialOperator::new(-1, 2), &a).first_mismatch(&a))
        }
        "spivey_steil_map" => {
            let op = BinomialOperator::new(Rational::new(1, 2), Rational::new(1, 2));
            let a = NamedSequence::A001653.prefix(n_max + 1)?;
            let b = NamedSequence::A007052.prefix(n_max + 1)?;
            let image = transform_recurrence(&op, &Degree2Spec::new(1, 5, 6, 1).recurrence())?;
            let termwise = first_mismatch_of(&apply(&op, &a), &b);
            let via_recurrence = first_mismatch_of(&image.generate(n_max + 1)?, &b);
            (0, termwise.into_iter().chain(via_recurrence).min())
        }
        "triangular_fixed" => {
            // T'_n = T_{n-1}, T'_0 = 0
            let shifted = SequencePrefix::new(
                (0..=n64).map(|n| int(n.saturating_sub(1) * n / 2)).collect(),
            )?;
            (0, apply(&BinomialOperator::new(-1, 2), &shifted).first_mismatch(&shifted))
        }
        "triangular_printed" => {
            let t = NamedSequence::Triangular.prefix(n_max + 1)?;
            (
                0,
                scan(0, n_max, |n| {
                    let rhs: Rational = (0..=n)
                        .map(|i| binom(n as u64, i as u64) * Rational::sign_pow(i) * Rational::from(2).pow((n - i) as u32) * &t[i])
                        .sum();
                    rhs == t[n]
                }),
            )
        }
        "choose4" => (
            0,
            scan(0, n_max, |n| {
                let n = n as u64;
                let rhs: Rational = (0..=n)
                    .map(|i| binom(n, i) * binom(i, 4) * Rational::sign_pow(i as usize) * Rational::from(2).pow((n - i) as u32))
                    .sum();
                rhs == binom(n, 4)
            }),
        ),
        "choose4_recurrence" => {
            let rec = LinearRecurrence::new(
                MonicPolynomial::linear(Rational::one()).pow(6),
                [0, 0, 0, 0, 1, 5].map(Rational::from).to_vec(),
            )?;
            let generated = rec.generate(n_max + 1)?;
            let direct = NamedSequence::Choose4.prefix(n_max + 1)?;
            let fixed = apply(&BinomialOperator::new(-1, 2), &generated);
            (0, first_mismatch_of(&generated, &direct).into_iter().chain(fixed.first_mismatch(&generated)).min())
        }
        "fibonacci_decimation" | "lucas_decimation" => {
            let x = if key == "fibonacci_decimation" {
                NamedSequence::Fibonacci
            } else {
                NamedSequence::Lucas
            };
            let seq = x.prefix(6 * n_max + 1)?;
            let fib = NamedSequence::Fibonacci.prefix(7)?;
            (
                0,
                scan(0, n_max, |n| (1..=6).all(|k| decimation_sum(&seq, &fib, k, n) == seq[k * n])),
            )
        }
        "variant_shift" => (
            0,
            VARIANT_PARAMS
                .iter()
                .filter_map(|&(hn, hd, yn, yd)| {
                    let (h, y) = (Rational::new(hn, hd), Rational::new(yn, yd));
                    let a = variant_sequence(&h, &y, &Rational::one(), n_max + 2).ok()?;
                    let head = a.truncate(n_max + 1).ok()?;
                    let tail = right_shift(&a).ok()?;
                    apply(&BinomialOperator::new(h, y), &head).first_mismatch(&tail)
                })
                .min(),
        ),
        _ => return Err(Error::UnknownKey(key.to_string())),
    };
    let (expected_pass, expected_mismatch) = if key == "triangular_printed" && n_max >= 1 {
        (false, Some(1))
    } else {
        (true, None)
    };
    Ok(IdentityCase {
        key: key.to_string(),
        range_start: lo,
        range_end: n_max,
        passed: mismatch.is_none(),
        first_mismatch: mismatch,
        expected_pass,
        expected_mismatch,
    })
}

/// Every identity, sorted by key.
pub fn verify_all(n_max: usize) -> Vec<IdentityCase> {
    IDENTITY_KEYS
        .iter()
        .map(|k| verify_identity(k, n_max).expect("known key"))
        .collect()
}
