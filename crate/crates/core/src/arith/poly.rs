//! Monic polynomials over the rationals.
//!
//! A monic polynomial of degree `r` is stored as its trailing coefficients
//! `c_1..c_r` of `t^r + c_1 t^(r-1) + ... + c_r`. The elementary symmetric
//! functions of its zeros are `sigma_i = (-1)^i c_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{pascal_rows, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonicPolynomial {
    trailing: Vec<Rational>,
}

impl MonicPolynomial {
    /// Builds `t^r + c_1 t^(r-1) + ... + c_r` from `[c_1, ..., c_r]`.
    pub fn new(trailing: Vec<Rational>) -> Self {
        MonicPolynomial { trailing }
    }

    /// Builds from the full coefficient list `[1, c_1, ..., c_r]`, highest
    /// degree first. Anything that is not monic is rejected.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        let mut it = coeffs.into_iter();
        match it.next() {
            Some(lead) if lead.is_one() => Ok(MonicPolynomial { trailing: it.collect() }),
            Some(lead) => Err(Error::NotMonic(lead.to_string())),
            None => Err(Error::NotMonic("none".into())),
        }
    }

    /// Builds from `sigma_1..sigma_r`.
    pub fn from_sigmas(sigmas: &[Rational]) -> Self {
        let trailing = sigmas
            .iter()
            .enumerate()
            .map(|(i, s)| Rational::sign_pow(i + 1) * s)
            .collect();
        MonicPolynomial { trailing }
    }

    /// `t - root`.
    pub fn linear(root: Rational) -> Self {
        MonicPolynomial { trailing: vec![-root] }
    }

    /// `t^2 - p t + q`, the characteristic polynomial of `W(., ., p, q)`.
    pub fn quadratic(p: &Rational, q: &Rational) -> Self {
        MonicPolynomial { trailing: vec![-p, q.clone()] }
    }

    pub fn one() -> Self {
        MonicPolynomial { trailing: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.trailing.len()
    }

    pub fn trailing(&self) -> &[Rational] {
        &self.trailing
    }

    /// `[1, c_1, ..., c_r]`.
    pub fn coeffs(&self) -> Vec<Rational> {
        std::iter::once(Rational::one())
            .chain(self.trailing.iter().cloned())
            .collect()
    }

    /// `sigma_1..sigma_r`.
    pub fn sigmas(&self) -> Vec<Rational> {
        self.trailing
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::sign_pow(i + 1) * c)
            .collect()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.trailing
            .iter()
            .fold(Rational::one(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &MonicPolynomial) -> MonicPolynomial {
        let a = self.coeffs();
        let b = other.coeffs();
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out.remove(0);
        MonicPolynomial { trailing: out }
    }

    pub fn pow(&self, m: u32) -> MonicPolynomial {
        (0..m).fold(MonicPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// The monic polynomial whose zeros are `h * alpha + y` for every zero
    /// `alpha` of `self`, computed as `h^r f((t - y) / h)` by binomial
    /// expansion.
    ///
    /// The coefficient of `t^(r-i)` is `sum_{j<=i} c_j h^j C(r-j, i-j) (-y)^(i-j)`.
    pub fn shift_scale(&self, h: &Rational, y: &Rational) -> Result<MonicPolynomial> {
        if h.is_zero() {
            return Err(Error::DegenerateDegree);
        }
        let r = self.degree();
        let coeffs = self.coeffs();
        let hp = h.powers(r + 1);
        let yp = (-y).powers(r + 1);
        let rows = pascal_rows(r);
        let trailing = (1..=r)
            .map(|i| {
                (0..=i)
                    .map(|j| &coeffs[j] * &hp[j] * &rows[r - j][i - j] * &yp[i - j])
                    .sum()
            })
            .collect();
        Ok(MonicPolynomial { trailing })
    }

    /// Symmetric functions `sigma'_1..sigma'_r` of the transformed zeros
    /// `h * alpha + y`, straight from the original `sigma_k`:
    ///
    /// `sigma'_i = sum_{k=0}^{i} C(r-k, i-k) h^k y^(i-k) sigma_k`, `sigma_0 = 1`.
    ///
    /// The closed form sometimes printed with `h^i` and `sigma_i` inside the
    /// sum is a misprint; this is the form that reduces to
    /// `sigma'_1 = h sigma_1 + 2y` for `r = 2`. Unlike [`shift_scale`] this
    /// stays defined at `h = 0`.
    ///
    /// [`shift_scale`]: MonicPolynomial::shift_scale
    pub fn symmetric_coeffs(&self, h: &Rational, y: &Rational) -> Vec<Rational> {
        let r = self.degree();
        let sigma: Vec<Rational> = std::iter::once(Rational::one())
            .chain(self.sigmas())
            .collect();
        let hp = h.powers(r + 1);
        let yp = y.powers(r + 1);
        let rows = pascal_rows(r);
        (1..=r)
            .map(|i| {
                (0..=i)
                    .map(|k| &rows[r - k][i - k] * &hp[k] * &yp[i - k] * &sigma[k])
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for MonicPolynomial {
    /// Expanded text form, e.g. `t^2-4t+2` or `t^3+1/2t-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        write!(f, "{}", monomial(r))?;
        if r == 0 {
            return Ok(());
        }
        for (i, c) in self.trailing.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = r - i - 1;
            f.write_str(if c.is_negative() { "-" } else { "+" })?;
            let mag = c.abs();
            if power == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial(power))?;
            } else {
                write!(f, "{mag}{}", monomial(power))?;
            }
        }
        Ok(())
    }
}

fn monomial(power: usize) -> String {
    match power {
        0 => "1".to_string(),
        1 => "t".to_string(),
        k => format!("t^{k}"),
    }
}

impl fmt::Debug for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MonicPolynomial {
    type Err = Error;

    /// Parses the expanded text form in the variable `t`: a signed sum of
    /// terms `[coef][*]t[^k]` or bare constants. Repeated powers are added.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePolynomial {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(fail("empty"));
        }

        let mut starts = vec![0];
        for (i, ch) in s.char_indices().skip(1) {
            if ch == '+' || ch == '-' {
                starts.push(i);
            }
        }
        starts.push(s.len());

        let mut terms: BTreeMap<usize, Rational> = BTreeMap::new();
        for w in starts.windows(2) {
            let term = &s[w[0]..w[1]];
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(fail("dangling sign"));
            }
            let (coef, power) = match body.split_once('t') {
                None => (parse_coef(body).ok_or_else(|| fail("bad constant"))?, 0),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let coef = if c.is_empty() {
                        Rational::one()
                    } else {
                        parse_coef(c).ok_or_else(|| fail("bad coefficient"))?
                    };
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .filter(|e| !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()))
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| fail("bad exponent"))?
                    };
                    (coef, power)
                }
            };
            let coef = if negative { -coef } else { coef };
            *terms.entry(power).or_insert_with(Rational::zero) += coef;
        }

        let degree = terms
            .iter()
            .rev()
            .find(|(_, c)| !c.is_zero())
            .map(|(p, _)| *p)
            .ok_or_else(|| fail("zero polynomial"))?;
        let lead = &terms[&degree];
        if !lead.is_one() {
            return Err(Error::NotMonic(lead.to_string()));
        }
        let trailing = (0..degree)
            .rev()
            .map(|p| terms.get(&p).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Ok(MonicPolynomial { trailing })
    }
}

fn parse_coef(s: &str) -> Option<Rational> {
    if s.starts_with(['+', '-']) {
        return None;
    }
    s.parse().ok()
}

impl Serialize for MonicPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonicPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        MonicPolynomial::from_coeffs(coeffs).map_err(serde::de::Error::custom)
    }
}
