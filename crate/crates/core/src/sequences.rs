//! Finite sequence prefixes and linear recurrences.
//!
//! Every sequence in this crate is a finite prefix `a_0..a_{N-1}`; two
//! sequences are equal when their overlapping prefixes agree exactly.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{pascal_rows, MonicPolynomial, Rational};
use crate::error::{Error, Result};

/// A non-empty prefix of a sequence.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct SequencePrefix {
    terms: Vec<Rational>,
}

impl SequencePrefix {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(SequencePrefix { terms })
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(terms: I) -> Result<Self> {
        Self::new(terms.into_iter().map(Rational::from).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Rational> {
        self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.terms.iter()
    }

    /// First `n` terms (or all of them if fewer).
    pub fn truncate(&self, n: usize) -> Result<SequencePrefix> {
        SequencePrefix::new(self.terms.iter().take(n).cloned().collect())
    }

    /// Index of the first disagreement on the overlapping range.
    pub fn first_mismatch(&self, other: &SequencePrefix) -> Option<usize> {
        self.terms
            .iter()
            .zip(&other.terms)
            .position(|(a, b)| a != b)
    }

    /// Equality on the overlapping range.
    pub fn agrees_with(&self, other: &SequencePrefix) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl Index<usize> for SequencePrefix {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.terms[i]
    }
}

impl TryFrom<Vec<Rational>> for SequencePrefix {
    type Error = Error;
    fn try_from(terms: Vec<Rational>) -> Result<Self> {
        SequencePrefix::new(terms)
    }
}

impl From<SequencePrefix> for Vec<Rational> {
    fn from(s: SequencePrefix) -> Self {
        s.terms
    }
}

impl fmt::Display for SequencePrefix {
    /// Comma-separated rationals, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SequencePrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SequencePrefix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_terms(s).and_then(SequencePrefix::new)
    }
}

pub(crate) fn parse_terms(s: &str) -> Result<Vec<Rational>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

/// A linear recurrence `a_n = -(c_1 a_{n-1} + ... + c_r a_{n-r})` with its
/// first `r` terms. The characteristic polynomial need not be minimal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RecurrenceRecord", into = "RecurrenceRecord")]
pub struct LinearRecurrence {
    charpoly: MonicPolynomial,
    initial: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RecurrenceRecord {
    charpoly: MonicPolynomial,
    initial: Vec<Rational>,
}

impl TryFrom<RecurrenceRecord> for LinearRecurrence {
    type Error = Error;
    fn try_from(r: RecurrenceRecord) -> Result<Self> {
        LinearRecurrence::new(r.charpoly, r.initial)
    }
}

impl From<LinearRecurrence> for RecurrenceRecord {
    fn from(r: LinearRecurrence) -> Self {
        RecurrenceRecord { charpoly: r.charpoly, initial: r.initial }
    }
}

impl LinearRecurrence {
    pub fn new(charpoly: MonicPolynomial, initial: Vec<Rational>) -> Result<Self> {
        let order = charpoly.degree();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if initial.len() != order {
            return Err(Error::InitialLength { order, given: initial.len() });
        }
        Ok(LinearRecurrence { charpoly, initial })
    }

    pub fn order(&self) -> usize {
        self.charpoly.degree()
    }

    pub fn charpoly(&self) -> &MonicPolynomial {
        &self.charpoly
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    /// First `n` terms; for `n <= r` this is a prefix of the initial terms.
    pub fn generate(&self, n: usize) -> Result<SequencePrefix> {
        if n == 0 {
            return Err(Error::ZeroCount);
        }
        let c = self.charpoly.trailing();
        let r = c.len();
        let mut terms: Vec<Rational> = self.initial.iter().take(n).cloned().collect();
        while terms.len() < n {
            let m = terms.len();
            let next: Rational = (1..=r).map(|i| &c[i - 1] * &terms[m - i]).sum();
            terms.push(-next);
        }
        SequencePrefix::new(terms)
    }

    /// Does `a` obey this recurrence at every index `>= r`? Initial terms are
    /// not compared.
    pub fn is_satisfied_by(&self, a: &SequencePrefix) -> bool {
        self.first_violation(a).is_none()
    }

    pub fn first_violation(&self, a: &SequencePrefix) -> Option<usize> {
        let c = self.charpoly.trailing();
        let r = c.len();
        (r..a.len()).find(|&n| {
            let s: Rational = (1..=r).map(|i| &c[i - 1] * &a[n - i]).sum();
            &a[n] + s != Rational::zero()
        })
    }
}

impl fmt::Display for LinearRecurrence {
    /// `<charpoly>;<initial terms>`, e.g. `t^2-t-1;0,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.charpoly)?;
        for (i, t) in self.initial.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LinearRecurrence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseRecurrence { text: s.to_string(), reason };
        let (poly, init) = s
            .split_once(';')
            .ok_or_else(|| fail("expected \"<charpoly>;<initial terms>\"".into()))?;
        let charpoly: MonicPolynomial = poly.parse().map_err(|e: Error| fail(e.to_string()))?;
        let initial = parse_terms(init).map_err(|e| fail(e.to_string()))?;
        LinearRecurrence::new(charpoly, initial).map_err(|e| fail(e.to_string()))
    }
}

/// `W(delta, gamma, p, q)`: `a_0 = delta`, `a_1 = gamma`,
/// `a_n = p a_{n-1} - q a_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Degree2Spec {
    pub delta: Rational,
    pub gamma: Rational,
    pub p: Rational,
    pub q: Rational,
}

impl Degree2Spec {
    pub fn new(
        delta: impl Into<Rational>,
        gamma: impl Into<Rational>,
        p: impl Into<Rational>,
        q: impl Into<Rational>,
    ) -> Self {
        Degree2Spec { delta: delta.into(), gamma: gamma.into(), p: p.into(), q: q.into() }
    }

    /// The charpoly is stored as `t^2 - p t + q`.
    pub fn recurrence(&self) -> LinearRecurrence {
        LinearRecurrence {
            charpoly: MonicPolynomial::quadratic(&self.p, &self.q),
            initial: vec![self.delta.clone(), self.gamma.clone()],
        }
    }

    pub fn generate(&self, n: usize) -> Result<SequencePrefix> {
        self.recurrence().generate(n)
    }

    /// `gamma = p delta / 2`, the condition for `L^(-1,p)` to fix the sequence.
    pub fn is_self_dual(&self) -> bool {
        self.gamma.clone() * Rational::from(2) == &self.p * &self.delta
    }
}

/// Drops the first term.
pub fn right_shift(a: &SequencePrefix) -> Result<SequencePrefix> {
    if a.len() < 2 {
        return Err(Error::EmptyShift);
    }
    SequencePrefix::new(a.terms[1..].to_vec())
}

/// Multiplies term `n` by `(-1)^n`.
pub fn epsilon(a: &SequencePrefix) -> SequencePrefix {
    let terms = a
        .iter()
        .enumerate()
        .map(|(n, t)| if n % 2 == 0 { t.clone() } else { -t })
        .collect();
    SequencePrefix { terms }
}

/// The variant sequence seeded by `a0`:
/// `a_{n+1} = sum_{i=0}^{n} C(n,i) h^i y^(n-i) a_i`.
pub fn variant_sequence(h: &Rational, y: &Rational, a0: &Rational, n: usize) -> Result<SequencePrefix> {
    if n == 0 {
        return Err(Error::ZeroCount);
    }
    let hp = h.powers(n);
    let yp = y.powers(n);
    let rows = pascal_rows(n.saturating_sub(2));
    let mut terms = vec![a0.clone()];
    for m in 0..n - 1 {
        let next = (0..=m)
            .map(|i| &rows[m][i] * &hp[i] * &yp[m - i] * &terms[i])
            .sum();
        terms.push(next);
    }
    SequencePrefix::new(terms)
}
