//! Sequences left unchanged by `L^(h,y)`.
//!
//! Covered here:
//! * the geometric family `a_n = (y / (1 - h))^n a_0`, fixed for any `h != 1`;
//! * sequences with `a_0 = 1`, which can only be fixed by `(1, 0)` or
//!   `(-1, 2 a_1)`;
//! * `W(delta, gamma, p, q)`, fixed by a non-trivial operator exactly when the
//!   operator is `(-1, p)` and `gamma = p delta / 2`, together with the
//!   identities that follow from it;
//! * recurrences with characteristic polynomial `(t^2 - p t + q)^m`, whose
//!   polynomial is preserved by `(-1, p)`.

use serde::{Deserialize, Serialize};

use crate::arith::{pascal_rows, MonicPolynomial, Rational};
use crate::error::{Error, Result};
use crate::operator::{apply, transform_recurrence, BinomialOperator};
use crate::sequences::{Degree2Spec, LinearRecurrence, SequencePrefix};

/// Outcome of testing `L^(h,y)(a) = a` on a finite prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointReport {
    #[serde(flatten)]
    pub operator: BinomialOperator,
    pub verified_length: usize,
    pub fixed: bool,
    pub first_mismatch: Option<usize>,
}

impl FixedPointReport {
    pub fn check(op: &BinomialOperator, a: &SequencePrefix) -> Self {
        let first_mismatch = apply(op, a).first_mismatch(a);
        FixedPointReport {
            operator: op.clone(),
            verified_length: a.len(),
            fixed: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

/// `(y / (1 - h))^n a_0` for `n < count`.
pub fn geometric_fixed_sequence(
    h: &Rational,
    y: &Rational,
    a0: &Rational,
    count: usize,
) -> Result<SequencePrefix> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    let denom = (Rational::one() - h).recip().ok_or(Error::UnitScale)?;
    let ratio = y * &denom;
    SequencePrefix::new(ratio.powers(count).into_iter().map(|r| r * a0).collect())
}

/// The only operators that can fix a sequence starting `1, a_1, ...`.
pub fn unit_start_fixed_params(a1: &Rational) -> Vec<BinomialOperator> {
    vec![
        BinomialOperator::identity(),
        BinomialOperator::new(-1, a1 * &Rational::from(2)),
    ]
}

/// Operators fixing `W(delta, gamma, p, q)`: always the identity, plus
/// `(-1, p)` when `gamma = p delta / 2`.
pub fn degree2_fixed_test(spec: &Degree2Spec) -> Vec<BinomialOperator> {
    let mut out = vec![BinomialOperator::identity()];
    if spec.is_self_dual() {
        out.push(BinomialOperator::new(-1, spec.p.clone()));
    }
    out
}

fn require_self_dual(spec: &Degree2Spec) -> Result<()> {
    if spec.is_self_dual() {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!(
            "gamma = {} differs from p delta / 2 = {}",
            spec.gamma,
            &spec.p * &spec.delta / &Rational::from(2)
        )))
    }
}

/// For a sequence fixed by `(-1, p)`: `L^(h,y)(a) = L^(-h, y + p h)(a)` on
/// `count` terms.
pub fn mirrored_operator_identity_check(
    spec: &Degree2Spec,
    h: &Rational,
    y: &Rational,
    count: usize,
) -> Result<bool> {
    require_self_dual(spec)?;
    let a = spec.generate(count)?;
    let lhs = apply(&BinomialOperator::new(h.clone(), y.clone()), &a);
    let rhs = apply(&BinomialOperator::new(-h, y + &spec.p * h), &a);
    Ok(lhs == rhs)
}

/// `sum_{i=0}^{n-1} C(n,i) (-1)^i p^(n-i) a_i`, which is `0` for even `n`
/// and `2 a_n` for odd `n` when `gamma = p delta / 2`.
pub fn alternating_sum_identity(spec: &Degree2Spec, n: usize) -> Result<Rational> {
    require_self_dual(spec)?;
    if n == 0 {
        return Err(Error::ZeroCount);
    }
    let a = spec.generate(n)?;
    let pp = spec.p.powers(n + 1);
    let row = &pascal_rows(n)[n];
    Ok((0..n)
        .map(|i| &row[i] * &Rational::sign_pow(i) * &pp[n - i] * &a[i])
        .sum())
}

/// Does `L^(-1,p)` map a recurrence with characteristic polynomial
/// `(t^2 - p t + q)^m` to one with the same polynomial? Also confirms on
/// `count` terms that the image sequence obeys it.
pub fn charpoly_power_preservation(
    p: &Rational,
    q: &Rational,
    m: u32,
    initial: &[Rational],
    count: usize,
) -> Result<bool> {
    let charpoly = MonicPolynomial::quadratic(p, q).pow(m);
    let rec = LinearRecurrence::new(charpoly.clone(), initial.to_vec())?;
    let op = BinomialOperator::new(-1, p.clone());
    let image = transform_recurrence(&op, &rec)?;
    if image.charpoly() != &charpoly {
        return Ok(false);
    }
    let terms = apply(&op, &rec.generate(count.max(1))?);
    Ok(image.is_satisfied_by(&terms))
}
