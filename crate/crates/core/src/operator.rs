//! The generalized binomial interpolated operator `L^(h,y)`.
//!
//! `L^(h,y)(a) = b` with `b_n = sum_{i=0}^{n} C(n,i) h^i y^(n-i) a_i`.
//! With `0^0 = 1` this one formula also covers the degenerate operators:
//! `L^(0,y)(a) = (y^n a_0)`, `L^(h,0)(a) = (h^n a_n)` and
//! `L^(0,0)(a) = (a_0, 0, 0, ...)`.
//!
//! Operators compose as `L^(h,y) . L^(k,w) = L^(hk, y + wh)`; those with
//! invertible `h` form a group with identity `L^(1,0)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{pascal_rows, Rational};
use crate::error::{Error, Result};
use crate::sequences::{LinearRecurrence, SequencePrefix};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialOperator {
    pub h: Rational,
    pub y: Rational,
}

impl BinomialOperator {
    pub fn new(h: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        BinomialOperator { h: h.into(), y: y.into() }
    }

    pub fn identity() -> Self {
        BinomialOperator::new(1, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.h.is_one() && self.y.is_zero()
    }

    pub fn apply(&self, a: &SequencePrefix) -> SequencePrefix {
        apply(self, a)
    }

    /// `self . inner`.
    pub fn compose(&self, inner: &BinomialOperator) -> BinomialOperator {
        compose(self, inner)
    }

    pub fn inverse(&self) -> Result<BinomialOperator> {
        inverse(self)
    }
}

impl fmt::Display for BinomialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.y)
    }
}

impl fmt::Debug for BinomialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{self}")
    }
}

/// Termwise action on a prefix; output has the same length as the input.
///
/// O(N^2) rational products. Powers of `h` and `y` are tabulated once.
pub fn apply(op: &BinomialOperator, a: &SequencePrefix) -> SequencePrefix {
    let n = a.len();
    // h^i a_i is shared by every output term.
    let scaled: Vec<Rational> = op
        .h
        .powers(n)
        .into_iter()
        .zip(a.iter())
        .map(|(hp, t)| hp * t)
        .collect();
    let yp = op.y.powers(n);
    let rows = pascal_rows(n - 1);
    let terms = (0..n)
        .map(|m| {
            (0..=m)
                .filter(|&i| !scaled[i].is_zero() && !yp[m - i].is_zero())
                .map(|i| &rows[m][i] * &yp[m - i] * &scaled[i])
                .sum()
        })
        .collect();
    SequencePrefix::new(terms).expect("length preserved")
}

/// `outer . inner = L^(h k, y + w h)` for `outer = (h, y)`, `inner = (k, w)`.
pub fn compose(outer: &BinomialOperator, inner: &BinomialOperator) -> BinomialOperator {
    BinomialOperator {
        h: &outer.h * &inner.h,
        y: &outer.y + &inner.y * &outer.h,
    }
}

/// `(1/h, -y/h)`.
pub fn inverse(op: &BinomialOperator) -> Result<BinomialOperator> {
    let inv_h = op.h.recip().ok_or(Error::NotInvertible)?;
    let y = -(&op.y * &inv_h);
    Ok(BinomialOperator { h: inv_h, y })
}

/// The recurrence obeyed by `L^(h,y)(a)` when `a` obeys `rec`.
///
/// The characteristic polynomial has zeros `h alpha + y`; the initial terms
/// are the operator applied to the first `r` terms of `a`. `h = 0` is
/// rejected: the image is then geometric of order 1.
pub fn transform_recurrence(op: &BinomialOperator, rec: &LinearRecurrence) -> Result<LinearRecurrence> {
    let charpoly = rec.charpoly().shift_scale(&op.h, &op.y)?;
    let head = SequencePrefix::new(rec.initial().to_vec())?;
    let initial = apply(op, &head).into_terms();
    LinearRecurrence::new(charpoly, initial)
}

pub fn is_fixed_prefix(op: &BinomialOperator, a: &SequencePrefix) -> bool {
    apply(op, a) == *a
}
