//! Decimation of degree-2 recurrences.
//!
//! For `a = W(delta, gamma, p, q)` and the Lucas pair `u = W(0, 1, p, q)`,
//! `v = W(2, p, p, q)`, the subsequence `(a_{kn})` equals
//! `L^(u_k, -q u_{k-1})(a)` and recurs with `t^2 - v_k t + q^k`.

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::operator::BinomialOperator;
use crate::sequences::{Degree2Spec, LinearRecurrence, SequencePrefix};

/// The fundamental solutions of `x_n = p x_{n-1} - q x_{n-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasPair {
    pub p: Rational,
    pub q: Rational,
    pub u: SequencePrefix,
    pub v: SequencePrefix,
}

impl LucasPair {
    /// `u` and `v` up to index `max_index` inclusive.
    pub fn new(p: &Rational, q: &Rational, max_index: usize) -> Self {
        let n = max_index + 1;
        let u = Degree2Spec::new(0, 1, p.clone(), q.clone()).generate(n).expect("n >= 1");
        let v = Degree2Spec::new(2, p.clone(), p.clone(), q.clone())
            .generate(n)
            .expect("n >= 1");
        LucasPair { p: p.clone(), q: q.clone(), u, v }
    }
}

/// `(u_k, -q u_{k-1})`.
pub fn decimation_operator(p: &Rational, q: &Rational, k: usize) -> Result<BinomialOperator> {
    if k == 0 {
        return Err(Error::ZeroStep);
    }
    let pair = LucasPair::new(p, q, k);
    Ok(BinomialOperator::new(pair.u[k].clone(), -(q * &pair.u[k - 1])))
}

/// `(a_0, a_k, a_{2k}, ...)` for as many indices as `a` covers.
pub fn decimate_prefix(a: &SequencePrefix, k: usize) -> Result<SequencePrefix> {
    if k == 0 {
        return Err(Error::ZeroStep);
    }
    SequencePrefix::new(a.iter().step_by(k).cloned().collect())
}

/// `W(a_0, a_k, v_k, q^k)`.
pub fn decimated_recurrence(spec: &Degree2Spec, k: usize) -> Result<LinearRecurrence> {
    if k == 0 {
        return Err(Error::ZeroStep);
    }
    let a = spec.generate(k + 1)?;
    let pair = LucasPair::new(&spec.p, &spec.q, k);
    let q_k = spec.q.pow(k as u32);
    Ok(Degree2Spec {
        delta: a[0].clone(),
        gamma: a[k].clone(),
        p: pair.v[k].clone(),
        q: q_k,
    }
    .recurrence())
}
