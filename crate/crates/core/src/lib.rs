//! Exact algebra of the generalized binomial interpolated operator
//! `L^(h,y)`, which maps a sequence `a` to
//!
//! ```text
//! b_n = sum_{i=0}^{n} C(n,i) h^i y^(n-i) a_i
//! ```
//!
//! The crate works over arbitrary-precision rationals throughout. It covers
//! the action of `L^(h,y)` on sequence prefixes and on linear recurrences
//! (zeros of the characteristic polynomial move to `h alpha + y`), the
//! composition law `L^(h,y) . L^(k,w) = L^(hk, y + wh)`, sequences fixed by
//! the operator, decimation of degree-2 recurrences, the Hankel scaling law
//! and a catalog of integer-sequence identities that follow from these.
//!
//! ```
//! use binterp::{BinomialOperator, Degree2Spec, transform_recurrence, q};
//!
//! // A001653 -> A007052
//! let a = Degree2Spec::new(1, 5, 6, 1).recurrence();
//! let b = transform_recurrence(&BinomialOperator::new(q(1, 2), q(1, 2)), &a).unwrap();
//! assert_eq!(b.to_string(), "t^2-4t+2;1,3");
//! ```

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod decimation;
pub mod error;
pub mod fixed_points;
pub mod hankel;
pub mod operator;
pub mod sequences;

pub use arith::{binomial, q, z, MonicPolynomial, Rational};
pub use error::{Error, Result};
pub use operator::{apply, compose, inverse, is_fixed_prefix, transform_recurrence, BinomialOperator};
pub use sequences::{epsilon, right_shift, variant_sequence, Degree2Spec, LinearRecurrence, SequencePrefix};
