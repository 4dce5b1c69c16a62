//! Named integer sequences and the identities relating them.

mod identities;
mod wz;

pub use identities::{
    catalan_even_sum, catalan_odd_sum, catalan_recurrence_sum, verify_all, verify_identity,
    IdentityCase, IDENTITY_KEYS,
};
pub use wz::{catalan_wz_term, wz_certificate_check, wz_certificate_failure, wz_certificate_ratio};

use std::fmt;
use std::str::FromStr;

use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::sequences::{epsilon, variant_sequence, Degree2Spec, SequencePrefix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedSequence {
    Fibonacci,
    Lucas,
    Catalan,
    Triangular,
    Choose4,
    A001333,
    A001653,
    A007052,
    A010892,
    Bell,
    UppuluriCarpenter,
}

impl NamedSequence {
    pub const ALL: [NamedSequence; 11] = [
        NamedSequence::Fibonacci,
        NamedSequence::Lucas,
        NamedSequence::Catalan,
        NamedSequence::Triangular,
        NamedSequence::Choose4,
        NamedSequence::A001333,
        NamedSequence::A001653,
        NamedSequence::A007052,
        NamedSequence::A010892,
        NamedSequence::Bell,
        NamedSequence::UppuluriCarpenter,
    ];

    pub fn key(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "fibonacci",
            NamedSequence::Lucas => "lucas",
            NamedSequence::Catalan => "catalan",
            NamedSequence::Triangular => "triangular",
            NamedSequence::Choose4 => "choose4",
            NamedSequence::A001333 => "A001333",
            NamedSequence::A001653 => "A001653",
            NamedSequence::A007052 => "A007052",
            NamedSequence::A010892 => "A010892",
            NamedSequence::Bell => "bell",
            NamedSequence::UppuluriCarpenter => "uppuluri_carpenter",
        }
    }

    pub fn oeis(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "A000045",
            NamedSequence::Lucas => "A000032",
            NamedSequence::Catalan => "A000108",
            NamedSequence::Triangular => "A000217",
            NamedSequence::Choose4 => "A000332",
            NamedSequence::A001333 => "A001333",
            NamedSequence::A001653 => "A001653",
            NamedSequence::A007052 => "A007052",
            NamedSequence::A010892 => "A010892",
            NamedSequence::Bell => "A000110",
            NamedSequence::UppuluriCarpenter => "A000587",
        }
    }

    /// How the prefix is produced.
    pub fn rule(self) -> &'static str {
        match self {
            NamedSequence::Fibonacci => "W(0,1,1,-1)",
            NamedSequence::Lucas => "W(2,1,1,-1)",
            NamedSequence::Catalan => "C(2n,n)/(n+1)",
            NamedSequence::Triangular => "n(n+1)/2",
            NamedSequence::Choose4 => "C(n,4)",
            NamedSequence::A001333 => "W(1,1,2,-1)",
            NamedSequence::A001653 => "W(1,5,6,1)",
            NamedSequence::A007052 => "W(1,3,4,2)",
            NamedSequence::A010892 => "W(1,1,1,1)",
            NamedSequence::Bell => "variant sequence h=1 y=1 a0=1",
            NamedSequence::UppuluriCarpenter => "epsilon of variant sequence h=1 y=-1 a0=1",
        }
    }

    pub fn prefix(self, n: usize) -> Result<SequencePrefix> {
        if n == 0 {
            return Err(Error::ZeroCount);
        }
        let w = |d: i64, g: i64, p: i64, q: i64| Degree2Spec::new(d, g, p, q).generate(n);
        let one = Rational::one();
        match self {
            NamedSequence::Fibonacci => w(0, 1, 1, -1),
            NamedSequence::Lucas => w(2, 1, 1, -1),
            NamedSequence::A001333 => w(1, 1, 2, -1),
            NamedSequence::A001653 => w(1, 5, 6, 1),
            NamedSequence::A007052 => w(1, 3, 4, 2),
            NamedSequence::A010892 => w(1, 1, 1, 1),
            NamedSequence::Catalan => SequencePrefix::new((0..n as u64).map(catalan).collect()),
            NamedSequence::Triangular => SequencePrefix::new(
                (0..n as u64).map(|k| Rational::from(k * (k + 1) / 2)).collect(),
            ),
            NamedSequence::Choose4 => SequencePrefix::new(
                (0..n as u64).map(|k| Rational::from(binomial(k, 4))).collect(),
            ),
            NamedSequence::Bell => variant_sequence(&one, &one, &one, n),
            // The variant recurrence at (1, -1) alternates the signs of the
            // listed Uppuluri-Carpenter numbers; epsilon undoes that.
            NamedSequence::UppuluriCarpenter => {
                variant_sequence(&one, &-one.clone(), &one, n).map(|a| epsilon(&a))
            }
        }
    }
}

impl fmt::Display for NamedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for NamedSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedSequence::ALL
            .into_iter()
            .find(|k| k.key().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownKey(s.to_string()))
    }
}

/// Prefix of a named sequence by key.
pub fn named_prefix(key: &str, n: usize) -> Result<SequencePrefix> {
    key.parse::<NamedSequence>()?.prefix(n)
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Rational {
    Rational::new(binomial(2 * n, n), n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> SequencePrefix {
        SequencePrefix::from_ints(v.iter().copied()).unwrap()
    }

    #[test]
    fn named_examples() {
        assert_eq!(named_prefix("catalan", 7).unwrap(), ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(named_prefix("triangular", 6).unwrap(), ints(&[0, 1, 3, 6, 10, 15]));
        assert_eq!(named_prefix("A007052", 5).unwrap(), ints(&[1, 3, 10, 34, 116]));
        assert_eq!(named_prefix("a007052", 2).unwrap(), ints(&[1, 3]));
        assert_eq!(named_prefix("nope", 3), Err(Error::UnknownKey("nope".into())));
        assert_eq!(named_prefix("lucas", 0), Err(Error::ZeroCount));
    }

    #[test]
    fn keys_round_trip() {
        for k in NamedSequence::ALL {
            assert_eq!(k.key().parse::<NamedSequence>().unwrap(), k);
            assert_eq!(k.prefix(12).unwrap().len(), 12);
        }
    }
}
