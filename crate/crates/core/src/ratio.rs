//! Exact fraction type and its `"p/q"` text form.

use alloc::string::{String, ToString};
use core::str::FromStr;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, the only number type of this crate.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Lowest-terms rendering: `"p/q"` with `q > 0`, or just `"p"` when `q == 1`.
pub fn format_rat(r: &Rat) -> String {
    // BigRational is kept reduced with a positive denominator.
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `"p/q"` or a bare integer. The denominator must be positive.
pub fn parse_rat(s: &str) -> Result<Rat, FractionParseError> {
    let s = s.trim();
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(numer).map_err(|_| FractionParseError::malformed(s))?;
    let d = match denom {
        Some(d) => BigInt::from_str(d).map_err(|_| FractionParseError::malformed(s))?,
        None => BigInt::one(),
    };
    if d.is_zero() || d.is_negative() {
        return Err(FractionParseError::malformed(s));
    }
    Ok(Rat::new(n, d))
}

/// A fraction string that could not be read back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionParseError {
    pub input: String,
}

impl FractionParseError {
    fn malformed(s: &str) -> Self {
        FractionParseError { input: s.into() }
    }
}

impl core::fmt::Display for FractionParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "malformed fraction {:?} (expected \"p/q\" with q > 0)", self.input)
    }
}
