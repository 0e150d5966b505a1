//! Exact rational arithmetic helpers and mixed-radix numerals.
//!
//! Every fractional quantity in the engine is a [`Rational`]. The helpers
//! here fix the mathematical conventions for `floor`, `mod` and `amod` on
//! negative arguments.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

pub type Rational = BigRational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil(x: &Rational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - Rational::from_integer(floor(x))
}

/// `x = i + f` with `0 <= f < 1`.
pub fn floor_frac(x: &Rational) -> (BigInt, Rational) {
    let i = floor(x);
    let f = x - Rational::from_integer(i.clone());
    (i, f)
}

pub fn floor_i64(x: &Rational) -> i64 {
    floor(x).to_i64().expect("integer part exceeds i64")
}

pub fn ceil_i64(x: &Rational) -> i64 {
    ceil(x).to_i64().expect("integer part exceeds i64")
}

/// `x mod m` in `[0, m)` for a positive rational modulus.
pub fn rmod(x: &Rational, m: &Rational) -> Rational {
    x - m * Rational::from_integer(floor(&(x / m)))
}

/// Result in `[0, n)`. Panics if `n <= 0`.
pub fn modulo(m: i64, n: i64) -> i64 {
    assert!(n > 0, "modulus must be positive, got {n}");
    m.rem_euclid(n)
}

/// Result in `(0, n]`. Panics if `n <= 0`.
pub fn amod(m: i64, n: i64) -> i64 {
    checked_amod(m, n).unwrap_or_else(|| panic!("modulus must be positive, got {n}"))
}

pub fn checked_amod(m: i64, n: i64) -> Option<i64> {
    (n > 0).then(|| n - (-m).rem_euclid(n))
}

pub fn div_floor(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

pub fn div_ceil(a: i64, b: i64) -> i64 {
    -Integer::div_floor(&-a, &b)
}

/// Decimal string rounded towards minus infinity at `places` digits.
pub fn to_decimal(x: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = floor(&(x * Rational::from_integer(scale.clone())));
    let sign = if scaled.is_negative() { "-" } else { "" };
    let (i, f) = scaled.abs().div_rem(&scale);
    if places == 0 {
        return format!("{sign}{i}");
    }
    format!("{sign}{i}.{:0>width$}", f.to_string(), width = places)
}

/// Parse `"a/b"`, `"-a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("not a fraction: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `a0;a1,...,an <b1,...,bn>` meaning `a0 + (a1 + (a2 + ...)/b2)/b1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadix {
    pub integer: BigInt,
    pub digits: Vec<u64>,
    pub radices: Vec<u64>,
}

impl MixedRadix {
    pub fn new(integer: i64, digits: &[u64], radices: &[u64]) -> Self {
        Self { integer: BigInt::from(integer), digits: digits.to_vec(), radices: radices.to_vec() }
    }

    /// Parse `"a0;a1,a2"` or a pure fraction `"a1,a2"` against `radices`.
    pub fn parse(s: &str, radices: &[u64]) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("malformed mixed-radix numeral {s:?}"));
        let (integer, rest) = match s.split_once(';') {
            Some((i, r)) => (i.trim().parse::<BigInt>().map_err(|_| bad())?, r),
            None => (BigInt::zero(), s),
        };
        let digits = rest
            .split(',')
            .map(|d| d.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if digits.len() > radices.len() {
            return Err(bad());
        }
        let radices = radices[..digits.len()].to_vec();
        Ok(Self { integer, digits, radices })
    }

    pub fn to_rational(&self) -> Result<Rational, Error> {
        if self.digits.len() != self.radices.len() {
            return Err(Error::Parse("digit and radix counts differ".into()));
        }
        let mut acc = Rational::zero();
        for (&d, &b) in self.digits.iter().zip(&self.radices).rev() {
            if b == 0 || d >= b {
                return Err(Error::DigitOutOfRange { digit: d, radix: b });
            }
            acc = (acc + Rational::from_integer(d.into())) / Rational::from_integer(b.into());
        }
        Ok(acc + Rational::from_integer(self.integer.clone()))
    }

    /// Successive multiply-and-floor; the last digit is truncated.
    pub fn from_rational(x: &Rational, radices: &[u64]) -> Self {
        let (integer, mut rest) = floor_frac(x);
        let mut digits = Vec::with_capacity(radices.len());
        for &b in radices {
            let scaled = rest * Rational::from_integer(b.into());
            let (d, f) = floor_frac(&scaled);
            digits.push(d.to_u64().expect("digit below radix"));
            rest = f;
        }
        Self { integer, digits, radices: radices.to_vec() }
    }

    /// Keep the first `n` digits.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.digits.len());
        Self {
            integer: self.integer.clone(),
            digits: self.digits[..n].to_vec(),
            radices: self.radices[..n].to_vec(),
        }
    }

    /// Comma-separated digits.
    pub fn fraction_digits(&self) -> String {
        self.digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for MixedRadix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.integer, self.fraction_digits())
    }
}

pub fn from_mixed_radix(v: &MixedRadix) -> Result<Rational, Error> {
    v.to_rational()
}

pub fn to_mixed_radix(x: &Rational, radices: &[u64]) -> MixedRadix {
    MixedRadix::from_rational(x, radices)
}

pub(crate) fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}
