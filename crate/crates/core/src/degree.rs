//! Exact degrees on the unit interval.
//!
//! A [`Degree`] is a rational number in `[0, 1]` whose denominator divides
//! `10^6`. Every degree that enters the system comes from a decimal literal
//! with at most six fractional digits, and the only operations applied to
//! degrees are `min`, `max`, `1 - x` and comparisons of sums, so this set is
//! closed and all arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Fixed denominator of every degree.
pub const SCALE: u32 = 1_000_000;
const FRACTION_DIGITS: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(u32);

impl Degree {
    pub const ZERO: Degree = Degree(0);
    pub const ONE: Degree = Degree(SCALE);

    /// Builds a degree from a count of millionths.
    pub fn from_millionths(millionths: u32) -> Result<Self> {
        if millionths > SCALE {
            return Err(Error::DegreeOutOfRange(Magnitude(millionths as u64).to_string()));
        }
        Ok(Degree(millionths))
    }

    /// Builds the degree `numerator / denominator`.
    ///
    /// Fails when the value is outside `[0, 1]` or is not a multiple of `10^-6`.
    pub fn from_ratio(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        let scaled = numerator as u128 * SCALE as u128;
        if !scaled.is_multiple_of(denominator as u128) {
            return Err(Error::Domain(format!(
                "{numerator}/{denominator} is not a multiple of 1/{SCALE}"
            )));
        }
        let millionths = scaled / denominator as u128;
        if millionths > SCALE as u128 {
            return Err(Error::DegreeOutOfRange(format!("{numerator}/{denominator}")));
        }
        Ok(Degree(millionths as u32))
    }

    pub const fn millionths(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `1 - self`.
    pub fn complement(self) -> Degree {
        Degree(SCALE - self.0)
    }

    /// True iff `self + other > 1`.
    pub fn sum_exceeds_one(self, other: Degree) -> bool {
        self.0 as u64 + other.0 as u64 > SCALE as u64
    }

    /// `self + other`, which may leave the unit interval.
    pub fn plus(self, other: Degree) -> Magnitude {
        Magnitude(self.0 as u64 + other.0 as u64)
    }

    /// `self - other`, if the result is still a degree.
    pub fn checked_sub(self, other: Degree) -> Option<Degree> {
        self.0.checked_sub(other.0).map(Degree)
    }
}

impl From<Degree> for Magnitude {
    fn from(d: Degree) -> Self {
        Magnitude(d.0 as u64)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Magnitude(self.0 as u64).fmt(f)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Degree {
    type Err = Error;

    /// Parses a plain decimal literal such as `0.8`, `1` or `0.000125`.
    fn from_str(s: &str) -> Result<Self> {
        let m: Magnitude = s.parse()?;
        if m.0 > SCALE as u64 {
            return Err(Error::DegreeOutOfRange(s.to_string()));
        }
        Ok(Degree(m.0 as u32))
    }
}

/// A non-negative exact value on the same fixed denominator, not bounded by 1.
///
/// Used for the evaluated sides of postulates such as `a + r + u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Magnitude(u64);

impl Magnitude {
    pub const ONE: Magnitude = Magnitude(SCALE as u64);

    pub const fn millionths(self) -> u64 {
        self.0
    }

    pub fn plus(self, other: impl Into<Magnitude>) -> Magnitude {
        Magnitude(self.0 + other.into().0)
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / SCALE as u64;
        let frac = self.0 % SCALE as u64;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let digits = format!("{frac:0width$}", width = FRACTION_DIGITS);
        write!(f, "{whole}.{}", digits.trim_end_matches('0'))
    }
}

impl Serialize for Magnitude {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Magnitude {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidDegree {
            literal: s.to_string(),
            reason,
        };
        let (whole, frac) = match s.split_once('.') {
            Some((w, f)) => (w, Some(f)),
            None => (s, None),
        };
        if whole.is_empty() || !whole.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid("expected digits before the decimal point"));
        }
        let frac = match frac {
            Some(f) if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) => {
                return Err(invalid("expected digits after the decimal point"))
            }
            Some(f) if f.len() > FRACTION_DIGITS => return Err(invalid("more than 6 fractional digits")),
            Some(f) => f,
            None => "",
        };
        let whole: u64 = whole
            .parse()
            .ok()
            .filter(|w| *w <= 1_000)
            .ok_or_else(|| Error::DegreeOutOfRange(s.to_string()))?;
        let mut frac_value: u64 = 0;
        for i in 0..FRACTION_DIGITS {
            let digit = frac.as_bytes().get(i).map_or(0, |b| (b - b'0') as u64);
            frac_value = frac_value * 10 + digit;
        }
        Ok(Magnitude(whole * SCALE as u64 + frac_value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn parses_exact_decimals() {
        assert_eq!(d("0.8").millionths(), 800_000);
        assert_eq!(d("1").millionths(), SCALE);
        assert_eq!(d("1.000000"), Degree::ONE);
        assert_eq!(d("0.000001").millionths(), 1);
        assert_eq!(d("0"), Degree::ZERO);
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!("1.2".parse::<Degree>(), Err(Error::DegreeOutOfRange(_))));
        assert!(matches!(
            "0.1234567".parse::<Degree>(),
            Err(Error::InvalidDegree { .. })
        ));
        assert!("-0.1".parse::<Degree>().is_err());
        assert!(".5".parse::<Degree>().is_err());
        assert!("0.".parse::<Degree>().is_err());
        assert!("1e-1".parse::<Degree>().is_err());
        assert!("".parse::<Degree>().is_err());
    }

    #[test]
    fn renders_shortest_exact_decimal() {
        assert_eq!(d("0.40").to_string(), "0.4");
        assert_eq!(d("1.0").to_string(), "1");
        assert_eq!(d("0.000125").to_string(), "0.000125");
        assert_eq!(d("0.8").plus(d("0.6")).to_string(), "1.4");
    }

    #[test]
    fn complement_and_sums() {
        assert_eq!(d("0.8").complement(), d("0.2"));
        assert_eq!(Degree::ZERO.complement(), Degree::ONE);
        assert!(d("0.7").sum_exceeds_one(d("0.6")));
        assert!(!d("0.2").sum_exceeds_one(d("0.8")));
    }

    #[test]
    fn ratio_construction() {
        assert_eq!(Degree::from_ratio(2, 5).unwrap(), d("0.4"));
        assert!(Degree::from_ratio(1, 3).is_err());
        assert!(Degree::from_ratio(3, 2).is_err());
    }
}
