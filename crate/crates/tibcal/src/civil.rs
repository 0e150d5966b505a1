//! Julian day numbers for Gregorian and Julian calendar dates.

use std::fmt;

use serde::Serialize;

use crate::arith::div_floor;
use crate::Error;

/// First JD reckoned in the Gregorian calendar (15 October 1582).
pub const GREGORIAN_START_JD: i64 = 2299161;

const MONTH_ABBR: [&str; 12] = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CivilDate {
    pub year: i64,
    pub month: i64,
    pub day: i64,
    pub julian: bool,
}

impl CivilDate {
    pub fn jd(&self) -> i64 {
        if self.julian {
            jd_from_julian(self.year, self.month, self.day)
        } else {
            jd_from_gregorian(self.year, self.month, self.day)
        }
    }

    /// `"27 Feb 2017"`, with a Julian marker before the Gregorian reform.
    pub fn long_form(&self) -> String {
        let tail = if self.julian { " (Julian)" } else { "" };
        format!("{} {} {}{}", self.day, MONTH_ABBR[(self.month - 1) as usize], self.year, tail)
    }
}

impl fmt::Display for CivilDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)?;
        if self.julian {
            f.write_str("J")?;
        }
        Ok(())
    }
}

pub fn jd_from_gregorian(y: i64, m: i64, d: i64) -> i64 {
    let a = div_floor(14 - m, 12);
    let yy = y + 4800 - a;
    let mm = m + 12 * a - 3;
    d + div_floor(153 * mm + 2, 5) + 365 * yy + div_floor(yy, 4) - div_floor(yy, 100) + div_floor(yy, 400) - 32045
}

pub fn jd_from_julian(y: i64, m: i64, d: i64) -> i64 {
    let a = div_floor(14 - m, 12);
    let yy = y + 4800 - a;
    let mm = m + 12 * a - 3;
    d + div_floor(153 * mm + 2, 5) + 365 * yy + div_floor(yy, 4) - 32083
}

fn from_day_of_era(c: i64, b: i64) -> (i64, i64, i64) {
    let d = div_floor(4 * c + 3, 1461);
    let e = c - div_floor(1461 * d, 4);
    let m = div_floor(5 * e + 2, 153);
    let day = e - div_floor(153 * m + 2, 5) + 1;
    let month = m + 3 - 12 * div_floor(m, 10);
    let year = 100 * b + d - 4800 + div_floor(m, 10);
    (year, month, day)
}

pub fn gregorian_from_jd(jd: i64) -> CivilDate {
    let a = jd + 32044;
    let b = div_floor(4 * a + 3, 146097);
    let c = a - div_floor(146097 * b, 4);
    let (year, month, day) = from_day_of_era(c, b);
    CivilDate { year, month, day, julian: false }
}

pub fn julian_from_jd(jd: i64) -> CivilDate {
    let (year, month, day) = from_day_of_era(jd + 32082, 0);
    CivilDate { year, month, day, julian: true }
}

/// Gregorian from the reform on, Julian before.
pub fn civil_from_jd(jd: i64) -> CivilDate {
    if jd >= GREGORIAN_START_JD {
        gregorian_from_jd(jd)
    } else {
        julian_from_jd(jd)
    }
}

fn days_in_month(y: i64, m: i64, julian: bool) -> i64 {
    let leap = if julian { y.rem_euclid(4) == 0 } else { y.rem_euclid(4) == 0 && (y.rem_euclid(100) != 0 || y.rem_euclid(400) == 0) };
    match m {
        2 if leap => 29,
        2 => 28,
        4 | 6 | 9 | 11 => 30,
        _ => 31,
    }
}

/// Parse `YYYY-MM-DD`, with a trailing `J` for the Julian calendar.
pub fn parse_civil(s: &str) -> Result<CivilDate, Error> {
    let bad = || Error::Parse(format!("expected YYYY-MM-DD, got {s:?}"));
    let t = s.trim();
    let (body, julian) = match t.strip_suffix(['J', 'j']) {
        Some(b) => (b, true),
        None => (t, false),
    };
    let (neg, body) = match body.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, body),
    };
    let parts: Vec<&str> = body.split('-').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums = parts.iter().map(|p| p.parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
    let year = if neg { -nums[0] } else { nums[0] };
    let (month, day) = (nums[1], nums[2]);
    if !(1..=12).contains(&month) || day < 1 || day > days_in_month(year, month, julian) {
        return Err(Error::OutOfRange(format!("no such date {s:?}")));
    }
    Ok(CivilDate { year, month, day, julian })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_days() {
        assert_eq!(jd_from_gregorian(2000, 1, 1), 2451545);
        assert_eq!(jd_from_julian(806, 3, 23), 2015531);
        assert_eq!(jd_from_gregorian(1927, 4, 1), 2424972);
        assert_eq!(jd_from_gregorian(1582, 10, 15), GREGORIAN_START_JD);
        assert_eq!(jd_from_julian(1582, 10, 4), GREGORIAN_START_JD - 1);
        assert_eq!(civil_from_jd(2015531).long_form(), "23 Mar 806 (Julian)");
        assert_eq!(civil_from_jd(2460999).to_string(), "2025-11-19");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_civil("2017-02-27").unwrap().jd(), jd_from_gregorian(2017, 2, 27));
        assert!(parse_civil("806-03-23J").unwrap().julian);
        assert!(parse_civil("2017-02-29").is_err());
        assert!(parse_civil("1900-02-29J").is_ok());
        assert!(parse_civil("2017/02/27").is_err());
    }

    proptest! {
        #[test]
        fn round_trips(jd in 0i64..4_000_000) {
            prop_assert_eq!(gregorian_from_jd(jd).jd(), jd);
            prop_assert_eq!(julian_from_jd(jd).jd(), jd);
        }
    }
}
