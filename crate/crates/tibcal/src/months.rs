//! Month numbering: true month, intercalation index, leap months and the
//! inverse map from true-month count back to a month label.
//!
//! All traditions reduce to one integer `β`: month `M` of year `Y` is a leap
//! month iff `24(Y - Y0) + 2M ≡ β or β + 1 (mod 65)`. The definition-point
//! assignment in [`dp_month_assign`] recomputes the same labels from the mean
//! solar longitude alone.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{amod, ceil_i64, div_ceil, div_floor, int, is_integer, modulo, rat, Rational};
use crate::traditions::{LeapNumbering, TraditionConfig};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonthLabel {
    pub year: i64,
    pub month: i64,
    pub is_leap: bool,
}

impl MonthLabel {
    pub const fn new(year: i64, month: i64, is_leap: bool) -> Self {
        Self { year, month, is_leap }
    }

    pub const fn regular(year: i64, month: i64) -> Self {
        Self::new(year, month, false)
    }
}

impl FromStr for MonthLabel {
    type Err = Error;

    /// `YYYY-MM`, with a trailing `L` for a leap month.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("expected YYYY-MM or YYYY-MML, got {s:?}"));
        let t = s.trim();
        let (body, is_leap) = match t.strip_suffix(['L', 'l']) {
            Some(b) => (b, true),
            None => (t, false),
        };
        let (y, m) = body.rsplit_once('-').ok_or_else(bad)?;
        let year: i64 = y.parse().map_err(|_| bad())?;
        let month: i64 = m.parse().map_err(|_| bad())?;
        if !(1..=12).contains(&month) {
            return Err(Error::OutOfRange(format!("month {month} not in 1..=12")));
        }
        Ok(MonthLabel { year, month, is_leap })
    }
}

impl fmt::Display for MonthLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{:02}{}", self.year, self.month, if self.is_leap { "L" } else { "" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrueMonth {
    pub count: i64,
    /// Traditional corrected intercalation index, 0..=66.
    pub ix: i64,
    /// `(67 MM + βx) mod 65` before correction.
    pub raw_ix: i64,
}

impl TrueMonth {
    /// `count + ix/65`
    pub fn value(&self) -> Rational {
        int(self.count) + rat(self.ix, 65)
    }
}

fn check_month(m: i64) -> Result<(), Error> {
    if (1..=12).contains(&m) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("month {m} not in 1..=12")))
    }
}

pub fn solar_month_count(cfg: &TraditionConfig, y: i64, m: i64) -> i64 {
    12 * (y - cfg.epoch_year) + m - cfg.epoch_month
}

pub fn is_leap_month(cfg: &TraditionConfig, y: i64, m: i64) -> bool {
    modulo(24 * (y - cfg.epoch_year) + 2 * m - cfg.beta, 65) <= 1
}

fn regular_count(cfg: &TraditionConfig, y: i64, m: i64) -> i64 {
    let c = match cfg.numbering {
        LeapNumbering::FollowsNext => cfg.beta,
        LeapNumbering::FollowsPrevious => cfg.beta + 2,
    };
    div_floor(67 * (12 * (y - cfg.epoch_year) + m) - c, 65)
}

pub fn true_month(cfg: &TraditionConfig, y: i64, m: i64, leap: bool) -> Result<TrueMonth, Error> {
    check_month(m)?;
    if leap && !is_leap_month(cfg, y, m) {
        return Err(Error::NoLeapMonth { year: y, month: m });
    }
    let shift = match (leap, cfg.numbering) {
        (false, _) => 0,
        (true, LeapNumbering::FollowsNext) => -1,
        (true, LeapNumbering::FollowsPrevious) => 1,
    };
    let count = regular_count(cfg, y, m) + shift;
    let t = 67 * solar_month_count(cfg, y, m) + cfg.beta_x;
    let raw_ix = modulo(t, 65);
    let ix = if count - div_floor(t, 65) == 1 { raw_ix + 2 } else { raw_ix };
    Ok(TrueMonth { count, ix, raw_ix })
}

pub fn month_count(cfg: &TraditionConfig, label: MonthLabel) -> Result<i64, Error> {
    true_month(cfg, label.year, label.month, label.is_leap).map(|t| t.count)
}

/// `12(Y - Y0) + M` of the month with count `n`.
fn month_index(cfg: &TraditionConfig, n: i64) -> i64 {
    div_ceil(65 * n + cfg.beta, 67)
}

pub fn month_from_count(cfg: &TraditionConfig, n: i64) -> MonthLabel {
    let x = month_index(cfg, n);
    let is_leap = match cfg.numbering {
        LeapNumbering::FollowsNext => month_index(cfg, n + 1) == x,
        LeapNumbering::FollowsPrevious => month_index(cfg, n - 1) == x,
    };
    MonthLabel { year: div_ceil(x, 12) - 1 + cfg.epoch_year, month: amod(x, 12), is_leap }
}

/// Months of year `y` in calendar order.
pub fn months_of_year(cfg: &TraditionConfig, y: i64) -> Vec<MonthLabel> {
    let mut out = Vec::with_capacity(13);
    for m in 1..=12 {
        let leap = is_leap_month(cfg, y, m);
        if leap && cfg.numbering == LeapNumbering::FollowsNext {
            out.push(MonthLabel::new(y, m, true));
        }
        out.push(MonthLabel::regular(y, m));
        if leap && cfg.numbering == LeapNumbering::FollowsPrevious {
            out.push(MonthLabel::new(y, m, true));
        }
    }
    out
}

/// Count of the first month of year `y`.
pub fn first_month_count(cfg: &TraditionConfig, y: i64) -> i64 {
    let lead = cfg.numbering == LeapNumbering::FollowsNext && is_leap_month(cfg, y, 1);
    regular_count(cfg, y, 1) - i64::from(lead)
}

pub fn is_leap_year(cfg: &TraditionConfig, y: i64) -> bool {
    modulo(24 * y + cfg.gamma_x(), 65) >= 41
}

pub fn leap_month_of_year(cfg: &TraditionConfig, y: i64) -> Option<i64> {
    let m = div_floor(66 - modulo(24 * y + cfg.gamma_x(), 65), 2);
    (m <= 12).then_some(m)
}

pub fn leap_years_in_range(cfg: &TraditionConfig, y1: i64, y2: i64) -> Result<i64, Error> {
    if y1 > y2 {
        return Err(Error::OutOfRange(format!("empty year range {y1}..{y2}")));
    }
    let g = cfg.gamma_x();
    Ok(div_floor(24 * (y2 + 1) + g, 65) - div_floor(24 * y1 + g, 65))
}

/// Mean solar motion per month used with definition points.
fn dp_solar_motion() -> Rational {
    rat(65, 804)
}

/// `s0` moved into `(p0, p0 + 1]`.
pub fn normalized_s0(cfg: &TraditionConfig) -> Rational {
    let p0 = cfg.p0();
    let shift = crate::arith::ceil(&(&cfg.s0 - &p0)) - 1;
    &cfg.s0 - Rational::from_integer(shift)
}

/// `α = 12(s0 - p0)`
pub fn dp_alpha(cfg: &TraditionConfig) -> Rational {
    int(12) * (normalized_s0(cfg) - cfg.p0())
}

/// `β` implied by the definition points.
pub fn dp_beta(cfg: &TraditionConfig) -> i64 {
    let b = ceil_i64(&(int(67) * dp_alpha(cfg)));
    match cfg.numbering {
        LeapNumbering::FollowsNext => b,
        LeapNumbering::FollowsPrevious => b - 2,
    }
}

/// Month label from mean-sun crossings of the definition points.
pub fn dp_month_assign(cfg: &TraditionConfig, n: i64) -> Result<MonthLabel, Error> {
    let alpha = dp_alpha(cfg);
    let s1 = dp_solar_motion();
    let first_point_after = |k: i64| -> Result<i64, Error> {
        let pos = int(12) * &s1 * int(k) + &alpha;
        if is_integer(&pos) {
            return Err(Error::DefinitionPointHit(k));
        }
        Ok(ceil_i64(&pos))
    };
    let here = first_point_after(n)?;
    let passes = first_point_after(n + 1)? > here;
    let x = match (passes, cfg.numbering) {
        (true, _) | (false, LeapNumbering::FollowsNext) => here,
        (false, LeapNumbering::FollowsPrevious) => here - 1,
    };
    Ok(MonthLabel { year: div_ceil(x, 12) - 1 + cfg.epoch_year, month: amod(x, 12), is_leap: !passes })
}
