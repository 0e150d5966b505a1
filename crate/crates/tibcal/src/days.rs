//! Calendar days: each day carries the number of the lunar day ending in it.
//!
//! Lunar days are indexed globally by `t = 30n + d - 1`, `d` in `1..=30`.
//! `J(t)` is the JD of the calendar day in which lunar day `t` ends; a jump
//! of 0 skips a date and a jump of 2 repeats one.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{div_floor, floor, floor_i64, int, modulo};
use crate::astro::true_date;
use crate::months::{first_month_count, month_count, month_from_count, MonthLabel};
use crate::traditions::TraditionConfig;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TibetanDate {
    pub month: MonthLabel,
    pub day: i64,
    /// First of two calendar days with the same date.
    pub leap_day: bool,
}

impl TibetanDate {
    pub const fn new(month: MonthLabel, day: i64, leap_day: bool) -> Self {
        Self { month, day, leap_day }
    }
}

impl fmt::Display for TibetanDate {
    /// `2012-01-05a` marks the first of a repeated pair.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{:02}{}", self.month, self.day, if self.leap_day { "a" } else { "" })
    }
}

impl FromStr for TibetanDate {
    type Err = Error;

    /// `YYYY-MM[L]-DD`; day suffix `a` picks the first of a repeated pair, `b` or none the second.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("expected YYYY-MM[L]-DD[a|b], got {s:?}"));
        let (month, day) = s.trim().rsplit_once('-').ok_or_else(bad)?;
        let (digits, leap_day) = match day.strip_suffix(['a', 'A']) {
            Some(d) => (d, true),
            None => (day.strip_suffix(['b', 'B']).unwrap_or(day), false),
        };
        let day: i64 = digits.parse().map_err(|_| bad())?;
        check_day(day)?;
        Ok(TibetanDate::new(month.parse()?, day, leap_day))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DayStatus {
    Normal,
    Repeated,
    Skipped,
}

impl DayStatus {
    fn from_jump(jump: i64) -> DayStatus {
        match jump {
            0 => DayStatus::Skipped,
            1 => DayStatus::Normal,
            2 => DayStatus::Repeated,
            j => panic!("lunar day spans {j} calendar days"),
        }
    }
}

pub fn lunar_index(n: i64, d: i64) -> i64 {
    30 * n + d - 1
}

/// `(n, d)` of a global lunar-day index.
pub fn lunar_day_of_index(t: i64) -> (i64, i64) {
    (div_floor(t, 30), modulo(t, 30) + 1)
}

/// JD of the calendar day in which lunar day `d` of month `n` ends.
pub fn lunar_day_jd(cfg: &TraditionConfig, n: i64, d: i64) -> i64 {
    floor_i64(&true_date(cfg, d, n))
}

fn index_jd(cfg: &TraditionConfig, t: i64) -> i64 {
    let (n, d) = lunar_day_of_index(t);
    lunar_day_jd(cfg, n, d)
}

pub fn day_status(cfg: &TraditionConfig, n: i64, d: i64) -> DayStatus {
    let t = lunar_index(n, d);
    DayStatus::from_jump(index_jd(cfg, t) - index_jd(cfg, t - 1))
}

fn check_day(d: i64) -> Result<(), Error> {
    if (1..=30).contains(&d) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("day {d} not in 1..=30")))
    }
}

/// JD of a date; a skipped date gives the day its predecessor labels.
pub fn jd_from_tibetan(cfg: &TraditionConfig, date: TibetanDate) -> Result<(i64, DayStatus), Error> {
    check_day(date.day)?;
    let n = month_count(cfg, date.month)?;
    let status = day_status(cfg, n, date.day);
    if date.leap_day && status != DayStatus::Repeated {
        return Err(Error::NotRepeated(date.to_string()));
    }
    let jd = lunar_day_jd(cfg, n, date.day) - i64::from(date.leap_day);
    Ok((jd, status))
}

/// Lunar-day index guess from the mean motion.
fn estimate_index(cfg: &TraditionConfig, jd: i64) -> i64 {
    let t = (int(jd) - &cfg.m0) / &cfg.m2;
    floor(&t).to_i64().expect("index fits i64")
}

/// Smallest lunar-day index `t` with `J(t) >= jd`.
fn index_ending_on_or_after(cfg: &TraditionConfig, jd: i64) -> (i64, i64, i64) {
    let mut t = estimate_index(cfg, jd);
    let mut here = index_jd(cfg, t);
    let mut before = index_jd(cfg, t - 1);
    while here < jd {
        t += 1;
        before = here;
        here = index_jd(cfg, t);
    }
    while before >= jd {
        t -= 1;
        here = before;
        before = index_jd(cfg, t - 1);
    }
    (t, before, here)
}

pub fn tibetan_from_jd(cfg: &TraditionConfig, jd: i64) -> TibetanDate {
    let (t, _, here) = index_ending_on_or_after(cfg, jd);
    let (n, d) = lunar_day_of_index(t);
    TibetanDate::new(month_from_count(cfg, n), d, here > jd)
}

/// One calendar day with everything needed to label it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CalendarDay {
    pub jd: i64,
    pub date: TibetanDate,
    /// True month count.
    pub n: i64,
    pub status: DayStatus,
}

/// Calendar days `first..=last`, each lunar day evaluated once.
pub fn days_in_range(cfg: &TraditionConfig, first: i64, last: i64) -> Vec<CalendarDay> {
    let mut out = Vec::with_capacity((last - first + 1).max(0) as usize);
    if first > last {
        return out;
    }
    let (mut t, mut before, mut here) = index_ending_on_or_after(cfg, first);
    let mut jd = first;
    while jd <= last {
        while here < jd {
            t += 1;
            before = here;
            here = index_jd(cfg, t);
        }
        let (n, d) = lunar_day_of_index(t);
        let status = DayStatus::from_jump(here - before);
        let date = TibetanDate::new(month_from_count(cfg, n), d, here > jd);
        out.push(CalendarDay { jd, date, n, status });
        jd += 1;
    }
    out
}

/// Lunar days of month `n` with their status and the JD each ends in.
pub fn month_lunar_days(cfg: &TraditionConfig, n: i64) -> Vec<(i64, DayStatus, i64)> {
    let mut prev = lunar_day_jd(cfg, n - 1, 30);
    (1..=30)
        .map(|d| {
            let jd = lunar_day_jd(cfg, n, d);
            let s = DayStatus::from_jump(jd - prev);
            prev = jd;
            (d, s, jd)
        })
        .collect()
}

/// Signed list of repeated (positive) and skipped (negative) dates of a month.
pub fn irregular_days(cfg: &TraditionConfig, month: MonthLabel) -> Result<Vec<i64>, Error> {
    let n = month_count(cfg, month)?;
    Ok(month_lunar_days(cfg, n)
        .into_iter()
        .filter_map(|(d, s, _)| match s {
            DayStatus::Normal => None,
            DayStatus::Repeated => Some(d),
            DayStatus::Skipped => Some(-d),
        })
        .collect())
}

pub fn month_bounds(cfg: &TraditionConfig, month: MonthLabel) -> Result<(i64, i64), Error> {
    let n = month_count(cfg, month)?;
    Ok((lunar_day_jd(cfg, n - 1, 30) + 1, lunar_day_jd(cfg, n, 30)))
}

/// JD of the first day of year `y`.
pub fn losar(cfg: &TraditionConfig, y: i64) -> i64 {
    lunar_day_jd(cfg, first_month_count(cfg, y) - 1, 30) + 1
}

pub fn year_length(cfg: &TraditionConfig, y: i64) -> i64 {
    losar(cfg, y + 1) - losar(cfg, y)
}

/// Day on which a fixed-date observance falls; leap months are passed over.
pub fn holiday_day(cfg: &TraditionConfig, y: i64, m: i64, d: i64) -> Result<i64, Error> {
    if (m, d) == (1, 1) {
        return Ok(losar(cfg, y));
    }
    let (jd, status) = jd_from_tibetan(cfg, TibetanDate::new(MonthLabel::regular(y, m), d, false))?;
    Ok(match status {
        DayStatus::Repeated => jd - 1,
        DayStatus::Normal | DayStatus::Skipped => jd,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Weekday {
    pub number: i64,
    pub english: &'static str,
    pub tibetan: &'static str,
    pub planet: &'static str,
}

const WEEKDAYS: [(&str, &str, &str); 7] = [
    ("Saturday", "spen ma", "Saturn"),
    ("Sunday", "nyi ma", "Sun"),
    ("Monday", "zla ba", "Moon"),
    ("Tuesday", "mig dmar", "Mars"),
    ("Wednesday", "lhag pa", "Mercury"),
    ("Thursday", "phur bu", "Jupiter"),
    ("Friday", "pa sangs", "Venus"),
];

pub fn day_of_week(jd: i64) -> i64 {
    modulo(jd + 2, 7)
}

/// Weekday of `jd`; the Tibetan name honours the tradition's name offset.
pub fn weekday(cfg: &TraditionConfig, jd: i64) -> Weekday {
    let number = day_of_week(jd);
    let (english, _, planet) = WEEKDAYS[number as usize];
    let tibetan = WEEKDAYS[modulo(number + cfg.weekday_name_offset, 7) as usize].1;
    Weekday { number, english, tibetan, planet }
}

pub fn weekday_name(number: i64) -> &'static str {
    WEEKDAYS[modulo(number, 7) as usize].0
}
