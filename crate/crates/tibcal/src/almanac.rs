//! Daily almanac entries, monthly headers and days marked by solar longitude.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{ceil, floor, floor_i64, frac, int, rat, rmod, MixedRadix, Rational};
use crate::astro::{anomaly_moon, karana_config, karana_month_offset, mean_date, mean_date_at, mean_sun, true_date, true_sun};
use crate::civil::{civil_from_jd, CivilDate};
use crate::days::{days_in_range, losar, lunar_day_of_index, lunar_index, tibetan_from_jd, weekday, CalendarDay, DayStatus, TibetanDate, Weekday};
use crate::months::{month_count, month_from_count, months_of_year, true_month, MonthLabel, TrueMonth};
use crate::names::{elemental_yoga_name, karana_name, mansions, yogas, KaranaKind, WEEKDAY_ELEMENTS};
use crate::traditions::TraditionConfig;
use crate::Error;

/// Longitudes marked in addition to the three 30-degree series, in degrees.
pub const DEFAULT_EXTRA_LONGITUDES: [i64; 4] = [66, 132, 147, 235];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Karana {
    pub half_day: i64,
    pub kind: KaranaKind,
    /// 1..=7 for changing karanas, 1..=4 for fixed ones.
    pub number: i64,
    pub name: &'static str,
}

pub fn karana_of_halfday(day: i64, half: i64) -> Result<Karana, Error> {
    if !(1..=30).contains(&day) || !(1..=2).contains(&half) {
        return Err(Error::OutOfRange(format!("half-day {half} of lunar day {day}")));
    }
    let h = 2 * day - 2 + half;
    let fixed = [1, 58, 59, 60];
    Ok(match fixed.iter().position(|&f| f == h) {
        Some(i) => Karana { half_day: h, kind: KaranaKind::Fixed, number: i as i64 + 1, name: karana_name(KaranaKind::Fixed, h) },
        None => {
            let number = crate::arith::amod(h - 1, 7);
            Karana { half_day: h, kind: KaranaKind::Changing, number, name: karana_name(KaranaKind::Changing, number) }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmanacDay {
    pub jd: i64,
    pub civil: CivilDate,
    pub date: TibetanDate,
    pub status: DayStatus,
    pub weekday: Weekday,
    /// Weekday plus fraction at the end of the lunar day.
    pub true_weekday: Rational,
    pub moon_lunar_day: Rational,
    pub moon_day_start: Rational,
    pub mansion: usize,
    pub true_sun: Rational,
    pub yoga_longitude: Rational,
    pub yoga: usize,
    pub karana: Karana,
    /// Absent on the first of a repeated pair.
    pub mean_sun: Option<Rational>,
    pub karana_moon: Rational,
    pub elemental_yoga: &'static str,
}

impl AlmanacDay {
    pub fn mansion_name(&self) -> &'static str {
        &mansions()[self.mansion].sanskrit
    }

    pub fn yoga_name(&self) -> &'static str {
        &yogas()[self.yoga]
    }

    /// `x;60,0` on the first of a repeated pair.
    pub fn true_weekday_text(&self) -> String {
        if self.date.leap_day {
            format!("{};60,0", self.weekday.number)
        } else {
            MixedRadix::from_rational(&self.true_weekday, &[60, 60]).to_string()
        }
    }
}

/// Longitude in mansions, truncated to three terms.
pub fn mansion_text(x: &Rational) -> String {
    MixedRadix::from_rational(&(int(27) * frac(x)), &[60, 60]).to_string()
}

/// Longitude in signs, degrees and minutes.
pub fn signs_text(x: &Rational) -> String {
    MixedRadix::from_rational(&(int(12) * frac(x)), &[30, 60]).to_string()
}

fn moon_day_start(cfg: &TraditionConfig, n: i64, d: i64, first_of_pair: bool) -> (Rational, Rational) {
    let moon_lunar = frac(&(true_sun(cfg, d, n) + rat(d, 30)));
    let back = if first_of_pair { rat(1, 27) } else { frac(&true_date(cfg, d, n)) / int(27) };
    let start = frac(&(&moon_lunar - back));
    (moon_lunar, start)
}

fn karana_moon(jd: i64) -> Rational {
    let k = karana_config();
    let date = tibetan_from_jd(k, jd);
    let n = month_count(k, date.month).expect("month exists");
    moon_day_start(k, n, date.day, date.leap_day).1
}

fn record(cfg: &TraditionConfig, day: &CalendarDay) -> AlmanacDay {
    let (n, d) = (day.n, day.date.day);
    let first_of_pair = day.date.leap_day;
    let td = true_date(cfg, d, n);
    let (prev_n, prev_d) = lunar_day_of_index(lunar_index(n, d) - 1);
    let start = true_date(cfg, prev_d, prev_n);
    let middle = (&start + &td) / int(2);
    let half = if int(day.jd) < middle { 1 } else { 2 };
    let (moon_lunar_day, moon_day_start) = moon_day_start(cfg, n, d, first_of_pair);
    let sun = true_sun(cfg, d, n);
    let yoga_longitude = frac(&(&moon_day_start + &sun));
    let mansion = floor(&(int(27) * &moon_day_start)).to_usize().expect("mansion index");
    let wd = weekday(cfg, day.jd);
    AlmanacDay {
        jd: day.jd,
        civil: civil_from_jd(day.jd),
        date: day.date,
        status: day.status,
        weekday: wd,
        true_weekday: rmod(&(td + int(2)), &int(7)),
        moon_lunar_day,
        mansion,
        yoga: floor(&(int(27) * &yoga_longitude)).to_usize().expect("yoga index"),
        moon_day_start,
        true_sun: sun,
        yoga_longitude,
        karana: karana_of_halfday(d, half).expect("valid half-day"),
        mean_sun: (!first_of_pair).then(|| frac(&mean_sun(cfg, d, n))),
        karana_moon: karana_moon(day.jd),
        elemental_yoga: elemental_yoga_name(WEEKDAY_ELEMENTS[wd.number as usize], mansions()[mansion].element),
    }
}

pub fn day_record(cfg: &TraditionConfig, jd: i64) -> AlmanacDay {
    record(cfg, &days_in_range(cfg, jd, jd)[0])
}

pub fn day_record_for_date(cfg: &TraditionConfig, date: TibetanDate) -> Result<AlmanacDay, Error> {
    let (jd, status) = crate::days::jd_from_tibetan(cfg, date)?;
    if status == DayStatus::Skipped {
        return Err(Error::OutOfRange(format!("{date} is skipped")));
    }
    Ok(day_record(cfg, jd))
}

pub fn records_in_range(cfg: &TraditionConfig, first: i64, last: i64) -> Vec<AlmanacDay> {
    days_in_range(cfg, first, last).iter().map(|d| record(cfg, d)).collect()
}

pub fn month_records(cfg: &TraditionConfig, month: MonthLabel) -> Result<Vec<AlmanacDay>, Error> {
    let (first, last) = crate::days::month_bounds(cfg, month)?;
    Ok(records_in_range(cfg, first, last))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonthValues {
    pub month: MonthLabel,
    pub count: i64,
    pub true_month: TrueMonth,
    pub mean_date: Rational,
    pub mean_sun: Rational,
    pub anomaly: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonthHeader {
    pub host: MonthValues,
    pub karana: MonthValues,
}

fn month_values(cfg: &TraditionConfig, n: i64) -> MonthValues {
    let month = month_from_count(cfg, n);
    MonthValues {
        month,
        count: n,
        true_month: true_month(cfg, month.year, month.month, month.is_leap).expect("label from count"),
        mean_date: mean_date(cfg, 0, n),
        mean_sun: frac(&mean_sun(cfg, 0, n)),
        anomaly: anomaly_moon(cfg, 0, n),
    }
}

pub fn month_header(cfg: &TraditionConfig, month: MonthLabel) -> Result<MonthHeader, Error> {
    let n = month_count(cfg, month)?;
    let k = karana_config();
    Ok(MonthHeader { host: month_values(cfg, n), karana: month_values(k, n + karana_month_offset(cfg)) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialKind {
    SignEntry,
    Sgang,
    Dbugs,
    Extra,
    TrueSunZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialDay {
    pub kind: SpecialKind,
    /// Longitude in revolutions, in `[0, 1)`.
    pub longitude: Rational,
    /// Lunar days since the epoch.
    pub lunar_date: Rational,
    /// Mean date of the instant; the true date for [`SpecialKind::TrueSunZero`].
    pub instant: Rational,
    pub jd: i64,
}

/// `s0` moved into `(-1/2, 1/2]`.
fn linear_s0(cfg: &TraditionConfig) -> Rational {
    &cfg.s0 - Rational::from_integer(ceil(&(&cfg.s0 - rat(1, 2))))
}

/// Lunar date and mean date at which the linear mean sun reaches `l`.
pub fn mean_sun_instant(cfg: &TraditionConfig, l: &Rational) -> (Rational, Rational) {
    let d = (l - linear_s0(cfg)) / &cfg.s2;
    let instant = mean_date_at(cfg, &d, 0);
    (d, instant)
}

fn event(cfg: &TraditionConfig, kind: SpecialKind, l: Rational) -> SpecialDay {
    let (lunar_date, instant) = mean_sun_instant(cfg, &l);
    SpecialDay { kind, longitude: frac(&l), lunar_date, jd: floor_i64(&instant), instant }
}

/// Day when the true sun passes 0: the calendar day of the first lunar day
/// ending with a smaller true longitude than its predecessor.
pub fn true_sun_zero(cfg: &TraditionConfig, y: i64) -> Option<SpecialDay> {
    let (start, end) = (losar(cfg, y), losar(cfg, y + 1));
    let mut t = lunar_index(crate::months::first_month_count(cfg, y), 1) - 1;
    let (mut n, mut d) = lunar_day_of_index(t);
    let mut prev = true_sun(cfg, d, n);
    loop {
        t += 1;
        (n, d) = lunar_day_of_index(t);
        let td = true_date(cfg, d, n);
        let jd = floor_i64(&td);
        if jd >= end {
            return None;
        }
        let sun = true_sun(cfg, d, n);
        if sun < prev && jd >= start {
            return Some(SpecialDay { kind: SpecialKind::TrueSunZero, longitude: sun, lunar_date: int(t + 1), instant: td, jd });
        }
        prev = sun;
    }
}

/// Days of year `y` marked by the mean sun, by the closed form, plus the true-sun zero day.
pub fn special_days(cfg: &TraditionConfig, y: i64, extra_degrees: &[i64]) -> Vec<SpecialDay> {
    let (start, end) = (losar(cfg, y), losar(cfg, y + 1));
    let base = int(y - cfg.epoch_year);
    let mut out = Vec::new();
    for k in -3..=14 {
        let sign = &base + rat(k, 12);
        out.push(event(cfg, SpecialKind::SignEntry, sign.clone()));
        out.push(event(cfg, SpecialKind::Sgang, &sign + rat(8, 360)));
        out.push(event(cfg, SpecialKind::Dbugs, &sign - rat(7, 360)));
    }
    for j in -1..=1 {
        for &deg in extra_degrees {
            out.push(event(cfg, SpecialKind::Extra, &base + int(j) + rat(deg, 360)));
        }
    }
    out.retain(|e| (start..end).contains(&e.jd));
    out.extend(true_sun_zero(cfg, y));
    out.sort_by(|a, b| a.instant.cmp(&b.instant).then(a.kind.cmp(&b.kind)));
    out.dedup();
    out
}

/// Sign entries, sgang and dbugs from the intercalation index of each month of `y`.
pub fn traditional_special_days(cfg: &TraditionConfig, y: i64) -> Vec<SpecialDay> {
    let sgang = int(8) + rat(16, 65);
    let dbugs = int(7) + rat(14, 65);
    let mut out = Vec::new();
    for label in months_of_year(cfg, y) {
        let tm = true_month(cfg, label.year, label.month, label.is_leap).expect("month of year");
        let x = int(30) * tm.value();
        for (kind, lunar_date) in [(SpecialKind::SignEntry, x.clone()), (SpecialKind::Sgang, &x + &sgang), (SpecialKind::Dbugs, &x - &dbugs)] {
            let instant = mean_date_at(cfg, &lunar_date, 0);
            let longitude = frac(&(&cfg.s0 + &lunar_date * &cfg.s2));
            out.push(SpecialDay { kind, longitude, jd: floor_i64(&instant), lunar_date, instant });
        }
    }
    out
}

/// Calendar day on which the mean sun reaches 250 degrees, early in Gregorian year `y`.
pub fn bhutan_winter_solstice(cfg: &TraditionConfig, y: i64) -> i64 {
    let l = int(y - 1 - cfg.epoch_year) + rat(250, 360);
    floor_i64(&mean_sun_instant(cfg, &l).1)
}
