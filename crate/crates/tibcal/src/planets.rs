//! Planetary longitudes at the end of a calendar day, and Rahu.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{ceil_i64, frac, int, modulo, rat, Rational};
use crate::astro::EquationTable;
use crate::days::{day_of_week, jd_from_tibetan, TibetanDate};
use crate::months::month_count;
use crate::traditions::TraditionConfig;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Planet {
    Mercury,
    Venus,
    Mars,
    Jupiter,
    Saturn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlanetClass {
    Inner,
    Outer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanetSpec {
    pub planet: Planet,
    pub period: i64,
    pub multiplier: i64,
    /// Last display radix of the heliocentric longitude.
    pub radix: u64,
    pub birth_sign: (i64, i64),
    pub class: PlanetClass,
    pub equ: EquationTable,
    pub corr: EquationTable,
}

impl Planet {
    pub const ALL: [Planet; 5] = [Planet::Mercury, Planet::Venus, Planet::Mars, Planet::Jupiter, Planet::Saturn];

    pub const fn name(self) -> &'static str {
        match self {
            Planet::Mercury => "mercury",
            Planet::Venus => "venus",
            Planet::Mars => "mars",
            Planet::Jupiter => "jupiter",
            Planet::Saturn => "saturn",
        }
    }

    pub const fn spec(self) -> PlanetSpec {
        const fn equ(knots: &'static [i64]) -> EquationTable {
            EquationTable::Quarter { knots, period: 12 }
        }
        const fn corr(knots: &'static [i64]) -> EquationTable {
            EquationTable::Half { knots, period: 27 }
        }
        let (period, multiplier, radix, birth_sign, class, e, c) = match self {
            Planet::Mercury => (
                8797,
                100,
                8797,
                (11, 18),
                PlanetClass::Inner,
                equ(&[0, 10, 17, 20]),
                corr(&[0, 16, 32, 47, 61, 74, 85, 92, 97, 97, 93, 82, 62, 34]),
            ),
            Planet::Venus => (
                2247,
                10,
                749,
                (2, 9),
                PlanetClass::Inner,
                equ(&[0, 5, 9, 10]),
                corr(&[0, 25, 50, 75, 99, 123, 145, 167, 185, 200, 208, 202, 172, 83]),
            ),
            Planet::Mars => (
                687,
                1,
                229,
                (19, 54),
                PlanetClass::Outer,
                equ(&[0, 25, 43, 50]),
                corr(&[0, 24, 47, 70, 93, 114, 135, 153, 168, 179, 182, 171, 133, 53]),
            ),
            Planet::Jupiter => (
                4332,
                1,
                361,
                (4, 9),
                PlanetClass::Outer,
                equ(&[0, 11, 20, 23]),
                corr(&[0, 10, 20, 29, 37, 43, 49, 51, 52, 49, 43, 34, 23, 7]),
            ),
            Planet::Saturn => (
                10766,
                1,
                5383,
                (2, 3),
                PlanetClass::Outer,
                equ(&[0, 22, 37, 43]),
                corr(&[0, 6, 11, 16, 20, 24, 26, 28, 28, 26, 22, 17, 11, 3]),
            ),
        };
        PlanetSpec { planet: self, period, multiplier, radix, birth_sign, class, equ: e, corr: c }
    }
}

impl fmt::Display for Planet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Planet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Planet::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown planet {s:?}")))
    }
}

/// Epoch constants for the planetary computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanetEpoch {
    pub jd: i64,
    /// Particular-day values, Mercury to Saturn.
    pub pd0: [i64; 5],
    pub s0: Rational,
    pub s1: Rational,
    /// Fraction of the solar day left at the end of the mean lunar day at the epoch.
    pub gd0: Rational,
    /// Weekday number of the epoch day.
    pub wd0: i64,
}

impl Default for PlanetEpoch {
    fn default() -> Self {
        Self {
            jd: 2424972,
            pd0: [4639, 301, 157, 3964, 6286],
            s0: int(1) - rat(458772, 6714405),
            s1: rat(18382, 6714405),
            gd0: rat(199, 5656),
            wd0: 6,
        }
    }
}

impl PlanetEpoch {
    pub fn general_day(&self, jd: i64) -> i64 {
        jd - self.jd
    }

    /// General day from the lunar-day count, corrected by the weekday.
    /// `n` is the true-month count from the planetary epoch's month.
    pub fn traditional_general_day(&self, n: i64, day: i64, weekday: i64) -> i64 {
        let ld = 30 * n + day;
        let provisional = ceil_i64(&(rat(11135, 11312) * int(ld) - &self.gd0));
        match modulo(weekday - provisional - self.wd0, 7) {
            0 => provisional,
            1 => provisional + 1,
            6 => provisional - 1,
            off => panic!("general day off by {off} days"),
        }
    }

    pub fn particular_day(&self, planet: Planet, general_day: i64) -> i64 {
        let s = planet.spec();
        modulo(s.multiplier * general_day + self.pd0[planet as usize], s.period)
    }

    pub fn mean_solar_long(&self, general_day: i64) -> Rational {
        frac(&(&self.s1 * int(general_day) + &self.s0))
    }
}

pub fn general_day(jd: i64) -> i64 {
    PlanetEpoch::default().general_day(jd)
}

pub fn particular_day(planet: Planet, general_day: i64) -> i64 {
    PlanetEpoch::default().particular_day(planet, general_day)
}

/// Every intermediate of the longitude computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanetPosition {
    pub planet: Planet,
    pub general_day: i64,
    pub particular_day: i64,
    pub mean_helio: Rational,
    pub mean_solar: Rational,
    pub mean_slow: Rational,
    pub step: Rational,
    pub anomaly: Rational,
    pub equ: Rational,
    pub true_slow: Rational,
    pub diff: Rational,
    pub corr: Rational,
    pub fast: Rational,
}

pub fn planet_position_with(epoch: &PlanetEpoch, planet: Planet, jd: i64) -> PlanetPosition {
    let spec = planet.spec();
    let gd = epoch.general_day(jd);
    let pd = epoch.particular_day(planet, gd);
    let mean_helio = rat(pd, spec.period);
    let mean_solar = epoch.mean_solar_long(gd);
    let (mean_slow, step) = match spec.class {
        PlanetClass::Inner => (mean_solar.clone(), mean_helio.clone()),
        PlanetClass::Outer => (mean_helio.clone(), mean_solar.clone()),
    };
    let anomaly = frac(&(&mean_slow - rat(spec.birth_sign.0, spec.birth_sign.1)));
    let equ = spec.equ.eval(&(int(12) * &anomaly));
    let true_slow = frac(&(&mean_slow - &equ / int(1620)));
    let diff = frac(&(&step - &true_slow));
    let corr = spec.corr.eval(&(int(27) * &diff));
    let fast = frac(&(&true_slow + &corr / int(1620)));
    PlanetPosition {
        planet,
        general_day: gd,
        particular_day: pd,
        mean_helio,
        mean_solar,
        mean_slow,
        step,
        anomaly,
        equ,
        true_slow,
        diff,
        corr,
        fast,
    }
}

pub fn planet_position(planet: Planet, jd: i64) -> PlanetPosition {
    planet_position_with(&PlanetEpoch::default(), planet, jd)
}

pub fn fast_longitude(planet: Planet, jd: i64) -> Rational {
    planet_position(planet, jd).fast
}

/// Head and tail of Rahu after `x` lunar days from head longitude 0.
pub fn rahu_at(x: i64) -> (Rational, Rational) {
    let head = frac(&rat(-x, 6900));
    let tail = frac(&(&head + rat(1, 2)));
    (head, tail)
}

pub fn rahu_longitudes(cfg: &TraditionConfig, date: TibetanDate) -> Result<(Rational, Rational), Error> {
    let rd0 = cfg.rahu_rd0.ok_or_else(|| Error::MissingRahuEpoch(cfg.label()))?;
    let n = month_count(cfg, date.month)?;
    Ok(rahu_at(30 * (n + rd0) + date.day))
}

/// General day by the lunar-day route, for a config whose epoch is the planetary one.
pub fn traditional_general_day(cfg: &TraditionConfig, date: TibetanDate) -> Result<i64, Error> {
    let n = month_count(cfg, date.month)?;
    let (jd, _) = jd_from_tibetan(cfg, date)?;
    Ok(PlanetEpoch::default().traditional_general_day(n, date.day, day_of_week(jd)))
}
