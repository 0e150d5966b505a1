//! Mean and true motions of sun and moon.
//!
//! Quantities are evaluated at the end of lunar day `d` of true month `n`;
//! `d` may be fractional.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::arith::{floor, floor_frac, frac, int, rat, Rational};
use crate::traditions::{get_tradition, Tradition, TraditionConfig};

/// Piecewise-linear periodic table built from its first knots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationTable {
    /// Knots `0..=P/4`; `tab(P/2 - i) = tab(i)`, `tab(P/2 + i) = -tab(i)`.
    Quarter { knots: &'static [i64], period: i64 },
    /// Knots `0..=(P-1)/2`; `tab(P - i) = -tab(i)`.
    Half { knots: &'static [i64], period: i64 },
}

pub const MOON_TABLE: EquationTable = EquationTable::Quarter { knots: &[0, 5, 10, 15, 19, 22, 24, 25], period: 28 };
pub const SUN_TABLE: EquationTable = EquationTable::Quarter { knots: &[0, 6, 10, 11], period: 12 };

impl EquationTable {
    pub const fn period(&self) -> i64 {
        match self {
            EquationTable::Quarter { period, .. } | EquationTable::Half { period, .. } => *period,
        }
    }

    /// Value at an integer argument.
    pub fn knot(&self, i: i64) -> i64 {
        let p = self.period();
        let i = i.rem_euclid(p);
        match *self {
            EquationTable::Quarter { knots, .. } => {
                let (q, h) = (p / 4, p / 2);
                if i <= q {
                    knots[i as usize]
                } else if i <= h {
                    knots[(h - i) as usize]
                } else {
                    -self.knot(i - h)
                }
            }
            EquationTable::Half { knots, .. } => {
                if (i as usize) < knots.len() {
                    knots[i as usize]
                } else {
                    -knots[(p - i) as usize]
                }
            }
        }
    }

    /// Linear interpolation between knots.
    pub fn eval(&self, x: &Rational) -> Rational {
        let (i, f) = floor_frac(x);
        let i = (i % self.period()).to_i64().expect("reduced argument");
        let lo = self.knot(i);
        let hi = self.knot(i + 1);
        int(lo) + f * int(hi - lo)
    }
}

pub fn mean_date_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    int(n) * &cfg.m1 + d * &cfg.m2 + &cfg.m0
}

pub fn mean_date(cfg: &TraditionConfig, d: i64, n: i64) -> Rational {
    mean_date_at(cfg, &int(d), n)
}

/// Linear mean solar longitude; reduce with [`frac`] for angles.
pub fn mean_sun_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    int(n) * &cfg.s1 + d * &cfg.s2 + &cfg.s0
}

pub fn mean_sun(cfg: &TraditionConfig, d: i64, n: i64) -> Rational {
    mean_sun_at(cfg, &int(d), n)
}

pub fn anomaly_moon_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    frac(&(int(n) * &cfg.a1 + d * &cfg.a2 + &cfg.a0))
}

pub fn anomaly_moon(cfg: &TraditionConfig, d: i64, n: i64) -> Rational {
    anomaly_moon_at(cfg, &int(d), n)
}

pub fn moon_equ(anomaly: &Rational) -> Rational {
    MOON_TABLE.eval(&(int(28) * frac(anomaly)))
}

pub fn sun_equ(mean_sun: &Rational) -> Rational {
    SUN_TABLE.eval(&(int(12) * frac(&(mean_sun - rat(1, 4)))))
}

pub(crate) fn karana_config() -> &'static TraditionConfig {
    static KARANA: OnceLock<TraditionConfig> = OnceLock::new();
    KARANA.get_or_init(|| get_tradition(Tradition::Karana, None).expect("built-in"))
}

/// Karana month count of the lunar month with count `n` in `cfg`.
pub fn karana_month_offset(cfg: &TraditionConfig) -> i64 {
    let k = karana_config();
    let months = (&cfg.m0 - &k.m0) / &k.m1 + rat(1, 2);
    floor(&months).to_i64().expect("month offset")
}

/// Mean sun entering the solar equation of `true_date`.
fn equation_sun(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    if cfg.karana_sun_in_true_date {
        mean_sun_at(karana_config(), d, n + karana_month_offset(cfg))
    } else {
        mean_sun_at(cfg, d, n)
    }
}

/// Mean date corrected for the lunar anomaly only.
pub fn semi_true_date_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    mean_date_at(cfg, d, n) + moon_equ(&anomaly_moon_at(cfg, d, n)) / int(60)
}

pub fn true_date_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    semi_true_date_at(cfg, d, n) - sun_equ(&equation_sun(cfg, d, n)) / int(60)
}

pub fn true_date(cfg: &TraditionConfig, d: i64, n: i64) -> Rational {
    true_date_at(cfg, &int(d), n)
}

pub fn true_sun_at(cfg: &TraditionConfig, d: &Rational, n: i64) -> Rational {
    let ms = mean_sun_at(cfg, d, n);
    frac(&(&ms - sun_equ(&ms) / int(1620)))
}

pub fn true_sun(cfg: &TraditionConfig, d: i64, n: i64) -> Rational {
    true_sun_at(cfg, &int(d), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traditions::A2Variant;
    use proptest::prelude::*;

    fn phugpa(e: i64) -> TraditionConfig {
        get_tradition(Tradition::Phugpa, Some(e)).unwrap()
    }

    #[test]
    fn mean_values_at_epoch() {
        assert_eq!(mean_date(&phugpa(806), 0, 0), int(2015501) + rat(4783, 5656));
        assert_eq!(mean_date(&phugpa(1927), 0, 0), int(2424972) + rat(5457, 5656));
        let p = phugpa(1987);
        assert_eq!(mean_date(&p, 30, 0), mean_date(&p, 0, 1));
        assert_eq!(mean_sun(&p, 0, 0), int(0));
        assert_eq!(mean_sun(&phugpa(806), 0, 0), rat(743, 804));
        assert_eq!(mean_sun(&p, 30, 7), mean_sun(&p, 0, 8));
        assert_eq!(anomaly_moon(&phugpa(806), 0, 0), rat(475, 3528));
        assert_eq!(anomaly_moon(&p, 0, 0), rat(38, 49));
        let exact = p.clone().with_a2(A2Variant::Exact);
        assert_eq!(anomaly_moon(&exact, 30, 5), anomaly_moon(&exact, 0, 6));
        assert_ne!(anomaly_moon(&p, 30, 5), anomaly_moon(&p, 0, 6));
    }

    #[test]
    fn table_knots() {
        assert_eq!(moon_equ(&int(0)), int(0));
        assert_eq!(moon_equ(&rat(7, 28)), int(25));
        assert_eq!(moon_equ(&rat(21, 28)), int(-25));
        assert_eq!(sun_equ(&rat(1, 4)), int(0));
        assert_eq!(SUN_TABLE.eval(&int(3)), int(11));
        assert_eq!(SUN_TABLE.eval(&int(9)), int(-11));
        let knots: Vec<i64> = (0..12).map(|i| SUN_TABLE.knot(i)).collect();
        assert_eq!(knots, [0, 6, 10, 11, 10, 6, 0, -6, -10, -11, -10, -6]);
    }

    #[test]
    fn true_date_at_e806_epoch() {
        // anomaly 475/3528: argument 28*475/3528 = 475/126 = 3 + 97/126,
        // moon_tab = 15 + 4 * 97/126 = 1139/63.
        // mean sun 743/804: argument 12*(743/804 - 1/4) = 542/67 = 8 + 6/67,
        // sun_tab = -10 + 6/67 * -1 = -676/67.
        let want = int(2015501) + rat(4783, 5656) + rat(1139, 63) / int(60) + rat(676, 67) / int(60);
        assert_eq!(moon_equ(&rat(475, 3528)), rat(1139, 63));
        assert_eq!(sun_equ(&rat(743, 804)), rat(-676, 67));
        assert_eq!(true_date(&phugpa(806), 0, 0), want);
    }

    #[test]
    fn true_sun_examples() {
        assert_eq!(true_sun(&phugpa(1987), 0, 0), rat(11, 1620));
        let mut c = phugpa(1987);
        c.s0 = rat(1, 4);
        assert_eq!(true_sun(&c, 0, 0), rat(1, 4));
    }

    #[test]
    fn lunar_day_lengths_bounded() {
        let p = phugpa(1987);
        let m2 = p.m2.clone();
        let bound = rat(87, 1000);
        let mut prev = true_date(&p, 30, 299);
        for n in 300..320 {
            for d in 1..=30 {
                let t = true_date(&p, d, n);
                let step = &t - &prev;
                assert!(step > &m2 - &bound && step < &m2 + &bound, "n={n} d={d}");
                prev = t;
            }
        }
    }

    #[test]
    fn month_lengths_bounded() {
        let p = phugpa(1987);
        let lo = rat(29263, 1000);
        let hi = rat(29798, 1000);
        for n in 0..65 * 13 {
            let len = true_date(&p, 30, n + 1) - true_date(&p, 30, n);
            assert!(len > lo && len < hi, "n={n}");
        }
    }

    #[test]
    fn karana_sun_variant_shifts_true_date() {
        let mut t = get_tradition(Tradition::Tsurphu, None).unwrap();
        let plain = true_date(&t, 13, 2000);
        t.karana_sun_in_true_date = true;
        assert_ne!(true_date(&t, 13, 2000), plain);
    }

    proptest! {
        #[test]
        fn quarter_tables_antisymmetric(num in 0i64..100_000, den in 1i64..1000) {
            let x = rat(num, den);
            for (table, half) in [(MOON_TABLE, 14), (SUN_TABLE, 6)] {
                prop_assert_eq!(table.eval(&(&x + int(half))), -table.eval(&x));
                prop_assert_eq!(table.eval(&(int(half) - &x + int(2 * half))), table.eval(&x));
            }
        }

        #[test]
        fn mean_date_linear(n in -30_000i64..30_000, d in 0i64..=30) {
            for t in Tradition::BUILT_IN {
                let c = get_tradition(t, None).unwrap();
                prop_assert_eq!(mean_date(&c, d, n), mean_date(&c, 0, 0) + int(30 * n + d) * &c.m2);
            }
        }
    }
}
