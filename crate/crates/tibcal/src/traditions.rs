//! Tradition registry: epoch constants, mean motions and leap-month rules.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{div_ceil, frac, int, modulo, parse_rational, rat, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tradition {
    Phugpa,
    Tsurphu,
    Mongolia,
    Bhutan,
    Karana,
    Custom,
}

impl Tradition {
    pub const BUILT_IN: [Tradition; 5] =
        [Tradition::Phugpa, Tradition::Tsurphu, Tradition::Mongolia, Tradition::Bhutan, Tradition::Karana];

    pub const fn name(self) -> &'static str {
        match self {
            Tradition::Phugpa => "phugpa",
            Tradition::Tsurphu => "tsurphu",
            Tradition::Mongolia => "mongolia",
            Tradition::Bhutan => "bhutan",
            Tradition::Karana => "karana",
            Tradition::Custom => "custom",
        }
    }

    /// Documented epochs, latest last.
    pub const fn epochs(self) -> &'static [i64] {
        match self {
            Tradition::Phugpa => &[806, 1927, 1987],
            Tradition::Tsurphu => &[1732, 1852],
            Tradition::Mongolia => &[1747],
            Tradition::Bhutan => &[1754],
            Tradition::Karana => &[806],
            Tradition::Custom => &[],
        }
    }
}

impl fmt::Display for Tradition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tradition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "phugpa" => Ok(Tradition::Phugpa),
            "tsurphu" => Ok(Tradition::Tsurphu),
            "mongolia" | "mongolian" => Ok(Tradition::Mongolia),
            "bhutan" | "bhutanese" => Ok(Tradition::Bhutan),
            "karana" => Ok(Tradition::Karana),
            other => Err(Error::UnknownTradition(other.to_string())),
        }
    }
}

/// Which regular month a leap month shares its number with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeapNumbering {
    FollowsNext,
    FollowsPrevious,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum A2Variant {
    /// `a2 = 1/28`
    Standard,
    /// `a2 = (1 + a1)/30`
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraditionConfig {
    pub tradition: Tradition,
    pub epoch_year: i64,
    pub epoch_month: i64,
    pub m0: Rational,
    pub m1: Rational,
    pub m2: Rational,
    pub s0: Rational,
    pub s1: Rational,
    pub s2: Rational,
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub beta_x: i64,
    pub beta: i64,
    /// Corrected intercalation indices carried by leap months.
    pub leap_window: (i64, i64),
    pub numbering: LeapNumbering,
    pub p1: Rational,
    pub rahu_rd0: Option<i64>,
    pub weekday_name_offset: i64,
    /// Take the solar equation in `true_date` from the karana sun.
    pub karana_sun_in_true_date: bool,
}

const M1: (i64, i64) = (167025, 5656);
const S1: (i64, i64) = (65, 804);
const A1: (i64, i64) = (253, 3528);

fn siddhanta(tradition: Tradition, epoch_year: i64, m0: Rational, s0: Rational, a0: Rational, beta_x: i64, beta: i64) -> TraditionConfig {
    let m1 = rat(M1.0, M1.1);
    let s1 = rat(S1.0, S1.1);
    let (leap_window, numbering, p1, weekday_name_offset) = match tradition {
        Tradition::Phugpa => ((48, 49), LeapNumbering::FollowsNext, rat(77, 90), 0),
        Tradition::Tsurphu => ((0, 1), LeapNumbering::FollowsNext, rat(307, 360), 0),
        Tradition::Mongolia => ((46, 47), LeapNumbering::FollowsNext, rat(463, 540), 0),
        Tradition::Bhutan => ((59, 60), LeapNumbering::FollowsPrevious, rat(103, 120), 1),
        _ => unreachable!("not a siddhanta tradition"),
    };
    TraditionConfig {
        tradition,
        epoch_year,
        epoch_month: 3,
        m2: &m1 / int(30),
        s2: &s1 / int(30),
        m0,
        m1,
        s0,
        s1,
        a0,
        a1: rat(A1.0, A1.1),
        a2: rat(1, 28),
        beta_x,
        beta,
        leap_window,
        numbering,
        p1,
        rahu_rd0: None,
        weekday_name_offset,
        karana_sun_in_true_date: false,
    }
}

fn karana() -> TraditionConfig {
    let m1 = rat(10631, 360);
    let s1 = rat(1277, 15795);
    TraditionConfig {
        tradition: Tradition::Karana,
        epoch_year: 806,
        epoch_month: 3,
        m2: &m1 / int(30),
        s2: &s1 / int(30),
        m0: int(2015531) + rat(1, 2),
        m1,
        s0: rat(809, 810),
        s1,
        a0: rat(53, 252),
        a1: rat(A1.0, A1.1),
        a2: rat(1, 28),
        beta_x: 0,
        beta: 199,
        leap_window: (65, 66),
        numbering: LeapNumbering::FollowsPrevious,
        p1: rat(5, 6),
        rahu_rd0: None,
        weekday_name_offset: 0,
        karana_sun_in_true_date: false,
    }
}

/// Built-in configuration; `epoch` defaults to the latest documented one.
pub fn get_tradition(tradition: Tradition, epoch: Option<i64>) -> Result<TraditionConfig, Error> {
    let epochs = tradition.epochs();
    let epoch = match epoch {
        Some(e) if epochs.contains(&e) => e,
        Some(e) => return Err(Error::UnknownEpoch { tradition: tradition.name().into(), epoch: e }),
        None => *epochs.last().ok_or_else(|| Error::UnknownTradition(tradition.name().into()))?,
    };
    let cfg = match (tradition, epoch) {
        (Tradition::Phugpa, 806) => siddhanta(
            tradition,
            806,
            int(2015501) + rat(4783, 5656),
            rat(743, 804),
            rat(475, 3528),
            61,
            123,
        ),
        (Tradition::Phugpa, 1927) => TraditionConfig {
            rahu_rd0: Some(187),
            ..siddhanta(tradition, 1927, int(2424972) + rat(5457, 5656), rat(749, 804), rat(1741, 3528), 55, 129)
        },
        (Tradition::Phugpa, 1987) => TraditionConfig {
            rahu_rd0: Some(10),
            ..siddhanta(tradition, 1987, int(2446914) + rat(135, 707), Rational::zero(), rat(38, 49), 0, 184)
        },
        (Tradition::Tsurphu, 1732) => siddhanta(
            tradition,
            1732,
            int(2353745) + rat(1795153, 7635600),
            rat(-5983, 108540),
            rat(207, 392),
            59,
            142,
        ),
        (Tradition::Tsurphu, 1852) => siddhanta(
            tradition,
            1852,
            int(2397598) + rat(1197103, 7635600),
            rat(23, 27135),
            rat(1, 49),
            14,
            187,
        ),
        (Tradition::Mongolia, 1747) => siddhanta(
            tradition,
            1747,
            int(2359237) + rat(2603, 2828),
            rat(397, 402),
            rat(1523, 1764),
            10,
            172,
        ),
        (Tradition::Bhutan, 1754) => siddhanta(
            tradition,
            1754,
            int(2361807) + rat(52, 707),
            rat(1, 67),
            rat(17, 147),
            2,
            191,
        ),
        (Tradition::Karana, 806) => karana(),
        _ => unreachable!(),
    };
    Ok(cfg)
}

/// Parse `"phugpa"`, `"phugpa:1927"` or `"phugpa:E1927"`.
pub fn parse_tradition_spec(s: &str) -> Result<TraditionConfig, Error> {
    let (name, epoch) = match s.split_once(':') {
        Some((n, e)) => {
            let e = e.trim().trim_start_matches(['E', 'e']);
            let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad epoch in {s:?}")))?;
            (n, Some(e))
        }
        None => (s, None),
    };
    get_tradition(name.parse()?, epoch)
}

impl TraditionConfig {
    pub fn epoch_jd(&self) -> i64 {
        crate::arith::floor_i64(&self.m0)
    }

    pub fn label(&self) -> String {
        format!("{} E{}", self.tradition.name(), self.epoch_year)
    }

    pub fn with_a2(mut self, variant: A2Variant) -> Self {
        self.a2 = match variant {
            A2Variant::Standard => rat(1, 28),
            A2Variant::Exact => (Rational::one() + &self.a1) / int(30),
        };
        self
    }

    pub fn a2_variant(&self) -> Option<A2Variant> {
        if self.a2 == rat(1, 28) {
            Some(A2Variant::Standard)
        } else if self.a2 == (Rational::one() + &self.a1) / int(30) {
            Some(A2Variant::Exact)
        } else {
            None
        }
    }

    /// `γ` with leap years given by `24(Y + γ) mod 65 >= 41`.
    pub fn gamma(&self) -> i64 {
        modulo(-self.epoch_year - 19 * self.beta, 65)
    }

    /// `γ'` with leap years given by `(24Y + γ') mod 65 >= 41`.
    pub fn gamma_x(&self) -> i64 {
        modulo(-24 * self.epoch_year - self.beta, 65)
    }

    pub fn p0(&self) -> Rational {
        &self.p1 - rat(1, 12)
    }

    /// `p_M` for `M = 1..=12`, reduced mod 1.
    pub fn definition_points(&self) -> Vec<Rational> {
        (1..=12).map(|m| frac(&(self.p0() + rat(m, 12)))).collect()
    }

    /// Same calendar with the epoch moved `k` true months later.
    pub fn shift_epoch(&self, k: i64) -> TraditionConfig {
        let years = div_ceil(self.beta + 65 * k, 804) - 1;
        let kk = int(k);
        TraditionConfig {
            epoch_year: self.epoch_year + years,
            m0: &self.m0 + &kk * &self.m1,
            s0: frac(&(&self.s0 + &kk * &self.s1)),
            a0: frac(&(&self.a0 + &kk * &self.a1)),
            beta_x: modulo(self.beta_x + 24 * years, 65),
            beta: self.beta - 804 * years + 65 * k,
            rahu_rd0: self.rahu_rd0.map(|r| modulo(r + k, 230)),
            ..self.clone()
        }
    }
}

/// Override file: every number is a `"num/den"` string.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub base: Option<String>,
    pub epoch_year: Option<i64>,
    pub m0: Option<String>,
    pub m1: Option<String>,
    pub m2: Option<String>,
    pub s0: Option<String>,
    pub s1: Option<String>,
    pub s2: Option<String>,
    pub a0: Option<String>,
    pub a1: Option<String>,
    pub a2: Option<String>,
    pub beta_x: Option<i64>,
    pub beta: Option<i64>,
    pub leap_window: Option<(i64, i64)>,
    pub numbering: Option<LeapNumbering>,
    pub p1: Option<String>,
    pub rahu_rd0: Option<i64>,
    pub weekday_name_offset: Option<i64>,
}

/// Build a config from override-file text; unset fields come from `base`.
pub fn load_override(text: &str) -> Result<TraditionConfig, Error> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    let mut cfg = match &file.base {
        Some(b) => parse_tradition_spec(b)?,
        None => get_tradition(Tradition::Phugpa, None)?,
    };
    cfg.tradition = Tradition::Custom;
    let set = |slot: &mut Rational, v: &Option<String>| -> Result<(), Error> {
        if let Some(v) = v {
            *slot = parse_rational(v)?;
        }
        Ok(())
    };
    set(&mut cfg.m0, &file.m0)?;
    set(&mut cfg.m1, &file.m1)?;
    set(&mut cfg.s0, &file.s0)?;
    set(&mut cfg.s1, &file.s1)?;
    set(&mut cfg.a0, &file.a0)?;
    set(&mut cfg.a1, &file.a1)?;
    set(&mut cfg.a2, &file.a2)?;
    set(&mut cfg.p1, &file.p1)?;
    cfg.m2 = &cfg.m1 / int(30);
    cfg.s2 = &cfg.s1 / int(30);
    set(&mut cfg.m2, &file.m2)?;
    set(&mut cfg.s2, &file.s2)?;
    if let Some(y) = file.epoch_year {
        cfg.epoch_year = y;
    }
    if let Some(b) = file.beta_x {
        cfg.beta_x = b;
    }
    if let Some(b) = file.beta {
        cfg.beta = b;
    }
    if let Some(w) = file.leap_window {
        cfg.leap_window = w;
    }
    if let Some(n) = file.numbering {
        cfg.numbering = n;
    }
    if file.rahu_rd0.is_some() {
        cfg.rahu_rd0 = file.rahu_rd0;
    }
    if let Some(o) = file.weekday_name_offset {
        cfg.weekday_name_offset = o;
    }
    if !(0..65).contains(&cfg.beta_x) {
        return Err(Error::Config(format!("beta_x {} not in 0..65", cfg.beta_x)));
    }
    Ok(cfg)
}
