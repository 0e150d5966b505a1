use std::collections::BTreeSet;
use std::str::FromStr;

use serde_json::{json, Value};

use tibcal::almanac::{
    mansion_text, records_in_range, signs_text, special_days, traditional_special_days, SpecialDay,
    DEFAULT_EXTRA_LONGITUDES,
};
use tibcal::arith::{int, to_decimal, MixedRadix, Rational};
use tibcal::astro::{MOON_TABLE, SUN_TABLE};
use tibcal::astrology::{
    calendar_day_attributes, lunar_day_attributes, mongolian_colour, month_attributes, year_elements, year_numbers,
    ElementSet, MonthStyle, NINE_NUMBERS, TRIGRAMS,
};
use tibcal::civil::{civil_from_jd, parse_civil};
use tibcal::cycles::{year_name, Element};
use tibcal::days::{
    irregular_days, jd_from_tibetan, losar, tibetan_from_jd, weekday, DayStatus, TibetanDate,
};
use tibcal::months::{leap_month_of_year, months_of_year};
use tibcal::names::{karanas, mansions, yogas};
use tibcal::planets::{planet_position, rahu_longitudes, Planet};
use tibcal::traditions::parse_tradition_spec;
use tibcal::{Error, Tradition, TraditionConfig};

use crate::output::Table;
use crate::CliError;

/// Inclusive span of Gregorian or Tibetan years: `2000..2030` or `2017`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YearRange {
    pub first: i64,
    pub last: i64,
}

impl FromStr for YearRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad year {x:?}"));
        let (first, last) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if first > last {
            return Err(format!("empty range {s:?}"));
        }
        Ok(YearRange { first, last })
    }
}

impl YearRange {
    fn years(self) -> impl Iterator<Item = i64> {
        self.first..=self.last
    }
}

/// A calendar day given as a Julian day number or a civil date.
pub fn parse_day(s: &str) -> Result<i64, String> {
    let t = s.trim();
    if let Some(jd) = t.strip_prefix("jd:").or_else(|| t.strip_prefix("JD:")) {
        return jd.parse().map_err(|_| format!("bad JD {jd:?}"));
    }
    parse_civil(t).map(|c| c.jd()).map_err(|e| e.to_string())
}

/// Inclusive span of days: `DATE..DATE` or a single `DATE`.
pub fn parse_day_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse_day(a)?, parse_day(b)?),
        None => (parse_day(s)?, parse_day(s)?),
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

fn ratio(x: &Rational) -> Value {
    json!(x.to_string())
}

fn radix(x: &Rational, radices: &[u64]) -> String {
    MixedRadix::from_rational(x, radices).to_string()
}

fn status_name(s: DayStatus) -> &'static str {
    match s {
        DayStatus::Normal => "normal",
        DayStatus::Repeated => "repeated",
        DayStatus::Skipped => "skipped",
    }
}

fn element_name(cfg: &TraditionConfig, e: Element) -> String {
    if cfg.tradition == Tradition::Mongolia {
        format!("{} ({})", e.capitalized(), mongolian_colour(e))
    } else {
        e.capitalized()
    }
}

fn day_row(cfg: &TraditionConfig, jd: i64, date: TibetanDate, status: DayStatus) -> Vec<Value> {
    let wd = weekday(cfg, jd);
    vec![
        json!(jd),
        json!(civil_from_jd(jd).to_string()),
        json!(date.to_string()),
        json!(status_name(status)),
        json!(wd.english),
        json!(wd.tibetan),
        json!(year_name(date.month.year).label()),
    ]
}

const DAY_COLUMNS: [&str; 7] = ["jd", "civil", "tibetan", "status", "weekday", "weekday_tibetan", "year_name"];

pub enum ConvertInput {
    Jd(i64),
    Tibetan(TibetanDate),
}

/// Returns the table and, for a skipped date, the domain error to report after it.
pub fn convert(cfg: &TraditionConfig, input: ConvertInput) -> Result<(Table, Option<CliError>), CliError> {
    let mut t = Table::new("convert", &DAY_COLUMNS);
    match input {
        ConvertInput::Jd(jd) => {
            let date = tibetan_from_jd(cfg, jd);
            let (_, status) = jd_from_tibetan(cfg, date)?;
            t.push(day_row(cfg, jd, date, status));
            Ok((t, None))
        }
        ConvertInput::Tibetan(date) => {
            let (jd, status) = jd_from_tibetan(cfg, date)?;
            t.push(day_row(cfg, jd, date, status));
            let err = (status == DayStatus::Skipped).then(|| {
                CliError::Domain(format!("{date} is skipped in {}; its lunar day ends on JD {jd}", cfg.label()))
            });
            Ok((t, err))
        }
    }
}

pub fn losar_table(cfg: &TraditionConfig, years: YearRange) -> Table {
    let mut t = Table::new("losar", &["year", "name", "civil", "jd", "weekday", "leap_month"]);
    for y in years.years() {
        let jd = losar(cfg, y);
        t.push(vec![
            json!(y),
            json!(year_name(y).label()),
            json!(civil_from_jd(jd).to_string()),
            json!(jd),
            json!(weekday(cfg, jd).english),
            leap_month_of_year(cfg, y).map_or(Value::Null, |m| json!(m)),
        ]);
    }
    t
}

pub fn leap_table(cfg: &TraditionConfig, years: YearRange) -> Table {
    let mut t = Table::new("leap-months", &["year", "leap_month"]);
    for y in years.years() {
        t.push(vec![json!(y), leap_month_of_year(cfg, y).map_or(Value::Null, |m| json!(m))]);
    }
    t
}

pub fn almanac(cfg: &TraditionConfig, year: i64, month: Option<i64>) -> Result<Table, CliError> {
    if let Some(m) = month {
        if !(1..=12).contains(&m) {
            return Err(CliError::Usage(format!("month {m} not in 1..=12")));
        }
    }
    let mut t = Table::new(
        "almanac",
        &[
            "jd",
            "civil",
            "tibetan",
            "status",
            "weekday",
            "true_weekday",
            "mansion",
            "moon",
            "yoga",
            "karana",
            "true_sun",
            "mean_sun",
            "karana_moon",
            "elemental_yoga",
        ],
    );
    for d in records_in_range(cfg, losar(cfg, year), losar(cfg, year + 1) - 1) {
        if month.is_some_and(|m| d.date.month.month != m) {
            continue;
        }
        t.push(vec![
            json!(d.jd),
            json!(d.civil.to_string()),
            json!(d.date.to_string()),
            json!(status_name(d.status)),
            json!(d.weekday.english),
            json!(d.true_weekday_text()),
            json!(d.mansion_name()),
            json!(mansion_text(&d.moon_day_start)),
            json!(d.yoga_name()),
            json!(d.karana.name),
            json!(signs_text(&d.true_sun)),
            d.mean_sun.as_ref().map_or(Value::Null, |s| json!(mansion_text(s))),
            json!(mansion_text(&d.karana_moon)),
            json!(d.elemental_yoga),
        ]);
    }
    Ok(t)
}

pub fn special(cfg: &TraditionConfig, year: i64, traditional: bool) -> Table {
    let days: Vec<SpecialDay> =
        if traditional { traditional_special_days(cfg, year) } else { special_days(cfg, year, &DEFAULT_EXTRA_LONGITUDES) };
    let mut t = Table::new("special-days", &["kind", "degrees", "jd", "civil", "tibetan"]);
    for d in days {
        let kind = serde_json::to_value(d.kind).expect("kind serializes");
        t.push(vec![
            kind,
            json!(to_decimal(&(int(360) * &d.longitude), 3)),
            json!(d.jd),
            json!(civil_from_jd(d.jd).to_string()),
            json!(tibetan_from_jd(cfg, d.jd).to_string()),
        ]);
    }
    t
}

pub fn planets(cfg: &TraditionConfig, first: i64, last: i64) -> Table {
    let mut cols = vec!["jd", "civil", "tibetan"];
    cols.extend(Planet::ALL.iter().map(|p| p.name()));
    cols.extend(["rahu_head", "rahu_tail"]);
    let mut t = Table::new("planets", &cols);
    for jd in first..=last {
        let date = tibetan_from_jd(cfg, jd);
        let mut row = vec![json!(jd), json!(civil_from_jd(jd).to_string()), json!(date.to_string())];
        for p in Planet::ALL {
            let fast = planet_position(p, jd).fast;
            row.push(json!(radix(&(int(27) * fast), &[60, 60, 6, p.spec().radix])));
        }
        match rahu_longitudes(cfg, date) {
            Ok((head, tail)) => {
                row.push(json!(radix(&(int(27) * head), &[60, 60, 6, 23])));
                row.push(json!(radix(&(int(27) * tail), &[60, 60, 6, 23])));
            }
            Err(_) => row.extend([Value::Null, Value::Null]),
        }
        t.push(row);
    }
    t
}

fn element_rows(t: &mut Table, cfg: &TraditionConfig, prefix: &str, e: ElementSet) {
    for (k, v) in [("power", e.power), ("life", e.life), ("body", e.body), ("fortune", e.fortune), ("spirit", e.spirit)]
    {
        t.push(vec![json!(format!("{prefix}.{k}")), json!(element_name(cfg, v))]);
    }
}

pub fn attributes(cfg: &TraditionConfig, jd: i64) -> Result<Table, CliError> {
    let mut t = Table::new("attributes", &["attribute", "value"]);
    let kv = |t: &mut Table, k: &str, v: String| t.push(vec![json!(k), json!(v)]);
    let date = tibetan_from_jd(cfg, jd);
    let (y, m, d) = (date.month.year, date.month.month, date.day);
    let style = MonthStyle::of(cfg.tradition);
    kv(&mut t, "jd", jd.to_string());
    kv(&mut t, "civil", civil_from_jd(jd).to_string());
    kv(&mut t, "tibetan", date.to_string());
    kv(&mut t, "weekday", weekday(cfg, jd).english.to_string());

    let name = year_name(y);
    kv(&mut t, "year.name", name.label());
    element_rows(&mut t, cfg, "year", year_elements(y));
    let n = year_numbers(y);
    kv(&mut t, "year.numbers", format!("central {} life {} power {}", n.central, n.life, n.power));

    let ma = month_attributes(style, y, m);
    kv(&mut t, "month.animal", ma.animal.name().to_string());
    kv(&mut t, "month.gender", ma.gender.name().to_string());
    kv(&mut t, "month.element", element_name(cfg, ma.element));
    if let Some(nn) = ma.nine_number {
        kv(&mut t, "month.number", format!("{} {}", nn.value, nn.colour));
    }

    let la = lunar_day_attributes(style, y, m, d);
    kv(&mut t, "lunar_day.animal", la.animal.name().to_string());
    kv(&mut t, "lunar_day.element", element_name(cfg, la.element));
    kv(&mut t, "lunar_day.trigram", la.trigram.tibetan.to_string());
    kv(&mut t, "lunar_day.number", format!("{} {}", la.nine_number.value, la.nine_number.colour));

    let ca = calendar_day_attributes(jd);
    kv(&mut t, "day.element", element_name(cfg, ca.element));
    kv(&mut t, "day.gender", ca.gender.name().to_string());
    kv(&mut t, "day.animal", ca.animal.name().to_string());
    kv(&mut t, "day.trigram", ca.trigram.tibetan.to_string());
    kv(&mut t, "day.number", format!("{} {}", ca.nine_number.value, ca.nine_number.colour));
    kv(&mut t, "day.sixty_cycle_row", ca.sixty_cycle_row.to_string());
    element_rows(&mut t, cfg, "day", ca.elements);
    let rec = tibcal::almanac::day_record(cfg, jd);
    kv(&mut t, "day.elemental_yoga", rec.elemental_yoga.to_string());
    Ok(t)
}

fn day_month(jd: i64) -> String {
    let c = civil_from_jd(jd);
    format!("{}/{}", c.day, c.month)
}

pub fn parse_traditions(list: &str) -> Result<Vec<TraditionConfig>, CliError> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| parse_tradition_spec(s).map_err(CliError::from)).collect()
}

pub fn compare(cfgs: &[TraditionConfig], years: YearRange) -> Result<Vec<Table>, CliError> {
    let mut cols = vec!["year".to_string()];
    cols.extend(cfgs.iter().map(|c| c.tradition.name().to_string()));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();

    let mut new_year = Table::new("new-year", &col_refs);
    let mut leap = Table::new("leap-months", &col_refs);
    for y in years.years() {
        let jds: Vec<i64> = cfgs.iter().map(|c| losar(c, y)).collect();
        let majority = jds.iter().max_by_key(|j| jds.iter().filter(|k| k == j).count()).copied();
        let mut row = vec![json!(y)];
        for jd in &jds {
            let mark = if Some(*jd) != majority { "*" } else { "" };
            row.push(json!(format!("{}{mark}", day_month(*jd))));
        }
        new_year.push(row);
        let mut row = vec![json!(y)];
        row.extend(cfgs.iter().map(|c| leap_month_of_year(c, y).map_or(Value::Null, |m| json!(m))));
        leap.push(row);
    }

    let mut cols = vec!["month".to_string()];
    cols.extend(cfgs.iter().map(|c| c.tradition.name().to_string()));
    cols.push("same".into());
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut irregular = Table::new("repeated-skipped", &col_refs);
    for y in years.years() {
        let labels: BTreeSet<_> = cfgs.iter().flat_map(|c| months_of_year(c, y)).collect();
        for label in labels {
            let mut cells = Vec::new();
            for c in cfgs {
                let cell = match irregular_days(c, label) {
                    Ok(v) if v.is_empty() => "-".to_string(),
                    Ok(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                    Err(Error::NoLeapMonth { .. }) => String::new(),
                    Err(e) => return Err(e.into()),
                };
                cells.push(cell);
            }
            let same = cells.windows(2).all(|w| w[0] == w[1]);
            let mut row = vec![json!(label.to_string())];
            row.extend(cells.into_iter().map(Value::String));
            row.push(json!(same));
            irregular.push(row);
        }
    }
    Ok(vec![new_year, leap, irregular])
}

pub fn tables() -> Vec<Table> {
    let mut out = Vec::new();
    let mut tr = Table::new(
        "traditions",
        &[
            "tradition", "epoch", "m0", "m1", "m2", "s0", "s1", "s2", "a0", "a1", "a2", "beta_x", "beta", "leap_window",
            "p1", "rahu_rd0",
        ],
    );
    for t in Tradition::BUILT_IN {
        for &e in t.epochs() {
            let c = tibcal::get_tradition(t, Some(e)).expect("built-in");
            tr.push(vec![
                json!(t.name()),
                json!(e),
                ratio(&c.m0),
                ratio(&c.m1),
                ratio(&c.m2),
                ratio(&c.s0),
                ratio(&c.s1),
                ratio(&c.s2),
                ratio(&c.a0),
                ratio(&c.a1),
                ratio(&c.a2),
                json!(c.beta_x),
                json!(c.beta),
                json!(format!("{},{}", c.leap_window.0, c.leap_window.1)),
                ratio(&c.p1),
                c.rahu_rd0.map_or(Value::Null, |r| json!(r)),
            ]);
        }
    }
    out.push(tr);

    let mut eq = Table::new("equation-tables", &["table", "period", "knots"]);
    let knots = |t: &tibcal::astro::EquationTable| {
        let q = t.period() / 4;
        (0..=q).map(|i| t.knot(i).to_string()).collect::<Vec<_>>().join(",")
    };
    eq.push(vec![json!("moon"), json!(MOON_TABLE.period()), json!(knots(&MOON_TABLE))]);
    eq.push(vec![json!("sun"), json!(SUN_TABLE.period()), json!(knots(&SUN_TABLE))]);
    for p in Planet::ALL {
        let s = p.spec();
        eq.push(vec![json!(format!("{p} equ")), json!(s.equ.period()), json!(knots(&s.equ))]);
        let corr = (0..=13).map(|i| s.corr.knot(i).to_string()).collect::<Vec<_>>().join(",");
        eq.push(vec![json!(format!("{p} corr")), json!(s.corr.period()), json!(corr)]);
    }
    out.push(eq);

    let mut pl = Table::new("planets", &["planet", "period", "multiplier", "radix", "birth_sign", "class"]);
    for p in Planet::ALL {
        let s = p.spec();
        pl.push(vec![
            json!(p.name()),
            json!(s.period),
            json!(s.multiplier),
            json!(s.radix),
            json!(format!("{}/{}", s.birth_sign.0, s.birth_sign.1)),
            serde_json::to_value(s.class).expect("class serializes"),
        ]);
    }
    out.push(pl);

    let mut ma = Table::new("mansions", &["index", "tibetan", "sanskrit", "element"]);
    for m in mansions() {
        ma.push(vec![json!(m.index), json!(m.tibetan), json!(m.sanskrit), json!(m.element.name())]);
    }
    out.push(ma);

    let mut yo = Table::new("yogas", &["index", "sanskrit"]);
    for (i, y) in yogas().iter().enumerate() {
        yo.push(vec![json!(i), json!(y)]);
    }
    out.push(yo);

    let mut ka = Table::new("karanas", &["kind", "key", "sanskrit"]);
    for k in karanas() {
        ka.push(vec![serde_json::to_value(k.kind).expect("kind serializes"), json!(k.key), json!(k.sanskrit)]);
    }
    out.push(ka);

    let mut tg = Table::new("trigrams", &["index", "tibetan", "chinese", "direction", "element"]);
    for g in TRIGRAMS {
        tg.push(vec![json!(g.index), json!(g.tibetan), json!(g.chinese), json!(g.direction), json!(g.element)]);
    }
    out.push(tg);

    let mut nn = Table::new("nine-numbers", &["value", "colour", "element", "direction"]);
    for n in NINE_NUMBERS {
        nn.push(vec![json!(n.value), json!(n.colour), json!(n.element), json!(n.direction)]);
    }
    out.push(nn);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn year_ranges() {
        assert_eq!("2000..2030".parse::<YearRange>().unwrap(), YearRange { first: 2000, last: 2030 });
        assert_eq!("2000..=2030".parse::<YearRange>().unwrap(), YearRange { first: 2000, last: 2030 });
        assert_eq!("2017".parse::<YearRange>().unwrap(), YearRange { first: 2017, last: 2017 });
        assert!("2030..2000".parse::<YearRange>().is_err());
        assert!("x..2000".parse::<YearRange>().is_err());
    }

    #[test]
    fn day_arguments() {
        assert_eq!(parse_day("2017-02-27").unwrap(), 2457812);
        assert_eq!(parse_day("jd:2457812").unwrap(), 2457812);
        assert_eq!(parse_day("806-03-23J").unwrap(), 2015531);
        assert_eq!(parse_day_range("2017-02-27..2017-03-01").unwrap(), (2457812, 2457814));
        assert!(parse_day("2017-02-30").is_err());
    }
}
