//! Checks shared by the acceptance runner and the integration tests.
//! Each returns a short summary on success and the first mismatch on failure.

#![allow(dead_code)]

use std::collections::BTreeMap;

use chrono::{Datelike, NaiveDate};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use tibcal::arith::{floor, int, rat, to_mixed_radix, Rational};
use tibcal::astrology::{sixty_cycle_elements, MAGIC_SQUARE};
use tibcal::astro::true_date;
use tibcal::civil::{gregorian_from_jd, jd_from_gregorian};
use tibcal::cycles::year_name;
use tibcal::days::{
    day_of_week, days_in_range, irregular_days, jd_from_tibetan, losar, lunar_day_jd, lunar_day_of_index, lunar_index,
    month_bounds, tibetan_from_jd, year_length, CalendarDay, DayStatus,
};
use tibcal::almanac::bhutan_winter_solstice;
use tibcal::months::{dp_beta, dp_month_assign, leap_month_of_year, month_count, month_from_count, months_of_year};
use tibcal::traditions::A2Variant;
use tibcal::{get_tradition, MonthLabel, Tradition, TraditionConfig};

pub type Check = Result<String, String>;

pub const FOUR: [Tradition; 4] = [Tradition::Phugpa, Tradition::Tsurphu, Tradition::Mongolia, Tradition::Bhutan];

pub fn cfg(t: Tradition) -> TraditionConfig {
    get_tradition(t, None).unwrap()
}

pub fn cfg_at(t: Tradition, epoch: i64) -> TraditionConfig {
    get_tradition(t, Some(epoch)).unwrap()
}

/// Rows of a tab-separated data file, comments and header dropped.
pub fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

fn day_month(jd: i64) -> String {
    let c = gregorian_from_jd(jd);
    format!("{}/{}", c.day, c.month)
}

fn year_jds(first: i64, last: i64) -> (i64, i64) {
    (jd_from_gregorian(first, 1, 1), jd_from_gregorian(last, 12, 31))
}

pub fn losar_phugpa() -> Check {
    let c = cfg(Tradition::Phugpa);
    let table = rows(include_str!("../data/losar_phugpa.tsv"));
    for r in &table {
        let y: i64 = r[0].parse().unwrap();
        let want = jd_from_gregorian(y, r[1].parse().unwrap(), r[2].parse().unwrap());
        let got = losar(&c, y);
        if got != want {
            return Err(format!("{y}: got {} want {}", day_month(got), day_month(want)));
        }
        if year_name(y).short_label() != r[3] {
            return Err(format!("{y}: name {} want {}", year_name(y).short_label(), r[3]));
        }
    }
    Ok(format!("{} years", table.len()))
}

pub fn losar_four() -> Check {
    let cfgs: Vec<_> = FOUR.iter().map(|&t| cfg(t)).collect();
    let table = rows(include_str!("../data/losar_four.tsv"));
    for r in &table {
        let y: i64 = r[0].parse().unwrap();
        for (c, want) in cfgs.iter().zip(&r[1..]) {
            let got = day_month(losar(c, y));
            if &got != want {
                return Err(format!("{} {y}: got {got} want {want}", c.tradition));
            }
        }
    }
    Ok(format!("{} years x 4 traditions", table.len()))
}

fn leap_text(c: &TraditionConfig, y: i64) -> String {
    leap_month_of_year(c, y).map_or("-".to_string(), |m| m.to_string())
}

pub fn leap_four() -> Check {
    let cfgs: Vec<_> = FOUR.iter().map(|&t| cfg(t)).collect();
    let table = rows(include_str!("../data/leap_four.tsv"));
    for r in &table {
        let y: i64 = r[0].parse().unwrap();
        for (c, want) in cfgs.iter().zip(&r[1..]) {
            let got = leap_text(c, y);
            if &got != want {
                return Err(format!("{} {y}: got {got} want {want}", c.tradition));
            }
        }
    }
    for y in 1000..3000 {
        if leap_text(&cfgs[1], y) != leap_text(&cfgs[2], y) {
            return Err(format!("tsurphu and mongolia leap months differ in {y}"));
        }
    }
    Ok(format!("{} years x 4 traditions; tsurphu = mongolia 1000-2999", table.len()))
}

pub fn irregular_2012() -> Check {
    let cfgs: Vec<_> = FOUR.iter().map(|&t| cfg(t)).collect();
    for r in rows(include_str!("../data/irregular_2012.tsv")) {
        let m: i64 = r[0].parse().unwrap();
        for (c, want) in cfgs.iter().zip(&r[1..]) {
            let got = irregular_days(c, MonthLabel::regular(2012, m)).unwrap();
            let got = if got.is_empty() {
                "-".to_string()
            } else {
                got.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            };
            if &got != want {
                return Err(format!("{} 2012-{m}: got {got} want {want}", c.tradition));
            }
        }
    }
    Ok("12 months x 4 traditions".into())
}

/// Config moved to the true month whose mean date falls on `jd`.
pub fn shifted_to(c: &TraditionConfig, jd: i64) -> Option<TraditionConfig> {
    let k = floor(&((int(jd) - &c.m0) / &c.m1)).to_i64().unwrap();
    (k - 1..=k + 2).map(|k| c.shift_epoch(k)).find(|s| s.epoch_jd() == jd)
}

/// Rounded to six decimals.
fn six_places(x: &Rational) -> String {
    let scaled = floor(&(x * int(1_000_000) + rat(1, 2)));
    let (i, f) = scaled.div_rem(&BigInt::from(1_000_000));
    format!("{i}.{f:06}")
}

fn digits(x: &Rational, radices: &[u64]) -> String {
    let v = to_mixed_radix(x, radices);
    assert_eq!(v.digits.len(), radices.len());
    v.digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

pub const EPOCH_806_JD: i64 = 2015531;

/// Epoch values at JD 2015531: (traditional forms, six-decimal forms) for m0, s0, a0.
pub const EPOCH_806: [(Tradition, [&str; 3], [&str; 3]); 4] = [
    (Tradition::Phugpa, ["2;22,34,2,518", "0,8,3,3,33", "5,98"], ["2.376238", "0.004975", "0.206349"]),
    (Tradition::Tsurphu, ["2;25,20,2,352", "0,29,34,5,37", "5,112"], ["2.422338", "0.018261", "0.210317"]),
    (Tradition::Mongolia, ["2;25,6,3,327", "0,38,17,0,6", "5,101"], ["2.418494", "0.023632", "0.207200"]),
    (Tradition::Bhutan, ["2;24,37,5,431", "0,28,12,3,15", "6,22"], ["2.410537", "0.017413", "0.220522"]),
];

pub fn epoch_806() -> Check {
    for (t, trad, dec) in EPOCH_806 {
        let c = shifted_to(&cfg(t), EPOCH_806_JD).ok_or_else(|| format!("{t}: no month at JD {EPOCH_806_JD}"))?;
        let m0 = &c.m0 - int(2015529);
        let m0_trad = format!("{};{}", floor(&m0), digits(&(&m0 - int(floor(&m0).to_i64().unwrap())), &[60, 60, 6, 707]));
        let got_trad = [m0_trad, digits(&c.s0, &[27, 60, 60, 6, 67]), digits(&c.a0, &[28, 126])];
        let got_dec = [six_places(&m0), six_places(&c.s0), six_places(&c.a0)];
        for i in 0..3 {
            if got_trad[i] != trad[i] || got_dec[i] != dec[i] {
                return Err(format!(
                    "{t} row {i}: got {} / {} want {} / {}",
                    got_trad[i], got_dec[i], trad[i], dec[i]
                ));
            }
        }
    }
    Ok("3 rows x 4 traditions, both forms".into())
}

pub fn epoch_invariance(first_year: i64, last_year: i64) -> Check {
    let (a, b) = year_jds(first_year, last_year);
    let configs = [(Tradition::Phugpa, 806), (Tradition::Phugpa, 1927), (Tradition::Phugpa, 1987), (Tradition::Tsurphu, 1732), (Tradition::Tsurphu, 1852)];
    let sweeps: Vec<Vec<CalendarDay>> = std::thread::scope(|s| {
        let handles: Vec<_> = configs.iter().map(|&(t, e)| s.spawn(move || days_in_range(&cfg_at(t, e), a, b))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (base, other) in [(0, 1), (0, 2), (3, 4)] {
        let pairs = sweeps[base].iter().zip(&sweeps[other]);
        if let Some((x, y)) = pairs.into_iter().find(|(x, y)| x.date != y.date) {
            let (t, e0) = configs[base];
            return Err(format!("{t} E{e0} vs E{} at JD {}: {} vs {}", configs[other].1, x.jd, x.date, y.date));
        }
    }
    Ok(format!("{} days, phugpa x3, tsurphu x2", b - a + 1))
}

/// Lunar days that end on different JDs under the two a2 values, as the later JD.
pub fn a2_events(first_year: i64, last_year: i64) -> Vec<i64> {
    let (a, b) = year_jds(first_year, last_year);
    let c = cfg(Tradition::Phugpa);
    let standard = c.clone().with_a2(A2Variant::Standard);
    let exact = c.with_a2(A2Variant::Exact);
    let start = tibetan_from_jd(&standard, a);
    let mut t = lunar_index(month_count(&standard, start.month).unwrap(), start.day);
    let mut out = Vec::new();
    loop {
        let (n, d) = lunar_day_of_index(t);
        let (x, y) = (lunar_day_jd(&standard, n, d), lunar_day_jd(&exact, n, d));
        if x.min(y) > b {
            return out;
        }
        if x != y && x.max(y) >= a {
            out.push(x.max(y));
        }
        t += 1;
    }
}

pub fn a2_divergence() -> Check {
    let counts = [(1027, 1091, 16), (1900, 1999, 9), (2000, 2099, 8)];
    let mut found = Vec::new();
    for (a, b, want) in counts {
        let events = a2_events(a, b);
        if events.len() != want {
            return Err(format!("{a}-{b}: {} events, want {want}", events.len()));
        }
        found.push(events);
    }
    let recent: Vec<i64> = found[2].iter().copied().filter(|&j| j <= 2460999).collect();
    if recent != [2451951, 2453866, 2460999] {
        return Err(format!("events 2000 to 19 Nov 2025: {recent:?}"));
    }
    Ok("16 in 1027-1091, 9 in 1900-1999, 8 in 2000-2099; JD 2451951, 2453866, 2460999".into())
}

pub fn period() -> Check {
    let c = cfg(Tradition::Phugpa);
    let months = [c.m1.denom(), c.s1.denom(), c.a1.denom()]
        .into_iter()
        .fold(BigInt::from(1), |acc, d| acc.lcm(d));
    let p = months.to_i64().unwrap();
    let days = &c.m1 * int(p);
    let years = &c.s1 * int(p);
    let ok = p == 23_873_976
        && days == int(705_012_525)
        && years == int(1_930_110)
        && (&c.a1 * int(p)).is_integer()
        && 705_012_525 % 7 == 0;
    if !ok {
        return Err(format!("period {p} months, {days} days, {years} years"));
    }
    for (n, d) in [(0, 1), (17, 30), (-400, 15), (1000, 7)] {
        let diff = true_date(&c, d, n + p) - true_date(&c, d, n);
        if diff != int(705_012_525) {
            return Err(format!("true date at n={n} d={d} moved by {diff}"));
        }
    }
    Ok("23873976 months = 705012525 days = 1930110 years, 7 | days".into())
}

pub fn year_length_distribution(first_year: i64, years: i64) -> Result<BTreeMap<i64, f64>, String> {
    let c = cfg(Tradition::Phugpa);
    let mut count: BTreeMap<i64, i64> = BTreeMap::new();
    for y in first_year..first_year + years {
        *count.entry(year_length(&c, y)).or_default() += 1;
    }
    Ok(count.into_iter().map(|(k, v)| (k, 100.0 * v as f64 / years as f64)).collect())
}

pub fn year_lengths() -> Check {
    let dist = year_length_distribution(1027, 10_000)?;
    let want = [(354, 42.0), (355, 21.0), (383, 3.0), (384, 33.0), (385, 1.0)];
    if dist.len() != want.len() {
        return Err(format!("lengths {dist:?}"));
    }
    for (len, pct) in want {
        let got = dist.get(&len).copied().unwrap_or(0.0);
        if (got - pct).abs() > 1.0 {
            return Err(format!("{len} days: {got:.2}% want {pct}%"));
        }
    }
    let text: Vec<String> = dist.iter().map(|(k, v)| format!("{k}:{v:.2}%")).collect();
    Ok(text.join(" "))
}

/// Years in which the two New Years fall on different days.
pub fn losar_divergences(a: &TraditionConfig, b: &TraditionConfig, years: std::ops::Range<i64>) -> Vec<(i64, i64, i64)> {
    years
        .filter_map(|y| {
            let (x, z) = (losar(a, y), losar(b, y));
            (x != z).then_some((y, x, z))
        })
        .collect()
}

pub fn tsurphu_mongolia_losar() -> Check {
    let t = cfg(Tradition::Tsurphu);
    let m = cfg(Tradition::Mongolia);
    let found = losar_divergences(&t, &m, 1850..3001);
    let before: Vec<_> = found.iter().filter(|d| d.0 <= 2014).collect();
    let after: Vec<_> = found.iter().filter(|d| d.0 > 2014).collect();
    let last = before.last().ok_or("no divergence before 2014")?;
    let next = after.first().ok_or("no divergence after 2014")?;
    let show = |d: &(i64, i64, i64)| format!("{} ({} vs {})", d.0, day_month(d.1), day_month(d.2));
    if show(last) != "1900 (31/1 vs 1/2)" || show(next) != "2161 (26/2 vs 25/2)" {
        return Err(format!("last {} next {}", show(last), show(next)));
    }
    let millennium = found.iter().filter(|d| (2001..=3000).contains(&d.0)).count();
    Ok(format!("last {}, next {}, {millennium} in 2001-3000", show(last), show(next)))
}

pub const BETAS: [(Tradition, i64, i64); 8] = [
    (Tradition::Phugpa, 806, 123),
    (Tradition::Phugpa, 1927, 129),
    (Tradition::Phugpa, 1987, 184),
    (Tradition::Tsurphu, 1732, 142),
    (Tradition::Tsurphu, 1852, 187),
    (Tradition::Mongolia, 1747, 172),
    (Tradition::Bhutan, 1754, 191),
    (Tradition::Karana, 806, 199),
];

pub fn definition_points() -> Check {
    for (t, e, beta) in BETAS {
        let c = cfg_at(t, e);
        if dp_beta(&c) != beta {
            return Err(format!("{}: beta {} want {beta}", c.label(), dp_beta(&c)));
        }
        for n in 0..804 {
            let dp = dp_month_assign(&c, n).map_err(|e| format!("{}: {e}", c.label()))?;
            if dp != month_from_count(&c, n) {
                return Err(format!("{} n={n}: {dp} vs {}", c.label(), month_from_count(&c, n)));
            }
        }
    }
    if 199 % 65 != 4 {
        return Err("199 mod 65".into());
    }
    Ok("8 configs x 804 months; betas 123,129,184,142,187,172,191,199(=4)".into())
}

/// Gregorian (month, day) of the Bhutanese winter solstice holiday of year `y`.
pub fn bhutan_solstice_date(y: i64) -> (i64, i64) {
    let d = gregorian_from_jd(bhutan_winter_solstice(&cfg(Tradition::Bhutan), y));
    (d.month, d.day)
}

pub fn bhutan_solstice() -> Check {
    if let Some(y) = (2006..=2019).find(|&y| bhutan_solstice_date(y) != (1, 2)) {
        return Err(format!("{y}: {:?}, want 2 January", bhutan_solstice_date(y)));
    }
    let first_third = (1900..2100).find(|&y| bhutan_solstice_date(y) == (1, 3));
    if first_third != Some(2020) {
        return Err(format!("first 3 January in {first_third:?}"));
    }
    Ok("2 January every year 2006-2019, first 3 January 2020".into())
}

pub fn attribute_tables() -> Check {
    for r in rows(include_str!("../data/sixty_cycle.tsv")) {
        let row: i64 = r[0].parse().unwrap();
        let e = sixty_cycle_elements(row);
        let y = row + 3;
        let got = [
            year_name(y).short_label(),
            e.life.name().into(),
            e.body.name().into(),
            e.fortune.name().into(),
            e.spirit.name().into(),
        ];
        if got[..] != r[1..] {
            return Err(format!("sixty-cycle row {row}: {got:?} want {:?}", &r[1..]));
        }
        if e.power != year_name(y).element {
            return Err(format!("sixty-cycle row {row}: power"));
        }
    }
    for r in rows(include_str!("../data/body_thirty.tsv")) {
        let row: i64 = r[0].parse().unwrap();
        let e = sixty_cycle_elements(row);
        if e.power.name() != r[1] || e.body.name() != r[2] {
            return Err(format!("thirty-cycle row {row}"));
        }
    }
    let m = MAGIC_SQUARE;
    let lines = (0..3)
        .flat_map(|i| [m[i].iter().sum::<i64>(), (0..3).map(|j| m[j][i]).sum()])
        .chain([(0..3).map(|i| m[i][i]).sum(), (0..3).map(|i| m[i][2 - i]).sum()]);
    if let Some(s) = lines.into_iter().find(|&s| s != 15) {
        return Err(format!("magic square line sum {s}"));
    }
    Ok("60 + 30 rows, 8 magic-square lines".into())
}

/// Every calendar day maps back to itself and skipped dates have no day.
pub fn round_trip(c: &TraditionConfig, first_year: i64, last_year: i64) -> Check {
    let (a, b) = year_jds(first_year, last_year);
    let days = days_in_range(c, a, b);
    for w in days.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        let back = jd_from_tibetan(c, x.date).map_err(|e| format!("{}: {e}", x.date))?;
        if back.0 != x.jd {
            return Err(format!("JD {} -> {} -> {}", x.jd, x.date, back.0));
        }
        if x.n == y.n && y.date.day > x.date.day + 1 {
            for d in x.date.day + 1..y.date.day {
                let mut skipped = x.date;
                skipped.day = d;
                skipped.leap_day = false;
                let (_, s) = jd_from_tibetan(c, skipped).map_err(|e| format!("{skipped}: {e}"))?;
                if s != DayStatus::Skipped {
                    return Err(format!("{skipped} missing but {s:?}"));
                }
            }
        }
    }
    Ok(format!("{} days", days.len()))
}

pub fn true_date_increasing(c: &TraditionConfig, n0: i64, months: i64) -> Check {
    let mut prev = true_date(c, 30, n0 - 1);
    for n in n0..n0 + months {
        for d in 1..=30 {
            let td = true_date(c, d, n);
            if td <= prev {
                return Err(format!("true date not increasing at n={n} d={d}"));
            }
            prev = td;
        }
    }
    Ok(format!("{} lunar days", 30 * months))
}

pub fn month_lengths(c: &TraditionConfig, first_year: i64, last_year: i64) -> Check {
    let mut count = 0;
    for y in first_year..=last_year {
        for m in months_of_year(c, y) {
            let (a, b) = month_bounds(c, m).unwrap();
            if !(29..=30).contains(&(b - a + 1)) {
                return Err(format!("{m}: {} days", b - a + 1));
            }
            count += 1;
        }
    }
    Ok(format!("{count} months"))
}

pub fn weekdays(first_year: i64, last_year: i64) -> Check {
    let (a, b) = year_jds(first_year, last_year);
    for jd in a..=b {
        let c = gregorian_from_jd(jd);
        let date = NaiveDate::from_ymd_opt(c.year as i32, c.month as u32, c.day as u32).unwrap();
        let from_sunday = date.weekday().num_days_from_sunday() as i64;
        if day_of_week(jd) != (from_sunday + 1) % 7 {
            return Err(format!("{c}: weekday {}", day_of_week(jd)));
        }
    }
    Ok(format!("{} days", b - a + 1))
}

/// Phugpa day number minus Tsurphu day number on the same JD, mod 30.
pub fn phugpa_tsurphu_offsets(first_year: i64, last_year: i64) -> BTreeMap<i64, usize> {
    let (a, b) = year_jds(first_year, last_year);
    let p = days_in_range(&cfg(Tradition::Phugpa), a, b);
    let t = days_in_range(&cfg(Tradition::Tsurphu), a, b);
    let mut out = BTreeMap::new();
    for (x, y) in p.iter().zip(&t) {
        *out.entry((x.date.day - y.date.day).rem_euclid(30)).or_default() += 1;
    }
    out
}

pub fn properties() -> Check {
    let p = cfg(Tradition::Phugpa);
    let (trips, offsets) = std::thread::scope(|s| {
        let trips: Vec<_> = FOUR.iter().map(|&t| s.spawn(move || round_trip(&cfg(t), 1900, 2100))).collect();
        let offsets = s.spawn(|| phugpa_tsurphu_offsets(1900, 2100));
        let trips: Vec<Check> = trips.into_iter().map(|h| h.join().unwrap()).collect();
        (trips, offsets.join().unwrap())
    });
    let mut notes = Vec::new();
    for (t, r) in FOUR.iter().zip(trips) {
        notes.push(format!("{t} round trip {}", r?));
    }
    notes.push(format!("increasing over {}", true_date_increasing(&p, 13000, 2400)?));
    for t in FOUR {
        month_lengths(&cfg(t), 1900, 2100)?;
    }
    notes.push(format!("weekdays {}", weekdays(1900, 2100)?));
    if offsets.keys().any(|k| *k != 0 && *k != 1) {
        return Err(format!("phugpa - tsurphu offsets {offsets:?}"));
    }
    notes.push(format!("phugpa-tsurphu {offsets:?}"));
    Ok(notes.join("; "))
}
