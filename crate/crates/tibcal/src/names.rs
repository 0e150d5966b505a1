//! Name tables for mansions, yogas, karanas and elemental yogas.

use std::sync::OnceLock;

use serde::Serialize;

/// Element of the four-element system used for weekdays and mansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FourElement {
    Earth,
    Water,
    Fire,
    Wind,
}

impl FourElement {
    pub const fn name(self) -> &'static str {
        match self {
            FourElement::Earth => "earth",
            FourElement::Water => "water",
            FourElement::Fire => "fire",
            FourElement::Wind => "wind",
        }
    }

    fn parse(s: &str) -> FourElement {
        match s {
            "earth" => FourElement::Earth,
            "water" => FourElement::Water,
            "fire" => FourElement::Fire,
            "wind" => FourElement::Wind,
            other => panic!("unknown element {other:?} in name table"),
        }
    }
}

/// Weekday elements, Saturday first.
pub const WEEKDAY_ELEMENTS: [FourElement; 7] = [
    FourElement::Earth,
    FourElement::Fire,
    FourElement::Water,
    FourElement::Fire,
    FourElement::Water,
    FourElement::Wind,
    FourElement::Earth,
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mansion {
    pub index: usize,
    pub tibetan: String,
    pub sanskrit: String,
    pub element: FourElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KaranaKind {
    Changing,
    Fixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KaranaName {
    pub kind: KaranaKind,
    /// Cycle number 1..=7 for changing karanas, half-day number for fixed ones.
    pub key: i64,
    pub sanskrit: String,
}

/// Data rows with comments and the header line removed.
fn rows(text: &'static str) -> impl Iterator<Item = Vec<&'static str>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .map(|l| l.split('\t').collect())
}

pub fn mansions() -> &'static [Mansion] {
    static TABLE: OnceLock<Vec<Mansion>> = OnceLock::new();
    TABLE.get_or_init(|| {
        rows(include_str!("../data/mansions.tsv"))
            .map(|r| Mansion {
                index: r[0].parse().expect("mansion index"),
                tibetan: r[1].to_string(),
                sanskrit: r[2].to_string(),
                element: FourElement::parse(r[3]),
            })
            .collect()
    })
}

pub fn yogas() -> &'static [String] {
    static TABLE: OnceLock<Vec<String>> = OnceLock::new();
    TABLE.get_or_init(|| rows(include_str!("../data/yogas.tsv")).map(|r| r[1].to_string()).collect())
}

pub fn karanas() -> &'static [KaranaName] {
    static TABLE: OnceLock<Vec<KaranaName>> = OnceLock::new();
    TABLE.get_or_init(|| {
        rows(include_str!("../data/karanas.tsv"))
            .map(|r| KaranaName {
                kind: if r[0] == "fixed" { KaranaKind::Fixed } else { KaranaKind::Changing },
                key: r[1].parse().expect("karana key"),
                sanskrit: r[2].to_string(),
            })
            .collect()
    })
}

pub fn karana_name(kind: KaranaKind, key: i64) -> &'static str {
    karanas()
        .iter()
        .find(|k| k.kind == kind && k.key == key)
        .map(|k| k.sanskrit.as_str())
        .unwrap_or_else(|| panic!("no karana {kind:?} {key}"))
}

fn elemental_yoga_table() -> &'static [((FourElement, FourElement), String)] {
    static TABLE: OnceLock<Vec<((FourElement, FourElement), String)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        rows(include_str!("../data/elemental_yogas.tsv"))
            .map(|r| {
                let (a, b) = (FourElement::parse(r[0]), FourElement::parse(r[1]));
                ((a.min(b), a.max(b)), r[2].to_string())
            })
            .collect()
    })
}

/// Name of the unordered element pair.
pub fn elemental_yoga_name(a: FourElement, b: FourElement) -> &'static str {
    let key = (a.min(b), a.max(b));
    elemental_yoga_table()
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, n)| n.as_str())
        .expect("every element pair is named")
}
