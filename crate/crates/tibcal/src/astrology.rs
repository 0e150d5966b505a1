//! Elements, animals, trigrams and numbers attached to years, months and days.

use serde::Serialize;

use crate::arith::{amod, div_ceil, div_floor, modulo};
use crate::cycles::{year_animal, year_element, Animal, Element, Gender};
use crate::names::{elemental_yoga_name, mansions, WEEKDAY_ELEMENTS};
use crate::traditions::Tradition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementSet {
    pub power: Element,
    pub life: Element,
    pub body: Element,
    pub fortune: Element,
    pub spirit: Element,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Trigram {
    pub index: i64,
    pub tibetan: &'static str,
    pub chinese: &'static str,
    pub direction: &'static str,
    pub element: &'static str,
}

pub const TRIGRAMS: [Trigram; 8] = [
    Trigram { index: 1, tibetan: "li", chinese: "lí", direction: "S", element: "fire" },
    Trigram { index: 2, tibetan: "khon", chinese: "kūn", direction: "SW", element: "earth" },
    Trigram { index: 3, tibetan: "dwa", chinese: "duì", direction: "W", element: "iron" },
    Trigram { index: 4, tibetan: "khen", chinese: "qián", direction: "NW", element: "sky" },
    Trigram { index: 5, tibetan: "kham", chinese: "kǎn", direction: "N", element: "water" },
    Trigram { index: 6, tibetan: "gin", chinese: "gèn", direction: "NE", element: "mountain" },
    Trigram { index: 7, tibetan: "zin", chinese: "zhèn", direction: "E", element: "wood" },
    Trigram { index: 8, tibetan: "zon", chinese: "xùn", direction: "SE", element: "wind" },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NineNumber {
    pub value: i64,
    pub colour: &'static str,
    pub element: &'static str,
    pub direction: &'static str,
}

pub const NINE_NUMBERS: [NineNumber; 9] = [
    NineNumber { value: 1, colour: "white", element: "iron", direction: "N" },
    NineNumber { value: 2, colour: "black", element: "water", direction: "SW" },
    NineNumber { value: 3, colour: "blue", element: "water", direction: "E" },
    NineNumber { value: 4, colour: "green", element: "wood", direction: "SE" },
    NineNumber { value: 5, colour: "yellow", element: "earth", direction: "Centre" },
    NineNumber { value: 6, colour: "white", element: "iron", direction: "NW" },
    NineNumber { value: 7, colour: "red", element: "fire", direction: "W" },
    NineNumber { value: 8, colour: "white", element: "iron", direction: "NE" },
    NineNumber { value: 9, colour: "red", element: "fire", direction: "S" },
];

/// The nine numbers laid out by direction, south at the top.
pub const MAGIC_SQUARE: [[i64; 3]; 3] = [[4, 9, 2], [3, 5, 7], [8, 1, 6]];
pub const MAGIC_SQUARE_DIRECTIONS: [[&str; 3]; 3] = [["SE", "S", "SW"], ["E", "Centre", "W"], ["NE", "N", "NW"]];

pub fn trigram(n: i64) -> Trigram {
    TRIGRAMS[(amod(n, 8) - 1) as usize]
}

pub fn nine_number(n: i64) -> NineNumber {
    NINE_NUMBERS[(amod(n, 9) - 1) as usize]
}

/// Colour names with the Mongolian variants in parentheses.
pub const fn mongolian_colour(e: Element) -> &'static str {
    match e {
        Element::Wood => "green (blue)",
        Element::Fire => "red",
        Element::Earth => "yellow",
        Element::Iron => "white",
        Element::Water => "dark blue (black)",
    }
}

// Per animal, Mouse first.
const LIFE: [Element; 12] = {
    use Element::*;
    [Water, Earth, Wood, Wood, Earth, Fire, Fire, Earth, Iron, Iron, Earth, Water]
};
const FORTUNE: [Element; 4] = [Element::Wood, Element::Water, Element::Iron, Element::Fire];
const BODY_X: [Element; 6] = [Element::Wood, Element::Wood, Element::Water, Element::Water, Element::Iron, Element::Iron];
const BODY: [Element; 5] = [Element::Iron, Element::Water, Element::Fire, Element::Earth, Element::Wood];

fn elements_of(power: Element, animal: Animal) -> ElementSet {
    let a = (animal.number() - 1) as usize;
    let life = LIFE[a];
    let x = BODY_X[a % 6];
    ElementSet {
        power,
        life,
        body: BODY[modulo(power.number() - x.number(), 5) as usize],
        fortune: FORTUNE[a % 4],
        spirit: life.preceding(),
    }
}

pub fn year_elements(y: i64) -> ElementSet {
    elements_of(year_element(y), year_animal(y))
}

/// Elements of line `row` (1..=60) of the sixty-year cycle.
pub fn sixty_cycle_elements(row: i64) -> ElementSet {
    year_elements(amod(row, 60) + 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YearNumbers {
    pub central: i64,
    pub life: i64,
    pub power: i64,
}

pub fn year_numbers(y: i64) -> YearNumbers {
    YearNumbers { central: amod(2 - y, 9), life: amod(8 - y, 9), power: amod(5 - y, 9) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonthStyle {
    Phugpa,
    Tsurphu,
}

impl MonthStyle {
    pub fn of(t: Tradition) -> MonthStyle {
        match t {
            Tradition::Tsurphu | Tradition::Mongolia => MonthStyle::Tsurphu,
            _ => MonthStyle::Phugpa,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonthAttributes {
    pub animal: Animal,
    pub gender: Gender,
    pub element: Element,
    pub nine_number: Option<NineNumber>,
}

pub fn month_animal(style: MonthStyle, m: i64) -> Animal {
    match style {
        MonthStyle::Phugpa => Animal::from_number(m + 4),
        MonthStyle::Tsurphu => Animal::from_number(m + 2),
    }
}

pub fn month_element(style: MonthStyle, y: i64, m: i64) -> Element {
    let n = match style {
        MonthStyle::Phugpa if m <= 10 => div_ceil(y - 1, 2) + div_floor(m + 1, 2),
        MonthStyle::Phugpa => div_ceil(y, 2) + div_floor(m - 11, 2),
        MonthStyle::Tsurphu => y - 2 + div_floor(m - 1, 2),
    };
    Element::from_number(n)
}

/// Leap months take the attributes of the regular month with the same number.
pub fn month_attributes(style: MonthStyle, y: i64, m: i64) -> MonthAttributes {
    MonthAttributes {
        animal: month_animal(style, m),
        gender: if m % 2 == 1 { Gender::Male } else { Gender::Female },
        element: month_element(style, y, m),
        nine_number: match style {
            MonthStyle::Tsurphu => Some(nine_number(3 - (12 * y + m))),
            MonthStyle::Phugpa => None,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LunarDayAttributes {
    pub animal: Animal,
    pub element: Element,
    pub trigram: Trigram,
    pub nine_number: NineNumber,
}

pub fn lunar_day_attributes(style: MonthStyle, y: i64, m: i64, d: i64) -> LunarDayAttributes {
    let a = month_animal(style, m).number();
    LunarDayAttributes {
        animal: Animal::from_number(d + 6 * m + 8),
        element: Element::from_number(month_element(style, y, m).number() + d),
        trigram: trigram(d + 6 * a + 6),
        nine_number: nine_number(d + 3 * a),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CalendarDayAttributes {
    pub element: Element,
    pub gender: Gender,
    pub animal: Animal,
    pub trigram: Trigram,
    pub nine_number: NineNumber,
    pub sixty_cycle_row: i64,
    pub elements: ElementSet,
}

pub fn calendar_day_attributes(jd: i64) -> CalendarDayAttributes {
    let row = amod(jd - 10, 60);
    CalendarDayAttributes {
        element: Element::from_number(div_ceil(jd, 2)),
        gender: if modulo(jd, 2) == 1 { Gender::Male } else { Gender::Female },
        animal: Animal::from_number(jd + 2),
        trigram: trigram(jd + 2),
        nine_number: nine_number(-jd),
        sixty_cycle_row: row,
        elements: sixty_cycle_elements(row),
    }
}

/// Name of the combination of weekday element (0 = Saturday) and mansion element.
pub fn elemental_yoga(weekday: i64, mansion: usize) -> &'static str {
    let w = WEEKDAY_ELEMENTS[modulo(weekday, 7) as usize];
    elemental_yoga_name(w, mansions()[mansion % 27].element)
}
