//! Year names: the Chinese element-animal cycle and the Prabhava cycle.

use serde::Serialize;

use crate::arith::{amod, div_ceil};
use crate::Error;

/// The five elements in their standard order; `number()` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Wood,
    Fire,
    Earth,
    Iron,
    Water,
}

impl Element {
    pub const ALL: [Element; 5] = [Element::Wood, Element::Fire, Element::Earth, Element::Iron, Element::Water];

    /// Element with number `n`, taken `amod 5`.
    pub fn from_number(n: i64) -> Element {
        Self::ALL[(amod(n, 5) - 1) as usize]
    }

    pub const fn number(self) -> i64 {
        self as i64 + 1
    }

    pub const fn name(self) -> &'static str {
        match self {
            Element::Wood => "wood",
            Element::Fire => "fire",
            Element::Earth => "earth",
            Element::Iron => "iron",
            Element::Water => "water",
        }
    }

    pub const fn colour(self) -> &'static str {
        match self {
            Element::Wood => "green",
            Element::Fire => "red",
            Element::Earth => "yellow",
            Element::Iron => "white",
            Element::Water => "blue",
        }
    }

    pub fn preceding(self) -> Element {
        Element::from_number(self.number() - 1)
    }

    pub fn capitalized(self) -> String {
        let n = self.name();
        n[..1].to_uppercase() + &n[1..]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Animal {
    Mouse,
    Ox,
    Tiger,
    Rabbit,
    Dragon,
    Snake,
    Horse,
    Sheep,
    Monkey,
    Bird,
    Dog,
    Pig,
}

impl Animal {
    pub const ALL: [Animal; 12] = [
        Animal::Mouse,
        Animal::Ox,
        Animal::Tiger,
        Animal::Rabbit,
        Animal::Dragon,
        Animal::Snake,
        Animal::Horse,
        Animal::Sheep,
        Animal::Monkey,
        Animal::Bird,
        Animal::Dog,
        Animal::Pig,
    ];

    /// Animal with number `n`, taken `amod 12`.
    pub fn from_number(n: i64) -> Animal {
        Self::ALL[(amod(n, 12) - 1) as usize]
    }

    pub const fn number(self) -> i64 {
        self as i64 + 1
    }

    pub const fn name(self) -> &'static str {
        match self {
            Animal::Mouse => "Mouse",
            Animal::Ox => "Ox",
            Animal::Tiger => "Tiger",
            Animal::Rabbit => "Rabbit",
            Animal::Dragon => "Dragon",
            Animal::Snake => "Snake",
            Animal::Horse => "Horse",
            Animal::Sheep => "Sheep",
            Animal::Monkey => "Monkey",
            Animal::Bird => "Bird",
            Animal::Dog => "Dog",
            Animal::Pig => "Pig",
        }
    }

    /// Odd-numbered animals are male.
    pub const fn gender(self) -> Gender {
        if self.number() % 2 == 1 {
            Gender::Male
        } else {
            Gender::Female
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Male,
    Female,
}

impl Gender {
    pub const fn name(self) -> &'static str {
        match self {
            Gender::Male => "male",
            Gender::Female => "female",
        }
    }
}

/// Names of the Prabhava cycle, Tibetan and Sanskrit.
pub const PRABHAVA_NAMES: [(&str, &str); 60] = [
    ("rab byung", "prabhava"),
    ("rnam byung", "vibhava"),
    ("dkar po", "suklata"),
    ("rab myos", "pramadi"),
    ("skyes bdag", "prajapati"),
    ("anggi ra", "ankira"),
    ("dpal gdong", "srimukha"),
    ("dngos po", "bhava"),
    ("na tshod ldan", "yuvika"),
    ("'dzin byed", "dhritu"),
    ("dbang phyug", "isvara"),
    ("'bru mang po", "vahudhvanya"),
    ("myos ldan", "pramadi"),
    ("rnam gnon", "vikrama"),
    ("khyu mchog", "brisabha"),
    ("sna tshogs", "citra"),
    ("nyi ma", "bhanu"),
    ("nyi sgrol byed", "bhanutara"),
    ("sa skyong", "virthapa"),
    ("mi zad", "aksaya"),
    ("thams cad 'dul", "sarvajit"),
    ("kun 'dzin", "sarvadhari"),
    ("'gal ba", "virodhi"),
    ("rnam 'gyur", "vikrita"),
    ("bong bu", "khara"),
    ("dga' ba", "nanda"),
    ("rnam rgyal", "vijaya"),
    ("rgyal ba", "jaya"),
    ("myos byed", "mada"),
    ("gdong ngan", "durmukha"),
    ("gser 'phyang", "hemalambha"),
    ("rnam 'phyang", "vilambhi"),
    ("sgyur byed", "vikari"),
    ("kun ldan", "sarvavati"),
    ("'phar ba", "slava"),
    ("dge byed", "subhakrita"),
    ("mdzes byed", "sobhana"),
    ("khro mo", "krodhi"),
    ("sna tshogs dbyig", "visvabandhu"),
    ("zil gnon", "parabhava"),
    ("spre'u", "pravamga"),
    ("phur bu", "kilaka"),
    ("zhi ba", "saumya"),
    ("thun mong", "sadharana"),
    ("'gal byed", "virobhakrita"),
    ("yongs 'dzin", "paradhari"),
    ("bag med", "pramadi"),
    ("kun dga'", "ananda"),
    ("srin bu", "raksasa"),
    ("me", "anala"),
    ("dmar ser can", "vingala"),
    ("dus kyi pho nya", "kaladuti"),
    ("don grub", "siddhartha"),
    ("drag po", "rudra"),
    ("blo ngan", "durmati"),
    ("rnga chen", "dundubhi"),
    ("khrag skyug", "rudhirura"),
    ("mig dmar", "raktaksi"),
    ("khro bo", "krodhana"),
    ("zad pa", "ksayaka"),
];

pub fn prabhava_name_table() -> &'static [(&'static str, &'static str); 60] {
    &PRABHAVA_NAMES
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YearName {
    pub element: Element,
    pub gender: Gender,
    pub animal: Animal,
    pub tibetan_name: &'static str,
    pub sanskrit_name: &'static str,
    pub chinese_cycle_index: i64,
    pub prabhava_cycle_number: i64,
    pub prabhava_year_index: i64,
    pub regnal_year: i64,
}

impl YearName {
    /// `"Fire-female-Pig"` style label.
    pub fn label(&self) -> String {
        format!("{}-{}-{}", self.element.capitalized(), self.gender.name(), self.animal.name())
    }

    pub fn short_label(&self) -> String {
        format!("{}-{}", self.element.capitalized(), self.animal.name())
    }
}

pub fn chinese_cycle_index(y: i64) -> i64 {
    amod(y - 3, 60)
}

/// Element of year `y`; each element covers two consecutive years.
pub fn year_element(y: i64) -> Element {
    Element::from_number(div_ceil(amod(y - 3, 10), 2))
}

pub fn year_animal(y: i64) -> Animal {
    Animal::from_number(y - 3)
}

pub fn year_name(y: i64) -> YearName {
    let index = amod(y - 6, 60);
    let animal = year_animal(y);
    let (tibetan_name, sanskrit_name) = PRABHAVA_NAMES[(index - 1) as usize];
    YearName {
        element: year_element(y),
        gender: animal.gender(),
        animal,
        tibetan_name,
        sanskrit_name,
        chinese_cycle_index: chinese_cycle_index(y),
        prabhava_cycle_number: div_ceil(y - 1026, 60),
        prabhava_year_index: index,
        regnal_year: y + 127,
    }
}

pub fn year_from_prabhava(cycle: i64, index: i64) -> Result<i64, Error> {
    if !(1..=60).contains(&index) {
        return Err(Error::OutOfRange(format!("Prabhava index {index} not in 1..=60")));
    }
    Ok(60 * cycle + index + 966)
}
