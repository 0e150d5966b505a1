//! Tibetan calendar computations in exact rational arithmetic.
//!
//! Month and day numbering follow the Kalacakra and Phugpa-style
//! traditions, with Tsurphu, Mongolian, Bhutanese and karana variants.

pub mod almanac;
pub mod arith;
pub mod astrology;
pub mod astro;
pub mod civil;
pub mod cycles;
pub mod days;
pub mod months;
pub mod names;
pub mod planets;
pub mod traditions;

pub use arith::Rational;
pub use months::{MonthLabel, TrueMonth};
pub use traditions::{get_tradition, Tradition, TraditionConfig};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("digit {digit} out of range for radix {radix}")]
    DigitOutOfRange { digit: u64, radix: u64 },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown tradition {0:?}")]
    UnknownTradition(String),
    #[error("tradition {tradition} has no epoch {epoch}")]
    UnknownEpoch { tradition: String, epoch: i64 },
    #[error("{year}-{month:02} has no leap month")]
    NoLeapMonth { year: i64, month: i64 },
    #[error("{0} is not a repeated day")]
    NotRepeated(String),
    #[error("mean sun falls exactly on a definition point at month {0}")]
    DefinitionPointHit(i64),
    #[error("config: {0}")]
    Config(String),
    #[error("tradition {0} has no Rahu epoch")]
    MissingRahuEpoch(String),
}
