mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use commands::{parse_day, parse_day_range, ConvertInput, YearRange};
use output::{render, Format, Table};
use tibcal::traditions::{load_override, parse_tradition_spec, A2Variant};
use tibcal::{Error, TraditionConfig};

#[derive(Parser)]
#[command(name = "tibcal", version, about = "Tibetan calendar conversions, almanacs and tables")]
struct Cli {
    /// Tradition, optionally with an epoch year: `phugpa`, `phugpa:1927`.
    #[arg(short, long, global = true, env = "TIBCAL_TRADITION", default_value = "phugpa")]
    tradition: String,

    /// Epoch year, overriding one given with --tradition.
    #[arg(long, global = true)]
    epoch: Option<i64>,

    /// TOML file of constant overrides; replaces --tradition.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    /// Anomaly rate a2.
    #[arg(long, global = true, value_enum)]
    a2: Option<A2Arg>,

    #[arg(short, long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum A2Arg {
    Standard,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Convert one day between civil, JD and Tibetan reckoning.
    #[command(group(ArgGroup::new("input").required(true).args(["date", "jd", "tibetan"])))]
    Convert {
        /// Civil date `YYYY-MM-DD`, Julian with a trailing `J`.
        #[arg(long)]
        date: Option<String>,
        #[arg(long)]
        jd: Option<i64>,
        /// `YYYY-MM[L]-DD[a|b]`.
        #[arg(long)]
        tibetan: Option<String>,
    },
    /// New Year days.
    Losar { years: YearRange },
    /// Leap months per year.
    LeapMonths { years: YearRange },
    /// Daily almanac for a Tibetan year.
    Almanac {
        year: i64,
        #[arg(long)]
        month: Option<i64>,
    },
    /// Sign entries, solstices and other solar days.
    SpecialDays {
        year: i64,
        /// Use the month-based traditional reckoning.
        #[arg(long)]
        traditional: bool,
    },
    /// Fast planet longitudes in mansions, with Rahu.
    Planets {
        #[arg(value_parser = parse_day_range)]
        days: (i64, i64),
    },
    /// Astrological attributes of a day.
    Attributes {
        #[arg(value_parser = parse_day)]
        day: i64,
    },
    /// New Year, leap months and irregular days side by side.
    Compare {
        #[arg(long, default_value = "phugpa,tsurphu,mongolia,bhutan")]
        traditions: String,
        years: YearRange,
    },
    /// Built-in constants and name tables.
    Tables,
}

pub enum CliError {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Config(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn config(cli: &Cli) -> Result<TraditionConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            load_override(&text)?
        }
        None => {
            let spec = match cli.epoch {
                Some(e) => format!("{}:{e}", cli.tradition.split(':').next().unwrap_or_default()),
                None => cli.tradition.clone(),
            };
            parse_tradition_spec(&spec)?
        }
    };
    if let Some(a2) = cli.a2 {
        cfg = cfg.with_a2(match a2 {
            A2Arg::Standard => A2Variant::Standard,
            A2Arg::Exact => A2Variant::Exact,
        });
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<Option<CliError>, CliError> {
    let cfg = config(cli)?;
    let mut deferred = None;
    let tables: Vec<Table> = match &cli.command {
        Command::Convert { date, jd, tibetan } => {
            let input = match (date, jd, tibetan) {
                (Some(d), _, _) => ConvertInput::Jd(parse_day(d).map_err(CliError::Usage)?),
                (_, Some(j), _) => ConvertInput::Jd(*j),
                (_, _, Some(t)) => ConvertInput::Tibetan(t.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?),
                _ => unreachable!("clap requires one input"),
            };
            let (t, err) = commands::convert(&cfg, input)?;
            deferred = err;
            vec![t]
        }
        Command::Losar { years } => vec![commands::losar_table(&cfg, *years)],
        Command::LeapMonths { years } => vec![commands::leap_table(&cfg, *years)],
        Command::Almanac { year, month } => vec![commands::almanac(&cfg, *year, *month)?],
        Command::SpecialDays { year, traditional } => vec![commands::special(&cfg, *year, *traditional)],
        Command::Planets { days } => vec![commands::planets(&cfg, days.0, days.1)],
        Command::Attributes { day } => vec![commands::attributes(&cfg, *day)?],
        Command::Compare { traditions, years } => {
            let cfgs = commands::parse_traditions(traditions)?;
            if cfgs.is_empty() {
                return Err(CliError::Usage("no traditions given".into()));
            }
            commands::compare(&cfgs, *years)?
        }
        Command::Tables => commands::tables(),
    };
    let mut out = io::stdout().lock();
    render(&mut out, &tables, cli.format)?;
    out.flush()?;
    Ok(deferred)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let err = match run(&cli) {
        Ok(None) => return ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => e,
    };
    match err {
        CliError::Usage(m) => {
            eprintln!("tibcal: {m}");
            ExitCode::from(2)
        }
        CliError::Domain(m) => {
            eprintln!("tibcal: {m}");
            ExitCode::from(3)
        }
        CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        CliError::Io(e) => {
            eprintln!("tibcal: {e}");
            ExitCode::FAILURE
        }
    }
}
