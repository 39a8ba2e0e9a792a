//! Command-line surface of the `altwords` binary.

use std::fmt;
use std::str::FromStr;

use altwords::{CountMethod, Direction, Pattern3};
use clap::{Parser, Subcommand};

/// Exact enumeration of alternating words over `{1, .., k}`, with and
/// without forbidden length-3 patterns.
#[derive(Debug, Parser)]
#[command(name = "altwords", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count alternating words of one length
    Count(CountArgs),
    /// List alternating words of one length, one per line
    List(ListArgs),
    /// Apply one of the constructive correspondences to a word or profile
    Map(MapArgs),
    /// Render a rectangle of counts as CSV or JSON
    Table(TableArgs),
    /// Re-derive the bundled reference data and cross-check all methods
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct CountArgs {
    /// Alphabet size (letters 1..=k)
    #[arg(long)]
    pub k: u32,
    /// Word length
    #[arg(long)]
    pub len: usize,
    /// Direction of the first step: updown or downup. Optional with
    /// --avoid, where it defaults to updown (the directions are
    /// equinumerous for every pattern).
    #[arg(long, value_parser = parse_direction, required_unless_present = "avoid")]
    pub dir: Option<Direction>,
    /// Forbidden length-3 pattern (123, 132, 213, 231, 312 or 321)
    #[arg(long, value_parser = Pattern3::from_str)]
    pub avoid: Option<Pattern3>,
    /// Counting method: formula, recurrence, brute or ideal. Defaults to
    /// formula with --avoid and recurrence without.
    #[arg(long, value_parser = CountMethod::from_str)]
    pub method: Option<CountMethod>,
}

#[derive(Debug, clap::Args)]
pub struct ListArgs {
    /// Alphabet size (letters 1..=k)
    #[arg(long)]
    pub k: u32,
    /// Word length
    #[arg(long)]
    pub len: usize,
    /// Direction of the first step: updown or downup. Optional with
    /// --avoid, where it defaults to updown.
    #[arg(long, value_parser = parse_direction, required_unless_present = "avoid")]
    pub dir: Option<Direction>,
    /// Keep only words avoiding this length-3 pattern
    #[arg(long, value_parser = Pattern3::from_str)]
    pub avoid: Option<Pattern3>,
}

#[derive(Debug, clap::Args)]
pub struct MapArgs {
    /// Which correspondence to apply
    #[arg(long, value_parser = MapName::from_str)]
    pub which: MapName,
    /// The word (or, for ideal-to-word, the height profile): a digit string
    /// like 3241423, or comma-separated letters like 10,2,11
    #[arg(long)]
    pub input: String,
    /// Alphabet size the input lives in
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    /// Alphabet sizes: an inclusive range like 2..7, or a single value
    #[arg(long, value_parser = parse_k_range)]
    pub k: RangeArg<u32>,
    /// Word lengths: an inclusive range like 0..10, or a single value
    #[arg(long, value_parser = parse_len_range)]
    pub len: RangeArg<usize>,
    /// Direction of the first step: updown or downup. Optional with
    /// --avoid, where it defaults to updown.
    #[arg(long, value_parser = parse_direction, required_unless_present = "avoid")]
    pub dir: Option<Direction>,
    /// Forbidden length-3 pattern
    #[arg(long, value_parser = Pattern3::from_str)]
    pub avoid: Option<Pattern3>,
    /// Counting method (defaults to formula with --avoid, else recurrence)
    #[arg(long, value_parser = CountMethod::from_str)]
    pub method: Option<CountMethod>,
    /// Output format
    #[arg(long, value_parser = OutputFormat::from_str, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Which checks to run
    #[arg(long, value_parser = Suite::from_str, default_value = "all")]
    pub suite: Suite,
}

/// An inclusive range `lo..hi`, or a single value standing for `v..v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeArg<T> {
    pub lo: T,
    pub hi: T,
}

impl<T> FromStr for RangeArg<T>
where
    T: FromStr + PartialOrd + Copy,
{
    type Err = String;

    fn from_str(s: &str) -> Result<RangeArg<T>, String> {
        let number = |part: &str| {
            part.parse::<T>()
                .map_err(|_| format!("cannot parse {part:?} as a number"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (number(a)?, number(b)?),
            None => {
                let v = number(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("range {s:?} is empty (write lo..hi with lo <= hi)"));
        }
        Ok(RangeArg { lo, hi })
    }
}

fn parse_k_range(s: &str) -> Result<RangeArg<u32>, String> {
    s.parse()
}

fn parse_len_range(s: &str) -> Result<RangeArg<usize>, String> {
    s.parse()
}

pub fn parse_direction(s: &str) -> Result<Direction, String> {
    match s {
        "updown" | "up-down" => Ok(Direction::UpDown),
        "downup" | "down-up" => Ok(Direction::DownUp),
        other => Err(format!(
            "unknown direction {other:?} (expected updown or downup)"
        )),
    }
}

/// The constructive correspondences exposed by `map`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    WordToIdeal,
    IdealToWord,
    Even132To123,
    Even123To132,
    Odd132To123,
    Odd312To123,
    Top123To321,
    Top321To123,
}

impl MapName {
    pub const ALL: [MapName; 8] = [
        MapName::WordToIdeal,
        MapName::IdealToWord,
        MapName::Even132To123,
        MapName::Even123To132,
        MapName::Odd132To123,
        MapName::Odd312To123,
        MapName::Top123To321,
        MapName::Top321To123,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::WordToIdeal => "word-to-ideal",
            MapName::IdealToWord => "ideal-to-word",
            MapName::Even132To123 => "132-to-123-even",
            MapName::Even123To132 => "123-to-132-even",
            MapName::Odd132To123 => "132-to-123-odd",
            MapName::Odd312To123 => "312-to-123-odd",
            MapName::Top123To321 => "123-to-321",
            MapName::Top321To123 => "321-to-123",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = String;

    fn from_str(s: &str) -> Result<MapName, String> {
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = MapName::ALL.iter().map(|m| m.as_str()).collect();
                format!("unknown map {s:?} (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<OutputFormat, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

/// The check suites understood by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Table2,
    Formulas,
    Bijections,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "table1" => Ok(Suite::Table1),
            "table2" => Ok(Suite::Table2),
            "formulas" => Ok(Suite::Formulas),
            "bijections" => Ok(Suite::Bijections),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?} (expected table1, table2, formulas, bijections or all)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("2..7".parse(), Ok(RangeArg { lo: 2u32, hi: 7 }));
        assert_eq!("4".parse(), Ok(RangeArg { lo: 4u32, hi: 4 }));
        assert_eq!("0..10".parse(), Ok(RangeArg { lo: 0usize, hi: 10 }));
        assert!("7..2".parse::<RangeArg<u32>>().is_err());
        assert!("x..2".parse::<RangeArg<u32>>().is_err());
        assert!("".parse::<RangeArg<u32>>().is_err());
        assert!("2..".parse::<RangeArg<u32>>().is_err());
    }

    #[test]
    fn directions_parse() {
        assert_eq!(parse_direction("updown"), Ok(Direction::UpDown));
        assert_eq!(parse_direction("down-up"), Ok(Direction::DownUp));
        assert!(parse_direction("sideways").is_err());
    }

    #[test]
    fn map_names_round_trip() {
        for m in MapName::ALL {
            assert_eq!(m.as_str().parse(), Ok(m));
        }
        assert!("word-to-word".parse::<MapName>().is_err());
    }

    #[test]
    fn command_line_shapes_parse() {
        use clap::Parser;
        let cli = Cli::try_parse_from([
            "altwords", "count", "--k", "4", "--len", "4", "--avoid", "123",
        ])
        .unwrap();
        match cli.command {
            Command::Count(args) => {
                assert_eq!(args.k, 4);
                assert_eq!(args.avoid, Some(Pattern3::P123));
                assert_eq!(args.dir, None);
            }
            _ => panic!("parsed into the wrong subcommand"),
        }
        // --dir is mandatory when no pattern is given
        assert!(Cli::try_parse_from(["altwords", "count", "--k", "4", "--len", "4"]).is_err());
        let cli = Cli::try_parse_from([
            "altwords", "table", "--k", "2..7", "--len", "0..10", "--dir", "downup",
        ])
        .unwrap();
        match cli.command {
            Command::Table(args) => {
                assert_eq!(args.k, RangeArg { lo: 2, hi: 7 });
                assert_eq!(args.len, RangeArg { lo: 0, hi: 10 });
                assert_eq!(args.dir, Some(Direction::DownUp));
                assert_eq!(args.format, OutputFormat::Csv);
            }
            _ => panic!("parsed into the wrong subcommand"),
        }
    }
}
