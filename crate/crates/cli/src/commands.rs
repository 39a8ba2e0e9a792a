//! Execution of the parsed subcommands.

use altwords::bijections::{
    ideal_to_word, map_123_to_321, map_312_to_123_odd, map_321_to_123, phi_132_to_123, phi_inverse,
    psi_odd, word_to_ideal,
};
use altwords::posets::IdealProfile;
use altwords::{compute_count, generate, CountMethod, CountTable, Direction, Word};

use crate::args::{
    Cli, Command, CountArgs, ListArgs, MapArgs, MapName, OutputFormat, TableArgs, VerifyArgs,
};
use crate::verify::{run_checks, suite_checks, thread_cap, Fixtures};
use crate::CliError;

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::List(args) => cmd_list(args),
        Command::Map(args) => cmd_map(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn require_alphabet(k: u32) -> Result<(), CliError> {
    if k >= 1 {
        Ok(())
    } else {
        Err(CliError::domain("alphabet size must be at least 1"))
    }
}

// picks the method and confirms it can handle the request; None falls back
// to the fastest exact route for the family
fn resolve_method(
    method: Option<CountMethod>,
    avoid: Option<altwords::Pattern3>,
    k: u32,
    lens: impl Iterator<Item = usize>,
) -> Result<CountMethod, CliError> {
    let method = method.unwrap_or(if avoid.is_some() {
        CountMethod::Formula
    } else {
        CountMethod::Recurrence
    });
    if !method.supports(avoid) {
        let family = match avoid {
            Some(p) => format!("words avoiding {p}"),
            None => "unrestricted words".to_string(),
        };
        return Err(CliError::domain(format!(
            "the {method} method cannot count {family}"
        )));
    }
    for len in lens {
        if !method.defined_at(k, len) {
            return Err(CliError::domain(format!(
                "the {method} method is not defined at k={k}, len={len}"
            )));
        }
    }
    Ok(method)
}

fn cmd_count(args: CountArgs) -> Result<(), CliError> {
    require_alphabet(args.k)?;
    let dir = args.dir.unwrap_or(Direction::UpDown);
    let method = resolve_method(args.method, args.avoid, args.k, std::iter::once(args.len))?;
    println!(
        "{}",
        compute_count(args.k, args.len, dir, args.avoid, method)
    );
    Ok(())
}

fn cmd_list(args: ListArgs) -> Result<(), CliError> {
    require_alphabet(args.k)?;
    let dir = args.dir.unwrap_or(Direction::UpDown);
    let mut stdout = String::new();
    for w in generate(args.k, args.len, dir) {
        if let Some(p) = args.avoid {
            if w.contains_pattern(p) {
                continue;
            }
        }
        stdout.push_str(&w.to_display_string());
        stdout.push('\n');
    }
    print!("{stdout}");
    Ok(())
}

fn cmd_map(args: MapArgs) -> Result<(), CliError> {
    require_alphabet(args.k)?;
    let parse_word =
        || Word::parse(&args.input, args.k).map_err(|e| CliError::domain(e.to_string()));
    let word_map =
        |f: fn(&Word) -> Result<Word, altwords::BijectionError>| -> Result<String, CliError> {
            let w = parse_word()?;
            let out = f(&w).map_err(|e| CliError::domain(e.to_string()))?;
            Ok(out.to_display_string())
        };
    let rendered = match args.which {
        MapName::WordToIdeal => {
            let w = parse_word()?;
            let profile = word_to_ideal(&w).map_err(|e| CliError::domain(e.to_string()))?;
            profile.to_string()
        }
        MapName::IdealToWord => {
            if args.k < 2 {
                return Err(CliError::domain(
                    "the ideal correspondence needs at least two letters",
                ));
            }
            let profile = IdealProfile::parse(&args.input, args.k - 2)
                .map_err(|e| CliError::domain(e.to_string()))?;
            let w = ideal_to_word(&profile).map_err(|e| CliError::domain(e.to_string()))?;
            w.to_display_string()
        }
        MapName::Even132To123 => word_map(phi_132_to_123)?,
        MapName::Even123To132 => word_map(phi_inverse)?,
        MapName::Odd132To123 => word_map(psi_odd)?,
        MapName::Odd312To123 => word_map(map_312_to_123_odd)?,
        MapName::Top123To321 => word_map(map_123_to_321)?,
        MapName::Top321To123 => word_map(map_321_to_123)?,
    };
    println!("{rendered}");
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    require_alphabet(args.k.lo)?;
    let dir = args.dir.unwrap_or(Direction::UpDown);
    let method = resolve_method(
        args.method,
        args.avoid,
        args.k.lo,
        args.len.lo..=args.len.hi,
    )?;
    // Ideal restrictions depend on k as well; the k floor is the tight case
    let table = CountTable::build(
        args.k.lo..=args.k.hi,
        args.len.lo..=args.len.hi,
        dir,
        args.avoid,
        method,
    );
    match args.format {
        OutputFormat::Csv => print!("{}", table.to_csv()),
        OutputFormat::Json => println!("{}", table.to_json()),
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let fixtures = Fixtures::default();
    let checks = suite_checks(args.suite, &fixtures);
    let report = run_checks(checks, thread_cap());
    print!("{}", report.render());
    if report.exit_code() == 0 {
        Ok(())
    } else {
        Err(CliError {
            code: 4,
            message: format!("{} of {} checks failed", report.failed(), report.total()),
        })
    }
}
