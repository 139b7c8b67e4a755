//! `minions` — command-line front end for the classification library.
//!
//! Subcommands map one-to-one onto the library's public operations.  Truth
//! tables are written `"n:bits"`: the arity, a colon, and 2ⁿ binary digits
//! with row 0 first; row `i` encodes the argument tuple whose *first*
//! coordinate is the most significant bit of `i`.
//!
//! Output is deterministic.  `--format json` emits one JSON object on
//! stdout whose shape is pinned by `schema/output.schema.json`; `--format
//! dot` renders the class lattice for Graphviz.
//!
//! Exit status: 0 on success, 1 when an input fails validation, 2 on
//! command-line usage errors, 3 when a `verify-*` command finds a
//! mismatch.

use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use minions::{
    class_member, extend_sm, generated_class, generation_check_arity, sm_closure, sm_decompose,
    stable_classes_for, standard_lattice, verify_roster, verify_table2, Bound, ClassId, CloneId,
    PointSets, StableListing, TruthTable, HARD_MAX_ARITY,
};

#[derive(Parser)]
#[command(
    name = "minions",
    version,
    about = "Classify Boolean functions into the 93 classes stable under majority composition",
    long_about = "Classify Boolean functions into the 93 classes stable under majority \
                  composition, compute closures and decompositions, and re-verify the \
                  classification exhaustively.\n\nTruth tables are written \"n:bits\": the \
                  arity, a colon, and 2^n binary digits with row 0 first; row i encodes the \
                  argument tuple whose first coordinate is the most significant bit of i. \
                  Example: the two-argument AND is 2:0001."
)]
struct Cli {
    /// Output format (`dot` applies to `lattice` only)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Working arity cap for parsing and closure computation, 1..=20
    /// (takes precedence over the MINION_MAX_ARITY environment variable)
    #[arg(long, global = true, value_name = "N")]
    max_arity: Option<u8>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the smallest class containing all the given functions
    Classify {
        /// Truth tables ("n:bits"); with none given, the empty class
        #[arg(value_name = "FN")]
        fns: Vec<String>,
    },
    /// List the arity-M slice of the class generated by the functions
    Closure {
        /// Slice arity
        #[arg(long, value_name = "M")]
        arity: u8,
        /// Generator truth tables
        #[arg(value_name = "FN")]
        fns: Vec<String>,
    },
    /// Test whether a function belongs to a class
    Member {
        /// Class name, e.g. McU
        #[arg(long, value_name = "NAME")]
        class: String,
        /// Truth table to test
        #[arg(value_name = "FN")]
        function: String,
    },
    /// List all arity-M minors of a function
    Minors {
        /// Minor arity
        #[arg(long, value_name = "M")]
        arity: u8,
        /// Source truth table
        #[arg(value_name = "FN")]
        function: String,
    },
    /// Write a target as a self-dual monotone function of minors of the
    /// generators
    Decompose {
        /// Generator truth tables
        #[arg(long, value_name = "FN", num_args = 1.., required = true)]
        gens: Vec<String>,
        /// Target truth table (must lie in the closure of the generators)
        #[arg(value_name = "TARGET")]
        target: String,
    },
    /// Extend prescribed true/false points to a self-dual monotone function
    #[command(name = "extend-sm")]
    ExtendSm {
        /// Arity of the extension
        #[arg(long, value_name = "N")]
        n: u8,
        /// Rows required true, as bit-strings like 110 (first argument first)
        #[arg(long = "true", value_name = "TUPLE", num_args = 1.., action = clap::ArgAction::Append)]
        trues: Vec<String>,
        /// Rows required false
        #[arg(long = "false", value_name = "TUPLE", num_args = 1.., action = clap::ArgAction::Append)]
        falses: Vec<String>,
    },
    /// Print the inclusion order of the 93 classes
    Lattice {
        /// Emit the Hasse diagram in DOT (same as --format dot)
        #[arg(long)]
        dot: bool,
    },
    /// Check that every class slice is minor- and majority-closed and that
    /// the 93 classes are pairwise distinct
    #[command(name = "verify-93")]
    Verify93 {
        /// Largest arity to check (1..=4)
        #[arg(long, value_name = "M", default_value_t = 4)]
        arity: u8,
    },
    /// Re-derive the stability table by exhaustive bounded composition
    #[command(name = "verify-table")]
    VerifyTable {
        /// Arity bound "k,m": clone members up to arity k composed with
        /// class members up to arity m
        #[arg(long, value_name = "K,M", default_value = "3,3")]
        bound: String,
    },
    /// List the classes stable under a pair of acting clones
    #[command(name = "stable-for")]
    StableFor {
        /// Clone substituted from the right (inner arguments)
        #[arg(long, value_name = "NAME")]
        c1: String,
        /// Clone composed from the left (outer function)
        #[arg(long, value_name = "NAME")]
        c2: String,
    },
}

/// Writes one line to stdout, exiting with the conventional SIGPIPE status
/// when the reader has closed the pipe (e.g. `minions lattice | head`).
macro_rules! outln {
    ($($arg:tt)*) => {
        if let Err(err) = writeln!(io::stdout(), $($arg)*) {
            if err.kind() == io::ErrorKind::BrokenPipe {
                std::process::exit(141);
            }
            panic!("failed writing to stdout: {err}");
        }
    };
}

/// Exit code 1: the command line was well-formed but an input value was
/// rejected.  Exit code 3: a verification command found a mismatch.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(err: impl Display) -> Failure {
        Failure {
            code: 1,
            message: err.to_string(),
        }
    }

    fn mismatch(message: String) -> Failure {
        Failure { code: 3, message }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.max_arity {
        if !(1..=HARD_MAX_ARITY).contains(&n) {
            return Err(Failure::validation(format!(
                "--max-arity must lie in 1..={HARD_MAX_ARITY}, got {n}"
            )));
        }
        // The library reads the variable once, on first use, which is
        // still ahead of us.
        std::env::set_var("MINION_MAX_ARITY", n.to_string());
    }
    if cli.format == Some(Format::Dot) && !matches!(cli.command, Command::Lattice { .. }) {
        return Err(Failure::validation("dot output is only available for `lattice`"));
    }
    let format = cli.format.unwrap_or(Format::Text);

    match cli.command {
        Command::Classify { fns } => {
            let fns = parse_tables(&fns)?;
            let class = generated_class(&fns).map_err(Failure::validation)?;
            let checked = generation_check_arity(&fns);
            emit(format, json!({
                "command": "classify",
                "class": class,
                "checked_arity": checked,
            }), || {
                outln!("{class}");
                eprintln!("cross-checked against the closure up to arity {checked}");
            });
            Ok(())
        }
        Command::Closure { arity, fns } => {
            let fns = parse_tables(&fns)?;
            let slice = sm_closure(&fns, arity).map_err(Failure::validation)?;
            let functions: Vec<&TruthTable> = slice.iter().collect();
            emit(format, json!({
                "command": "closure",
                "arity": arity,
                "count": functions.len(),
                "functions": functions,
            }), || {
                for t in slice.iter() {
                    outln!("{t}");
                }
            });
            Ok(())
        }
        Command::Member { class, function } => {
            let class: ClassId = class.parse().map_err(Failure::validation)?;
            let f: TruthTable = function.parse().map_err(Failure::validation)?;
            let member = class_member(class, &f);
            emit(format, json!({
                "command": "member",
                "class": class,
                "function": f,
                "member": member,
            }), || outln!("{member}"));
            Ok(())
        }
        Command::Minors { arity, function } => {
            let f: TruthTable = function.parse().map_err(Failure::validation)?;
            let minors = f.all_minors(arity).map_err(Failure::validation)?;
            emit(format, json!({
                "command": "minors",
                "function": &f,
                "arity": arity,
                "count": minors.len(),
                "minors": &minors,
            }), || {
                for t in &minors {
                    outln!("{t}");
                }
            });
            Ok(())
        }
        Command::Decompose { gens, target } => {
            let gens = parse_tables(&gens)?;
            let target: TruthTable = target.parse().map_err(Failure::validation)?;
            let d = sm_decompose(&target, &gens).map_err(Failure::validation)?;
            let tables = d
                .minor_tables(&gens, target.arity())
                .map_err(Failure::validation)?;
            emit(format, json!({
                "command": "decompose",
                "target": &target,
                "outer": &d.h,
                "inner": &d.phis,
                "inner_tables": &tables,
            }), || {
                outln!("outer = {}", d.h);
                for (i, (phi, t)) in d.phis.iter().zip(&tables).enumerate() {
                    let sigma: Vec<String> = phi.sigma.iter().map(u8::to_string).collect();
                    outln!(
                        "phi[{i}] = gens[{}] sigma ({}) = {t}",
                        phi.gen_index,
                        sigma.join(", ")
                    );
                }
            });
            Ok(())
        }
        Command::ExtendSm { n, trues, falses } => {
            if !(1..=HARD_MAX_ARITY).contains(&n) {
                return Err(Failure::validation(format!(
                    "--n must lie in 1..={HARD_MAX_ARITY}, got {n}"
                )));
            }
            let true_rows = parse_tuples(&trues, n)?;
            let false_rows = parse_tuples(&falses, n)?;
            let ps = PointSets::new(n, true_rows, false_rows).map_err(Failure::validation)?;
            let g = extend_sm(&ps).map_err(Failure::validation)?;
            emit(format, json!({
                "command": "extend-sm",
                "arity": n,
                "function": &g,
                "true_points": trues,
                "false_points": falses,
            }), || outln!("{g}"));
            Ok(())
        }
        Command::Lattice { dot } => {
            let lat = standard_lattice();
            let effective = match (dot, cli.format) {
                (true, None) | (true, Some(Format::Dot)) => Format::Dot,
                (true, Some(_)) => {
                    return Err(Failure::validation("--dot conflicts with --format"))
                }
                (false, f) => f.unwrap_or(Format::Text),
            };
            match effective {
                Format::Dot => out_block(lat.to_dot()),
                Format::Text => {
                    for &(lo, hi) in lat.covers() {
                        outln!("{lo} < {hi}");
                    }
                }
                Format::Json => print_json(tagged("lattice", lat)),
            }
            Ok(())
        }
        Command::Verify93 { arity } => {
            let report = verify_roster(arity).map_err(Failure::validation)?;
            emit(format, tagged("verify-93", &report), || out_block(&report));
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::mismatch(format!(
                    "{} roster violation(s) at arity <= {arity}",
                    report.violations.len()
                )))
            }
        }
        Command::VerifyTable { bound } => {
            let bound: Bound = bound.parse().map_err(Failure::validation)?;
            let report = verify_table2(bound);
            emit(format, tagged("verify-table", &report), || out_block(&report));
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::mismatch(format!(
                    "{} stability mismatch(es) at bound {bound}",
                    report.mismatches.len()
                )))
            }
        }
        Command::StableFor { c1, c2 } => {
            let c1: CloneId = c1.parse().map_err(Failure::validation)?;
            let c2: CloneId = c2.parse().map_err(Failure::validation)?;
            let classes = stable_classes_for(c1, c2).map_err(Failure::validation)?;
            let listing = StableListing {
                right_clone: c1,
                left_clone: c2,
                classes,
            };
            emit(format, tagged("stable-for", &listing), || out_block(&listing));
            Ok(())
        }
    }
}

fn parse_tables(inputs: &[String]) -> Result<Vec<TruthTable>, Failure> {
    inputs
        .iter()
        .map(|s| s.parse::<TruthTable>().map_err(Failure::validation))
        .collect()
}

/// Parses a row tuple written as a bit-string of exactly `n` digits, the
/// first argument first, into its row index.
fn parse_tuple(s: &str, n: u8) -> Result<u32, Failure> {
    if s.len() != n as usize {
        return Err(Failure::validation(format!(
            "tuple {s:?} must have exactly {n} binary digits"
        )));
    }
    s.chars().try_fold(0u32, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok(acc << 1 | 1),
        _ => Err(Failure::validation(format!(
            "tuple {s:?} may only contain the digits 0 and 1"
        ))),
    })
}

fn parse_tuples(inputs: &[String], n: u8) -> Result<Vec<u32>, Failure> {
    inputs.iter().map(|s| parse_tuple(s, n)).collect()
}

/// Attaches the `command` discriminator to a serialized report or listing.
fn tagged(command: &str, value: impl serde::Serialize) -> Value {
    let mut v = serde_json::to_value(value).expect("library types serialize");
    v.as_object_mut()
        .expect("library reports serialize as objects")
        .insert("command".to_owned(), command.into());
    v
}

/// Writes a multi-line rendering (a report, listing, or DOT document) that
/// already ends in a newline, with the same pipe handling as [`outln!`].
fn out_block(block: impl Display) {
    if let Err(err) = write!(io::stdout(), "{block}") {
        if err.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(141);
        }
        panic!("failed writing to stdout: {err}");
    }
}

fn print_json(value: Value) {
    outln!("{}", serde_json::to_string_pretty(&value).expect("JSON value serializes"));
}

fn emit(format: Format, json: Value, text: impl FnOnce()) {
    match format {
        Format::Text => text(),
        Format::Json => print_json(json),
        Format::Dot => unreachable!("dot output is rejected before dispatch"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_parse_most_significant_first() {
        assert_eq!(parse_tuple("110", 3).unwrap(), 0b110);
        assert_eq!(parse_tuple("001", 3).unwrap(), 1);
        assert_eq!(parse_tuple("0", 1).unwrap(), 0);
        assert!(parse_tuple("10", 3).is_err());
        assert!(parse_tuple("1a0", 3).is_err());
    }

    #[test]
    fn command_line_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
