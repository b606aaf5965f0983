use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plucker::algebra::ExtensionConfig;
use plucker::analysis::{analyze, AnalysisOptions};
use plucker::census::{check_triple, enumerate, Verdict, ADMISSIBLE_MEANING};
use plucker::curve::HomogPoly;
use plucker::fixtures::{self, Kind};
use plucker::report::{census_csv, render_census, render_record, render_text};
use plucker::Error;

/// Virtual cusps and nodes of plane curves, Plücker identities, Hessian
/// audits and (d, c, n) census.
#[derive(Parser)]
#[command(name = "plucker", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a curve given as a homogeneous polynomial in x, y, z or as a
    /// curve fixture name.
    Analyze {
        curve: String,
        /// Treat the curve as irreducible when this cannot be verified.
        #[arg(long)]
        assume_irreducible: bool,
        /// Largest degree of algebraic coordinates to resolve.
        #[arg(long, value_name = "K", default_value_t = ExtensionConfig::default().bound)]
        extension_bound: usize,
        /// Intersect with the Hessian at every singular orbit.
        #[arg(long)]
        hessian: bool,
        /// Compute the dual curve and analyze it.
        #[arg(long)]
        dual: bool,
        /// Attach blow-up and numerical cross-checks.
        #[arg(long)]
        oracles: bool,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Check one triple (d, c, n) against the necessary conditions.
    Check {
        d: i64,
        c: i64,
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Check every triple of degree d.
    Census {
        d: i64,
        /// Write the full table as CSV ("-" for standard output).
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Built-in curves and germs.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Show { name: String },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::ExtensionOverflow { .. } | Error::UnresolvedOrbits(_) => 3,
        Error::NegativeGenus(_) => 1,
        _ => 2,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_code(e))
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Analyze {
            curve,
            assume_irreducible,
            extension_bound,
            hessian,
            dual,
            oracles,
            json,
            text: _,
        } => {
            let parsed = match fixtures::get(&curve).filter(|f| f.kind == Kind::Curve) {
                Some(f) => f.curve(),
                None => HomogPoly::parse(&curve),
            };
            let f = match parsed {
                Ok(f) => f,
                Err(e) => return fail(&e),
            };
            let extension = ExtensionConfig {
                bound: extension_bound,
                ..ExtensionConfig::default()
            };
            let opts = AnalysisOptions {
                assume_irreducible,
                extension,
                hessian,
                dual,
                oracles,
            };
            match analyze(&f, &opts) {
                Ok(report) => {
                    if json {
                        print!("{}", report.to_json());
                    } else {
                        print!("{}", render_text(&report));
                    }
                    for w in &report.warnings {
                        eprintln!("warning: {w}");
                    }
                    ExitCode::from(report.status.exit_code() as u8)
                }
                Err(e) => fail(&e),
            }
        }
        Command::Check { d, c, n, json } => match check_triple(d, c, n) {
            Ok(r) => {
                if json {
                    let mut v = serde_json::to_value(&r).unwrap();
                    v["note"] = ADMISSIBLE_MEANING.into();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                } else {
                    print!("{}", render_record(&r));
                }
                ExitCode::from(if r.verdict == Verdict::Admissible {
                    0
                } else {
                    1
                })
            }
            Err(e) => fail(&e),
        },
        Command::Census { d, csv } => match enumerate(d) {
            Ok(census) => {
                match csv {
                    Some(path) if path.as_os_str() == "-" => print!("{}", census_csv(&census)),
                    Some(path) => {
                        if let Err(e) = std::fs::write(&path, census_csv(&census)) {
                            eprintln!("error: cannot write {}: {e}", path.display());
                            return ExitCode::from(2);
                        }
                        print!("{}", render_census(&census));
                    }
                    None => print!("{}", render_census(&census)),
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Fixtures {
            action: FixtureAction::List,
        } => {
            for f in fixtures::all() {
                let kind = match f.kind {
                    Kind::Curve => "curve",
                    Kind::Germ => "germ",
                };
                println!("{:<24} {:<6} {}", f.name, kind, f.polynomial());
            }
            ExitCode::SUCCESS
        }
        Command::Fixtures {
            action: FixtureAction::Show { name },
        } => match fixtures::get(&name) {
            Some(f) => {
                println!("{}", f.polynomial());
                println!("{}", f.sidecar());
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("error: no fixture named {name}; see `plucker fixtures list`");
                ExitCode::from(2)
            }
        },
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
