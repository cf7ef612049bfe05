//! The `matroid-color` command line.
//!
//! Every command reads JSON files, prints one JSON object on standard output
//! and exits with 0 (success, feasible), 2 (infeasible, certificate printed)
//! or 1 (usage or input error, error object printed). Object keys are sorted
//! so equal inputs give byte-identical output.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::{
    self, check_theorem2, chromatic_number, color_from_lists, corollary_lists, ColoringOutcome, ListAssignment,
    PremiseStatus, SizeFunction,
};
use crate::error::{Error, Result};
use crate::exchange;
use crate::io::{self, BasesFile, FamiliesFile};
use crate::matroid::Matroid;
use crate::oracle;
use crate::partition::{self, DeficiencyCertificate};
use crate::set::ElementSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "matroid-color", version, about = "List colouring and base exchange for matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank of a subset.
    Rank {
        #[arg(long)]
        matroid: PathBuf,
        /// Comma-separated element ids, e.g. `0,1,2` or `[0,1,2]`.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Chromatic number of a loopless matroid.
    Chroma {
        #[arg(long)]
        matroid: PathBuf,
    },
    /// Colour from a list file, or from constant lists `{1..k}`.
    Color {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        lists: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Base-exchange witness for two bases.
    Exchange {
        #[arg(long)]
        matroid: PathBuf,
        /// `{"first": [...], "second": [...]}`.
        #[arg(long)]
        bases: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Element of the first basis (single exchange).
        #[arg(long)]
        element: Option<usize>,
        /// Subset of the first basis (multiple exchange).
        #[arg(long)]
        subset: Option<String>,
        /// JSON array of parts partitioning the second basis.
        #[arg(long)]
        parts: Option<PathBuf>,
    },
    /// Random trials of list colourability for fixed list sizes.
    #[command(name = "verify-theorem2")]
    VerifyTheorem2 {
        #[arg(long)]
        matroid: PathBuf,
        /// JSON array of list sizes.
        #[arg(long, conflicts_with = "k", required_unless_present = "k")]
        sizes: Option<PathBuf>,
        /// Constant sizes `k`, or with `--corollary` the sizes read off a
        /// `k`-colouring.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        corollary: bool,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive rank-axiom and base-exchange checks.
    Axioms {
        #[arg(long)]
        matroid: PathBuf,
    },
    /// Uncrossing trace for a list file or an explicit pair of families.
    Uncross {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, conflicts_with = "families", required_unless_present = "families")]
        lists: Option<PathBuf>,
        /// `{"family": [...], "canonical": [...]}`.
        #[arg(long)]
        families: Option<PathBuf>,
        /// Evaluation set; defaults to the whole ground set.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Brute-force oracles, for debugging.
    #[command(hide = true)]
    Oracle {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long, value_enum)]
        op: OracleOp,
        #[arg(long)]
        lists: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Single,
    Multi,
    Into,
    From,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleOp {
    Color,
    Bases,
    MinDeficiency,
    Edmonds,
}

/// Exit code and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
}

impl CliOutput {
    fn json(code: i32, value: Value) -> Self {
        CliOutput { code, stdout: format!("{value}\n") }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Construction(_) => "construction",
        Error::ElementOutOfRange { .. } => "element-out-of-range",
        Error::GroundSetTooLarge { .. } => "ground-set-too-large",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::Argument(_) => "argument",
        Error::Contract(_) => "contract",
        Error::Loop { .. } => "loop",
        Error::Infeasible(_) => "infeasible",
        Error::Internal(_) => "internal",
    }
}

fn error_output(kind: &str, message: String) -> CliOutput {
    CliOutput::json(EXIT_ERROR, json!({ "error": { "kind": kind, "message": message } }))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CliOutput { code: EXIT_OK, stdout: e.to_string() };
            }
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return error_output("usage", first);
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => error_output(error_kind(&e), e.to_string()),
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("output types serialise")
}

fn parse_subset(text: &str, m: &Matroid) -> Result<ElementSet> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let ids = trimmed
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| Error::Argument(format!("'{s}' is not an element id"))))
        .collect::<Result<Vec<_>>>()?;
    ElementSet::from_elements(ids, m.size())
}

fn certificate_value(cert: &DeficiencyCertificate) -> Value {
    to_value(cert)
}

fn execute(command: Command) -> Result<CliOutput> {
    match command {
        Command::Rank { matroid, subset } => {
            let m = io::read_matroid(&matroid)?;
            let set = parse_subset(&subset, &m)?;
            Ok(CliOutput::json(EXIT_OK, json!({ "rank": m.rank(set)? })))
        }
        Command::Chroma { matroid } => {
            let m = io::read_matroid(&matroid)?;
            Ok(CliOutput::json(EXIT_OK, json!({ "chi": chromatic_number(&m)? })))
        }
        Command::Color { matroid, lists, k } => {
            let m = io::read_matroid(&matroid)?;
            let lists = load_lists(lists.as_deref(), k, &m)?;
            Ok(match color_from_lists(&m, &lists)? {
                ColoringOutcome::Colored(c) => CliOutput::json(EXIT_OK, json!({ "status": "colored", "coloring": c })),
                ColoringOutcome::Deficient(cert) => CliOutput::json(
                    EXIT_INFEASIBLE,
                    json!({ "status": "infeasible", "certificate": certificate_value(&cert) }),
                ),
            })
        }
        Command::Exchange { matroid, bases, variant, element, subset, parts } => {
            let m = io::read_matroid(&matroid)?;
            let BasesFile { first, second } = io::read_json(&bases, "bases")?;
            let load_parts = || -> Result<Vec<ElementSet>> {
                let path = parts.as_deref().ok_or_else(|| Error::Argument("--parts is required".into()))?;
                io::read_json(path, "parts")
            };
            let witness = match variant {
                VariantArg::Single => {
                    let e = element.ok_or_else(|| Error::Argument("--element is required".into()))?;
                    exchange::symmetric_exchange(&m, first, second, e)?
                }
                VariantArg::Multi => {
                    let a1 = parse_subset(subset.as_deref().unwrap_or(""), &m)?;
                    exchange::multi_symmetric_exchange(&m, first, second, a1)?
                }
                VariantArg::Into => exchange::partition_exchange_into(&m, first, second, &load_parts()?)?,
                VariantArg::From => exchange::partition_exchange_from(&m, first, second, &load_parts()?)?,
            };
            Ok(CliOutput::json(EXIT_OK, to_value(&witness)))
        }
        Command::VerifyTheorem2 { matroid, sizes, k, corollary, trials, seed } => {
            let m = io::read_matroid(&matroid)?;
            let sizes = match (sizes, k) {
                (Some(path), _) => io::read_json::<SizeFunction>(&path, "sizes")?,
                (None, Some(k)) if corollary => corollary_lists(&m, k)?,
                (None, Some(k)) => SizeFunction::constant(k, m.size())?,
                (None, None) => return Err(Error::Argument("--sizes or --k is required".into())),
            };
            if sizes.len() != m.size() {
                return Err(Error::Argument(format!("{} sizes for {} elements", sizes.len(), m.size())));
            }
            let report = check_theorem2(&m, &sizes, trials, seed)?;
            let code = if report.violated() {
                EXIT_ERROR
            } else if report.premise == PremiseStatus::PremiseFalse {
                EXIT_INFEASIBLE
            } else {
                EXIT_OK
            };
            let mut value = to_value(&report);
            value["violation"] = json!(report.violated());
            Ok(CliOutput::json(code, value))
        }
        Command::Axioms { matroid } => {
            let m = io::read_matroid(&matroid)?;
            let rank_axioms = oracle::bf_check_rank_axioms(&m)?;
            let exchange = oracle::bf_base_exchange_report(&m)?;
            let code = if rank_axioms && exchange.holds() { EXIT_OK } else { EXIT_ERROR };
            Ok(CliOutput::json(code, json!({ "rank_axioms": rank_axioms, "base_exchange": exchange })))
        }
        Command::Uncross { matroid, lists, families, subset } => {
            let m = io::read_matroid(&matroid)?;
            let subset = match subset {
                Some(s) => parse_subset(&s, &m)?,
                None => m.elements(),
            };
            let trace = match (lists, families) {
                (Some(path), _) => {
                    let lists: ListAssignment = io::read_json(&path, "lists")?;
                    coloring::uncross_lists(&m, &lists, subset)?
                }
                (None, Some(path)) => {
                    let FamiliesFile { family, canonical } = io::read_json(&path, "families")?;
                    coloring::uncross_verify(&m, &family, &canonical, subset)?
                }
                (None, None) => return Err(Error::Argument("--lists or --families is required".into())),
            };
            let code = if trace.holds() { EXIT_OK } else { EXIT_ERROR };
            let mut value = to_value(&trace);
            value["holds"] = json!(trace.holds());
            Ok(CliOutput::json(code, value))
        }
        Command::Oracle { matroid, op, lists } => {
            let m = io::read_matroid(&matroid)?;
            match op {
                OracleOp::Color => {
                    let lists = load_lists(lists.as_deref(), None, &m)?;
                    Ok(match oracle::bf_color_from_lists(&m, &lists)? {
                        Some(c) => CliOutput::json(EXIT_OK, json!({ "coloring": c })),
                        None => CliOutput::json(EXIT_INFEASIBLE, json!({ "coloring": null })),
                    })
                }
                OracleOp::Bases => Ok(CliOutput::json(EXIT_OK, json!({ "bases": oracle::bf_all_bases(&m)? }))),
                OracleOp::MinDeficiency => {
                    let lists = load_lists(lists.as_deref(), None, &m)?;
                    let problem = coloring::list_problem(&m, &lists)?;
                    let (set, value) = partition::min_deficiency_bruteforce(&problem)?;
                    let code = if value < 0 { EXIT_INFEASIBLE } else { EXIT_OK };
                    Ok(CliOutput::json(code, json!({ "set": set, "value": value })))
                }
                OracleOp::Edmonds => Ok(CliOutput::json(
                    EXIT_OK,
                    json!({ "chi": coloring::edmonds_formula_bruteforce(&m)? }),
                )),
            }
        }
    }
}

fn load_lists(path: Option<&Path>, k: Option<usize>, m: &Matroid) -> Result<ListAssignment> {
    let lists = match (path, k) {
        (Some(path), _) => io::read_json::<ListAssignment>(path, "lists")?,
        (None, Some(k)) => ListAssignment::constant(k, m.size())?,
        (None, None) => return Err(Error::Argument("--lists is required".into())),
    };
    if lists.len() != m.size() {
        return Err(Error::Argument(format!("{} lists for {} elements", lists.len(), m.size())));
    }
    Ok(lists)
}
