//! Command-line front end. Every subcommand reads flags plus optional JSON
//! files and writes a single JSON document to stdout.
//!
//! Exit codes: 0 success, 2 invalid input, 3 enumeration bound exceeded,
//! 4 broken internal invariant (including a fractional stall of the
//! cutting-plane loop where the cut family is known to be complete).

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use circulant_cover::error::Error;
use circulant_cover::inequality::{boolean_facets, minor_inequality, rank_inequality};
use circulant_cover::json::{parse_rat_array, InequalityDto};
use circulant_cover::minors::{cert_from_transversal, MinorCert, MinorCertDto};
use circulant_cover::solver::{
    conjecture_scan, enumerate_s1_inequalities, random_weights, solve_cutting_plane,
    solve_ip_bruteforce,
};
use circulant_cover::{CirculantInstance, IndexSet, Limits};

#[derive(Parser)]
#[command(
    name = "circulant-cover",
    about = "Exact set covering on circulant matrices",
    version
)]
struct Cli {
    /// Override the enumeration bound on n.
    #[arg(long, global = true)]
    max_n: Option<u32>,
    /// Override the candidate-count cap for exhaustive searches.
    #[arg(long, global = true)]
    max_candidates: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct InstanceArgs {
    /// Number of columns.
    #[arg(long)]
    n: u32,
    /// Ones per row.
    #[arg(long)]
    k: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an instance and echo it as JSON.
    Gen(InstanceArgs),
    /// Covering number.
    Tau(InstanceArgs),
    /// List covers (all of them, or only the minimal ones).
    Covers {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Restrict the listing to minimal covers.
        #[arg(long)]
        minimal: bool,
    },
    /// Circulant-minor certificates.
    #[command(subcommand)]
    Minor(MinorCmd),
    /// Emit inequalities of the named family.
    #[command(subcommand)]
    Ineq(IneqCmd),
    /// Run the separation oracle on a fractional point.
    Separate {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON file holding the point as an array of rationals.
        #[arg(long)]
        point: String,
    },
    /// Solve the weighted covering problem.
    Solve {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON file holding the weights; random seeded weights when absent.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_parser = ["bruteforce", "cuts"], default_value = "cuts")]
        method: String,
        /// Seed for generated weights.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verification reports.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Enumerate all transversal inequalities with certificates and facet
    /// reports.
    Describe(InstanceArgs),
    /// Tabulate conjecture form against verified facetness.
    Conjecture(InstanceArgs),
}

#[derive(Subcommand)]
enum MinorCmd {
    /// Build the certificate defined by a transversal of the canonical
    /// minimum covers.
    FromW {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Comma-separated column list, e.g. `0,5,8,15,16,19`.
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand)]
enum IneqCmd {
    /// Minor inequality of a certificate file.
    Minor {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON certificate produced by `minor from-w`.
        #[arg(long)]
        cert: String,
    },
    /// The rank constraint (as a one-element list).
    Rank(InstanceArgs),
    /// The 3n boolean facets.
    Boolean(InstanceArgs),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Root enumeration, affine rank and the structural battery.
    Facet {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON inequality file.
        #[arg(long)]
        ineq: String,
    },
}

fn instance(args: InstanceArgs) -> Result<CirculantInstance, Error> {
    CirculantInstance::new(args.n, args.k)
}

fn read_file(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}

/// Accepts a single inequality document or a one-element list of them, so
/// the outputs of `ineq minor` and `ineq rank` both feed straight back in.
fn read_inequality_document(text: &str) -> Result<InequalityDto, Error> {
    if let Ok(dto) = serde_json::from_str::<InequalityDto>(text) {
        return Ok(dto);
    }
    let list: Vec<InequalityDto> = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad inequality file: {e}")))?;
    match <[InequalityDto; 1]>::try_from(list) {
        Ok([dto]) => Ok(dto),
        Err(list) => Err(Error::InvalidInput(format!(
            "expected one inequality, file holds {}",
            list.len()
        ))),
    }
}

fn parse_w(inst: &CirculantInstance, text: &str) -> Result<IndexSet, Error> {
    let members = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad column index `{t}`")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    IndexSet::from_members(inst.n(), members)
}

fn run(cli: Cli) -> Result<i32, Error> {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_n {
        limits.max_enum_n = n;
    }
    if let Some(c) = cli.max_candidates {
        limits.max_candidates = c;
    }

    match cli.command {
        Command::Gen(args) => print_json(&instance(args)?),
        Command::Tau(args) => {
            let inst = instance(args)?;
            print_json(&json!({ "tau": inst.covering_number() }));
        }
        Command::Covers { inst, minimal } => {
            let inst = instance(inst)?;
            let covers = if minimal {
                circulant_cover::covers::enumerate_minimal_covers(&inst, &limits)?
            } else {
                circulant_cover::covers::all_covers(&inst, &limits)?
            };
            print_json(&json!({
                "n": inst.n(),
                "k": inst.k(),
                "minimal": minimal,
                "count": covers.len(),
                "covers": covers,
            }));
        }
        Command::Minor(MinorCmd::FromW { inst, w }) => {
            let inst = instance(inst)?;
            let w = parse_w(&inst, &w)?;
            let cert = cert_from_transversal(&inst, &w)?;
            print_json(&cert.to_dto());
        }
        Command::Ineq(cmd) => match cmd {
            IneqCmd::Minor { inst, cert } => {
                let inst = instance(inst)?;
                let dto: MinorCertDto = serde_json::from_str(&read_file(&cert)?)
                    .map_err(|e| Error::InvalidInput(format!("bad certificate file: {e}")))?;
                let cert = MinorCert::from_dto(inst, &dto)?;
                let ineq = minor_inequality(&cert)?;
                print_json(&InequalityDto::from_inequality(&ineq, Some(cert.to_dto())));
            }
            IneqCmd::Rank(args) => {
                let inst = instance(args)?;
                let ineq = rank_inequality(&inst);
                print_json(&vec![InequalityDto::from_inequality(&ineq, None)]);
            }
            IneqCmd::Boolean(args) => {
                let inst = instance(args)?;
                let list: Vec<InequalityDto> = boolean_facets(&inst)
                    .iter()
                    .map(|i| InequalityDto::from_inequality(i, None))
                    .collect();
                print_json(&list);
            }
        },
        Command::Separate { inst, point } => {
            let inst = instance(inst)?;
            let xhat = parse_rat_array(&read_file(&point)?)?;
            let outcome = circulant_cover::separation::separate(&inst, &xhat)?;
            print_json(&outcome);
        }
        Command::Solve {
            inst,
            weights,
            method,
            seed,
        } => {
            let inst = instance(inst)?;
            let (w, used_seed) = match weights {
                Some(path) => (parse_rat_array(&read_file(&path)?)?, None),
                None => (random_weights(inst.n(), 1, 10, seed), Some(seed)),
            };
            let mut result = match method.as_str() {
                "bruteforce" => solve_ip_bruteforce(&inst, &w, &limits)?,
                _ => solve_cutting_plane(&inst, &w)?,
            };
            result.seed = used_seed;
            let stalled = result.counterexample.is_some();
            print_json(&result);
            if stalled {
                return Ok(4);
            }
        }
        Command::Verify(VerifyCmd::Facet { inst, ineq }) => {
            let inst = instance(inst)?;
            let dto = read_inequality_document(&read_file(&ineq)?)?;
            let ineq = dto.to_inequality()?;
            if ineq.n() != inst.n() as usize {
                return Err(Error::DimensionMismatch {
                    expected: inst.n() as usize,
                    got: ineq.n(),
                });
            }
            let report = circulant_cover::facet::facet_report(&inst, &ineq, &limits)?;
            print_json(&report);
        }
        Command::Describe(args) => {
            let inst = instance(args)?;
            let entries = enumerate_s1_inequalities(&inst, &limits)?;
            let facet_defining = entries
                .iter()
                .filter(|e| e.facet.as_ref().is_some_and(|f| f.is_facet))
                .count();
            let composite = entries.iter().filter(|e| e.composite).count();
            print_json(&json!({
                "n": inst.n(),
                "k": inst.k(),
                "total": entries.len(),
                "facetDefining": facet_defining,
                "composite": composite,
                "entries": entries,
            }));
        }
        Command::Conjecture(args) => {
            let inst = instance(args)?;
            print_json(&conjecture_scan(&inst, &limits)?);
        }
    }
    Ok(0)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded(_) => 3,
        Error::Internal(_) | Error::NotCirculant(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(exit_code(&e))
        }
    }
}
