use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use affine_cluster::graph::{build_g14, build_g22, build_tilde_g14, ExportFormat, WeightedGraph};
use affine_cluster::matching::{match_count, match_polynomial};
use affine_cluster::report::{IdentityId, IndexRange};
use affine_cluster::verify::Workbench;
use affine_cluster::{CanonicalForm, CaseParams, Error, Laurent, SequenceCache};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// `writeln!` into the output buffer; writing to a `String` cannot fail.
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).expect("writing to a String")
    };
}

#[derive(Parser)]
#[command(
    name = "affine-cluster",
    version,
    about = "Rank-two cluster variables and their perfect-matching models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Case {
    #[arg(long, default_value_t = 1)]
    b: u32,
    #[arg(long, default_value_t = 4)]
    c: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print x_n as a numerator over a monomial denominator.
    Xn {
        #[command(flatten)]
        case: Case,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Print the flat Laurent form instead.
        #[arg(long)]
        expanded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print x_n for a range of indices.
    Sequence {
        #[command(flatten)]
        case: Case,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        /// Print x_n(1,1) only, space separated.
        #[arg(long)]
        at_ones: bool,
        #[arg(long)]
        expanded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print one row `n<TAB>x_n` per index.
    Table {
        #[command(flatten)]
        case: Case,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long)]
        expanded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the perfect-matching polynomial of a family graph.
    Matchpoly {
        #[command(flatten)]
        case: Case,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Use the (1,4) tilde graph with index n.
        #[arg(long)]
        tilde: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export a family graph.
    Graph {
        #[command(flatten)]
        case: Case,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        tilde: bool,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Check identities exactly.
    Verify {
        #[arg(long, conflicts_with = "identity")]
        suite: bool,
        #[arg(long, default_value_t = 10)]
        max: i64,
        #[arg(long, required_unless_present = "suite")]
        identity: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "identity")]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "identity")]
        to: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Internal(String),
    Verification,
}

impl Failure {
    fn flag(flag: &str, e: Error) -> Failure {
        Failure::Usage(format!("{flag}: {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidParams(_)
            | Error::IndexOutOfFamily { .. }
            | Error::UnsupportedCase { .. }
            | Error::UnknownFormat(_)
            | Error::UnknownIdentity(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn params(case: Case) -> Result<CaseParams, Failure> {
    CaseParams::new(case.b, case.c).map_err(|e| Failure::flag("--b/--c", e))
}

fn range(from: i64, to: i64) -> Result<IndexRange, Failure> {
    if from > to {
        return Err(Failure::Usage(format!("--from {from} is greater than --to {to}")));
    }
    Ok(IndexRange::new(from, to))
}

fn show(x: &Laurent, expanded: bool) -> String {
    if expanded {
        x.to_string()
    } else {
        CanonicalForm::from_laurent(x).to_string()
    }
}

fn value_json(params: CaseParams, n: i64, x: &Laurent) -> Value {
    let cf = CanonicalForm::from_laurent(x);
    json!({
        "b": params.b(),
        "c": params.c(),
        "n": n,
        "laurent": x,
        "numerator": cf.numerator,
        "denominator": [cf.denominator.e1(), cf.denominator.e2()],
        "text": cf.to_string(),
    })
}

fn print_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("json values serialize"));
    out.push('\n');
}

fn family_graph(params: CaseParams, n: i64, tilde: bool) -> Result<WeightedGraph, Failure> {
    let g = match (params.b(), params.c(), tilde) {
        (1, 4, true) => build_tilde_g14(n),
        (_, _, true) => {
            return Err(Failure::Usage(
                "--tilde: tilde graphs exist only for --b 1 --c 4".into(),
            ))
        }
        (2, 2, false) => build_g22(n),
        (1, 4, false) => build_g14(n),
        (b, c, false) => Err(Error::UnsupportedCase { b, c }),
    };
    g.map_err(|e| Failure::flag("--n", e))
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Xn {
            case,
            n,
            expanded,
            json,
        } => {
            let params = params(case)?;
            let mut seq = SequenceCache::new(params);
            let x = seq.x_at(n)?.clone();
            if json {
                print_json(out, &value_json(params, n, &x));
            } else {
                outln!(out, "{}", show(&x, expanded));
            }
        }
        Command::Sequence {
            case,
            from,
            to,
            at_ones,
            expanded,
            json,
        } => {
            let params = params(case)?;
            let range = range(from, to)?;
            let mut seq = SequenceCache::new(params);
            if at_ones {
                let values = range
                    .iter()
                    .map(|n| seq.eval_at_ones(n).map(|v| v.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                if json {
                    print_json(
                        out,
                        &json!(range
                            .iter()
                            .zip(&values)
                            .map(|(n, v)| json!({"n": n, "at_ones": v}))
                            .collect::<Vec<_>>()),
                    );
                } else {
                    outln!(out, "{}", values.join(" "));
                }
            } else {
                let mut rows = Vec::new();
                for n in range.iter() {
                    let x = seq.x_at(n)?.clone();
                    if json {
                        rows.push(value_json(params, n, &x));
                    } else {
                        outln!(out, "{}", show(&x, expanded));
                    }
                }
                if json {
                    print_json(out, &Value::Array(rows));
                }
            }
        }
        Command::Table {
            case,
            from,
            to,
            expanded,
            json,
        } => {
            let params = params(case)?;
            let range = range(from, to)?;
            let mut seq = SequenceCache::new(params);
            let mut rows = Vec::new();
            for n in range.iter() {
                let x = seq.x_at(n)?.clone();
                if json {
                    rows.push(value_json(params, n, &x));
                } else {
                    outln!(out, "{n}\t{}", show(&x, expanded));
                }
            }
            if json {
                print_json(out, &Value::Array(rows));
            }
        }
        Command::Matchpoly { case, n, tilde, json } => {
            let g = family_graph(params(case)?, n, tilde)?;
            let poly = match_polynomial(&g)?;
            if json {
                let count = match_count(&g)?;
                print_json(
                    out,
                    &json!({
                        "graph": g.tag,
                        "polynomial": poly,
                        "count": count.to_string(),
                        "text": poly.to_string(),
                    }),
                );
            } else {
                outln!(out, "{poly}");
            }
        }
        Command::Graph { case, n, tilde, format } => {
            let format: ExportFormat = format.parse().map_err(|e| Failure::flag("--format", e))?;
            let g = family_graph(params(case)?, n, tilde)?;
            out.push_str(&g.export(format));
            if format == ExportFormat::Json {
                out.push('\n');
            }
        }
        Command::Verify {
            suite,
            max,
            identity,
            from,
            to,
            json,
        } => {
            let mut bench = Workbench::new();
            let reports = if suite {
                if max < 5 {
                    return Err(Failure::Usage(format!("--max: must be at least 5, got {max}")));
                }
                bench.run_full_suite(max)?
            } else {
                let name = identity.expect("clap requires --identity without --suite");
                let id: IdentityId = name.parse().map_err(|e| Failure::flag("--identity", e))?;
                let range = range(from.unwrap_or(-max), to.unwrap_or(max))?;
                vec![bench.verify_identity(id, range)?]
            };
            if json {
                print_json(
                    out,
                    &serde_json::to_value(&reports).map_err(|e| Failure::Internal(e.to_string()))?,
                );
            } else {
                for r in &reports {
                    outln!(out, "{}", r.summary_line());
                    for f in &r.failures {
                        let case = f.case.as_deref().map(|c| format!(" {c}")).unwrap_or_default();
                        outln!(out, "  n={}{case}: {} != {}", f.n, f.lhs, f.rhs);
                    }
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    if let Err(e) = io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
