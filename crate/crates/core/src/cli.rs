//! Command-line front-end.
//!
//! Every verb that needs a matroid takes one or more source flags; several
//! sources are combined by direct sum in the order they appear. Exit status is
//! 0 on success, 1 on a domain error (the error name goes to stderr) and 2 on
//! a usage error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::error::Error;
use crate::io;
use crate::matroid::{
    beta, circuits, classify, minimal, panhandle, schubert_matroid, uniform, Matroid,
};
use crate::orbit::{hook_coefficient, sc, verify_volume_relation};
use crate::polytope::{volume_report, DEFAULT_DESK_LIMIT};
use crate::schubert::product;

#[derive(Parser)]
#[command(
    name = "matroid-schubert",
    version,
    about = "Schubert coefficients of matroids and related invariants"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the Schubert expansion of the orbit class.
    Class(SourceArgs),
    /// Print the beta invariant.
    Beta(SourceArgs),
    /// Count lattice points of dilates of the matroid polytope.
    Volume(LimitArgs),
    /// List the circuits.
    Circuits(SourceArgs),
    /// Print connectivity and paving data.
    Info(SourceArgs),
    /// Check the degree-volume and hook-beta identities.
    Verify(LimitArgs),
    /// Multiply two class files.
    Product(ProductArgs),
    /// Write the matroid as a JSON basis list.
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SourceArgs {
    /// Uniform matroid U(r,n).
    #[arg(long, value_name = "R,N")]
    uniform: Vec<String>,
    /// Minimal matroid T(r,n).
    #[arg(long, value_name = "R,N")]
    minimal: Vec<String>,
    /// Panhandle matroid Pan(r,s,n).
    #[arg(long, value_name = "R,S,N")]
    panhandle: Vec<String>,
    /// Schubert matroid of an index set, e.g. `2,4:5`.
    #[arg(long, value_name = "I:N")]
    schubert: Vec<String>,
    /// Matroid JSON file.
    #[arg(long, value_name = "FILE")]
    matroid: Vec<PathBuf>,
    /// Matrix JSON file; the rank is the number of rows.
    #[arg(long, value_name = "FILE")]
    matrix: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct LimitArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest ground set for lattice point counting.
    #[arg(long, default_value_t = DEFAULT_DESK_LIMIT)]
    limit_n: usize,
}

#[derive(Args)]
struct ProductArgs {
    left: PathBuf,
    right: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedInput(_) => Failure::Usage(format!("{}: {e}", e.name())),
            e => Failure::Domain(e),
        }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                status: 2,
                stdout: String::new(),
                stderr: e.render().to_string(),
            }
        }
    };
    let sub = matches
        .subcommand()
        .map(|(_, m)| m)
        .expect("a verb is required");
    match dispatch(cli.verb, sub) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("usage error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: format!("{}: {e}\n", e.name()),
        },
    }
}

fn dispatch(verb: Verb, sub: &ArgMatches) -> std::result::Result<Outcome, Failure> {
    match verb {
        Verb::Class(src) => {
            let m = build_source(sub)?;
            let res = sc(&m)?;
            Ok(Outcome::ok(match src.format {
                Format::Text => format!("{}\n", res.class),
                Format::Json => to_json(&res),
            }))
        }
        Verb::Beta(src) => {
            let b = beta(&build_source(sub)?);
            Ok(Outcome::ok(match src.format {
                Format::Text => format!("{b}\n"),
                Format::Json => to_json(&json!({ "beta": b.to_string() })),
            }))
        }
        Verb::Volume(args) => {
            let m = build_source(sub)?;
            let rep = volume_report(&m, args.limit_n)?;
            Ok(Outcome::ok(match args.source.format {
                Format::Text => table(&[
                    vec!["dim".into(), rep.dim.to_string()],
                    vec!["counts".into(), join(&rep.counts)],
                    vec!["ehrhart".into(), join(&rep.ehrhart)],
                    vec!["volume".into(), rep.normalized_volume.to_string()],
                ]),
                Format::Json => to_json(&rep),
            }))
        }
        Verb::Circuits(src) => {
            let cs = circuits(&build_source(sub)?);
            Ok(Outcome::ok(match src.format {
                Format::Text => cs.iter().map(|c| format!("{}\n", list(c))).collect(),
                Format::Json => to_json(&json!({ "circuits": cs })),
            }))
        }
        Verb::Info(src) => {
            let c = classify(&build_source(sub)?);
            Ok(Outcome::ok(match src.format {
                Format::Text => {
                    let comps: Vec<String> = c.components.iter().map(|v| list(v)).collect();
                    table(&[
                        vec!["n".into(), c.n.to_string()],
                        vec!["r".into(), c.r.to_string()],
                        vec!["bases".into(), c.num_bases.to_string()],
                        vec!["nonbases".into(), c.nonbasis_count.to_string()],
                        vec!["kappa".into(), c.kappa.to_string()],
                        vec!["components".into(), comps.join(" ")],
                        vec!["loops".into(), list(&c.loops)],
                        vec!["coloops".into(), list(&c.coloops)],
                        vec!["paving".into(), c.is_paving.to_string()],
                        vec!["sparse-paving".into(), c.is_sparse_paving.to_string()],
                        vec!["minimal".into(), c.is_minimal.to_string()],
                        vec!["uniform".into(), c.is_uniform.to_string()],
                    ])
                }
                Format::Json => to_json(&c),
            }))
        }
        Verb::Verify(args) => verify(&build_source(sub)?, args.limit_n, args.source.format),
        Verb::Product(args) => {
            let a = io::read_class(&args.left)?;
            let b = io::read_class(&args.right)?;
            let p = product(&a, &b)?;
            Ok(Outcome::ok(match args.format {
                Format::Text => format!("{p}\n"),
                Format::Json => to_json(&p),
            }))
        }
        Verb::Export(args) => {
            let m = build_source(sub)?;
            match args.out {
                Some(path) => {
                    io::write_matroid(&path, &m)?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(io::matroid_to_json(&m))),
            }
        }
    }
}

struct Check {
    name: &'static str,
    lhs: BigInt,
    rhs: BigInt,
}

fn verify(m: &Matroid, limit: usize, format: Format) -> std::result::Result<Outcome, Failure> {
    let vol = verify_volume_relation(m, limit)?;
    let res = sc(m)?;
    let mut checks = vec![Check {
        name: "degree-volume",
        lhs: vol.lhs.clone(),
        rhs: BigInt::from(vol.rhs.clone()),
    }];
    if let Some(d) = hook_coefficient(&res.class) {
        checks.push(Check {
            name: "hook-beta",
            lhs: d,
            rhs: BigInt::from(res.beta.clone()),
        });
    }
    let all = checks.iter().all(|c| c.lhs == c.rhs);
    let verdict = |c: &Check| if c.lhs == c.rhs { "pass" } else { "fail" };
    let stdout = match format {
        Format::Text => {
            let mut rows = vec![vec![
                "check".to_string(),
                "lhs".into(),
                "rhs".into(),
                "result".into(),
            ]];
            for c in &checks {
                rows.push(vec![
                    c.name.into(),
                    c.lhs.to_string(),
                    c.rhs.to_string(),
                    verdict(c).into(),
                ]);
            }
            table(&rows)
        }
        Format::Json => to_json(&json!({
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "lhs": c.lhs.to_string(),
                "rhs": c.rhs.to_string(),
                "pass": c.lhs == c.rhs,
            })).collect::<Vec<_>>(),
            "pass": all,
        })),
    };
    if all {
        return Ok(Outcome::ok(stdout));
    }
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| c.lhs != c.rhs)
        .map(|c| c.name)
        .collect();
    let e = Error::VerificationFailed(failed.join(", "));
    Ok(Outcome {
        status: 1,
        stdout,
        stderr: format!("{}: {e}\n", e.name()),
    })
}

const SOURCE_IDS: [&str; 6] = [
    "uniform",
    "minimal",
    "panhandle",
    "schubert",
    "matroid",
    "matrix",
];

/// The direct sum of all sources, in command-line order.
fn build_source(sub: &ArgMatches) -> std::result::Result<Matroid, Failure> {
    let mut found: Vec<(usize, &str, String)> = Vec::new();
    for id in SOURCE_IDS {
        let (Some(values), Some(indices)) = (sub.get_raw(id), sub.indices_of(id)) else {
            continue;
        };
        for (v, i) in values.zip(indices) {
            found.push((i, id, v.to_string_lossy().into_owned()));
        }
    }
    if found.is_empty() {
        return Err(Failure::Usage(format!(
            "a matroid source is required (--{})",
            SOURCE_IDS.join(", --")
        )));
    }
    found.sort_by_key(|(i, _, _)| *i);
    let mut acc: Option<Matroid> = None;
    for (_, id, value) in found {
        let m = one_source(id, &value)?;
        acc = Some(match acc {
            None => m,
            Some(a) => a.direct_sum(&m)?,
        });
    }
    Ok(acc.expect("at least one source"))
}

fn one_source(id: &str, value: &str) -> std::result::Result<Matroid, Failure> {
    Ok(match id {
        "uniform" => {
            let [r, n] = numbers::<2>(id, value)?;
            uniform(r, n)?
        }
        "minimal" => {
            let [r, n] = numbers::<2>(id, value)?;
            minimal(r, n)?
        }
        "panhandle" => {
            let [r, s, n] = numbers::<3>(id, value)?;
            panhandle(r, s, n)?
        }
        "schubert" => {
            let bad = || Failure::Usage(format!("--schubert expects I:N, got {value:?}"));
            let (set, n) = value.split_once(':').ok_or_else(bad)?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            let set = if set.trim().is_empty() {
                Vec::new()
            } else {
                number_list(set).ok_or_else(bad)?
            };
            schubert_matroid(n, &set)?
        }
        "matroid" => io::read_matroid(Path::new(value))?,
        "matrix" => io::read_matrix_matroid(Path::new(value))?,
        _ => unreachable!("unknown source id {id}"),
    })
}

fn number_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

fn numbers<const K: usize>(id: &str, value: &str) -> std::result::Result<[usize; K], Failure> {
    number_list(value)
        .and_then(|v| <[usize; K]>::try_from(v).ok())
        .ok_or_else(|| {
            Failure::Usage(format!(
                "--{id} expects {K} comma-separated integers, got {value:?}"
            ))
        })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes") + "\n"
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{cell:<w$}", w = widths[j]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
