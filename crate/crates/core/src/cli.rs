// Copyright 2026 The zcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line surface. [`run`] does all the work and returns what the
//! binary should print; nothing here touches the process streams.
//!
//! Exit codes: 0 success, 1 failed self-check or refused request, 2 usage
//! error. JSON payloads carry `"schema": "zcube.v1"`; keys are sorted and
//! real numbers are rounded to 6 decimals, so identical flags give identical
//! bytes.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::analysis::{self, Diameter, Level, Limits, Mode, DEFAULT_SEED};
use crate::bitstring::BitString;
use crate::error::Error;
use crate::kappa;
use crate::routing::{self, Walk};
use crate::topology::{self, CubeFamily, ExportFormat};

pub const SCHEMA: &str = "zcube.v1";

/// Largest `--n-max` accepted by `bounds`.
pub const BOUNDS_MAX_ROWS: u64 = 1_000_000;

/// Sources drawn by sampled modes when `--sources` is absent.
pub const DEFAULT_SOURCES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        CommandResult {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "zcube",
    version,
    about = "Z-cube topologies: generation, bounds, routing and exact analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    H,
    Q,
    Z,
}

#[derive(clap::Args, Debug)]
struct Cube {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Twist width; required for `--family z`, rejected otherwise.
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFormat {
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the edge set as sorted edge list or DOT.
    Gen {
        #[command(flatten)]
        cube: Cube,
        #[arg(long, value_enum, default_value = "edges")]
        format: GenFormat,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = topology::DEFAULT_EXPORT_CAP)]
        cap: usize,
    },
    /// Tabulate kappa, sigma and the diameter bounds for n = 1..=n-max.
    Bounds {
        #[arg(long)]
        n_max: u64,
        /// Comma-separated k values for the Z(k) column(s).
        #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 3])]
        k: Vec<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Route from one vertex to another and check the walk.
    Route {
        #[command(flatten)]
        cube: Cube,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Splice out repeated vertices. Splicing can drop robustness
        /// witnesses, so it excludes --robust-k.
        #[arg(long, conflicts_with = "robust_k")]
        compact: bool,
        /// Build a K-robust walk and print its certificate.
        #[arg(long)]
        robust_k: Option<usize>,
    },
    /// Hamiltonian path in H_n.
    Hampath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Structural self-checks of the neighbor oracle.
    Verify {
        #[command(flatten)]
        cube: Cube,
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Distance statistics: histogram, average distance, diameter.
    Stats {
        #[command(flatten)]
        cube: Cube,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_SOURCES)]
        sources: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Diameter with its lower and upper bounds.
    Diameter {
        #[command(flatten)]
        cube: Cube,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_SOURCES)]
        sources: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(_) | Error::CapExceeded { .. } => Failure::Refused(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<CommandResult, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            };
        }
    };
    let limits = Limits::from_env();
    let outcome = match cli.command {
        Command::Gen {
            cube,
            format,
            out,
            cap,
        } => cmd_gen(&cube, format, out.as_deref(), cap),
        Command::Bounds { n_max, k, format } => cmd_bounds(n_max, &k, format),
        Command::Route {
            cube,
            from,
            to,
            compact,
            robust_k,
        } => cmd_route(&cube, &from, &to, compact, robust_k),
        Command::Hampath { n, from, to } => cmd_hampath(n, &from, &to),
        Command::Verify { cube, level, seed } => cmd_verify(&cube, level, seed, &limits),
        Command::Stats {
            cube,
            mode,
            sources,
            seed,
        } => cmd_stats(&cube, mode_of(mode, sources, seed), &limits),
        Command::Diameter {
            cube,
            mode,
            sources,
            seed,
        } => cmd_diameter(&cube, mode_of(mode, sources, seed), &limits),
    };
    match outcome {
        Ok(r) => r,
        Err(Failure::Usage(m)) => CommandResult::fail(2, m),
        Err(Failure::Refused(m)) => CommandResult::fail(1, m),
    }
}

fn mode_of(mode: ModeArg, sources: usize, seed: u64) -> Mode {
    match mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Sampled => Mode::Sampled { sources, seed },
    }
}

fn family(cube: &Cube) -> std::result::Result<CubeFamily, Failure> {
    let f = match (cube.family, cube.k) {
        (FamilyArg::H, None) => CubeFamily::H,
        (FamilyArg::Q, None) => CubeFamily::Q,
        (FamilyArg::Z, Some(k)) => CubeFamily::z(k)?,
        (FamilyArg::Z, None) => return Err(Failure::Usage("--family z requires --k".into())),
        (_, Some(_)) => return Err(Failure::Usage("--k applies only to --family z".into())),
    };
    if cube.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(f)
}

fn vertex(text: &str, n: usize, flag: &str) -> std::result::Result<BitString, Failure> {
    let v: BitString = text
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("{flag}: {e}")))?;
    if v.len() != n {
        return Err(Failure::Usage(format!(
            "{flag}: expected {n} bits, got {}",
            v.len()
        )));
    }
    Ok(v)
}

fn round6(x: f64) -> Value {
    json!((x * 1e6).round() / 1e6)
}

fn rational(r: &BigRational) -> Value {
    round6(kappa::to_f64(r))
}

fn document(command: &str, mut body: Value) -> String {
    let map = body.as_object_mut().expect("payload is an object");
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    let mut text = serde_json::to_string_pretty(&body).expect("serializable");
    text.push('\n');
    text
}

fn labels(vs: &[BitString]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

fn cmd_gen(cube: &Cube, format: GenFormat, out: Option<&std::path::Path>, cap: usize) -> Outcome {
    let f = family(cube)?;
    let format = match format {
        GenFormat::Edges => ExportFormat::EdgeList,
        GenFormat::Dot => ExportFormat::Dot,
    };
    let text = topology::export_edges(f, cube.n, format, cap)?;
    match out {
        None => Ok(CommandResult::ok(text)),
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Ok(CommandResult {
                code: 0,
                stdout: String::new(),
                stderr: format!("wrote {}\n", path.display()),
            }),
            Err(e) => Err(Failure::Refused(format!("{}: {e}", path.display()))),
        },
    }
}

fn cmd_bounds(n_max: u64, ks: &[u32], format: TableFormat) -> Outcome {
    if n_max == 0 {
        return Err(Failure::Usage("--n-max must be at least 1".into()));
    }
    if n_max > BOUNDS_MAX_ROWS {
        return Err(Failure::Refused(format!(
            "--n-max {n_max} exceeds the limit {BOUNDS_MAX_ROWS}"
        )));
    }
    if ks.iter().any(|&k| k == 0 || k > 62) {
        return Err(Failure::Usage("--k values must lie in 1..=62".into()));
    }
    let rows = (1..=n_max)
        .map(|n| kappa::BoundsRow::compute(n, ks))
        .collect::<crate::error::Result<Vec<_>>>()?;
    let text = match format {
        TableFormat::Csv => {
            let mut s = String::from("n,kappa,sigma,lower,thm1");
            for k in ks {
                s.push_str(&format!(",z{k}"));
            }
            s.push_str(",zstar\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},{},{},{},{:.6}",
                    r.n,
                    r.kappa,
                    kappa::rational_text(&r.sigma),
                    r.lower,
                    kappa::to_f64(&r.thm1)
                ));
                for (_, b) in &r.zk {
                    s.push_str(&format!(",{:.6}", kappa::to_f64(b)));
                }
                match r.zstar {
                    Some(z) => s.push_str(&format!(",{z:.6}\n")),
                    None => s.push_str(",n/a\n"),
                }
            }
            s
        }
        TableFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "kappa": r.kappa,
                        "sigma": kappa::rational_text(&r.sigma),
                        "lower": r.lower,
                        "thm1": rational(&r.thm1),
                        "thm1_exact": kappa::rational_text(&r.thm1),
                        "zk": r.zk.iter().map(|(k, b)| json!({"k": k, "bound": rational(b)})).collect::<Vec<_>>(),
                        "zstar": r.zstar.map(round6),
                    })
                })
                .collect();
            document("bounds", json!({ "n_max": n_max, "k": ks, "rows": rows }))
        }
    };
    Ok(CommandResult::ok(text))
}

fn certificate_json(walk: &Walk, k: usize) -> Value {
    match routing::RobustnessCertificate::from_walk(walk, k) {
        None => Value::Null,
        Some(cert) => json!({
            "k": k,
            "valid": cert.validate(walk),
            "witnesses": cert
                .entries()
                .map(|(z, idx)| json!({"suffix": z.to_string(), "index": idx}))
                .collect::<Vec<_>>(),
        }),
    }
}

fn cmd_route(cube: &Cube, from: &str, to: &str, compact: bool, robust_k: Option<usize>) -> Outcome {
    let f = family(cube)?;
    let n = cube.n;
    let (x, y) = (vertex(from, n, "--from")?, vertex(to, n, "--to")?);
    let (walk, method, bound) = match robust_k {
        Some(k) => {
            let (w, _) = routing::robust_route(f, k, &x, &y)?;
            let bound = match f {
                CubeFamily::H => Some(kappa::robust_walk_bound_exact(n as u64, k as u32)?),
                CubeFamily::Z(zk) if zk as usize == k => Some(routing::route_bound(f, n)?),
                _ => None,
            };
            (w, "robust-walk", bound)
        }
        None => {
            let method = if f.is_hypercube_at(n) {
                "bit-fixing"
            } else {
                "robust-walk"
            };
            (
                routing::route(f, &x, &y, compact)?,
                method,
                Some(routing::route_bound(f, n)?),
            )
        }
    };
    let report = analysis::verify_walk(&walk, robust_k);
    let respected = bound.as_ref().map_or(true, |b| {
        BigRational::from_integer(walk.length().into()) <= *b
    });
    let endpoints = walk.first() == &x && walk.last() == &y;
    let cert = robust_k.map(|k| certificate_json(&walk, k));
    let cert_ok = cert.as_ref().map_or(true, |c| c["valid"] == json!(true));
    let ok = report.passed() && respected && endpoints && cert_ok;
    let body = json!({
        "family": f.tag(),
        "n": n,
        "from": x.to_string(),
        "to": y.to_string(),
        "method": method,
        "compact": compact,
        "walk": labels(walk.vertices()),
        "length": walk.length(),
        "bound": bound.as_ref().map(rational),
        "bound_exact": bound.as_ref().map(kappa::rational_text),
        "bound_respected": respected,
        "valid": report.first_violation.is_none() && endpoints,
        "certificate": cert,
    });
    finish("route", body, ok, "route self-check failed")
}

fn finish(command: &str, body: Value, ok: bool, message: &str) -> Outcome {
    Ok(CommandResult {
        code: if ok { 0 } else { 1 },
        stdout: document(command, body),
        stderr: if ok {
            String::new()
        } else {
            format!("error: {message}\n")
        },
    })
}

fn cmd_hampath(n: usize, from: &str, to: &str) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (x, y) = (vertex(from, n, "--from")?, vertex(to, n, "--to")?);
    let walk = routing::hamiltonian_path(&x, &y)?;
    let ok = walk.is_path()
        && walk.vertices().len() == 1 << n
        && analysis::verify_walk(&walk, None).passed();
    let body = json!({
        "n": n,
        "from": x.to_string(),
        "to": y.to_string(),
        "path": labels(walk.vertices()),
        "length": walk.length(),
        "hamiltonian": ok,
    });
    finish("hampath", body, ok, "Hamiltonian path self-check failed")
}

fn cmd_verify(cube: &Cube, level: LevelArg, seed: u64, limits: &Limits) -> Outcome {
    let f = family(cube)?;
    let level = match level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let report = analysis::verify_graph(f, cube.n, level, seed, limits)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "checked": c.checked,
                "witness": c.witness.as_ref().map(|w| json!({
                    "vertices": labels(&w.vertices),
                    "detail": w.detail,
                })),
            })
        })
        .collect();
    let body = json!({
        "family": f.tag(),
        "n": cube.n,
        "level": level.as_str(),
        "seed": seed,
        "vertices": 1u64 << cube.n,
        "passed": report.passed(),
        "checks": checks,
    });
    finish("verify", body, report.passed(), "verification failed")
}

fn diameter_fields(d: Diameter) -> (u32, &'static str) {
    match d {
        Diameter::Exact(v) => (v, "exact"),
        Diameter::SampledLowerBound(v) => (v, "sampled_lower_bound"),
    }
}

fn mode_fields(mode: Mode) -> (&'static str, Value, Value) {
    match mode {
        Mode::Exact => ("exact", Value::Null, Value::Null),
        Mode::Sampled { sources, seed } => ("sampled", json!(sources), json!(seed)),
    }
}

fn cmd_stats(cube: &Cube, mode: Mode, limits: &Limits) -> Outcome {
    let f = family(cube)?;
    let s = analysis::distance_summary(f, cube.n, mode, limits)?;
    let (diameter, kind) = diameter_fields(s.diameter);
    let (mode_name, sources, seed) = mode_fields(mode);
    let body = json!({
        "family": f.tag(),
        "n": cube.n,
        "mode": mode_name,
        "sources": sources,
        "seed": seed,
        "sources_used": s.sources_used,
        "average_distance": round6(s.average_distance),
        "average_convention": analysis::AVERAGE_CONVENTION,
        "histogram": s.histogram,
        "diameter": diameter,
        "diameter_kind": kind,
    });
    Ok(CommandResult::ok(document("stats", body)))
}

fn cmd_diameter(cube: &Cube, mode: Mode, limits: &Limits) -> Outcome {
    let f = family(cube)?;
    let n = cube.n;
    let lower = routing::distance_lower_bound(f, n)?;
    let upper = routing::route_bound(f, n)?;
    let (diameter, kind) = match mode {
        Mode::Exact => (analysis::diameter_exact(f, n, limits)?, "exact"),
        Mode::Sampled { sources, seed } => {
            let s = analysis::distance_summary(f, n, Mode::Sampled { sources, seed }, limits)?;
            diameter_fields(s.diameter)
        }
    };
    let d = BigRational::from_integer(diameter.into());
    // a sampled value is only a lower bound on the diameter
    let within = d <= upper && (kind != "exact" || diameter as u64 >= lower);
    let (mode_name, sources, seed) = mode_fields(mode);
    let body = json!({
        "family": f.tag(),
        "n": n,
        "mode": mode_name,
        "sources": sources,
        "seed": seed,
        "diameter": diameter,
        "diameter_kind": kind,
        "lower": lower,
        "upper": rational(&upper),
        "upper_exact": kappa::rational_text(&upper),
        "within_bounds": within,
    });
    finish("diameter", body, within, "diameter outside its bounds")
}
