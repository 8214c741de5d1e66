//! `gammainv` command-line interface.

mod parse;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gammainv::branches::{comb_sin_inverse, lp_sin_inverse};
use gammainv::gamma::{binet_mu, cached_critical_point, gamma, log_gamma, psi, psi_prime};
use gammainv::genus2::{barnes_g, gamma2, gamma2_inverse};
use gammainv::output::{json_complex, json_real};
use gammainv::pickrep::{
    density_table, endpoint_exponent, endpoint_identity, pick_parameters, stieltjes_eval,
};
use gammainv::{
    even_inverse, extended_inverse, principal_inverse, BranchInterval, ClassGFunction, ClassGMember,
    ComplexValue, Endpoint, Error, GridScheme, LambdaRule, QuadratureConfig, Truncation,
};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "gammainv", version, about = "Inverse branches of the Gamma function and genus-2 relatives")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Gamma,
    LogGamma,
    Psi,
    PsiPrime,
    BinetMu,
    BarnesG,
    Gamma2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Uniform,
    EndpointRefined,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Genus2Fn {
    BarnesG,
    InvGamma2,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
    Structural,
    Genus2,
}

#[derive(clap::Args)]
struct Genus2Spec {
    /// Built-in instance, or `custom` with the parameters below.
    #[arg(long, value_enum, default_value = "barnes-g")]
    function: Genus2Fn,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    a: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    b: f64,
    /// λ_k = scale·k^exponent ...
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value_t = 1.0)]
    exponent: f64,
    /// ... with multiplicity mult_linear·k + mult_const.
    #[arg(long, default_value_t = 1)]
    mult_linear: u32,
    #[arg(long, default_value_t = 1)]
    mult_const: u32,
    #[arg(long, default_value_t = Truncation::default().n_terms)]
    n_terms: usize,
    #[arg(long, default_value_t = Truncation::default().tail_order)]
    tail_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Critical points x_k of Γ with Γ(x_k).
    CriticalPoints {
        #[arg(long, default_value_t = 8)]
        max_k: u32,
    },
    /// Evaluate a special function.
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
        z: ComplexValue,
    },
    /// Invert Γ on a branch: k = -1 principal, k >= 0 the extension G_k.
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        branch: i32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
        w: ComplexValue,
        /// Use e_k(w) = G_k(-w) (even k only).
        #[arg(long)]
        even: bool,
    },
    /// Density table d_k on I_k minus 0.
    Density {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, value_enum, default_value = "endpoint-refined")]
        scheme: Scheme,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the integral representation with the direct inverse.
    VerifyRepresentation {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
        z: ComplexValue,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
    },
    /// Endpoint sum rule and local exponent.
    Endpoint {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Linear coefficient, constant and point mass of g_k.
    PickParams {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
    },
    /// Inflection point, class membership and minimum of a genus-2 function.
    Genus2Classify {
        #[command(flatten)]
        spec: Genus2Spec,
    },
    /// Pick inverse of a class-G function; with --gamma2, the inverse of Γ₂ on (β₂, ∞).
    Genus2Invert {
        #[command(flatten)]
        spec: Genus2Spec,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
        w: ComplexValue,
        /// Also evaluate the Stieltjes representation.
        #[arg(long)]
        representation: bool,
        /// Invert Γ₂ itself (real w in (0, Γ₂(β₂))).
        #[arg(long)]
        gamma2: bool,
    },
    /// Comb inversion of sin against the closed form.
    SinOracle {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::complex)]
        w: ComplexValue,
    },
    /// Reproduce published and structural constants.
    Report {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
    },
}

/// A command result: JSON payload, CSV rows, and whether a check failed.
struct Emit {
    json: Value,
    csv: Option<String>,
    failed: bool,
}

impl Emit {
    fn ok(json: Value) -> Self {
        Emit { json, csv: None, failed: false }
    }
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

fn quad_cfg() -> Result<QuadratureConfig, CliError> {
    match std::env::var("GAMMA_INV_QUAD_TOL") {
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(QuadratureConfig::with_tol(t)),
            _ => Err(CliError::Usage(format!("GAMMA_INV_QUAD_TOL must be a positive number, got '{v}'"))),
        },
        Err(_) => Ok(QuadratureConfig::with_tol(1e-9)),
    }
}

fn build_function(spec: &Genus2Spec) -> Result<ClassGFunction, CliError> {
    Ok(match spec.function {
        Genus2Fn::BarnesG => ClassGFunction::barnes_g(),
        Genus2Fn::InvGamma2 => ClassGFunction::inv_gamma2(),
        Genus2Fn::Custom => ClassGFunction::new(
            spec.r,
            spec.a,
            spec.b,
            LambdaRule {
                scale: spec.scale,
                exponent: spec.exponent,
                mult_linear: spec.mult_linear,
                mult_const: spec.mult_const,
            },
            Truncation { n_terms: spec.n_terms, tail_order: spec.tail_order },
        )?,
    })
}

fn build_member(spec: &Genus2Spec) -> Result<ClassGMember, CliError> {
    Ok(match spec.function {
        Genus2Fn::BarnesG => ClassGMember::barnes_g(),
        Genus2Fn::InvGamma2 => ClassGMember::inv_gamma2(),
        Genus2Fn::Custom => ClassGMember::new(build_function(spec)?)?,
    })
}

fn run(cli: Cli) -> Result<Emit, CliError> {
    match cli.command {
        Command::CriticalPoints { max_k } => {
            let rows = (0..=max_k)
                .map(|k| {
                    let cp = cached_critical_point(k)?;
                    Ok(json!({"k": k, "x_k": json_real(cp.abscissa), "gamma_x_k": json_real(cp.gamma_xk)}))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Emit::ok(Value::Array(rows)))
        }
        Command::Eval { function, z } => {
            let v = match function {
                Function::Gamma => gamma(z)?,
                Function::LogGamma => log_gamma(z)?,
                Function::Psi => psi(z)?,
                Function::PsiPrime => psi_prime(z)?,
                Function::BinetMu => binet_mu(z)?,
                Function::BarnesG => barnes_g(z)?,
                Function::Gamma2 => gamma2(z)?,
            };
            Ok(Emit::ok(json!({"z": json_complex(z), "value": json_complex(v)})))
        }
        Command::Invert { branch, w, even } => {
            let z = if even {
                even_inverse(branch, w)?
            } else if branch == -1 {
                principal_inverse(w)?
            } else {
                extended_inverse(branch, w)?
            };
            Ok(Emit::ok(json!({"branch": branch, "even": even, "w": json_complex(w), "z": json_complex(z)})))
        }
        Command::Density { k, n, scheme, out } => {
            let scheme = match scheme {
                Scheme::Uniform => GridScheme::Uniform,
                Scheme::EndpointRefined => GridScheme::EndpointRefined,
            };
            let table = density_table(k, n, scheme)?;
            let interval = BranchInterval::new(k)?;
            let nodes: Vec<Value> = table
                .nodes
                .iter()
                .map(|&(t, d)| json!({"t": json_real(t), "d": json_real(d)}))
                .collect();
            let json = json!({
                "k": k,
                "scheme": scheme,
                "interval": [json_real(interval.lo), json_real(interval.hi)],
                "nodes": nodes,
            });
            let emit = Emit { json, csv: Some(table.to_csv()), failed: false };
            if let Some(path) = out {
                let text = render(&emit, cli.format);
                std::fs::write(&path, text)
                    .map_err(|e| CliError::Compute(format!("writing {}: {e}", path.display())))?;
                return Ok(Emit::ok(json!({"written": path.display().to_string(), "rows": n})));
            }
            Ok(emit)
        }
        Command::VerifyRepresentation { k, z, tol } => {
            let rep = stieltjes_eval(k, z, &quad_cfg()?)?;
            let direct = extended_inverse(k, z)?;
            let err = (rep - direct).norm();
            let pass = err <= tol;
            Ok(Emit {
                json: json!({
                    "k": k, "z": json_complex(z),
                    "representation": json_complex(rep), "direct": json_complex(direct),
                    "error": json_real(err), "tolerance": json_real(tol), "pass": pass,
                }),
                csv: None,
                failed: !pass,
            })
        }
        Command::Endpoint { k, side } => {
            let (which, idx) = match side {
                SideArg::Left => (Endpoint::Left, k),
                SideArg::Right => (Endpoint::Right, k + 1),
            };
            if k < 0 {
                return Err(CliError::Usage(format!("endpoint needs k >= 0, got {k}")));
            }
            let value = endpoint_identity(k, which, &quad_cfg()?)?;
            let x = cached_critical_point(idx as u32)?.abscissa;
            let p = endpoint_exponent(k, which)?;
            Ok(Emit::ok(json!({
                "k": k, "side": which, "identity": json_real(value), "critical_point": json_real(x),
                "difference": json_real(value - x), "exponent": json_real(p),
            })))
        }
        Command::PickParams { k } => {
            let p = pick_parameters(k)?;
            Ok(Emit::ok(json!({
                "k": k, "a": json_real(p.a), "b": json_real(p.b), "c": json_real(p.c),
                "a_fit": json_real(p.a_fit), "c_fit": json_real(p.c_fit),
            })))
        }
        Command::Genus2Classify { spec } => {
            let f = build_function(&spec)?;
            let d = f.classify()?;
            Ok(Emit::ok(f.derived_json(&d)))
        }
        Command::Genus2Invert { spec, w, representation, gamma2: g2 } => {
            if g2 {
                if w.im != 0.0 {
                    return Err(CliError::Usage("--gamma2 needs a real --w".into()));
                }
                let x = gamma2_inverse(w.re)?;
                return Ok(Emit::ok(json!({"w": json_real(w.re), "z": json_real(x)})));
            }
            let m = build_member(&spec)?;
            let z = m.inverse_f(w)?;
            let mut obj = Map::new();
            obj.insert("w".into(), json_complex(w));
            obj.insert("z".into(), json_complex(z));
            obj.insert("beta".into(), json_real(m.beta));
            obj.insert("f_beta".into(), json_real(m.f_beta));
            if representation {
                let rep = m.genus2_stieltjes_eval(w, &quad_cfg()?)?;
                obj.insert("representation".into(), json_complex(rep));
                obj.insert("error".into(), json_real((rep - z).norm()));
            }
            Ok(Emit::ok(Value::Object(obj)))
        }
        Command::SinOracle { w } => {
            let comb = comb_sin_inverse(w)?;
            let closed = lp_sin_inverse(w)?;
            Ok(Emit::ok(json!({
                "w": json_complex(w), "comb": json_complex(comb), "closed_form": json_complex(closed),
                "difference": json_real((comb - closed).norm()),
            })))
        }
        Command::Report { suite } => {
            let r = report::build(suite_items(suite))?;
            let failed = !r.all_pass();
            let rows = r.rows();
            let mut csv = String::from("name,paper_value,computed,tolerance,pass\n");
            for it in &r.items {
                csv.push_str(&it.csv_row());
            }
            Ok(Emit { json: json!({"suite": suite_name(suite), "items": rows, "all_pass": !failed}), csv: Some(csv), failed })
        }
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Paper => "paper",
        Suite::Structural => "structural",
        Suite::Genus2 => "genus2",
    }
}

fn suite_items(s: Suite) -> report::Selection {
    match s {
        Suite::Paper => report::Selection { genus2: true, structural: true },
        Suite::Structural => report::Selection { genus2: false, structural: true },
        Suite::Genus2 => report::Selection { genus2: true, structural: false },
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) if s.contains(',') || s.contains('"') => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}_{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}_{i}"), x, out);
            }
        }
        other => out.push((prefix.to_string(), csv_cell(other))),
    }
}

/// Arrays become one row per element, anything else a single row.
fn generic_csv(v: &Value) -> String {
    let rows: Vec<&Value> = match v {
        Value::Array(a) => a.iter().collect(),
        other => vec![other],
    };
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let mut cells = Vec::new();
        flatten("", row, &mut cells);
        if i == 0 {
            out.push_str(&cells.iter().map(|c| c.0.as_str()).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out.push_str(&cells.iter().map(|c| c.1.as_str()).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn render(e: &Emit, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&e.json).expect("JSON values always serialise");
            s.push('\n');
            s
        }
        Format::Csv => e.csv.clone().unwrap_or_else(|| generic_csv(&e.json)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(emit) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(render(&emit, format).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if emit.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
