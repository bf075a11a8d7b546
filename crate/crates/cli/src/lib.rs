//! Command-line front end for `wittkit`.
//!
//! [`run_command`] parses an argument vector, runs one operation or
//! verification suite and returns what would be written to stdout and stderr
//! together with the exit status: 0 on success, 1 when a verification suite
//! fails, 2 on malformed input.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use wittkit::{
    inverse_of_integer, MatrixEndo, RationalWitt, RingSpec, UnitSeries, WittVector,
};

pub mod gen;
pub mod suites;

use suites::{Suite, SuiteConfig, SuiteReport};

/// Default cap on matrix dimensions built by the CLI.
pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "wittkit", version, about = "Exact big Witt vector arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Coefficient ring: Z, Q, Zmod:<m> or Fp:<p>
    #[arg(long, global = true, default_value = "Z", value_parser = parse_ring)]
    pub ring: RingSpec,

    /// Truncation precision N for Witt vectors and expansions
    #[arg(long = "prec", global = true, default_value_t = 8)]
    pub precision: usize,

    /// Random trials per property in `verify`
    #[arg(long, global = true, default_value_t = 100)]
    pub trials: usize,

    /// Seed for `verify`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Search bound for `endo nilindex`
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,

    /// Warn when a rational Witt vector's degree exceeds this
    #[arg(long = "max-degree", global = true, default_value_t = 64)]
    pub max_degree: usize,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Also write the JSON result to this file
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    /// Include wall-clock duration in verification reports
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Big Witt vectors, given as series `1 + c_1*t + ...`
    #[command(subcommand)]
    Witt(WittCmd),
    /// Rational Witt vectors, given as `(<poly>)/(<poly>)` or `<poly>`
    #[command(subcommand)]
    Rw(RwCmd),
    /// Matrix endomorphisms, given as `[[a,b],[c,d]]`
    #[command(subcommand)]
    Endo(EndoCmd),
    /// Run a verification suite
    Verify {
        /// witt-axioms, frobenius-verschiebung, projection-formula, verfrob-fp,
        /// invert-int, almkvist-functoriality, ghost-oracle, torsion-mechanism or all
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum WittCmd {
    Add { x: String, y: String },
    Mul { x: String, y: String },
    Neg { x: String },
    Frob {
        #[arg(short = 'n', short_alias = 'l')]
        n: usize,
        x: String,
    },
    Versch {
        #[arg(short = 'n', short_alias = 'l')]
        n: usize,
        x: String,
    },
    /// Teichmüller lift `1 - a*t`
    Teich { a: String },
    Ghost { x: String },
    Decompose { x: String },
    /// The inverse of the integer l in W_N(R)
    InvertInt {
        #[arg(short = 'l', short_alias = 'n', allow_negative_numbers = true)]
        l: i64,
    },
    /// The m-fold Witt sum
    Scalar {
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
        x: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum RwCmd {
    Add { x: String, y: String },
    Mul { x: String, y: String },
    Frob {
        #[arg(short = 'n', short_alias = 'l')]
        n: usize,
        x: String,
    },
    Versch {
        #[arg(short = 'n', short_alias = 'l')]
        n: usize,
        x: String,
    },
    /// Power series expansion at --prec
    Expand { x: String },
    Eq { x: String, y: String },
}

#[derive(Subcommand, Debug)]
pub enum EndoCmd {
    /// det(1 - t*phi)
    Char { m: String },
    Frob {
        #[arg(short = 'l', short_alias = 'n')]
        l: usize,
        m: String,
    },
    Versch {
        #[arg(short = 'l', short_alias = 'n')]
        l: usize,
        m: String,
    },
    Tensor { a: String, b: String },
    Dsum { a: String, b: String },
    Nilindex { m: String },
    /// Class (rank, char series) in Z + W_0(R)
    K0 { m: String },
}

fn parse_ring(s: &str) -> Result<RingSpec, String> {
    s.parse::<RingSpec>().map_err(|e| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] wittkit::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Serialize)]
struct OpResult<'a> {
    op: &'a str,
    ring: String,
    result: String,
}

/// Largest matrix dimension the CLI will build, from `WITTKIT_MAX_DIM`.
pub fn max_dim() -> usize {
    std::env::var("WITTKIT_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn check_dim(dim: usize, what: &str) -> Result<(), CliError> {
    let cap = max_dim();
    if dim > cap {
        return Err(CliError::Usage(format!(
            "{what} would have dimension {dim}, above WITTKIT_MAX_DIM = {cap}"
        )));
    }
    Ok(())
}

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                let first = rendered.lines().next().unwrap_or("error: invalid arguments");
                (String::new(), format!("{first}\n"))
            };
            return Outcome { stdout, stderr, code };
        }
    };
    let g = cli.global.clone();
    let mut stderr = String::new();
    let result = match cli.command {
        Command::Verify { suite } => return verify(&suite, &g),
        Command::Witt(cmd) => witt(cmd, &g),
        Command::Rw(cmd) => rw(cmd, &g, &mut stderr),
        Command::Endo(cmd) => endo(cmd, &g),
    };
    match result {
        Ok((op, text)) => {
            let json = serde_json::to_string(&OpResult {
                op: &op,
                ring: g.ring.to_string(),
                result: text.clone(),
            })
            .expect("serializable");
            if let Some(path) = &g.out {
                if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                    return Outcome {
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                        code: 2,
                    };
                }
            }
            let stdout = if g.json { json } else { text };
            Outcome {
                stdout: format!("{stdout}\n"),
                stderr,
                code: 0,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("{stderr}error: {e}\n"),
            code: 2,
        },
    }
}

fn series(g: &GlobalOpts, s: &str) -> Result<WittVector, CliError> {
    if g.precision == 0 {
        return Err(CliError::Usage("Witt operations need --prec of at least 1".into()));
    }
    Ok(WittVector::from_series(UnitSeries::parse(g.ring, g.precision, s)?))
}

fn witt(cmd: WittCmd, g: &GlobalOpts) -> Result<(String, String), CliError> {
    let (op, text) = match cmd {
        WittCmd::Add { x, y } => ("witt add", series(g, &x)?.add(&series(g, &y)?)?.to_string()),
        WittCmd::Mul { x, y } => ("witt mul", series(g, &x)?.mul(&series(g, &y)?)?.to_string()),
        WittCmd::Neg { x } => ("witt neg", series(g, &x)?.neg().to_string()),
        WittCmd::Frob { n, x } => ("witt frob", series(g, &x)?.frobenius(n)?.to_string()),
        WittCmd::Versch { n, x } => ("witt versch", series(g, &x)?.verschiebung(n)?.to_string()),
        WittCmd::Teich { a } => {
            let a = g.ring.parse_element(&a)?;
            series(g, "1")?;
            ("witt teich", WittVector::teichmuller(&a, g.precision).to_string())
        }
        WittCmd::Ghost { x } => {
            let gh = series(g, &x)?.ghost();
            let items: Vec<String> = gh.iter().map(|c| c.to_string()).collect();
            ("witt ghost", format!("({})", items.join(", ")))
        }
        WittCmd::Decompose { x } => ("witt decompose", series(g, &x)?.decompose().to_string()),
        WittCmd::InvertInt { l } => {
            series(g, "1")?;
            ("witt invert-int", inverse_of_integer(l, g.precision, g.ring)?.to_string())
        }
        WittCmd::Scalar { m, x } => ("witt scalar", series(g, &x)?.int_scalar(m).to_string()),
    };
    Ok((op.to_string(), text))
}

fn rational(g: &GlobalOpts, s: &str) -> Result<RationalWitt, CliError> {
    Ok(RationalWitt::parse(g.ring, s)?)
}

fn rw(cmd: RwCmd, g: &GlobalOpts, stderr: &mut String) -> Result<(String, String), CliError> {
    let (op, value) = match cmd {
        RwCmd::Add { x, y } => ("rw add", rational(g, &x)?.add(&rational(g, &y)?)?),
        RwCmd::Mul { x, y } => {
            let (x, y) = (rational(g, &x)?, rational(g, &y)?);
            check_dim(x.degree() * y.degree(), "companion tensor product")?;
            ("rw mul", x.mul(&y)?)
        }
        RwCmd::Frob { n, x } => {
            let x = rational(g, &x)?;
            check_dim(x.degree(), "companion matrix")?;
            ("rw frob", x.frobenius(n)?)
        }
        RwCmd::Versch { n, x } => ("rw versch", rational(g, &x)?.verschiebung(n)?),
        RwCmd::Expand { x } => {
            let w = rational(g, &x)?.expand(g.precision);
            return Ok(("rw expand".into(), w.to_string()));
        }
        RwCmd::Eq { x, y } => {
            let eq = rational(g, &x)?.witt_eq(&rational(g, &y)?)?;
            return Ok(("rw eq".into(), eq.to_string()));
        }
    };
    if value.degree() > g.max_degree {
        let _ = writeln!(
            stderr,
            "warning: result has degree {} (limit {})",
            value.degree(),
            g.max_degree
        );
    }
    Ok((op.to_string(), value.to_string()))
}

fn matrix(g: &GlobalOpts, s: &str) -> Result<MatrixEndo, CliError> {
    let m = MatrixEndo::parse(g.ring, s)?;
    check_dim(m.size(), "matrix")?;
    Ok(m)
}

fn endo(cmd: EndoCmd, g: &GlobalOpts) -> Result<(String, String), CliError> {
    let (op, text) = match cmd {
        EndoCmd::Char { m } => ("endo char", matrix(g, &m)?.char_series().to_string()),
        EndoCmd::Frob { l, m } => ("endo frob", matrix(g, &m)?.frobenius(l)?.to_string()),
        EndoCmd::Versch { l, m } => {
            let m = matrix(g, &m)?;
            check_dim(l.saturating_mul(m.size()), "Verschiebung")?;
            ("endo versch", m.verschiebung(l)?.to_string())
        }
        EndoCmd::Tensor { a, b } => {
            let (a, b) = (matrix(g, &a)?, matrix(g, &b)?);
            check_dim(a.size() * b.size(), "tensor product")?;
            ("endo tensor", a.tensor(&b)?.to_string())
        }
        EndoCmd::Dsum { a, b } => {
            let (a, b) = (matrix(g, &a)?, matrix(g, &b)?);
            check_dim(a.size() + b.size(), "direct sum")?;
            ("endo dsum", a.direct_sum(&b)?.to_string())
        }
        EndoCmd::Nilindex { m } => {
            let m = matrix(g, &m)?;
            let cutoff = g.cutoff.unwrap_or_else(|| m.default_nilpotency_cutoff());
            if cutoff == 0 {
                return Err(CliError::Usage("--cutoff must be at least 1".into()));
            }
            let text = match m.nilpotency_index(Some(cutoff)) {
                Some(n) => n.to_string(),
                None => format!("not nilpotent within cutoff {cutoff}"),
            };
            ("endo nilindex", text)
        }
        EndoCmd::K0 { m } => ("endo k0", matrix(g, &m)?.k0_class().to_string()),
    };
    Ok((op.to_string(), text))
}

/// Human-readable rendering of a suite report.
pub fn render_report(report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite {} over {} (prec {}, trials {}, seed {})",
        report.suite, report.ring, report.precision, report.trials, report.seed
    );
    for p in &report.properties {
        let status = if p.ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {} [{}/{}]", p.name, p.passed, p.trials);
        if let Some(c) = &p.counterexample {
            let _ = writeln!(out, "  counterexample: {c}");
        }
    }
    for s in &report.skipped {
        let _ = writeln!(out, "SKIP {s}");
    }
    let _ = writeln!(out, "{}", if report.passed { "ok" } else { "FAILED" });
    out
}

fn verify(name: &str, g: &GlobalOpts) -> Outcome {
    let usage = |msg: String| Outcome {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code: 2,
    };
    let suite: Suite = match name.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    if let Some(reason) = suite.unsupported(g.ring) {
        return usage(reason);
    }
    let cfg = SuiteConfig {
        ring: g.ring,
        precision: g.precision,
        trials: g.trials,
        seed: g.seed,
    };
    let start = Instant::now();
    let mut report = suites::run(suite, cfg);
    let elapsed = start.elapsed();
    if g.timing {
        report.duration_ms = Some(elapsed.as_millis() as u64);
    }
    let json = serde_json::to_string_pretty(&report).expect("serializable");
    if let Some(path) = &g.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            return usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    let stdout = if g.json {
        format!("{json}\n")
    } else {
        render_report(&report)
    };
    let stderr = if g.json {
        String::new()
    } else {
        format!("elapsed {:.3}s\n", elapsed.as_secs_f64())
    };
    Outcome {
        stdout,
        stderr,
        code: if report.passed { 0 } else { 1 },
    }
}
