//! `relfrob`: command-line front end for the relative Frobenius toolkit.

mod cache;
mod commands;
mod json;
mod selftest;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use relfrob::{Config, Error};
use spec::ParseError;

#[derive(Parser)]
#[command(name = "relfrob", version, about = "Exact checks of Frobenius-type counting formulas for finite group actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Group file, or an inline `builtin:<name> [n=..] [q=..]`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// natural | regular | point | flags | cosets:<expr>;<expr>…
    #[arg(long, global = true)]
    pub gset: Option<String>,
    /// Genus.
    #[arg(long, visible_alias = "genus", global = true)]
    pub k: Option<u32>,
    /// Number of punctures / stabilizer factors.
    #[arg(long, visible_alias = "punctures", global = true)]
    pub m: Option<u32>,
    /// Target element: e, g0*g1^-1, cycle notation, or a label.
    #[arg(long, global = true)]
    pub g: Option<String>,
    /// Matrix size for `gln`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Field size for `gln`: a prime below 256, or 4.
    #[arg(long, global = true)]
    pub q: Option<usize>,
    /// Genus shift for the f-equivalence check.
    #[arg(long, global = true)]
    pub l: Option<u32>,
    /// Euler characteristic for topology-invariance checks.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub chi: Option<i64>,
    /// Source point (0-based) for `verify-sph`; all pairs when omitted.
    #[arg(long, global = true)]
    pub x1: Option<usize>,
    /// Target point (0-based) for `verify-sph`; all when omitted.
    #[arg(long, global = true)]
    pub x2: Option<usize>,
    /// Subgroup generators (repeatable, or `;`-separated).
    #[arg(long, global = true)]
    pub subgroup: Vec<String>,
    /// corrected | literal
    #[arg(long, global = true, default_value = "corrected")]
    pub convention: String,
    /// Maximum iterations for any enumeration (default 10^9).
    #[arg(long, global = true, env = "RELFROB_WORK_BOUND")]
    pub work_bound: Option<u128>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Character-table cache directory (default ~/.cache/relfrob).
    #[arg(long, global = true, env = "RELFROB_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Disable the character-table cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    /// One `path<TAB>value` line per leaf of the report.
    Tsv,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Character table of the group.
    Chartable,
    /// Commutator count `[x1,y1]⋯[xk,yk] = g`, character side vs enumeration.
    VerifyClassic,
    /// Relative count for (G, X, g, k, m), character side vs enumeration.
    VerifyMain,
    /// Spherical-character form of the relative count at point pairs.
    VerifySph,
    /// Multiplicity-freeness by three routes.
    Gelfand,
    /// The f-statistic, optionally with the equivalence check for `--l`.
    Fstat,
    /// Groupoid volume, or topology invariance with `--chi`.
    Fgvol,
    /// Framed representation count, character side vs enumeration.
    Fgcount,
    /// GL_n(F_q) closed forms and flag checks.
    Gln {
        #[command(subcommand)]
        what: GlnCommand,
    },
    /// Runs the built-in battery and reports every check.
    Selftest,
}

#[derive(Subcommand, Clone, Debug)]
pub enum GlnCommand {
    Vol,
    Epoly,
    Dims,
    Check,
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Chartable => "chartable".into(),
            Command::VerifyClassic => "verify-classic".into(),
            Command::VerifyMain => "verify-main".into(),
            Command::VerifySph => "verify-sph".into(),
            Command::Gelfand => "gelfand".into(),
            Command::Fstat => "fstat".into(),
            Command::Fgvol => "fgvol".into(),
            Command::Fgcount => "fgcount".into(),
            Command::Gln { what } => format!("gln {}", format!("{:?}", what).to_lowercase()),
            Command::Selftest => "selftest".into(),
        }
    }
}

/// Failure of a command before it produced results.
pub enum CliError {
    Parse(ParseError),
    Lib(Error),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<spec::ResolveError> for CliError {
    fn from(e: spec::ResolveError) -> Self {
        match e {
            spec::ResolveError::Parse(p) => CliError::Parse(p),
            spec::ResolveError::Lib(l) => CliError::Lib(l),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Lib(Error::TooLarge { .. } | Error::WorkBoundExceeded { .. }) => 3,
            CliError::Lib(Error::InternalInconsistency(_)) => 1,
            CliError::Lib(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Lib(Error::TooLarge { .. }) => "TooLarge",
            CliError::Lib(Error::WorkBoundExceeded { .. }) => "WorkBoundExceeded",
            CliError::Lib(Error::InternalInconsistency(_)) => "InternalInconsistency",
            CliError::Lib(Error::NonPolynomial(_)) => "NonPolynomial",
            CliError::Lib(Error::ZeroBase) => "ZeroBase",
            CliError::Lib(Error::NotRational(_)) => "NotRational",
            CliError::Lib(Error::InvalidInput(_)) => "InvalidInput",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parse(p) => p.to_string(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

/// Results of a command and whether every check in it held.
pub struct Outcome {
    pub results: Value,
    pub ok: bool,
}

fn inputs(c: &Common) -> Value {
    let mut m = Map::new();
    let mut put = |k: &str, v: Value| {
        if !v.is_null() {
            m.insert(k.to_string(), v);
        }
    };
    put("group", json!(c.group));
    put("gset", json!(c.gset));
    put("k", json!(c.k));
    put("m", json!(c.m));
    put("g", json!(c.g));
    put("n", json!(c.n));
    put("q", json!(c.q));
    put("l", json!(c.l));
    put("chi", json!(c.chi));
    put("x1", json!(c.x1));
    put("x2", json!(c.x2));
    if !c.subgroup.is_empty() {
        put("subgroup", json!(c.subgroup));
    }
    put("convention", json!(c.convention));
    put("work_bound", json!(c.work_bound.map(|w| w.to_string())));
    Value::Object(m)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.common.threads {
        if t == 0 || rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("error: --threads must be a positive integer");
            return ExitCode::from(2);
        }
    }
    let mut config = Config::default();
    if let Some(w) = cli.common.work_bound {
        config.work_bound = w;
    }
    let start = Instant::now();
    let outcome = commands::run(&cli.command, &cli.common, &config);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;

    let mut report = Map::new();
    report.insert("command".into(), json!(cli.command.name()));
    report.insert("inputs".into(), inputs(&cli.common));
    report.insert("versions".into(), json!({"schema": 1}));
    let timings = if cli.common.timings { json!({"total": elapsed}) } else { json!({}) };
    report.insert("timings_ms".into(), timings);
    let code = match outcome {
        Ok(o) => {
            report.insert("results".into(), o.results);
            report.insert("ok".into(), json!(o.ok));
            u8::from(!o.ok)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            report.insert("error".into(), json!({"kind": e.kind(), "message": e.message()}));
            e.exit_code()
        }
    };
    let report = Value::Object(report);
    let text = match cli.common.format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Tsv => json::to_tsv(&report),
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(code)
}
