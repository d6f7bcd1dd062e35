//! Command-line front end.

mod input;

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{analyze, height_formula, ClassifyError};
use crate::groebner::Limits;
use crate::pencil::{kw_decompose, kw_invariants, verify_certificate, KWForm, PencilError};
use crate::polycore::{is_prime, MonomialOrder};
use crate::radgen::RadgenError;

pub use input::{parse_block_spec, parse_matrix_file, MatrixFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;
pub const EXIT_EIGENVALUES: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: unknown variable `{name}`")]
    UnknownVariable { line: usize, column: usize, name: String },
    #[error("line {line}, column {column}: `{entry}` is not a linear form")]
    Nonlinear { line: usize, column: usize, entry: String },
    #[error("file declares field {header} but --char {flag} was given")]
    FieldConflict { header: u64, flag: u64 },
    #[error("{0}")]
    Config(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let groebner = match self {
            CliError::Pencil(PencilError::EigenvaluesNotInField { .. })
            | CliError::Classify(ClassifyError::Pencil(PencilError::EigenvaluesNotInField { .. })) => {
                return EXIT_EIGENVALUES
            }
            CliError::Classify(ClassifyError::Radgen(RadgenError::Groebner(g))) => Some(g),
            _ => None,
        };
        match groebner {
            Some(g) if g.is_resource_cap() => EXIT_RESOURCE_CAP,
            _ => EXIT_ERROR,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "minorkit", version, about = "Ideals of 2-minors of 2 x n matrices of linear forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Height, cd and ara of the ideal of 2-minors, with a witness when one is known.
    Analyze(JobArgs),
    /// Kronecker-Weierstrass form of the input.
    Decompose(JobArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum OrderArg {
    Degrevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "blocks"])))]
pub struct JobArgs {
    /// Matrix file: a `vars:` line, an optional `field: p` line, two rows of `;`-separated entries.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Block spec such as "J(0,1) B(1) B(1) J(1,1)".
    #[arg(long)]
    pub blocks: Option<String>,
    /// Field characteristic, 0 or a prime.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    #[arg(long, overrides_with = "no_verify")]
    pub verify: bool,
    #[arg(long, overrides_with = "verify")]
    pub no_verify: bool,
    /// Verify even above --max-verify-vars.
    #[arg(long)]
    pub force_verify: bool,
    #[arg(long, default_value_t = 12)]
    pub max_verify_vars: usize,
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[arg(long, default_value_t = Limits::default().max_pairs as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub pair_cap: u64,
    #[arg(long, default_value_t = Limits::default().max_degree as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub degree_cap: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Analyze,
    Decompose,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    /// Matrix-file text given directly.
    MatrixText(String),
    Blocks(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// On up to the variable cap.
    Auto,
    On,
    Off,
}

#[derive(Clone, Debug)]
pub struct JobConfig {
    pub task: Task,
    pub input: Input,
    /// `None` defers to the file's `field:` header, then to 0.
    pub characteristic: Option<u64>,
    pub verify: VerifyMode,
    pub force_verify: bool,
    pub max_verify_vars: usize,
    pub order: MonomialOrder,
    pub output: OutputFormat,
    pub limits: Limits,
}

impl JobConfig {
    pub fn new(task: Task, input: Input) -> Self {
        JobConfig {
            task,
            input,
            characteristic: None,
            verify: VerifyMode::Auto,
            force_verify: false,
            max_verify_vars: 12,
            order: MonomialOrder::DegRevLex,
            output: OutputFormat::Text,
            limits: Limits::default(),
        }
    }

    pub fn from_cli(cli: Cli) -> Self {
        let (task, a) = match cli.command {
            Command::Analyze(a) => (Task::Analyze, a),
            Command::Decompose(a) => (Task::Decompose, a),
        };
        let input = match (a.file, a.blocks) {
            (Some(f), _) => Input::File(f),
            (None, Some(b)) => Input::Blocks(b),
            (None, None) => unreachable!("clap requires an input"),
        };
        JobConfig {
            task,
            input,
            characteristic: a.characteristic,
            verify: if a.verify {
                VerifyMode::On
            } else if a.no_verify {
                VerifyMode::Off
            } else {
                VerifyMode::Auto
            },
            force_verify: a.force_verify,
            max_verify_vars: a.max_verify_vars,
            order: a.order.into(),
            output: a.output,
            limits: Limits {
                max_pairs: a.pair_cap as usize,
                max_degree: a.degree_cap as u32,
            },
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if let Some(ch) = self.characteristic {
            if ch != 0 && !is_prime(ch) {
                return Err(CliError::Config(format!("--char {ch} is neither 0 nor a prime")));
            }
        }
        if self.limits.max_pairs == 0 || self.limits.max_degree == 0 {
            return Err(CliError::Config("resource caps must be positive".into()));
        }
        Ok(())
    }

    /// Whether to run verification for a form with `nvars` variables, or
    /// why not.
    fn verification(&self, nvars: usize) -> Result<(), String> {
        match self.verify {
            VerifyMode::Off => Err("disabled".into()),
            _ if nvars > self.max_verify_vars && !self.force_verify => Err(format!(
                "{nvars} variables exceed the cap of {}; use --force-verify",
                self.max_verify_vars
            )),
            _ => Ok(()),
        }
    }
}

/// Invariants of a decomposition, for `decompose` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub schema: u32,
    pub form: String,
    pub characteristic: u64,
    pub ncols: usize,
    pub nvars: usize,
    pub free_vars: Vec<String>,
    pub nilpotent: Vec<usize>,
    pub scroll: Vec<usize>,
    /// Per eigenvalue, the Jordan block lengths.
    pub jordan: Vec<(String, Vec<usize>)>,
    pub gamma: usize,
    pub height: usize,
    /// Whether the certificate maps the input onto the form; absent for
    /// block-spec input.
    pub certificate_verified: Option<bool>,
}

impl DecompositionReport {
    pub fn new(form: &KWForm, certificate_verified: Option<bool>) -> Result<Self, CliError> {
        let inv = kw_invariants(form);
        Ok(DecompositionReport {
            schema: crate::classify::SCHEMA_VERSION,
            form: form.to_string(),
            characteristic: form.ring().field().characteristic(),
            ncols: inv.ncols,
            nvars: form.ring().nvars(),
            free_vars: form.free_vars().to_vec(),
            nilpotent: inv.nilpotent.clone(),
            scroll: inv.scroll.clone(),
            jordan: inv
                .jordan
                .iter()
                .map(|c| (c.eigenvalue.to_string(), c.lengths.clone()))
                .collect(),
            gamma: inv.gamma(),
            height: height_formula(&inv)?,
            certificate_verified,
        })
    }

    pub fn to_text(&self) -> String {
        let jordan: Vec<String> = self
            .jordan
            .iter()
            .map(|(l, m)| format!("{l}: {m:?}"))
            .collect();
        let rows = [
            ("form", self.form.clone()),
            ("characteristic", self.characteristic.to_string()),
            ("size", format!("2 x {}, {} variables", self.ncols, self.nvars)),
            ("nilpotent", format!("{:?}", self.nilpotent)),
            ("scroll", format!("{:?}", self.scroll)),
            ("jordan", format!("[{}]", jordan.join(", "))),
            ("gamma", self.gamma.to_string()),
            ("height", self.height.to_string()),
            (
                "certificate",
                match self.certificate_verified {
                    Some(true) => "verified".into(),
                    Some(false) => "FAILED".into(),
                    None => "identity (block input)".into(),
                },
            ),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<14}  {v}\n"));
        }
        if !self.free_vars.is_empty() {
            out.push_str(&format!("{:<14}  {}\n", "free vars", self.free_vars.join(" ")));
        }
        out
    }
}

/// The form to work on and, for matrix input, whether its certificate
/// checks out.
fn load(config: &JobConfig) -> Result<(KWForm, Option<bool>), CliError> {
    let text = match &config.input {
        Input::Blocks(spec) => {
            let ch = config.characteristic.unwrap_or(0);
            return Ok((parse_block_spec(spec, ch, config.order)?, None));
        }
        Input::MatrixText(t) => t.clone(),
        Input::File(p) => std::fs::read_to_string(p).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })?,
    };
    let parsed = parse_matrix_file(&text, config.characteristic, config.order)?;
    let form = kw_decompose(&parsed.matrix)?;
    let ok = verify_certificate(&form, &parsed.matrix);
    Ok((form, Some(ok)))
}

fn emit<T: Serialize>(out: &mut dyn Write, format: OutputFormat, value: &T, text: String) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable")),
        OutputFormat::Text => write!(out, "{text}"),
    }
}

fn execute(config: &JobConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    config.validate()?;
    let (form, cert) = load(config)?;
    let io = |e: std::io::Error| CliError::Config(format!("write failed: {e}"));
    if cert == Some(false) {
        return Err(CliError::Config("decomposition certificate did not verify".into()));
    }
    match config.task {
        Task::Decompose => {
            let rep = DecompositionReport::new(&form, cert)?;
            emit(out, config.output, &rep, rep.to_text()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Task::Analyze => {
            let ch = form.ring().field().characteristic();
            let mut analysis = analyze(&form, ch)?;
            let mut code = EXIT_OK;
            match config.verification(form.ring().nvars()) {
                Ok(()) => {
                    if analysis.verify(&config.limits)? == Some(false) {
                        writeln!(err, "error: witness does not generate the ideal up to radical").map_err(io)?;
                        code = EXIT_VERIFY_FAILED;
                    }
                }
                Err(reason) => analysis.skip_verification(reason),
            }
            let r = &analysis.report;
            emit(out, config.output, r, r.to_text()).map_err(io)?;
            Ok(code)
        }
    }
}

/// Runs one job, writing the report to `out` and diagnostics to `err`;
/// returns the process exit code.
pub fn run(config: &JobConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
