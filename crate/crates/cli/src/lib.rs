//! Batch front end for `l2dim`: parses a job, runs one engine command and
//! renders an exact key/value report.

pub mod commands;
pub mod expr;
pub mod input;
pub mod report;

use std::fs;
use std::path::PathBuf;

use clap::ValueEnum;
use l2dim::dimension::OracleConfig;
use l2dim::scalars::ReducePolicy;

pub use expr::ParseError;
pub use report::{parse_records, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Dim,
    Betti,
    Euler,
    Tor,
    Atiyah,
    OreCheck,
    Cramer,
    Linearize,
    CertifyOreFailure,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Dim => "dim",
            Self::Betti => "betti",
            Self::Euler => "euler",
            Self::Tor => "tor",
            Self::Atiyah => "atiyah",
            Self::OreCheck => "ore-check",
            Self::Cramer => "cramer",
            Self::Linearize => "linearize",
            Self::CertifyOreFailure => "certify-ore-failure",
        }
    }

    fn needs_input(self) -> bool {
        self != Self::CertifyOreFailure
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Reduce {
    #[default]
    None,
    Content,
}

impl From<Reduce> for ReducePolicy {
    fn from(r: Reduce) -> Self {
        match r {
            Reduce::None => ReducePolicy::None,
            Reduce::Content => ReducePolicy::Content,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Path(PathBuf),
    /// Inline payload; `;` separates lines.
    Inline(String),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub radius: usize,
    pub machine: bool,
    pub ladder: Vec<usize>,
    pub reduce: Reduce,
}

impl Default for Options {
    fn default() -> Self {
        Self { seed: 0, radius: 4, machine: false, ladder: OracleConfig::default().ladder, reduce: Reduce::None }
    }
}

impl Options {
    pub fn oracle_config(&self) -> OracleConfig {
        OracleConfig { seed: self.seed, ladder: self.ladder.clone(), ..OracleConfig::default() }
    }

    fn validate(&self) -> Result<(), String> {
        if self.ladder.is_empty() {
            return Err("--ladder needs at least one size".into());
        }
        if self.ladder.contains(&0) {
            return Err("--ladder sizes must be positive".into());
        }
        if self.ladder.windows(2).any(|w| w[0] >= w[1]) {
            return Err("--ladder sizes must be strictly increasing".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: Input,
    pub options: Options,
}

impl JobSpec {
    pub fn new(command: Command, input: Input) -> Self {
        Self { command, input, options: Options::default() }
    }

    pub fn inline(command: Command, text: &str) -> Self {
        Self::new(command, Input::Inline(text.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("error[{}]: {0}", .0.code())]
    Engine(#[from] l2dim::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Engine(_) => 1,
            Self::Parse(_) | Self::Usage(_) | Self::Io { .. } => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(spec: &JobSpec) -> Result<String, CliError> {
    match &spec.input {
        Input::Path(p) if p.as_os_str() == "-" => std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::Io { path: "standard input".into(), msg: e.to_string() }),
        Input::Path(p) => {
            fs::read_to_string(p).map_err(|e| CliError::Io { path: p.display().to_string(), msg: e.to_string() })
        }
        Input::Inline(s) => Ok(s.replace(';', "\n")),
        Input::None if spec.command.needs_input() => {
            Err(CliError::Usage(format!("'{}' needs an input file or --inline payload", spec.command.name())))
        }
        Input::None => Ok(String::new()),
    }
}

/// Runs one job and returns the report.
pub fn execute(spec: &JobSpec) -> Result<Report, CliError> {
    spec.options.validate().map_err(CliError::Usage)?;
    if !spec.command.needs_input() && spec.input != Input::None {
        return Err(CliError::Usage(format!("'{}' takes no input", spec.command.name())));
    }
    let src = read_input(spec)?;
    commands::dispatch(spec.command, &src, &spec.options)
}

/// Runs one job and renders its output and exit status.
pub fn run(spec: &JobSpec) -> Outcome {
    match execute(spec) {
        Ok(report) => Outcome { exit_code: 0, stdout: report.render(spec.options.machine), stderr: String::new() },
        Err(e) => Outcome { exit_code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}
