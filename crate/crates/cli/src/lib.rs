//! Command-line front end for `circulant-core`.
//!
//! Exit codes: 0 success, 1 I/O, 2 validation, 3 degenerate input,
//! 4 sampling failure. Diagnostics are a single line on stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use circulant_core::bargmann::canonicalize;
use circulant_core::bipartite::bipartite_demo;
use circulant_core::channels::apply_kraus;
use circulant_core::coherence::{coherence_sweep, theta_grid, write_csv, write_json};
use circulant_core::io::{
    canonicalization_to_json, matrix_from_json, matrix_to_json, tuple_from_json,
    weights_from_json, SpectrumRecord,
};
use circulant_core::{ChannelWeights, Error, NormP};

#[derive(Debug, Parser)]
#[command(name = "circulant", version, about = "Circulant quantum channel toolkit")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a channel or inspect its spectrum.
    #[command(subcommand)]
    Channel(ChannelCommand),
    /// Coherence of the qutrit example family.
    #[command(subcommand)]
    Coherence(CoherenceCommand),
    /// Bargmann-invariant canonicalization.
    #[command(subcommand)]
    Bargmann(BargmannCommand),
    /// Local channels on bipartite states.
    #[command(subcommand)]
    Bipartite(BipartiteCommand),
}

#[derive(Debug, Subcommand)]
pub enum ChannelCommand {
    /// Write Φ_λ(X) for a matrix file X.
    Apply(ApplyArgs),
    /// Natural-representation spectrum, α coefficients and Choi PT spectrum.
    Spectrum(SpectrumArgs),
}

#[derive(Debug, Subcommand)]
pub enum CoherenceCommand {
    /// Coherence of ρ, Φ(ρ), Δ(ρ) along θ ∈ [0, π].
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
pub enum BargmannCommand {
    /// Canonicalize a tuple of pure states.
    Canon(CanonArgs),
}

#[derive(Debug, Subcommand)]
pub enum BipartiteCommand {
    /// Sample an entangled state and apply Φ_A ⊗ id_B.
    Demo(DemoArgs),
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    /// `uniform`, comma-separated reals (normalized), or a JSON file.
    #[arg(long)]
    pub weights: String,
    /// Matrix JSON file.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub weights: String,
    /// Dimension; required with `--weights uniform`.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Eigenvalue classification and entanglement-breaking tolerance.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_6)]
    pub phi: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    #[arg(long, default_value = "1")]
    pub p: NormP,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Significant digits in CSV output; shortest round-trip when omitted.
    #[arg(long)]
    pub digits: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CanonArgs {
    /// Tuple JSON file.
    #[arg(long)]
    pub tuple: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long = "da")]
    pub d_a: usize,
    #[arg(long = "db")]
    pub d_b: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Validation(String),
    Degenerate(String),
    Sampling(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Sampling(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Validation(m) | CliError::Degenerate(m) | CliError::Sampling(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Degenerate(_) => CliError::Degenerate(msg),
            Error::Sampling { .. } => CliError::Sampling(msg),
            _ => CliError::Validation(msg),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

/// `uniform`, inline comma-separated reals, or a JSON file path.
pub fn parse_weights(spec: &str, dim: Option<usize>) -> Result<ChannelWeights, CliError> {
    let spec = spec.trim();
    if spec == "uniform" {
        let d = dim.ok_or_else(|| CliError::Validation("uniform weights need a dimension".into()))?;
        return Ok(ChannelWeights::uniform(d)?);
    }
    let inline: Result<Vec<f64>, _> = spec.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let w = match inline {
        Ok(raw) => ChannelWeights::from_unnormalized(raw)?,
        Err(_) => weights_from_json(&read(Path::new(spec))?)?,
    };
    if let Some(d) = dim {
        if d != w.dim() {
            return Err(CliError::Validation(format!(
                "weights have length {} but dimension {d} was requested",
                w.dim()
            )));
        }
    }
    Ok(w)
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Channel(ChannelCommand::Apply(a)) => {
            let x = matrix_from_json(&read(&a.matrix)?)?;
            let d = x.square_dim()?;
            let w = parse_weights(&a.weights, Some(d))?;
            let y = apply_kraus(&w, &x)?;
            emit(a.out.as_deref(), &matrix_to_json(&y), stdout)
        }
        Command::Channel(ChannelCommand::Spectrum(a)) => {
            if !(a.tol.is_finite() && a.tol >= 0.0) {
                return Err(CliError::Validation(format!("--tol must be a nonnegative real, got {}", a.tol)));
            }
            let w = parse_weights(&a.weights, a.dim)?;
            let record = SpectrumRecord::compute(&w, a.tol)?;
            emit(a.out.as_deref(), &record.to_json(), stdout)
        }
        Command::Coherence(CoherenceCommand::Sweep(a)) => {
            if a.digits == Some(0) {
                return Err(CliError::Validation("--digits must be at least 1".into()));
            }
            let grid = theta_grid(a.steps)?;
            let table = coherence_sweep(a.phi, &grid, a.p)?;
            let text = match a.format {
                Format::Csv => write_csv(&table.rows, a.digits),
                Format::Json => write_json(&table),
            };
            emit(a.out.as_deref(), &text, stdout)
        }
        Command::Bargmann(BargmannCommand::Canon(a)) => {
            let t = tuple_from_json(&read(&a.tuple)?)?;
            let (canon, report) = canonicalize(&t)?;
            emit(a.out.as_deref(), &canonicalization_to_json(&report, &canon), stdout)
        }
        Command::Bipartite(BipartiteCommand::Demo(a)) => {
            let report = bipartite_demo(a.d_a, a.d_b, a.seed)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(a.out.as_deref(), &text, stdout)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "circulant: {}", line.trim_start_matches("error: "));
            return 2;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "circulant: {}", e.message().replace('\n', " "));
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_parsing() {
        let w = parse_weights("uniform", Some(3)).unwrap();
        assert_eq!(w.dim(), 3);
        assert!(matches!(parse_weights("uniform", None), Err(CliError::Validation(_))));
        let w = parse_weights("3, 1", None).unwrap();
        assert_eq!(w.lambda(), &[0.75, 0.25]);
        assert!(matches!(parse_weights("1,1,1", Some(4)), Err(CliError::Validation(_))));
        assert!(matches!(parse_weights("-1,2", None), Err(CliError::Validation(_))));
        assert!(matches!(parse_weights("/nonexistent/w.json", None), Err(CliError::Io(_))));
    }

    #[test]
    fn exit_code_mapping() {
        assert_eq!(CliError::from(Error::Degenerate("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(Error::Sampling { what: "x".into(), tries: 1 }).exit_code(), 4);
        assert_eq!(CliError::from(Error::Shape("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(Error::Parse("x".into())).exit_code(), 2);
    }

    #[test]
    fn usage_errors_are_single_line() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["circulant", "channel", "bogus"], &mut out, &mut err);
        assert_eq!(code, 2);
        assert_eq!(String::from_utf8(err).unwrap().lines().count(), 1);
    }

    #[test]
    fn sweep_to_stdout() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["circulant", "coherence", "sweep", "--steps", "3", "--p", "2"], &mut out, &mut err);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with("theta,c_rho,c_phi,c_delta\n0,0,0,0\n"));
    }
}
