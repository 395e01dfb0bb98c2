//! Command dispatch and the exit-code contract.

use std::fs;
use std::path::Path;

use psifoc_core::{
    count_subspaces, explore_observation1_general, fermat_matrix, pascal_matrix, psi_plus_power,
    verify_cauchy_operator, verify_fermat_factorization, EvalMode, ExportFormat, Field, PsiFamily, Report,
    Scalar, ScalarMatrix,
};

use crate::command::{Action, Command, FamilySpec, MatrixKind, ParseError};

pub const DEFAULT_TRUNC: usize = 32;
pub const TRUNC_VAR: &str = "PSIFOC_TRUNC";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] psifoc_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}, line {line}: {source}")]
    FamilyFile { path: String, line: usize, source: psifoc_core::Error },
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Default top degree for operator verifications.
    pub trunc: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { trunc: DEFAULT_TRUNC }
    }
}

impl RunConfig {
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var(TRUNC_VAR) {
            Err(_) => Ok(RunConfig::default()),
            Ok(raw) => raw.trim().parse().map(|trunc| RunConfig { trunc }).map_err(|_| {
                CliError::Usage(format!("{TRUNC_VAR} must be a nonnegative integer, got {raw:?}"))
            }),
        }
    }
}

/// Exit code plus captured streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &CliError) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("psifoc: error: {e}\n") }
    }

    fn report(report: &Report, pretty: bool) -> Self {
        if report.verdict {
            Outcome::ok("PASS\n".to_owned())
        } else {
            Outcome { code: 1, stdout: format!("{}\n", report.to_json(pretty)), stderr: String::new() }
        }
    }
}

/// Reads a custom family table: line `n` holds `n_ψ`, trailing blank lines
/// ignored. If any entry mentions `q` the whole table is taken over Q(q).
pub fn load_custom_family(path: &Path) -> Result<PsiFamily, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let mut entries = Vec::new();
    for (i, line) in text.trim_end().lines().enumerate() {
        let value = Scalar::parse(line).map_err(|source| CliError::FamilyFile {
            path: shown.clone(),
            line: i + 1,
            source,
        })?;
        entries.push(value);
    }
    if entries.is_empty() {
        return Err(CliError::Usage(format!("{shown}: empty family table")));
    }
    let field =
        if entries.iter().any(|e| e.field() == Field::RatFunc) { Field::RatFunc } else { Field::Rational };
    let entries = entries.into_iter().map(|e| e.to_field(field)).collect::<Result<Vec<_>, _>>()?;
    Ok(PsiFamily::custom(entries)?)
}

pub fn resolve_family(spec: &FamilySpec) -> Result<PsiFamily, CliError> {
    Ok(match spec {
        FamilySpec::Classical => PsiFamily::Classical,
        FamilySpec::Gauss => PsiFamily::gauss_symbolic(),
        FamilySpec::GaussAt(q0) => PsiFamily::gauss_at(q0.clone()),
        FamilySpec::Fib => PsiFamily::Fibonacci,
        FamilySpec::Custom(path) => load_custom_family(path)?,
    })
}

/// Top degree when `--maxdeg` is absent: the truncation, capped for custom
/// tables at the largest degree their length supports.
fn default_maxdeg(fam: &PsiFamily, cfg: &RunConfig) -> usize {
    match fam {
        PsiFamily::Custom(table) => cfg.trunc.min(table.len().saturating_sub(1)),
        _ => cfg.trunc,
    }
}

/// Fermat factorization at every degree `0..=maxdeg`, one report.
pub fn verify_fermat_family(
    fam: &PsiFamily,
    size: usize,
    maxdeg: usize,
) -> Result<Report, psifoc_core::Error> {
    let mut report =
        Report::new().param("family", fam.to_string()).param("size", size).param("maxdeg", maxdeg);
    for degree in 0..=maxdeg {
        report.absorb(verify_fermat_factorization(size, &EvalMode::Eigen { family: fam.clone(), degree })?);
    }
    Ok(report)
}

/// Deformation for matrices built without `--eigen`.
fn fixed_mode(fam: &PsiFamily) -> Result<EvalMode, CliError> {
    match fam {
        PsiFamily::Classical => Ok(EvalMode::Scalar(Scalar::one(Field::Rational))),
        PsiFamily::Gauss(None) => Ok(EvalMode::symbolic()),
        PsiFamily::Gauss(Some(q0)) => Ok(EvalMode::Scalar(Scalar::Rat(q0.clone()))),
        other => Err(CliError::Usage(format!("family {other} has no fixed deformation; pass --eigen M"))),
    }
}

pub fn build_matrix(
    kind: MatrixKind,
    fam: &PsiFamily,
    size: usize,
    x: Option<&Scalar>,
    eigen: Option<usize>,
) -> Result<ScalarMatrix, CliError> {
    let mode = match eigen {
        Some(degree) => EvalMode::Eigen { family: fam.clone(), degree },
        None => fixed_mode(fam)?,
    };
    Ok(match kind {
        MatrixKind::Pascal => {
            let one = Scalar::one(Field::Rational);
            pascal_matrix(x.unwrap_or(&one), size, &mode)?
        }
        MatrixKind::Fermat => {
            if x.is_some() {
                return Err(CliError::Usage("--x applies only to pascal".to_owned()));
            }
            fermat_matrix(size, &mode)?
        }
    })
}

fn json<T: serde::Serialize>(value: &T, pretty: bool) -> String {
    if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) }
        .expect("value serializes")
}

fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let line = |s: String| Ok(Outcome::ok(s + "\n"));
    match &cmd.action {
        Action::Binom { family, n, k } => line(resolve_family(family)?.psi_binomial(*n, *k)?.to_string()),
        Action::Fact { family, n } => line(resolve_family(family)?.psi_factorial(*n)?.to_string()),
        Action::Falling { family, x, k } => line(resolve_family(family)?.psi_falling(*x, *k)?.to_string()),
        Action::Expand { family, power } => {
            line(json(&psi_plus_power(&resolve_family(family)?, *power)?, cmd.pretty))
        }
        Action::VerifyCauchy { family, r, s, j, maxdeg } => {
            let fam = resolve_family(family)?;
            let maxdeg = maxdeg.unwrap_or_else(|| default_maxdeg(&fam, cfg));
            Ok(Outcome::report(&verify_cauchy_operator(&fam, *r, *s, *j, maxdeg)?, cmd.pretty))
        }
        Action::VerifyFermat { family, size, maxdeg } => {
            let fam = resolve_family(family)?;
            let maxdeg = maxdeg.unwrap_or_else(|| default_maxdeg(&fam, cfg));
            Ok(Outcome::report(&verify_fermat_family(&fam, *size, maxdeg)?, cmd.pretty))
        }
        Action::VerifyObs1 { family, n } => {
            let fam = resolve_family(family)?;
            Ok(Outcome::report(&explore_observation1_general(&fam, *n, *n)?, cmd.pretty))
        }
        Action::Matrix { kind, family, size, x, eigen, format, out } => {
            let fam = resolve_family(family)?;
            let m = build_matrix(*kind, &fam, *size, x.as_ref(), *eigen)?;
            let text = match format {
                ExportFormat::Csv => m.to_csv(),
                ExportFormat::Json => json(&m, cmd.pretty) + "\n",
            };
            match out {
                None => Ok(Outcome::ok(text)),
                Some(path) => {
                    fs::write(path, text)
                        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                    Ok(Outcome::ok(String::new()))
                }
            }
        }
        Action::OracleSubspaces { q, n, k } => line(count_subspaces(*q, *n, *k)?.to_string()),
    }
}

/// Runs a parsed command: 0 on success or a passing verification, 1 with a
/// JSON report when a verification finds mismatches, 2 on any error.
pub fn run_command(cmd: &Command, cfg: &RunConfig) -> Outcome {
    execute(cmd, cfg).unwrap_or_else(|e| Outcome::error(&e))
}

/// Parse, read the environment, run.
pub fn run_argv<S: AsRef<str>>(argv: &[S]) -> Outcome {
    let cmd = match crate::parse_command(argv) {
        Ok(cmd) => cmd,
        Err(e) => return Outcome::error(&CliError::Parse(e)),
    };
    match RunConfig::from_env() {
        Ok(cfg) => run_command(&cmd, &cfg),
        Err(e) => Outcome::error(&e),
    }
}
