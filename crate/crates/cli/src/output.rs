use std::fmt;
use std::io::Write;
use std::path::Path;

use num_rational::BigRational;
use num_traits::Signed;
use qsl2::scalars::rational::parse_rational;
use qsl2::scalars::HalfInt;
use qsl2::Error;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Failed => 1,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Numeric(String),
    Range(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Range(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Numeric(m) | CliError::Range(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Syntax { .. } | Error::UnknownIdentifier { .. } | Error::InvalidHalfInt(_) => CliError::Parse(msg),
            Error::DivisionByZero
            | Error::UnsupportedInverse
            | Error::NegativeRadicand
            | Error::Pole(_)
            | Error::DomainError(_)
            | Error::InvalidPoint(_) => CliError::Numeric(msg),
            Error::NegativeFactorial(_) | Error::Range(_) | Error::Dimension(_) | Error::NotInDecomposition { .. } => {
                CliError::Range(msg)
            }
        }
    }
}

/// A finished command: both renderings plus the verification verdict.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub status: Status,
}

pub fn emit(report: &Report, format: Format, path: Option<&Path>) -> Result<Status, CliError> {
    let mut body = match format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("JSON values serialize"),
        Format::Text => report.text.trim_end().to_string(),
        Format::Csv => report.csv.clone().unwrap_or_else(|| report.text.clone()).trim_end().to_string(),
    };
    body.push('\n');
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(report.status)
}

pub fn parse_point(s: &str) -> Result<BigRational, CliError> {
    let t0 = parse_rational(s).ok_or_else(|| CliError::Parse(format!("invalid evaluation point `{s}`")))?;
    if !t0.is_positive() {
        return Err(CliError::Numeric(format!("evaluation point must be positive, got {s}")));
    }
    Ok(t0)
}

/// The spin cap from `QSL2_MAX_SPIN`, default 4.
pub fn max_spin() -> Result<HalfInt, CliError> {
    match std::env::var("QSL2_MAX_SPIN") {
        Ok(v) => v
            .parse::<HalfInt>()
            .map_err(|_| CliError::Parse(format!("QSL2_MAX_SPIN: invalid spin `{v}`"))),
        Err(_) => Ok(HalfInt::int(4)),
    }
}
