use std::process::ExitCode;

use liecalc::Error;
use serde_json::json;

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Usage(String),
    /// The suite ran; `output` still has to be printed.
    LawFailures { output: String, failures: usize },
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl From<liecalc::expr::ParseError> for CliError {
    fn from(e: liecalc::expr::ParseError) -> Self {
        CliError::Engine(e.into())
    }
}

impl CliError {
    /// 1 parse, 2 domain, 3 backend/arity/usage, 4 invertibility, 5 law failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(e) => match e {
                Error::Parse(_) | Error::Json(_) | Error::InvalidSubset(_) => 1,
                Error::DomainViolation(_) | Error::NotComposable(_) => 2,
                Error::NotUnit(_) | Error::NonUnitParameter(_) | Error::DivisionByNonUnit => 4,
                _ => 3,
            },
            CliError::Usage(_) => 3,
            CliError::LawFailures { .. } => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::LawFailures { .. } => "law_failures",
            CliError::Engine(e) => match e {
                Error::BackendMismatch { .. } => "backend_mismatch",
                Error::InvalidBackend(_) | Error::InvalidPrime(_) => "invalid_backend",
                Error::ParamsMismatch | Error::CarrierMismatch => "ring_mismatch",
                Error::DirectionNotInCarrier(_) | Error::DirectionInCarrier(_) | Error::DirectionOutOfRange { .. } => {
                    "invalid_direction"
                }
                Error::OrderTooLarge(..) => "order_too_large",
                Error::InvalidPermutation(_) => "invalid_permutation",
                Error::InvalidSubset(_) => "invalid_subset",
                Error::NotUnit(_) => "not_unit",
                Error::NonUnitParameter(_) => "non_unit_parameter",
                Error::DivisionByNonUnit => "division_by_non_unit",
                Error::FloatOnlyPrimitive(_) => "float_only_primitive",
                Error::UnsupportedPrimitive(_) => "unsupported_primitive",
                Error::DomainViolation(_) => "domain_violation",
                Error::NotComposable(_) => "not_composable",
                Error::Arity { .. } => "arity_mismatch",
                Error::Dimension { .. } => "dimension_mismatch",
                Error::Parse(_) => "parse_error",
                Error::InvalidStructure(_) => "invalid_structure",
                Error::Json(_) => "parse_error",
                Error::UnknownSuite(_) => "unknown_suite",
            },
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Engine(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
            CliError::LawFailures { failures, .. } => format!("{failures} law sample(s) failed"),
        }
    }
}

/// Writes `{"error", "message", "exit_code"}` to stderr.
pub fn report(e: &CliError) -> ExitCode {
    let code = e.exit_code();
    eprintln!("{}", json!({ "error": e.kind(), "message": e.message(), "exit_code": code }));
    ExitCode::from(code)
}
