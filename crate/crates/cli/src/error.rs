use adelic_hurwitz::cohen::CohenError;
use adelic_hurwitz::lfun::LfunError;
use adelic_hurwitz::magnus::MagnusError;
use adelic_hurwitz::measure::MeasureError;
use adelic_hurwitz::padic::PadicError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("not stabilized: {0}")]
    NotStabilized(String),
    #[error("io: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::NotStabilized(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::NotStabilized { .. } => CliError::NotStabilized(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LfunError> for CliError {
    fn from(e: LfunError) -> Self {
        match e {
            LfunError::Measure(m) => m.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CohenError> for CliError {
    fn from(e: CohenError) -> Self {
        match e {
            CohenError::Lfun(l) => l.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PadicError> for CliError {
    fn from(e: PadicError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<MagnusError> for CliError {
    fn from(e: MagnusError) -> Self {
        CliError::Usage(e.to_string())
    }
}
