use std::fmt;
use std::path::Path;

use alcove::{Error, StarFailure};

pub const PARSE: u8 = 2;
pub const DIMENSION: u8 = 3;
pub const NO_STAR: u8 = 4;
pub const PRECONDITION: u8 = 5;
pub const EMPTY: u8 = 6;
pub const NOT_NORMAL: u8 = 7;
pub const PLOT_ORDER: u8 = 8;
const INTERNAL: u8 = 1;

/// A failed command: the message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Failure::new(PARSE, format!("{}: {err}", path.display()))
    }

    pub fn no_star(f: &StarFailure) -> Self {
        Failure::new(
            NO_STAR,
            format!(
                "Kleene star does not exist\nwitness cycle: {}\ncycle weight: {}",
                format_cycle(&f.witness_cycle),
                f.weight
            ),
        )
    }
}

/// `0 -> 1 -> 0`
pub fn format_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .chain(cycle.first())
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" -> ")
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::Parse(_) | Error::InconsistentBounds(_) => PARSE,
            Error::DimensionMismatch(_)
            | Error::NotSquare { .. }
            | Error::NotInSection(_)
            | Error::TooLarge { .. } => DIMENSION,
            Error::Star(star) => return Failure::no_star(star),
            Error::NonZeroDiagonal | Error::NotKleeneStar | Error::NotNormalIdempotent => {
                PRECONDITION
            }
            Error::EmptyPolytope => EMPTY,
            Error::NotNormal | Error::OriginNotContained => NOT_NORMAL,
            Error::NotInPolytope(_) => DIMENSION,
            Error::Internal(_) => INTERNAL,
        };
        Failure::new(code, err.to_string())
    }
}
