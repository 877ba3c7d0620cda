use alloc::string::String;
use core::fmt;

use crate::exact::Rat;

/// Pipeline stage at which a construction or parameter check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Parameters,
    H,
    S1,
    S2T2,
    DiscS,
    DiscT,
    DiscBigS,
    DiscBigT,
    Roots,
    FromSystem,
    Verify,
    Curve,
    Point,
    Map,
    Family,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Parameters => "parameters",
            Stage::H => "h",
            Stage::S1 => "s1",
            Stage::S2T2 => "s2/t2",
            Stage::DiscS => "s1^2-4s2",
            Stage::DiscT => "t1^2-4t2",
            Stage::DiscBigS => "S1^2-4S2",
            Stage::DiscBigT => "T1^2-4T2",
            Stage::Roots => "roots",
            Stage::FromSystem => "from-system",
            Stage::Verify => "verify",
            Stage::Curve => "curve",
            Stage::Point => "point",
            Stage::Map => "map",
            Stage::Family => "family",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidArgument(String),
    /// A rational function was evaluated at a zero of its denominator.
    Pole {
        at: Rat,
    },
    DegenerateParameter {
        stage: Stage,
        detail: String,
    },
    ConstructionFailure {
        stage: Stage,
        detail: String,
    },
    NotRational,
    MethodInapplicable(String),
    Unsolvable(String),
    MapUndefined(String),
    /// A reference formula produced a value that fails its target equation.
    TranscriptionAlarm(String),
    Parse {
        token: String,
    },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn degenerate(stage: Stage, detail: impl Into<String>) -> Self {
        Error::DegenerateParameter {
            stage,
            detail: detail.into(),
        }
    }

    pub(crate) fn construction(stage: Stage, detail: impl Into<String>) -> Self {
        Error::ConstructionFailure {
            stage,
            detail: detail.into(),
        }
    }

    pub(crate) fn alarm(msg: impl Into<String>) -> Self {
        Error::TranscriptionAlarm(msg.into())
    }

    /// True for errors that mean "this parameter does not work", as opposed to bad input.
    pub fn is_parameter_failure(&self) -> bool {
        matches!(
            self,
            Error::DegenerateParameter { .. }
                | Error::ConstructionFailure { .. }
                | Error::Pole { .. }
                | Error::MapUndefined(_)
                | Error::MethodInapplicable(_)
                | Error::Unsolvable(_)
                | Error::NotRational
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::Pole { at } => write!(f, "pole at {at}"),
            Error::DegenerateParameter { stage, detail } => {
                write!(
                    f,
                    "degenerate parameter at stage {}: {detail}",
                    stage.name()
                )
            }
            Error::ConstructionFailure { stage, detail } => {
                write!(f, "construction failed at stage {}: {detail}", stage.name())
            }
            Error::NotRational => write!(f, "discriminant is not a rational square"),
            Error::MethodInapplicable(m) => write!(f, "method inapplicable: {m}"),
            Error::Unsolvable(m) => write!(f, "unsolvable: {m}"),
            Error::MapUndefined(m) => write!(f, "map undefined: {m}"),
            Error::TranscriptionAlarm(m) => write!(f, "transcription alarm: {m}"),
            Error::Parse { token } => write!(f, "cannot parse {token:?}"),
        }
    }
}

impl core::error::Error for Error {}
