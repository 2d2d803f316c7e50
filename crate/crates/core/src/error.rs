use core::fmt;

use crate::surface::{FlipError, TriangulationError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Triangulation(TriangulationError),
    Flip(FlipError),
    /// A corner or slot index outside the triangulation.
    OutOfRange,
    /// Crossing `index` does not lie on the triangle reached so far.
    Inconsistent {
        index: usize,
    },
    /// Arcs must run from `P1` to `P2`.
    Endpoints,
    /// Arc recorded against a different triangulation.
    BaseMismatch,
    /// The arc crosses itself where an embedded arc is required.
    NotEmbedded,
    /// Surgery needs a pair that intersects.
    Disjoint,
    /// Straightening did not finish within its iteration cap.
    StraightenCap {
        iterations: usize,
    },
    /// A postcondition check failed; the message names it.
    Postcondition(&'static str),
    EmptyShadowList,
    InvalidSequence {
        index: usize,
    },
    InvalidLevelPosition(&'static str),
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Triangulation(e) => write!(f, "{e}"),
            Error::Flip(e) => write!(f, "{e}"),
            Error::OutOfRange => write!(f, "corner or side index out of range"),
            Error::Inconsistent { index } => {
                write!(
                    f,
                    "crossing word is locally inconsistent at crossing {index}"
                )
            }
            Error::Endpoints => write!(f, "arc must start at P1 and end at P2"),
            Error::BaseMismatch => write!(f, "arcs refer to different triangulations"),
            Error::NotEmbedded => write!(f, "arc is not embedded"),
            Error::Disjoint => write!(f, "arcs are disjoint; no surgery point exists"),
            Error::StraightenCap { iterations } => {
                write!(f, "straightening gave up after {iterations} flips")
            }
            Error::Postcondition(what) => write!(f, "postcondition failed: {what}"),
            Error::EmptyShadowList => write!(f, "shadow lists must be non-empty"),
            Error::InvalidSequence { index } => {
                write!(f, "arc sequence is not disjoint at index {index}")
            }
            Error::InvalidLevelPosition(what) => write!(f, "invalid level position: {what}"),
        }
    }
}

impl From<TriangulationError> for Error {
    fn from(e: TriangulationError) -> Self {
        Error::Triangulation(e)
    }
}

impl From<FlipError> for Error {
    fn from(e: FlipError) -> Self {
        Error::Flip(e)
    }
}
