use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A shape was empty, had a zero part, or was not non-increasing.
    InvalidShape(String),
    /// A content vector had a zero count.
    InvalidContent(String),
    /// Shape size and content size disagree.
    SizeMismatch { shape: usize, content: usize },
    /// Rows do not match the declared shape, or an entry is zero.
    MalformedFilling(String),
    NotRowStandard,
    NotSemistandard,
    NotStandard,
    CellOutOfRange { row: usize, col: usize },
    /// The two cells of a transposition are not adjacent in height order.
    NotHeightAdjacent,
    EqualValues,
    /// The transposition would break row-standardness.
    Inadmissible,
    /// `build_from_inversions` could not realize the requested set.
    InvalidInversionSet(String),
    StandardizationMismatch,
    /// Polynomial division left a nonzero remainder.
    InexactDivision,
    ZeroPolynomial,
    InvalidArgument(String),
    /// An exhaustive enumeration would exceed the configured size cap.
    CapExceeded { size: usize, cap: usize },
    InvalidPath(String),
    InvalidDepthSequence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidShape(s) => write!(f, "invalid shape: {s}"),
            Error::InvalidContent(s) => write!(f, "invalid content: {s}"),
            Error::SizeMismatch { shape, content } => {
                write!(f, "shape has {shape} cells but content has {content} entries")
            }
            Error::MalformedFilling(s) => write!(f, "malformed filling: {s}"),
            Error::NotRowStandard => f.write_str("filling is not row-standard"),
            Error::NotSemistandard => f.write_str("filling is not a semistandard tableau"),
            Error::NotStandard => f.write_str("filling is not a standard Young tableau"),
            Error::CellOutOfRange { row, col } => write!(f, "no cell at ({row},{col})"),
            Error::NotHeightAdjacent => f.write_str("entries are not adjacent in height order"),
            Error::EqualValues => f.write_str("cannot transpose entries of equal value"),
            Error::Inadmissible => f.write_str("transposition breaks row-standardness"),
            Error::InvalidInversionSet(s) => write!(f, "invalid inversion set for T: {s}"),
            Error::StandardizationMismatch => {
                f.write_str("filling does not standardize to the given tableau")
            }
            Error::InexactDivision => f.write_str("inexact division"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds enumeration cap {cap}")
            }
            Error::InvalidPath(s) => write!(f, "invalid Dyck path: {s}"),
            Error::InvalidDepthSequence(s) => write!(f, "invalid depth sequence: {s}"),
        }
    }
}

impl core::error::Error for Error {}
