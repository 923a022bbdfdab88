use std::fmt;

use crate::cartan::LieType;

/// Errors raised when constructing or validating domain values.
///
/// Crystal operators returning the ideal element 0 are *not* errors; they are
/// encoded as `None` by the `apply` family of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank outside the range supported by the Lie type.
    InvalidRank { lie_type: LieType, rank: usize },
    /// A crystal index outside 1..=n.
    IndexOutOfRange { index: usize, rank: usize },
    /// A letter that does not belong to the alphabet of the given type/rank.
    InvalidLetter {
        letter: String,
        lie_type: LieType,
        rank: usize,
    },
    /// Weight coefficients that are negative or violate the per-type class
    /// constraints (type B weights need an even last coefficient, type D
    /// weights need equal last two coefficients).
    InvalidWeight(String),
    /// A row list that is not left-justified with weakly decreasing lengths.
    InvalidShape(String),
    /// A structurally malformed input (bad symbol string, mismatched block
    /// layout, index list out of range, ...).
    InvalidInput(String),
    /// The lowering operator selected the leading `u_inf` factor of an
    /// embedded element. This cannot happen for elements in the image of the
    /// embedding; hitting it means the input was not an image element.
    HeadSelected { index: usize },
    /// Exponents handed to a closed-form evaluator do not satisfy the
    /// inequality chain under which the formula is valid.
    HypothesisChain(String),
    /// Enumeration exceeded the configured node cap.
    CapExceeded { cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { lie_type, rank } => {
                write!(f, "rank {rank} is not valid for type {lie_type}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "crystal index {index} out of range 1..={rank}")
            }
            Error::InvalidLetter { letter, lie_type, rank } => {
                write!(f, "letter {letter} is not in the type {lie_type} rank {rank} alphabet")
            }
            Error::InvalidWeight(msg) => write!(f, "invalid dominant weight: {msg}"),
            Error::InvalidShape(msg) => write!(f, "invalid shape: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::HeadSelected { index } => write!(
                f,
                "lowering operator {index} selected the u_inf head; element is outside the embedding image"
            ),
            Error::HypothesisChain(msg) => write!(f, "hypothesis chain violated: {msg}"),
            Error::CapExceeded { cap } => write!(f, "enumeration exceeded cap of {cap} nodes"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
