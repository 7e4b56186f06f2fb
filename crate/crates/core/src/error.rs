use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the algebraic and topological routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A cyclic factor of order zero was requested.
    InvalidFactor(u64),
    /// Two groups (or a group and a dual) with different presentations met.
    GroupMismatch { left: alloc::vec::Vec<u64>, right: alloc::vec::Vec<u64> },
    /// An element had the wrong number of coordinates for its group.
    ElementShape { expected: usize, found: usize },
    /// The ambient root-of-unity order does not absorb the group exponent.
    OrderNotDivisible { order_n: u64, exponent: u64 },
    /// A cochain was expected to be a cocycle.
    NotACocycle { degree: usize },
    /// A cochain does not match the complex or degree it is used with.
    CochainShape(String),
    /// A simplex was not found in the complex.
    UnknownSimplex(alloc::vec::Vec<u32>),
    /// The simplicial complex description is malformed.
    InvalidComplex(String),
    /// Cocycle data violates a bundle-level invariant.
    InvalidBundleData(String),
    /// An obstruction class is nonzero where a vanishing one is required.
    NonzeroObstruction,
    /// Data attached to two different parents was combined.
    ParentMismatch(&'static str),
    /// A vector has the wrong length.
    LengthMismatch { expected: usize, found: usize },
    /// Integer arithmetic left the supported range.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidFactor(n) => write!(f, "invalid cyclic factor {n}: factors must be at least 1"),
            Error::GroupMismatch { left, right } => {
                write!(f, "group mismatch: factors {left:?} vs {right:?}")
            }
            Error::ElementShape { expected, found } => {
                write!(f, "element has {found} coordinates, group has {expected} factors")
            }
            Error::OrderNotDivisible { order_n, exponent } => {
                write!(f, "ambient order {order_n} is not divisible by the group exponent {exponent}")
            }
            Error::NotACocycle { degree } => write!(f, "{degree}-cochain is not a cocycle"),
            Error::CochainShape(msg) => write!(f, "cochain shape: {msg}"),
            Error::UnknownSimplex(s) => write!(f, "simplex {s:?} is not in the complex"),
            Error::InvalidComplex(msg) => write!(f, "invalid complex: {msg}"),
            Error::InvalidBundleData(msg) => write!(f, "invalid bundle data: {msg}"),
            Error::NonzeroObstruction => write!(f, "obstruction class is nonzero"),
            Error::ParentMismatch(what) => write!(f, "parent mismatch: {what}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::Overflow => write!(f, "integer overflow"),
        }
    }
}
