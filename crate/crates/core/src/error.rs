use core::fmt;

use num_bigint::BigInt;

/// Error type shared by every module of the crate.
///
/// Variants fall into two groups: precondition violations (bad `d`, bad
/// prime, malformed input) and resource refusals (`CapExceeded`).  All
/// mathematical identities are reported through the report types, never as
/// errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The block-size modulus `d` must be at least 2.
    ModulusTooSmall { d: usize },
    /// `multinomial` was called with parts that do not sum to `n`.
    MultinomialParts { n: usize, parts_sum: usize },
    /// An enumeration would visit more objects than the configured cap.
    CapExceeded { required: BigInt, cap: u64 },
    /// The partition has a block whose size is not a multiple of `d`.
    NotDivisible { d: usize },
    /// Structurally invalid ordered set partition.
    InvalidPartition { reason: &'static str },
    /// The word is not a permutation of `1..=n`.
    InvalidPermutation { reason: &'static str },
    /// The partition is not a fixed point of the split/merge involution.
    NotFixedPoint { reason: &'static str },
    /// The permutation is not d-alternating.
    NotAlternating { d: usize },
    /// `d` does not divide the relevant length `n`.
    LengthNotDivisible { n: usize, d: usize },
    /// A parameter that must be prime failed trial division.
    NotPrime { p: usize },
    /// A parameter that must be an odd prime was even.
    NotOddPrime { p: usize },
    /// Cross-checking needs at least two distinct methods.
    TooFewMethods { count: usize },
    /// The ground set is too small for the requested group action.
    GroundSetTooSmall { n: usize, min: usize },
    /// The elements `1..=p` do not lie in a single block, so the pinned
    /// involution is not defined.
    PinOutsideDomain,
    /// Malformed textual input.
    Parse { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusTooSmall { d } => {
                write!(f, "block-size modulus must be at least 2, got {d}")
            }
            Error::MultinomialParts { n, parts_sum } => {
                write!(f, "multinomial parts sum to {parts_sum}, expected {n}")
            }
            Error::CapExceeded { required, cap } => {
                write!(f, "enumeration needs {required} objects, cap is {cap}")
            }
            Error::NotDivisible { d } => {
                write!(f, "partition has a block size not divisible by {d}")
            }
            Error::InvalidPartition { reason } => {
                write!(f, "invalid ordered set partition: {reason}")
            }
            Error::InvalidPermutation { reason } => write!(f, "invalid permutation: {reason}"),
            Error::NotFixedPoint { reason } => {
                write!(f, "not an involution fixed point: {reason}")
            }
            Error::NotAlternating { d } => write!(f, "permutation is not {d}-alternating"),
            Error::LengthNotDivisible { n, d } => write!(f, "{d} does not divide {n}"),
            Error::NotPrime { p } => write!(f, "{p} is not prime"),
            Error::NotOddPrime { p } => write!(f, "{p} is not an odd prime"),
            Error::TooFewMethods { count } => {
                write!(f, "cross-check needs at least two methods, got {count}")
            }
            Error::GroundSetTooSmall { n, min } => {
                write!(f, "ground set has {n} elements, need at least {min}")
            }
            Error::PinOutsideDomain => {
                write!(f, "elements 1..=p are not contained in a single block")
            }
            Error::Parse { reason } => write!(f, "parse error: {reason}"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
