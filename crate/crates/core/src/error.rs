//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in polynomial rings with different variable counts.
    RingMismatch { left: usize, right: usize },
    /// Variable index out of range for the ambient ring.
    IndexOutOfRange { index: usize, nvars: usize },
    /// A homogeneous polynomial was required.
    NonHomogeneous,
    /// The zero polynomial is not allowed here (ideal generator, saturant, ...).
    ZeroPolynomial,
    /// An operation received an empty list where at least one element is needed.
    EmptyInput,
    /// Generators of mixed degrees where equal degrees are required.
    MixedDegrees,
    /// `bound >= 1` is required for random coefficient draws.
    InvalidBound,
    /// The Grobner engine exceeded its reduction-step budget.
    BudgetExceeded { budget: u64 },
    /// `degree_zero_dim` called on an ideal whose zero locus has positive dimension.
    NotZeroDimensional { dimension: i64 },
    /// No usable coordinate change found after the retry limit.
    UnluckyCoordinates { retries: u32 },
    /// Two independent Monte Carlo draws of the projective degrees never agreed.
    MonteCarloDisagreement { first: Vec<u64>, second: Vec<u64> },
    /// Attempt to invert a class with zero constant term.
    NonUnitClass,
    /// Chow class construction with the wrong number of coefficients.
    CoefficientCount { expected: usize, got: usize },
    /// The basis passed to the linear solver is rank deficient.
    RankDeficient { rank: usize, expected: usize },
    /// The linear system has no solution; carries a printable residual.
    InconsistentSystem { residual: String },
    /// The Euler-obstruction matrix is not unitriangular on the poset.
    NotUnitriangular { detail: String },
    /// A coefficient expected to be an integer was not.
    NonIntegralCoefficient { label: String, value: String },
    /// Closure relations incompatible with stratum dimensions, or unknown label.
    BadPoset { detail: String },
    /// A parameter outside its documented range.
    InvalidParameter { detail: String },
    /// Text input could not be parsed.
    Parse { position: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left} vs {right} variables")
            }
            Error::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::NonHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::EmptyInput => write!(f, "empty input list"),
            Error::MixedDegrees => write!(f, "generators have mixed degrees"),
            Error::InvalidBound => write!(f, "coefficient bound must be at least 1"),
            Error::BudgetExceeded { budget } => {
                write!(f, "reduction budget of {budget} steps exceeded")
            }
            Error::NotZeroDimensional { dimension } => {
                write!(f, "zero locus has dimension {dimension}, expected 0 or empty")
            }
            Error::UnluckyCoordinates { retries } => {
                write!(f, "no good coordinate change after {retries} retries")
            }
            Error::MonteCarloDisagreement { first, second } => {
                write!(f, "projective degree draws disagree: {first:?} vs {second:?}")
            }
            Error::NonUnitClass => write!(f, "class has zero constant term, not invertible"),
            Error::CoefficientCount { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            Error::RankDeficient { rank, expected } => {
                write!(f, "basis is rank deficient: rank {rank}, expected {expected}")
            }
            Error::InconsistentSystem { residual } => {
                write!(f, "linear system is inconsistent; residual {residual}")
            }
            Error::NotUnitriangular { detail } => {
                write!(f, "Euler obstruction matrix is not unitriangular: {detail}")
            }
            Error::NonIntegralCoefficient { label, value } => {
                write!(f, "coefficient at {label} is not an integer: {value}")
            }
            Error::BadPoset { detail } => write!(f, "invalid stratification poset: {detail}"),
            Error::InvalidParameter { detail } => write!(f, "invalid parameter: {detail}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
