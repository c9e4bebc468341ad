use thiserror::Error;

/// Errors produced by the algebra routines.
///
/// Most of these indicate inputs that are outside the domain of an
/// operation; a few (`NotDivisible`, `NonIntegerCharacter`) can only be
/// reached through a bug in a formula and are surfaced rather than hidden.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot specialize q to zero")]
    ZeroSpecialization,

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("power sum sigma_{k} = {value} is not an integer")]
    NonIntegerSigma { k: usize, value: String },

    #[error("no closed form for the central character of the {0}-cycle class-sum")]
    UnsupportedCycle(usize),

    #[error("irreps {first} and {second} are not separated by the 2- and 3-cycle class-sums")]
    NotSeparated { first: String, second: String },

    #[error("character value {value} on class {class} is not an integer")]
    NonIntegerCharacter { class: String, value: String },

    #[error("eigenvalues of {first} and {second} coincide at q = {q0}")]
    DegenerateSpecialization {
        first: String,
        second: String,
        q0: String,
    },

    #[error("shifting h[{j},{k}] leaves the Gelfand-Zetlin cone")]
    PatternViolation { j: usize, k: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache file: {0}")]
    Cache(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
