use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a Dirichlet polynomial needs at least one coefficient")]
    EmptyPolynomial,

    #[error("coefficient a_{index} is not finite")]
    NonFiniteCoefficient { index: usize },

    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("sieve limit {0} is below 2")]
    SieveLimit(u64),

    #[error("expected a positive integer, got 0")]
    ZeroArgument,

    #[error("{n} is beyond the sieve limit {limit}")]
    BeyondSieve { n: u64, limit: u64 },

    #[error("insufficient character length: {n} needs {needed} primes, character has {available}")]
    InsufficientCharacterLength { n: u64, needed: usize, available: usize },

    #[error("under-resolved grid: {got} steps, need at least {required}")]
    UnderResolved { got: usize, required: usize },

    #[error("grid step {step} exceeds the resolution limit {max}")]
    StepTooCoarse { step: f64, max: f64 },
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter { name, value, reason }
    }
}
