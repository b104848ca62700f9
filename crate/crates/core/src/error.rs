use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid exponent {value} at position {index}: Brieskorn exponents must be >= 2")]
    BadExponent { index: usize, value: i64 },

    #[error("a Brieskorn link needs at least 2 exponents, got {0}")]
    TooFewExponents(usize),

    #[error("Milnor number {mu} exceeds the configured cap {cap}")]
    MilnorNumberTooLarge { mu: u128, cap: u64 },

    #[error("Milnor number overflows 128 bits")]
    MilnorNumberOverflow,

    #[error("seifert block size must be >= 2, got {0}")]
    BadBlockSize(i64),

    #[error("invalid Betti profile: {0}")]
    Profile(String),

    #[error("profile flagged closed-orientable is not Poincare dual: b_{low} = {low_rank} but b_{high} = {high_rank}")]
    NotPoincareDual {
        low: usize,
        low_rank: u64,
        high: usize,
        high_rank: u64,
    },

    #[error("unknown coefficient field {0:?} (expected \"Q\" or \"Fp:<prime>\")")]
    BadField(String),

    #[error("coefficient fields differ: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
