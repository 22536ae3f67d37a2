use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("size {size} exceeds the bound {bound}")]
    TooLarge { size: u128, bound: u128 },
    #[error("zero input where a unit is required")]
    ZeroInput,
    #[error("invalid action: need k | r and (r/k) | n, got n={n}, r={r}, k={k}")]
    InvalidAction { n: u64, r: u32, k: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("exponent {0} is not fixed by the module action")]
    NotInvariant(u64),
    #[error("operation requires a cyclic group")]
    NotCyclic,
    #[error("automorphism is not compatible with the module action")]
    Incompatible,
    #[error("rings carry different actions on the base field")]
    ActionMismatch,
    #[error("rings are graded by different groups")]
    GroupMismatch,
    #[error("cocycle asymmetry escapes the p-torsion subgroup of the coefficients")]
    NotAlternating,
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
