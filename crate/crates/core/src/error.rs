use thiserror::Error;

/// Errors raised by the series, root, lattice and code routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a series needs at least one coefficient")]
    EmptySeries,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("constant term must be {expected}, got {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },
    #[error("root index must be positive")]
    ZeroIndex,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mu({n}) = {mu} exceeds the supported range")]
    ModulusTooLarge { n: u64, mu: u128 },
    #[error("series is not an {n}-th power: obstruction at x^{index}")]
    NotAPower { n: u64, index: usize },
    #[error("gram matrix: {0}")]
    Gram(String),
    #[error("unknown lattice {0:?}")]
    UnknownLattice(String),
    #[error("code: {0}")]
    Code(String),
    #[error("enumeration of 2^{bits} words exceeds the work bound of 2^{bound}")]
    WorkBound { bits: u32, bound: u32 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
