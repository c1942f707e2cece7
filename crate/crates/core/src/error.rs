use thiserror::Error;

pub type Result<T, E = GpfError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GpfError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operands live in different ambient free modules")]
    AmbientMismatch,
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("{0}")]
    Parse(String),
    #[error("not a submodule: {0}")]
    NotContained(String),
    #[error("submodule must be proper: {0}")]
    NotProper(String),
    #[error("monomial Ass enumeration requested on non-monomial input: {0}")]
    NotMonomial(String),
    #[error("monomial Ass enumeration over {nvars} variables exceeds the bound {bound}")]
    TooManyVariables { nvars: usize, bound: usize },
    #[error("ideal is not prime: {0}")]
    NotPrime(String),
    #[error("prime {0} is not in the given set")]
    PrimeNotInSet(String),
    #[error("{prime} is not associated to the quotient: the colon module equals N")]
    NotAssociated { prime: String },
    #[error("candidate registry is incomplete: {0}")]
    RegistryIncomplete(String),
    #[error("filtration exceeded {0} steps")]
    MaxStepsExceeded(usize),
    #[error("ordering violated: {0}")]
    Ordering(String),
    #[error("interchange not allowed: {0}")]
    InterchangeForbidden(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("hypothesis failed{}: {detail}", index.map(|i| format!(" at index {i}")).unwrap_or_default())]
    HypothesisFailed { index: Option<usize>, detail: String },
    #[error("no witness found: {0}")]
    NoWitness(String),
    #[error("{prime} is not minimal in Ass")]
    NotMinimal { prime: String },
    #[error("oracle budget exceeded: {0}")]
    Budget(String),
}
