use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree {degree} exceeds the requested bound {bound}")]
    Degree { degree: usize, bound: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("negative coefficient or entry where nonnegativity is required")]
    Negative,
    #[error("polynomial is not symmetric about the centre of its degree span")]
    NotSymmetric,
    #[error("set of permutations is not invariant under the valley-hopping action")]
    NotInvariant,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("enumeration needs {needed} states, budget is {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("Markov chain is reducible, stationary distribution is not unique")]
    Reducible,
    #[error("matrix is not a symmetric contraction")]
    NotContraction,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
