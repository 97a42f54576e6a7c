use thiserror::Error;

/// Errors raised while validating sequences or running the engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence too short: need at least 3 generators, got {0}")]
    TooShort(usize),

    #[error("generators must be positive")]
    NonPositive,

    #[error("m0..m{p} is not a strictly increasing arithmetic sequence")]
    NotArithmetic { p: usize },

    #[error("gcd of the generators is {0}, expected 1")]
    GcdNotOne(u64),

    #[error("not minimally generated: m{index} = {value} lies in the semigroup of the other generators")]
    NotMinimallyGenerated { index: usize, value: u64 },

    #[error("{0} is not an element of the semigroup")]
    NotAMember(u64),

    #[error("{value} has {count} representations over V\\W")]
    NonUniqueRepresentation { value: u64, count: usize },

    #[error("input binomial {0} is not homogeneous for the weight grading")]
    NonHomogeneousInput(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short variant name used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooShort(_) => "TooShort",
            Error::NonPositive => "NonPositive",
            Error::NotArithmetic { .. } => "NotArithmetic",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotMinimallyGenerated { .. } => "NotMinimallyGenerated",
            Error::NotAMember(_) => "NotAMember",
            Error::NonUniqueRepresentation { .. } => "NonUniqueRepresentation",
            Error::NonHomogeneousInput(_) => "NonHomogeneousInput",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Overflow(_) => "Overflow",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }

    /// Whether the error is the caller's fault rather than a failed claim.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::TooShort(_)
                | Error::NonPositive
                | Error::NotArithmetic { .. }
                | Error::GcdNotOne(_)
                | Error::NotMinimallyGenerated { .. }
                | Error::NotAMember(_)
                | Error::NonHomogeneousInput(_)
                | Error::InvalidArgument(_)
        )
    }
}
