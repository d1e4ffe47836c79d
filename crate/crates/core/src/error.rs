use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("signature mismatch")]
    SignatureMismatch,
    #[error("generator {0} is out of range for the signature")]
    GeneratorOutOfRange(String),
    #[error("invalid multidegree: {0}")]
    InvalidMultidegree(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("expected a tensor monomial")]
    NotTensor,
    #[error("expected a univariate series")]
    Multivariate,
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("identity pattern: {0}")]
    Pattern(String),
    #[error("polynomial is not multihomogeneous")]
    NotHomogeneous,
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
