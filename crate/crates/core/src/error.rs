use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported alphabet size {0}; only q = 2 and q = 4 are allowed")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} is out of range for an alphabet of size {q}")]
    InvalidSymbol { symbol: u16, q: u8 },

    #[error("sequences must have length at least 1")]
    EmptySequence,

    #[error("alphabet mismatch: expected q = {expected}, found q = {found}")]
    AlphabetMismatch { expected: u8, found: u8 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("balance is undefined for odd length {0}")]
    OddLength(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("field mismatch between GF(2^{left}) and GF(2^{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("enumeration budget exceeded: {required} items required, budget is {budget}")]
    BudgetExceeded { required: String, budget: usize },

    #[error("minimum distance is undefined for a code with fewer than two members")]
    DistanceUndefined,

    #[error("missing certificate: {0}")]
    MissingCertificate(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("decoding failed: {0}")]
    DecodingFailure(String),

    #[error("size {size} is not a power of two; expurgate {remove} member(s) to reach {target}")]
    ExpurgationRequired { size: usize, remove: usize, target: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
