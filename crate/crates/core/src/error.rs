use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} is outside the supported range 2..=256")]
    UnsupportedFieldOrder(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("symbol {symbol} is not an element of GF({q})")]
    InvalidSymbol { symbol: usize, q: usize },
    #[error("work budget exceeded: needs {needed} steps, limit is {limit}")]
    BudgetExceeded { needed: u128, limit: u64 },
    #[error("code has fewer than two codewords")]
    TrivialCode,
    #[error("duplicate codeword at position {0}")]
    DuplicateCodeword(usize),
    #[error("generator rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("construction self-check failed: {0}")]
    SelfCheckFailed(String),
    #[error("method not applicable: {0}")]
    MethodInapplicable(String),
    #[error("field is not a proper extension of its prime subfield")]
    NotAnExtension,
    #[error("covering radius is not verified exactly")]
    RadiusNotVerified,
    #[error("covering radius {radius} exceeds the list radius {limit}")]
    RadiusTooLarge { radius: usize, limit: usize },
    #[error("covering code is not perfect")]
    NotPerfect,
    #[error("missing parameter: {0}")]
    MissingParam(&'static str),
    #[error("cyclotomic parameters are required for this bound")]
    MissingAux,
    #[error("q = {0} is even; the bound needs odd q")]
    QEven(usize),
    #[error("value {0} is outside [0, 1]")]
    OutOfRange(f64),
    #[error("no bound applies to these parameters")]
    NothingApplicable,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
