use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("polynomial has odd degree")]
    OddDegree,
    #[error("sign hint {hint} disagrees with leading coefficient sign")]
    SignMismatch { hint: i32 },

    #[error("continued fraction is empty")]
    EmptyCF,
    #[error("continued fraction has a zero entry at position {0}")]
    ZeroEntry(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("Lyapunov system is singular")]
    SingularSystem,
    #[error("root finder did not converge (residual {residual:e})")]
    ConvergenceFailure { residual: f64 },

    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("polynomial is not c-stable")]
    NotCStable,

    #[error("fraction has no even continued fraction expansion")]
    NotExpandable,
    #[error("fraction denominator is odd")]
    OddDenominator,
    #[error("twist parameter k must be nonzero")]
    ZeroK,
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("m + n must be odd with m >= n >= 0")]
    ParityViolation,

    #[error("continued fraction must have odd length")]
    EvenLength,
    #[error("input is zero")]
    ZeroInput,
    #[error("polynomial is not multi-affine")]
    NotMultiAffine,

    #[error("point is the pole z = i")]
    PoleAtI,
    #[error("polynomial vanishes at 0 or at +-i")]
    RootAtZeroOrI,

    #[error("bad fraction: {0}")]
    BadFraction(String),
    #[error("p must be odd and at least 3")]
    EvenP,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
