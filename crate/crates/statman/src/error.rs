//! Error type shared by the whole engine.
//!
//! Structural errors (bad input, singular metric, non-closed subframes)
//! surface here. Claim mismatches found by the audits are *not* errors;
//! they are findings carried inside reports.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter lists differ: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("assignment is missing parameter `{0}`")]
    MissingParameter(String),

    #[error("zero denominator in ring quotient")]
    ZeroDenominator,

    #[error("zero denominator in rational literal")]
    ZeroRationalDenominator,

    #[error("metric is singular")]
    SingularMetric,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degenerate plane: the two fields do not span a 2-plane")]
    DegeneratePlane,

    #[error("tangent subframe is not closed under brackets: [{0}, {1}] has a normal component")]
    NotClosed(String, String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("duplicate parameter name `{0}`")]
    DuplicateParameter(String),

    #[error("unknown connection `{0}`")]
    UnknownConnection(String),

    #[error("unknown frame vector `{0}`")]
    UnknownFrameVector(String),

    #[error("no contact structure available: {0}")]
    MissingContact(String),

    #[error("soliton system is degenerate: {0}")]
    DegenerateSoliton(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("fixture `{0}` has no linked coordinate chart")]
    NoChart(String),

    #[error("oracle sample point too close to the domain boundary")]
    OutsideChartDomain,

    #[error("{0}")]
    Cli(String),

    #[error("parse failed with {0} diagnostic(s)")]
    Parse(usize),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
