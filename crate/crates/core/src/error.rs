use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("illegal action: seat {seat} token {token} with die {die}: {reason}")]
    IllegalAction {
        seat: usize,
        token: usize,
        die: u8,
        reason: &'static str,
    },
    #[error("profile has {got} strategies but the variant seats {expected}")]
    ProfileLength { expected: usize, got: usize },
    #[error("total turns must be positive")]
    ZeroTurns,
    #[error("unknown strategy {0:?} (expected N, A or RP)")]
    UnknownStrategy(String),
    #[error("unknown variant {0:?} (expected 2p3d or 4p5d)")]
    UnknownVariant(String),
    #[error("unknown fixture {0:?} (expected one of 2p16, 2p20, 2p24, 4p8, 4p12, 4p16)")]
    UnknownFixture(String),
    #[error("unknown analytic strategy {0:?} (expected PP, S or M)")]
    UnknownAnalyticStrategy(String),
    #[error("win table is missing profile {0}")]
    MissingProfile(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("profile {0} contains M, which has no four-player expected-path model")]
    MixedStrategyIn4p(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
