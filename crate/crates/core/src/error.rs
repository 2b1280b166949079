use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),

    #[error("residual pole: nonzero coefficient {coeff} at t^{exponent}")]
    ResidualPole { exponent: i64, coeff: String },

    #[error("series window [{min_exp}, {max_exp}] does not cover t^0")]
    WindowTooShort { min_exp: i64, max_exp: i64 },

    #[error("series with all tracked coefficients zero is not invertible")]
    NotInvertible,

    #[error("{what} = {got} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        got: u64,
        limit: u64,
    },

    #[error("degree law violated for (k={k}, beta={beta}): {detail}")]
    DegreeLaw { k: u32, beta: u32, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
