use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported order {0}: only integer and half-integer orders are implemented")]
    UnsupportedOrder(f64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("overflow evaluating {0}")]
    Overflow(String),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("divergent quantity: {0}")]
    Divergence(String),
    #[error("coincident source and receiver points")]
    Singularity,
    #[error("domains overlap: receiver point {receiver_index} coincides with source point {source_index}")]
    Overlap {
        receiver_index: usize,
        source_index: usize,
    },
    #[error("unsupported channel (n = {n}, j = {j})")]
    UnsupportedChannel { n: i64, j: u8 },
    #[error("no channel with positive strength")]
    NoChannel,
    #[error("spectrum must be sum-normalized")]
    NormalizationRequired,
    #[error("smaller domain is not a subset of the larger one: {0}")]
    NotSubset(String),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (residual {residual:e})")]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("matrix too large: {rows} rows exceeds the cap of {cap}; try spacing >= {suggested_spacing:.4}")]
    TooLarge {
        rows: usize,
        cap: usize,
        suggested_spacing: f64,
    },
    #[error("empty input: {0}")]
    Empty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
