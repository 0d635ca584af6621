use thiserror::Error;

/// Errors for domain violations; all computational failures are certificate
/// contents, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weight must be odd and >= 5, got {0}")]
    InvalidWeight(i64),
    #[error("weight must be even and >= 4, got {0}")]
    InvalidEvenWeight(i64),
    #[error("binomial({n}, {k}) with negative n is outside the convention")]
    NegativeBinomial { n: i64, k: i64 },
    #[error("polynomial degree {deg} exceeds bound {bound}")]
    DegreeTooLarge { deg: usize, bound: usize },
    #[error("polynomial is not in {space}")]
    NotInSpace { space: String },
    #[error("series parameter out of the convergent range: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
