// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::vectors::Label;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate index label {0}")]
    DuplicateIndex(Label),

    #[error("non-finite coefficient {0}")]
    NonFinite(f64),

    #[error("sequence positions start at 1")]
    ZeroPosition,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: {scalars} scalars for {vectors} vectors")]
    LengthMismatch { scalars: usize, vectors: usize },

    /// A periodic tail with sup >= 1 makes the power series diverge.
    #[error("series diverges: tail supremum {tail_sup} is not below 1")]
    Divergent { tail_sup: f64 },

    #[error("series truncation needed more than {0} terms")]
    SeriesCap(usize),

    #[error("support of size {size} exceeds the enumeration cap {cap}")]
    SupportTooLarge { size: usize, cap: usize },

    #[error("label {label} outside 1..={m}")]
    LabelOutOfRange { label: Label, m: usize },

    #[error("bisection did not converge within {0} iterations")]
    MaxIterations(usize),

    #[error("could not bracket the gauge root")]
    Bracket,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Errors caused by malformed input rather than by the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DuplicateIndex(_)
                | Error::NonFinite(_)
                | Error::ZeroPosition
                | Error::InvalidParameter(_)
                | Error::LengthMismatch { .. }
                | Error::LabelOutOfRange { .. }
        )
    }
}
