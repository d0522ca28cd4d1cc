//! Exterior calculus over [`ScalarExpr`](crate::coeffring::ScalarExpr)
//! coefficients. The cotangent basis is `dx` for each chart variable; the
//! radical enters only through coefficient differentiation.

mod field;
mod form;
mod map;

pub use field::VectorField;
pub use form::{DiffForm, Index};
pub use map::ChartMap;

use thiserror::Error;

use crate::coeffring::{ChartRef, CoeffError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("chart mismatch: {left} vs {right}")]
    ChartMismatch { left: String, right: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable index {0} out of range")]
    BadIndex(usize),
    #[error("wedge power of a form of odd degree {degree}")]
    OddPower { degree: usize },
    #[error("wedge power of a form of mixed degree")]
    NotHomogeneous,
    #[error("wedge power exponent must be positive")]
    ZeroPower,
    #[error("invalid chart map: {0}")]
    InvalidMap(String),
    #[error("pullback of a denominator vanishes identically")]
    PullbackSingular,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

impl ExtError {
    pub(crate) fn chart_mismatch(a: &ChartRef, b: &ChartRef) -> Self {
        ExtError::ChartMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        }
    }
}

#[cfg(test)]
mod tests;
