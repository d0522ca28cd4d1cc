//! Finitely generated abelian groups, integer matrices, chain complexes and
//! inference over exact sequences.

mod complex;
mod exact;
mod group;
mod matrix;
mod replay;

pub use complex::ChainComplex;
pub use exact::{
    solve_exact, solve_system, ArrowFact, ArrowStatus, ExactSeqProblem, Given, MapFact, Rule, Slot, Solution,
    SolveError, Term,
};
pub use group::FGAbelian;
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use replay::{
    replay_handlebody, replay_handlebody_control, replay_handlebody_with, replay_surgered_sphere,
    replay_surgered_sphere_control, replay_surgered_sphere_with,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("cancellation failed: {0}")]
    Cancellation(String),
    #[error("boundary maps compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: usize },
}
