use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least {needed} variables to expand a symmetric function of weight {needed}, got {given}")]
    TooFewVariables { needed: usize, given: usize },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("word letters must be positive subscripts")]
    ZeroLetter,

    #[error("zeta_even expects an even argument >= 2, got {0}")]
    NotEvenZetaArgument(u32),

    #[error("zeta({0}) is not a ring generator value; argument must be >= 2")]
    ZetaArgumentTooSmall(u32),

    #[error("zeta({args}) diverges: the first argument must be greater than 1")]
    Divergent { args: String },

    #[error("empty argument string for a multiple zeta value")]
    EmptyComposition,

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("tolerance {tol:e} for zeta({args}) needs cutoff above the budget of {budget}")]
    CutoffBudgetExceeded { args: String, tol: f64, budget: u64 },

    #[error("degree {degree} is outside the supported range 1..={budget}")]
    DegreeOutOfBudget { degree: usize, budget: usize },

    #[error("partition {0:?} contains a part equal to 1")]
    PartitionHasOne(Vec<u32>),

    #[error("parse error: {0}")]
    Parse(String),
}
