//! Profiles, the majority rule and paradox detection.

mod paradox;
mod profile;
mod rule;

use thiserror::Error;

use crate::logic::LogicError;

pub use paradox::{
    brute_force_cr, check_paradox, first_violated, profile_count, CrVerdict, ParadoxWitness, DEFAULT_BUDGET,
};
pub use profile::{parse_profile_file, Profile};
pub use rule::{majority, AggregationRule, Majority};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AggregationError {
    #[error("profile has no voters")]
    EmptyProfile,
    #[error("majority is only defined for an odd number of voters, got {voters}")]
    EvenVoters { voters: usize },
    #[error("voter {voter} has {found} issues, expected {expected}")]
    BallotLength {
        voter: usize,
        expected: usize,
        found: usize,
    },
    #[error("profile and constraint range over different issues")]
    IssueMismatch,
    #[error("irrational individual ballots from {}", join(voters))]
    IrrationalIndividuals { voters: Vec<usize> },
    #[error("enumeration needs {required} profiles, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("invalid paradox witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

fn join(voters: &[usize]) -> String {
    let list = voters.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
    if voters.len() == 1 {
        format!("voter {list}")
    } else {
        format!("voters {list}")
    }
}
