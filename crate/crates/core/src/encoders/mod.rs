//! Translations of classical aggregation problems into constraints over
//! binary issues.

mod agenda;
mod disjunction;
mod ostrogorski;
mod preferences;
mod scenarios;

use thiserror::Error;

use crate::aggregation::AggregationError;
use crate::logic::{Formula, IssueSet, LogicError, ParseError};

pub use agenda::{encode_agenda, mi_sets, parse_agenda_file, Agenda, AgendaEntry, MAX_AGENDA_ENTRIES};
pub use disjunction::ballot_disjunction_constraint;
pub use ostrogorski::{encode_ostrogorski, ostrogorski_issue_names, MAX_OSTROGORSKI_ISSUES};
pub use preferences::{encode_negative_transitivity, encode_preferences, AlternativeSet, OrderKind, MAX_ALTERNATIVES};
pub use scenarios::{builtin_scenario, Column, Scenario, SCENARIO_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("{count} alternatives exceed the maximum of {max}")]
    TooManyAlternatives { count: usize, max: usize },
    #[error("need at least 2 alternatives, got {count}")]
    TooFewAlternatives { count: usize },
    #[error("invalid alternative label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate alternative label `{0}`")]
    DuplicateLabel(String),
    #[error("agenda has no entries")]
    EmptyAgenda,
    #[error("invalid agenda entry name `{0}`")]
    InvalidEntryName(String),
    #[error("agenda entry `{0}` is doubly negated")]
    DoubleNegation(String),
    #[error("duplicate agenda entry `{0}`")]
    DuplicateEntry(String),
    #[error("agenda has {entries} entries, the maximum is {max}")]
    AgendaTooLarge { entries: usize, max: usize },
    #[error("judgment lists {found} values, expected {expected}")]
    JudgmentLength { expected: usize, found: usize },
    #[error("policy issue count must be odd and between 3 and {max}, got {k}")]
    PolicyIssueCount { k: usize, max: usize },
    #[error("expected {expected} issue names, got {found}")]
    IssueNameCount { expected: usize, found: usize },
    #[error("profile has no voters")]
    EmptyProfile,
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Aggregation(#[from] AggregationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A constraint together with a human-readable meaning for each issue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    pub constraint: Formula,
    pub descriptions: Vec<String>,
}

impl Encoding {
    pub fn issues(&self) -> &IssueSet {
        self.constraint.issues()
    }
}
