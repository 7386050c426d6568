//! Propositional language over issue variables.

mod ballot;
mod clause;
mod formula;
mod issues;
pub mod parser;
mod semantics;

use thiserror::Error;

pub use ballot::Ballot;
pub use clause::{partial_to_conjunction, Clause, Literal, PartialAssignment};
pub use formula::{Expr, Formula};
pub use issues::{is_identifier, IssueSet, MAX_ISSUES};
pub use parser::{parse, parse_formula_file, FormulaFile, ParseError};
pub use semantics::{
    entails, equivalent, max_prime_implicate_size, mifap_assignments, models, prime_implicates, Limits, TruthTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("issue set is empty")]
    EmptyIssueSet,
    #[error("{count} issues exceed the maximum of {max}")]
    TooManyIssues { count: usize, max: usize },
    #[error("invalid issue name `{0}`")]
    InvalidIssueName(String),
    #[error("duplicate issue name `{0}`")]
    DuplicateIssue(String),
    #[error("variable index {index} out of range for {count} issues")]
    VarOutOfRange { index: usize, count: usize },
    #[error("ballot has {found} issues, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("formulas range over different issue sets")]
    IssueSetMismatch,
    #[error("{issues} issues exceed the enumeration limit of {limit}")]
    IssueCountTooLarge { issues: usize, limit: usize },
    #[error("clause contains both polarities of issue {issue}")]
    TautologicalClause { issue: usize },
    #[error("issue {issue} is bound twice")]
    DuplicateBinding { issue: usize },
    #[error("partial assignment is empty")]
    EmptyAssignment,
}
