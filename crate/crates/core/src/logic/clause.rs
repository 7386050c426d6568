use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::ballot::Ballot;
use super::formula::{Expr, Formula};
use super::issues::IssueSet;
use super::LogicError;

/// An issue together with a polarity. Orders by issue, negative first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub issue: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(issue: usize) -> Self {
        Literal { issue, positive: true }
    }

    pub fn neg(issue: usize) -> Self {
        Literal { issue, positive: false }
    }

    pub fn negate(self) -> Self {
        Literal {
            issue: self.issue,
            positive: !self.positive,
        }
    }

    pub fn satisfied_by(&self, ballot: &Ballot) -> bool {
        ballot.get(self.issue) == self.positive
    }

    pub fn to_expr(self) -> Expr {
        Expr::literal(self.issue, self.positive)
    }
}

/// A non-tautological disjunction of literals. The empty clause is falsum.
///
/// Clauses compare lexicographically on their sorted literal sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new<I: IntoIterator<Item = Literal>>(literals: I) -> Result<Self, LogicError> {
        let set: BTreeSet<Literal> = literals.into_iter().collect();
        let literals: Vec<Literal> = set.into_iter().collect();
        if let Some(w) = literals.windows(2).find(|w| w[0].issue == w[1].issue) {
            return Err(LogicError::TautologicalClause { issue: w[0].issue });
        }
        Ok(Clause { literals })
    }

    pub fn empty() -> Self {
        Clause { literals: Vec::new() }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn satisfied_by(&self, ballot: &Ballot) -> bool {
        self.literals.iter().any(|l| l.satisfied_by(ballot))
    }

    pub fn falsified_by(&self, ballot: &Ballot) -> bool {
        !self.satisfied_by(ballot)
    }

    /// The unique partial assignment that falsifies this clause.
    pub fn falsifier(&self) -> PartialAssignment {
        PartialAssignment {
            bindings: self.literals.iter().map(|l| (l.issue, !l.positive)).collect(),
        }
    }

    /// Copy of the clause with the literal at `index` removed.
    pub fn without(&self, index: usize) -> Clause {
        let mut literals = self.literals.clone();
        literals.remove(index);
        Clause { literals }
    }

    pub fn to_expr(&self) -> Expr {
        Expr::disjunction(self.literals.iter().map(|l| l.to_expr()))
    }

    pub fn to_formula(&self, issues: &IssueSet) -> Result<Formula, LogicError> {
        Formula::new(issues.clone(), self.to_expr())
    }

    pub fn display<'a>(&'a self, issues: &'a IssueSet) -> impl fmt::Display + 'a {
        ClauseDisplay { clause: self, issues }
    }
}

struct ClauseDisplay<'a> {
    clause: &'a Clause,
    issues: &'a IssueSet,
}

impl fmt::Display for ClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clause.is_empty() {
            return f.write_str("FALSE");
        }
        for (i, lit) in self.clause.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if !lit.positive {
                f.write_str("~")?;
            }
            f.write_str(self.issues.name(lit.issue))?;
        }
        Ok(())
    }
}

/// Values fixed for some subset of the issues.
///
/// Ordered lexicographically on the sorted `(issue, value)` bindings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAssignment {
    bindings: BTreeMap<usize, bool>,
}

impl PartialAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, bool)>>(pairs: I) -> Result<Self, LogicError> {
        let mut out = PartialAssignment::new();
        for (issue, value) in pairs {
            if out.bindings.insert(issue, value).is_some() {
                return Err(LogicError::DuplicateBinding { issue });
            }
        }
        Ok(out)
    }

    pub fn get(&self, issue: usize) -> Option<bool> {
        self.bindings.get(&issue).copied()
    }

    pub fn bind(&mut self, issue: usize, value: bool) -> Result<(), LogicError> {
        if self.bindings.insert(issue, value).is_some() {
            return Err(LogicError::DuplicateBinding { issue });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.bindings.iter().map(|(&k, &v)| (k, v))
    }

    pub fn issues(&self) -> impl Iterator<Item = usize> + '_ {
        self.bindings.keys().copied()
    }

    pub fn max_issue(&self) -> Option<usize> {
        self.bindings.keys().next_back().copied()
    }

    pub fn agrees_with(&self, ballot: &Ballot) -> bool {
        self.iter().all(|(i, v)| ballot.get(i) == v)
    }

    /// The clause satisfied by exactly the ballots that do not extend `self`.
    pub fn negation_clause(&self) -> Clause {
        Clause {
            literals: self
                .iter()
                .map(|(issue, value)| Literal {
                    issue,
                    positive: !value,
                })
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, issues: &'a IssueSet) -> impl fmt::Display + 'a {
        AssignmentDisplay {
            assignment: self,
            issues,
        }
    }
}

struct AssignmentDisplay<'a> {
    assignment: &'a PartialAssignment,
    issues: &'a IssueSet,
}

/// Renders as `{p1=1, p2=1, p3=0}`.
impl fmt::Display for AssignmentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (issue, value)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", self.issues.name(issue), value as u8)?;
        }
        f.write_str("}")
    }
}

/// `C_rho`: the conjunction of literals fixed by `rho`.
pub fn partial_to_conjunction(rho: &PartialAssignment, issues: &IssueSet) -> Result<Formula, LogicError> {
    if rho.is_empty() {
        return Err(LogicError::EmptyAssignment);
    }
    if let Some(max) = rho.max_issue() {
        if max >= issues.len() {
            return Err(LogicError::VarOutOfRange {
                index: max,
                count: issues.len(),
            });
        }
    }
    Formula::new(
        issues.clone(),
        Expr::conjunction(rho.iter().map(|(i, v)| Expr::literal(i, v))),
    )
}
