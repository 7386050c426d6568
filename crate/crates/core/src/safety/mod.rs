//! Majority-safety of integrity constraints.
//!
//! Majority is collectively rational for a constraint exactly when every
//! prime implicate of the constraint has at most two literals. When some
//! minimally falsifying partial assignment binds three or more issues, a
//! paradoxical profile is built from it by flipping one bound issue per
//! voter and extending to a model.

mod explain;
mod report;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::aggregation::{majority, AggregationError, ParadoxWitness, Profile};
use crate::logic::{mifap_assignments, models, Ballot, Clause, Formula, LogicError, PartialAssignment};

pub use explain::explain;
pub use report::{Report, WitnessReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SafetyError {
    #[error("constraint is majority-safe; no paradox exists")]
    SafeConstraint,
    #[error("majority is only defined for an odd number of voters, got {voters}")]
    EvenVoters { voters: usize },
    #[error("the construction needs at least 3 voters, got {voters}")]
    TooFewVoters { voters: usize },
    #[error("internal construction failure: {0}")]
    Construction(String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Aggregation(#[from] AggregationError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The constraint is equivalent to the conjunction of these clauses,
    /// none longer than two literals.
    PrimeImplicates(Vec<Clause>),
    /// A minimally falsifying partial assignment binding at least 3 issues.
    Mifap(PartialAssignment),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafetyVerdict {
    constraint: Formula,
    max_clause_size: usize,
    prime_implicates: Vec<Clause>,
    certificate: Certificate,
}

impl SafetyVerdict {
    pub fn is_safe(&self) -> bool {
        matches!(self.certificate, Certificate::PrimeImplicates(_))
    }

    pub fn constraint(&self) -> &Formula {
        &self.constraint
    }

    pub fn max_clause_size(&self) -> usize {
        self.max_clause_size
    }

    /// Prime implicates in lexicographic order.
    pub fn prime_implicates(&self) -> &[Clause] {
        &self.prime_implicates
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn mifap(&self) -> Option<&PartialAssignment> {
        match &self.certificate {
            Certificate::Mifap(rho) => Some(rho),
            Certificate::PrimeImplicates(_) => None,
        }
    }

    pub fn is_tautology(&self) -> bool {
        self.prime_implicates.is_empty()
    }

    pub fn is_unsatisfiable(&self) -> bool {
        self.prime_implicates.iter().any(Clause::is_empty)
    }
}

pub fn classify(ic: &Formula) -> Result<SafetyVerdict, SafetyError> {
    let mifaps: BTreeSet<PartialAssignment> = mifap_assignments(ic)?;
    let max_clause_size = mifaps.iter().map(PartialAssignment::len).max().unwrap_or(0);
    let prime_implicates: Vec<Clause> = mifaps
        .iter()
        .map(PartialAssignment::negation_clause)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let certificate = match mifaps.into_iter().find(|rho| rho.len() >= 3) {
        Some(rho) => Certificate::Mifap(rho),
        None => Certificate::PrimeImplicates(prime_implicates.clone()),
    };
    Ok(SafetyVerdict {
        constraint: ic.clone(),
        max_clause_size,
        prime_implicates,
        certificate,
    })
}

/// The three base ballots of the flip construction and the issues flipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipConstruction {
    pub mifap: PartialAssignment,
    pub flipped: [usize; 3],
    pub base: [Ballot; 3],
}

/// Builds the three rational base ballots for `rho`: ballot `t` agrees with
/// `rho` except on the `t`-th of its three smallest bound issues, and is the
/// lexicographically first model with that property.
pub fn flip_construction(ic: &Formula, rho: &PartialAssignment) -> Result<FlipConstruction, SafetyError> {
    let bound: Vec<usize> = rho.issues().collect();
    if bound.len() < 3 {
        return Err(SafetyError::SafeConstraint);
    }
    let flipped = [bound[0], bound[1], bound[2]];
    let all_models = models(ic)?;
    let mut base = [Ballot::zeros(ic.num_issues()); 3];
    for (t, &y) in flipped.iter().enumerate() {
        let target = PartialAssignment::from_pairs(rho.iter().map(|(i, v)| if i == y { (i, !v) } else { (i, v) }))?;
        base[t] = *all_models
            .iter()
            .find(|b| target.agrees_with(b))
            .ok_or_else(|| SafetyError::Construction(format!("flipping issue {y} has no rational extension")))?;
    }
    Ok(FlipConstruction {
        mifap: rho.clone(),
        flipped,
        base,
    })
}

/// Builds a majority paradox with `voters` voters for an unsafe constraint.
///
/// Voter `i` (0-based) receives base ballot `i mod 3`, so every issue bound
/// by the certificate assignment keeps its value in a strict majority. The
/// witness names the certificate's own clause as the violated implicate.
///
/// A single voter is rejected: the outcome is then that voter's rational
/// ballot, so no constraint admits a one-voter paradox.
pub fn construct_paradox(ic: &Formula, voters: usize) -> Result<ParadoxWitness, SafetyError> {
    if voters.is_multiple_of(2) {
        return Err(SafetyError::EvenVoters { voters });
    }
    if voters < 3 {
        return Err(SafetyError::TooFewVoters { voters });
    }
    let verdict = classify(ic)?;
    let rho = verdict.mifap().ok_or(SafetyError::SafeConstraint)?;
    let construction = flip_construction(ic, rho)?;
    let ballots: Vec<Ballot> = (0..voters).map(|i| construction.base[i % 3]).collect();
    let profile = Profile::new(ic.issues().clone(), ballots)?;
    let outcome = majority(&profile)?;
    if !rho.agrees_with(&outcome) {
        return Err(SafetyError::Construction(
            "majority outcome disagrees with the certificate".into(),
        ));
    }
    let witness = ParadoxWitness::new("majority", profile, ic.clone(), outcome, rho.negation_clause())?;
    Ok(witness)
}
