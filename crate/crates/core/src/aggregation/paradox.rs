use rayon::prelude::*;

use crate::logic::{prime_implicates, Ballot, Clause, Formula, Limits, TruthTable};

use super::{AggregationError, AggregationRule, Profile};

/// Default cap on the number of profiles enumerated by [`brute_force_cr`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A rule, a profile of rational ballots and a constraint the collective
/// outcome violates, together with the violated prime implicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParadoxWitness {
    rule: String,
    profile: Profile,
    constraint: Formula,
    outcome: Ballot,
    violated: Clause,
}

impl ParadoxWitness {
    /// Validates every witness invariant before returning.
    pub fn new(
        rule: impl Into<String>,
        profile: Profile,
        constraint: Formula,
        outcome: Ballot,
        violated: Clause,
    ) -> Result<Self, AggregationError> {
        let invalid = |msg: &str| Err(AggregationError::InvalidWitness(msg.to_string()));
        if profile.issues() != constraint.issues() {
            return Err(AggregationError::IssueMismatch);
        }
        let table = Limits::default().truth_table(&constraint)?;
        let irrational = irrational_voters(&table, &profile);
        if !irrational.is_empty() {
            return Err(AggregationError::IrrationalIndividuals { voters: irrational });
        }
        if table.contains(&outcome) {
            return invalid("outcome satisfies the constraint");
        }
        if violated.literals().iter().any(|l| l.issue >= constraint.num_issues()) {
            return invalid("violated clause mentions an unknown issue");
        }
        if !violated.falsified_by(&outcome) {
            return invalid("outcome does not falsify the violated clause");
        }
        if !is_implied(&table, &violated) {
            return invalid("violated clause is not implied by the constraint");
        }
        if (0..violated.len()).any(|i| is_implied(&table, &violated.without(i))) {
            return invalid("violated clause is not prime");
        }
        Ok(ParadoxWitness {
            rule: rule.into(),
            profile,
            constraint,
            outcome,
            violated,
        })
    }

    pub fn rule(&self) -> &str {
        &self.rule
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn constraint(&self) -> &Formula {
        &self.constraint
    }

    pub fn outcome(&self) -> Ballot {
        self.outcome
    }

    pub fn violated(&self) -> &Clause {
        &self.violated
    }
}

/// Every model of the table satisfies the clause.
fn is_implied(table: &TruthTable, clause: &Clause) -> bool {
    table.models().all(|b| clause.satisfied_by(&b))
}

/// 1-based indices of voters whose ballot falls outside the table.
fn irrational_voters(table: &TruthTable, profile: &Profile) -> Vec<usize> {
    profile
        .ballots()
        .iter()
        .enumerate()
        .filter(|(_, b)| !table.contains(b))
        .map(|(i, _)| i + 1)
        .collect()
}

/// The lexicographically first prime implicate of `ic` falsified by `outcome`.
pub fn first_violated(ic: &Formula, outcome: &Ballot) -> Result<Clause, AggregationError> {
    prime_implicates(ic)?
        .into_iter()
        .find(|c| c.falsified_by(outcome))
        .ok_or_else(|| AggregationError::InvalidWitness("no prime implicate is falsified by the outcome".into()))
}

/// Returns a witness iff every ballot in `profile` satisfies `ic` and the
/// rule's outcome does not.
///
/// A profile with irrational voters is an error, not a "no paradox" answer.
pub fn check_paradox(
    rule: &dyn AggregationRule,
    profile: &Profile,
    ic: &Formula,
) -> Result<Option<ParadoxWitness>, AggregationError> {
    if profile.issues() != ic.issues() {
        return Err(AggregationError::IssueMismatch);
    }
    let table = Limits::default().truth_table(ic)?;
    let irrational = irrational_voters(&table, profile);
    if !irrational.is_empty() {
        return Err(AggregationError::IrrationalIndividuals { voters: irrational });
    }
    let outcome = rule.aggregate(profile.ballots())?;
    if table.contains(&outcome) {
        return Ok(None);
    }
    let violated = first_violated(ic, &outcome)?;
    ParadoxWitness::new(rule.id(), profile.clone(), ic.clone(), outcome, violated).map(Some)
}

/// Result of exhaustively checking collective rationality at a fixed voter count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrVerdict {
    /// No rational profile of `voters` ballots yields an irrational outcome.
    Safe {
        voters: usize,
        profiles: u128,
    },
    Paradox(Box<ParadoxWitness>),
}

impl CrVerdict {
    pub fn is_safe(&self) -> bool {
        matches!(self, CrVerdict::Safe { .. })
    }

    pub fn witness(&self) -> Option<&ParadoxWitness> {
        match self {
            CrVerdict::Paradox(w) => Some(w),
            CrVerdict::Safe { .. } => None,
        }
    }
}

/// Number of ordered profiles of `voters` rational ballots, if it fits.
pub fn profile_count(models: usize, voters: usize) -> Option<u128> {
    (models as u128).checked_pow(u32::try_from(voters).ok()?)
}

/// Enumerates every ordered profile of `voters` rational ballots and returns
/// the lexicographically first paradox, or certifies the rule collectively
/// rational for this voter count.
///
/// The search is split across threads by the first voter's ballot; the
/// first witness in sequential order is returned regardless.
pub fn brute_force_cr(
    rule: &dyn AggregationRule,
    ic: &Formula,
    voters: usize,
    budget: u64,
) -> Result<CrVerdict, AggregationError> {
    rule.supports(voters)?;
    let table = Limits::default().truth_table(ic)?;
    let models: Vec<Ballot> = table.models().collect();
    let required = profile_count(models.len(), voters).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(AggregationError::BudgetExceeded { required, budget });
    }
    if models.is_empty() {
        return Ok(CrVerdict::Safe { voters, profiles: 0 });
    }

    let k = models.len();
    let found = (0..k)
        .into_par_iter()
        .map(|first| -> Result<Option<Vec<Ballot>>, AggregationError> {
            let mut digits = vec![0usize; voters];
            digits[0] = first;
            let mut buf: Vec<Ballot> = digits.iter().map(|&d| models[d]).collect();
            loop {
                let outcome = rule.aggregate(&buf)?;
                if !table.contains(&outcome) {
                    return Ok(Some(buf));
                }
                // odometer over voters 2..n, last voter fastest
                let mut pos = voters;
                loop {
                    if pos <= 1 {
                        return Ok(None);
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < k {
                        buf[pos] = models[digits[pos]];
                        break;
                    }
                    digits[pos] = 0;
                    buf[pos] = models[0];
                }
            }
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });

    match found {
        None => Ok(CrVerdict::Safe {
            voters,
            profiles: required,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!("filtered above"),
        Some(Ok(Some(ballots))) => {
            let profile = Profile::new(ic.issues().clone(), ballots)?;
            let outcome = rule.aggregate(profile.ballots())?;
            let violated = first_violated(ic, &outcome)?;
            let witness = ParadoxWitness::new(rule.id(), profile, ic.clone(), outcome, violated)?;
            Ok(CrVerdict::Paradox(Box::new(witness)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregation::Majority;
    use crate::logic::{parse, IssueSet, Literal};

    fn f(text: &str, m: usize) -> Formula {
        parse(text, &IssueSet::numbered(m).unwrap()).unwrap()
    }

    fn profile(rows: &[&[u8]]) -> Profile {
        Profile::from_rows(IssueSet::numbered(rows[0].len()).unwrap(), rows).unwrap()
    }

    #[test]
    fn introductory_paradox() {
        let ic = f("p1 & p2 -> p3", 3);
        let p = profile(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        let w = check_paradox(&Majority, &p, &ic).unwrap().unwrap();
        assert_eq!(w.outcome().bits(), vec![1, 1, 0]);
        assert_eq!(
            w.violated(),
            &Clause::new([Literal::neg(0), Literal::neg(1), Literal::pos(2)]).unwrap()
        );
        assert_eq!(w.rule(), "majority");
    }

    #[test]
    fn unanimous_profile_is_not_a_paradox() {
        let ic = f("p1 & p2 -> p3", 3);
        let p = profile(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(check_paradox(&Majority, &p, &ic).unwrap(), None);
    }

    #[test]
    fn irrational_individuals_are_reported() {
        let ic = f("p1 & p2 -> p3", 3);
        let p = profile(&[&[1, 1, 0], &[1, 0, 0], &[1, 1, 0]]);
        assert_eq!(
            check_paradox(&Majority, &p, &ic),
            Err(AggregationError::IrrationalIndividuals { voters: vec![1, 3] })
        );
    }

    #[test]
    fn issue_mismatch() {
        let ic = f("p1", 2);
        let p = profile(&[&[1, 1, 0]]);
        assert_eq!(check_paradox(&Majority, &p, &ic), Err(AggregationError::IssueMismatch));
    }

    #[test]
    fn brute_force_disjunction_is_safe() {
        let v = brute_force_cr(&Majority, &f("p1 | p2", 2), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            v,
            CrVerdict::Safe {
                voters: 3,
                profiles: 27
            }
        );
    }

    #[test]
    fn brute_force_finds_first_witness() {
        let v = brute_force_cr(&Majority, &f("p1 & p2 -> p3", 3), 3, DEFAULT_BUDGET).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.outcome().bits(), vec![1, 1, 0]);
        // Lexicographically first paradoxical profile over the sorted models.
        let rows: Vec<Vec<u8>> = w.profile().ballots().iter().map(Ballot::bits).collect();
        assert_eq!(rows, vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn brute_force_budget() {
        let err = brute_force_cr(&Majority, &f("TRUE", 4), 7, 1000).unwrap_err();
        assert_eq!(
            err,
            AggregationError::BudgetExceeded {
                required: 16u128.pow(7),
                budget: 1000
            }
        );
    }

    #[test]
    fn brute_force_even_and_unsat() {
        assert_eq!(
            brute_force_cr(&Majority, &f("p1", 1), 4, DEFAULT_BUDGET),
            Err(AggregationError::EvenVoters { voters: 4 })
        );
        let v = brute_force_cr(&Majority, &f("p1 & ~p1", 1), 3, DEFAULT_BUDGET).unwrap();
        assert!(v.is_safe());
    }

    #[test]
    fn witness_validation() {
        let ic = f("p1 & p2 -> p3", 3);
        let p = profile(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        let outcome = Ballot::from_bits(&[1, 1, 0]).unwrap();
        let good = Clause::new([Literal::neg(0), Literal::neg(1), Literal::pos(2)]).unwrap();
        assert!(ParadoxWitness::new("majority", p.clone(), ic.clone(), outcome, good.clone()).is_ok());

        let rational = Ballot::from_bits(&[1, 1, 1]).unwrap();
        assert!(matches!(
            ParadoxWitness::new("majority", p.clone(), ic.clone(), rational, good),
            Err(AggregationError::InvalidWitness(_))
        ));
        let not_implied = Clause::new([Literal::neg(0), Literal::neg(1)]).unwrap();
        assert!(matches!(
            ParadoxWitness::new("majority", p, ic, outcome, not_implied),
            Err(AggregationError::InvalidWitness(_))
        ));
    }
}
