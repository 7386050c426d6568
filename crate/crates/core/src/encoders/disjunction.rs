use std::collections::BTreeSet;

use crate::aggregation::Profile;
use crate::logic::{Ballot, Expr, Formula};

use super::EncodeError;

/// The constraint whose models are exactly the ballots occurring in `profile`.
///
/// Disjuncts follow increasing ballot order, each a full conjunction of literals.
pub fn ballot_disjunction_constraint(profile: &Profile) -> Result<Formula, EncodeError> {
    if profile.voters() == 0 {
        return Err(EncodeError::EmptyProfile);
    }
    let distinct: BTreeSet<Ballot> = profile.ballots().iter().copied().collect();
    let expr = Expr::disjunction(
        distinct
            .into_iter()
            .map(|b| Expr::conjunction((0..b.len()).map(|i| Expr::literal(i, b.get(i))))),
    );
    Ok(Formula::new(profile.issues().clone(), expr)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{models, IssueSet};

    fn profile(names: &[&str], rows: &[&[u8]]) -> Profile {
        Profile::from_rows(IssueSet::new(names.iter().copied()).unwrap(), rows).unwrap()
    }

    #[test]
    fn models_are_the_profile_ballots() {
        let p = profile(&["A", "B", "C"], &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0], &[1, 0, 1]]);
        let f = ballot_disjunction_constraint(&p).unwrap();
        assert_eq!(f.to_string(), "~A & B & C | A & ~B & C | A & B & ~C");
        let ms: Vec<Vec<u8>> = models(&f).unwrap().iter().map(Ballot::bits).collect();
        assert_eq!(ms, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn single_ballot() {
        let p = profile(&["x", "y"], &[&[0, 1]]);
        assert_eq!(ballot_disjunction_constraint(&p).unwrap().to_string(), "~x & y");
    }

    #[test]
    fn all_ballots_give_a_tautology() {
        let p = profile(&["x", "y"], &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        let f = ballot_disjunction_constraint(&p).unwrap();
        assert_eq!(models(&f).unwrap().len(), 4);
    }
}
