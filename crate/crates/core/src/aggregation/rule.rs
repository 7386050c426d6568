use crate::logic::Ballot;

use super::{AggregationError, Profile};

/// An aggregation procedure mapping a profile to a collective ballot.
pub trait AggregationRule: Sync {
    fn id(&self) -> &str;

    /// Rejects voter counts the rule is not defined for.
    fn supports(&self, _voters: usize) -> Result<(), AggregationError> {
        Ok(())
    }

    fn aggregate(&self, ballots: &[Ballot]) -> Result<Ballot, AggregationError>;
}

/// Issue-wise majority for an odd number of voters: issue `j` is accepted
/// iff at least `(n + 1) / 2` ballots accept it.
#[derive(Debug, Clone, Copy, Default)]
pub struct Majority;

impl AggregationRule for Majority {
    fn id(&self) -> &str {
        "majority"
    }

    fn supports(&self, voters: usize) -> Result<(), AggregationError> {
        match voters {
            0 => Err(AggregationError::EmptyProfile),
            n if n % 2 == 0 => Err(AggregationError::EvenVoters { voters: n }),
            _ => Ok(()),
        }
    }

    fn aggregate(&self, ballots: &[Ballot]) -> Result<Ballot, AggregationError> {
        self.supports(ballots.len())?;
        let m = ballots[0].len();
        if let Some((voter, b)) = ballots.iter().enumerate().find(|(_, b)| b.len() != m) {
            return Err(AggregationError::BallotLength {
                voter: voter + 1,
                expected: m,
                found: b.len(),
            });
        }
        let quota = ballots.len().div_ceil(2);
        let mut word = 0u64;
        for pos in 0..m {
            let yes = ballots.iter().filter(|b| b.word() >> pos & 1 == 1).count();
            if yes >= quota {
                word |= 1 << pos;
            }
        }
        Ok(Ballot::from_word(word, m))
    }
}

pub fn majority(profile: &Profile) -> Result<Ballot, AggregationError> {
    Majority.aggregate(profile.ballots())
}
