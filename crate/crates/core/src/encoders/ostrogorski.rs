use itertools::Itertools;

use crate::logic::{Expr, Formula, IssueSet};

use super::{EncodeError, Encoding};

/// Keeps the majority disjunction (C(15, 8) = 6435 terms) printable.
pub const MAX_OSTROGORSKI_ISSUES: usize = 15;

/// `E S F` for three issues, `q1 .. qk` otherwise.
pub fn ostrogorski_issue_names(k: usize) -> Vec<String> {
    if k == 3 {
        ["E", "S", "F"].map(String::from).to_vec()
    } else {
        (1..=k).map(|i| format!("q{i}")).collect()
    }
}

/// `A <-> (majority of the k policy issues)`, with `A` as the last issue.
pub fn encode_ostrogorski(k: usize, names: &[String]) -> Result<Encoding, EncodeError> {
    if k < 3 || k.is_multiple_of(2) || k > MAX_OSTROGORSKI_ISSUES {
        return Err(EncodeError::PolicyIssueCount {
            k,
            max: MAX_OSTROGORSKI_ISSUES,
        });
    }
    if names.len() != k {
        return Err(EncodeError::IssueNameCount {
            expected: k,
            found: names.len(),
        });
    }
    let issues = IssueSet::new(names.iter().cloned().chain(["A".to_string()]))?;
    let majority = Expr::disjunction(
        (0..k)
            .combinations(k.div_ceil(2))
            .map(|set| Expr::conjunction(set.into_iter().map(Expr::var))),
    );
    let mut descriptions: Vec<String> = names.iter().map(|n| format!("agree with the party on {n}")).collect();
    descriptions.push("support the party".into());
    Ok(Encoding {
        constraint: Formula::new(issues, Expr::iff(Expr::var(k), majority))?,
        descriptions,
    })
}
