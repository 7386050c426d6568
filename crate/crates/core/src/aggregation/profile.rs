use crate::logic::parser::{header_issues, read_header, strip_comment};
use crate::logic::{Ballot, IssueSet, ParseError};

use super::AggregationError;

/// One ballot per voter over a shared issue set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    issues: IssueSet,
    ballots: Vec<Ballot>,
}

impl Profile {
    pub fn new(issues: IssueSet, ballots: Vec<Ballot>) -> Result<Self, AggregationError> {
        if ballots.is_empty() {
            return Err(AggregationError::EmptyProfile);
        }
        if let Some((voter, b)) = ballots.iter().enumerate().find(|(_, b)| b.len() != issues.len()) {
            return Err(AggregationError::BallotLength {
                voter: voter + 1,
                expected: issues.len(),
                found: b.len(),
            });
        }
        Ok(Profile { issues, ballots })
    }

    /// Convenience constructor from rows of 0/1 values.
    pub fn from_rows(issues: IssueSet, rows: &[&[u8]]) -> Result<Self, AggregationError> {
        let ballots = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != issues.len() {
                    return Err(AggregationError::BallotLength {
                        voter: i + 1,
                        expected: issues.len(),
                        found: row.len(),
                    });
                }
                Ok(Ballot::from_bits(row)?)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(issues, ballots)
    }

    pub fn issues(&self) -> &IssueSet {
        &self.issues
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn voters(&self) -> usize {
        self.ballots.len()
    }

    pub fn num_issues(&self) -> usize {
        self.issues.len()
    }

    /// Serializes in the profile file format.
    pub fn render(&self) -> String {
        let mut out = format!("issues: {}\n", self.issues);
        for b in &self.ballots {
            let row: Vec<String> = b.bits().iter().map(u8::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reads an `issues:` header followed by one line of space-separated bits per
/// voter. Blank lines and `#` comments are ignored.
pub fn parse_profile_file(text: &str) -> Result<Profile, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, names) = read_header(&mut lines, "issues")?;
    let issues = header_issues(header_line, names)?;
    let mut ballots = Vec::new();
    for (number, raw) in lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let bits = line
            .split_whitespace()
            .map(|w| match w {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(ParseError::Format {
                    line: number,
                    message: format!("expected 0 or 1, found `{other}`"),
                }),
            })
            .collect::<Result<Vec<bool>, _>>()?;
        if bits.len() != issues.len() {
            return Err(ParseError::Format {
                line: number,
                message: format!("ballot has {} values, expected {}", bits.len(), issues.len()),
            });
        }
        ballots.push(Ballot::new(&bits).map_err(|source| ParseError::Invalid { line: number, source })?);
    }
    if ballots.is_empty() {
        return Err(ParseError::Format {
            line: text.lines().count().max(1),
            message: "profile has no voters".into(),
        });
    }
    Ok(Profile::new(issues, ballots).expect("ballot lengths checked above"))
}
