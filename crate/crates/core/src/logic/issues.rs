use std::fmt;
use std::sync::Arc;

use super::LogicError;

/// Upper bound on the number of issues any ballot can carry.
pub const MAX_ISSUES: usize = 64;

const RESERVED: [&str; 2] = ["TRUE", "FALSE"];

/// An ordered, named set of binary issues. Issue `j` is the `j`-th name.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IssueSet {
    names: Arc<[String]>,
}

impl IssueSet {
    pub fn new<I, S>(names: I) -> Result<Self, LogicError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(LogicError::EmptyIssueSet);
        }
        if names.len() > MAX_ISSUES {
            return Err(LogicError::TooManyIssues {
                count: names.len(),
                max: MAX_ISSUES,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || RESERVED.contains(&name.as_str()) {
                return Err(LogicError::InvalidIssueName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(LogicError::DuplicateIssue(name.clone()));
            }
        }
        Ok(IssueSet { names: names.into() })
    }

    /// The default issue set `p1 .. pm`.
    pub fn numbered(count: usize) -> Result<Self, LogicError> {
        Self::new((1..=count).map(|i| format!("p{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for IssueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl fmt::Display for IssueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
