use std::fmt;

use super::issues::MAX_ISSUES;
use super::LogicError;

/// A binary assignment to `len` issues.
///
/// Bits are packed so that issue 0 is the most significant position. The
/// packed word therefore orders ballots lexicographically by `(b1, .., bm)`,
/// which is also the derived `Ord` for ballots of equal length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ballot {
    len: u8,
    word: u64,
}

impl Ballot {
    pub fn new(bits: &[bool]) -> Result<Self, LogicError> {
        if bits.is_empty() {
            return Err(LogicError::EmptyIssueSet);
        }
        if bits.len() > MAX_ISSUES {
            return Err(LogicError::TooManyIssues {
                count: bits.len(),
                max: MAX_ISSUES,
            });
        }
        let word = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Ok(Ballot {
            len: bits.len() as u8,
            word,
        })
    }

    /// Builds a ballot from 0/1 values. Any nonzero value counts as 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self, LogicError> {
        let bools: Vec<bool> = bits.iter().map(|&b| b != 0).collect();
        Self::new(&bools)
    }

    /// `word` uses the packed layout described on the type; bits above
    /// `len` are discarded.
    pub fn from_word(word: u64, len: usize) -> Self {
        assert!((1..=MAX_ISSUES).contains(&len), "ballot length {len}");
        Ballot {
            len: len as u8,
            word: word & low_mask(len),
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::from_word(0, len)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    pub fn get(&self, issue: usize) -> bool {
        assert!(issue < self.len(), "issue {issue} out of range");
        self.word >> position(issue, self.len()) & 1 == 1
    }

    pub fn set(&mut self, issue: usize, value: bool) {
        assert!(issue < self.len(), "issue {issue} out of range");
        let bit = 1u64 << position(issue, self.len());
        if value {
            self.word |= bit;
        } else {
            self.word &= !bit;
        }
    }

    pub fn with(mut self, issue: usize, value: bool) -> Self {
        self.set(issue, value);
        self
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len()).map(|j| self.get(j) as u8).collect()
    }

    pub fn count_ones(&self) -> u32 {
        self.word.count_ones()
    }
}

/// Bit position of `issue` inside a packed word of `len` issues.
pub(crate) fn position(issue: usize, len: usize) -> usize {
    len - 1 - issue
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Debug for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ballot{self}")
    }
}

/// Renders as `(1,0,1)`.
impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for j in 0..self.len() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(j) as u8)?;
        }
        f.write_str(")")
    }
}
