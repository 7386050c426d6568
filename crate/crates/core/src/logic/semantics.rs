//! Exhaustive semantics: model sets, entailment, prime implicates and
//! minimally falsifying partial assignments.
//!
//! Everything here enumerates the full truth table, so issue counts are
//! capped by [`Limits`].

use std::collections::BTreeSet;

use super::ballot::{low_mask, Ballot};
use super::clause::{Clause, PartialAssignment};
use super::formula::{Expr, Formula};
use super::LogicError;

/// Enumeration bounds for the semantic operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    max_issues: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_issues: Limits::DEFAULT_MAX_ISSUES,
        }
    }
}

impl Limits {
    pub const DEFAULT_MAX_ISSUES: usize = 16;
    /// Truth tables above this size are never built.
    pub const HARD_MAX_ISSUES: usize = 24;
    /// Prime implicates need one bit per partial assignment (3^m of them).
    pub const PRIME_MAX_ISSUES: usize = 18;

    pub fn new(max_issues: usize) -> Result<Self, LogicError> {
        if max_issues == 0 || max_issues > Self::HARD_MAX_ISSUES {
            return Err(LogicError::IssueCountTooLarge {
                issues: max_issues,
                limit: Self::HARD_MAX_ISSUES,
            });
        }
        Ok(Limits { max_issues })
    }

    pub fn max_issues(&self) -> usize {
        self.max_issues
    }

    fn check(&self, issues: usize, limit: usize) -> Result<(), LogicError> {
        let limit = limit.min(self.max_issues);
        if issues > limit {
            return Err(LogicError::IssueCountTooLarge { issues, limit });
        }
        Ok(())
    }

    pub fn truth_table(&self, f: &Formula) -> Result<TruthTable, LogicError> {
        self.check(f.num_issues(), Self::HARD_MAX_ISSUES)?;
        Ok(TruthTable::build(f))
    }

    /// All satisfying ballots in lexicographic order.
    pub fn models(&self, f: &Formula) -> Result<Vec<Ballot>, LogicError> {
        Ok(self.truth_table(f)?.models().collect())
    }

    pub fn entails(&self, f: &Formula, g: &Formula) -> Result<bool, LogicError> {
        if f.issues() != g.issues() {
            return Err(LogicError::IssueSetMismatch);
        }
        Ok(self.truth_table(f)?.is_subset_of(&self.truth_table(g)?))
    }

    pub fn equivalent(&self, f: &Formula, g: &Formula) -> Result<bool, LogicError> {
        if f.issues() != g.issues() {
            return Err(LogicError::IssueSetMismatch);
        }
        Ok(self.truth_table(f)? == self.truth_table(g)?)
    }

    pub fn mifap_assignments(&self, f: &Formula) -> Result<BTreeSet<PartialAssignment>, LogicError> {
        self.check(f.num_issues(), Self::PRIME_MAX_ISSUES)?;
        Ok(minimal_falsifiers(&TruthTable::build(f)))
    }

    pub fn prime_implicates(&self, f: &Formula) -> Result<BTreeSet<Clause>, LogicError> {
        Ok(self
            .mifap_assignments(f)?
            .iter()
            .map(PartialAssignment::negation_clause)
            .collect())
    }

    pub fn max_prime_implicate_size(&self, f: &Formula) -> Result<usize, LogicError> {
        Ok(self
            .mifap_assignments(f)?
            .iter()
            .map(PartialAssignment::len)
            .max()
            .unwrap_or(0))
    }
}

pub fn models(f: &Formula) -> Result<Vec<Ballot>, LogicError> {
    Limits::default().models(f)
}

pub fn entails(f: &Formula, g: &Formula) -> Result<bool, LogicError> {
    Limits::default().entails(f, g)
}

pub fn equivalent(f: &Formula, g: &Formula) -> Result<bool, LogicError> {
    Limits::default().equivalent(f, g)
}

pub fn prime_implicates(f: &Formula) -> Result<BTreeSet<Clause>, LogicError> {
    Limits::default().prime_implicates(f)
}

pub fn mifap_assignments(f: &Formula) -> Result<BTreeSet<PartialAssignment>, LogicError> {
    Limits::default().mifap_assignments(f)
}

pub fn max_prime_implicate_size(f: &Formula) -> Result<usize, LogicError> {
    Limits::default().max_prime_implicate_size(f)
}

/// The model set of a formula as a bitset indexed by packed ballot word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    issues: usize,
    bits: Vec<u64>,
}

// Bit patterns of the six lowest ballot positions within one 64-bit block.
const LOW_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl TruthTable {
    fn build(f: &Formula) -> Self {
        let issues = f.num_issues();
        let mut table = TruthTable {
            issues,
            bits: Self::eval_blocks(f.expr(), issues),
        };
        table.trim();
        table
    }

    fn block_count(issues: usize) -> usize {
        if issues <= 6 {
            1
        } else {
            1 << (issues - 6)
        }
    }

    fn trim(&mut self) {
        if self.issues < 6 {
            self.bits[0] &= low_mask(1 << self.issues);
        }
    }

    fn var_block(var: usize, issues: usize, block: usize) -> u64 {
        let pos = issues - 1 - var;
        if pos < 6 {
            LOW_PATTERNS[pos]
        } else if (block >> (pos - 6)) & 1 == 1 {
            u64::MAX
        } else {
            0
        }
    }

    fn eval_blocks(e: &Expr, issues: usize) -> Vec<u64> {
        let n = Self::block_count(issues);
        let zip = |a: Vec<u64>, b: Vec<u64>, op: fn(u64, u64) -> u64| -> Vec<u64> {
            a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
        };
        match e {
            Expr::True => vec![u64::MAX; n],
            Expr::False => vec![0; n],
            Expr::Var(v) => (0..n).map(|k| Self::var_block(*v, issues, k)).collect(),
            Expr::Not(a) => Self::eval_blocks(a, issues).into_iter().map(|x| !x).collect(),
            Expr::And(a, b) => zip(Self::eval_blocks(a, issues), Self::eval_blocks(b, issues), |x, y| x & y),
            Expr::Or(a, b) => zip(Self::eval_blocks(a, issues), Self::eval_blocks(b, issues), |x, y| x | y),
            Expr::Implies(a, b) => zip(Self::eval_blocks(a, issues), Self::eval_blocks(b, issues), |x, y| {
                !x | y
            }),
            Expr::Iff(a, b) => zip(Self::eval_blocks(a, issues), Self::eval_blocks(b, issues), |x, y| {
                !(x ^ y)
            }),
        }
    }

    pub fn num_issues(&self) -> usize {
        self.issues
    }

    /// Raw 64-bit blocks; bit `w` of the table is bit `w % 64` of block `w / 64`.
    pub fn blocks(&self) -> &[u64] {
        &self.bits
    }

    pub fn contains_word(&self, word: u64) -> bool {
        let w = word as usize;
        self.bits[w >> 6] >> (w & 63) & 1 == 1
    }

    pub fn contains(&self, ballot: &Ballot) -> bool {
        ballot.len() == self.issues && self.contains_word(ballot.word())
    }

    pub fn count(&self) -> u64 {
        self.bits.iter().map(|b| b.count_ones() as u64).sum()
    }

    pub fn is_unsatisfiable(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn is_tautology(&self) -> bool {
        self.count() == 1u64 << self.issues
    }

    pub fn is_subset_of(&self, other: &TruthTable) -> bool {
        self.issues == other.issues && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Satisfying ballots in increasing (lexicographic) order.
    pub fn models(&self) -> impl Iterator<Item = Ballot> + '_ {
        let issues = self.issues;
        self.bits.iter().enumerate().flat_map(move |(k, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(Ballot::from_word(((k as u64) << 6) | bit, issues))
            })
        })
    }
}

/// Dense bitset over ternary-coded partial assignments.
struct TernaryBits(Vec<u64>);

impl TernaryBits {
    fn new(len: usize) -> Self {
        TernaryBits(vec![0; len.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
}

/// Walks every partial assignment over `issues` positions in ternary order.
///
/// Position `p` (bit `p` of a packed ballot word) has digit weight `3^p`;
/// digit 0 binds it to false, 1 to true, 2 leaves it free.
struct TernaryOdometer {
    issues: usize,
    digits: Vec<u8>,
    value: u64,
    free: u64,
    index: usize,
}

impl TernaryOdometer {
    fn new(issues: usize) -> Self {
        TernaryOdometer {
            issues,
            digits: vec![0; issues],
            value: 0,
            free: 0,
            index: 0,
        }
    }

    fn advance(&mut self) {
        self.index += 1;
        for p in 0..self.issues {
            let bit = 1u64 << p;
            match self.digits[p] {
                0 => {
                    self.digits[p] = 1;
                    self.value |= bit;
                    return;
                }
                1 => {
                    self.digits[p] = 2;
                    self.value &= !bit;
                    self.free |= bit;
                    return;
                }
                _ => {
                    self.digits[p] = 0;
                    self.free &= !bit;
                }
            }
        }
    }
}

/// All minimally falsifying partial assignments of the table.
///
/// First pass: a partial assignment is extendable iff it is a total model,
/// or one of its two one-step refinements on a free position is
/// extendable. Both refinements have smaller ternary index, so one
/// increasing sweep fills the table. Second pass: keep the non-extendable
/// assignments whose every one-binding relaxation is extendable.
fn minimal_falsifiers(table: &TruthTable) -> BTreeSet<PartialAssignment> {
    let m = table.num_issues();
    let total = 3usize.pow(m as u32);
    let pow3: Vec<usize> = (0..m).map(|p| 3usize.pow(p as u32)).collect();

    let mut extendable = TernaryBits::new(total);
    let mut odo = TernaryOdometer::new(m);
    for idx in 0..total {
        let ext = if odo.free == 0 {
            table.contains_word(odo.value)
        } else {
            let p = odo.free.trailing_zeros() as usize;
            extendable.get(idx - 2 * pow3[p]) || extendable.get(idx - pow3[p])
        };
        if ext {
            extendable.set(idx);
        }
        if idx + 1 < total {
            odo.advance();
        }
    }

    let mut out = BTreeSet::new();
    let mut odo = TernaryOdometer::new(m);
    for idx in 0..total {
        if !extendable.get(idx) {
            let bound = !odo.free & low_mask(m);
            let minimal = (0..m).filter(|p| bound >> p & 1 == 1).all(|p| {
                let digit = odo.digits[p] as usize;
                extendable.get(idx + (2 - digit) * pow3[p])
            });
            if minimal {
                let rho = PartialAssignment::from_pairs(
                    (0..m)
                        .filter(|p| bound >> p & 1 == 1)
                        .map(|p| (m - 1 - p, odo.value >> p & 1 == 1)),
                )
                .expect("positions are distinct");
                out.insert(rho);
            }
        }
        if idx + 1 < total {
            odo.advance();
        }
    }
    out
}
