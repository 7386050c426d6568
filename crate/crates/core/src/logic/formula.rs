use std::fmt;

use super::ballot::{position, Ballot};
use super::issues::IssueSet;
use super::LogicError;

/// Propositional syntax tree over issue indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    True,
    False,
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Iff(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn var(index: usize) -> Self {
        Expr::Var(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Self {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Self {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Self {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Expr, b: Expr) -> Self {
        Expr::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Expr, b: Expr) -> Self {
        Expr::Iff(Box::new(a), Box::new(b))
    }

    /// `p` when `positive`, `~p` otherwise.
    pub fn literal(index: usize, positive: bool) -> Self {
        if positive {
            Expr::Var(index)
        } else {
            Expr::not(Expr::Var(index))
        }
    }

    /// Left-folded conjunction, `TRUE` when empty.
    pub fn conjunction<I: IntoIterator<Item = Expr>>(items: I) -> Self {
        items.into_iter().reduce(Expr::and).unwrap_or(Expr::True)
    }

    /// Left-folded disjunction, `FALSE` when empty.
    pub fn disjunction<I: IntoIterator<Item = Expr>>(items: I) -> Self {
        items.into_iter().reduce(Expr::or).unwrap_or(Expr::False)
    }

    /// Flattens nested `And` nodes into their operands, left to right.
    pub fn conjuncts(&self) -> Vec<&Expr> {
        let mut out = Vec::new();
        fn walk<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
            match e {
                Expr::And(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Expr::True => {}
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Expr::True | Expr::False => None,
            Expr::Var(i) => Some(*i),
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Implies(a, b) | Expr::Iff(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Evaluates against a packed ballot word of `len` issues.
    pub(crate) fn eval_word(&self, word: u64, len: usize) -> bool {
        match self {
            Expr::True => true,
            Expr::False => false,
            Expr::Var(i) => word >> position(*i, len) & 1 == 1,
            Expr::Not(e) => !e.eval_word(word, len),
            Expr::And(a, b) => a.eval_word(word, len) && b.eval_word(word, len),
            Expr::Or(a, b) => a.eval_word(word, len) || b.eval_word(word, len),
            Expr::Implies(a, b) => !a.eval_word(word, len) || b.eval_word(word, len),
            Expr::Iff(a, b) => a.eval_word(word, len) == b.eval_word(word, len),
        }
    }

    /// Rewrites every `And`/`Or`/`Iff` chain into right-associated form so
    /// that `(a & b) & c` and `a & (b & c)` compare equal.
    pub fn normalized(&self) -> Expr {
        fn chain(e: &Expr, same: &dyn Fn(&Expr) -> Option<(&Expr, &Expr)>, out: &mut Vec<Expr>) {
            match same(e) {
                Some((a, b)) => {
                    chain(a, same, out);
                    chain(b, same, out);
                }
                None => out.push(e.normalized()),
            }
        }
        fn rebuild(items: Vec<Expr>, make: fn(Expr, Expr) -> Expr) -> Expr {
            let mut iter = items.into_iter().rev();
            let last = iter.next().expect("chain has operands");
            iter.fold(last, |acc, e| make(e, acc))
        }
        match self {
            Expr::True | Expr::False | Expr::Var(_) => self.clone(),
            Expr::Not(e) => Expr::not(e.normalized()),
            Expr::Implies(a, b) => Expr::implies(a.normalized(), b.normalized()),
            Expr::And(..) => {
                let mut items = Vec::new();
                chain(
                    self,
                    &|e| match e {
                        Expr::And(a, b) => Some((a, b)),
                        _ => None,
                    },
                    &mut items,
                );
                rebuild(items, Expr::and)
            }
            Expr::Or(..) => {
                let mut items = Vec::new();
                chain(
                    self,
                    &|e| match e {
                        Expr::Or(a, b) => Some((a, b)),
                        _ => None,
                    },
                    &mut items,
                );
                rebuild(items, Expr::or)
            }
            Expr::Iff(..) => {
                let mut items = Vec::new();
                chain(
                    self,
                    &|e| match e {
                        Expr::Iff(a, b) => Some((a, b)),
                        _ => None,
                    },
                    &mut items,
                );
                rebuild(items, Expr::iff)
            }
        }
    }

    pub fn display<'a>(&'a self, issues: &'a IssueSet) -> impl fmt::Display + 'a {
        ExprDisplay { expr: self, issues }
    }
}

// Binding strength, loosest first.
const PREC_IFF: u8 = 1;
const PREC_IMPLIES: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_ATOM: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Iff(..) => PREC_IFF,
        Expr::Implies(..) => PREC_IMPLIES,
        Expr::Or(..) => PREC_OR,
        Expr::And(..) => PREC_AND,
        _ => PREC_ATOM,
    }
}

struct ExprDisplay<'a> {
    expr: &'a Expr,
    issues: &'a IssueSet,
}

impl ExprDisplay<'_> {
    fn write(&self, f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
        let parens = precedence(e) < min_prec;
        if parens {
            f.write_str("(")?;
        }
        match e {
            Expr::True => f.write_str("TRUE")?,
            Expr::False => f.write_str("FALSE")?,
            Expr::Var(i) => f.write_str(self.issues.name(*i))?,
            Expr::Not(inner) => {
                f.write_str("~")?;
                self.write(f, inner, PREC_ATOM)?;
            }
            Expr::And(a, b) => self.binary(f, a, " & ", b, PREC_AND, false)?,
            Expr::Or(a, b) => self.binary(f, a, " | ", b, PREC_OR, false)?,
            Expr::Iff(a, b) => self.binary(f, a, " <-> ", b, PREC_IFF, false)?,
            Expr::Implies(a, b) => self.binary(f, a, " -> ", b, PREC_IMPLIES, true)?,
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }

    fn binary(
        &self,
        f: &mut fmt::Formatter<'_>,
        a: &Expr,
        op: &str,
        b: &Expr,
        prec: u8,
        right_assoc: bool,
    ) -> fmt::Result {
        let (left_min, right_min) = if right_assoc {
            (prec + 1, prec)
        } else {
            (prec, prec + 1)
        };
        self.write(f, a, left_min)?;
        f.write_str(op)?;
        self.write(f, b, right_min)
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.expr, 0)
    }
}

/// A propositional formula bound to the issue set it ranges over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    issues: IssueSet,
    expr: Expr,
}

impl Formula {
    pub fn new(issues: IssueSet, expr: Expr) -> Result<Self, LogicError> {
        if let Some(max) = expr.max_var() {
            if max >= issues.len() {
                return Err(LogicError::VarOutOfRange {
                    index: max,
                    count: issues.len(),
                });
            }
        }
        Ok(Formula { issues, expr })
    }

    pub fn tautology(issues: IssueSet) -> Self {
        Formula {
            issues,
            expr: Expr::True,
        }
    }

    pub fn issues(&self) -> &IssueSet {
        &self.issues
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn into_expr(self) -> Expr {
        self.expr
    }

    pub fn num_issues(&self) -> usize {
        self.issues.len()
    }

    pub fn eval(&self, ballot: &Ballot) -> Result<bool, LogicError> {
        if ballot.len() != self.num_issues() {
            return Err(LogicError::LengthMismatch {
                expected: self.num_issues(),
                found: ballot.len(),
            });
        }
        Ok(self.expr.eval_word(ballot.word(), ballot.len()))
    }

    /// Conjunction of formulas over the same issues; `TRUE` when empty.
    pub fn all(issues: IssueSet, parts: &[Formula]) -> Result<Self, LogicError> {
        if parts.iter().any(|p| p.issues != issues) {
            return Err(LogicError::IssueSetMismatch);
        }
        Ok(Formula {
            issues,
            expr: Expr::conjunction(parts.iter().map(|p| p.expr.clone())),
        })
    }

    pub fn negated(&self) -> Formula {
        Formula {
            issues: self.issues.clone(),
            expr: Expr::not(self.expr.clone()),
        }
    }

    pub fn normalized(&self) -> Formula {
        Formula {
            issues: self.issues.clone(),
            expr: self.expr.normalized(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr.display(&self.issues))
    }
}
