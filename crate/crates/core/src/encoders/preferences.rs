use itertools::Itertools;

use crate::logic::{Expr, Formula, IssueSet};

use super::{EncodeError, Encoding};

pub const MAX_ALTERNATIVES: usize = 5;

/// Distinct alternative labels, at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeSet {
    labels: Vec<String>,
}

impl AlternativeSet {
    pub fn new<I, S>(labels: I) -> Result<Self, EncodeError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(EncodeError::TooFewAlternatives { count: labels.len() });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(EncodeError::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(EncodeError::DuplicateLabel(l.clone()));
            }
        }
        Ok(AlternativeSet { labels })
    }

    /// Alternatives `a`, `b`, `c`, ...
    pub fn lettered(count: usize) -> Result<Self, EncodeError> {
        if count > 26 {
            return Err(EncodeError::TooManyAlternatives {
                count,
                max: MAX_ALTERNATIVES,
            });
        }
        Self::new((0..count).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Issue index of the ordered pair `(a, b)`; pairs are laid out row-major.
    pub fn pair_issue(&self, a: usize, b: usize) -> usize {
        a * self.len() + b
    }

    /// `p_ab` for single-character labels, `p_a_b` otherwise.
    pub fn pair_name(&self, a: usize, b: usize) -> String {
        let (la, lb) = (&self.labels[a], &self.labels[b]);
        if self.labels.iter().all(|l| l.len() == 1) {
            format!("p_{la}{lb}")
        } else {
            format!("p_{la}_{lb}")
        }
    }

    fn pair_issues(&self) -> Result<IssueSet, EncodeError> {
        let n = self.len();
        let names = (0..n).cartesian_product(0..n).map(|(a, b)| self.pair_name(a, b));
        Ok(IssueSet::new(names)?)
    }

    fn check_size(&self) -> Result<(), EncodeError> {
        if self.len() > MAX_ALTERNATIVES {
            return Err(EncodeError::TooManyAlternatives {
                count: self.len(),
                max: MAX_ALTERNATIVES,
            });
        }
        Ok(())
    }

    fn distinct_triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.len();
        (0..n)
            .cartesian_product(0..n)
            .cartesian_product(0..n)
            .map(|((a, b), c)| (a, b, c))
            .filter(|&(a, b, c)| a != b && b != c && a != c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Irreflexive, complete, antisymmetric and transitive.
    Linear,
    /// Reflexive, complete and transitive.
    Weak,
    /// Irreflexive, antisymmetric and transitive.
    Partial,
}

/// Encodes orders over `x` as a constraint on the `|x|^2` pair issues.
///
/// Conjuncts appear in the order: (ir)reflexivity, completeness,
/// antisymmetry, transitivity, each following the alternative order.
pub fn encode_preferences(x: &AlternativeSet, kind: OrderKind) -> Result<Encoding, EncodeError> {
    x.check_size()?;
    let issues = x.pair_issues()?;
    let n = x.len();
    let p = |a: usize, b: usize| Expr::var(x.pair_issue(a, b));
    let mut conjuncts = Vec::new();

    for a in 0..n {
        conjuncts.push(match kind {
            OrderKind::Weak => p(a, a),
            OrderKind::Linear | OrderKind::Partial => Expr::not(p(a, a)),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    if kind != OrderKind::Partial {
        for &(a, b) in &pairs {
            conjuncts.push(Expr::or(p(a, b), p(b, a)));
        }
    }
    if kind != OrderKind::Weak {
        for &(a, b) in &pairs {
            conjuncts.push(Expr::or(Expr::not(p(a, b)), Expr::not(p(b, a))));
        }
    }
    for (a, b, c) in x.distinct_triples() {
        conjuncts.push(Expr::implies(Expr::and(p(a, b), p(b, c)), p(a, c)));
    }

    let descriptions = (0..n)
        .cartesian_product(0..n)
        .map(|(a, b)| format!("{} over {}", x.labels[a], x.labels[b]))
        .collect();
    Ok(Encoding {
        constraint: Formula::new(issues, Expr::conjunction(conjuncts))?,
        descriptions,
    })
}

/// `~p_ab & ~p_bc -> ~p_ac` for pairwise distinct `a, b, c`.
pub fn encode_negative_transitivity(x: &AlternativeSet) -> Result<Formula, EncodeError> {
    x.check_size()?;
    let issues = x.pair_issues()?;
    let np = |a: usize, b: usize| Expr::not(Expr::var(x.pair_issue(a, b)));
    let conjuncts = x
        .distinct_triples()
        .map(|(a, b, c)| Expr::implies(Expr::and(np(a, b), np(b, c)), np(a, c)));
    Ok(Formula::new(issues, Expr::conjunction(conjuncts))?)
}
