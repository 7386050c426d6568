use crate::logic::parser::{header_issues, read_header, strip_comment};
use crate::logic::{is_identifier, parse, Ballot, Expr, Formula, IssueSet, Limits, ParseError};

use super::{EncodeError, Encoding};

/// Largest agenda accepted by [`mi_sets`] (counting complements).
pub const MAX_AGENDA_ENTRIES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgendaEntry {
    pub name: String,
    pub formula: Expr,
    /// Index of the complementary entry.
    pub complement: usize,
    /// Added by complement closure rather than supplied by the user.
    pub generated: bool,
}

/// A complementation-closed list of named formulas over `base` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agenda {
    base: IssueSet,
    entries: Vec<AgendaEntry>,
}

fn complement_of(e: &Expr) -> Expr {
    match e {
        Expr::Not(inner) => (**inner).clone(),
        other => Expr::not(other.clone()),
    }
}

impl Agenda {
    /// Builds an agenda from user entries, appending `not_<name>` for every
    /// entry whose complement is missing.
    pub fn new(base: IssueSet, entries: Vec<(String, Formula)>) -> Result<Self, EncodeError> {
        if entries.is_empty() {
            return Err(EncodeError::EmptyAgenda);
        }
        let mut out: Vec<AgendaEntry> = Vec::new();
        for (name, formula) in entries {
            if formula.issues() != &base {
                return Err(EncodeError::Logic(crate::logic::LogicError::IssueSetMismatch));
            }
            if !is_identifier(&name) {
                return Err(EncodeError::InvalidEntryName(name));
            }
            let expr = formula.into_expr();
            if matches!(&expr, Expr::Not(inner) if matches!(**inner, Expr::Not(_))) {
                return Err(EncodeError::DoubleNegation(name));
            }
            if out.iter().any(|e| e.name == name || e.formula == expr) {
                return Err(EncodeError::DuplicateEntry(name));
            }
            out.push(AgendaEntry {
                name,
                formula: expr,
                complement: usize::MAX,
                generated: false,
            });
        }
        let supplied = out.len();
        for i in 0..supplied {
            let comp = complement_of(&out[i].formula);
            match out.iter().position(|e| e.formula == comp) {
                Some(j) => out[i].complement = j,
                None => {
                    let j = out.len();
                    let name = format!("not_{}", out[i].name);
                    if out.iter().any(|e| e.name == name) {
                        return Err(EncodeError::DuplicateEntry(name));
                    }
                    out.push(AgendaEntry {
                        name,
                        formula: comp,
                        complement: i,
                        generated: true,
                    });
                    out[i].complement = j;
                }
            }
        }
        Ok(Agenda { base, entries: out })
    }

    pub fn base(&self) -> &IssueSet {
        &self.base
    }

    pub fn entries(&self) -> &[AgendaEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Each complementary pair once, lower index first.
    pub fn complement_pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(i, e)| *i < e.complement)
            .map(|(i, e)| (i, e.complement))
            .collect()
    }

    pub fn issues(&self) -> Result<IssueSet, EncodeError> {
        Ok(IssueSet::new(self.entries.iter().map(|e| e.name.clone()))?)
    }

    pub fn entry_formula(&self, index: usize) -> Formula {
        Formula::new(self.base.clone(), self.entries[index].formula.clone())
            .expect("entries are validated against base")
    }

    /// Expands a judgment given only for supplied entries (in order) into a
    /// full ballot; generated complements get the opposite value.
    pub fn expand_judgment(&self, supplied: &[bool]) -> Result<Ballot, EncodeError> {
        let explicit: Vec<usize> = (0..self.len()).filter(|&i| !self.entries[i].generated).collect();
        if supplied.len() != explicit.len() {
            return Err(EncodeError::JudgmentLength {
                expected: explicit.len(),
                found: supplied.len(),
            });
        }
        let mut bits = vec![false; self.len()];
        for (&i, &v) in explicit.iter().zip(supplied) {
            bits[i] = v;
        }
        for (i, e) in self.entries.iter().enumerate() {
            if e.generated {
                bits[i] = !bits[e.complement];
            }
        }
        Ok(Ballot::new(&bits)?)
    }
}

/// All minimally inconsistent subsets of the agenda, as sorted entry
/// indices, ordered by size and then lexicographically.
///
/// Subsets are enumerated by increasing size; supersets of an mi-set found
/// earlier are skipped, so every remaining inconsistent subset is minimal.
pub fn mi_sets(agenda: &Agenda) -> Result<Vec<Vec<usize>>, EncodeError> {
    let n = agenda.len();
    if n > MAX_AGENDA_ENTRIES {
        return Err(EncodeError::AgendaTooLarge {
            entries: n,
            max: MAX_AGENDA_ENTRIES,
        });
    }
    let limits = Limits::default();
    let tables: Vec<Vec<u64>> = (0..n)
        .map(|i| Ok(limits.truth_table(&agenda.entry_formula(i))?.blocks().to_vec()))
        .collect::<Result<_, EncodeError>>()?;
    let consistent = |mask: u32| -> bool {
        let blocks = tables[0].len();
        (0..blocks).any(|k| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(u64::MAX, |acc, i| acc & tables[i][k])
                != 0
        })
    };

    let mut found: Vec<u32> = Vec::new();
    let mut out = Vec::new();
    for size in 1..=n {
        let mut subsets: Vec<u32> = (0u32..(1u32 << n))
            .filter(|s| s.count_ones() as usize == size)
            .collect();
        subsets.sort_by_key(|&s| indices(s));
        for s in subsets {
            if found.iter().any(|&f| f & !s == 0) {
                continue;
            }
            if !consistent(s) {
                found.push(s);
                out.push(indices(s));
            }
        }
    }
    Ok(out)
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Completeness `p_a | p_not_a` for each complementary pair, then
/// consistency `~(p_1 & .. & p_k)` for each mi-set.
pub fn encode_agenda(agenda: &Agenda) -> Result<Encoding, EncodeError> {
    let issues = agenda.issues()?;
    let mut conjuncts: Vec<Expr> = agenda
        .complement_pairs()
        .into_iter()
        .map(|(a, b)| Expr::or(Expr::var(a), Expr::var(b)))
        .collect();
    for set in mi_sets(agenda)? {
        conjuncts.push(Expr::not(Expr::conjunction(set.into_iter().map(Expr::var))));
    }
    let descriptions = (0..agenda.len()).map(|i| agenda.entry_formula(i).to_string()).collect();
    Ok(Encoding {
        constraint: Formula::new(issues, Expr::conjunction(conjuncts))?,
        descriptions,
    })
}

/// Reads a `vars:` header followed by `name: formula` lines.
pub fn parse_agenda_file(text: &str) -> Result<Agenda, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, names) = read_header(&mut lines, "vars")?;
    let base = header_issues(header_line, names)?;
    let mut entries = Vec::new();
    let mut last_line = header_line;
    for (number, raw) in lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        last_line = number;
        let (name, body) = line.split_once(':').ok_or(ParseError::Format {
            line: number,
            message: "expected `name: formula`".into(),
        })?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(ParseError::Format {
                line: number,
                message: format!("invalid entry name `{name}`"),
            });
        }
        let formula = parse(body, &base).map_err(|e| relocate(e, number))?;
        entries.push((name.to_string(), formula));
    }
    Agenda::new(base, entries).map_err(|e| ParseError::Format {
        line: last_line,
        message: e.to_string(),
    })
}

fn relocate(err: ParseError, line: usize) -> ParseError {
    match err {
        ParseError::Syntax { message, .. } => ParseError::Syntax {
            line,
            column: 0,
            message,
        },
        ParseError::UnknownIdentifier { name, .. } => ParseError::UnknownIdentifier { name, line, column: 0 },
        ParseError::Invalid { source, .. } => ParseError::Invalid { line, source },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn dilemma() -> Agenda {
        parse_agenda_file("vars: a b\na: a\nb: b\na_and_b: a & b\n").unwrap()
    }

    fn named(agenda: &Agenda, sets: Vec<Vec<usize>>) -> BTreeSet<BTreeSet<String>> {
        sets.into_iter()
            .map(|s| s.into_iter().map(|i| agenda.entries()[i].name.clone()).collect())
            .collect()
    }

    #[test]
    fn closure_adds_complements() {
        let a = dilemma();
        let names: Vec<&str> = a.entries().iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["a", "b", "a_and_b", "not_a", "not_b", "not_a_and_b"]);
        assert_eq!(a.complement_pairs(), vec![(0, 3), (1, 4), (2, 5)]);
        assert_eq!(a.entry_formula(5).to_string(), "~(a & b)");
    }

    #[test]
    fn negated_entry_complement_is_unwrapped() {
        let a = parse_agenda_file("vars: a\nna: ~a\n").unwrap();
        assert_eq!(a.entries()[1].formula, Expr::var(0));
        assert_eq!(a.entries()[1].name, "not_na");
    }

    #[test]
    fn explicit_complements_are_reused() {
        let a = parse_agenda_file("vars: a\npos: a\nneg: ~a\n").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.complement_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn dilemma_mi_sets() {
        let a = dilemma();
        let got = named(&a, mi_sets(&a).unwrap());
        let expected: BTreeSet<BTreeSet<String>> = [
            vec!["a", "not_a"],
            vec!["b", "not_b"],
            vec!["a_and_b", "not_a_and_b"],
            vec!["a", "b", "not_a_and_b"],
            vec!["not_a", "a_and_b"],
            vec!["not_b", "a_and_b"],
        ]
        .into_iter()
        .map(|s| s.into_iter().map(String::from).collect())
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn atomic_pair() {
        let a = parse_agenda_file("vars: a\nx: a\n").unwrap();
        assert_eq!(mi_sets(&a).unwrap(), vec![vec![0, 1]]);
        let enc = encode_agenda(&a).unwrap();
        assert_eq!(enc.constraint.to_string(), "(x | not_x) & ~(x & not_x)");
    }

    #[test]
    fn dilemma_encoding() {
        let enc = encode_agenda(&dilemma()).unwrap();
        assert_eq!(enc.issues().len(), 6);
        let conjuncts = enc.constraint.expr().conjuncts();
        assert_eq!(conjuncts.len(), 9);
        let text = enc.constraint.to_string();
        assert!(text.contains("(a | not_a)"));
        assert!(text.contains("~(a & b & not_a_and_b)"));
    }

    #[test]
    fn judgment_expansion() {
        let a = dilemma();
        let b = a.expand_judgment(&[true, false, false]).unwrap();
        assert_eq!(b.bits(), vec![1, 0, 0, 0, 1, 1]);
        assert!(matches!(
            a.expand_judgment(&[true]),
            Err(EncodeError::JudgmentLength { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn agenda_errors() {
        assert!(matches!(
            parse_agenda_file("vars: a\nx: ~~a\n"),
            Err(ParseError::Format { .. })
        ));
        assert!(matches!(
            parse_agenda_file("vars: a\nx: a\ny: a\n"),
            Err(ParseError::Format { .. })
        ));
        assert!(matches!(
            parse_agenda_file("vars: a\nx a\n"),
            Err(ParseError::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_agenda_file("vars: a\nx: b\n"),
            Err(ParseError::UnknownIdentifier { line: 2, .. })
        ));
        assert!(matches!(parse_agenda_file("vars: a\n"), Err(ParseError::Format { .. })));
    }

    #[test]
    fn too_large() {
        let vars: Vec<String> = (0..9).map(|i| format!("v{i}")).collect();
        let mut text = format!("vars: {}\n", vars.join(" "));
        for v in &vars {
            text.push_str(&format!("e_{v}: {v}\n"));
        }
        let a = parse_agenda_file(&text).unwrap();
        assert_eq!(a.len(), 18);
        assert!(matches!(
            mi_sets(&a),
            Err(EncodeError::AgendaTooLarge { entries: 18, max: 16 })
        ));
    }
}
