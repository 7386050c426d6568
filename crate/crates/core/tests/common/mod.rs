//! Independent reference implementations used as test oracles. Nothing here
//! calls the library's semantic routines; only its data types are shared.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use aggparadox::encoders::Agenda;
use aggparadox::logic::{parse_formula_file, Ballot, Clause, Expr, Formula, IssueSet, Literal};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn eval(e: &Expr, bits: &[bool]) -> bool {
    match e {
        Expr::True => true,
        Expr::False => false,
        Expr::Var(i) => bits[*i],
        Expr::Not(a) => !eval(a, bits),
        Expr::And(a, b) => eval(a, bits) && eval(b, bits),
        Expr::Or(a, b) => eval(a, bits) || eval(b, bits),
        Expr::Implies(a, b) => !eval(a, bits) || eval(b, bits),
        Expr::Iff(a, b) => eval(a, bits) == eval(b, bits),
    }
}

/// All assignments over `m` issues, issue 0 varying slowest.
pub fn assignments(m: usize) -> Vec<Vec<bool>> {
    (0..1u32 << m)
        .map(|w| (0..m).map(|i| w >> (m - 1 - i) & 1 == 1).collect())
        .collect()
}

pub fn naive_models(f: &Formula) -> Vec<Vec<bool>> {
    assignments(f.num_issues())
        .into_iter()
        .filter(|a| eval(f.expr(), a))
        .collect()
}

pub fn to_ballot(bits: &[bool]) -> Ballot {
    Ballot::new(bits).unwrap()
}

pub fn bools(b: &Ballot) -> Vec<bool> {
    (0..b.len()).map(|i| b.get(i)).collect()
}

fn clause_holds(lits: &[(usize, bool)], a: &[bool]) -> bool {
    lits.iter().any(|&(i, pos)| a[i] == pos)
}

/// Prime implicates by enumerating candidate clauses in increasing size,
/// keeping entailed ones not subsumed by a smaller kept clause.
pub fn naive_prime_implicates(f: &Formula) -> BTreeSet<Clause> {
    let m = f.num_issues();
    let ms = naive_models(f);
    let mut kept: Vec<Vec<(usize, bool)>> = Vec::new();
    for size in 0..=m {
        for issues in combinations(m, size) {
            for signs in 0..1u32 << size {
                let lits: Vec<(usize, bool)> = issues
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| (i, signs >> k & 1 == 1))
                    .collect();
                if kept.iter().any(|k| k.iter().all(|l| lits.contains(l))) {
                    continue;
                }
                if ms.iter().all(|a| clause_holds(&lits, a)) {
                    kept.push(lits);
                }
            }
        }
    }
    kept.into_iter()
        .map(|lits| {
            Clause::new(
                lits.into_iter()
                    .map(|(i, pos)| if pos { Literal::pos(i) } else { Literal::neg(i) }),
            )
            .unwrap()
        })
        .collect()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

pub fn naive_majority(ballots: &[Vec<bool>]) -> Vec<bool> {
    let n = ballots.len();
    (0..ballots[0].len())
        .map(|j| 2 * ballots.iter().filter(|b| b[j]).count() > n)
        .collect()
}

/// Whether some ordered profile of `n` models has an irrational majority.
pub fn naive_has_paradox(f: &Formula, n: usize) -> bool {
    let ms = naive_models(f);
    if ms.is_empty() {
        return false;
    }
    let k = ms.len();
    let mut digits = vec![0usize; n];
    loop {
        let profile: Vec<Vec<bool>> = digits.iter().map(|&d| ms[d].clone()).collect();
        if !eval(f.expr(), &naive_majority(&profile)) {
            return true;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// The formula whose models are the words set in `table` (bit w = word w).
pub fn from_truth_table(m: usize, table: u64) -> Formula {
    let terms = assignments(m)
        .into_iter()
        .enumerate()
        .filter(|(w, _)| table >> w & 1 == 1)
        .map(|(_, a)| Expr::conjunction(a.iter().enumerate().map(|(i, &v)| Expr::literal(i, v))));
    Formula::new(IssueSet::numbered(m).unwrap(), Expr::disjunction(terms)).unwrap()
}

pub fn random_expr<R: Rng>(rng: &mut R, m: usize, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..20) {
            0 => Expr::True,
            1 => Expr::False,
            _ => Expr::var(rng.gen_range(0..m)),
        };
    }
    let a = random_expr(rng, m, depth - 1);
    match rng.gen_range(0..5) {
        0 => Expr::not(a),
        1 => Expr::and(a, random_expr(rng, m, depth - 1)),
        2 => Expr::or(a, random_expr(rng, m, depth - 1)),
        3 => Expr::implies(a, random_expr(rng, m, depth - 1)),
        _ => Expr::iff(a, random_expr(rng, m, depth - 1)),
    }
}

pub fn random_formula<R: Rng>(rng: &mut R, m: usize) -> Formula {
    Formula::new(IssueSet::numbered(m).unwrap(), random_expr(rng, m, 5)).unwrap()
}

/// A satisfiable CNF whose clauses have one or two literals.
pub fn random_2cnf<R: Rng>(rng: &mut R, m: usize) -> Formula {
    loop {
        let clauses = (0..rng.gen_range(1..=2 * m)).map(|_| {
            let a = rng.gen_range(0..m);
            let first = Expr::literal(a, rng.gen());
            if rng.gen_bool(0.2) {
                first
            } else {
                let b = rng.gen_range(0..m);
                Expr::or(first, Expr::literal(b, rng.gen()))
            }
        });
        let f = Formula::new(IssueSet::numbered(m).unwrap(), Expr::conjunction(clauses)).unwrap();
        if !naive_models(&f).is_empty() {
            return f;
        }
    }
}

pub fn random_profile<R: Rng>(rng: &mut R, models: &[Vec<bool>], n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|_| models.choose(rng).unwrap().clone()).collect()
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/corpus")
}

/// Each corpus file with its constraint and the `# expect:` annotation.
pub fn corpus() -> Vec<(String, Formula, bool)> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "formula"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let safe = text.contains("# expect: safe");
            let f = parse_formula_file(&text).unwrap().constraint();
            (p.file_name().unwrap().to_string_lossy().into_owned(), f, safe)
        })
        .collect()
}

/// Naive consistency of formulas over `m` base variables.
pub fn jointly_satisfiable(m: usize, exprs: &[&Expr]) -> bool {
    assignments(m).iter().any(|a| exprs.iter().all(|e| eval(e, a)))
}

/// Relation `r[a][b]` read from a ballot over row-major pair issues.
pub fn relation(bits: &[bool], n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| bits[a * n + b]).collect()).collect()
}

pub fn reflexive(r: &[Vec<bool>]) -> bool {
    (0..r.len()).all(|a| r[a][a])
}

pub fn irreflexive(r: &[Vec<bool>]) -> bool {
    (0..r.len()).all(|a| !r[a][a])
}

pub fn complete(r: &[Vec<bool>]) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| a == b || r[a][b] || r[b][a]))
}

pub fn antisymmetric(r: &[Vec<bool>]) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| a == b || !(r[a][b] && r[b][a])))
}

pub fn transitive(r: &[Vec<bool>]) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(r[a][b] && r[b][c]) || r[a][c])))
}

pub fn all_relations(n: usize) -> Vec<Vec<bool>> {
    assignments(n * n)
}

pub fn naive_mi_sets(agenda: &Agenda) -> BTreeSet<Vec<usize>> {
    let m = agenda.base().len();
    let exprs: Vec<_> = agenda.entries().iter().map(|e| &e.formula).collect();
    let consistent = |set: &[usize]| jointly_satisfiable(m, &set.iter().map(|&i| exprs[i]).collect::<Vec<_>>());
    let n = exprs.len();
    (0..1u32 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| {
            !consistent(s)
                && (0..1u32 << s.len())
                    .filter(|&sub| sub.count_ones() < s.len() as u32)
                    .all(|sub| {
                        let part: Vec<usize> = (0..s.len()).filter(|k| sub >> k & 1 == 1).map(|k| s[k]).collect();
                        consistent(&part)
                    })
        })
        .collect()
}

/// A random agenda of at most 6 entries (after closure) over at most 4 variables.
pub fn random_agenda(rng: &mut ChaCha8Rng) -> Agenda {
    loop {
        let m = rng.gen_range(1..=4);
        let base = IssueSet::numbered(m).unwrap();
        let k = rng.gen_range(1..=3);
        let entries = (0..k)
            .map(|i| {
                (
                    format!("e{i}"),
                    Formula::new(base.clone(), random_expr(rng, m, 3)).unwrap(),
                )
            })
            .collect();
        if let Ok(a) = Agenda::new(base, entries) {
            if a.len() <= 6 {
                return a;
            }
        }
    }
}
