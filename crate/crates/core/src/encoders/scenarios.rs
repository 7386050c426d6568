use crate::aggregation::Profile;
use crate::logic::{parse, Ballot, IssueSet};

use super::agenda::{encode_agenda, parse_agenda_file};
use super::ostrogorski::{encode_ostrogorski, ostrogorski_issue_names};
use super::preferences::{encode_preferences, AlternativeSet, OrderKind};
use super::EncodeError;

pub const SCENARIO_NAMES: [&str; 6] = [
    "condorcet",
    "discursive",
    "ostrogorski",
    "ostrogorski-strict",
    "divided-government",
    "mep",
];

/// A displayed table column: a heading and the issue it shows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Column {
    pub label: String,
    pub issue: usize,
}

/// A named paradox instance with the layout of its classical table.
///
/// Voters appear in table order; `expected_majority` is the majority row
/// over `columns` as the table prints it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: &'static str,
    pub title: &'static str,
    pub constraint: crate::logic::Formula,
    pub profile: Profile,
    pub columns: Vec<Column>,
    pub row_label: &'static str,
    pub legend: Option<&'static str>,
    pub expected_majority: Vec<u8>,
}

impl Scenario {
    pub fn row_name(&self, voter: usize) -> String {
        format!("{} {}", self.row_label, voter + 1)
    }

    /// Projects a full ballot onto the displayed columns.
    pub fn columns_of(&self, ballot: &Ballot) -> Vec<u8> {
        self.columns.iter().map(|c| ballot.get(c.issue) as u8).collect()
    }
}

pub fn builtin_scenario(name: &str) -> Result<Scenario, EncodeError> {
    match name {
        "condorcet" => condorcet(),
        "discursive" => discursive(),
        "ostrogorski" => ostrogorski(
            "ostrogorski",
            "Ostrogorski paradox",
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[1, 0, 1, 1]],
            &[1, 0, 1, 0],
        ),
        "ostrogorski-strict" => ostrogorski(
            "ostrogorski-strict",
            "Strict Ostrogorski paradox",
            &[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[1, 1, 1, 1],
                &[1, 1, 1, 1],
            ],
            &[1, 1, 1, 0],
        ),
        "divided-government" => divided_government(),
        "mep" => mep(),
        other => Err(EncodeError::UnknownScenario(other.to_string())),
    }
}

fn identity_columns(issues: &IssueSet) -> Vec<Column> {
    issues
        .names()
        .iter()
        .enumerate()
        .map(|(issue, label)| Column {
            label: label.clone(),
            issue,
        })
        .collect()
}

fn condorcet() -> Result<Scenario, EncodeError> {
    // t = triangle, c = circle, s = square
    let x = AlternativeSet::new(["t", "c", "s"])?;
    let enc = encode_preferences(&x, OrderKind::Linear)?;
    let shown = [((0, 1), "△○"), ((1, 2), "○□"), ((0, 2), "△□")];
    let rows: [[bool; 3]; 3] = [[true, true, true], [true, false, false], [false, true, false]];
    let ballots = rows
        .iter()
        .map(|row| {
            let mut b = Ballot::zeros(9);
            for (&((a, c), _), &v) in shown.iter().zip(row) {
                b.set(x.pair_issue(a, c), v);
                b.set(x.pair_issue(c, a), !v);
            }
            b
        })
        .collect();
    Ok(Scenario {
        name: "condorcet",
        title: "Condorcet paradox",
        profile: Profile::new(enc.issues().clone(), ballots)?,
        columns: shown
            .iter()
            .map(|&((a, c), label)| Column {
                label: label.to_string(),
                issue: x.pair_issue(a, c),
            })
            .collect(),
        constraint: enc.constraint,
        row_label: "Voter",
        legend: Some("t = △, c = ○, s = □; p_ab = 1 means a is preferred to b"),
        expected_majority: vec![1, 1, 0],
    })
}

fn discursive() -> Result<Scenario, EncodeError> {
    let agenda = parse_agenda_file("vars: a b\na: a\nb: b\na_and_b: a & b\n").expect("fixed agenda parses");
    let enc = encode_agenda(&agenda)?;
    let ballots = [[true, true, true], [false, true, false], [true, false, false]]
        .iter()
        .map(|row| agenda.expand_judgment(row))
        .collect::<Result<_, _>>()?;
    Ok(Scenario {
        name: "discursive",
        title: "Discursive dilemma",
        profile: Profile::new(enc.issues().clone(), ballots)?,
        columns: ["α", "β", "α∧β"]
            .iter()
            .enumerate()
            .map(|(issue, label)| Column {
                label: label.to_string(),
                issue,
            })
            .collect(),
        constraint: enc.constraint,
        row_label: "Judge",
        legend: Some("negated entries are the complements of the columns shown"),
        expected_majority: vec![1, 1, 0],
    })
}

fn ostrogorski(
    name: &'static str,
    title: &'static str,
    rows: &[&[u8]],
    expected: &[u8],
) -> Result<Scenario, EncodeError> {
    let enc = encode_ostrogorski(3, &ostrogorski_issue_names(3))?;
    Ok(Scenario {
        name,
        title,
        profile: Profile::from_rows(enc.issues().clone(), rows)?,
        columns: identity_columns(enc.issues()),
        constraint: enc.constraint,
        row_label: "Voter",
        legend: Some("1 = agrees with the party / supports it"),
        expected_majority: expected.to_vec(),
    })
}

fn divided_government() -> Result<Scenario, EncodeError> {
    let issues = IssueSet::new(["H", "S", "G"])?;
    let groups: [(&[u8], usize); 7] = [
        (&[0, 0, 0], 3),
        (&[0, 0, 1], 1),
        (&[0, 1, 0], 1),
        (&[0, 1, 1], 1),
        (&[1, 0, 1], 3),
        (&[1, 1, 0], 3),
        (&[1, 1, 1], 1),
    ];
    let rows: Vec<&[u8]> = groups
        .iter()
        .flat_map(|&(row, count)| std::iter::repeat_n(row, count))
        .collect();
    Ok(Scenario {
        name: "divided-government",
        title: "Paradox of divided government",
        constraint: parse("~(H & ~S & ~G)", &issues)?,
        profile: Profile::from_rows(issues.clone(), &rows)?,
        columns: identity_columns(&issues),
        row_label: "Voter",
        legend: Some("1 = R, 0 = D"),
        expected_majority: vec![1, 0, 0],
    })
}

fn mep() -> Result<Scenario, EncodeError> {
    let issues = IssueSet::new(["A", "B", "C"])?;
    Ok(Scenario {
        name: "mep",
        title: "Multiple election paradox",
        constraint: parse("~(A & B & C)", &issues)?,
        profile: Profile::from_rows(issues.clone(), &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]])?,
        columns: identity_columns(&issues),
        row_label: "Voter",
        legend: None,
        expected_majority: vec![1, 1, 1],
    })
}
