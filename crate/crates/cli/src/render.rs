use std::fmt::Write;

use aggparadox::aggregation::{ParadoxWitness, Profile};
use aggparadox::encoders::Scenario;
use aggparadox::logic::Ballot;
use aggparadox::safety::SafetyVerdict;

/// Left-aligned grid: a label column, then one column per header.
fn grid(headers: &[String], rows: &[(String, Vec<u8>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(1)).collect();
    let line = |label: &str, cells: Vec<String>| {
        let mut s = format!("{label:<label_width$}");
        for (c, w) in cells.iter().zip(&widths) {
            let pad = w.saturating_sub(c.chars().count());
            let _ = write!(s, " {c}{}", " ".repeat(pad));
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line("", headers.to_vec());
    for (label, bits) in rows {
        out.push_str(&line(label, bits.iter().map(u8::to_string).collect()));
    }
    out
}

pub fn profile_table(profile: &Profile, outcome: &Ballot) -> String {
    let mut rows: Vec<(String, Vec<u8>)> = profile
        .ballots()
        .iter()
        .enumerate()
        .map(|(i, b)| (format!("voter {}", i + 1), b.bits()))
        .collect();
    rows.push(("Maj".into(), outcome.bits()));
    grid(profile.issues().names(), &rows)
}

pub fn demo(s: &Scenario, outcome: &Ballot, witness: Option<&ParadoxWitness>, verdict: &SafetyVerdict) -> String {
    let issues = s.constraint.issues();
    let mut out = format!("{}\n", s.title);
    let _ = writeln!(out, "issues: {issues}");
    let _ = writeln!(out, "constraint: {}", s.constraint);
    if let Some(legend) = s.legend {
        let _ = writeln!(out, "legend: {legend}");
    }
    out.push('\n');
    let headers: Vec<String> = s.columns.iter().map(|c| c.label.clone()).collect();
    let mut rows: Vec<(String, Vec<u8>)> = s
        .profile
        .ballots()
        .iter()
        .enumerate()
        .map(|(i, b)| (s.row_name(i), s.columns_of(b)))
        .collect();
    rows.push(("Maj".into(), s.columns_of(outcome)));
    out.push_str(&grid(&headers, &rows));
    out.push('\n');
    match witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "paradox: every ballot is rational but the majority outcome violates {}",
                w.violated().display(issues)
            );
        }
        None => out.push_str("no paradox\n"),
    }
    let _ = writeln!(
        out,
        "classification: majority-{} (largest prime implicate has {} literals)",
        if verdict.is_safe() { "safe" } else { "unsafe" },
        verdict.max_clause_size()
    );
    out
}
