use std::fmt::Write;

use super::{construct_paradox, flip_construction, SafetyVerdict};

/// Human-readable justification of a verdict.
pub fn explain(verdict: &SafetyVerdict) -> String {
    let ic = verdict.constraint();
    let issues = ic.issues();
    let mut out = String::new();
    let _ = writeln!(out, "constraint: {ic}");

    if verdict.is_tautology() {
        out.push_str("verdict: majority-safe\n");
        out.push_str("no constraint: all outcomes rational\n");
        return out;
    }
    if verdict.is_unsatisfiable() {
        out.push_str("verdict: majority-safe\n");
        out.push_str(
            "the constraint is unsatisfiable: no profile of rational ballots exists, \
             so majority is collectively rational vacuously\n",
        );
        return out;
    }

    if verdict.is_safe() {
        let _ = writeln!(
            out,
            "verdict: majority-safe (largest prime implicate has {} literal{})",
            verdict.max_clause_size(),
            if verdict.max_clause_size() == 1 { "" } else { "s" }
        );
        out.push_str("prime implicates:\n");
        for c in verdict.prime_implicates() {
            let _ = writeln!(out, "  {}", c.display(issues));
        }
        out.push_str(
            "the constraint is the conjunction of these clauses. A unit clause holds in \
             every rational ballot, hence in the majority outcome. For a clause l1 | l2, \
             an outcome falsifying it needs a strict majority rejecting l1 and a strict \
             majority rejecting l2; by the pigeonhole principle the two majorities share \
             a voter whose ballot falsifies the clause, which no rational voter does.\n",
        );
        return out;
    }

    let rho = verdict.mifap().expect("unsafe verdict carries a mifap");
    let _ = writeln!(
        out,
        "verdict: majority-unsafe (largest prime implicate has {} literals)",
        verdict.max_clause_size()
    );
    let _ = writeln!(out, "minimally falsifying assignment: {}", rho.display(issues));
    let _ = writeln!(
        out,
        "violated prime implicate: {}",
        rho.negation_clause().display(issues)
    );
    match (flip_construction(ic, rho), construct_paradox(ic, 3)) {
        (Ok(fc), Ok(witness)) => {
            let names: Vec<&str> = fc.flipped.iter().map(|&i| issues.name(i)).collect();
            let _ = writeln!(
                out,
                "construction: voter t flips the assignment on {} and extends to a rational ballot",
                names.join(", ")
            );
            let _ = writeln!(out, "{:<8} {}", "", issues.names().join(" "));
            for (t, b) in witness.profile().ballots().iter().enumerate() {
                let _ = writeln!(out, "{:<8} {}", format!("voter {}", t + 1), row(&b.bits()));
            }
            let _ = writeln!(out, "{:<8} {}", "Maj", row(&witness.outcome().bits()));
            out.push_str(
                "each bound issue keeps its assigned value in two of three ballots, so the \
                 majority outcome extends the falsifying assignment and is irrational\n",
            );
        }
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(out, "construction failed: {e}");
        }
    }
    out
}

fn row(bits: &[u8]) -> String {
    bits.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}
