mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aggparadox::aggregation::{
    brute_force_cr, check_paradox, majority, parse_profile_file, AggregationError, CrVerdict, Majority, DEFAULT_BUDGET,
};
use aggparadox::encoders::{
    builtin_scenario, encode_agenda, encode_ostrogorski, encode_preferences, mi_sets, ostrogorski_issue_names,
    parse_agenda_file, AlternativeSet, EncodeError, Encoding, OrderKind, SCENARIO_NAMES,
};
use aggparadox::logic::{parse_formula_file, Formula, FormulaFile};
use aggparadox::safety::{classify, construct_paradox, explain, Report, SafetyError, SafetyVerdict};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_UNSAFE: u8 = 10;
const EXIT_SAFE_NO_WITNESS: u8 = 11;
const EXIT_IRRATIONAL: u8 = 12;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Detect, construct and classify majority-rule paradoxes in binary
/// aggregation with integrity constraints.
#[derive(Debug, Parser)]
#[command(name = "aggparadox", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of profiles enumerated by `bruteforce`.
    #[arg(long, global = true, env = "AGG_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Number of voters for constructed or enumerated profiles (odd).
    #[arg(long, global = true, default_value_t = 3)]
    voters: usize,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a constraint as majority-safe or majority-unsafe.
    Check { formula: PathBuf },
    /// Build a paradoxical profile for an unsafe constraint.
    Paradox { formula: PathBuf },
    /// Check whether a profile yields a paradox under majority.
    Verify { formula: PathBuf, profile: PathBuf },
    /// Reproduce a classical paradox.
    Demo {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SCENARIO_NAMES))]
        name: String,
    },
    /// Write the constraint for a preference, agenda or party-contest encoding.
    #[command(subcommand)]
    Encode(EncodeCommand),
    /// Exhaustively check collective rationality at the given voter count.
    Bruteforce { formula: PathBuf },
    /// List the minimally inconsistent subsets of an agenda.
    MiSets { agenda: PathBuf },
}

#[derive(Debug, Subcommand)]
enum EncodeCommand {
    /// Orders over a set of alternatives.
    Pref(PrefArgs),
    /// Judgment sets over an agenda file.
    Agenda {
        #[arg(long)]
        file: PathBuf,
    },
    /// Party support decided by a majority of policy issues.
    Ostrogorski {
        /// Number of policy issues (odd, at least 3).
        #[arg(long)]
        issues: usize,
        /// Policy issue names, comma separated.
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
struct PrefArgs {
    /// Number of alternatives, labelled a, b, c, ...
    #[arg(long, conflicts_with = "labels", required_unless_present = "labels")]
    alternatives: Option<usize>,
    /// Alternative labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    labels: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Kind::Linear)]
    kind: Kind,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Linear,
    Weak,
    Partial,
}

/// A nonzero exit with a message for standard error.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<AggregationError> for Failure {
    fn from(e: AggregationError) -> Self {
        let code = match e {
            AggregationError::BudgetExceeded { .. } => EXIT_BUDGET,
            AggregationError::IrrationalIndividuals { .. } => EXIT_IRRATIONAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SafetyError> for Failure {
    fn from(e: SafetyError) -> Self {
        match e {
            SafetyError::Aggregation(a) => a.into(),
            SafetyError::SafeConstraint => Failure {
                code: EXIT_SAFE_NO_WITNESS,
                message: e.to_string(),
            },
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<EncodeError> for Failure {
    fn from(e: EncodeError) -> Self {
        match e {
            EncodeError::Aggregation(a) => a.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

/// Report text plus the exit code it implies.
struct Outcome {
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| {
        write_output(cli.output.as_deref(), &out.text)?;
        Ok(out.code)
    }) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::usage(format!("writing output: {e}")))
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_constraint(path: &Path) -> Result<Formula, Failure> {
    let file = parse_formula_file(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(file.constraint())
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Check { formula } => cmd_check(cli, &load_constraint(formula)?),
        Command::Paradox { formula } => cmd_paradox(cli, &load_constraint(formula)?),
        Command::Verify { formula, profile } => cmd_verify(cli, &load_constraint(formula)?, profile),
        Command::Demo { name } => cmd_demo(cli, name),
        Command::Encode(e) => cmd_encode(cli, e),
        Command::Bruteforce { formula } => cmd_bruteforce(cli, &load_constraint(formula)?),
        Command::MiSets { agenda } => cmd_mi_sets(cli, agenda),
    }
}

fn classify_or_fail(ic: &Formula) -> Result<SafetyVerdict, Failure> {
    classify(ic).map_err(Failure::from)
}

fn cmd_check(cli: &Cli, ic: &Formula) -> Result<Outcome, Failure> {
    let verdict = classify_or_fail(ic)?;
    let code = if verdict.is_safe() { 0 } else { EXIT_UNSAFE };
    let text = if cli.json {
        let witness = if verdict.is_safe() || verdict.is_unsatisfiable() {
            None
        } else {
            Some(construct_paradox(ic, cli.voters)?)
        };
        Report::new(&verdict, witness.as_ref()).to_json()
    } else {
        explain(&verdict)
    };
    Ok(Outcome { text, code })
}

fn cmd_paradox(cli: &Cli, ic: &Formula) -> Result<Outcome, Failure> {
    let verdict = classify_or_fail(ic)?;
    if verdict.is_safe() {
        if cli.voters.is_multiple_of(2) {
            return Err(SafetyError::EvenVoters { voters: cli.voters }.into());
        }
        let text = if cli.json {
            Report::new(&verdict, None).to_json()
        } else {
            format!("constraint: {ic}\nconstraint is majority-safe: no paradox exists for any odd number of voters\n")
        };
        return Ok(Outcome {
            text,
            code: EXIT_SAFE_NO_WITNESS,
        });
    }
    let witness = construct_paradox(ic, cli.voters)?;
    let text = if cli.json {
        Report::new(&verdict, Some(&witness)).to_json()
    } else {
        let issues = ic.issues();
        let mut out = format!("constraint: {ic}\n");
        if let Some(rho) = verdict.mifap() {
            out.push_str(&format!("minimally falsifying assignment: {}\n", rho.display(issues)));
        }
        out.push_str(&format!("profile ({} voters):\n", witness.profile().voters()));
        out.push_str(&render::profile_table(witness.profile(), &witness.outcome()));
        out.push_str(&format!(
            "violated prime implicate: {}\n",
            witness.violated().display(issues)
        ));
        out
    };
    Ok(Outcome {
        text,
        code: EXIT_UNSAFE,
    })
}

fn cmd_verify(cli: &Cli, ic: &Formula, profile_path: &Path) -> Result<Outcome, Failure> {
    let profile = parse_profile_file(&read(profile_path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", profile_path.display())))?;
    if profile.issues() != ic.issues() {
        return Err(Failure::usage(format!(
            "profile issues ({}) differ from constraint issues ({})",
            profile.issues(),
            ic.issues()
        )));
    }
    let witness = check_paradox(&Majority, &profile, ic)?;
    let outcome = majority(&profile)?;
    let verdict = classify_or_fail(ic)?;
    let code = if witness.is_some() { EXIT_UNSAFE } else { 0 };
    let text = if cli.json {
        Report::new(&verdict, witness.as_ref())
            .with("outcome", outcome.bits())
            .with("paradox", witness.is_some())
            .to_json()
    } else {
        let mut out = format!("constraint: {ic}\nprofile ({} voters):\n", profile.voters());
        out.push_str(&render::profile_table(&profile, &outcome));
        match &witness {
            Some(w) => out.push_str(&format!(
                "paradox: the majority outcome violates {}\n",
                w.violated().display(ic.issues())
            )),
            None => out.push_str("no paradox: the majority outcome satisfies the constraint\n"),
        }
        out
    };
    Ok(Outcome { text, code })
}

fn cmd_demo(cli: &Cli, name: &str) -> Result<Outcome, Failure> {
    let s = builtin_scenario(name)?;
    let outcome = majority(&s.profile)?;
    let witness = check_paradox(&Majority, &s.profile, &s.constraint)?;
    let verdict = classify_or_fail(&s.constraint)?;
    let code = if witness.is_some() { EXIT_UNSAFE } else { 0 };
    let text = if cli.json {
        let labels: Vec<&str> = s.columns.iter().map(|c| c.label.as_str()).collect();
        Report::new(&verdict, witness.as_ref())
            .with("scenario", s.name)
            .with("title", s.title)
            .with("issues", s.constraint.issues().names().to_vec())
            .with("columns", labels)
            .with("majority", s.columns_of(&outcome))
            .with("paradox", witness.is_some())
            .to_json()
    } else {
        render::demo(&s, &outcome, witness.as_ref(), &verdict)
    };
    Ok(Outcome { text, code })
}

fn cmd_encode(cli: &Cli, cmd: &EncodeCommand) -> Result<Outcome, Failure> {
    let enc: Encoding = match cmd {
        EncodeCommand::Pref(args) => {
            let x = match (&args.labels, args.alternatives) {
                (Some(labels), _) => AlternativeSet::new(labels.iter().cloned())?,
                (None, Some(n)) => AlternativeSet::lettered(n)?,
                (None, None) => return Err(Failure::usage("give --alternatives or --labels")),
            };
            let kind = match args.kind {
                Kind::Linear => OrderKind::Linear,
                Kind::Weak => OrderKind::Weak,
                Kind::Partial => OrderKind::Partial,
            };
            encode_preferences(&x, kind)?
        }
        EncodeCommand::Agenda { file } => {
            let agenda =
                parse_agenda_file(&read(file)?).map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
            encode_agenda(&agenda)?
        }
        EncodeCommand::Ostrogorski { issues, names } => {
            let names = names.clone().unwrap_or_else(|| ostrogorski_issue_names(*issues));
            encode_ostrogorski(*issues, &names)?
        }
    };
    let file = FormulaFile::from_formula(&enc.constraint);
    let text = if cli.json {
        let issues: Vec<_> = enc
            .issues()
            .names()
            .iter()
            .zip(&enc.descriptions)
            .map(|(n, d)| json!({ "name": n, "meaning": d }))
            .collect();
        let formulas: Vec<String> = file.formulas.iter().map(ToString::to_string).collect();
        pretty(&json!({ "issues": issues, "formulas": formulas }))
    } else {
        let width = enc.issues().names().iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (n, d) in enc.issues().names().iter().zip(&enc.descriptions) {
            out.push_str(&format!("# {n:<width$}  {d}\n"));
        }
        out.push_str(&file.render());
        out
    };
    Ok(Outcome { text, code: 0 })
}

fn cmd_bruteforce(cli: &Cli, ic: &Formula) -> Result<Outcome, Failure> {
    let result = brute_force_cr(&Majority, ic, cli.voters, cli.budget)?;
    let verdict = classify_or_fail(ic)?;
    let code = if result.is_safe() { 0 } else { EXIT_UNSAFE };
    let profiles = match &result {
        CrVerdict::Safe { profiles, .. } => Some(*profiles as u64),
        CrVerdict::Paradox(_) => None,
    };
    let text = if cli.json {
        Report::new(&verdict, result.witness())
            .with("voters_checked", cli.voters)
            .with("certified_safe", result.is_safe())
            .with("profiles", profiles)
            .to_json()
    } else {
        let mut out = format!("constraint: {ic}\n");
        match &result {
            CrVerdict::Safe { voters, profiles } => out.push_str(&format!(
                "certified safe at n = {voters} ({profiles} profiles enumerated)\n"
            )),
            CrVerdict::Paradox(w) => {
                out.push_str(&format!("paradox found at n = {}:\n", cli.voters));
                out.push_str(&render::profile_table(w.profile(), &w.outcome()));
                out.push_str(&format!(
                    "violated prime implicate: {}\n",
                    w.violated().display(ic.issues())
                ));
            }
        }
        let agrees = verdict.is_safe() == result.is_safe();
        out.push_str(&format!(
            "classification: majority-{} ({})\n",
            if verdict.is_safe() { "safe" } else { "unsafe" },
            if agrees { "agrees" } else { "DISAGREES" }
        ));
        out
    };
    Ok(Outcome { text, code })
}

fn cmd_mi_sets(cli: &Cli, path: &Path) -> Result<Outcome, Failure> {
    let agenda = parse_agenda_file(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let sets = mi_sets(&agenda)?;
    let name = |i: usize| agenda.entries()[i].name.clone();
    let text = if cli.json {
        let entries: Vec<_> = (0..agenda.len())
            .map(|i| {
                json!({
                    "name": name(i),
                    "formula": agenda.entry_formula(i).to_string(),
                    "generated": agenda.entries()[i].generated,
                })
            })
            .collect();
        let sets: Vec<Vec<String>> = sets.iter().map(|s| s.iter().map(|&i| name(i)).collect()).collect();
        pretty(&json!({ "entries": entries, "mi_sets": sets }))
    } else {
        let width = agenda.entries().iter().map(|e| e.name.len()).max().unwrap_or(0);
        let mut out = String::from("entries:\n");
        for i in 0..agenda.len() {
            out.push_str(&format!("  {:<width$}  {}\n", name(i), agenda.entry_formula(i)));
        }
        out.push_str(&format!("mi-sets ({}):\n", sets.len()));
        for s in &sets {
            let names: Vec<String> = s.iter().map(|&i| name(i)).collect();
            out.push_str(&format!("  {{{}}}\n", names.join(", ")));
        }
        out
    };
    Ok(Outcome { text, code: 0 })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}
