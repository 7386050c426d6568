use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::aggregation::ParadoxWitness;

use super::SafetyVerdict;

/// Machine-readable verdict. The six leading fields and their order are
/// fixed; command-specific fields follow in `extra`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub formula: String,
    pub safe: bool,
    pub max_clause_size: usize,
    pub prime_implicates: Vec<String>,
    pub mifap: Option<IndexMap<String, u8>>,
    pub witness: Option<WitnessReport>,
    #[serde(flatten)]
    pub extra: IndexMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub voters: Vec<Vec<u8>>,
    pub outcome: Vec<u8>,
    pub violated: String,
}

impl WitnessReport {
    pub fn new(witness: &ParadoxWitness) -> Self {
        let issues = witness.constraint().issues();
        WitnessReport {
            voters: witness.profile().ballots().iter().map(|b| b.bits()).collect(),
            outcome: witness.outcome().bits(),
            violated: witness.violated().display(issues).to_string(),
        }
    }
}

impl Report {
    pub fn new(verdict: &SafetyVerdict, witness: Option<&ParadoxWitness>) -> Self {
        let issues = verdict.constraint().issues();
        Report {
            formula: verdict.constraint().to_string(),
            safe: verdict.is_safe(),
            max_clause_size: verdict.max_clause_size(),
            prime_implicates: verdict
                .prime_implicates()
                .iter()
                .map(|c| c.display(issues).to_string())
                .collect(),
            mifap: verdict
                .mifap()
                .map(|rho| rho.iter().map(|(i, v)| (issues.name(i).to_string(), v as u8)).collect()),
            witness: witness.map(WitnessReport::new),
            extra: IndexMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extra.insert(key.to_string(), value.into());
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse, IssueSet};
    use crate::safety::{classify, construct_paradox};

    #[test]
    fn unsafe_report_layout() {
        let ic = parse("p1 & p2 -> p3", &IssueSet::numbered(3).unwrap()).unwrap();
        let w = construct_paradox(&ic, 3).unwrap();
        let r = Report::new(&classify(&ic).unwrap(), Some(&w)).with("voters_requested", 3);
        let expected = r#"{
  "formula": "p1 & p2 -> p3",
  "safe": false,
  "max_clause_size": 3,
  "prime_implicates": [
    "~p1 | ~p2 | p3"
  ],
  "mifap": {
    "p1": 1,
    "p2": 1,
    "p3": 0
  },
  "witness": {
    "voters": [
      [
        0,
        1,
        0
      ],
      [
        1,
        0,
        0
      ],
      [
        1,
        1,
        1
      ]
    ],
    "outcome": [
      1,
      1,
      0
    ],
    "violated": "~p1 | ~p2 | p3"
  },
  "voters_requested": 3
}
"#;
        assert_eq!(r.to_json(), expected);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn safe_report_has_nulls() {
        let ic = parse("p1 | p2", &IssueSet::numbered(2).unwrap()).unwrap();
        let r = Report::new(&classify(&ic).unwrap(), None);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["mifap"], Value::Null);
        assert_eq!(v["witness"], Value::Null);
        assert_eq!(v["safe"], Value::Bool(true));
        assert_eq!(v["prime_implicates"][0], "p1 | p2");
    }
}
