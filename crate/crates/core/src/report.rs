//! Flat report records for verdicts, solver results and constructions.
//!
//! Every record renders two ways: `key: value` lines via [`Record::lines`],
//! and JSON through serde. Field names are stable:
//!
//! | record       | fields |
//! |--------------|--------|
//! | verdict      | `ok`, `failure_kind` (`none`/`coverage`/`unbalanced_cut`), `failure_vertex`, `failure_multiplicity`, `witness_cycle` |
//! | solve        | `value`, `witness`, `nodes_explored`, `limits_hit` |
//! | construction | `family`, `case_tag`, `claimed_size`, `size`, `cut_forest_expected`, `witness` |
//!
//! Vertex lists use family labels (`u0`, `v3`) when the family is known and
//! raw indices otherwise. Absent optional fields print as `-` and serialize
//! as `null`.

use serde::Serialize;

use crate::constructions::ConstructionResult;
use crate::domination::{DdsFailure, DdsVerdict, SolveResult};
use crate::families::{vertex_label, Family};

/// Something that can print itself as `key: value` lines.
pub trait Record {
    fn lines(&self) -> Vec<(&'static str, String)>;

    fn to_text(&self) -> String {
        self.lines()
            .into_iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }
}

fn labels(vertices: impl IntoIterator<Item = usize>, rim: Option<usize>) -> Vec<String> {
    vertices
        .into_iter()
        .map(|v| match rim {
            Some(n) => vertex_label(n, v),
            None => v.to_string(),
        })
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub ok: bool,
    pub failure_kind: &'static str,
    pub failure_vertex: Option<String>,
    pub failure_multiplicity: Option<usize>,
    pub witness_cycle: Option<Vec<String>>,
}

impl VerdictRecord {
    pub fn new(verdict: &DdsVerdict, rim: Option<usize>) -> Self {
        match &verdict.failure {
            None => VerdictRecord {
                ok: true,
                failure_kind: "none",
                failure_vertex: None,
                failure_multiplicity: None,
                witness_cycle: None,
            },
            Some(DdsFailure::Coverage {
                vertex,
                multiplicity,
            }) => VerdictRecord {
                ok: false,
                failure_kind: "coverage",
                failure_vertex: labels([*vertex], rim).pop(),
                failure_multiplicity: Some(*multiplicity),
                witness_cycle: None,
            },
            Some(DdsFailure::UnbalancedCut { witness_cycle }) => VerdictRecord {
                ok: false,
                failure_kind: "unbalanced_cut",
                failure_vertex: None,
                failure_multiplicity: None,
                witness_cycle: Some(labels(witness_cycle.iter().copied(), rim)),
            },
        }
    }
}

impl Record for VerdictRecord {
    fn lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("ok", self.ok.to_string()),
            ("failure_kind", self.failure_kind.to_string()),
            ("failure_vertex", opt(&self.failure_vertex)),
            ("failure_multiplicity", opt(&self.failure_multiplicity)),
            (
                "witness_cycle",
                self.witness_cycle
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |c| c.join(",")),
            ),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveRecord {
    pub value: usize,
    pub witness: Vec<String>,
    pub nodes_explored: u64,
    pub limits_hit: bool,
}

impl SolveRecord {
    pub fn new(result: &SolveResult, rim: Option<usize>) -> Self {
        SolveRecord {
            value: result.value,
            witness: labels(result.witness.iter(), rim),
            nodes_explored: result.nodes_explored,
            limits_hit: result.limits_hit,
        }
    }
}

impl Record for SolveRecord {
    fn lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("value", self.value.to_string()),
            ("witness", self.witness.join(",")),
            ("nodes_explored", self.nodes_explored.to_string()),
            ("limits_hit", self.limits_hit.to_string()),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionRecord {
    pub family: String,
    pub case_tag: String,
    pub claimed_size: usize,
    pub size: usize,
    pub cut_forest_expected: bool,
    pub witness: Vec<String>,
}

impl ConstructionRecord {
    pub fn new(family: &Family, c: &ConstructionResult) -> Self {
        ConstructionRecord {
            family: family.to_string(),
            case_tag: c.case_tag.to_string(),
            claimed_size: c.claimed_size,
            size: c.set.len(),
            cut_forest_expected: c.cut_forest_expected,
            witness: labels(c.set.iter(), family.rim_size()),
        }
    }
}

impl Record for ConstructionRecord {
    fn lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("family", self.family.clone()),
            ("case_tag", self.case_tag.clone()),
            ("claimed_size", self.claimed_size.to_string()),
            ("size", self.size.to_string()),
            ("cut_forest_expected", self.cut_forest_expected.to_string()),
            ("witness", self.witness.join(",")),
        ]
    }
}
