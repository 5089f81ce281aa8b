//! Machine-readable outcomes.
//!
//! The JSON layout is `{version, config, checks[], casimir, orbits?,
//! structure?, closure?, spectrum?}`. Rationals are `"p/q"` strings and exact
//! zero residuals are the string `"0 (exact)"`.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::cli::RunConfig;
use crate::field::Coeff;
use crate::fock::OrbitReport;
use crate::superalgebra::{ClosureMode, ClosureResult, StructureConstants};
use crate::weyl::{BracketKind, Parity};

pub const REPORT_VERSION: u32 = 1;
pub const EXACT_ZERO: &str = "0 (exact)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Informational,
}

/// Residual of a check: exact zero, a nonzero exact expression, a floating
/// magnitude, or nothing (for informational entries).
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    ExactZero,
    Exact(String),
    Float(f64),
    None,
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Residual::ExactZero => s.serialize_str(EXACT_ZERO),
            Residual::Exact(e) => s.serialize_str(e),
            Residual::Float(x) => s.serialize_f64(*x),
            Residual::None => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Residual {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
            Null(()),
        }
        match Raw::deserialize(d) {
            Ok(Raw::Num(x)) => Ok(Residual::Float(x)),
            Ok(Raw::Str(s)) if s == EXACT_ZERO => Ok(Residual::ExactZero),
            Ok(Raw::Str(s)) => Ok(Residual::Exact(s)),
            Ok(Raw::Null(())) => Ok(Residual::None),
            Err(_) => Err(de::Error::custom(
                "residual must be a number, string or null",
            )),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::ExactZero => f.write_str(EXACT_ZERO),
            Residual::Exact(e) => f.write_str(e),
            Residual::Float(x) => write!(f, "{x:.3e}"),
            Residual::None => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// relation group or subsystem the check belongs to
    pub label: String,
    pub mode: CheckMode,
    pub status: CheckStatus,
    pub residual: Residual,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Symbolic check: passes iff the residual expression is exactly zero.
    pub fn symbolic(name: impl Into<String>, label: &str, residual: Option<String>) -> Self {
        let (status, residual) = match residual {
            None => (CheckStatus::Pass, Residual::ExactZero),
            Some(r) => (CheckStatus::Fail, Residual::Exact(r)),
        };
        Check {
            name: name.into(),
            label: label.into(),
            mode: CheckMode::Symbolic,
            status,
            residual,
            detail: None,
        }
    }

    pub fn numeric(name: impl Into<String>, label: &str, residual: f64, tolerance: f64) -> Self {
        let status = if residual <= tolerance {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name: name.into(),
            label: label.into(),
            mode: CheckMode::Numeric,
            status,
            residual: Residual::Float(residual),
            detail: None,
        }
    }

    pub fn informational(
        name: impl Into<String>,
        label: &str,
        mode: CheckMode,
        detail: String,
    ) -> Self {
        Check {
            name: name.into(),
            label: label.into(),
            mode,
            status: CheckStatus::Informational,
            residual: Residual::None,
            detail: Some(detail),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_residual(mut self, residual: Residual) -> Self {
        self.residual = residual;
        self
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub parity: Parity,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub element: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub left: String,
    pub right: String,
    pub kind: BracketKind,
    /// expansion of the bracket in the basis; empty for zero
    pub result: Vec<TermEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTable {
    pub basis: Vec<BasisEntry>,
    pub entries: Vec<StructureEntry>,
}

impl StructureTable {
    pub fn from_constants(sc: &StructureConstants, polys: &[String]) -> Self {
        let n = sc.dim();
        let basis = (0..n)
            .map(|i| BasisEntry {
                name: sc.names[i].clone(),
                parity: sc.parities[i],
                polynomial: polys.get(i).cloned().unwrap_or_default(),
            })
            .collect();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let result = (0..n)
                    .filter(|&k| !num_traits::Zero::is_zero(&sc.tensor[i][j][k]))
                    .map(|k| TermEntry {
                        element: sc.names[k].clone(),
                        coefficient: sc.tensor[i][j][k].to_exact_string(),
                    })
                    .collect();
                entries.push(StructureEntry {
                    left: sc.names[i].clone(),
                    right: sc.names[j].clone(),
                    kind: sc.bracket_kind[i][j],
                    result,
                });
            }
        }
        StructureTable { basis, entries }
    }

    pub fn entry(&self, left: &str, right: &str) -> Option<&StructureEntry> {
        self.entries
            .iter()
            .find(|e| e.left == left && e.right == right)
    }
}

impl StructureEntry {
    /// `{Q†,Q†} = 2K+`-style rendering.
    pub fn render(&self) -> String {
        let lhs = match self.kind {
            BracketKind::Commutator => format!("[{},{}]", self.left, self.right),
            BracketKind::Anticommutator => format!("{{{},{}}}", self.left, self.right),
        };
        let rhs = if self.result.is_empty() {
            "0".to_string()
        } else {
            self.result
                .iter()
                .map(|t| {
                    let c = Coeff::parse_exact(&t.coefficient).expect("written by to_exact_string");
                    if c == Coeff::from_int(1) {
                        t.element.clone()
                    } else if c == Coeff::from_int(-1) {
                        format!("-{}", t.element)
                    } else {
                        format!("{c}{}", t.element)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        format!("{lhs} = {rhs}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSummary {
    pub seed: Vec<String>,
    pub mode: ClosureMode,
    pub dimension: usize,
    pub generations: usize,
    pub added: Vec<String>,
    pub basis: Vec<BasisEntry>,
}

impl ClosureSummary {
    pub fn new(seed: Vec<String>, mode: ClosureMode, r: &ClosureResult) -> Self {
        ClosureSummary {
            seed,
            mode,
            dimension: r.basis.dim(),
            generations: r.generations,
            added: r.added.clone(),
            basis: r
                .basis
                .elements()
                .iter()
                .map(|e| BasisEntry {
                    name: e.name.clone(),
                    parity: e.element.parity(),
                    polynomial: e.element.poly().to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: usize,
    #[serde(rename = "E")]
    pub energy: f64,
    pub k3: String,
    pub parity: String,
    pub norm_plus: String,
    pub norm_minus: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    /// Casimir eigenvalue as `"p/q"`
    pub casimir: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumRow>>,
}

impl Report {
    pub fn new(config: RunConfig, casimir: String) -> Self {
        Report {
            version: REPORT_VERSION,
            config,
            checks: Vec::new(),
            casimir,
            orbits: None,
            structure: None,
            closure: None,
            spectrum: None,
        }
    }

    /// Zero iff every non-informational check passed.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }
}
