//! JSON files read and written by the command-line tool.
//!
//! Exact values are stored as strings ("p/q" rationals, "n/d" twist
//! exponents) so no floating-point value ever enters a category file.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{CyclotomicElement, Matrix, Rat, RootOfUnity};
use crate::fusion_ring::FusionRing;
use crate::premodular::PremodularData;
use crate::report::ValidationReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("unsupported schema version {0}")]
    Version(u32),
    #[error("bad field {field}: {detail}")]
    Field { field: String, detail: String },
}

fn field(field: &str, detail: impl Into<String>) -> SchemaError {
    SchemaError::Field { field: field.into(), detail: detail.into() }
}

/// S̃ over ℚ(ζ_conductor): `entries[i][j]` lists the coefficients of
/// 1, ζ, ζ², … (length φ(conductor)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    pub conductor: u32,
    pub entries: Vec<Vec<Vec<String>>>,
}

impl ExactMatrix {
    /// Entries lifted to the least common conductor.
    pub fn from_matrix(s: &Matrix<CyclotomicElement>) -> Self {
        let conductor = s.iter().flatten().fold(1u32, |m, x| m.lcm(&x.conductor()));
        let entries = s
            .iter()
            .map(|row| row.iter().map(|x| x.lift(conductor).coeffs().iter().map(|c| c.to_string()).collect()).collect())
            .collect();
        ExactMatrix { conductor, entries }
    }
}

/// A real algebraic number: integer minimal polynomial (constant term
/// first) and an isolating interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactReal {
    pub minpoly: Vec<String>,
    pub interval: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    pub schema_version: u32,
    pub name: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `fusion[i][j][k] = N_{i,j}^k`.
    pub fusion: Vec<Vec<Vec<u32>>>,
    pub dual: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stilde: Option<ExactMatrix>,
    /// θ_i = exp(2πi·n/d) written "n/d".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twists: Option<Vec<String>>,
    /// Frobenius–Perron dimensions; informational, ignored on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fpdims: Option<Vec<ExactReal>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

fn parse_rat(s: &str, name: &str) -> Result<Rat, SchemaError> {
    Rat::from_str(s.trim()).map_err(|_| field(name, format!("{s:?} is not a rational")))
}

impl CategoryFile {
    pub fn from_data(data: &PremodularData) -> Self {
        let stilde = data.stilde.as_ref().map(ExactMatrix::from_matrix);
        let twists = data.twists.as_ref().map(|t| t.iter().map(|z| format!("{}/{}", z.num(), z.den())).collect());
        let fpdims = data.ring.fpdims().ok().map(|d| {
            d.entries
                .iter()
                .map(|x| {
                    let e = x.enclosure(20);
                    ExactReal {
                        minpoly: x.minpoly().coeffs().iter().map(|c| c.to_string()).collect(),
                        interval: [e.lo.to_string(), e.hi.to_string()],
                    }
                })
                .collect()
        });
        CategoryFile {
            schema_version: SCHEMA_VERSION,
            name: data.name.clone(),
            rank: data.rank(),
            labels: data.labels.clone(),
            fusion: data.ring.to_nested(),
            dual: data.ring.duals().to_vec(),
            stilde,
            twists,
            fpdims,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: serde_json::Value) -> Self {
        self.metadata.insert(key.into(), value);
        self
    }

    pub fn to_data(&self) -> Result<PremodularData, SchemaError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(SchemaError::Version(self.schema_version));
        }
        if self.fusion.len() != self.rank {
            return Err(field("fusion", format!("{} matrices for rank {}", self.fusion.len(), self.rank)));
        }
        let ring =
            FusionRing::from_nested(&self.fusion, self.dual.clone()).map_err(|e| field("fusion", e.to_string()))?;
        let mut data = PremodularData::new(self.name.clone(), ring);
        if let Some(l) = &self.labels {
            if l.len() != self.rank {
                return Err(field("labels", format!("{} labels for rank {}", l.len(), self.rank)));
            }
            data.labels = Some(l.clone());
        }
        if let Some(m) = &self.stilde {
            if m.entries.len() != self.rank || m.entries.iter().any(|r| r.len() != self.rank) {
                return Err(field("stilde", format!("matrix must be {0}×{0}", self.rank)));
            }
            let mut s = vec![];
            for row in &m.entries {
                let mut out = vec![];
                for e in row {
                    let c = e.iter().map(|x| parse_rat(x, "stilde")).collect::<Result<Vec<_>, _>>()?;
                    out.push(
                        CyclotomicElement::from_coeffs(m.conductor, c).map_err(|e| field("stilde", e.to_string()))?,
                    );
                }
                s.push(out);
            }
            data.stilde = Some(s);
        }
        if let Some(t) = &self.twists {
            if t.len() != self.rank {
                return Err(field("twists", format!("{} twists for rank {}", t.len(), self.rank)));
            }
            let mut th = vec![];
            for x in t {
                let (n, d) = x.split_once('/').ok_or_else(|| field("twists", format!("{x:?} is not n/d")))?;
                let n: i64 = n.trim().parse().map_err(|_| field("twists", format!("bad numerator in {x:?}")))?;
                let d: i64 = d.trim().parse().map_err(|_| field("twists", format!("bad denominator in {x:?}")))?;
                th.push(RootOfUnity::new(n, d).map_err(|e| field("twists", e.to_string()))?);
            }
            data.twists = Some(th);
        }
        Ok(data)
    }

    pub fn from_json(s: &str) -> Result<Self, SchemaError> {
        let f: CategoryFile = serde_json::from_str(s).map_err(|e| SchemaError::Json(e.to_string()))?;
        if f.schema_version != SCHEMA_VERSION {
            return Err(SchemaError::Version(f.schema_version));
        }
        Ok(f)
    }

    /// Canonical text: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Output of every command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub command: String,
    pub subject: String,
    pub passed: bool,
    pub verdicts: Vec<ValidationReport>,
    #[serde(default)]
    pub certificates: serde_json::Value,
    #[serde(default)]
    pub dependencies: Vec<String>,
    #[serde(default)]
    pub summary: BTreeMap<String, serde_json::Value>,
    pub timing_ms: u64,
}

impl ReportFile {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            subject: subject.into(),
            passed: true,
            verdicts: vec![],
            certificates: serde_json::Value::Null,
            dependencies: vec![],
            summary: BTreeMap::new(),
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, v: ValidationReport) {
        self.passed &= v.passed();
        self.verdicts.push(v);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
