//! JSON and DOT renderings of root systems, weights, signatures and
//! multiplets. All outputs are deterministic.

use std::fmt::Write as _;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{LinForm, Rational, NUM_PARAMS};
use crate::multiplet::fixtures::NodeName;
use crate::multiplet::{MultipletGraph, Params};
use crate::parabolic::{Side, Signature};
use crate::rootsys::{
    epsilon_coords, CartanData, EpsilonVector, LengthClass, RootError, RootSystem, RootVector,
};
use crate::verma::{VermaError, Weight};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error("record does not describe the root system: {0}")]
    Mismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub coords: RootVector,
    pub norm: Rational,
    pub length_class: LengthClass,
    pub epsilon: EpsilonVector,
}

pub fn root_records(rs: &RootSystem) -> Result<Vec<RootRecord>, ExportError> {
    rs.positive()
        .iter()
        .map(|r| {
            Ok(RootRecord {
                coords: r.clone(),
                norm: rs.norm(r)?.clone(),
                length_class: rs.length_class(r)?,
                epsilon: epsilon_coords(r)?,
            })
        })
        .collect()
}

pub fn roots_to_json(rs: &RootSystem) -> Result<String, ExportError> {
    Ok(serde_json::to_string_pretty(&root_records(rs)?)?)
}

/// Rebuilds the F4 root system from exported records, checking each
/// record against the Cartan data.
pub fn roots_from_json(json: &str) -> Result<RootSystem, ExportError> {
    let records: Vec<RootRecord> = serde_json::from_str(json)?;
    let data = CartanData::f4();
    let rebuilt =
        RootSystem::from_positive(&data, records.iter().map(|r| r.coords.clone()).collect())?;
    for r in &records {
        let expected = root_records_entry(&rebuilt, &r.coords)?;
        if &expected != r {
            return Err(ExportError::Mismatch(format!("{:?}", r)));
        }
    }
    Ok(rebuilt)
}

fn root_records_entry(rs: &RootSystem, r: &RootVector) -> Result<RootRecord, ExportError> {
    Ok(RootRecord {
        coords: r.clone(),
        norm: rs.norm(r)?.clone(),
        length_class: rs.length_class(r)?,
        epsilon: epsilon_coords(r)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub labels: [LinForm; NUM_PARAMS],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_basis: Option<Vec<Rational>>,
}

impl WeightRecord {
    pub fn new(w: &Weight, data: &CartanData) -> Result<Self, ExportError> {
        Ok(WeightRecord {
            labels: w.labels().clone(),
            root_basis: w.root_basis(data)?,
        })
    }

    pub fn weight(&self) -> Weight {
        Weight::new(self.labels.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRecord {
    pub n1: LinForm,
    pub n2: LinForm,
    pub c: LinForm,
    pub n4: LinForm,
    pub d: LinForm,
    pub side: Side,
}

impl From<&Signature> for SignatureRecord {
    fn from(s: &Signature) -> Self {
        SignatureRecord {
            n1: s.n1.clone(),
            n2: s.n2.clone(),
            c: s.c.clone(),
            n4: s.n4.clone(),
            d: s.d().clone(),
            side: s.side(),
        }
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Params::Symbolic => serializer.serialize_str("symbolic"),
            Params::Concrete(v) => v.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Labels([i64; NUM_PARAMS]),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) if s == "symbolic" => Ok(Params::Symbolic),
            Raw::Text(s) => Err(de::Error::custom(format!("unknown params {s:?}"))),
            Raw::Labels(v) => Ok(Params::Concrete(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub name: Option<String>,
    pub level: usize,
    pub side: Side,
    pub labels: [LinForm; NUM_PARAMS],
    pub signature: SignatureRecord,
    pub d: LinForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub src: usize,
    pub dst: usize,
    pub root: RootVector,
    pub degree: LinForm,
    pub arrow_level: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletRecord {
    pub params: Params,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
    /// Indices into `edges`.
    pub diagram_edges: Vec<usize>,
}

impl From<&MultipletGraph> for MultipletRecord {
    fn from(g: &MultipletGraph) -> Self {
        MultipletRecord {
            params: g.params,
            nodes: g
                .nodes
                .iter()
                .map(|n| NodeRecord {
                    id: n.id,
                    name: n.name.map(|x| x.to_string()),
                    level: n.level,
                    side: n.signature.side(),
                    labels: n.weight.labels().clone(),
                    signature: SignatureRecord::from(&n.signature),
                    d: n.signature.d().clone(),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    src: e.src,
                    dst: e.dst,
                    root: e.root.clone(),
                    degree: e.degree.clone(),
                    arrow_level: e.arrow_level,
                })
                .collect(),
            diagram_edges: g.diagram_edges.clone(),
        }
    }
}

impl MultipletRecord {
    pub fn node_named(&self, name: &NodeName) -> Option<&NodeRecord> {
        let s = name.to_string();
        self.nodes
            .iter()
            .find(|n| n.name.as_deref() == Some(s.as_str()))
    }
}

pub fn multiplet_to_json(g: &MultipletGraph) -> Result<String, ExportError> {
    Ok(serde_json::to_string_pretty(&MultipletRecord::from(g))?)
}

pub fn multiplet_from_json(json: &str) -> Result<MultipletRecord, ExportError> {
    Ok(serde_json::from_str(json)?)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Layered digraph of the diagram edges: one `rank=same` group per level,
/// nodes labelled by name (or signature), edges by arrow level.
pub fn multiplet_to_dot(g: &MultipletGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph multiplet {{");
    let _ = writeln!(out, "  // params: {}", g.params);
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box, fontsize=10];");
    for level in 0..=g.max_level() {
        let ids: Vec<String> = g
            .nodes
            .iter()
            .filter(|n| n.level == level)
            .map(|n| format!("n{}", n.id))
            .collect();
        if !ids.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
    }
    for n in &g.nodes {
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\", tooltip=\"{}\"];",
            n.id,
            dot_escape(&g.label_of(n.id)),
            dot_escape(&n.signature.to_string())
        );
    }
    for e in g.diagram() {
        let label = e.arrow_level.map(|n| n.to_string()).unwrap_or_default();
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, label);
    }
    let _ = writeln!(out, "}}");
    out
}
