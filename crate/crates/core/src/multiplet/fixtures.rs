//! Reference signature table and the matcher that pairs it with a generated
//! multiplet.
//!
//! The table format is documented in the header of the bundled
//! `fixtures/f4_sl3_sl2.txt`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::MultipletGraph;
use crate::exact::{LinForm, Rational};
use crate::parabolic::Side;

/// The bundled table for the `sl(3) ⊕ sl(2)` parabolic of F4.
pub const BUILTIN_TABLE: &str = include_str!("../../fixtures/f4_sl3_sl2.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("bad node name {0:?}")]
    Name(String),
}

/// Enumeration index `k` or `k,ℓ` shared by a `χ^∓` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixtureName {
    pub k: u32,
    pub sub: Option<u32>,
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sub {
            Some(l) => write!(f, "{},{}", self.k, l),
            None => write!(f, "{}", self.k),
        }
    }
}

impl FromStr for FixtureName {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FixtureError::Name(s.to_string());
        let (k, sub) = match s.split_once(',') {
            Some((k, l)) => (k, Some(l.trim().parse().map_err(|_| bad())?)),
            None => (s, None),
        };
        Ok(FixtureName {
            k: k.trim().parse().map_err(|_| bad())?,
            sub,
        })
    }
}

/// Full node name `χ^∓_{k,ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeName {
    pub side: Side,
    pub index: FixtureName,
}

impl fmt::Display for NodeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index.sub {
            Some(_) => write!(f, "χ^{}_{{{}}}", self.side, self.index),
            None => write!(f, "χ^{}_{}", self.side, self.index),
        }
    }
}

impl FromStr for NodeName {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FixtureError::Name(s.to_string());
        let rest = s.strip_prefix("χ^").ok_or_else(bad)?;
        let (side, rest) = if let Some(r) = rest.strip_prefix("-_") {
            (Side::Minus, r)
        } else if let Some(r) = rest.strip_prefix("+_") {
            (Side::Plus, r)
        } else {
            return Err(bad());
        };
        let index = match rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            Some(inner) => inner.parse()?,
            None => rest.parse()?,
        };
        Ok(NodeName { side, index })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadingKind {
    Printed,
    Corrected,
}

impl fmt::Display for ReadingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReadingKind::Printed => "printed",
            ReadingKind::Corrected => "corrected",
        })
    }
}

/// One reading of a table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    pub kind: ReadingKind,
    pub first: LinForm,
    pub second: LinForm,
    /// `-1` for `∓`, `+1` for `±`: the sign of `c` on the minus side.
    pub minus_sign: i8,
    pub c: LinForm,
    pub n4: LinForm,
    pub note: Option<String>,
    pub line: usize,
}

impl Reading {
    /// Entries `(n1, n2, c, n4)` of `χ^side`, with the `sl(3)` pair swapped
    /// on the plus side.
    pub fn expand(&self, side: Side) -> [LinForm; 4] {
        let s = Rational::integer(i64::from(self.minus_sign));
        let c_minus = self.c.scale(&s);
        match side {
            Side::Minus => [
                self.first.clone(),
                self.second.clone(),
                c_minus,
                self.n4.clone(),
            ],
            Side::Plus => [
                self.second.clone(),
                self.first.clone(),
                -c_minus,
                self.n4.clone(),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub name: FixtureName,
    pub readings: Vec<Reading>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureTable {
    pub rows: Vec<FixtureRow>,
}

impl FixtureTable {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE).expect("bundled fixture table parses")
    }

    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut rows: Vec<FixtureRow> = Vec::new();
        let mut by_name: HashMap<FixtureName, usize> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |reason: String| FixtureError::Parse { line, reason };
            let (content, note) = match raw.split_once('#') {
                Some((c, n)) => (c, Some(n.trim().to_string()).filter(|n| !n.is_empty())),
                None => (raw, None),
            };
            if content.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split('|').map(str::trim).collect();
            if fields.len() != 6 {
                return Err(err(format!(
                    "expected 6 '|'-separated fields, got {}",
                    fields.len()
                )));
            }
            let mut head = fields[0].split_whitespace();
            let kind = match head.next() {
                Some("printed") => ReadingKind::Printed,
                Some("corrected") => ReadingKind::Corrected,
                other => return Err(err(format!("unknown reading kind {other:?}"))),
            };
            let name: FixtureName = head
                .next()
                .ok_or_else(|| err("missing name".into()))?
                .parse()
                .map_err(|e: FixtureError| err(e.to_string()))?;
            if head.next().is_some() {
                return Err(err("trailing text after name".into()));
            }
            let form = |s: &str| s.parse::<LinForm>().map_err(|e| err(e.to_string()));
            let minus_sign = match fields[3] {
                "-+" => -1,
                "+-" => 1,
                other => return Err(err(format!("sign must be \"-+\" or \"+-\", got {other:?}"))),
            };
            let reading = Reading {
                kind,
                first: form(fields[1])?,
                second: form(fields[2])?,
                minus_sign,
                c: form(fields[4])?,
                n4: form(fields[5])?,
                note,
                line,
            };
            match by_name.get(&name) {
                Some(&r) => rows[r].readings.push(reading),
                None => {
                    by_name.insert(name, rows.len());
                    rows.push(FixtureRow {
                        name,
                        readings: vec![reading],
                    });
                }
            }
        }
        Ok(FixtureTable { rows })
    }

    /// Number of signatures the table describes (two per row).
    pub fn signature_count(&self) -> usize {
        2 * self.rows.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingOutcome {
    pub kind: ReadingKind,
    pub line: usize,
    pub note: Option<String>,
    pub minus: [LinForm; 4],
    pub plus: [LinForm; 4],
    pub minus_node: Option<usize>,
    pub plus_node: Option<usize>,
}

impl ReadingOutcome {
    pub fn confirmed(&self) -> bool {
        self.minus_node.is_some() && self.plus_node.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameMatch {
    pub name: FixtureName,
    pub outcomes: Vec<ReadingOutcome>,
    /// Index into `outcomes` of the reading used for the bijection.
    pub chosen: Option<usize>,
    /// `χ^-` sits at level `k` and `χ^+` at `max_level − k`.
    pub level_consistent: bool,
}

impl NameMatch {
    pub fn chosen_outcome(&self) -> Option<&ReadingOutcome> {
        self.chosen.map(|i| &self.outcomes[i])
    }

    /// True when the reading used is not the printed one.
    pub fn is_correction(&self) -> bool {
        self.chosen_outcome()
            .is_some_and(|o| o.kind == ReadingKind::Corrected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub entries: Vec<NameMatch>,
    /// Nodes no fixture claimed, with their rendered symbolic signature.
    pub unmatched_nodes: Vec<(usize, String)>,
    pub node_count: usize,
}

pub fn render_entries(e: &[LinForm; 4]) -> String {
    format!("{{{}, {}, {}, {}}}", e[0], e[1], e[2], e[3])
}

impl MatchReport {
    pub fn matched_signatures(&self) -> usize {
        2 * self.entries.iter().filter(|e| e.chosen.is_some()).count()
    }

    pub fn fixture_signatures(&self) -> usize {
        2 * self.entries.len()
    }

    pub fn is_bijection(&self) -> bool {
        self.unmatched_nodes.is_empty()
            && self.entries.iter().all(|e| e.chosen.is_some())
            && self.matched_signatures() == self.node_count
    }

    pub fn assignments(&self) -> Vec<(usize, NodeName)> {
        let mut out = Vec::new();
        for e in &self.entries {
            if let Some(o) = e.chosen_outcome() {
                for (side, node) in [(Side::Minus, o.minus_node), (Side::Plus, o.plus_node)] {
                    if let Some(id) = node {
                        out.push((
                            id,
                            NodeName {
                                side,
                                index: e.name,
                            },
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn corrections(&self) -> impl Iterator<Item = &NameMatch> {
        self.entries.iter().filter(|e| e.is_correction())
    }

    /// Human-readable failure lines; empty for a perfect match.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in &self.entries {
            if e.chosen.is_none() {
                for o in &e.outcomes {
                    for (side, sig, node) in [
                        (Side::Minus, &o.minus, o.minus_node),
                        (Side::Plus, &o.plus, o.plus_node),
                    ] {
                        if node.is_none() {
                            out.push(format!(
                                "fixture {} ({} reading, line {}) unmatched: {}",
                                NodeName {
                                    side,
                                    index: e.name
                                },
                                o.kind,
                                o.line,
                                render_entries(sig)
                            ));
                        }
                    }
                }
            } else if !e.level_consistent {
                out.push(format!(
                    "fixture pair {} sits at inconsistent levels",
                    e.name
                ));
            }
        }
        for (id, sig) in &self.unmatched_nodes {
            out.push(format!("generated node {id} unmatched: {sig}"));
        }
        out
    }
}

/// Matches fixture signatures against the symbolic signatures of `g`.
pub fn match_fixtures(g: &MultipletGraph, table: &FixtureTable) -> MatchReport {
    let by_sig: HashMap<[LinForm; 4], usize> = g
        .nodes
        .iter()
        .map(|n| (n.symbolic_signature.entries().map(Clone::clone), n.id))
        .collect();
    let max_level = g.max_level();
    let mut claimed = vec![false; g.nodes.len()];
    let mut entries = Vec::new();
    for row in &table.rows {
        let outcomes: Vec<ReadingOutcome> = row
            .readings
            .iter()
            .map(|r| {
                let minus = r.expand(Side::Minus);
                let plus = r.expand(Side::Plus);
                ReadingOutcome {
                    kind: r.kind,
                    line: r.line,
                    note: r.note.clone(),
                    minus_node: by_sig.get(&minus).copied(),
                    plus_node: by_sig.get(&plus).copied(),
                    minus,
                    plus,
                }
            })
            .collect();
        let chosen = outcomes.iter().position(|o| {
            o.confirmed()
                && o.minus_node != o.plus_node
                && !claimed[o.minus_node.unwrap()]
                && !claimed[o.plus_node.unwrap()]
        });
        let mut level_consistent = false;
        if let Some(i) = chosen {
            let (a, b) = (
                outcomes[i].minus_node.unwrap(),
                outcomes[i].plus_node.unwrap(),
            );
            claimed[a] = true;
            claimed[b] = true;
            let k = row.name.k as usize;
            level_consistent = g.nodes[a].level == k && g.nodes[b].level + k == max_level;
        }
        entries.push(NameMatch {
            name: row.name,
            outcomes,
            chosen,
            level_consistent,
        });
    }
    let unmatched_nodes = g
        .nodes
        .iter()
        .filter(|n| !claimed[n.id])
        .map(|n| (n.id, n.symbolic_signature.to_string()))
        .collect();
    MatchReport {
        entries,
        unmatched_nodes,
        node_count: g.nodes.len(),
    }
}
