//! Multiplets of generalized Verma modules induced from a parabolic.
//!
//! Starting from the top weight `(m1, m2, m3, m4)`, every `𝔪`-noncompact
//! positive root with a positive-integer Harish-Chandra parameter gives an
//! embedding `V^{Λ'} → V^Λ` with `Λ' = Λ − m_β β`. Closing under these
//! embeddings and keeping only `𝔪`-dominant weights produces the multiplet.
//!
//! Generation is breadth-first with noncompact roots in canonical order, so
//! node ids are reproducible. In concrete mode each node also carries the
//! symbolic weight of the same Weyl group element; arrow labels and fixture
//! names come from that symbolic data.

pub mod fixtures;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::exact::{LinForm, SignClass, NUM_PARAMS};
use crate::parabolic::{self, ks_dual, ParabolicError, ParabolicSpec, Signature};
use crate::rootsys::{RootError, RootSystem, RootVector};
use crate::verma::{self, reducibility_degree, Reducibility, VermaError, Weight};

pub use fixtures::{FixtureName, FixtureTable, MatchReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultipletError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error("concrete labels must all be >= 1, got {0:?}")]
    InvalidLabels([i64; NUM_PARAMS]),
    #[error("multiplet exceeded the node cap of {0}")]
    NodeCap(usize),
    #[error("degree {degree} along root {root} at node {node} has mixed sign")]
    MixedDegree {
        node: usize,
        root: RootVector,
        degree: Box<LinForm>,
    },
    #[error("shifted orbit has {got} elements, expected |W| = {expected}")]
    OrbitSize { got: usize, expected: usize },
    #[error("no Knapp-Stein partner for node {0}")]
    MissingPartner(usize),
    #[error("node {0} is its own Knapp-Stein partner")]
    SelfDual(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Labels a multiplet is generated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Params {
    /// Basis forms `m1..m4`, valid for every positive-integer assignment.
    Symbolic,
    Concrete([i64; NUM_PARAMS]),
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Symbolic => f.write_str("symbolic"),
            Params::Concrete(v) => write!(f, "{} {} {} {}", v[0], v[1], v[2], v[3]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletNode {
    pub id: usize,
    /// Weight as generated: symbolic forms, or constants in concrete mode.
    pub weight: Weight,
    pub signature: Signature,
    /// Symbolic weight of the same Weyl group element.
    pub symbolic_weight: Weight,
    pub symbolic_signature: Signature,
    /// Length of the minimal coset representative: number of positive roots
    /// with negative Harish-Chandra parameter.
    pub level: usize,
    pub name: Option<fixtures::NodeName>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletEdge {
    pub src: usize,
    pub dst: usize,
    pub root: RootVector,
    /// `hc_param(src, root)`, positive.
    pub degree: LinForm,
    /// `n` in `1..=4` when the symbolic degree is exactly `m_n`.
    pub arrow_level: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipletGraph {
    pub params: Params,
    pub nodes: Vec<MultipletNode>,
    pub edges: Vec<MultipletEdge>,
    /// Indices into `edges` of the unit-degree embeddings.
    pub diagram_edges: Vec<usize>,
}

/// Default node cap: ten times `|W|`.
pub fn default_node_cap(rs: &RootSystem) -> Result<usize, MultipletError> {
    Ok(10 * rs.weyl_order()?)
}

pub fn generate(
    rs: &RootSystem,
    p: &ParabolicSpec,
    params: Params,
) -> Result<MultipletGraph, MultipletError> {
    generate_capped(rs, p, params, default_node_cap(rs)?)
}

pub fn generate_capped(
    rs: &RootSystem,
    p: &ParabolicSpec,
    params: Params,
    node_cap: usize,
) -> Result<MultipletGraph, MultipletError> {
    let top = match params {
        Params::Symbolic => Weight::top(),
        Params::Concrete(v) => {
            if v.iter().any(|&x| x < 1) {
                return Err(MultipletError::InvalidLabels(v));
            }
            Weight::concrete(v)
        }
    };
    let noncompact = parabolic::classify_roots(rs, p).noncompact;

    let mut builder = Builder {
        rs,
        p,
        nodes: Vec::new(),
        index: HashMap::new(),
        node_cap,
    };
    builder.add_node(top, Weight::top())?;

    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for beta in &noncompact {
            let src = &builder.nodes[u];
            let degree = match reducibility_degree(rs, &src.weight, beta, None)? {
                Reducibility::Generic(m) => m,
                Reducibility::Concrete(v) => LinForm::constant(v),
                Reducibility::Absent => continue,
                Reducibility::AssignmentDependent(m) => {
                    return Err(MultipletError::MixedDegree {
                        node: u,
                        root: beta.clone(),
                        degree: Box::new(m),
                    })
                }
            };
            let target = src.weight.shifted_reflect(rs, beta)?;
            if !p.is_m_dominant(&target) {
                continue;
            }
            let symbolic_degree = src.symbolic_weight.hc_param(rs, beta)?;
            let symbolic_target = src.symbolic_weight.shifted_reflect(rs, beta)?;
            let v = match builder.index.get(&target) {
                Some(&v) => {
                    if builder.nodes[v].symbolic_weight != symbolic_target {
                        return Err(MultipletError::Invariant(format!(
                            "weight {target} reached from two Weyl group elements (labels not generic)"
                        )));
                    }
                    v
                }
                None => {
                    let v = builder.add_node(target, symbolic_target)?;
                    queue.push_back(v);
                    v
                }
            };
            let arrow_level = symbolic_degree.basis_index().map(|i| i as u8 + 1);
            edges.push(MultipletEdge {
                src: u,
                dst: v,
                root: beta.clone(),
                degree,
                arrow_level,
            });
        }
    }
    let diagram_edges = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.arrow_level.is_some())
        .map(|(i, _)| i)
        .collect();
    Ok(MultipletGraph {
        params,
        nodes: builder.nodes,
        edges,
        diagram_edges,
    })
}

struct Builder<'a> {
    rs: &'a RootSystem,
    p: &'a ParabolicSpec,
    nodes: Vec<MultipletNode>,
    index: HashMap<Weight, usize>,
    node_cap: usize,
}

impl Builder<'_> {
    fn add_node(
        &mut self,
        weight: Weight,
        symbolic_weight: Weight,
    ) -> Result<usize, MultipletError> {
        if self.nodes.len() >= self.node_cap {
            return Err(MultipletError::NodeCap(self.node_cap));
        }
        let id = self.nodes.len();
        let level = level_of(self.rs, &weight)?;
        let signature = parabolic::signature(self.rs, &weight, self.p)?;
        let symbolic_signature = parabolic::signature(self.rs, &symbolic_weight, self.p)?;
        self.index.insert(weight.clone(), id);
        self.nodes.push(MultipletNode {
            id,
            weight,
            signature,
            symbolic_weight,
            symbolic_signature,
            level,
            name: None,
        });
        Ok(id)
    }
}

/// Number of positive roots with negative Harish-Chandra parameter at `w`.
pub fn level_of(rs: &RootSystem, w: &Weight) -> Result<usize, MultipletError> {
    let mut level = 0;
    for beta in rs.positive() {
        let m = w.hc_param(rs, beta)?;
        match m.sign_over_positive() {
            SignClass::GenericNegative => level += 1,
            SignClass::GenericPositive => {}
            SignClass::Zero | SignClass::Mixed => {
                return Err(MultipletError::Invariant(format!(
                    "parameter {m} at root {beta} of weight {w} is not sign-definite"
                )))
            }
        }
    }
    Ok(level)
}

impl MultipletGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn top(&self) -> &MultipletNode {
        &self.nodes[0]
    }

    pub fn max_level(&self) -> usize {
        self.nodes.iter().map(|n| n.level).max().unwrap_or(0)
    }

    /// Node counts per level `0..=max_level`.
    pub fn level_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_level() + 1];
        for n in &self.nodes {
            hist[n.level] += 1;
        }
        hist
    }

    pub fn diagram(&self) -> impl Iterator<Item = &MultipletEdge> {
        self.diagram_edges.iter().map(|&i| &self.edges[i])
    }

    pub fn weights(&self) -> BTreeSet<Weight> {
        self.nodes.iter().map(|n| n.weight.clone()).collect()
    }

    pub fn symbolic_weights(&self) -> BTreeSet<Weight> {
        self.nodes
            .iter()
            .map(|n| n.symbolic_weight.clone())
            .collect()
    }

    pub fn node_by_name(&self, name: &fixtures::NodeName) -> Option<&MultipletNode> {
        self.nodes.iter().find(|n| n.name.as_ref() == Some(name))
    }

    /// Weak connectivity of the diagram (unit-degree) edges.
    pub fn diagram_is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in self.diagram() {
            adj[e.src].push(e.dst);
            adj[e.dst].push(e.src);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Every edge strictly increases the level, so the edge set is acyclic.
    pub fn edges_increase_level(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.nodes[e.dst].level > self.nodes[e.src].level)
    }

    pub fn assign_names(&mut self, report: &MatchReport) {
        for node in &mut self.nodes {
            node.name = None;
        }
        for (id, name) in report.assignments() {
            self.nodes[id].name = Some(name);
        }
    }

    /// Display name, falling back to the rendered signature.
    pub fn label_of(&self, id: usize) -> String {
        let n = &self.nodes[id];
        match &n.name {
            Some(name) => name.to_string(),
            None => n.signature.to_string(),
        }
    }
}

/// Result of enumerating the full shifted Weyl orbit of the top weight.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub orbit_size: usize,
    pub m_weyl_order: usize,
    pub dominant: BTreeSet<Weight>,
}

/// Independent route to the multiplet: the `𝔪`-dominant part of the Weyl
/// orbit of the top weight, i.e. one weight per coset `W_M w`.
pub fn orbit_quotient_oracle(
    rs: &RootSystem,
    p: &ParabolicSpec,
) -> Result<OracleResult, MultipletError> {
    let expected = rs.weyl_order()?;
    let orbit = verma::shifted_orbit(rs.data(), &Weight::top(), expected)?;
    if orbit.len() != expected {
        return Err(MultipletError::OrbitSize {
            got: orbit.len(),
            expected,
        });
    }
    let m_weyl_order = rs.subsystem(p.m_simple())?.weyl_order()?;
    let dominant = orbit.into_iter().filter(|w| p.is_m_dominant(w)).collect();
    Ok(OracleResult {
        orbit_size: expected,
        m_weyl_order,
        dominant,
    })
}

/// Knapp-Stein pairs `(i, j)` with `i < j`, matched on symbolic signatures.
pub fn ks_pairing(g: &MultipletGraph) -> Result<Vec<(usize, usize)>, MultipletError> {
    let by_sig: HashMap<&Signature, usize> = g
        .nodes
        .iter()
        .map(|n| (&n.symbolic_signature, n.id))
        .collect();
    let mut pairs = Vec::new();
    for n in &g.nodes {
        let dual = ks_dual(&n.symbolic_signature);
        let partner = *by_sig
            .get(&dual)
            .ok_or(MultipletError::MissingPartner(n.id))?;
        if partner == n.id {
            return Err(MultipletError::SelfDual(n.id));
        }
        if n.id < partner {
            pairs.push((n.id, partner));
        }
    }
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledArrow {
    pub edge: usize,
    pub src: usize,
    pub dst: usize,
    pub n: u8,
}

#[derive(Debug, Clone, Default)]
pub struct ArrowReport {
    pub arrows: Vec<LabeledArrow>,
    /// Human-readable problems: level jumps other than 1, degree mismatches.
    pub violations: Vec<String>,
    /// Nodes with no outgoing diagram edge.
    pub sinks: Vec<usize>,
}

pub fn arrow_labels(g: &MultipletGraph) -> ArrowReport {
    let mut report = ArrowReport::default();
    let mut has_out = vec![false; g.nodes.len()];
    for &i in &g.diagram_edges {
        let e = &g.edges[i];
        let Some(n) = e.arrow_level else {
            report
                .violations
                .push(format!("diagram edge {i} has no arrow label"));
            continue;
        };
        has_out[e.src] = true;
        let (src, dst) = (&g.nodes[e.src], &g.nodes[e.dst]);
        let basis = LinForm::basis(usize::from(n) - 1);
        let expected = match g.params {
            Params::Symbolic => basis,
            Params::Concrete(v) => LinForm::constant(basis.eval_ints(&v)),
        };
        if dst.level != src.level + 1 {
            report.violations.push(format!(
                "arrow {} -> {} (n = {n}) jumps from level {} to {}",
                g.label_of(e.src),
                g.label_of(e.dst),
                src.level,
                dst.level
            ));
        }
        if e.degree != expected {
            report.violations.push(format!(
                "arrow {} -> {} has degree {} but label m{n}",
                g.label_of(e.src),
                g.label_of(e.dst),
                e.degree
            ));
        }
        report.arrows.push(LabeledArrow {
            edge: i,
            src: e.src,
            dst: e.dst,
            n,
        });
    }
    report.sinks = (0..g.nodes.len()).filter(|&i| !has_out[i]).collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (RootSystem, ParabolicSpec) {
        (RootSystem::f4(), ParabolicSpec::f4_sl3_sl2())
    }

    #[test]
    fn symbolic_multiplet_shape() {
        let (rs, p) = setup();
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        assert_eq!(g.len(), 96);
        assert_eq!(
            g.level_histogram(),
            vec![1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1]
        );
        assert_eq!(g.top().level, 0);
        assert!(g.edges_increase_level());
        assert!(g.diagram_is_connected());
    }

    #[test]
    fn top_has_a_single_arrow_along_alpha3() {
        let (rs, p) = setup();
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        let out: Vec<_> = g.diagram().filter(|e| e.src == 0).collect();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].root, RootVector::new([0, 0, 1, 0]));
        assert_eq!(out[0].arrow_level, Some(3));
        assert_eq!(g.nodes[out[0].dst].level, 1);
    }

    #[test]
    fn arrows_step_one_level() {
        let (rs, p) = setup();
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        let report = arrow_labels(&g);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert_eq!(report.arrows.len(), g.diagram_edges.len());
        let bottom: Vec<_> = g
            .nodes
            .iter()
            .filter(|n| n.level == 20)
            .map(|n| n.id)
            .collect();
        assert_eq!(report.sinks, bottom);
    }

    #[test]
    fn ks_pairs() {
        let (rs, p) = setup();
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        let pairs = ks_pairing(&g).unwrap();
        assert_eq!(pairs.len(), 48);
        for (a, b) in &pairs {
            assert_eq!(g.nodes[*a].level + g.nodes[*b].level, 20);
        }
        let top_partner = pairs.iter().find(|(a, _)| *a == 0).unwrap().1;
        assert_eq!(g.nodes[top_partner].level, 20);
    }

    #[test]
    fn oracle_agrees_with_generation() {
        let (rs, p) = setup();
        let oracle = orbit_quotient_oracle(&rs, &p).unwrap();
        assert_eq!(oracle.orbit_size, 1152);
        assert_eq!(oracle.m_weyl_order, 12);
        assert_eq!(oracle.dominant.len(), 96);
        assert!(oracle.dominant.contains(&Weight::top()));
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        assert_eq!(g.weights(), oracle.dominant);
    }

    #[test]
    fn concrete_graph_matches_symbolic_shape() {
        let (rs, p) = setup();
        let sym = generate(&rs, &p, Params::Symbolic).unwrap();
        for labels in [[1, 1, 1, 1], [2, 1, 3, 1]] {
            let g = generate(&rs, &p, Params::Concrete(labels)).unwrap();
            assert_eq!(g.len(), 96);
            assert_eq!(g.edges.len(), sym.edges.len());
            for (a, b) in g.nodes.iter().zip(&sym.nodes) {
                assert_eq!(a.symbolic_weight, b.weight);
                assert_eq!(a.weight, b.weight.eval(&labels));
                assert_eq!(a.level, b.level);
            }
            for (a, b) in g.edges.iter().zip(&sym.edges) {
                assert_eq!(
                    (a.src, a.dst, &a.root, a.arrow_level),
                    (b.src, b.dst, &b.root, b.arrow_level)
                );
            }
        }
    }

    #[test]
    fn invalid_labels_and_caps() {
        let (rs, p) = setup();
        assert_eq!(
            generate(&rs, &p, Params::Concrete([1, 0, 1, 1])),
            Err(MultipletError::InvalidLabels([1, 0, 1, 1]))
        );
        assert_eq!(
            generate_capped(&rs, &p, Params::Symbolic, 50),
            Err(MultipletError::NodeCap(50))
        );
    }

    #[test]
    fn discrete_series_candidates() {
        let (rs, p) = setup();
        let g = generate(&rs, &p, Params::Symbolic).unwrap();
        let pairs = ks_pairing(&g).unwrap();
        let plus0 = pairs.iter().find(|(a, _)| *a == 0).unwrap().1;
        assert!(parabolic::discrete_series_check(&rs, &g.nodes[plus0].weight, &p).unwrap());
        assert!(!parabolic::discrete_series_check(&rs, &g.top().weight, &p).unwrap());
        // only the bottom node passes
        let passing: Vec<_> = g
            .nodes
            .iter()
            .filter(|n| parabolic::discrete_series_check(&rs, &n.weight, &p).unwrap())
            .map(|n| n.id)
            .collect();
        assert_eq!(passing, vec![plus0]);
    }
}
