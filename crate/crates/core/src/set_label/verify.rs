use std::collections::BTreeMap;

use serde::Serialize;

use super::{sumset, IntegerSet, Labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A single reason a labeling is not an IASI / weak IASI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Every vertex sharing `label`.
    DuplicateVertexLabel { vertices: Vec<usize>, label: IntegerSet },
    /// Every edge whose induced label is `label`.
    DuplicateEdgeLabel { edges: Vec<[usize; 2]>, label: IntegerSet },
    /// `|f+(uv)|` differs from `max(|f(u)|, |f(v)|)`.
    WeakConditionFailed {
        edge: [usize; 2],
        cardinality: usize,
        expected: usize,
    },
    /// Both ends of the edge carry non-singleton labels.
    AdjacentNonSingletons { edge: [usize; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoStats {
    /// Vertices whose label is a singleton.
    pub mono_vertices: usize,
    pub mono_edges: usize,
    pub mono_edge_list: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub stats: MonoStats,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>, stats: MonoStats) -> Self {
        VerificationReport {
            passed: violations.is_empty(),
            violations,
            stats,
        }
    }
}

/// `f+(uv) = f(u) + f(v)` for an edge `uv`.
pub fn induced_edge_label(g: &Graph, l: &Labeling, u: usize, v: usize) -> Result<IntegerSet> {
    if !g.has_edge(u, v) {
        return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
    }
    match (l.get(u), l.get(v)) {
        (Some(a), Some(b)) => Ok(sumset(a, b)),
        _ => Err(Error::invalid(format!("edge ({u}, {v}) has an unlabeled end"))),
    }
}

fn edge_labels(g: &Graph, l: &Labeling) -> Vec<IntegerSet> {
    g.edges()
        .iter()
        .map(|&(u, v)| sumset(l.at(u), l.at(v)))
        .collect()
}

fn stats(g: &Graph, l: &Labeling, edge_labels: &[IntegerSet]) -> MonoStats {
    let mono_edge_list: Vec<[usize; 2]> = g
        .edges()
        .iter()
        .zip(edge_labels)
        .filter(|(_, s)| s.is_singleton())
        .map(|(&(u, v), _)| [u, v])
        .collect();
    MonoStats {
        mono_vertices: (0..g.n()).filter(|&v| l.at(v).is_singleton()).count(),
        mono_edges: mono_edge_list.len(),
        mono_edge_list,
    }
}

fn injectivity_violations(g: &Graph, l: &Labeling, edge_labels: &[IntegerSet]) -> Vec<Violation> {
    let mut by_vertex_label: BTreeMap<&IntegerSet, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_vertex_label.entry(l.at(v)).or_default().push(v);
    }
    let mut by_edge_label: BTreeMap<&IntegerSet, Vec<[usize; 2]>> = BTreeMap::new();
    for (&(u, v), s) in g.edges().iter().zip(edge_labels) {
        by_edge_label.entry(s).or_default().push([u, v]);
    }

    let mut violations: Vec<Violation> = by_vertex_label
        .into_iter()
        .filter(|(_, vs)| vs.len() > 1)
        .map(|(label, vertices)| Violation::DuplicateVertexLabel {
            vertices,
            label: label.clone(),
        })
        .collect();
    violations.extend(
        by_edge_label
            .into_iter()
            .filter(|(_, es)| es.len() > 1)
            .map(|(label, edges)| Violation::DuplicateEdgeLabel {
                edges,
                label: label.clone(),
            }),
    );
    violations
}

/// Checks that both the vertex labels and the induced edge labels are
/// pairwise distinct.
pub fn verify_iasi(g: &Graph, l: &Labeling) -> Result<VerificationReport> {
    l.check_total(g)?;
    let labels = edge_labels(g, l);
    let violations = injectivity_violations(g, l, &labels);
    Ok(VerificationReport::from_violations(violations, stats(g, l, &labels)))
}

/// IASI check plus `|f+(uv)| = max(|f(u)|, |f(v)|)` on every edge. Edges
/// with two non-singleton ends are additionally listed as
/// [`Violation::AdjacentNonSingletons`].
pub fn verify_weak_iasi(g: &Graph, l: &Labeling) -> Result<VerificationReport> {
    l.check_total(g)?;
    let labels = edge_labels(g, l);
    let mut violations = injectivity_violations(g, l, &labels);
    for (&(u, v), s) in g.edges().iter().zip(&labels) {
        let (a, b) = (l.at(u), l.at(v));
        let expected = a.len().max(b.len());
        if s.len() != expected {
            violations.push(Violation::WeakConditionFailed {
                edge: [u, v],
                cardinality: s.len(),
                expected,
            });
        }
    }
    for &(u, v) in g.edges() {
        if !l.at(u).is_singleton() && !l.at(v).is_singleton() {
            violations.push(Violation::AdjacentNonSingletons { edge: [u, v] });
        }
    }
    Ok(VerificationReport::from_violations(violations, stats(g, l, &labels)))
}

/// Mono-indexed vertex and edge counts of a labeling.
pub fn mono_indexed_stats(g: &Graph, l: &Labeling) -> Result<MonoStats> {
    l.check_total(g)?;
    Ok(stats(g, l, &edge_labels(g, l)))
}

/// True when every induced edge label has exactly `k` elements.
pub fn is_k_uniform(g: &Graph, l: &Labeling, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::invalid("uniformity k must be positive"));
    }
    l.check_total(g)?;
    Ok(edge_labels(g, l).iter().all(|s| s.len() == k))
}
