use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::IntegerSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of a set-label to each vertex.
///
/// A labeling is only checked against a graph when it is used with one;
/// injectivity is never enforced here, the verifiers report it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labeling {
    labels: BTreeMap<usize, IntegerSet>,
}

/// Wire format: `{"labels": {"<vertex-id>": [ints...], ...}}`.
#[derive(Serialize, Deserialize)]
struct LabelingJson {
    labels: BTreeMap<String, IntegerSet>,
}

impl Labeling {
    /// Vertex `v` gets `sets[v]`.
    pub fn new(sets: Vec<IntegerSet>) -> Self {
        Labeling {
            labels: sets.into_iter().enumerate().collect(),
        }
    }

    pub fn from_map(labels: BTreeMap<usize, IntegerSet>) -> Self {
        Labeling { labels }
    }

    /// Convenience for tests and examples: `sets[v]` as plain slices.
    pub fn from_slices(sets: &[&[u64]]) -> Result<Self> {
        sets.iter()
            .map(|s| IntegerSet::new(s.iter().copied()))
            .collect::<Result<Vec<_>>>()
            .map(Labeling::new)
    }

    pub fn get(&self, v: usize) -> Option<&IntegerSet> {
        self.labels.get(&v)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &IntegerSet)> {
        self.labels.iter().map(|(&v, s)| (v, s))
    }

    /// Fails unless the labeled vertices are exactly `0..g.n()`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if let Some(v) = (0..g.n()).find(|v| !self.labels.contains_key(v)) {
            return Err(Error::invalid(format!("vertex {v} has no label")));
        }
        if let Some(&v) = self.labels.keys().find(|&&v| v >= g.n()) {
            return Err(Error::invalid(format!(
                "label given for vertex {v}, but the graph has {} vertices",
                g.n()
            )));
        }
        Ok(())
    }

    /// Label of `v`; only valid after [`Labeling::check_total`].
    pub(crate) fn at(&self, v: usize) -> &IntegerSet {
        &self.labels[&v]
    }

    /// Vertices with a non-singleton label, ascending.
    pub fn non_singleton_vertices(&self) -> Vec<usize> {
        self.iter()
            .filter(|(_, s)| !s.is_singleton())
            .map(|(v, _)| v)
            .collect()
    }

    /// Pulls back along `vertices`: local vertex `k` gets the label of
    /// `vertices[k]`.
    pub fn restrict(&self, vertices: &[usize]) -> Result<Labeling> {
        vertices
            .iter()
            .map(|v| {
                self.get(*v)
                    .cloned()
                    .ok_or_else(|| Error::invalid(format!("vertex {v} has no label")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Labeling::new)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let labels: serde_json::Map<String, serde_json::Value> = self
            .labels
            .iter()
            .map(|(v, s)| (v.to_string(), serde_json::json!(s.elements())))
            .collect();
        serde_json::json!({ "labels": labels })
    }

    pub fn from_json(text: &str) -> Result<Labeling> {
        let raw: LabelingJson = serde_json::from_str(text)?;
        let mut labels = BTreeMap::new();
        for (key, set) in raw.labels {
            let v: usize = key
                .parse()
                .map_err(|_| Error::Parse(format!("vertex id {key:?} is not an integer")))?;
            if labels.insert(v, set).is_some() {
                return Err(Error::Parse(format!("vertex {v} labeled twice")));
            }
        }
        Ok(Labeling { labels })
    }
}
