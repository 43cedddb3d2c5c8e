//! Property sweep over all ordered pairs of a small graph family.
//!
//! For every pair and every product with a labeling procedure the sweep
//! builds the product, plans and assigns a labeling from optimal factor
//! labelings, verifies it, and compares the construction against the
//! exact sparing number. Corona rows also carry the closed-form corona
//! count so that disagreements are visible.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{construct, optimal_labeling, ProductOp};
use crate::error::Result;
use crate::graph::{cartesian_product, disjoint_union, restrict_to_layer, Factor, Graph};
use crate::set_label::{verify_weak_iasi, Labeling};
use crate::sparing::{sparing_formula_corona, SparingOracle};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }
}

/// `P2, P3, P4, C3, C4, C5, K2, K3, K4, S3` (`S3` is the star `K_{1,3}`).
pub fn small_family() -> Vec<NamedGraph> {
    vec![
        NamedGraph::new("P2", Graph::path(2)),
        NamedGraph::new("P3", Graph::path(3)),
        NamedGraph::new("P4", Graph::path(4)),
        NamedGraph::new("C3", Graph::cycle(3)),
        NamedGraph::new("C4", Graph::cycle(4)),
        NamedGraph::new("C5", Graph::cycle(5)),
        NamedGraph::new("K2", Graph::complete(2)),
        NamedGraph::new("K3", Graph::complete(3)),
        NamedGraph::new("K4", Graph::complete(4)),
        NamedGraph::new("S3", Graph::star(3)),
    ]
}

/// A random connected bipartite graph on `n >= 2` vertices: a random
/// spanning tree across a random bipartition plus random cross edges.
pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let left_size = rng.gen_range(1..n);
    let mut side: Vec<bool> = (0..n).map(|v| v >= left_size).collect();
    // shuffle sides so vertex ids do not reveal the bipartition
    for k in (1..n).rev() {
        side.swap(k, rng.gen_range(0..=k));
    }
    let left: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    let right: Vec<usize> = (0..n).filter(|&v| side[v]).collect();

    let mut edges = Vec::new();
    let (mut tree_left, mut tree_right) = (vec![left[0]], Vec::new());
    let mut pending: Vec<usize> = left[1..].iter().chain(&right).copied().collect();
    // attach right vertices first so every left vertex has a partner
    pending.sort_by_key(|&v| !side[v]);
    for v in pending {
        if side[v] {
            let u = tree_left[rng.gen_range(0..tree_left.len())];
            edges.push((u, v));
            tree_right.push(v);
        } else {
            let u = tree_right[rng.gen_range(0..tree_right.len())];
            edges.push((u, v));
            tree_left.push(v);
        }
    }
    let density: f64 = rng.gen_range(0.0..0.5);
    for &u in &left {
        for &v in &right {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_raw_edges(n, edges)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub g1: String,
    pub g2: String,
    pub op: &'static str,
    pub n: usize,
    pub m: usize,
    pub weak_iasi: bool,
    pub non_singleton: usize,
    pub demoted: usize,
    pub construction_mono_edges: usize,
    /// `None` when the product exceeds the oracle bound.
    pub exact: Option<u64>,
    /// Cartesian rows: every layer restriction is still a weak IASI.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers_weak: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corona: Option<CoronaComparison>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoronaComparison {
    pub r1: u64,
    pub r2: u64,
    pub formula: u64,
    pub construction: u64,
    pub exact: Option<u64>,
}

impl CoronaComparison {
    pub fn construction_matches_formula(&self) -> bool {
        self.construction == self.formula
    }

    pub fn exact_within_formula(&self) -> Option<bool> {
        self.exact.map(|e| e <= self.formula)
    }

    pub fn is_discrepant(&self) -> bool {
        self.construction != self.formula || self.exact != Some(self.formula)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UnionRow {
    pub g1: String,
    pub g2: String,
    pub separate: u64,
    pub joint: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub rows: Vec<SweepRow>,
    pub unions: Vec<UnionRow>,
    pub random_bipartite: usize,
    pub random_bipartite_nonzero: usize,
    /// Construction, heredity, union or bipartite checks that failed.
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn corona_discrepancies(&self) -> impl Iterator<Item = (&SweepRow, &CoronaComparison)> {
        self.rows
            .iter()
            .filter_map(|r| r.corona.as_ref().map(|c| (r, c)))
            .filter(|(_, c)| c.is_discrepant())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let valid = self.rows.iter().filter(|r| r.weak_iasi).count();
        writeln!(out, "# Sweep summary (seed {})\n", self.seed).unwrap();
        writeln!(
            out,
            "constructions verified: {valid}/{}; unions additive: {}/{}; \
             random bipartite graphs with nonzero sparing number: {}/{}\n",
            self.rows.len(),
            self.unions.iter().filter(|u| u.separate == u.joint).count(),
            self.unions.len(),
            self.random_bipartite_nonzero,
            self.random_bipartite,
        )
        .unwrap();
        writeln!(
            out,
            "| product | n | m | weak IASI | non-singleton | demoted | mono (construction) | exact | layers |"
        )
        .unwrap();
        writeln!(out, "|---|---|---|---|---|---|---|---|---|").unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "| {} {} {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.g1,
                r.op,
                r.g2,
                r.n,
                r.m,
                if r.weak_iasi { "yes" } else { "NO" },
                r.non_singleton,
                r.demoted,
                r.construction_mono_edges,
                r.exact.map_or("-".to_string(), |e| e.to_string()),
                r.layers_weak
                    .map_or("-", |ok| if ok { "ok" } else { "FAIL" }),
            )
            .unwrap();
        }
        writeln!(out, "\n## Corona: closed form vs construction vs exact\n").unwrap();
        writeln!(out, "| corona | r1 | r2 | formula | construction | exact | note |").unwrap();
        writeln!(out, "|---|---|---|---|---|---|---|").unwrap();
        for (r, c) in self.corona_discrepancies() {
            let note = match c.exact {
                Some(e) if e < c.formula => "exact below formula",
                Some(e) if e > c.formula => "exact above formula",
                _ if c.construction != c.formula => "construction differs from formula",
                _ => "",
            };
            writeln!(
                out,
                "| {} ⊙ {} | {} | {} | {} | {} | {} | {} |",
                r.g1,
                r.g2,
                c.r1,
                c.r2,
                c.formula,
                c.construction,
                c.exact.map_or("-".to_string(), |e| e.to_string()),
                note
            )
            .unwrap();
        }
        if !self.failures.is_empty() {
            writeln!(out, "\n## Failures\n").unwrap();
            for f in &self.failures {
                writeln!(out, "- {f}").unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Oracle used for products; factor labelings use the same oracle.
    pub oracle: SparingOracle,
    pub seed: u64,
    pub random_bipartite: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            oracle: SparingOracle::new(32).expect("32 is within the oracle maximum"),
            seed: 0,
            random_bipartite: 50,
        }
    }
}

fn layers_stay_weak(g1: &Graph, g2: &Graph, labeling: &Labeling) -> Result<bool> {
    let (product, map) = cartesian_product(g1, g2)?;
    for (factor, count) in [(Factor::First, g2.n()), (Factor::Second, g1.n())] {
        for index in 0..count {
            let (layer, ids) = restrict_to_layer(&product, &map, factor, index)?;
            if !verify_weak_iasi(&layer, &labeling.restrict(&ids)?)?.passed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn run_sweep(family: &[NamedGraph], config: &SweepConfig) -> Result<SweepReport> {
    let oracle = &config.oracle;
    let mut factor_labelings = Vec::with_capacity(family.len());
    for f in family {
        factor_labelings.push(optimal_labeling(oracle, &f.graph)?.1);
    }

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (a, la) in family.iter().zip(&factor_labelings) {
        for (b, lb) in family.iter().zip(&factor_labelings) {
            for op in ProductOp::ALL_ROOTED_AT_ZERO {
                let built = construct(op, &a.graph, la, &b.graph, lb)?;
                let report = verify_weak_iasi(&built.graph, &built.labeling)?;
                let exact = if built.graph.n() <= oracle.bound() {
                    Some(oracle.solve(&built.graph)?.value)
                } else {
                    None
                };
                let mono = report.stats.mono_edges;
                let label = format!("{} {} {}", a.name, op.symbol(), b.name);
                if !report.passed {
                    failures.push(format!("{label}: labeling is not a weak IASI"));
                }
                if exact.is_some_and(|e| e > mono as u64) {
                    failures.push(format!("{label}: construction beats the exact optimum"));
                }
                let layers_weak = match op {
                    ProductOp::Cartesian => {
                        let ok = layers_stay_weak(&a.graph, &b.graph, &built.labeling)?;
                        if !ok {
                            failures.push(format!("{label}: a layer restriction is not weak"));
                        }
                        Some(ok)
                    }
                    _ => None,
                };
                let corona = match op {
                    ProductOp::Corona => {
                        let r1 = (a.graph.n() - la.non_singleton_vertices().len()) as u64;
                        let r2 = (b.graph.n() - lb.non_singleton_vertices().len()) as u64;
                        Some(CoronaComparison {
                            r1,
                            r2,
                            formula: sparing_formula_corona(
                                a.graph.n() as u64,
                                b.graph.m() as u64,
                                r1,
                                r2,
                            )?,
                            construction: mono as u64,
                            exact,
                        })
                    }
                    _ => None,
                };
                rows.push(SweepRow {
                    g1: a.name.clone(),
                    g2: b.name.clone(),
                    op: op.name(),
                    n: built.graph.n(),
                    m: built.graph.m(),
                    weak_iasi: report.passed,
                    non_singleton: built.plan.non_singleton.len(),
                    demoted: built.plan.demoted.len(),
                    construction_mono_edges: mono,
                    exact,
                    layers_weak,
                    corona,
                });
            }
        }
    }

    let mut unions = Vec::new();
    for a in family {
        for b in family {
            let separate = oracle.solve(&a.graph)?.value + oracle.solve(&b.graph)?.value;
            let joint = oracle.solve(&disjoint_union(&a.graph, &b.graph))?.value;
            if separate != joint {
                failures.push(format!("{} ∪ {}: {joint} != {separate}", a.name, b.name));
            }
            unions.push(UnionRow {
                g1: a.name.clone(),
                g2: b.name.clone(),
                separate,
                joint,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut nonzero = 0;
    for _ in 0..config.random_bipartite {
        let n = rng.gen_range(2..=16usize);
        let g = random_connected_bipartite(&mut rng, n);
        if oracle.solve(&g)?.value != 0 {
            nonzero += 1;
            failures.push(format!("bipartite graph {} has nonzero sparing number", g.to_json()));
        }
    }

    Ok(SweepReport {
        seed: config.seed,
        rows,
        unions,
        random_bipartite: config.random_bipartite,
        random_bipartite_nonzero: nonzero,
        failures,
    })
}
