//! Weak IASI constructions for graph products.
//!
//! Each planner starts from weak IASIs of the factors and decides which
//! product vertices get non-singleton labels ([`LabelPlan`]).
//! [`assign_concrete_sets`] then turns any independent plan into concrete
//! collision-free sets.

mod sidon;

pub use sidon::mian_chowla;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, corona, direct_product, lexicographic_product, rooted_product,
    strong_product, Bipartiteness, Graph,
};
use crate::set_label::{mono_indexed_stats, verify_weak_iasi, IntegerSet, Labeling};
use crate::sparing::SparingOracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    Corona,
    Rooted,
    /// Witness of the exact sparing search.
    Oracle,
}

/// Vertices designated for non-singleton labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelPlan {
    pub non_singleton: Vec<usize>,
    pub provenance: Provenance,
    /// Vertices the procedure marked non-singleton but that had to stay
    /// singleton because a neighbor was already non-singleton.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub demoted: Vec<usize>,
}

impl LabelPlan {
    pub fn new(mut non_singleton: Vec<usize>, provenance: Provenance) -> Self {
        non_singleton.sort_unstable();
        non_singleton.dedup();
        LabelPlan {
            non_singleton,
            provenance,
            demoted: Vec::new(),
        }
    }

    pub fn is_independent_in(&self, g: &Graph) -> bool {
        self.non_singleton.iter().all(|&v| v < g.n()) && g.is_independent(&self.non_singleton)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plan serializes")
    }
}

fn require_weak(g: &Graph, l: &Labeling, what: &str) -> Result<Vec<bool>> {
    let report = verify_weak_iasi(g, l)?;
    if !report.passed {
        return Err(Error::invalid(format!(
            "{what} labeling is not a weak IASI: {:?}",
            report.violations
        )));
    }
    Ok((0..g.n()).map(|v| !l.at(v).is_singleton()).collect())
}

/// Accepts `candidates` in ascending order, skipping any that would touch
/// an already accepted vertex.
fn accept_greedily(g: &Graph, mut candidates: Vec<usize>, provenance: Provenance) -> LabelPlan {
    candidates.sort_unstable();
    candidates.dedup();
    let mut taken = vec![false; g.n()];
    let mut plan = LabelPlan::new(Vec::new(), provenance);
    for v in candidates {
        if g.neighbors(v).iter().any(|&w| taken[w]) {
            plan.demoted.push(v);
        } else {
            taken[v] = true;
            plan.non_singleton.push(v);
        }
    }
    plan
}

/// Greedy maximal independent set in ascending vertex order.
fn greedy_anchors(g: &Graph) -> Vec<bool> {
    let mut anchor = vec![false; g.n()];
    for v in 0..g.n() {
        if g.neighbors(v).iter().all(|&w| !anchor[w]) {
            anchor[v] = true;
        }
    }
    anchor
}

/// Plan on `g1 □ g2` (row-major ids, see [`crate::graph::ProductVertexMap`]).
///
/// Copies of `g1` alternate between `l1`'s pattern and its inverse. The
/// alternation follows a 2-coloring of `g2` when one exists and the index
/// parity otherwise. In inverted copies, ends of mono-indexed edges of `l1`
/// stay singleton. Conflicts left by an odd `g2` are resolved by demotion.
pub fn plan_cartesian(g1: &Graph, l1: &Labeling, g2: &Graph) -> Result<LabelPlan> {
    let big = require_weak(g1, l1, "first factor")?;
    let (product, map) = cartesian_product(g1, g2)?;
    let on_mono_edge: Vec<bool> = (0..g1.n())
        .map(|i| !big[i] && g1.neighbors(i).iter().any(|&w| !big[w]))
        .collect();
    let layer_parity: Vec<u8> = match g2.bipartiteness() {
        Bipartiteness::Bipartite { coloring } => coloring,
        Bipartiteness::OddCycle(_) => (0..g2.n()).map(|j| (j % 2) as u8).collect(),
    };
    let mut candidates = Vec::new();
    for (j, &parity) in layer_parity.iter().enumerate() {
        for i in 0..g1.n() {
            let keep = if parity == 0 {
                big[i]
            } else {
                !big[i] && !on_mono_edge[i]
            };
            if keep {
                candidates.push(map.id(i, j));
            }
        }
    }
    Ok(accept_greedily(&product, candidates, Provenance::Cartesian))
}

/// Plan on `g1 × g2`: every copy of `g1` repeats `l1`'s pattern. No two
/// vertices of one copy are adjacent in a direct product, so nothing
/// conflicts.
pub fn plan_direct(g1: &Graph, l1: &Labeling, g2: &Graph) -> Result<LabelPlan> {
    let big = require_weak(g1, l1, "first factor")?;
    let (product, map) = direct_product(g1, g2)?;
    let candidates = (0..g2.n())
        .flat_map(|j| (0..g1.n()).filter(|&i| big[i]).map(move |i| (i, j)))
        .map(|(i, j)| map.id(i, j))
        .collect();
    Ok(accept_greedily(&product, candidates, Provenance::Direct))
}

/// Plan on `g1 ⊠ g2`.
///
/// Anchor copies of `g1` (a greedy maximal independent set of `g2`, taken
/// in index order) repeat `l1`'s pattern. The remaining copies, in index
/// order, get a non-singleton wherever the vertex has no non-singleton
/// neighbor so far.
pub fn plan_strong(g1: &Graph, l1: &Labeling, g2: &Graph) -> Result<LabelPlan> {
    let big = require_weak(g1, l1, "first factor")?;
    let (product, map) = strong_product(g1, g2)?;
    let anchor = greedy_anchors(g2);
    let mut taken = vec![false; product.n()];
    for j in (0..g2.n()).filter(|&j| anchor[j]) {
        for i in (0..g1.n()).filter(|&i| big[i]) {
            taken[map.id(i, j)] = true;
        }
    }
    for j in (0..g2.n()).filter(|&j| !anchor[j]) {
        for i in 0..g1.n() {
            let v = map.id(i, j);
            if product.neighbors(v).iter().all(|&w| !taken[w]) {
                taken[v] = true;
            }
        }
    }
    let chosen = (0..product.n()).filter(|&v| taken[v]).collect();
    Ok(LabelPlan::new(chosen, Provenance::Strong))
}

/// Plan on `g1 ∘ g2` (lexicographic). Copies of `g2` sitting on a greedy
/// maximal independent set of `g1` repeat `l2`'s pattern; all other copies
/// are fully singleton.
pub fn plan_lexicographic(g1: &Graph, g2: &Graph, l2: &Labeling) -> Result<LabelPlan> {
    let big = require_weak(g2, l2, "second factor")?;
    let (product, map) = lexicographic_product(g1, g2)?;
    let anchor = greedy_anchors(g1);
    let candidates = (0..g1.n())
        .filter(|&i| anchor[i])
        .flat_map(|i| (0..g2.n()).filter(|&k| big[k]).map(move |k| (i, k)))
        .map(|(i, k)| map.id(i, k))
        .collect();
    Ok(accept_greedily(&product, candidates, Provenance::Lexicographic))
}

/// Plan on `g1 ⊙ g2`. The copy of `g2` hanging off a non-singleton vertex
/// of `g1` is fully singleton; the other copies repeat `l2`'s pattern.
pub fn plan_corona(g1: &Graph, l1: &Labeling, g2: &Graph, l2: &Labeling) -> Result<LabelPlan> {
    let big1 = require_weak(g1, l1, "first factor")?;
    let big2 = require_weak(g2, l2, "second factor")?;
    let (product, map) = corona(g1, g2)?;
    let mut candidates: Vec<usize> = (0..g1.n()).filter(|&i| big1[i]).collect();
    for (i, copy) in map.copies.iter().enumerate() {
        if !big1[i] {
            candidates.extend((0..g2.n()).filter(|&k| big2[k]).map(|k| copy[k]));
        }
    }
    Ok(accept_greedily(&product, candidates, Provenance::Corona))
}

/// Plan on the rooted product. Every copy repeats `l2`'s pattern; the
/// merged vertex keeps `l1`'s kind unless `l1` is non-singleton there while
/// the root is singleton in `l2`, in which case it is singleton.
pub fn plan_rooted(
    g1: &Graph,
    l1: &Labeling,
    g2: &Graph,
    l2: &Labeling,
    root: usize,
) -> Result<LabelPlan> {
    let big1 = require_weak(g1, l1, "first factor")?;
    let big2 = require_weak(g2, l2, "second factor")?;
    let (product, map) = rooted_product(g1, g2, root)?;
    let mut candidates = Vec::new();
    for (i, copy) in map.copies.iter().enumerate() {
        for k in (0..g2.n()).filter(|&k| big2[k]) {
            if k != root || big1[i] {
                candidates.push(copy[k]);
            }
        }
    }
    Ok(accept_greedily(&product, candidates, Provenance::Rooted))
}

/// Concrete labeling realizing `plan` on `g`.
///
/// Singleton vertices take distinct Mian–Chowla terms in vertex order, so
/// singleton–singleton edge sums never collide. Non-singleton vertex number
/// `k` (in vertex order) takes an interval of `sizes[v]` (default 2)
/// consecutive integers starting at `2S + 1 + k·H`, where `S` is the
/// largest singleton value and `H = S + max size + 1`. Every edge label
/// `{s} + B` then lies inside the block of its non-singleton end and has
/// a distinct minimum there.
pub fn assign_concrete_sets(
    g: &Graph,
    plan: &LabelPlan,
    sizes: Option<&BTreeMap<usize, usize>>,
) -> Result<Labeling> {
    if !plan.is_independent_in(g) {
        return Err(Error::invalid(
            "plan's non-singleton vertices are not independent in the graph",
        ));
    }
    let mut big = vec![false; g.n()];
    for &v in &plan.non_singleton {
        big[v] = true;
    }
    let size_of = |v: usize| sizes.and_then(|s| s.get(&v)).copied().unwrap_or(2);
    if let Some(sizes) = sizes {
        for (&v, &size) in sizes {
            if v >= g.n() || !big[v] {
                return Err(Error::invalid(format!(
                    "size given for vertex {v}, which is not planned as non-singleton"
                )));
            }
            if size < 2 {
                return Err(Error::invalid(format!(
                    "non-singleton size for vertex {v} must be at least 2, got {size}"
                )));
            }
        }
    }

    let singles = mian_chowla(g.n() - plan.non_singleton.len());
    let top = singles.last().copied().unwrap_or(0);
    let widest = plan.non_singleton.iter().map(|&v| size_of(v)).max().unwrap_or(2) as u64;
    let stride = top + widest + 1;

    let mut next_single = singles.into_iter();
    let mut block = 0u64;
    let sets = (0..g.n())
        .map(|v| {
            if big[v] {
                let start = 2 * top + 1 + block * stride;
                block += 1;
                IntegerSet::interval(start, size_of(v))
            } else {
                IntegerSet::singleton(next_single.next().expect("one term per singleton"))
            }
        })
        .collect();
    Ok(Labeling::new(sets))
}

/// A weak IASI of `g` with the fewest mono-indexed edges, built from the
/// exact sparing witness.
pub fn optimal_labeling(oracle: &SparingOracle, g: &Graph) -> Result<(LabelPlan, Labeling)> {
    let result = oracle.solve(g)?;
    let plan = LabelPlan::new(result.witness, Provenance::Oracle);
    let labeling = assign_concrete_sets(g, &plan, None)?;
    Ok((plan, labeling))
}

/// The product operations that have a labeling procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOp {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    Corona,
    Rooted { root: usize },
}

impl ProductOp {
    pub const ALL_ROOTED_AT_ZERO: [ProductOp; 6] = [
        ProductOp::Cartesian,
        ProductOp::Direct,
        ProductOp::Strong,
        ProductOp::Lexicographic,
        ProductOp::Corona,
        ProductOp::Rooted { root: 0 },
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProductOp::Cartesian => "cartesian",
            ProductOp::Direct => "direct",
            ProductOp::Strong => "strong",
            ProductOp::Lexicographic => "lex",
            ProductOp::Corona => "corona",
            ProductOp::Rooted { .. } => "rooted",
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            ProductOp::Cartesian => "□",
            ProductOp::Direct => "×",
            ProductOp::Strong => "⊠",
            ProductOp::Lexicographic => "∘",
            ProductOp::Corona => "⊙",
            ProductOp::Rooted { .. } => "∘r",
        }
    }

    pub fn build(&self, g1: &Graph, g2: &Graph) -> Result<Graph> {
        Ok(match *self {
            ProductOp::Cartesian => cartesian_product(g1, g2)?.0,
            ProductOp::Direct => direct_product(g1, g2)?.0,
            ProductOp::Strong => strong_product(g1, g2)?.0,
            ProductOp::Lexicographic => lexicographic_product(g1, g2)?.0,
            ProductOp::Corona => corona(g1, g2)?.0,
            ProductOp::Rooted { root } => rooted_product(g1, g2, root)?.0,
        })
    }

    pub fn plan(&self, g1: &Graph, l1: &Labeling, g2: &Graph, l2: &Labeling) -> Result<LabelPlan> {
        match *self {
            ProductOp::Cartesian => plan_cartesian(g1, l1, g2),
            ProductOp::Direct => plan_direct(g1, l1, g2),
            ProductOp::Strong => plan_strong(g1, l1, g2),
            ProductOp::Lexicographic => plan_lexicographic(g1, g2, l2),
            ProductOp::Corona => plan_corona(g1, l1, g2, l2),
            ProductOp::Rooted { root } => plan_rooted(g1, l1, g2, l2, root),
        }
    }
}

/// Product graph, plan and concrete labeling for one operation.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub plan: LabelPlan,
    pub labeling: Labeling,
}

impl Construction {
    pub fn mono_edges(&self) -> usize {
        mono_indexed_stats(&self.graph, &self.labeling)
            .expect("construction labels every vertex")
            .mono_edges
    }
}

pub fn construct(
    op: ProductOp,
    g1: &Graph,
    l1: &Labeling,
    g2: &Graph,
    l2: &Labeling,
) -> Result<Construction> {
    let graph = op.build(g1, g2)?;
    let plan = op.plan(g1, l1, g2, l2)?;
    let labeling = assign_concrete_sets(&graph, &plan, None)?;
    Ok(Construction {
        graph,
        plan,
        labeling,
    })
}

/// Mono-indexed edge count of `plan` on `g`, without concrete sets.
pub fn planned_mono_edges(g: &Graph, plan: &LabelPlan) -> u64 {
    crate::sparing::uncovered_edges(g, &plan.non_singleton)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, Factor, ProductVertexMap};
    use crate::set_label::verify_weak_iasi;
    use crate::sparing::{sparing_exact, sparing_formula_corona};

    fn labeling(sets: &[&[u64]]) -> Labeling {
        Labeling::from_slices(sets).unwrap()
    }

    fn all_singletons(n: usize) -> Labeling {
        Labeling::new(mian_chowla(n).into_iter().map(IntegerSet::singleton).collect())
    }

    fn assert_weak(g: &Graph, plan: &LabelPlan) -> Labeling {
        assert!(plan.is_independent_in(g), "{plan:?}");
        let l = assign_concrete_sets(g, plan, None).unwrap();
        let report = verify_weak_iasi(g, &l).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(l.non_singleton_vertices(), plan.non_singleton);
        l
    }

    #[test]
    fn cartesian_p2_p2_alternates() {
        let (p2, l1) = (Graph::path(2), labeling(&[&[1], &[2, 3]]));
        let plan = plan_cartesian(&p2, &l1, &p2).unwrap();
        let (c4, _) = cartesian_product(&p2, &p2).unwrap();
        // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3; layer 0 copies, layer 1 inverts
        assert_eq!(plan.non_singleton, vec![1, 2]);
        assert!(plan.demoted.is_empty());
        assert_eq!(planned_mono_edges(&c4, &plan), 0);
        assert_weak(&c4, &plan);
    }

    #[test]
    fn cartesian_keeps_mono_edge_ends_singleton() {
        let k3 = Graph::complete(3);
        let l1 = labeling(&[&[1], &[2], &[3, 7]]);
        let p2 = Graph::path(2);
        let plan = plan_cartesian(&k3, &l1, &p2).unwrap();
        let map = ProductVertexMap::new(3, 2);
        for j in 0..2 {
            assert!(!plan.non_singleton.contains(&map.id(0, j)));
            assert!(!plan.non_singleton.contains(&map.id(1, j)));
        }
        let (g, _) = cartesian_product(&k3, &p2).unwrap();
        assert_weak(&g, &plan);
    }

    #[test]
    fn cartesian_all_singleton_factor() {
        let p3 = Graph::path(3);
        let plan = plan_cartesian(&p3, &all_singletons(3), &Graph::cycle(3)).unwrap();
        // every vertex of P3 ends a mono edge, so inverted layers stay singleton
        assert!(plan.non_singleton.is_empty());
        let (g, _) = cartesian_product(&p3, &Graph::cycle(3)).unwrap();
        assert_weak(&g, &plan);
    }

    #[test]
    fn cartesian_odd_second_factor_demotes() {
        let (p2, l1) = (Graph::path(2), labeling(&[&[1], &[2, 3]]));
        let c3 = Graph::cycle(3);
        let plan = plan_cartesian(&p2, &l1, &c3).unwrap();
        let (g, _) = cartesian_product(&p2, &c3).unwrap();
        assert!(!plan.demoted.is_empty());
        assert_weak(&g, &plan);
    }

    #[test]
    fn direct_copies_pattern() {
        let k2 = Graph::complete(2);
        let plan = plan_direct(&k2, &labeling(&[&[1], &[2, 3]]), &k2).unwrap();
        let (g, _) = direct_product(&k2, &k2).unwrap();
        assert_eq!(plan.non_singleton, vec![2, 3]);
        // one per component of 2K2
        assert!(g.has_edge(0, 3) && g.has_edge(1, 2));
        assert_weak(&g, &plan);

        let c3 = Graph::cycle(3);
        let plan = plan_direct(&c3, &labeling(&[&[1], &[2], &[3, 7]]), &k2).unwrap();
        let (c6, _) = direct_product(&c3, &k2).unwrap();
        assert_eq!(plan.non_singleton.len(), 2);
        let (a, b) = (plan.non_singleton[0], plan.non_singleton[1]);
        assert!(!c6.has_edge(a, b));
        assert_weak(&c6, &plan);

        let plan = plan_direct(&c3, &all_singletons(3), &k2).unwrap();
        assert!(plan.non_singleton.is_empty());
    }

    #[test]
    fn strong_k2_k2_gives_k4_optimum() {
        let k2 = Graph::complete(2);
        let plan = plan_strong(&k2, &labeling(&[&[1], &[2, 3]]), &k2).unwrap();
        let (k4, _) = strong_product(&k2, &k2).unwrap();
        assert_eq!(plan.non_singleton.len(), 1);
        assert_eq!(planned_mono_edges(&k4, &plan), 3);
        assert_weak(&k4, &plan);

        let p3 = Graph::path(3);
        let plan = plan_strong(&p3, &labeling(&[&[1], &[2, 3], &[4]]), &k2).unwrap();
        let (g, _) = strong_product(&p3, &k2).unwrap();
        assert_weak(&g, &plan);
    }

    #[test]
    fn lexicographic_plans() {
        let k2 = Graph::complete(2);
        let l2 = labeling(&[&[1], &[2, 3]]);
        let plan = plan_lexicographic(&k2, &k2, &l2).unwrap();
        let (k4, _) = lexicographic_product(&k2, &k2).unwrap();
        assert_eq!(plan.non_singleton.len(), 1);
        assert_eq!(
            planned_mono_edges(&k4, &plan),
            sparing_exact(&k4).unwrap().value
        );
        assert_weak(&k4, &plan);

        let p3 = Graph::path(3);
        let plan = plan_lexicographic(&p3, &k2, &l2).unwrap();
        // copies of K2 at path ends 0 and 2 carry the pattern
        assert_eq!(plan.non_singleton, vec![1, 5]);
        let (g, _) = lexicographic_product(&p3, &k2).unwrap();
        assert_weak(&g, &plan);

        let plan = plan_lexicographic(&p3, &k2, &all_singletons(2)).unwrap();
        assert!(plan.non_singleton.is_empty());
    }

    #[test]
    fn corona_c4_k2() {
        let c4 = Graph::cycle(4);
        let l1 = labeling(&[&[1], &[10, 11], &[2], &[20, 22]]);
        let k2 = Graph::complete(2);
        let l2 = labeling(&[&[1], &[2, 3]]);
        let plan = plan_corona(&c4, &l1, &k2, &l2).unwrap();
        let (g, _) = corona(&c4, &k2).unwrap();
        let l = assert_weak(&g, &plan);
        // the construction leaves one mono join edge in each of the two
        // patterned copies; the closed form claims 6 for r1 = 2, r2 = 1
        assert_eq!(mono_indexed_stats(&g, &l).unwrap().mono_edges, 4);
        assert_eq!(sparing_formula_corona(4, 1, 2, 1).unwrap(), 6);
        assert_eq!(sparing_exact(&g).unwrap().value, 4);
    }

    #[test]
    fn corona_with_one_uniform_hub() {
        let c4 = Graph::cycle(4);
        let k2 = Graph::complete(2);
        let l2 = labeling(&[&[1], &[2, 3]]);
        let plan = plan_corona(&c4, &all_singletons(4), &k2, &l2).unwrap();
        let (g, _) = corona(&c4, &k2).unwrap();
        // one non-singleton per copy; every copy carries l2's pattern
        assert_eq!(plan.non_singleton.len(), 4);
        assert_weak(&g, &plan);
    }

    #[test]
    fn rooted_plans() {
        let k2 = Graph::complete(2);
        let l = labeling(&[&[1], &[2, 3]]);
        // every copy repeats l's pattern, so the merged vertex and its
        // pendant cannot alternate: one edge of P4 stays mono-indexed
        for root in 0..2 {
            let plan = plan_rooted(&k2, &l, &k2, &l, root).unwrap();
            let (p4, _) = rooted_product(&k2, &k2, root).unwrap();
            assert_eq!(planned_mono_edges(&p4, &plan), 1);
            assert_weak(&p4, &plan);
        }

        let c3 = Graph::cycle(3);
        let l1 = labeling(&[&[1], &[2], &[3, 7]]);
        let p2 = Graph::path(2);
        for root in 0..2 {
            let plan = plan_rooted(&c3, &l1, &p2, &l, root).unwrap();
            let (g, _) = rooted_product(&c3, &p2, root).unwrap();
            assert!(plan.demoted.is_empty());
            assert_weak(&g, &plan);
        }

        let plan = plan_rooted(&c3, &all_singletons(3), &p2, &all_singletons(2), 0).unwrap();
        assert!(plan.non_singleton.is_empty());
    }

    #[test]
    fn planners_reject_invalid_factor_labelings() {
        let p2 = Graph::path(2);
        let bad = labeling(&[&[1, 2], &[5, 9]]);
        let good = labeling(&[&[1], &[2, 3]]);
        assert!(plan_cartesian(&p2, &bad, &p2).is_err());
        assert!(plan_direct(&p2, &bad, &p2).is_err());
        assert!(plan_strong(&p2, &bad, &p2).is_err());
        assert!(plan_lexicographic(&p2, &p2, &bad).is_err());
        assert!(plan_corona(&p2, &good, &p2, &bad).is_err());
        assert!(plan_rooted(&p2, &bad, &p2, &good, 0).is_err());
        assert!(plan_rooted(&p2, &good, &p2, &good, 2).is_err());
    }

    #[test]
    fn concrete_sets() {
        let c4 = Graph::cycle(4);
        let plan = LabelPlan::new(vec![1, 3], Provenance::Oracle);
        let l = assert_weak(&c4, &plan);
        assert_eq!(mono_indexed_stats(&c4, &l).unwrap().mono_edges, 0);

        let k4 = Graph::complete(4);
        let plan = LabelPlan::new(vec![0], Provenance::Oracle);
        let l = assert_weak(&k4, &plan);
        assert_eq!(mono_indexed_stats(&k4, &l).unwrap().mono_edges, 3);

        let plan = LabelPlan::new(vec![0, 1], Provenance::Oracle);
        assert!(assign_concrete_sets(&k4, &plan, None).is_err());
    }

    #[test]
    fn concrete_sizes() {
        let c4 = Graph::cycle(4);
        let plan = LabelPlan::new(vec![0, 2], Provenance::Oracle);
        let sizes = BTreeMap::from([(0, 5), (2, 3)]);
        let l = assign_concrete_sets(&c4, &plan, Some(&sizes)).unwrap();
        assert_eq!(l.get(0).unwrap().len(), 5);
        assert_eq!(l.get(2).unwrap().len(), 3);
        assert!(verify_weak_iasi(&c4, &l).unwrap().passed);
        assert!(assign_concrete_sets(&c4, &plan, Some(&BTreeMap::from([(0, 1)]))).is_err());
        assert!(assign_concrete_sets(&c4, &plan, Some(&BTreeMap::from([(1, 3)]))).is_err());
    }

    #[test]
    fn layers_of_cartesian_constructions_stay_weak() {
        let c4 = Graph::cycle(4);
        let k2 = Graph::complete(2);
        let oracle = SparingOracle::default();
        let (_, l1) = optimal_labeling(&oracle, &c4).unwrap();
        let (_, l2) = optimal_labeling(&oracle, &k2).unwrap();
        let built = construct(ProductOp::Cartesian, &c4, &l1, &k2, &l2).unwrap();
        let (g, map) = cartesian_product(&c4, &k2).unwrap();
        assert_eq!(g, built.graph);
        for j in 0..2 {
            let (layer, ids) = crate::graph::restrict_to_layer(&g, &map, Factor::First, j).unwrap();
            let restricted = built.labeling.restrict(&ids).unwrap();
            assert!(verify_weak_iasi(&layer, &restricted).unwrap().passed);
        }
    }

    #[test]
    fn plan_json() {
        let plan = LabelPlan::new(vec![3, 1], Provenance::Cartesian);
        assert_eq!(
            plan.to_json_value().to_string(),
            r#"{"non_singleton":[1,3],"provenance":"cartesian"}"#
        );
    }
}
