use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Row-major coordinates of a grid product: vertex `(i, j)` has id `i * n2 + j`,
/// where `i` ranges over the first factor and `j` over the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    n1: usize,
    n2: usize,
}

impl ProductVertexMap {
    pub fn new(n1: usize, n2: usize) -> Self {
        ProductVertexMap { n1, n2 }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn id(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n1 && j < self.n2);
        i * self.n2 + j
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        debug_assert!(id < self.len());
        (id / self.n2, id % self.n2)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let pairs: Vec<[usize; 2]> = (0..self.len())
            .map(|id| {
                let (i, j) = self.coords(id);
                [i, j]
            })
            .collect();
        serde_json::json!({ "kind": "product", "n1": self.n1, "n2": self.n2, "pairs": pairs })
    }
}

/// Vertex layout of `g1 ⊙ g2`: the vertices of `g1` keep their ids and copy
/// `i` of `g2` is attached to vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoronaVertexMap {
    pub n1: usize,
    pub n2: usize,
    /// `copies[i][k]` is the id of vertex `k` of the copy attached to `i`.
    pub copies: Vec<Vec<usize>>,
}

impl CoronaVertexMap {
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("corona map serializes");
        value["kind"] = "corona".into();
        value
    }
}

/// Vertex layout of a rooted product. Vertex `i` of `g1` is identified with
/// the root of copy `i`; the remaining copy vertices follow in blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedVertexMap {
    pub n1: usize,
    pub n2: usize,
    pub root: usize,
    /// `copies[i][k]` is the id of vertex `k` of copy `i`; `copies[i][root] == i`.
    pub copies: Vec<Vec<usize>>,
}

impl RootedVertexMap {
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("rooted map serializes");
        value["kind"] = "rooted".into();
        value
    }
}

/// Which factor a layer is a copy of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

fn require_nonempty(g1: &Graph, g2: &Graph, op: &str) -> Result<()> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::invalid(format!("{op} needs nonempty factors")));
    }
    Ok(())
}

fn cartesian_edges(g1: &Graph, g2: &Graph, map: ProductVertexMap) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(g1.n() * g2.m() + g2.n() * g1.m());
    for i in 0..g1.n() {
        for &(a, b) in g2.edges() {
            edges.push((map.id(i, a), map.id(i, b)));
        }
    }
    for j in 0..g2.n() {
        for &(a, b) in g1.edges() {
            edges.push((map.id(a, j), map.id(b, j)));
        }
    }
    edges
}

fn direct_edges(g1: &Graph, g2: &Graph, map: ProductVertexMap) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(2 * g1.m() * g2.m());
    for &(a, b) in g1.edges() {
        for &(c, d) in g2.edges() {
            edges.push((map.id(a, c), map.id(b, d)));
            edges.push((map.id(a, d), map.id(b, c)));
        }
    }
    edges
}

/// `(u1, u2) ~ (v1, v2)` iff `u1 = v1` and `u2 ~ v2`, or `u2 = v2` and `u1 ~ v1`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductVertexMap)> {
    require_nonempty(g1, g2, "cartesian product")?;
    let map = ProductVertexMap::new(g1.n(), g2.n());
    let g = Graph::from_raw_edges(map.len(), cartesian_edges(g1, g2, map));
    Ok((g, map))
}

/// `(u, v) ~ (u', v')` iff `u ~ u'` and `v ~ v'`. The result may be disconnected.
pub fn direct_product(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductVertexMap)> {
    require_nonempty(g1, g2, "direct product")?;
    let map = ProductVertexMap::new(g1.n(), g2.n());
    let g = Graph::from_raw_edges(map.len(), direct_edges(g1, g2, map));
    Ok((g, map))
}

/// Union of the Cartesian and direct edge sets on the same vertex grid.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductVertexMap)> {
    require_nonempty(g1, g2, "strong product")?;
    let map = ProductVertexMap::new(g1.n(), g2.n());
    let mut edges = cartesian_edges(g1, g2, map);
    edges.extend(direct_edges(g1, g2, map));
    Ok((Graph::from_raw_edges(map.len(), edges), map))
}

/// `(u, v) ~ (u', v')` iff `u ~ u'`, or `u = u'` and `v ~ v'`.
pub fn lexicographic_product(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductVertexMap)> {
    require_nonempty(g1, g2, "lexicographic product")?;
    let map = ProductVertexMap::new(g1.n(), g2.n());
    let (n2, m2) = (g2.n(), g2.m());
    let mut edges = Vec::with_capacity(n2 * n2 * g1.m() + g1.n() * m2);
    for &(a, b) in g1.edges() {
        for x in 0..n2 {
            for y in 0..n2 {
                edges.push((map.id(a, x), map.id(b, y)));
            }
        }
    }
    for i in 0..g1.n() {
        for &(c, d) in g2.edges() {
            edges.push((map.id(i, c), map.id(i, d)));
        }
    }
    Ok((Graph::from_raw_edges(map.len(), edges), map))
}

/// One copy of `g1` plus one copy of `g2` per vertex of `g1`, each copy fully
/// joined to its vertex.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<(Graph, CoronaVertexMap)> {
    require_nonempty(g1, g2, "corona")?;
    let (n1, n2) = (g1.n(), g2.n());
    let copies: Vec<Vec<usize>> = (0..n1)
        .map(|i| (0..n2).map(|k| n1 + i * n2 + k).collect())
        .collect();
    let mut edges = g1.edges().to_vec();
    for (i, copy) in copies.iter().enumerate() {
        edges.extend(g2.edges().iter().map(|&(a, b)| (copy[a], copy[b])));
        edges.extend(copy.iter().map(|&w| (i, w)));
    }
    let g = Graph::from_raw_edges(n1 * (1 + n2), edges);
    Ok((g, CoronaVertexMap { n1, n2, copies }))
}

/// One copy of `g2` per vertex `i` of `g1`, with the copy's `root`
/// identified with `i`.
pub fn rooted_product(g1: &Graph, g2: &Graph, root: usize) -> Result<(Graph, RootedVertexMap)> {
    let (n1, n2) = (g1.n(), g2.n());
    if root >= n2 {
        return Err(Error::invalid(format!(
            "root {root} is not a vertex of a {n2}-vertex graph"
        )));
    }
    let copies: Vec<Vec<usize>> = (0..n1)
        .map(|i| {
            (0..n2)
                .map(|k| match k.cmp(&root) {
                    std::cmp::Ordering::Equal => i,
                    std::cmp::Ordering::Less => n1 + i * (n2 - 1) + k,
                    std::cmp::Ordering::Greater => n1 + i * (n2 - 1) + k - 1,
                })
                .collect()
        })
        .collect();
    let mut edges = g1.edges().to_vec();
    for copy in &copies {
        edges.extend(g2.edges().iter().map(|&(a, b)| (copy[a], copy[b])));
    }
    let g = Graph::from_raw_edges(n1 + n1 * (n2 - 1), edges);
    Ok((g, RootedVertexMap { n1, n2, root, copies }))
}

/// Vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.n();
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_normalized(g1.n() + g2.n(), edges)
}

/// The layer of a grid product that copies one factor.
///
/// With `Factor::First` the layer is `{(i, index) : i}` (a copy of the first
/// factor, `index` ranging over the second); with `Factor::Second` it is
/// `{(index, j) : j}`. Returns the induced subgraph and, for each local
/// vertex, its id in `product`.
pub fn restrict_to_layer(
    product: &Graph,
    map: &ProductVertexMap,
    factor: Factor,
    index: usize,
) -> Result<(Graph, Vec<usize>)> {
    if product.n() != map.len() {
        return Err(Error::invalid(format!(
            "map describes {} vertices but the graph has {}",
            map.len(),
            product.n()
        )));
    }
    let vertices: Vec<usize> = match factor {
        Factor::First => {
            if index >= map.n2() {
                return Err(Error::invalid(format!(
                    "layer index {index} outside 0..{}",
                    map.n2()
                )));
            }
            (0..map.n1()).map(|i| map.id(i, index)).collect()
        }
        Factor::Second => {
            if index >= map.n1() {
                return Err(Error::invalid(format!(
                    "layer index {index} outside 0..{}",
                    map.n1()
                )));
            }
            (0..map.n2()).map(|j| map.id(index, j)).collect()
        }
    };
    let layer = product.induced_subgraph(&vertices)?;
    Ok((layer, vertices))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1() -> Graph {
        Graph::empty(1)
    }

    #[test]
    fn empty_factor_is_rejected() {
        let e = Graph::empty(0);
        let k2 = Graph::complete(2);
        assert!(cartesian_product(&e, &k2).is_err());
        assert!(direct_product(&k2, &e).is_err());
        assert!(strong_product(&e, &e).is_err());
        assert!(lexicographic_product(&e, &k2).is_err());
        assert!(corona(&k2, &e).is_err());
    }

    #[test]
    fn k2_square_k2_is_c4() {
        let (g, _) = cartesian_product(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn p2_square_p3_edge_count() {
        let (g, _) = cartesian_product(&Graph::path(2), &Graph::path(3)).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
    }

    #[test]
    fn k1_is_a_cartesian_identity() {
        let c5 = Graph::cycle(5);
        let (g, map) = cartesian_product(&c5, &k1()).unwrap();
        assert_eq!(map.n2(), 1);
        // with n2 = 1 the row-major id of (i, 0) is i
        assert_eq!(g, c5);
    }

    #[test]
    fn k2_times_k2_is_two_edges() {
        let (g, _) = direct_product(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 2)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn k2_strong_k2_is_k4() {
        let (g, _) = strong_product(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn k2_lex_k2_is_k4() {
        let (g, _) = lexicographic_product(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn k1_is_a_left_lexicographic_identity() {
        let p4 = Graph::path(4);
        let (g, _) = lexicographic_product(&k1(), &p4).unwrap();
        assert_eq!(g, p4);
    }

    #[test]
    fn corona_counts() {
        let (g, map) = corona(&Graph::complete(2), &k1()).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(map.copies, vec![vec![2], vec![3]]);
        // v0 - v1 plus one pendant on each: a path on four vertices
        let degrees: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 1, 1]);

        let (g, _) = corona(&Graph::cycle(4), &Graph::complete(2)).unwrap();
        assert_eq!((g.n(), g.m()), (12, 16));
    }

    #[test]
    fn corona_with_k1_hub_is_a_cone() {
        let c4 = Graph::cycle(4);
        let (g, _) = corona(&k1(), &c4).unwrap();
        assert_eq!((g.n(), g.m()), (5, 8));
        assert_eq!(g.degree(0), 4);
        let rest = g.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(rest, c4);
    }

    #[test]
    fn rooted_products() {
        for root in 0..2 {
            let (g, map) = rooted_product(&Graph::complete(2), &Graph::complete(2), root).unwrap();
            assert_eq!((g.n(), g.m()), (4, 3));
            assert!(g.is_connected());
            assert_eq!(map.copies[0][root], 0);
            assert_eq!(map.copies[1][root], 1);
        }
        let c3 = Graph::cycle(3);
        let (g, _) = rooted_product(&c3, &k1(), 0).unwrap();
        assert_eq!(g, c3);
        let (g, _) = rooted_product(&c3, &Graph::path(2), 0).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(rooted_product(&c3, &Graph::path(2), 2).is_err());
    }

    #[test]
    fn unions() {
        let k2 = Graph::complete(2);
        let g = disjoint_union(&k2, &k2);
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
        let c5 = Graph::cycle(5);
        assert_eq!(disjoint_union(&c5, &Graph::empty(0)), c5);
        let g = disjoint_union(&Graph::cycle(3), &Graph::cycle(4));
        assert_eq!((g.n(), g.m()), (7, 7));
    }

    #[test]
    fn cartesian_layers_copy_the_factors() {
        let (g, map) = cartesian_product(&Graph::path(3), &Graph::path(2)).unwrap();
        let (layer, ids) = restrict_to_layer(&g, &map, Factor::First, 0).unwrap();
        assert_eq!(layer, Graph::path(3));
        assert_eq!(ids, vec![0, 2, 4]);

        let (g, map) = cartesian_product(&Graph::complete(2), &Graph::cycle(4)).unwrap();
        let (layer, _) = restrict_to_layer(&g, &map, Factor::Second, 1).unwrap();
        assert_eq!(layer, Graph::cycle(4));
        assert!(restrict_to_layer(&g, &map, Factor::Second, 2).is_err());
        assert!(restrict_to_layer(&g, &map, Factor::First, 4).is_err());
    }

    #[test]
    fn bipartite_factors_give_bipartite_cartesian_product() {
        let (g, _) = cartesian_product(&Graph::complete(2), &Graph::cycle(4)).unwrap();
        assert!(g.is_bipartite());
    }

    #[test]
    fn product_map_json() {
        let map = ProductVertexMap::new(2, 2);
        assert_eq!(
            map.to_json_value().to_string(),
            r#"{"kind":"product","n1":2,"n2":2,"pairs":[[0,0],[0,1],[1,0],[1,1]]}"#
        );
    }
}
