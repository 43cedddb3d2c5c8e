#![allow(dead_code)]

use std::collections::BTreeSet;

use weak_iasi::graph::Graph;
use weak_iasi::sparing::uncovered_edges;

/// Every vertex subset, filtered to independent sets; smallest uncovered
/// count wins, ties go to the lexicographically smallest set.
pub fn brute_force_sparing(g: &Graph) -> (u64, Vec<usize>) {
    assert!(g.n() <= 20, "subset enumeration is only for tiny graphs");
    let mut best: Option<(u64, Vec<usize>)> = None;
    for mask in 0u32..1 << g.n() {
        let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if !g.is_independent(&set) {
            continue;
        }
        let value = uncovered_edges(g, &set);
        let better = match &best {
            None => true,
            Some((b, w)) => value < *b || (value == *b && set < *w),
        };
        if better {
            best = Some((value, set));
        }
    }
    best.expect("the empty set is always independent")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (isolated vertices allowed), by brute-force canonical forms.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = k;
        index[v][u] = k;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(0u32, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
            })
            .min()
            .unwrap();
        if seen.insert(canonical) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| canonical >> k & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::with_isolated(n, edges).unwrap());
        }
    }
    out
}
