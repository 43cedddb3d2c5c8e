//! Sparing numbers: the fewest mono-indexed edges over all weak IASIs.
//!
//! In a weak IASI the non-singleton vertices form an independent set `S`,
//! and an edge is mono-indexed exactly when neither end lies in `S`. Any
//! independent set can be realized by a concrete labeling, so
//!
//! ```text
//! φ(G) = m − max { Σ_{v ∈ S} deg(v) : S independent }
//! ```
//!
//! which [`SparingOracle`] solves exactly by branch and bound on bitsets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_BOUND: usize = 24;
/// Vertex sets are `u64` masks.
pub const MAX_ORACLE_BOUND: usize = 64;
pub const ORACLE_BOUND_ENV: &str = "WEAKIASI_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactOracle,
    FormulaComplete,
    FormulaBipartite,
    FormulaCycle,
    /// Realized by the corona labeling construction.
    FormulaCorona,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparingResult {
    pub value: u64,
    /// Vertices that carry non-singleton labels.
    pub witness: Vec<usize>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_value: Option<u64>,
}

impl SparingResult {
    /// Witness is independent and leaves exactly `value` edges uncovered.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        self.witness.iter().all(|&v| v < g.n())
            && g.is_independent(&self.witness)
            && uncovered_edges(g, &self.witness) == self.value
    }
}

/// Number of edges with no end in `set`.
pub fn uncovered_edges(g: &Graph, set: &[usize]) -> u64 {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges()
        .iter()
        .filter(|&&(u, v)| !inside[u] && !inside[v])
        .count() as u64
}

/// Exact sparing-number search, limited to graphs of at most `bound` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparingOracle {
    bound: usize,
}

impl Default for SparingOracle {
    fn default() -> Self {
        SparingOracle {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl SparingOracle {
    pub fn new(bound: usize) -> Result<Self> {
        if bound > MAX_ORACLE_BOUND {
            return Err(Error::invalid(format!(
                "oracle bound {bound} exceeds the supported maximum {MAX_ORACLE_BOUND}"
            )));
        }
        Ok(SparingOracle { bound })
    }

    /// Explicit bound if given, else `WEAKIASI_ORACLE_BOUND`, else the default.
    pub fn from_override(bound: Option<usize>) -> Result<Self> {
        match bound {
            Some(b) => Self::new(b),
            None => match std::env::var(ORACLE_BOUND_ENV) {
                Ok(text) => {
                    let b = text.trim().parse().map_err(|_| {
                        Error::invalid(format!("{ORACLE_BOUND_ENV}={text:?} is not an integer"))
                    })?;
                    Self::new(b)
                }
                Err(_) => Ok(Self::default()),
            },
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Minimum mono-indexed edge count with the lexicographically smallest
    /// optimal witness (compared as ascending vertex sequences).
    pub fn solve(&self, g: &Graph) -> Result<SparingResult> {
        if g.n() > self.bound {
            return Err(Error::Capacity {
                n: g.n(),
                bound: self.bound,
            });
        }
        let search = CoverSearch::new(g);
        let all = search.full_mask();
        let target = search.max_coverage(all);

        let mut witness = Vec::new();
        let mut covered = 0u32;
        let mut allowed = all;
        while covered < target {
            let next = (0..g.n())
                .filter(|&v| allowed >> v & 1 == 1)
                .find_map(|v| {
                    let rest = allowed & !search.neighbors[v] & higher_than(v);
                    let reach = covered + search.degree[v] + search.max_coverage(rest);
                    (reach == target).then_some((v, rest))
                })
                .expect("an optimal extension exists while below the optimum");
            witness.push(next.0);
            covered += search.degree[next.0];
            allowed = next.1;
        }

        Ok(SparingResult {
            value: g.m() as u64 - covered as u64,
            witness,
            method: Method::ExactOracle,
            formula_value: None,
        })
    }
}

/// `φ(G)` with the default oracle bound.
pub fn sparing_exact(g: &Graph) -> Result<SparingResult> {
    SparingOracle::default().solve(g)
}

fn higher_than(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Maximum-weight independent set with vertex weight = degree.
struct CoverSearch {
    n: usize,
    neighbors: Vec<u64>,
    degree: Vec<u32>,
    /// Branching order: descending degree, then ascending id.
    order: Vec<usize>,
}

impl CoverSearch {
    fn new(g: &Graph) -> Self {
        let neighbors = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let degree: Vec<u32> = (0..g.n()).map(|v| g.degree(v) as u32).collect();
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
        CoverSearch {
            n: g.n(),
            neighbors,
            degree,
            order,
        }
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Largest degree sum of an independent set inside `candidates`.
    fn max_coverage(&self, candidates: u64) -> u32 {
        let mut best = 0;
        self.branch(candidates, 0, &mut best);
        best
    }

    fn branch(&self, candidates: u64, current: u32, best: &mut u32) {
        if current > *best {
            *best = current;
        }
        if candidates == 0 {
            return;
        }
        let mut bound = current;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            bound += self.degree[v];
            rest &= rest - 1;
        }
        if bound <= *best {
            return;
        }
        let v = *self
            .order
            .iter()
            .find(|&&v| candidates >> v & 1 == 1)
            .expect("candidates is nonempty");
        let bit = 1u64 << v;
        self.branch(
            candidates & !bit & !self.neighbors[v],
            current + self.degree[v],
            best,
        );
        self.branch(candidates & !bit, current, best);
    }
}

/// `(n−1)(n−2)/2`, the sparing number of `K_n`.
pub fn sparing_formula_complete(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("K_n needs n >= 1"));
    }
    Ok((n - 1) * n.saturating_sub(2) / 2)
}

/// Sparing number of `C_n`: 0 for even `n`, 1 for odd `n`.
pub fn sparing_formula_cycle(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::invalid(format!("C_n needs n >= 3, got {n}")));
    }
    Ok(n % 2)
}

/// `r1(1 + r2) + (n1 − r1)·m2`, the mono-edge count claimed for the corona
/// `G1 ⊙ G2` when the factor labelings have `r1` and `r2` mono-indexed
/// vertices. This is a reported cost, not a verified minimum.
pub fn sparing_formula_corona(n1: u64, m2: u64, r1: u64, r2: u64) -> Result<u64> {
    if r1 > n1 {
        return Err(Error::invalid(format!(
            "r1 = {r1} mono-indexed vertices exceed n1 = {n1}"
        )));
    }
    Ok(r1 * (1 + r2) + (n1 - r1) * m2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Self {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Mono-edge count `n − 2s` of `C_n` when `s` pairwise non-adjacent
/// vertices carry non-singleton labels, with its parity.
pub fn cycle_parity_of(n: u64, s: u64) -> Result<(u64, Parity)> {
    if n < 3 {
        return Err(Error::invalid(format!("C_n needs n >= 3, got {n}")));
    }
    if s > n / 2 {
        return Err(Error::invalid(format!(
            "C_{n} has no independent set of size {s}"
        )));
    }
    let count = n - 2 * s;
    Ok((count, Parity::of(count)))
}

/// `φ(G1 ∪ G2)` computed per component.
pub fn sparing_union(oracle: &SparingOracle, g1: &Graph, g2: &Graph) -> Result<u64> {
    Ok(oracle.solve(g1)?.value + oracle.solve(g2)?.value)
}

/// Closed-form sparing number when `g` is complete, bipartite or an odd
/// cycle, with a witness realizing it. `None` for any other graph.
pub fn sparing_by_formula(g: &Graph) -> Option<SparingResult> {
    let n = g.n();
    let result = |value, witness, method| SparingResult {
        value,
        witness,
        method,
        formula_value: Some(value),
    };
    if n >= 3 && g.m() == n * (n - 1) / 2 {
        let value = sparing_formula_complete(n as u64).ok()?;
        return Some(result(value, vec![0], Method::FormulaComplete));
    }
    if let Some((side, _)) = g.bipartition() {
        return Some(result(0, side, Method::FormulaBipartite));
    }
    if n >= 3 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2) {
        // walk the cycle from 0 and take every other vertex after it
        let mut walk = vec![0, g.neighbors(0)[0]];
        while walk.len() < n {
            let (prev, cur) = (walk[walk.len() - 2], walk[walk.len() - 1]);
            let next = *g.neighbors(cur).iter().find(|&&w| w != prev)?;
            walk.push(next);
        }
        // odd n: positions 1, 3, ..., n-2 leave only the closing edge uncovered
        let mut witness: Vec<usize> = walk.iter().skip(1).step_by(2).copied().collect();
        witness.sort_unstable();
        let value = sparing_formula_cycle(n as u64).ok()?;
        return Some(result(value, witness, Method::FormulaCycle));
    }
    None
}
