//! Extremal graph families.
//!
//! `H(n, k, a)` has vertex parts `A`, `C`, `B` with sizes `a`, `k - 2a`,
//! `n - k + a`. Its edges are everything inside `A ∪ C` plus every `A`–`B`
//! pair. Vertices are labeled `A` first, then `C`, then `B`.

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Parameters of `H(n, k, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
}

impl HParams {
    pub fn new(n: usize, k: usize, a: usize) -> Result<Self> {
        let p = HParams { n, k, a };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let HParams { n, k, a } = *self;
        if k < 3 {
            return param(format!("H(n,k,a) needs k >= 3, got k = {k}"));
        }
        if n < k {
            return param(format!("H(n,k,a) needs n >= k, got n = {n}, k = {k}"));
        }
        if a == 0 || 2 * a >= k {
            return param(format!("H(n,k,a) needs 1 <= a < k/2, got a = {a}, k = {k}"));
        }
        if n > MAX_VERTICES {
            return param(format!("n = {n} exceeds {MAX_VERTICES} vertices"));
        }
        Ok(())
    }

    pub fn part_a(&self) -> VertexSet {
        VertexSet::full(self.a)
    }

    pub fn part_c(&self) -> VertexSet {
        VertexSet::full(self.k - self.a) - self.part_a()
    }

    pub fn part_b(&self) -> VertexSet {
        VertexSet::full(self.n) - VertexSet::full(self.k - self.a)
    }
}

pub fn h_graph(p: HParams) -> Result<Graph> {
    p.validate()?;
    let mut g = Graph::new(p.n)?;
    let clique = p.part_a() | p.part_c();
    for u in clique {
        for v in clique.iter().filter(|&v| v > u) {
            g.set_edge(u, v);
        }
    }
    for u in p.part_a() {
        for v in p.part_b() {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// A chain of `(n-1)/(k-2)` copies of `K_{k-1}`, consecutive copies sharing
/// one vertex.
pub fn eg_cycle_extremal(n: usize, k: usize) -> Result<Graph> {
    if k < 3 {
        return param(format!("k must be at least 3, got {k}"));
    }
    if n == 0 || n > MAX_VERTICES {
        return param(format!("n = {n} outside 1..={MAX_VERTICES}"));
    }
    if !(n - 1).is_multiple_of(k - 2) {
        return param(format!("k - 2 = {} does not divide n - 1 = {}", k - 2, n - 1));
    }
    let mut g = Graph::new(n)?;
    let blocks = (n - 1) / (k - 2);
    for b in 0..blocks {
        let first = b * (k - 2);
        for u in first..first + k - 1 {
            for v in u + 1..first + k - 1 {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `n/(k-1)` disjoint copies of `K_{k-1}`.
pub fn eg_path_extremal(n: usize, k: usize) -> Result<Graph> {
    if k < 2 {
        return param(format!("k must be at least 2, got {k}"));
    }
    if n == 0 || n > MAX_VERTICES {
        return param(format!("n = {n} outside 1..={MAX_VERTICES}"));
    }
    if !n.is_multiple_of(k - 1) {
        return param(format!("k - 1 = {} does not divide n = {n}", k - 1));
    }
    let mut g = Graph::new(n)?;
    for first in (0..n).step_by(k - 1) {
        for u in first..first + k - 1 {
            for v in u + 1..first + k - 1 {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Adds a new vertex (label `n`) adjacent to every existing vertex.
pub fn dominating_join(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n >= MAX_VERTICES {
        return param(format!("cannot add a vertex to a graph with {n} vertices"));
    }
    let mut rows = g.rows().to_vec();
    rows.push(VertexSet::full(n).bits());
    for row in rows.iter_mut().take(n) {
        *row |= 1u64 << n;
    }
    Ok(Graph::from_rows_unchecked(n + 1, &rows))
}
