//! Isomorphism-free generation of all graphs on `n <= 11` vertices.
//!
//! Canonical augmentation: a graph on `m` vertices is accepted as a child of
//! its parent only if the added vertex lies in the automorphism orbit of the
//! graph's canonical deletion vertex. Every isomorphism class then has
//! exactly one parent class, so duplicates can only come from one parent
//! and are removed with a per-parent set. Parents are processed in parallel
//! and independently.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{param, Result};
use crate::graph::{canonical_labeling, equitable_partition, Graph, VertexSet};

/// Largest `n` accepted by the enumerator.
pub const MAX_ENUM_VERTICES: usize = 11;

type Keep<'a> = dyn Fn(&Graph) -> bool + Sync + 'a;

/// Options for [`enumerate_graphs`] and [`fold_graphs`].
#[derive(Clone, Copy, Default)]
pub struct EnumOptions<'a> {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub budget: Option<&'a Budget>,
    /// Hereditary filter: graphs for which this returns `false` are dropped
    /// together with all their descendants. It must be closed under vertex
    /// deletion (e.g. "circumference < k"), otherwise classes are lost.
    pub keep: Option<&'a Keep<'a>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    pub n: usize,
    /// Classes kept at each order `1..=n`.
    pub per_order: Vec<u64>,
    /// Candidate extensions examined across all orders.
    pub candidates: u64,
}

impl EnumStats {
    pub fn classes(&self) -> u64 {
        self.per_order.last().copied().unwrap_or(0)
    }
}

fn pack(g: &Graph) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for j in 1..g.n() {
        code |= (g.rows()[j] & ((1u64 << j) - 1)) << bit;
        bit += j;
    }
    code
}

fn unpack(n: usize, code: u64) -> Graph {
    let mut rows = [0u64; 11];
    let mut bit = 0;
    for j in 1..n {
        let low = (code >> bit) & ((1u64 << j) - 1);
        rows[j] |= low;
        for i in VertexSet(low) {
            rows[i] |= 1u64 << j;
        }
        bit += j;
    }
    Graph::from_rows_unchecked(n, &rows[..n])
}

fn individualize(cells: &[u64], v: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for &c in cells {
        if c >> v & 1 == 1 && c.count_ones() > 1 {
            out.push(1u64 << v);
            out.push(c & !(1u64 << v));
        } else {
            out.push(c);
        }
    }
    out
}

/// Canonical form of `g` if adding vertex `v` is its canonical construction
/// step, `None` otherwise.
fn accept(g: &Graph, v: usize) -> Option<Graph> {
    let cells = equitable_partition(g, vec![g.vertices().bits()]);
    let last = *cells.last().unwrap();
    if last >> v & 1 == 0 {
        return None;
    }
    let lab = canonical_labeling(g, cells.clone());
    if last.count_ones() == 1 {
        return Some(lab.graph);
    }
    let w = *lab.lab.iter().rev().find(|&&x| last >> x & 1 == 1).unwrap();
    if w == v {
        return Some(lab.graph);
    }
    let gv = canonical_labeling(g, individualize(&cells, v)).graph;
    let gw = canonical_labeling(g, individualize(&cells, w)).graph;
    (gv == gw).then_some(lab.graph)
}

fn children(parent: &Graph, keep: Option<&Keep<'_>>, candidates: &mut u64) -> Vec<Graph> {
    let m = parent.n();
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0u64..1 << m {
        *candidates += 1;
        rows[m] = nbrs;
        for (u, row) in rows.iter_mut().enumerate().take(m) {
            *row = parent.rows()[u] | (nbrs >> u & 1) << m;
        }
        let g = Graph::from_rows_unchecked(m + 1, &rows);
        let Some(canon) = accept(&g, m) else {
            continue;
        };
        if !seen.insert(canon) {
            continue;
        }
        if keep.is_none_or(|f| f(&canon)) {
            out.push(canon);
        }
    }
    out.sort_unstable_by_key(pack);
    out
}

fn build_pool(workers: Option<usize>) -> Result<Option<rayon::ThreadPool>> {
    workers
        .map(|w| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| crate::Error::Param(format!("thread pool: {e}")))
        })
        .transpose()
}

fn run<T: Send>(pool: &Option<rayon::ThreadPool>, job: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(p) => p.install(job),
        None => job(),
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(1..=MAX_ENUM_VERTICES).contains(&n) {
        return param(format!("enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got {n}"));
    }
    Ok(())
}

/// Canonical representatives on `n - 1` vertices, packed.
fn parents(n: usize, opts: &EnumOptions<'_>, pool: &Option<rayon::ThreadPool>, stats: &mut EnumStats) -> Result<Vec<u64>> {
    let k1 = Graph::new(1).unwrap();
    let mut level: Vec<u64> = if opts.keep.is_none_or(|f| f(&k1)) { vec![0] } else { vec![] };
    stats.per_order.push(level.len() as u64);
    for m in 1..n - 1 {
        let next: Vec<(Vec<u64>, u64)> = run(pool, || {
            level
                .par_iter()
                .map(|&code| {
                    if let Some(b) = opts.budget {
                        b.check()?;
                    }
                    let mut c = 0;
                    let kids = children(&unpack(m, code), opts.keep, &mut c);
                    Ok((kids.iter().map(pack).collect(), c))
                })
                .collect::<Result<_>>()
        })?;
        level = Vec::with_capacity(next.iter().map(|(k, _)| k.len()).sum());
        for (kids, c) in next {
            stats.candidates += c;
            level.extend(kids);
        }
        stats.per_order.push(level.len() as u64);
    }
    Ok(level)
}

/// Visits one canonical representative of every isomorphism class on `n`
/// vertices (that passes `opts.keep`), in a deterministic order.
pub fn enumerate_graphs(n: usize, opts: EnumOptions<'_>, mut visitor: impl FnMut(&Graph)) -> Result<EnumStats> {
    check_n(n)?;
    let mut stats = EnumStats {
        n,
        per_order: Vec::new(),
        candidates: 0,
    };
    if n == 1 {
        let g = Graph::new(1).unwrap();
        let kept = opts.keep.is_none_or(|f| f(&g));
        if kept {
            visitor(&g);
        }
        stats.per_order.push(kept as u64);
        return Ok(stats);
    }
    let pool = build_pool(opts.workers)?;
    let level = parents(n, &opts, &pool, &mut stats)?;
    let mut count = 0;
    for chunk in level.chunks(256) {
        let batch: Vec<(Vec<Graph>, u64)> = run(&pool, || {
            chunk
                .par_iter()
                .map(|&code| {
                    if let Some(b) = opts.budget {
                        b.check()?;
                    }
                    let mut c = 0;
                    let kids = children(&unpack(n - 1, code), opts.keep, &mut c);
                    Ok((kids, c))
                })
                .collect::<Result<_>>()
        })?;
        for (kids, c) in batch {
            stats.candidates += c;
            count += kids.len() as u64;
            kids.iter().for_each(&mut visitor);
        }
    }
    stats.per_order.push(count);
    Ok(stats)
}

/// Parallel fold over every class on `n` vertices. `reduce` must be
/// associative and insensitive to operand order for the result to be
/// deterministic.
pub fn fold_graphs<T, I, F, R>(n: usize, opts: EnumOptions<'_>, identity: I, fold: F, reduce: R) -> Result<(T, EnumStats)>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_n(n)?;
    let mut stats = EnumStats {
        n,
        per_order: Vec::new(),
        candidates: 0,
    };
    if n == 1 {
        let g = Graph::new(1).unwrap();
        let kept = opts.keep.is_none_or(|f| f(&g));
        stats.per_order.push(kept as u64);
        let acc = if kept { fold(identity(), &g) } else { identity() };
        return Ok((acc, stats));
    }
    let pool = build_pool(opts.workers)?;
    let level = parents(n, &opts, &pool, &mut stats)?;
    let (acc, count, cand) = run(&pool, || {
        level
            .par_iter()
            .try_fold(
                || (identity(), 0u64, 0u64),
                |(mut acc, mut count, mut cand), &code| {
                    if let Some(b) = opts.budget {
                        b.check()?;
                    }
                    let kids = children(&unpack(n - 1, code), opts.keep, &mut cand);
                    count += kids.len() as u64;
                    for g in &kids {
                        acc = fold(acc, g);
                    }
                    Ok((acc, count, cand))
                },
            )
            .try_reduce(
                || (identity(), 0, 0),
                |a, b| Ok((reduce(a.0, b.0), a.1 + b.1, a.2 + b.2)),
            )
    })?;
    stats.candidates += cand;
    stats.per_order.push(count);
    Ok((acc, stats))
}

/// Number of isomorphism classes on `n <= 6` vertices, computed
/// independently of the canonical labeling: every labeled graph is reduced
/// to the minimum of its edge-bit code over all `n!` relabelings.
pub fn labeled_class_count(n: usize) -> Result<u64> {
    if !(1..=6).contains(&n) {
        return param(format!("labeled sweep supports 1 <= n <= 6, got {n}"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut p, &mut perms);
    // index of pair (u, v) in `pairs`
    let mut index = [[0usize; 6]; 6];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let mut classes = HashSet::new();
    for code in 0u32..1 << pairs.len() {
        let min = perms
            .iter()
            .map(|perm| {
                pairs.iter().enumerate().fold(0u32, |acc, (i, &(u, v))| {
                    acc | (code >> i & 1) << index[perm[u]][perm[v]]
                })
            })
            .min()
            .unwrap();
        classes.insert(min);
    }
    Ok(classes.len() as u64)
}

fn heap_permutations(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_graph;

    #[test]
    fn pack_round_trip() {
        let g = Graph::from_edges(7, [(0, 6), (2, 3), (4, 5), (1, 6)]).unwrap();
        assert_eq!(unpack(7, pack(&g)), g);
    }

    #[test]
    fn known_class_counts() {
        // OEIS A000088
        let expected = [1u64, 2, 4, 11, 34, 156, 1044, 12346];
        for (i, &want) in expected.iter().enumerate() {
            let stats = enumerate_graphs(i + 1, EnumOptions::default(), |_| {}).unwrap();
            assert_eq!(stats.classes(), want, "n = {}", i + 1);
            assert_eq!(&stats.per_order[..], &expected[..=i]);
        }
    }

    #[test]
    fn labeled_sweep_counts() {
        assert_eq!(labeled_class_count(1).unwrap(), 1);
        assert_eq!(labeled_class_count(4).unwrap(), 11);
        assert_eq!(labeled_class_count(5).unwrap(), 34);
        assert!(labeled_class_count(7).is_err());
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let mut seen = HashSet::new();
        enumerate_graphs(6, EnumOptions::default(), |g| {
            assert_eq!(&canonical_graph(g), g);
            assert!(seen.insert(*g));
        })
        .unwrap();
        assert_eq!(seen.len(), 156);
    }

    #[test]
    fn hereditary_filter_prunes() {
        // forests: A005195
        let keep = |g: &Graph| crate::algorithms::circumference(g) == 0;
        let opts = EnumOptions {
            keep: Some(&keep),
            ..Default::default()
        };
        let counts: Vec<u64> = (1..=8).map(|n| enumerate_graphs(n, opts, |_| {}).unwrap().classes()).collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20, 37, 76]);
    }

    #[test]
    fn fold_matches_visitor() {
        let (edges, stats) = fold_graphs(7, EnumOptions { workers: Some(3), ..Default::default() }, || 0usize, |acc, g| acc + g.edge_count(), |a, b| a + b).unwrap();
        let mut direct = 0;
        enumerate_graphs(7, EnumOptions::default(), |g| direct += g.edge_count()).unwrap();
        assert_eq!(edges, direct);
        assert_eq!(stats.classes(), 1044);
        // complement symmetry: average edge count is half of C(7,2)
        assert_eq!(edges * 2, 1044 * 21);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_graphs(0, EnumOptions::default(), |_| {}).is_err());
        assert!(enumerate_graphs(12, EnumOptions::default(), |_| {}).is_err());
    }

    #[test]
    fn budget_aborts() {
        let b = Budget::unlimited();
        b.cancel();
        let r = enumerate_graphs(7, EnumOptions { budget: Some(&b), ..Default::default() }, |_| {});
        assert_eq!(r.unwrap_err(), crate::Error::Budget);
    }
}
