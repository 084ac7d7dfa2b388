//! Canonical labeling by equitable-partition refinement and individualization,
//! with pruning by automorphisms discovered during the search.
//!
//! Practical up to a few dozen vertices for the graphs this crate handles;
//! exhaustive enumeration uses it at `n <= 11`.

use super::{Graph, VertexSet};

/// Canonical byte string of a graph: the graph6 encoding of its canonical
/// relabeling. Stable within one version of this crate only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

pub(crate) struct Labeling {
    /// `lab[pos]` is the vertex placed at canonical position `pos`.
    pub lab: Vec<usize>,
    pub graph: Graph,
}

/// Refines an ordered partition (cells as bitmasks) to the coarsest
/// equitable partition below it. The result depends only on the
/// isomorphism type of `(g, cells)`.
pub(crate) fn equitable_partition(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    refine(g, &mut cells);
    cells
}

fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let rows = g.rows();
    'outer: loop {
        for j in 0..cells.len() {
            let splitter = cells[j];
            for i in 0..cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    continue;
                }
                let mut groups = [0u64; 65];
                let mut lo = 64;
                let mut hi = 0;
                for v in VertexSet(cell) {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    groups[c] |= 1u64 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    continue;
                }
                let parts: Vec<u64> = groups[lo..=hi].iter().copied().filter(|&m| m != 0).collect();
                cells.splice(i..=i, parts);
                continue 'outer;
            }
        }
        return;
    }
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (p, &v) in lab.iter().enumerate() {
            pos[v] = p;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| {
                VertexSet(self.g.rows()[v])
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << pos[u])
            })
            .collect();
        match &self.best {
            None => self.best = Some((rows, lab)),
            Some((best_rows, best_lab)) => match rows.cmp(best_rows) {
                std::cmp::Ordering::Greater => self.best = Some((rows, lab)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; n];
                    for p in 0..n {
                        gamma[best_lab[p]] = lab[p];
                    }
                    self.automorphisms.push(gamma);
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    fn orbit_roots(&self, fixed: VertexSet) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if fixed.iter().any(|v| gamma[v] != v) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, mut cells: Vec<u64>, fixed: VertexSet) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in VertexSet(cell) {
            if !explored.is_empty() && !self.automorphisms.is_empty() {
                let roots = self.orbit_roots(fixed);
                if explored.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(1u64 << v);
            next.push(cell & !(1u64 << v));
            next.extend_from_slice(&cells[t + 1..]);
            let mut f = fixed;
            f.insert(v);
            self.descend(next, f);
            explored.push(v);
        }
    }
}

/// Canonical labeling of `g` relative to an ordered initial partition.
pub(crate) fn canonical_labeling(g: &Graph, initial: Vec<u64>) -> Labeling {
    let mut s = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    s.descend(initial, VertexSet::EMPTY);
    let (rows, lab) = s.best.expect("search reaches at least one leaf");
    Labeling {
        lab,
        graph: Graph::from_rows_unchecked(g.n(), &rows),
    }
}

/// The canonical relabeling of `g`: isomorphic graphs map to equal graphs.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g, vec![g.vertices().bits()]).graph
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(super::to_graph6(&canonical_graph(g)).into_bytes())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_graph(g) == canonical_graph(h)
}
