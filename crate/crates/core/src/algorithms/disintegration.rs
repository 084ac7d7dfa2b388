use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Outcome of deleting vertices of degree at most `alpha` until none is left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreResult {
    pub alpha: usize,
    /// Vertices of the `(alpha + 1)`-core; may be empty.
    pub survivors: VertexSet,
    /// Deleted vertices in deletion order, with their degree at deletion.
    pub trace: Vec<(usize, usize)>,
}

/// The `(alpha + 1)`-core, deleting the lowest-labeled eligible vertex first.
pub fn core(g: &Graph, alpha: usize) -> CoreResult {
    let order: Vec<usize> = (0..g.n()).collect();
    core_in_order(g, alpha, &order)
}

/// As [`core`], but among eligible vertices deletes the one appearing first
/// in `priority`. Vertices missing from `priority` are never deleted.
pub fn core_in_order(g: &Graph, alpha: usize, priority: &[usize]) -> CoreResult {
    let mut alive = g.vertices();
    let mut trace = Vec::new();
    'scan: loop {
        for &v in priority {
            if !alive.contains(v) {
                continue;
            }
            let d = (g.neighbors(v) & alive).len();
            if d <= alpha {
                alive.remove(v);
                trace.push((v, d));
                continue 'scan;
            }
        }
        break;
    }
    CoreResult {
        alpha,
        survivors: alive,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{h_graph, HParams};

    #[test]
    fn complete_graph_survives() {
        let r = core(&Graph::complete(5).unwrap(), 3);
        assert_eq!(r.survivors, VertexSet::full(5));
        assert!(r.trace.is_empty());
        let r = core(&Graph::complete(5).unwrap(), 4);
        assert!(r.survivors.is_empty());
        assert_eq!(r.trace.len(), 5);
    }

    #[test]
    fn trees_disintegrate() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let r = core(&tree, 1);
        assert!(r.survivors.is_empty());
        assert!(r.trace.iter().all(|&(_, d)| d <= 1));
    }

    #[test]
    fn h_core_is_the_big_clique() {
        let p = HParams::new(14, 11, 3).unwrap();
        let g = h_graph(p).unwrap();
        let r = core(&g, 5);
        assert_eq!(r.survivors, p.part_a() | p.part_c());
        assert_eq!(r.trace.len(), 6);
        assert!(r.trace.iter().all(|&(v, d)| p.part_b().contains(v) && d == 3));
        let min_left = r.survivors.iter().map(|v| (g.neighbors(v) & r.survivors).len()).min().unwrap();
        assert_eq!(min_left, 7);
    }
}
