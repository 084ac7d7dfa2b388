use serde::{Deserialize, Serialize};

use crate::bounds::binom;
use crate::graph::{Graph, VertexSet};

/// Number of `K_s` subgraphs for every `s`; index `s - 1` holds `N_s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueVector(pub Vec<u64>);

impl CliqueVector {
    /// `N_s`, zero for `s = 0` or `s` above the clique number.
    pub fn get(&self, s: usize) -> u64 {
        if s == 0 {
            return 0;
        }
        self.0.get(s - 1).copied().unwrap_or(0)
    }

    pub fn clique_number(&self) -> usize {
        self.0.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1)
    }
}

/// Pivot-based counting: each node of the recursion carries the number of
/// vertices forced into the clique (`held`) and the number of pivots whose
/// inclusion is optional, so a leaf accounts for `C(pivots, s - held)`
/// cliques of every size at once.
struct Counter<'g> {
    g: &'g Graph,
    counts: Vec<u64>,
}

impl Counter<'_> {
    fn run(&mut self, mut cand: VertexSet, held: usize, pivots: usize) {
        if cand.is_empty() {
            for j in 0..=pivots {
                let s = held + j;
                if s >= 1 {
                    self.counts[s - 1] += binom(pivots as i64, j as i64) as u64;
                }
            }
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| ((self.g.neighbors(v) & cand).len(), std::cmp::Reverse(v)))
            .unwrap();
        let branch = cand - self.g.neighbors(pivot);
        self.run(cand & self.g.neighbors(pivot), held, pivots + 1);
        cand.remove(pivot);
        for v in branch.iter().filter(|&v| v != pivot) {
            self.run(cand & self.g.neighbors(v), held + 1, pivots);
            cand.remove(v);
        }
    }
}

pub fn clique_vector(g: &Graph) -> CliqueVector {
    let mut c = Counter {
        g,
        counts: vec![0; g.n()],
    };
    c.run(g.vertices(), 0, 0);
    let len = c.counts.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
    c.counts.truncate(len);
    CliqueVector(c.counts)
}

pub fn count_cliques(g: &Graph, s: usize) -> u64 {
    clique_vector(g).get(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{h_graph, HParams};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Orders each clique by its smallest vertex; independent of the pivot
    /// recursion above.
    fn ordered_count(g: &Graph) -> Vec<u64> {
        fn go(g: &Graph, cand: VertexSet, depth: usize, out: &mut Vec<u64>) {
            for v in cand {
                out[depth] += 1;
                let above = VertexSet(!((2u64 << v) - 1));
                go(g, cand & g.neighbors(v) & above, depth + 1, out);
            }
        }
        let mut out = vec![0; g.n()];
        go(g, g.vertices(), 0, &mut out);
        out
    }

    #[test]
    fn complete_graph() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(count_cliques(&k5, 3), 10);
        assert_eq!(clique_vector(&k5).0, vec![5, 10, 10, 5, 1]);
        assert_eq!(clique_vector(&k5).clique_number(), 5);
    }

    #[test]
    fn h_14_11_3_counts() {
        let g = h_graph(HParams::new(14, 11, 3).unwrap()).unwrap();
        assert_eq!(count_cliques(&g, 2), 46);
        assert_eq!(count_cliques(&g, 3), 74);
        assert_eq!(count_cliques(&g, 1), 14);
    }

    #[test]
    fn small_shapes() {
        let single = Graph::new(1).unwrap();
        assert_eq!(clique_vector(&single).0, vec![1]);
        assert_eq!(count_cliques(&Graph::new(4).unwrap(), 2), 0);
        assert_eq!(count_cliques(&Graph::path(3).unwrap(), 2), 2);
        assert_eq!(count_cliques(&Graph::cycle(5).unwrap(), 3), 0);
        assert_eq!(count_cliques(&single, 0), 0);
    }

    #[test]
    fn agrees_with_ordered_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=14);
            let p: f64 = rng.gen_range(0.1..0.95);
            let mut g = Graph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.set_edge(u, v);
                    }
                }
            }
            let mut want = ordered_count(&g);
            let len = want.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
            want.truncate(len);
            assert_eq!(clique_vector(&g).0, want, "{g:?}");
        }
    }
}
