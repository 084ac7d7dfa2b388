use rand::seq::IteratorRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::graph::{Graph, VertexSet};

use super::circumference;

/// A simple path `x = p[0], .., p[m] = y` in some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let w = PathWitness { vertices };
        w.validate(g)?;
        Ok(w)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return param("empty path");
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.vertices {
            if v >= g.n() {
                return param(format!("path vertex {v} out of range"));
            }
            if seen.contains(v) {
                return param(format!("path repeats vertex {v}"));
            }
            seen.insert(v);
        }
        if let Some(w) = self.vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return param(format!("path uses non-edge ({}, {})", w[0], w[1]));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn x(&self) -> usize {
        self.vertices[0]
    }

    pub fn y(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of edges `m`.
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True iff neither end has a neighbor off the path.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let on = self.vertex_set();
        (g.neighbors(self.x()) - on).is_empty() && (g.neighbors(self.y()) - on).is_empty()
    }
}

/// `|N(v) ∩ V(P)|`.
pub fn path_degree(g: &Graph, p: &PathWitness, v: usize) -> Result<usize> {
    p.validate(g)?;
    if v >= g.n() {
        return param(format!("vertex {v} out of range"));
    }
    Ok((g.neighbors(v) & p.vertex_set()).len())
}

/// Checks that a 2-connected graph has a cycle of length at least
/// `min(m + 1, d_P(x) + d_P(y))` for the given path. Returns `false` only if
/// the inequality fails, which would indicate a bug in the cycle search.
pub fn kopylov_lemma_check(g: &Graph, p: &PathWitness) -> Result<bool> {
    kopylov_lemma_check_with(g, p, circumference)
}

/// As [`kopylov_lemma_check`], with a caller-supplied circumference routine.
pub fn kopylov_lemma_check_with(g: &Graph, p: &PathWitness, circ: impl Fn(&Graph) -> usize) -> Result<bool> {
    if !g.is_2connected() {
        return param("graph is not 2-connected");
    }
    p.validate(g)?;
    let dx = path_degree(g, p, p.x())?;
    let dy = path_degree(g, p, p.y())?;
    let need = (p.edge_count() + 1).min(dx + dy);
    Ok(circ(g) >= need)
}

/// Grows a path from a random vertex, extending either end by a random
/// outside neighbor until both ends are stuck.
pub fn random_maximal_path<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> PathWitness {
    let start = rng.gen_range(0..g.n());
    let mut path = std::collections::VecDeque::from([start]);
    let mut on = VertexSet::singleton(start);
    loop {
        let front = g.neighbors(*path.front().unwrap()) - on;
        let back = g.neighbors(*path.back().unwrap()) - on;
        let grow_front = match (front.is_empty(), back.is_empty()) {
            (true, true) => break,
            (false, true) => true,
            (true, false) => false,
            (false, false) => rng.gen_bool(0.5),
        };
        let pool = if grow_front { front } else { back };
        let v = pool.iter().choose(rng).unwrap();
        on.insert(v);
        if grow_front {
            path.push_front(v);
        } else {
            path.push_back(v);
        }
    }
    PathWitness {
        vertices: path.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn path_degree_cases() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let p = PathWitness::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(path_degree(&g, &p, 3).unwrap(), 0);
        assert_eq!(path_degree(&g, &p, 1).unwrap(), 2);
        let k6 = Graph::complete(6).unwrap();
        let ham = PathWitness::new(&k6, (0..6).collect()).unwrap();
        assert_eq!(path_degree(&k6, &ham, ham.x()).unwrap(), 5);
        assert!(path_degree(&g, &p, 9).is_err());
    }

    #[test]
    fn invalid_witnesses_are_rejected() {
        let g = Graph::path(4).unwrap();
        assert!(PathWitness::new(&g, vec![]).is_err());
        assert!(PathWitness::new(&g, vec![0, 2]).is_err());
        assert!(PathWitness::new(&g, vec![0, 1, 0]).is_err());
        assert!(PathWitness::new(&g, vec![0, 7]).is_err());
    }

    #[test]
    fn lemma_on_cycles_and_complete_graphs() {
        let c = Graph::cycle(7).unwrap();
        let ham = PathWitness::new(&c, (0..7).collect()).unwrap();
        assert!(kopylov_lemma_check(&c, &ham).unwrap());
        let k4 = Graph::complete(4).unwrap();
        let p = PathWitness::new(&k4, vec![2, 0, 3]).unwrap();
        assert!(kopylov_lemma_check(&k4, &p).unwrap());
        let p3 = Graph::path(3).unwrap();
        let w = PathWitness::new(&p3, vec![0, 1, 2]).unwrap();
        assert!(kopylov_lemma_check(&p3, &w).is_err());
    }

    #[test]
    fn broken_circumference_is_caught() {
        let c = Graph::cycle(5).unwrap();
        let ham = PathWitness::new(&c, (0..5).collect()).unwrap();
        assert!(!kopylov_lemma_check_with(&c, &ham, |_| 3).unwrap());
    }

    #[test]
    fn random_paths_are_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        for _ in 0..50 {
            let p = random_maximal_path(&g, &mut rng);
            p.validate(&g).unwrap();
            assert!(p.is_maximal(&g));
        }
    }
}
