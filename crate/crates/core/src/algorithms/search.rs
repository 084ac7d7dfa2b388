//! Longest cycles and paths by depth-first search over simple paths, with
//! visited sets as bitmasks. A branch is cut when the path length plus every
//! vertex still reachable from its end cannot beat the best value found.

use crate::budget::{Budget, Ticker};
use crate::error::Result;
use crate::graph::{block_cut_tree, Graph, VertexSet};

use super::PathWitness;

struct CycleSearch<'a> {
    g: &'a Graph,
    start: usize,
    best: usize,
    goal: usize,
    ticker: Ticker<'a>,
}

impl CycleSearch<'_> {
    /// `avail` excludes every vertex already on the path.
    fn extend(&mut self, u: usize, len: usize, avail: VertexSet) -> Result<()> {
        self.ticker.tick()?;
        if len >= 3 && self.g.has_edge(u, self.start) && len > self.best {
            self.best = len;
        }
        if self.best >= self.goal {
            return Ok(());
        }
        let next = self.g.neighbors(u) & avail;
        if next.is_empty() {
            return Ok(());
        }
        let reach = self.g.reach(u, avail) - VertexSet::singleton(u);
        if len + reach.len() <= self.best {
            return Ok(());
        }
        for w in next {
            let mut rest = avail;
            rest.remove(w);
            self.extend(w, len + 1, rest)?;
            if self.best >= self.goal {
                break;
            }
        }
        Ok(())
    }
}

/// Longest cycle length, stopping early once `goal` is reached.
fn longest_cycle(g: &Graph, goal: usize, budget: Option<&Budget>) -> Result<usize> {
    let mut best = 0;
    let mut blocks = block_cut_tree(g).blocks;
    blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut ticker = Ticker::new(budget);
    for block in blocks {
        if block.len() < 3 || block.len() <= best {
            continue;
        }
        let mut allowed = block;
        for s in block {
            allowed.remove(s);
            if allowed.len() < best {
                break;
            }
            let mut search = CycleSearch {
                g,
                start: s,
                best,
                goal,
                ticker,
            };
            search.extend(s, 1, allowed)?;
            best = search.best;
            ticker = search.ticker;
            if best >= goal {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Length of a longest cycle; 0 for forests.
pub fn circumference(g: &Graph) -> usize {
    longest_cycle(g, usize::MAX, None).expect("no budget")
}

pub fn circumference_with_budget(g: &Graph, budget: &Budget) -> Result<usize> {
    longest_cycle(g, usize::MAX, Some(budget))
}

/// True iff some cycle has at least `k` vertices.
pub fn has_cycle_at_least(g: &Graph, k: usize) -> bool {
    longest_cycle(g, k.max(3), None).expect("no budget") >= k.max(3)
}

struct PathSearch<'a> {
    g: &'a Graph,
    best: usize,
    goal: usize,
    end: Option<usize>,
    best_path: Vec<usize>,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, u: usize, avail: VertexSet) {
        let len = self.path.len();
        let done = match self.end {
            Some(y) => u == y,
            None => true,
        };
        if done && len > self.best {
            self.best = len;
            self.best_path.clone_from(&self.path);
        }
        if self.best >= self.goal || self.end == Some(u) {
            return;
        }
        let reach = self.g.reach(u, avail) - VertexSet::singleton(u);
        if let Some(y) = self.end {
            if !reach.contains(y) {
                return;
            }
        }
        if len + reach.len() <= self.best {
            return;
        }
        for w in self.g.neighbors(u) & avail {
            let mut rest = avail;
            rest.remove(w);
            self.path.push(w);
            self.extend(w, rest);
            self.path.pop();
            if self.best >= self.goal {
                break;
            }
        }
    }
}

fn longest_path(g: &Graph, goal: usize) -> Vec<usize> {
    let mut search = PathSearch {
        g,
        best: 0,
        goal,
        end: None,
        best_path: Vec::new(),
        path: Vec::new(),
    };
    let mut comps = g.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for comp in comps {
        if comp.len() <= search.best {
            break;
        }
        // Stop this component once a Hamiltonian path of it is found.
        let saved_goal = search.goal;
        search.goal = search.goal.min(comp.len());
        for s in comp {
            search.path = vec![s];
            search.extend(s, comp - VertexSet::singleton(s));
            if search.best >= search.goal {
                break;
            }
        }
        search.goal = saved_goal;
        if search.best >= search.goal {
            break;
        }
    }
    search.best_path
}

/// Number of vertices on a longest path.
pub fn longest_path_vertices(g: &Graph) -> usize {
    longest_path(g, usize::MAX).len()
}

/// True iff the graph contains a path on `k` vertices.
pub fn has_path_on(g: &Graph, k: usize) -> bool {
    longest_path(g, k).len() >= k
}

/// A longest path from `x` to `y`, or `None` when they are disconnected
/// or equal.
pub fn longest_path_between(g: &Graph, x: usize, y: usize) -> Option<PathWitness> {
    if x == y || x >= g.n() || y >= g.n() {
        return None;
    }
    let mut search = PathSearch {
        g,
        best: 0,
        goal: usize::MAX,
        end: Some(y),
        best_path: Vec::new(),
        path: vec![x],
    };
    search.extend(x, g.vertices() - VertexSet::singleton(x));
    (search.best > 0).then(|| PathWitness::new(g, search.best_path).expect("search yields a valid path"))
}
