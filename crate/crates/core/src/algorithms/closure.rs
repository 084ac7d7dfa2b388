use crate::budget::Budget;
use crate::error::{param, Result};
use crate::graph::Graph;

use super::{circumference_with_budget, has_cycle_at_least};

/// Greedy `k`-closure: adds non-edges in lexicographic order whenever the
/// result still has no cycle of length `k` or more.
///
/// A non-edge rejected once stays rejected after later additions, because
/// adding edges never shortens a cycle. One lexicographic pass therefore
/// produces the same graph as rescanning from the start after each
/// addition.
pub fn closure(g: &Graph, k: usize) -> Result<Graph> {
    closure_with_budget(g, k, &Budget::unlimited())
}

pub fn closure_with_budget(g: &Graph, k: usize, budget: &Budget) -> Result<Graph> {
    if circumference_with_budget(g, budget)? >= k.max(3) {
        return param(format!("graph already has a cycle of length at least {k}"));
    }
    let mut out = *g;
    for (u, v) in g.non_edges() {
        budget.check()?;
        let trial = out.add_edge(u, v)?;
        if circumference_with_budget(&trial, budget)? < k.max(3) {
            out = trial;
        }
    }
    Ok(out)
}

/// True iff the graph has no cycle of length `>= k` and every non-edge
/// would create one.
pub fn is_k_closed(g: &Graph, k: usize) -> bool {
    !has_cycle_at_least(g, k)
        && g
            .non_edges()
            .all(|(u, v)| has_cycle_at_least(&g.add_edge(u, v).unwrap(), k))
}
