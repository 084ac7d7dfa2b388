use super::{Graph, VertexSet};

/// Blocks and cut vertices of a graph.
///
/// Each block is a maximal connected subgraph without a cut vertex: a
/// 2-connected piece, a bridge, or an isolated vertex. `tree_edges` links
/// block indices to the cut vertices they contain; per connected component
/// this bipartite incidence structure is a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Blocks that contain at most one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| (self.blocks[b] & self.cut_vertices).len() <= 1)
            .collect()
    }
}

struct Lowpoint<'g> {
    g: &'g Graph,
    disc: [u8; 64],
    low: [u8; 64],
    time: u8,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Lowpoint<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Computes the blocks and cut vertices with a lowpoint DFS.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let mut lp = Lowpoint {
        g,
        disc: [0; 64],
        low: [0; 64],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..g.n() {
        if lp.disc[v] == 0 {
            if g.degree(v) == 0 {
                lp.time += 1;
                lp.disc[v] = lp.time;
                lp.blocks.push(VertexSet::singleton(v));
            } else {
                lp.visit(v, None);
            }
        }
    }
    let mut tree_edges = Vec::new();
    for (b, &block) in lp.blocks.iter().enumerate() {
        for c in block & lp.cuts {
            tree_edges.push((b, c));
        }
    }
    BlockCutTree {
        blocks: lp.blocks,
        cut_vertices: lp.cuts,
        tree_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_in(g: &Graph, b: VertexSet) -> usize {
        b.iter().map(|v| (g.neighbors(v) & b).len()).sum::<usize>() / 2
    }

    #[test]
    fn bowtie_has_two_blocks_one_cut() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.blocks.len(), 2);
        assert_eq!(t.cut_vertices, VertexSet::singleton(2));
        assert_eq!(t.tree_edges.len(), 2);
        assert_eq!(t.leaf_blocks().len(), 2);
    }

    #[test]
    fn complete_graph_is_one_block() {
        let t = block_cut_tree(&Graph::complete(5).unwrap());
        assert_eq!(t.blocks, vec![VertexSet::full(5)]);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn path_blocks_are_bridges() {
        let g = Graph::path(5).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.blocks.len(), 4);
        assert_eq!(t.cut_vertices, [1, 2, 3].into_iter().collect());
        assert!(t.blocks.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn isolated_vertices_are_singleton_blocks() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let t = block_cut_tree(&g);
        assert_eq!(t.blocks.len(), 3);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn edge_partition_and_shared_vertices() {
        // Two 4-cycles joined through a path, plus a pendant triangle.
        let g = Graph::from_edges(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4), (7, 8), (8, 9), (9, 7)],
        )
        .unwrap();
        let t = block_cut_tree(&g);
        let total: usize = t.blocks.iter().map(|&b| edges_in(&g, b)).sum();
        assert_eq!(total, g.edge_count());
        for i in 0..t.blocks.len() {
            for j in i + 1..t.blocks.len() {
                let shared = t.blocks[i] & t.blocks[j];
                assert!(shared.len() <= 1);
                assert!(shared.is_subset(t.cut_vertices));
            }
        }
        // tree: nodes = blocks + cuts, edges = incidences, one component
        assert_eq!(t.tree_edges.len(), t.blocks.len() + t.cut_vertices.len() - 1);
    }
}
