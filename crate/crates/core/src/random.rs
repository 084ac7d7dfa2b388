//! Seeded random graphs for property checks.

use rand::Rng;

use crate::graph::Graph;

/// `G(n, p)`: each pair is an edge independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("n within capacity");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v);
            }
        }
    }
    g
}

/// A random 2-connected graph on `n >= 3` vertices, sampled from `G(n, p)`
/// with `p` drawn per attempt, retrying until the sample is 2-connected.
pub fn two_connected<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 3, "2-connected graphs need at least 3 vertices");
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = gnp(rng, n, p);
        if g.is_2connected() {
            return g;
        }
    }
}

/// A uniformly random relabeling of `g`.
pub fn shuffle<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm).expect("valid permutation")
}
