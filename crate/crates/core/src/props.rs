//! Seeded falsification harness for the path lemma, disintegration cores,
//! and k-closure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algorithms::{
    circumference, closure, core, core_in_order, count_cliques, has_cycle_at_least, kopylov_lemma_check_with,
    longest_path_between, random_maximal_path, PathWitness,
};
use crate::graph::{to_graph6, Graph, VertexSet};
use crate::random::{gnp, two_connected};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproducer {
    pub graph6: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub samples: u64,
    pub failures: u64,
    /// First failing input.
    pub reproducer: Option<Reproducer>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub samples: u64,
    pub checks: Vec<CheckOutcome>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Tally {
    outcome: CheckOutcome,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            outcome: CheckOutcome {
                name: name.to_string(),
                samples: 0,
                failures: 0,
                reproducer: None,
            },
        }
    }

    fn record(&mut self, ok: bool, g: &Graph, witness: impl FnOnce() -> String) {
        self.outcome.samples += 1;
        if !ok {
            self.outcome.failures += 1;
            if self.outcome.reproducer.is_none() {
                self.outcome.reproducer = Some(Reproducer {
                    graph6: to_graph6(g),
                    witness: witness(),
                });
            }
        }
    }
}

type CircFn<'a> = dyn Fn(&Graph) -> usize + Sync + 'a;

/// Sample counts scale with `samples`: the lemma check runs `samples`
/// times, closure checks `samples / 10`, core checks `samples / 100`
/// graphs (10 deletion orders each).
pub struct PropertySuite<'a> {
    seed: u64,
    samples: u64,
    circumference: Box<CircFn<'a>>,
}

impl<'a> PropertySuite<'a> {
    pub fn new(seed: u64, samples: u64) -> Self {
        PropertySuite {
            seed,
            samples,
            circumference: Box::new(circumference),
        }
    }

    /// Replaces the circumference routine used by the checks.
    pub fn with_circumference(mut self, f: impl Fn(&Graph) -> usize + Sync + 'a) -> Self {
        self.circumference = Box::new(f);
        self
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }

    fn lemma(&self) -> CheckOutcome {
        let mut t = Tally::new("kopylov-lemma");
        let mut rng = self.rng(1);
        let c5 = Graph::cycle(5).unwrap();
        let ham = PathWitness::new(&c5, (0..5).collect()).unwrap();
        let circ = &*self.circumference;
        let mut run = |g: &Graph, p: &PathWitness| {
            let ok = kopylov_lemma_check_with(g, p, circ).unwrap_or(false);
            t.record(ok, g, || format!("{:?}", p.vertices()));
        };
        run(&c5, &ham);
        for _ in 1..self.samples {
            let n = rng.gen_range(3..=10);
            let g = two_connected(&mut rng, n);
            let p = random_maximal_path(&g, &mut rng);
            run(&g, &p);
        }
        t.outcome
    }

    fn cycle_predicate(&self) -> CheckOutcome {
        let mut t = Tally::new("cycle-predicate");
        let mut rng = self.rng(2);
        for _ in 0..self.samples {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.8);
            let g = gnp(&mut rng, n, p);
            let k = rng.gen_range(3..=n.max(3) + 1);
            let c = (self.circumference)(&g);
            t.record(has_cycle_at_least(&g, k) == (c >= k), &g, || format!("k={k} circumference={c}"));
        }
        t.outcome
    }

    fn core_orders(&self) -> (CheckOutcome, CheckOutcome) {
        let mut order_t = Tally::new("core-order-independence");
        let mut nest_t = Tally::new("core-nesting");
        let mut rng = self.rng(3);
        for _ in 0..(self.samples / 100).max(1) {
            let n = rng.gen_range(2..=16);
            let p = rng.gen_range(0.1..0.8);
            let g = gnp(&mut rng, n, p);
            let alpha = rng.gen_range(0..n);
            let reference = core(&g, alpha);
            let mut order: Vec<usize> = (0..n).collect();
            for _ in 0..10 {
                order.shuffle(&mut rng);
                let r = core_in_order(&g, alpha, &order);
                let s = r.survivors;
                let min_ok = s.iter().all(|v| (g.neighbors(v) & s).len() > alpha);
                let trace_ok = r.trace.iter().all(|&(_, d)| d <= alpha);
                order_t.record(s == reference.survivors && min_ok && trace_ok, &g, || {
                    format!("alpha={alpha} order={order:?}")
                });
            }
            let beta = rng.gen_range(0..=alpha);
            let inner = reference.survivors;
            let outer = core(&g, beta).survivors;
            nest_t.record(inner.is_subset(outer), &g, || format!("alpha={alpha} beta={beta}"));
        }
        (order_t.outcome, nest_t.outcome)
    }

    fn closures(&self) -> CheckOutcome {
        let mut t = Tally::new("closure");
        let mut rng = self.rng(4);
        let circ = &*self.circumference;
        for _ in 0..(self.samples / 10).max(1) {
            let n = rng.gen_range(3..=10);
            let p = rng.gen_range(0.1..0.6);
            let g = gnp(&mut rng, n, p);
            let c = circ(&g);
            let k = rng.gen_range(c.max(2) + 1..=n + 1);
            let witness = || format!("k={k}");
            let Ok(cl) = closure(&g, k) else {
                t.record(false, &g, witness);
                continue;
            };
            let contains = g.edges().all(|(u, v)| cl.has_edge(u, v));
            let below = circ(&cl) < k;
            let saturated = cl.non_edges().all(|(x, y)| {
                circ(&cl.add_edge(x, y).unwrap()) >= k
                    && longest_path_between(&cl, x, y).is_some_and(|p| p.edge_count() + 1 >= k)
            });
            let idempotent = closure(&cl, k).is_ok_and(|again| again == cl);
            t.record(contains && below && saturated && idempotent, &g, witness);
        }
        t.outcome
    }

    fn clique_counts(&self) -> CheckOutcome {
        let mut t = Tally::new("clique-count");
        let mut rng = self.rng(5);
        for _ in 0..(self.samples / 10).max(1) {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = gnp(&mut rng, n, p);
            let mut naive = [0u64; 6];
            for mask in 0u64..1 << n {
                let s = VertexSet(mask);
                let size = s.len();
                if (1..=5).contains(&size) && s.iter().all(|v| (s - VertexSet::singleton(v)).is_subset(g.neighbors(v))) {
                    naive[size] += 1;
                }
            }
            let ok = (1..=5).all(|s| count_cliques(&g, s) == naive[s]);
            t.record(ok, &g, || format!("naive={naive:?}"));
        }
        t.outcome
    }

    pub fn run(&self) -> PropertyReport {
        let (orders, nesting) = self.core_orders();
        PropertyReport {
            seed: self.seed,
            samples: self.samples,
            checks: vec![
                self.lemma(),
                self.cycle_predicate(),
                orders,
                nesting,
                self.closures(),
                self.clique_counts(),
            ],
        }
    }
}

pub fn random_property_suite(seed: u64, samples: u64) -> PropertyReport {
    PropertySuite::new(seed, samples).run()
}
