//! Exhaustive verification of the clique bounds over all small graphs.
//!
//! A [`Census`] enumerates every isomorphism class on `n` vertices once and
//! records, per graph class (all / connected / 2-connected) and per value of
//! the circumference or longest-path length, the largest `N_s` and the graphs
//! attaining it. Each verifier is then a query against a census: the
//! maximum over "circumference < k" is the maximum over the buckets below `k`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algorithms::{circumference, clique_vector, count_cliques, has_cycle_at_least, has_path_on, longest_path_vertices};
use crate::bounds::{self, BoundValue};
use crate::budget::Budget;
use crate::constructions::{eg_cycle_extremal, eg_path_extremal, h_graph, HParams};
use crate::enumerate::{fold_graphs, EnumOptions, EnumStats};
use crate::error::{param, Error, Result};
use crate::graph::{canonical_graph, to_graph6, Graph};

/// Achiever lists are truncated to this many graphs (smallest canonical
/// adjacency first); counts stay exact.
pub const ACHIEVER_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    All,
    Connected,
    TwoConnected,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::All, GraphClass::Connected, GraphClass::TwoConnected];

    fn index(self) -> usize {
        self as usize
    }
}

/// The forbidden structure: a long cycle or a long path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    /// Circumference strictly below the threshold.
    CircumferenceLt(usize),
    /// No path on the given number of vertices.
    NoPathOn(usize),
}

impl Constraint {
    fn measure(self) -> usize {
        match self {
            Constraint::CircumferenceLt(_) => 0,
            Constraint::NoPathOn(_) => 1,
        }
    }

    fn threshold(self) -> usize {
        match self {
            Constraint::CircumferenceLt(k) | Constraint::NoPathOn(k) => k,
        }
    }

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Constraint::CircumferenceLt(k) => !has_cycle_at_least(g, k),
            Constraint::NoPathOn(k) => !has_path_on(g, k),
        }
    }
}

/// The statements that can be checked exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// 2-connected, circumference `< k`: `N_s <= max{f_s(n,k,2), f_s(n,k,t)}`.
    Cycle,
    /// `s = 2` edge-extremal graphs of the cycle bound are `H(n,k,2)` or `H(n,k,t)`.
    Kopylov,
    /// Any graph, circumference `< k`: `N_s <= g_s(n,k)`.
    EgCycle,
    /// Connected, no `P_k`: `N_s <= max{f_s(n,k-1,1), f_s(n,k-1,t')}`.
    Path,
    /// Any graph, no `P_k`: `N_s <= h_s(n,k)`.
    PathCorollary,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::Cycle,
        Theorem::Kopylov,
        Theorem::EgCycle,
        Theorem::Path,
        Theorem::PathCorollary,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Cycle => "cycle",
            Theorem::Kopylov => "kopylov",
            Theorem::EgCycle => "eg-cycle",
            Theorem::Path => "path",
            Theorem::PathCorollary => "path-corollary",
        }
    }

    pub fn class(self) -> GraphClass {
        match self {
            Theorem::Cycle | Theorem::Kopylov => GraphClass::TwoConnected,
            Theorem::Path => GraphClass::Connected,
            Theorem::EgCycle | Theorem::PathCorollary => GraphClass::All,
        }
    }

    pub fn constraint(self, k: usize) -> Constraint {
        match self {
            Theorem::Cycle | Theorem::Kopylov | Theorem::EgCycle => Constraint::CircumferenceLt(k),
            Theorem::Path | Theorem::PathCorollary => Constraint::NoPathOn(k),
        }
    }

    /// Whether `(n, k, s)` lies in the domain of the statement.
    pub fn applies(self, n: usize, k: usize, s: usize) -> bool {
        let s_ok = s >= 2 || self == Theorem::Kopylov;
        s_ok && match self {
            Theorem::Cycle | Theorem::Kopylov => n >= k && k >= 5,
            Theorem::EgCycle => k >= 4,
            Theorem::Path => n >= k && k >= 4,
            Theorem::PathCorollary => k >= 3,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Param(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, Default)]
struct Bucket {
    max: u64,
    count: u64,
    achievers: Vec<Graph>,
}

impl Bucket {
    fn offer(&mut self, value: u64, g: &Graph) {
        if self.count == 0 || value > self.max {
            self.max = value;
            self.count = 0;
            self.achievers.clear();
        }
        if value == self.max {
            self.count += 1;
            if self.achievers.len() < ACHIEVER_CAP {
                self.achievers.push(*g);
            } else if let Some(worst) = self.achievers.iter_mut().max_by(|a, b| a.rows().cmp(b.rows())) {
                if g.rows() < worst.rows() {
                    *worst = *g;
                }
            }
        }
    }

    fn merge(mut self, other: Bucket) -> Bucket {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 || other.max > self.max {
            return other;
        }
        if other.max == self.max {
            self.count += other.count;
            self.achievers.extend(other.achievers);
            self.achievers.sort_by(|a, b| a.rows().cmp(b.rows()));
            self.achievers.dedup();
            self.achievers.truncate(ACHIEVER_CAP);
        }
        self
    }
}

/// Per-class maxima of every `N_s` over all graphs on `n` vertices.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    /// `[measure][class][value]`: number of graphs.
    sizes: Vec<Vec<Vec<u64>>>,
    /// `[measure][class][value][s]`.
    buckets: Vec<Vec<Vec<Vec<Bucket>>>>,
    pub stats: EnumStats,
    pub filter: Option<Constraint>,
}

/// Result of one census query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub max: u64,
    pub count: u64,
    pub achievers: Vec<Graph>,
    pub graphs_in_class: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions<'a> {
    pub workers: Option<usize>,
    pub budget: Option<&'a Budget>,
}

impl Census {
    fn empty(n: usize) -> Census {
        let per_value = || vec![vec![Bucket::default(); n + 1]; n + 1];
        Census {
            n,
            sizes: vec![vec![vec![0; n + 1]; 3]; 2],
            buckets: vec![vec![per_value(), per_value(), per_value()]; 2],
            stats: EnumStats {
                n,
                per_order: Vec::new(),
                candidates: 0,
            },
            filter: None,
        }
    }

    fn add(mut self, g: &Graph) -> Census {
        let measures = [circumference(g), longest_path_vertices(g)];
        let mut classes = vec![GraphClass::All];
        if g.is_connected() {
            classes.push(GraphClass::Connected);
            if g.is_2connected() {
                classes.push(GraphClass::TwoConnected);
            }
        }
        let cv = clique_vector(g);
        for (m, &value) in measures.iter().enumerate() {
            for class in &classes {
                let c = class.index();
                self.sizes[m][c][value] += 1;
                for s in 2..=self.n {
                    self.buckets[m][c][value][s].offer(cv.get(s), g);
                }
            }
        }
        self
    }

    fn merge(mut self, other: Census) -> Census {
        for m in 0..2 {
            for c in 0..3 {
                for v in 0..=self.n {
                    self.sizes[m][c][v] += other.sizes[m][c][v];
                    for s in 0..=self.n {
                        let b = std::mem::take(&mut self.buckets[m][c][v][s]);
                        self.buckets[m][c][v][s] = b.merge(other.buckets[m][c][v][s].clone());
                    }
                }
            }
        }
        self
    }

    /// Enumerates every class on `n` vertices. With a `filter`, only graphs
    /// satisfying the (hereditary) constraint are generated, and only
    /// queries implied by it are complete.
    pub fn build(n: usize, filter: Option<Constraint>, opts: VerifyOptions<'_>) -> Result<Census> {
        let keep = move |g: &Graph| filter.is_none_or(|c| c.holds(g));
        let enum_opts = EnumOptions {
            workers: opts.workers,
            budget: opts.budget,
            keep: filter.is_some().then_some(&keep as _),
        };
        let (mut census, stats) = fold_graphs(
            n,
            enum_opts,
            || Census::empty(n),
            |acc, g| acc.add(g),
            Census::merge,
        )?;
        census.stats = stats;
        census.filter = filter;
        Ok(census)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graphs_enumerated(&self) -> u64 {
        self.stats.classes()
    }

    /// Largest `N_s` over graphs of `class` satisfying `constraint`.
    pub fn query(&self, class: GraphClass, constraint: Constraint, s: usize) -> Result<Extremum> {
        if s < 2 {
            return param(format!("clique size must be at least 2, got {s}"));
        }
        if s > self.n {
            // no K_s at all: every graph in the class attains 0
            let all = self.query(class, constraint, 2)?;
            return Ok(Extremum {
                max: 0,
                count: all.graphs_in_class,
                achievers: Vec::new(),
                graphs_in_class: all.graphs_in_class,
            });
        }
        if let Some(f) = self.filter {
            let covered = f.measure() == constraint.measure() && constraint.threshold() <= f.threshold();
            if !covered {
                return param(format!("census filtered by {f:?} cannot answer {constraint:?}"));
            }
        }
        let (m, c) = (constraint.measure(), class.index());
        let top = constraint.threshold().min(self.n + 1);
        let mut acc = Bucket::default();
        let mut in_class = 0;
        for v in 0..top {
            in_class += self.sizes[m][c][v];
            acc = acc.merge(self.buckets[m][c][v][s].clone());
        }
        Ok(Extremum {
            max: acc.max,
            count: acc.count,
            achievers: acc.achievers,
            graphs_in_class: in_class,
        })
    }
}

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// Exact bound, `"p"` or `"p/q"`.
    pub bound: String,
    pub bound_floor: u128,
    pub observed_max: u64,
    /// Whether the bound is expected to be attained at these parameters
    /// (and was checked to be).
    pub tight: bool,
    /// Canonical graph6 of graphs attaining `observed_max` (at most
    /// [`ACHIEVER_CAP`]).
    pub achievers: Vec<String>,
    pub achiever_count: u64,
    /// Canonical graph6 of the constructions that attain the bound.
    pub constructions: Vec<String>,
    pub graphs_enumerated: u64,
    pub graphs_in_class: u64,
    pub elapsed_secs: f64,
}

impl VerifyReport {
    pub const TSV_HEADER: &'static str =
        "theorem\tn\tk\ts\tbound\tobserved_max\ttight\tachiever_count\tgraphs_enumerated\tgraphs_in_class\telapsed_secs";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
            self.theorem,
            self.n,
            self.k,
            self.s,
            self.bound,
            self.observed_max,
            self.tight,
            self.achiever_count,
            self.graphs_enumerated,
            self.graphs_in_class,
            self.elapsed_secs
        )
    }
}

fn canon6(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

fn mismatch<T>(context: String, expected: impl fmt::Display, observed: impl fmt::Display) -> Result<T> {
    Err(Error::Mismatch {
        context,
        expected: expected.to_string(),
        observed: observed.to_string(),
    })
}

/// Checks a theorem at `(n, k, s)` against an existing census.
pub fn check(census: &Census, theorem: Theorem, k: usize, s: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let n = census.n();
    if !theorem.applies(n, k, s) {
        return param(format!("{theorem} does not apply to n = {n}, k = {k}, s = {s}"));
    }
    let s = if theorem == Theorem::Kopylov { 2 } else { s };
    let ctx = format!("{theorem} n={n} k={k} s={s}");
    let constraint = theorem.constraint(k);
    let class = theorem.class();
    let ext = census.query(class, constraint, s)?;

    // bound, whether it must be attained, and the graphs expected to attain it
    let (bound, tight, candidates): (BoundValue, bool, Vec<Graph>) = match theorem {
        Theorem::Cycle | Theorem::Kopylov => {
            let b = bounds::cycle_bound(n, k, s)?;
            let gs = b
                .maximizers()
                .into_iter()
                .map(|a| h_graph(HParams::new(n, k, a)?))
                .collect::<Result<_>>()?;
            (BoundValue::integer(b.value), true, gs)
        }
        Theorem::EgCycle => {
            let b = bounds::g_s(n, k, s)?;
            let tight = (n - 1).is_multiple_of(k - 2);
            let gs = if tight { vec![eg_cycle_extremal(n, k)?] } else { vec![] };
            (b, tight, gs)
        }
        Theorem::Path => {
            let b = bounds::path_bound(n, k, s)?;
            let gs = b
                .maximizers()
                .into_iter()
                .map(|a| h_graph(HParams::new(n, k - 1, a)?))
                .collect::<Result<_>>()?;
            (BoundValue::integer(b.value), true, gs)
        }
        Theorem::PathCorollary => {
            let b = bounds::h_s(n, k, s)?;
            let tight = n.is_multiple_of(k - 1);
            let gs = if tight { vec![eg_path_extremal(n, k)?] } else { vec![] };
            (b, tight, gs)
        }
    };

    let observed = ext.max as u128;
    if !bound.ge_int(observed) {
        return Err(Error::Violation {
            context: ctx,
            graph6: ext.achievers.first().map(to_graph6).unwrap_or_default(),
            observed,
            bound: bound.to_string(),
        });
    }

    let mut constructions = Vec::new();
    if tight {
        if !bound.eq_int(observed) {
            return mismatch(ctx, bound, observed);
        }
        for g in &candidates {
            let in_class = match class {
                GraphClass::All => true,
                GraphClass::Connected => g.is_connected(),
                GraphClass::TwoConnected => g.is_2connected(),
            };
            if in_class && constraint.holds(g) && count_cliques(g, s) as u128 == observed {
                constructions.push(canon6(g));
            }
        }
        if constructions.is_empty() {
            return mismatch(format!("{ctx}: attainment by construction"), observed, "no construction attains it");
        }
        constructions.sort();
        constructions.dedup();
    }

    let achievers: Vec<String> = {
        let mut a: Vec<String> = ext.achievers.iter().map(to_graph6).collect();
        a.sort();
        a
    };

    if theorem == Theorem::Kopylov {
        let allowed: Vec<String> = {
            let t = bounds::cycle_t(k);
            let mut v = vec![canon6(&h_graph(HParams::new(n, k, 2)?)?), canon6(&h_graph(HParams::new(n, k, t)?)?)];
            v.sort();
            v.dedup();
            v
        };
        if ext.count as usize > allowed.len() || achievers.len() as u64 != ext.count {
            return mismatch(format!("{ctx}: extremal graphs"), allowed.join(","), achievers.join(","));
        }
        if let Some(bad) = achievers.iter().find(|a| !allowed.contains(a)) {
            return mismatch(format!("{ctx}: extremal graphs"), allowed.join(","), bad);
        }
    }

    Ok(VerifyReport {
        theorem,
        n,
        k,
        s,
        bound: bound.to_string(),
        bound_floor: bound.floor(),
        observed_max: ext.max,
        tight,
        achievers,
        achiever_count: ext.count,
        constructions,
        graphs_enumerated: census.graphs_enumerated(),
        graphs_in_class: ext.graphs_in_class,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Builds a census restricted to the theorem's constraint and checks it.
pub fn verify(theorem: Theorem, n: usize, k: usize, s: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    if !theorem.applies(n, k, s) {
        return param(format!("{theorem} does not apply to n = {n}, k = {k}, s = {s}"));
    }
    let start = Instant::now();
    let census = Census::build(n, Some(theorem.constraint(k)), opts)?;
    let mut report = check(&census, theorem, k, s)?;
    report.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

pub fn verify_cycle_theorem(n: usize, k: usize, s: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    verify(Theorem::Cycle, n, k, s, opts)
}

pub fn verify_kopylov_uniqueness(n: usize, k: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    verify(Theorem::Kopylov, n, k, 2, opts)
}

pub fn verify_eg_cycle_corollary(n: usize, k: usize, s: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    verify(Theorem::EgCycle, n, k, s, opts)
}

pub fn verify_path_theorem(n: usize, k: usize, s: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    verify(Theorem::Path, n, k, s, opts)
}

pub fn verify_path_corollary(n: usize, k: usize, s: usize, opts: VerifyOptions<'_>) -> Result<VerifyReport> {
    verify(Theorem::PathCorollary, n, k, s, opts)
}

/// Parameter grid for [`sweep`]. Ranges are inclusive; combinations outside
/// a theorem's domain, or with `k > n`, are skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n_range: (usize, usize),
    pub k_range: (usize, usize),
    pub s_range: (usize, usize),
    pub theorems: Vec<Theorem>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub reports: Vec<VerifyReport>,
    /// False when the budget ran out before the grid was covered.
    pub complete: bool,
    pub elapsed_secs: f64,
}

/// Runs every applicable verifier over the grid, one unfiltered census per
/// `n`. Stops at the first violation or mismatch and returns it as the
/// error.
pub fn sweep(spec: &SweepSpec, opts: VerifyOptions<'_>) -> Result<SweepReport> {
    let start = Instant::now();
    let mut reports = Vec::new();
    let (n_lo, n_hi) = spec.n_range;
    for n in n_lo..=n_hi {
        let jobs: Vec<(Theorem, usize, usize)> = spec
            .theorems
            .iter()
            .flat_map(|&t| {
                let (k_lo, k_hi) = spec.k_range;
                (k_lo..=k_hi.min(n)).flat_map(move |k| {
                    let s_range = if t == Theorem::Kopylov { (2, 2) } else { spec.s_range };
                    (s_range.0..=s_range.1).map(move |s| (t, k, s))
                })
            })
            .filter(|&(t, k, s)| t.applies(n, k, s))
            .collect();
        if jobs.is_empty() {
            continue;
        }
        let census = match Census::build(n, None, opts) {
            Ok(c) => c,
            Err(Error::Budget) => {
                return Ok(SweepReport {
                    reports,
                    complete: false,
                    elapsed_secs: start.elapsed().as_secs_f64(),
                })
            }
            Err(e) => return Err(e),
        };
        for (t, k, s) in jobs {
            reports.push(check(&census, t, k, s)?);
        }
    }
    Ok(SweepReport {
        reports,
        complete: true,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions<'static> {
        VerifyOptions::default()
    }

    #[test]
    fn cycle_theorem_7_5() {
        let r = verify_cycle_theorem(7, 5, 2, opts()).unwrap();
        assert_eq!((r.bound.as_str(), r.observed_max), ("11", 11));
        let h = canon6(&h_graph(HParams::new(7, 5, 2).unwrap()).unwrap());
        assert!(r.achievers.contains(&h));
        assert_eq!(r.constructions, vec![h]);
        let r = verify_cycle_theorem(7, 5, 3, opts()).unwrap();
        assert_eq!((r.bound.as_str(), r.observed_max), ("5", 5));
    }

    #[test]
    fn kopylov_small_cases() {
        let r = verify_kopylov_uniqueness(7, 5, opts()).unwrap();
        assert_eq!(r.achiever_count, 1);
        let r = verify_kopylov_uniqueness(8, 5, opts()).unwrap();
        assert_eq!(r.achievers, vec![canon6(&h_graph(HParams::new(8, 5, 2).unwrap()).unwrap())]);
        for k in 5..=7 {
            verify_kopylov_uniqueness(k, k, opts()).unwrap();
        }
    }

    #[test]
    fn eg_cycle_7_5() {
        let r = verify_eg_cycle_corollary(7, 5, 2, opts()).unwrap();
        assert_eq!(r.observed_max, 12);
        assert!(r.tight);
        let r = verify_eg_cycle_corollary(7, 4, 3, opts()).unwrap();
        // (k-2) | (n-1): three triangles chained
        assert_eq!((r.bound.as_str(), r.observed_max), ("3", 3));
        // n < k: the complete graph is allowed
        let r = verify_eg_cycle_corollary(4, 6, 3, opts()).unwrap();
        assert_eq!(r.observed_max, 4);
    }

    #[test]
    fn path_statements() {
        let r = verify_path_corollary(8, 5, 3, opts()).unwrap();
        assert_eq!((r.observed_max, r.bound.as_str()), (8, "8"));
        assert_eq!(r.achievers, vec![canon6(&eg_path_extremal(8, 5).unwrap())]);
        let r = verify_path_theorem(8, 5, 2, opts()).unwrap();
        assert_eq!(r.observed_max, 8);
        for n in 3..=8 {
            let r = verify_path_corollary(n, 3, 2, opts()).unwrap();
            assert_eq!(r.observed_max as usize, n / 2);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(verify_cycle_theorem(6, 4, 2, opts()).is_err());
        assert!(verify_cycle_theorem(5, 6, 2, opts()).is_err());
        assert!(verify_path_corollary(5, 2, 2, opts()).is_err());
        assert!(verify_cycle_theorem(7, 5, 1, opts()).is_err());
    }

    #[test]
    fn census_queries_need_matching_filter() {
        let c = Census::build(6, Some(Constraint::CircumferenceLt(5)), opts()).unwrap();
        assert!(c.query(GraphClass::All, Constraint::CircumferenceLt(5), 2).is_ok());
        assert!(c.query(GraphClass::All, Constraint::CircumferenceLt(6), 2).is_err());
        assert!(c.query(GraphClass::All, Constraint::NoPathOn(4), 2).is_err());
    }

    #[test]
    fn large_s_has_zero_max() {
        let c = Census::build(5, None, opts()).unwrap();
        let e = c.query(GraphClass::Connected, Constraint::NoPathOn(6), 7).unwrap();
        assert_eq!((e.max, e.count), (0, 21));
    }

    #[test]
    fn empty_sweep() {
        let spec = SweepSpec {
            n_range: (5, 4),
            k_range: (5, 5),
            s_range: (2, 2),
            theorems: Theorem::ALL.to_vec(),
        };
        let r = sweep(&spec, opts()).unwrap();
        assert!(r.reports.is_empty() && r.complete);
    }

    #[test]
    fn exhausted_budget_marks_sweep_incomplete() {
        let b = Budget::unlimited();
        b.cancel();
        let spec = SweepSpec {
            n_range: (5, 6),
            k_range: (5, 6),
            s_range: (2, 3),
            theorems: vec![Theorem::Cycle],
        };
        let r = sweep(&spec, VerifyOptions { workers: None, budget: Some(&b) }).unwrap();
        assert!(!r.complete);
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }
}
