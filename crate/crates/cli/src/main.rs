//! `cyclique`: command-line front end.
//!
//! Exit codes: 0 success, 1 a bound or lemma check failed, 2 usage or input
//! error, 3 time budget exhausted.

mod render;

use std::io::{self, BufRead};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use cyclique::algorithms::{self, PathWitness};
use cyclique::constructions::{self, HParams};
use cyclique::graph::from_graph6;
use cyclique::props::random_property_suite;
use cyclique::verify::{self, SweepSpec, Theorem, VerifyOptions};
use cyclique::{Budget, Error, Graph};

use render::Format;

#[derive(Parser, Debug)]
#[command(name = "cyclique", version, about = "Clique counts in graphs without long cycles or paths")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, env = "CYCLIQUE_WORKERS", global = true)]
    workers: Option<usize>,

    /// Wall-clock budget in seconds for long searches.
    #[arg(long, global = true, value_parser = parse_positive_secs)]
    budget_secs: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

fn parse_positive_secs(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number of seconds, got {s:?}")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit an extremal graph as graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Print every bound that applies to (n, k, s).
    Bound { n: usize, k: usize, s: usize },
    /// Count cliques of each size (or of one size).
    Count {
        #[command(flatten)]
        input: GraphInput,
        /// Report only N_s for this s.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Length of a longest cycle (0 for forests).
    Circumference {
        #[command(flatten)]
        input: GraphInput,
    },
    /// The (alpha+1)-core left by deleting vertices of degree <= alpha.
    Core {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        alpha: usize,
    },
    /// Greedy k-closure: add edges while no cycle of length >= k appears.
    Closure {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
    },
    /// Check the long-cycle guarantee for a path in a 2-connected graph.
    LemmaCheck {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated path vertices; defaults to a random maximal path.
        #[arg(long, value_delimiter = ',')]
        path: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Exhaustively check one statement at (n, k, s).
    Verify {
        theorem: TheoremArg,
        n: usize,
        k: usize,
        /// Clique size; not used by `kopylov`.
        s: Option<usize>,
    },
    /// Check every applicable statement over a parameter grid.
    Sweep {
        /// Inclusive range such as 5..9 or a single value.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        k_range: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..4")]
        s_range: (usize, usize),
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = TheoremArg::all())]
        theorems: Vec<TheoremArg>,
    },
    /// Seeded randomized property checks.
    Props {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// H(n,k,a): parts A, C, B of sizes a, k-2a, n-k+a.
    H { n: usize, k: usize, a: usize },
    /// Chain of K_{k-1} blocks; needs (k-2) | (n-1).
    EgCycle { n: usize, k: usize },
    /// Disjoint K_{k-1} copies; needs (k-1) | n.
    EgPath { n: usize, k: usize },
    /// Add a vertex adjacent to every vertex of each input graph.
    DominatingJoin {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(clap::Args, Debug)]
struct GraphInput {
    /// graph6 string; read one graph per line from standard input if absent.
    #[arg(long)]
    graph: Option<String>,
}

impl GraphInput {
    fn graphs(&self) -> Result<Vec<Graph>, Error> {
        match &self.graph {
            Some(s) => Ok(vec![from_graph6(s)?]),
            None => {
                let mut out = Vec::new();
                for line in io::stdin().lock().lines() {
                    let line = line.map_err(|e| Error::Param(format!("reading stdin: {e}")))?;
                    if !line.trim().is_empty() {
                        out.push(from_graph6(&line)?);
                    }
                }
                if out.is_empty() {
                    return Err(Error::Param("no graph6 input".into()));
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Cycle,
    Kopylov,
    EgCycle,
    Path,
    PathCorollary,
}

impl TheoremArg {
    fn all() -> Vec<TheoremArg> {
        vec![
            TheoremArg::Cycle,
            TheoremArg::Kopylov,
            TheoremArg::EgCycle,
            TheoremArg::Path,
            TheoremArg::PathCorollary,
        ]
    }
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Theorem {
        match t {
            TheoremArg::Cycle => Theorem::Cycle,
            TheoremArg::Kopylov => Theorem::Kopylov,
            TheoremArg::EgCycle => Theorem::EgCycle,
            TheoremArg::Path => Theorem::Path,
            TheoremArg::PathCorollary => Theorem::PathCorollary,
        }
    }
}

impl std::fmt::Display for TheoremArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(Theorem::from(*self).id())
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok((parse(lo)?, parse(hi)?))
        }
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Violation { .. } | Error::Mismatch { .. } => 1,
            Error::Param(_) | Error::Parse { .. } => 2,
            Error::Budget => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = cli.budget_secs.map(|s| Budget::with_timeout(Duration::from_secs_f64(s)));
    let opts = VerifyOptions {
        workers: cli.workers,
        budget: budget.as_ref(),
    };
    let fmt = cli.format;
    match cli.command {
        Command::Construct { family } => {
            let graphs = match family {
                Family::H { n, k, a } => vec![constructions::h_graph(HParams::new(n, k, a)?)?],
                Family::EgCycle { n, k } => vec![constructions::eg_cycle_extremal(n, k)?],
                Family::EgPath { n, k } => vec![constructions::eg_path_extremal(n, k)?],
                Family::DominatingJoin { input } => input
                    .graphs()?
                    .iter()
                    .map(constructions::dominating_join)
                    .collect::<Result<_, _>>()?,
            };
            for g in &graphs {
                render::graph(fmt, g);
            }
        }
        Command::Bound { n, k, s } => render::bounds(fmt, n, k, s)?,
        Command::Count { input, size } => {
            for g in input.graphs()? {
                render::cliques(fmt, &g, &algorithms::clique_vector(&g), size);
            }
        }
        Command::Circumference { input } => {
            for g in input.graphs()? {
                let c = match &budget {
                    Some(b) => algorithms::circumference_with_budget(&g, b)?,
                    None => algorithms::circumference(&g),
                };
                render::scalar(fmt, &g, "circumference", c);
            }
        }
        Command::Core { input, alpha } => {
            for g in input.graphs()? {
                render::core(fmt, &g, &algorithms::core(&g, alpha));
            }
        }
        Command::Closure { input, k } => {
            let b = budget.clone().unwrap_or_default();
            for g in input.graphs()? {
                render::graph(fmt, &algorithms::closure_with_budget(&g, k, &b)?);
            }
        }
        Command::LemmaCheck { input, path, seed } => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut all_ok = true;
            for g in input.graphs()? {
                let p = match &path {
                    Some(v) => PathWitness::new(&g, v.clone())?,
                    None => algorithms::random_maximal_path(&g, &mut rng),
                };
                let ok = algorithms::kopylov_lemma_check(&g, &p)?;
                render::lemma(fmt, &g, &p, ok)?;
                all_ok &= ok;
            }
            if !all_ok {
                return Err(Failure {
                    code: 1,
                    message: "lemma check failed".into(),
                });
            }
        }
        Command::Verify { theorem, n, k, s } => {
            let theorem = Theorem::from(theorem);
            let s = match (theorem, s) {
                (Theorem::Kopylov, _) => 2,
                (_, Some(s)) => s,
                (_, None) => {
                    return Err(Failure {
                        code: 2,
                        message: format!("verify {theorem} needs a clique size s"),
                    })
                }
            };
            let report = verify::verify(theorem, n, k, s, opts)?;
            render::reports(fmt, std::slice::from_ref(&report));
        }
        Command::Sweep {
            n_range,
            k_range,
            s_range,
            theorems,
        } => {
            if n_range.1 > cyclique::enumerate::MAX_ENUM_VERTICES {
                return Err(Failure {
                    code: 2,
                    message: format!("n range exceeds {}", cyclique::enumerate::MAX_ENUM_VERTICES),
                });
            }
            let spec = SweepSpec {
                n_range,
                k_range,
                s_range,
                theorems: theorems.into_iter().map(Theorem::from).collect(),
            };
            let report = verify::sweep(&spec, opts)?;
            render::sweep(fmt, &report);
            if !report.complete {
                return Err(Failure {
                    code: 3,
                    message: "budget exhausted; sweep incomplete".into(),
                });
            }
        }
        Command::Props { seed, samples } => {
            let report = random_property_suite(seed, samples);
            render::props(fmt, &report);
            if !report.passed() {
                return Err(Failure {
                    code: 1,
                    message: "property check failed".into(),
                });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

