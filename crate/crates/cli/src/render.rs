use clap::ValueEnum;
use cyclique::algorithms::{CliqueVector, CoreResult, PathWitness};
use cyclique::bounds::{self, BoundValue, EndpointMax};
use cyclique::graph::to_graph6;
use cyclique::props::PropertyReport;
use cyclique::verify::{SweepReport, VerifyReport};
use cyclique::{Error, Graph};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Tsv,
    Json,
}

fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("json values serialize"));
}

pub fn graph(fmt: Format, g: &Graph) {
    match fmt {
        Format::Json => emit_json(&json!({ "graph6": to_graph6(g), "n": g.n(), "edges": g.edge_count() })),
        _ => println!("{}", to_graph6(g)),
    }
}

pub fn scalar(fmt: Format, g: &Graph, name: &str, value: usize) {
    match fmt {
        Format::Plain => println!("{value}"),
        Format::Tsv => println!("{}\t{value}", to_graph6(g)),
        Format::Json => emit_json(&json!({ "graph6": to_graph6(g), name: value })),
    }
}

pub fn cliques(fmt: Format, g: &Graph, cv: &CliqueVector, size: Option<usize>) {
    let g6 = to_graph6(g);
    match (fmt, size) {
        (Format::Plain, Some(s)) => println!("{}", cv.get(s)),
        (Format::Tsv, Some(s)) => println!("{g6}\t{s}\t{}", cv.get(s)),
        (Format::Json, Some(s)) => emit_json(&json!({ "graph6": g6, "s": s, "count": cv.get(s) })),
        (Format::Plain, None) => {
            for (i, c) in cv.0.iter().enumerate() {
                println!("N_{} = {c}", i + 1);
            }
        }
        (Format::Tsv, None) => {
            let counts: Vec<String> = cv.0.iter().map(u64::to_string).collect();
            println!("{g6}\t{}", counts.join("\t"));
        }
        (Format::Json, None) => emit_json(&json!({ "graph6": g6, "counts": cv.0 })),
    }
}

pub fn core(fmt: Format, g: &Graph, c: &CoreResult) {
    let survivors: Vec<usize> = c.survivors.iter().collect();
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let deleted: Vec<usize> = c.trace.iter().map(|&(v, _)| v).collect();
    match fmt {
        Format::Plain => {
            println!("core: {}", list(&survivors));
            println!("deleted: {}", list(&deleted));
        }
        Format::Tsv => println!("{}\t{}\t{}\t{}", to_graph6(g), c.alpha, list(&survivors), list(&deleted)),
        Format::Json => emit_json(&json!({
            "graph6": to_graph6(g),
            "alpha": c.alpha,
            "core": survivors,
            "trace": c.trace,
        })),
    }
}

pub fn lemma(fmt: Format, g: &Graph, p: &PathWitness, ok: bool) -> Result<(), Error> {
    let degs = [
        cyclique::algorithms::path_degree(g, p, p.x())?,
        cyclique::algorithms::path_degree(g, p, p.y())?,
    ];
    let path = p.vertices().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    match fmt {
        Format::Plain => println!("{} path={path} d(x)={} d(y)={}", if ok { "holds" } else { "FAILS" }, degs[0], degs[1]),
        Format::Tsv => println!("{}\t{path}\t{}\t{}\t{ok}", to_graph6(g), degs[0], degs[1]),
        Format::Json => emit_json(&json!({
            "graph6": to_graph6(g),
            "path": p.vertices(),
            "degree_x": degs[0],
            "degree_y": degs[1],
            "holds": ok,
        })),
    }
    Ok(())
}

fn endpoint_json(e: &EndpointMax) -> Value {
    json!({
        "value": e.value.to_string(),
        "low_a": e.low_a,
        "low_value": e.low_value.to_string(),
        "high_a": e.high_a,
        "high_value": e.high_value.to_string(),
        "maximizers": e.maximizers(),
    })
}

fn ratio_json(b: &BoundValue) -> Value {
    json!({ "value": b.to_string(), "floor": b.floor().to_string() })
}

pub fn bounds(fmt: Format, n: usize, k: usize, s: usize) -> Result<(), Error> {
    let g = bounds::g_s(n, k, s)?;
    let h = bounds::h_s(n, k, s)?;
    let f: Vec<(usize, u128)> = if n >= k {
        (1..=bounds::cycle_t(k)).map(|a| bounds::f_s(n, k, a, s).map(|v| (a, v))).collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let cycle = bounds::cycle_bound(n, k, s).ok();
    let path = bounds::path_bound(n, k, s).ok();
    match fmt {
        Format::Json => emit_json(&json!({
            "n": n,
            "k": k,
            "s": s,
            "f": f.iter().map(|(a, v)| json!({ "a": a, "value": v.to_string() })).collect::<Vec<_>>(),
            "cycle_bound": cycle.as_ref().map(endpoint_json),
            "path_bound": path.as_ref().map(endpoint_json),
            "g": ratio_json(&g),
            "h": ratio_json(&h),
        })),
        Format::Plain | Format::Tsv => {
            let sep = if fmt == Format::Tsv { "\t" } else { " " };
            for (a, v) in &f {
                println!("f(a={a}){sep}{v}");
            }
            if let Some(c) = cycle {
                println!("cycle_bound{sep}{}", c.value);
            }
            if let Some(p) = path {
                println!("path_bound{sep}{}", p.value);
            }
            println!("g{sep}{g}");
            println!("h{sep}{h}");
        }
    }
    Ok(())
}

fn report_plain(r: &VerifyReport) {
    println!(
        "{} n={} k={} s={}: max={} bound={} tight={} achievers={} ({} graphs in class of {})",
        r.theorem, r.n, r.k, r.s, r.observed_max, r.bound, r.tight, r.achiever_count, r.graphs_in_class, r.graphs_enumerated
    );
}

pub fn reports(fmt: Format, rs: &[VerifyReport]) {
    match fmt {
        Format::Plain => rs.iter().for_each(report_plain),
        Format::Tsv => {
            println!("{}", VerifyReport::TSV_HEADER);
            rs.iter().for_each(|r| println!("{}", r.tsv_row()));
        }
        Format::Json => rs.iter().for_each(|r| emit_json(&serde_json::to_value(r).expect("report serializes"))),
    }
}

pub fn sweep(fmt: Format, r: &SweepReport) {
    match fmt {
        Format::Json => emit_json(&serde_json::to_value(r).expect("report serializes")),
        _ => {
            reports(fmt, &r.reports);
            if fmt == Format::Plain {
                println!("{} checks, complete={}, {:.3}s", r.reports.len(), r.complete, r.elapsed_secs);
            }
        }
    }
}

pub fn props(fmt: Format, r: &PropertyReport) {
    match fmt {
        Format::Json => emit_json(&serde_json::to_value(r).expect("report serializes")),
        _ => {
            for c in &r.checks {
                let status = if c.failures == 0 { "PASS" } else { "FAIL" };
                match fmt {
                    Format::Tsv => println!("{}\t{}\t{}\t{status}", c.name, c.samples, c.failures),
                    _ => println!("{status} {} ({} samples, {} failures)", c.name, c.samples, c.failures),
                }
                if let Some(rep) = &c.reproducer {
                    println!("  reproducer: {} {}", rep.graph6, rep.witness);
                }
            }
        }
    }
}
