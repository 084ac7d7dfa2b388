use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclique"))
        .args(args)
        .env_remove("CYCLIQUE_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("valid json line")).collect()
}

#[test]
fn construct_then_count_and_measure() {
    let h = run(&["construct", "h", "14", "11", "3"], None);
    assert!(h.status.success());
    let g6 = stdout(&h);
    let count = run(&["count", "--size", "2"], Some(&g6));
    assert_eq!(stdout(&count).trim(), "46");
    let circ = run(&["circumference"], Some(&g6));
    assert_eq!(stdout(&circ).trim(), "10");
}

#[test]
fn multiple_graphs_on_stdin() {
    let out = run(&["circumference"], Some("Dhc\nC~\n\n@\n"));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n4\n0\n");
}

#[test]
fn bound_lines() {
    let out = run(&["bound", "7", "5", "2"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "cycle_bound 11"), "{text}");
    assert!(text.lines().any(|l| l == "path_bound 7"), "{text}");
    assert!(text.lines().any(|l| l == "h 21/2"), "{text}");
}

#[test]
fn bound_json() {
    let out = run(&["--format", "json", "bound", "9", "7", "3"], None);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    // f_3(9,7,2) = C(5,3) + 4 C(2,2), f_3(9,7,3) = C(4,3) + 5 C(3,2).
    assert_eq!(v["cycle_bound"]["low_value"], "14");
    assert_eq!(v["cycle_bound"]["value"], "19");
    assert_eq!(v["cycle_bound"]["maximizers"], serde_json::json!([3]));
    // 8 C(6,3) / 5 and 9 C(6,3) / 6.
    assert_eq!(v["g"]["value"], "32");
    assert_eq!(v["h"]["value"], "30");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bound", "7", "5"], None).status.code(), Some(2));
    assert_eq!(run(&["bound", "7", "5", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["construct", "h", "8", "6", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["construct", "eg-path", "7", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "cycle", "7", "5"], None).status.code(), Some(2));
    assert_eq!(run(&["nonsense"], None).status.code(), Some(2));
}

#[test]
fn malformed_graph6_reports_offset() {
    let out = run(&["count", "--graph", "D!!"], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 1"), "{err}");
    assert_eq!(run(&["circumference"], Some("Dh\n")).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let out = run(&["--format", "json", "verify", "cycle", "7", "5", "2"], None);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["theorem"], "cycle");
    assert_eq!(v["observed_max"], 11);
    assert_eq!(v["bound"], "11");
    assert_eq!(v["tight"], true);
    assert_eq!(v["graphs_in_class"], 2);
    assert!(v["graphs_enumerated"].as_u64().unwrap() <= 1044);
}

#[test]
fn sweep_tsv_and_json() {
    let tsv = run(&["--format", "tsv", "sweep", "--n-range", "5..6", "--k-range", "5..6", "--s-range", "2..2", "--theorems", "cycle"], None);
    assert!(tsv.status.success());
    let text = stdout(&tsv);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("theorem\tn\tk"));
    assert_eq!(lines.count(), 3);

    let json = run(&["--format", "json", "sweep", "--n-range", "5..6", "--k-range", "5..6"], None);
    assert!(json.status.success());
    let v = &json_lines(&json)[0];
    assert_eq!(v["complete"], true);
    assert!(!v["reports"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_rejects_large_n() {
    let out = run(&["sweep", "--n-range", "5..12", "--k-range", "5..5"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tiny_budget_exits_3() {
    let out = run(&["--budget-secs", "0.000001", "sweep", "--n-range", "9..9", "--k-range", "5..9"], None);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn lemma_check_outcomes() {
    let ok = run(&["lemma-check", "--graph", "Dhc"], None);
    assert!(ok.status.success());
    assert!(stdout(&ok).starts_with("holds"));
    let not_path = run(&["lemma-check", "--graph", "Dhc", "--path", "0,2"], None);
    assert_eq!(not_path.status.code(), Some(2));
    // The path P_4 is not 2-connected.
    let path = run(&["lemma-check", "--graph", "Ch"], None);
    assert_eq!(path.status.code(), Some(2));
}

#[test]
fn core_and_closure() {
    let out = run(&["--format", "json", "core", "--alpha", "1", "--graph", "Dhc"], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["core"], serde_json::json!([0, 1, 2, 3, 4]));
    let closed = run(&["closure", "--k", "5", "--graph", "Ch"], None);
    assert!(closed.status.success());
    let g6 = stdout(&closed);
    assert_eq!(stdout(&run(&["circumference"], Some(&g6))).trim(), "4");
    assert_eq!(run(&["closure", "--k", "5", "--graph", "Dhc"], None).status.code(), Some(2));
}

#[test]
fn dominating_join_from_stdin() {
    let out = run(&["construct", "dominating-join"], Some("Ch\n"));
    assert!(out.status.success());
    let g6 = stdout(&out);
    assert_eq!(stdout(&run(&["count", "--size", "2"], Some(&g6))).trim(), "7");
}

#[test]
fn props_json_passes() {
    let out = run(&["--format", "json", "props", "--seed", "7", "--samples", "200"], None);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["seed"], 7);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["failures"] == 0));
}
