use std::path::Path;

use removal_cli::{dispatch_to, Dispatch, ExperimentReport, Verdict};
use tempfile::tempdir;

fn run(args: &[&str]) -> (Dispatch, String) {
    let mut buf = Vec::new();
    let d = dispatch_to(args.iter().copied(), &mut buf);
    (d, String::from_utf8(buf).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

fn report_file(p: &str) -> ExperimentReport {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn rs_build_writes_graph_and_sidecar() {
    let dir = tempdir().unwrap();
    let g = path(dir.path(), "rs.g");
    let (d, stdout) = run(&["rs", "build", "--m", "5", "--r", "1,2", "--out", &g]);
    assert_eq!(d.code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(&g).unwrap().starts_with("p 15 15 15\n"));
    let r = report_file(&format!("{g}.json"));
    assert_eq!(r.result["triangle_count"], 24);
    assert_eq!(r.result["packing_size"], 10);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn r_file_matches_inline_list() {
    let dir = tempdir().unwrap();
    let f = path(dir.path(), "r.txt");
    std::fs::write(&f, "# R\n1\n2\n").unwrap();
    let (a, out_a) = run(&["rs", "build", "--m", "5", "--r-file", &f]);
    let (b, out_b) = run(&["rs", "build", "--m", "5", "--r", "2,1"]);
    assert_eq!((a.code, b.code), (0, 0));
    let (ra, rb): (ExperimentReport, ExperimentReport) =
        (serde_json::from_str(&out_a).unwrap(), serde_json::from_str(&out_b).unwrap());
    assert_eq!(ra.result["artifact"], rb.result["artifact"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["unknown-cmd"]).0.code, 2);
    assert_eq!(run(&["rs", "build", "--m", "five", "--r", "1"]).0.code, 2);
    assert_eq!(run(&["eqs", "genus", "--system", "/nonexistent/system.txt"]).0.code, 2);
    assert_eq!(run(&["rs", "build", "--m", "3", "--r", "9"]).0.code, 2);
    assert_eq!(run(&["--help"]).0.code, 0);
}

#[test]
fn failing_verdict_ships_a_verifiable_witness() {
    let dir = tempdir().unwrap();
    let s = path(dir.path(), "s.txt");
    std::fs::write(&s, "1*e0 1*e1 -1*e2 -1*e3\n").unwrap();
    let out = path(dir.path(), "genus.json");
    let (d, _) = run(&["eqs", "genus", "--system", &s, "--out", &out]);
    assert_eq!(d.code, 1);
    let r = d.report.unwrap();
    assert_eq!(r.witness_files.len(), 1);
    let (v, _) = run(&["verify", "--witness", &r.witness_files[0]]);
    assert_eq!(v.code, 0);

    // a tampered witness is rejected
    let tampered = path(dir.path(), "bad.json");
    let text = std::fs::read_to_string(&r.witness_files[0]).unwrap().replace("\"subset\": [\n    0,\n    2\n  ]", "\"subset\": [0, 1]");
    assert!(text.contains("[0, 1]"), "{text}");
    std::fs::write(&tampered, text).unwrap();
    assert_eq!(run(&["verify", "--witness", &tampered]).0.code, 1);
}

#[test]
fn genus_one_system_passes() {
    let dir = tempdir().unwrap();
    let s = path(dir.path(), "ap.txt");
    std::fs::write(&s, "1*x0 -2*x1 1*x2\n").unwrap();
    assert_eq!(run(&["eqs", "genus", "--system", &s]).0.code, 0);
    assert_eq!(run(&["oracle", "genus", "--system", &s]).0.code, 0);
}

#[test]
fn pseudo_run_is_reproducible() {
    let args = ["pseudo", "run", "--n", "30", "--seed", "4", "--trials", "50", "--check", "triangle-free,common-neighborhood"];
    let (a, _) = run(&args);
    let (b, _) = run(&args);
    let (ra, rb) = (a.report.unwrap(), b.report.unwrap());
    assert_eq!(ra.without_timing(), rb.without_timing());
    assert_eq!(ra.result["checks"][0]["verdict"]["Pass"]["exact"], true);
    let (c, _) = run(&["pseudo", "run", "--n", "30", "--seed", "5", "--trials", "50", "--check", "triangle-free"]);
    assert_ne!(ra.result["record"], c.report.unwrap().result["record"]);
}

#[test]
fn pseudo_failures_write_property_witnesses() {
    let dir = tempdir().unwrap();
    let out = path(dir.path(), "pseudo.json");
    let (d, _) = run(&["pseudo", "run", "--n", "40", "--seed", "1", "--trials", "20", "--check", "all", "--out", &out]);
    let r = report_file(&out);
    assert_eq!(d.code, r.verdict.exit_code());
    assert_eq!(r.witness_files.len(), r.witnesses.len());
    for w in &r.witness_files {
        assert_eq!(run(&["verify", "--witness", w]).0.code, 0, "{w}");
    }
}

#[test]
fn extracted_system_feeds_convex_search() {
    let dir = tempdir().unwrap();
    let g = path(dir.path(), "k111.g");
    let s = path(dir.path(), "k111.eqs");
    assert_eq!(run(&["graph", "gen", "--kind", "tripartite", "--n", "1", "--out", &g]).0.code, 0);
    assert_eq!(run(&["eqs", "extract", "--graph", &g, "--perm", "ACB", "--out", &s]).0.code, 0);
    let (d, _) = run(&["convex", "search", "--system", &s, "--all"]);
    assert_eq!(d.code, 0);
    let r = d.report.unwrap();
    assert!(r.result["search"]["found"].is_object());
    assert_eq!(r.result["disagreements"], 0);
    assert_eq!(r.witnesses.len(), 1);
}

#[test]
fn sampler_commands() {
    let dir = tempdir().unwrap();
    let bip = path(dir.path(), "bip.g");
    run(&["graph", "gen", "--kind", "path", "--n", "4", "--t", "3", "--out", &bip]);
    let (d, _) = run(&["sampler", "trial", "--graph", &bip, "--k", "1", "--l", "2", "--eps", "0.1", "--mode", "oblivious"]);
    assert_eq!(d.code, 1);

    let c5 = path(dir.path(), "c5.g");
    run(&["graph", "gen", "--kind", "cycle", "--n", "5", "--t", "7", "--out", &c5]);
    let (d, _) = run(&[
        "sampler", "estimate", "--graph", &c5, "--k", "2", "--l", "3", "--eps", "1/25", "--packing", "blowup:7", "--trials", "20",
        "--seed", "3",
    ]);
    let r = d.report.unwrap();
    assert_eq!(r.parameters["config"]["k"], 2);
    assert_eq!(r.parameters["sample_size"]["capped"], true);
    assert!(r.result["successes"].as_u64().unwrap() > 0);

    let (d, _) = run(&["sampler", "family", "--graph", &bip, "--eps", "1/4", "--trials", "5"]);
    assert_eq!(d.code, 0);
    assert!(d.report.unwrap().summary.contains("bipartite"));
}

#[test]
fn increasing_cycle_counterexample_verifies() {
    let dir = tempdir().unwrap();
    let c5 = path(dir.path(), "c5.g");
    run(&["graph", "gen", "--kind", "cycle", "--n", "5", "--out", &c5]);
    let out = path(dir.path(), "inc.json");
    let (d, _) = run(&["oracle", "increasing", "--graph", &c5, "--t", "3", "--out", &out]);
    assert_eq!(d.code, 1);
    let r = d.report.unwrap();
    assert_eq!(run(&["verify", "--witness", &r.witness_files[0]]).0.code, 0);
}

#[test]
fn csv_output() {
    let (d, out) = run(&["--format", "csv", "eqs", "behrend", "--m", "20"]);
    assert_eq!(d.code, 0);
    assert!(out.starts_with("path,value\n"));
    assert!(out.contains("verdict,pass\n"));
}
