use std::path::Path;

use turan_core::cli::{run_with_io, EXIT_OK, EXIT_USAGE};
use turan_core::ledger;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("turan").chain(args.iter().copied());
    let code = run_with_io(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn graph6_of(args: &[&str]) -> String {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let (code, out, _) = run(&full);
    assert_eq!(code, EXIT_OK);
    out.lines().next().unwrap().to_string()
}

#[test]
fn formula_reports_kind_and_range() {
    let (code, out, _) = run(&["formula", "ex_p33", "9"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("ex_p33(9) = 16"));
    assert!(out.contains("lower bound"));
    let (code, _, err) = run(&["formula", "ex_c33_triangles", "10"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("22"));
    assert_eq!(run(&["formula", "nope", "10"]).0, EXIT_USAGE);
}

#[test]
fn check_finds_c33_in_k6() {
    let k6 = graph6_of(&["complete", "6"]);
    let (code, out, _) = run(&["check", &k6, "C33"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("contains C33"));
    assert!(out.contains("embedding"));
    let m = graph6_of(&["thm2", "12"]);
    let (code, out, _) = run(&["check", &m, "c33"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("C33-free"));
    // explicit patterns in graph6
    let (code, out, _) = run(&["check", &k6, "Bw"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("contains"));
}

#[test]
fn verify_theorem_ranges() {
    let (code, out, _) = run(&["verify-theorem", "2", "--n-range", "22..60"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("0 violation(s)"));
    for t in ["1", "3", "4"] {
        assert_eq!(run(&["verify-theorem", t, "--n-range", "6..20"]).0, EXIT_OK);
    }
    assert_eq!(run(&["verify-theorem", "5"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify-theorem", "2", "--n-range", "10..5"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify-theorem", "2", "--n-range", "3..10"]).0, EXIT_USAGE);
}

#[test]
fn claims_and_reduction() {
    let g = graph6_of(&["thm2", "24"]);
    let (code, out, _) = run(&["verify-claims", &g]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("average triangle weight 13/12"));
    let c5 = graph6_of(&["cycle", "5"]);
    let (code, out, _) = run(&["verify-claims", &c5]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("not applicable"));

    let (code, out, _) = run(&["reduce", &graph6_of(&["empty", "5"])]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("terminal satisfies hypotheses: true"));
}

#[test]
fn exact_and_search() {
    let (code, out, _) = run(&["ex-exact", "8", "C33"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("= 16"));
    assert_eq!(run(&["ex-exact", "30", "C33"]).0, EXIT_USAGE);
    let (code, out, _) = run(&["ex-search", "24", "C33", "--restarts", "3", "--iters", "50", "--seed", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(">= 144") && out.contains("respected"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["count", "not graph6 \u{1}"]).0, EXIT_USAGE);
    assert_eq!(run(&["check", "A_", "C99"]).0, EXIT_USAGE);
    assert_eq!(run(&["construct", "cycle", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["explore-conjecture", "3", "10"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn ledger_records_are_replayable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ledger.jsonl");
    let p = path.to_str().unwrap();
    let args = ["--ledger", p, "ex-search", "14", "M23", "--restarts", "4", "--iters", "60", "--seed", "11"];
    assert_eq!(run(&args).0, EXIT_OK);
    assert_eq!(run(&["--ledger", p, "formula", "ex_m23", "9"]).0, EXIT_OK);
    let records = ledger::read_all(Path::new(&path)).unwrap();
    assert_eq!(records.len(), 2);
    let first = &records[0];
    assert_eq!(first.command, "ex-search");
    assert_eq!(first.seed, Some(11));
    assert_eq!(first.schema, ledger::SCHEMA_VERSION);
    assert_eq!(records[1].outcome["value"], 19);

    // re-running from the recorded parameters reproduces the outcome
    let params = &first.parameters;
    let search = &params["search"];
    let rerun = [
        "--ledger",
        p,
        "ex-search",
        &params["n"].to_string(),
        params["pattern"].as_str().unwrap(),
        "--restarts",
        &search["restarts"].to_string(),
        "--iters",
        &search["iterations"].to_string(),
        "--seed",
        &search["seed"].to_string(),
    ];
    assert_eq!(run(&rerun).0, EXIT_OK);
    let records = ledger::read_all(Path::new(&path)).unwrap();
    let (a, b) = (&records[0].outcome, &records[2].outcome);
    assert_eq!(a["best_value"], b["best_value"]);
    assert_eq!(a["witnesses"], b["witnesses"]);
    assert_eq!(a["nodes_explored"], b["nodes_explored"]);
}

#[test]
fn json_output() {
    let (code, out, _) = run(&["--json", "formula", "ex_m23", "9"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 19);
    assert_eq!(v["kind"], "exact");
}
