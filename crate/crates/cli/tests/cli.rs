use std::path::Path;
use std::process::{Command, Output};

fn gengraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gengraph"))
        .args(args)
        .env_remove("GENGRAPH_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn phi_of_c2() {
    let o = gengraph(&["phi", "C2", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n");
    let o = gengraph(&["phi", "D4", "2", "--mobius"]);
    assert_eq!(stdout(&o), "24\n");
}

#[test]
fn planarity_of_q8() {
    let o = gengraph(&["planarity", "Q8", "1", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "planar, method=full-test\n");
}

#[test]
fn nonplanar_verdict_as_json() {
    let o = gengraph(&["--format", "json", "planarity", "C5", "1", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "non-planar");
    assert_eq!(v["method"], "euler-pruned");
    assert_eq!(v["expected"], "non-planar");
    let o = gengraph(&["--format", "json", "planarity", "C3", "1", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "bipartite-bound-pruned");
}

#[test]
fn golden_reports() {
    let cases: [(&[&str], &str); 6] = [
        (&["--format", "json", "phi", "C2", "2"], "phi_c2_2.json"),
        (&["--format", "csv", "planarity", "Q8", "1", "1"], "planarity_q8_1_1.csv"),
        (&["--format", "json", "stats", "S3", "2"], "stats_s3_2.json"),
        (&["graph", "C2", "2", "2"], "graph_c2_2_2.txt"),
        (
            &["--format", "csv", "--order-cap", "4", "--ab-cap", "3", "verify", "planarity-classification"],
            "verify_pla_small.csv",
        ),
        (&["--format", "json", "--order-cap", "6", "verify", "main-theorem"], "verify_main_small.json"),
    ];
    for (args, file) in cases {
        let o = gengraph(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?} vs {file}");
    }
}

#[test]
fn verify_main_theorem_over_full_catalog() {
    let o = gengraph(&["verify", "main-theorem", "--order-cap", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("main-theorem: PASS"), "{s}");
    assert!(s.ends_with("overall: PASS\n"));
}

#[test]
fn worker_count_does_not_change_reports() {
    let args = ["--format", "json", "--order-cap", "8", "--ab-cap", "4", "verify", "stima-chain"];
    let one = gengraph(&[&["--workers", "1"], &args[..]].concat());
    let three = Command::new(env!("CARGO_BIN_EXE_gengraph"))
        .args(args)
        .env("GENGRAPH_WORKERS", "3")
        .output()
        .unwrap();
    assert!(one.status.success() && three.status.success());
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn exit_codes() {
    // usage: bad expression, unknown suite, bad format, clap errors
    for args in [
        &["phi", "Z3", "1"][..],
        &["verify", "nope"],
        &["--format", "xml", "phi", "C2", "1"],
        &["phi", "C2"],
        &["graph", "C2", "0", "1"],
    ] {
        assert_eq!(gengraph(args).status.code(), Some(2), "{args:?}");
    }
    // budget exhaustion is a usage-class error, not a verification failure
    let o = gengraph(&["--budget-steps", "1", "phi", "S4", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = gengraph(&["--vertex-cap", "10", "graph", "C4", "2", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = gengraph(&["graph", "C2", "1", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "p 2 1 1\n0 1\nloop 1\n");
}

#[test]
fn catalog_lists_groups() {
    let o = gengraph(&["catalog"]);
    let s = stdout(&o);
    assert!(s.lines().any(|l| l == "Q8 8 d=2"));
    assert_eq!(s.lines().count(), 57);
}
