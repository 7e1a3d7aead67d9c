use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn ndl(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ndl"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_writes_edge_list() {
    let dir = TempDir::new().unwrap();
    let out = ndl(&["gen", "paley", "13", "--out", "p13.txt"], dir.path());
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("p13.txt")).unwrap();
    assert_eq!(text.lines().next(), Some("13 39"));
    assert_eq!(text.lines().count(), 40);
}

#[test]
fn certify_reports_certificate() {
    let dir = TempDir::new().unwrap();
    let out = ndl(&["certify", "--graph", "paley 101"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["summary"]["d"], 50);
    let ratio = r["summary"]["hypothesis_ratio"][0].as_f64().unwrap();
    assert!((ratio - 0.2232).abs() < 1e-3);
}

#[test]
fn count_reads_host_file() {
    let dir = TempDir::new().unwrap();
    ndl(&["gen", "paley", "13", "--out", "g.txt"], dir.path());
    let r = json(&ndl(&["count", "--host", "g.txt", "--k", "1"], dir.path()));
    assert_eq!(r["summary"]["hom_count"], 156);
    assert_eq!(r["summary"]["injective_count"], 156);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    // without slack the full bound d^3/4 is above the typical total
    let fail = ndl(
        &[
            "verify-commonality",
            "--graph",
            "paley 101",
            "--trials",
            "4",
        ],
        dir.path(),
    );
    assert_eq!(fail.status.code(), Some(1));
    assert_eq!(json(&fail)["aggregate"]["pass"], false);
    let pass = ndl(
        &[
            "verify-commonality",
            "--graph",
            "paley 101",
            "--trials",
            "4",
            "--epsilon",
            "0.5",
        ],
        dir.path(),
    );
    assert_eq!(pass.status.code(), Some(0));
    let error = ndl(&["certify", "--graph", "paley 7"], dir.path());
    assert_eq!(error.status.code(), Some(2));
    let missing = ndl(&["certify", "--host", "nope.txt"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let dir = TempDir::new().unwrap();
    let run = |threads: &str| {
        let mut r = json(&ndl(
            &[
                "probe-bipartite",
                "--graph",
                "paley 101",
                "--trials",
                "6",
                "--seed",
                "11",
                "--threads",
                threads,
            ],
            dir.path(),
        ));
        r.as_object_mut().unwrap().remove("config");
        r
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn writes_json_and_csv() {
    let dir = TempDir::new().unwrap();
    let out = ndl(
        &[
            "verify-turan",
            "--graph",
            "paley 101",
            "--trials",
            "5",
            "--out",
            "t.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let r: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
    assert_eq!(r["summary"]["found"], 5);
    let csv = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert!(csv.starts_with("trial,g_edges,host_edges,found,cycle\n"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn regularize_identity_case() {
    let dir = TempDir::new().unwrap();
    ndl(&["gen", "paley", "13", "--out", "g.txt"], dir.path());
    let r = json(&ndl(
        &[
            "regularize",
            "--host",
            "g.txt",
            "--sub",
            "g.txt",
            "--alpha",
            "1",
            "--epsilon",
            "0.2",
            "--rho",
            "0.1",
        ],
        dir.path(),
    ));
    assert_eq!(r["aggregate"]["pass"], true);
    assert_eq!(r["records"]["x"]["members"].as_array().unwrap().len(), 13);
    assert_eq!(r["records"]["checks"]["gamma_deviation"], 0.0);
}

#[test]
fn regularize_requires_density() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("one.txt"), "13 1\n0 1\n").unwrap();
    ndl(&["gen", "paley", "13", "--out", "g.txt"], dir.path());
    let out = ndl(
        &[
            "regularize",
            "--host",
            "g.txt",
            "--sub",
            "one.txt",
            "--alpha",
            "0.5",
            "--epsilon",
            "0.1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let dir = TempDir::new().unwrap();
    std::fs::write(
        dir.path().join("c.txt"),
        "# triangle search\ncommand = verify-turan\ngraph = paley 101\ntrials = 50\nseed = 4\n",
    )
    .unwrap();
    let r = json(&ndl(
        &["run", "--config", "c.txt", "--trials", "3"],
        dir.path(),
    ));
    assert_eq!(r["command"], "verify-turan");
    assert_eq!(r["config"]["trials"], 3);
    assert_eq!(r["summary"]["trials"], 3);
}

#[test]
fn oracle_suite_passes_on_corpus() {
    let dir = TempDir::new().unwrap();
    let out = ndl(&["oracle-suite", "--trials", "20"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["failed"], 0);
}
