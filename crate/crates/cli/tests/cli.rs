//! End-to-end runs of the `bicert` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bicert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

#[test]
fn construct_verify_roundtrip_for_every_kind() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("trivial", vec!["--n", "6", "--r", "4"]),
        ("k3-scheme", vec!["--n", "5"]),
        ("k4-scheme", vec!["--n", "6"]),
        ("base-k4k6", vec![]),
        ("blowup", vec!["--i", "2", "--j", "1"]),
        ("f4-recursive", vec!["--n", "10"]),
        ("f2k-lift", vec!["--n", "8", "--k", "2"]),
    ];
    for (kind, extra) in cases {
        let out_path = dir.path().join(format!("{kind}.json"));
        let mut args = vec!["construct", kind];
        args.extend(extra.iter());
        args.extend(["--out", path_str(&out_path)]);
        let out = bicert(&args);
        assert_eq!(code(&out), 0, "construct {kind}: {}", stdout(&out));

        let verify = bicert(&["verify", path_str(&out_path)]);
        assert_eq!(code(&verify), 0, "verify {kind}: {}", stdout(&verify));
        assert!(stdout(&verify).contains("exact partition: OK"));
    }
}

#[test]
fn construct_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (kind, out) in [("base-k4k6", &a), ("base-k4k6", &b)] {
        let run = bicert(&["construct", kind, "--out", path_str(out)]);
        assert_eq!(code(&run), 0);
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn verify_rejects_a_certificate_with_a_missing_block() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("base.json");
    bicert(&["construct", "base-k4k6", "--out", path_str(&path)]);

    // drop the first block from the JSON body
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut doc = value;
    let blocks = doc["blocks"].as_array_mut().unwrap();
    blocks.remove(0);
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let out = bicert(&["verify", path_str(&broken)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("exact partition: FAILED"));
    assert!(
        text.contains("multiplicity 0"),
        "lists uncovered pairs: {text}"
    );
}

#[test]
fn verify_exits_two_on_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = bicert(&["verify", path_str(&path)]);
    assert_eq!(code(&out), 2);

    // structurally bad: overlapping classes
    let bad = r#"{
        "format_version": 1,
        "kind": "r-uniform",
        "host": {"type": "complete", "n": 4, "r": 2},
        "blocks": [[[1, 2], [2, 3]]],
        "metadata": {}
    }"#;
    std::fs::write(&path, bad).unwrap();
    let out = bicert(&["verify", path_str(&path)]);
    assert_eq!(code(&out), 2);
}

#[test]
fn odd_cover_reports_odd_but_not_exact() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd.json");
    bicert(&["construct", "odd-cover-k8", "--out", path_str(&path)]);
    let out = bicert(&["verify", path_str(&path)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("odd cover: true"));
    assert!(text.contains("multiplicity 3"));
}

#[test]
fn solve_f2_on_k5() {
    let out = bicert(&["solve", "f2", "--complete", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("optimum = 4"));
}

#[test]
fn solve_g_on_k3_k3() {
    let out = bicert(&[
        "solve",
        "g",
        "--left",
        "complete:3",
        "--right",
        "complete:3",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("optimum = 4"));
}

#[test]
fn solve_f2_on_a_weak_product_file() {
    let dir = tempfile::tempdir().unwrap();
    let wp = dir.path().join("wp.json");
    let out = bicert(&[
        "transform",
        "weak-product",
        "--left",
        "complete:3",
        "--right",
        "complete:3",
        "--out",
        path_str(&wp),
    ]);
    assert_eq!(code(&out), 0);
    let out = bicert(&["solve", "f2", "--graph-file", path_str(&wp)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("optimum = 5"));
}

#[test]
fn solve_witness_files_verify() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("witness.json");
    let out = bicert(&[
        "solve",
        "f2",
        "--complete",
        "5",
        "--out",
        path_str(&witness),
    ]);
    assert_eq!(code(&out), 0);
    let out = bicert(&["verify", path_str(&witness)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    let witness = dir.path().join("gwitness.json");
    let out = bicert(&[
        "solve",
        "g",
        "--left",
        "complete:3",
        "--right",
        "complete:4",
        "--out",
        path_str(&witness),
    ]);
    assert_eq!(code(&out), 0);
    let out = bicert(&["verify", path_str(&witness)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn solve_fr_from_a_hypergraph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4_3.json");
    let doc = r#"{
        "r": 3,
        "vertices": [1, 2, 3, 4],
        "edges": [[1,2,3],[1,2,4],[1,3,4],[2,3,4]]
    }"#;
    std::fs::write(&path, doc).unwrap();
    let out = bicert(&[
        "solve",
        "fr",
        "--r",
        "3",
        "--hypergraph-file",
        path_str(&path),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("optimum = 2"));
}

#[test]
fn parallel_solve_agrees_with_sequential() {
    let seq = bicert(&["solve", "f2", "--complete", "6"]);
    let par = bicert(&["solve", "f2", "--complete", "6", "--threads", "4"]);
    assert_eq!(code(&seq), 0);
    assert_eq!(code(&par), 0);
    assert!(stdout(&seq).contains("optimum = 5"));
    assert!(stdout(&par).contains("optimum = 5"));
}

#[test]
fn exhausted_budgets_exit_one_with_an_upper_bound() {
    let out = bicert(&["solve", "f2", "--complete", "7", "--budget-nodes", "10"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("unresolved (best <= 6)"));
}

#[test]
fn bounds_tables_print_expected_rows() {
    let out = bicert(&["bounds", "f4", "--n", "32"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("435"));
    assert!(text.contains("420"));
    assert!(text.contains("155"));

    let out = bicert(&["bounds", "g-k4", "--n", "6"]);
    let text = stdout(&out);
    assert!(text.contains("12"));
    assert!(text.contains("15"));
    assert!(text.contains("certified"));
    assert!(text.contains("14"));

    let out = bicert(&["bounds", "f2k", "--n", "8", "--k", "3"]);
    let text = stdout(&out);
    assert!(text.contains("ckv"));
    assert!(text.contains("4"));
}

#[test]
fn usage_errors_exit_two() {
    // n < r is invalid for the trivial construction
    let dir = tempfile::tempdir().unwrap();
    let out_path: PathBuf = dir.path().join("x.json");
    let out = bicert(&[
        "construct",
        "trivial",
        "--n",
        "3",
        "--r",
        "4",
        "--out",
        path_str(&out_path),
    ]);
    assert_eq!(code(&out), 2);

    let out = bicert(&["bounds", "nope", "--n", "4"]);
    assert_eq!(code(&out), 2);

    let out = bicert(&["solve", "f2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn scheme_files_drive_the_k4_construction() {
    let dir = tempfile::tempdir().unwrap();
    let scheme = dir.path().join("scheme.json");
    // the base partition of K_6, spelled out as a document
    let doc = r#"{
        "n": 6,
        "g0": [[1,2],[3,4]],
        "g1": [[1,4],[2,3],[2,5],[4,5]],
        "g2": [[1,3],[2,4],[2,6],[3,6]],
        "g3": [[3,5],[4,6],[5,6],[1,5],[1,6]],
        "wit_g1": [[[4],[1,5]],[[2],[3,5]]],
        "wit_g2": [[[2],[4,6]],[[3],[1,6]]],
        "wit_g3": [[[5],[1,3,6]],[[6],[1,4]]],
        "wit_g0_g1": [[[1,3,5],[2,4]]],
        "wit_g0_g2": [[[1,4,6],[2,3]]],
        "wit_g0_g3": [[[3,6],[4,5]],[[1],[2,5,6]]]
    }"#;
    std::fs::write(&scheme, doc).unwrap();
    let cert = dir.path().join("cert.json");
    let out = bicert(&[
        "construct",
        "k4-scheme",
        "--scheme",
        path_str(&scheme),
        "--out",
        path_str(&cert),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("14 blocks"));
    let out = bicert(&["verify", path_str(&cert)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn double_blocks_of_the_base_partitions_the_weak_product() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("base.json");
    bicert(&["construct", "base-k4k6", "--out", path_str(&base)]);
    let doubled = dir.path().join("doubled.json");
    let out = bicert(&[
        "transform",
        "double-blocks",
        "--cert",
        path_str(&base),
        "--out",
        path_str(&doubled),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("28 bicliques"));
    let out = bicert(&["verify", path_str(&doubled)]);
    assert_eq!(code(&out), 0);
}
