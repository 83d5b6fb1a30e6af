use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn treecount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treecount"))
        .args(args)
        .env_remove("TREECOUNT_BRUTE_BUDGET")
        .output()
        .expect("treecount runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn count_line(out: &Output) -> String {
    stdout(out)
        .lines()
        .find_map(|l| l.strip_prefix("count: ").map(str::to_string))
        .unwrap_or_else(|| panic!("no count in {:?}", stdout(out)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn family_examples() {
    let out = treecount(&["family", "cone", "-m", "3", "-n", "3", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(count_line(&out), "108");
    let out = treecount(&["family", "half-cone", "-k", "2", "--ks", "1,3", "-n", "3", "--method", "matrix-tree"]);
    assert_eq!(count_line(&out), "832");
    let out = treecount(&["family", "bipartite", "-m", "2", "-n", "2", "--method", "brute-force"]);
    assert_eq!(count_line(&out), "4");
}

#[test]
fn family_methods_agree() {
    let args = ["family", "modified-bipartite", "-k", "2", "-m", "3", "-n", "4", "--method"];
    for method in ["formula", "recurrence", "deletion", "matrix-tree", "brute-force"] {
        let mut a = args.to_vec();
        a.push(method);
        let out = treecount(&a);
        assert_eq!(count_line(&out), "2048", "{method}");
    }
    let out = treecount(&[
        "family", "generalized-bipartite", "--ks", "3,2", "-n", "3", "--method", "deletion",
        "--pure-deletion", "--no-memo", "--strategy", "max-degree", "--sequential",
    ]);
    assert_eq!(count_line(&out), "450");
}

#[test]
fn json_report() {
    let out = treecount(&["family", "multipartite", "--parts", "2,2,2", "--method", "formula", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["count"], "384");
    assert_eq!(report["method"], "formula");
    assert_eq!(report["vertices"], 6);
    assert_eq!(report["support_edges"], 12);
    assert_eq!(report["total_multiplicity"], "12");
    assert!(report["elapsed_ms"].is_u64());
}

#[test]
fn large_counts_print_in_full() {
    let out = treecount(&["family", "cone", "-m", "9", "-n", "30", "--method", "formula"]);
    // 9 * 39^29
    assert_eq!(
        count_line(&out),
        "124484739035569787839908582887371670351003828031"
    );
}

#[test]
fn family_usage_errors() {
    let code = |args: &[&str]| treecount(args).status.code();
    assert_eq!(code(&["family", "cone", "-n", "3", "--method", "formula"]), Some(2));
    assert_eq!(code(&["family", "cone", "-m", "0", "-n", "3", "--method", "formula"]), Some(2));
    assert_eq!(code(&["family", "half-cone", "-k", "2", "--ks", "1,3", "-n", "3", "--method", "recurrence"]), Some(2));
    assert_eq!(code(&["family", "generalized-bipartite", "-m", "3", "--ks", "1,2", "-n", "2"]), Some(2));
    assert_eq!(code(&["family", "wheel", "-n", "3"]), Some(2));
    assert_eq!(code(&["family", "cone", "-m", "1", "-n", "3", "--method", "magic"]), Some(2));
}

#[test]
fn brute_force_budget() {
    let args = ["family", "cone", "-m", "3", "-n", "3", "--method", "brute-force"];
    let over = Command::new(env!("CARGO_BIN_EXE_treecount"))
        .args(args)
        .env("TREECOUNT_BRUTE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(3));
    assert!(stderr(&over).contains("budget"));
    assert!(stdout(&over).is_empty());
    let bad = Command::new(env!("CARGO_BIN_EXE_treecount"))
        .args(args)
        .env("TREECOUNT_BRUTE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn count_triangle_every_method() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "k3.txt", "# triangle\n0 1 1\n1 2 1\n0 2 1\n");
    for method in ["deletion", "matrix-tree", "brute-force"] {
        let out = treecount(&["count", &file, "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(count_line(&out), "3", "{method}");
    }
    assert_eq!(treecount(&["count", &file, "--method", "formula"]).status.code(), Some(2));
}

#[test]
fn count_accumulates_duplicates() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "banana.txt", "0 1 2\n0 1 3\n");
    assert_eq!(count_line(&treecount(&["count", &file, "--method", "brute-force"])), "5");
}

#[test]
fn count_warns_on_self_loops() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "loop.txt", "0 1 1\n1 2 1\n0 2 1\n2 2 1\n");
    let out = treecount(&["count", &file, "--method", "matrix-tree"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(count_line(&out), "3");
    assert!(stderr(&out).contains("line 4: self-loop on vertex 2 ignored"));
    assert!(!stdout(&out).contains("self-loop"));
}

#[test]
fn count_disconnected_is_zero() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "split.txt", "vertices 4\n0 1 2\n2 3 1\n");
    for method in ["deletion", "matrix-tree", "brute-force"] {
        let out = treecount(&["count", &file, "--method", method]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(count_line(&out), "0", "{method}");
    }
}

#[test]
fn count_parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.txt", "0 1 1\n\n1 2 zero\n");
    let out = treecount(&["count", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    let missing = dir.path().join("missing.txt");
    assert_eq!(treecount(&["count", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn export_dot_repeats_parallel_edges() {
    let out = treecount(&["export", "cone:m=3:n=3", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 12);
}

#[test]
fn export_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("gb.txt");
    let path = path.to_str().unwrap();
    let out = treecount(&["export", "generalized-bipartite:ks=3,2:n=3", "--format", "edge-list", "-o", path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    assert_eq!(count_line(&treecount(&["count", path, "--method", "deletion"])), "450");
    // exporting the file again reproduces it byte for byte
    let again = treecount(&["export", path, "--format", "edge-list"]);
    assert_eq!(stdout(&again), std::fs::read_to_string(Path::new(path)).unwrap());
}

#[test]
fn export_json_groups_pairs() {
    let out = treecount(&["export", "half-cone:k=2:ks=1,1:n=3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["vertices"], 6);
    let edges = json["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 8);
    let total: u64 = edges.iter().map(|e| e["mult"].as_u64().unwrap()).sum();
    assert_eq!(total, 10);
}

#[test]
fn export_usage_errors() {
    let code = |args: &[&str]| treecount(args).status.code();
    assert_eq!(code(&["export", "cone:m=3:n=3", "--format", "svg"]), Some(2));
    assert_eq!(code(&["export", "cone:m=3", "--format", "dot"]), Some(2));
    assert_eq!(code(&["export", "no-such-file.txt", "--format", "dot"]), Some(2));
}

#[test]
fn verify_filter() {
    let out = treecount(&["verify", "--families", "cone", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let table = stdout(&out);
    assert!(table.contains("cone"));
    assert!(!table.contains("half-cone"));
    assert!(!table.contains("multipartite"));
    let cone_row = table.lines().find(|l| l.starts_with("cone")).unwrap();
    let cells: Vec<&str> = cone_row.split_whitespace().collect();
    assert_eq!(cells[1..4], ["24", "24", "0"]);
}

#[test]
fn verify_notes_skipped_brute_force() {
    let out = Command::new(env!("CARGO_BIN_EXE_treecount"))
        .args(["verify", "--families", "cone,multipartite", "--sequential"])
        .env("TREECOUNT_BRUTE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("brute force skipped"));
}

#[test]
fn verify_rejects_unknown_family() {
    assert_eq!(treecount(&["verify", "--families", "wheel"]).status.code(), Some(2));
}
