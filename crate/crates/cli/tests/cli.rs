use std::process::{Command, Output};

use kingdon_core::{Algebra, Scalar};

fn kingdon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kingdon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EXTERIOR_MD: &str = "\
| 1 | i | j | k | ij | jk | ki | ω |
| --- | --- | --- | --- | --- | --- | --- | --- |
| i | 0 | ij | -ki | 0 | -ω | 0 | 0 |
| j | -ij | 0 | jk | 0 | 0 | -ω | 0 |
| k | ki | -jk | 0 | -ω | 0 | 0 | 0 |
| ij | 0 | 0 | ω | 0 | 0 | 0 | 0 |
| jk | ω | 0 | 0 | 0 | 0 | 0 | 0 |
| ki | 0 | ω | 0 | 0 | 0 | 0 | 0 |
| ω | 0 | 0 | 0 | 0 | 0 | 0 | 0 |
";

#[test]
fn exterior_table_in_markdown() {
    let o = kingdon(&["table", "--form", "zero3", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), EXTERIOR_MD);
}

#[test]
fn quantized_entries_substitute_q() {
    // Q(i) = 1: i·ω = -Q(i)jk = -jk
    let o = kingdon(&["table", "--form", "diag:2,-2,0", "--format", "md"]);
    let row = stdout(&o).lines().find(|l| l.starts_with("| i |")).unwrap().to_string();
    assert_eq!(row, "| i | 1 | ij | -ki | j | -ω | -k | -jk |");
}

#[test]
fn classify_octonions() {
    let o = kingdon(&["classify", "--form", "diag:-2,-2,-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(0,0,3) OCT\n");
    let o = kingdon(&["classify", "--form", "[[0,1,0],[1,0,0],[0,0,\"-1/2\"]]"]);
    assert_eq!(stdout(&o), "(0,1,2) SPLIT_OCT\n");
}

#[test]
fn verify_exit_codes() {
    let o = kingdon(&["verify", "--form", "diag:0,0,0", "--suite", "alternativity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alternativity: PASS"));

    let o = kingdon(&["verify", "--form", "split-oct", "--suite", "moufang", "--samples", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "moufang: PASS (40 checks)\n");

    // the even triple is oriented against the table
    let o = kingdon(&["verify", "--form", "oct", "--suite", "fano"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--form", "oct"][..],
        &["classify", "--form", "diag:1,x,0"],
        &["classify", "--form", "[[1,2],[3,4]]"],
        &["build", "--form", "diag:1,1,1,1"],
        &["cd", "--gammas", "-1,-1,-1,-1,-1"],
        &["verify", "--form", "zero3", "--suite", "fano"],
        &["verify", "--form", "diag:-2", "--suite", "omega"],
        &["frobnicate"],
    ] {
        let o = kingdon(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn sampled_output_is_deterministic() {
    let args = ["verify", "--form", "diag:0,2,-2", "--suite", "all", "--seed", "17", "--samples", "20"];
    let first = kingdon(&args);
    let second = kingdon(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_output_round_trips() {
    for args in [&["build", "--form", "diag:1/3,-2,0"][..], &["cd", "--gammas", "-1,1/2,0"], &["table", "--form", "oct", "--format", "json"]] {
        let o = kingdon(args);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let a = Algebra::from_json_str(&text).unwrap();
        assert_eq!(a.to_json_string() + "\n", text);
    }
}

#[test]
fn cd_builds_the_octonions() {
    let o = kingdon(&["cd", "--gammas", "-1,-1,-1"]);
    let a = Algebra::from_json_str(&stdout(&o)).unwrap();
    assert_eq!(a.dim(), 8);
    assert!(a.alternativity_verdict().is_pass());
    assert!(!a.associativity_verdict().is_pass());
    let o = kingdon(&["cd"]);
    assert_eq!(Algebra::from_json_str(&stdout(&o)).unwrap().dim(), 1);
}

#[test]
fn structure_report_json() {
    let o = kingdon(&["structure", "--form", "zero3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["signature"], "(3,0,0)");
    assert_eq!(v["iso_class"], "ALT_EXT");
    assert_eq!(v["center_basis"], serde_json::json!(["1", "ω"]));
    assert_eq!(v["simple"], false);
    assert_eq!(v["zero_divisor_witness"], serde_json::json!(["i", "i"]));

    let o = kingdon(&["structure", "--form", "oct"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["division"], true);
    assert!(v["zero_divisor_witness"].is_null());
}

#[test]
fn isomorphism_queries() {
    let o = kingdon(&["isomorphic", "--a", "1,1,1", "--b", "1,2,0"]);
    let text = stdout(&o);
    assert!(text.starts_with("K(1,1,1) and K(1,2,0): isomorphic\n"));
    assert!(text.contains("  jk -> k\n"));
    let o = kingdon(&["isomorphic", "--a", "2,1,0", "--b", "2,0,1"]);
    assert!(stdout(&o).contains("not isomorphic"));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn csv_is_parseable() {
    let o = kingdon(&["table", "--form", "diag:1,1/2,-1", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.len() == 9));
    // Q(i) = 1/2
    assert_eq!(rows[2][2].parse::<Scalar>().unwrap(), Scalar::new(1, 2));
}

#[test]
fn fano_listing() {
    let o = kingdon(&["fano"]);
    let text = stdout(&o);
    assert!(text.starts_with("(i, j, ij) ok\n"));
    assert!(text.contains("(ij, jk, ki) FAIL\n"));
    assert!(text.contains("18 of 21 oriented triples hold"));
    assert_eq!(o.status.code(), Some(1));
}
