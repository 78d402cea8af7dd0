use std::fs;
use std::process::{Command, Output};

use knotcover_cli::record::{from_line, ResultRecord, TableRow};

fn knotcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn records(o: &Output) -> Vec<ResultRecord> {
    stdout(o).lines().map(|l| from_line(l).unwrap()).collect()
}

/// The numeric cells of a table row labelled `label`.
fn row(o: &Output, label: &str) -> Vec<u64> {
    let text = stdout(o);
    let line = text
        .lines()
        .find(|l| l.split_whitespace().next() == Some(label))
        .unwrap_or_else(|| panic!("no {label} row in\n{text}"));
    line.split_whitespace()
        .skip(1)
        .map(|c| c.parse().unwrap())
        .collect()
}

#[test]
fn compute_6_2_at_five() {
    let o = knotcover(&[
        "compute", "--knot", "6_2", "--n", "5", "--format", "records",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = records(&o);
    assert_eq!(r.len(), 1);
    assert_eq!(
        (r[0].free_rank, r[0].torsion.clone()),
        (0, vec!["2".to_string(); 4])
    );
    assert_eq!(r[0].knot.as_deref(), Some("6_2"));

    let o = knotcover(&["compute", "--knot", "6_2", "--n", "5"]);
    assert!(
        stdout(&o).contains("5  Z_2 + Z_2 + Z_2 + Z_2"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn compute_inline_first_level_is_trivial() {
    let o = knotcover(&[
        "compute", "--genus", "2", "--a", "1", "--b", "-4", "--n", "1", "--format", "records",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = &records(&o)[0];
    assert!(r.group().unwrap().is_trivial());
    assert_eq!(r.knot, None);
}

#[test]
fn compute_range_is_ascending_and_matches_6_3_beta() {
    let o = knotcover(&[
        "compute", "--knot", "6_3", "--n", "1..14", "--format", "records", "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = records(&o);
    let ns: Vec<u32> = r.iter().map(|r| r.n).collect();
    assert_eq!(ns, (1..=14).collect::<Vec<_>>());
    assert!(r.iter().all(|r| r.verification.as_ref().unwrap().passed));

    // cross-checked against the table command, which reads the same cells
    let t = knotcover(&["table", "--knot", "6_3", "--n-max", "14"]);
    assert_eq!(
        row(&t, "beta"),
        [1, 1, 7, 3, 4, 7, 43, 21, 133, 8, 397, 63, 1171, 559]
    );
}

#[test]
fn compute_is_deterministic_across_modes() {
    let par = knotcover(&[
        "compute", "--knot", "7_7", "--n", "1..20", "--format", "records",
    ]);
    let seq = knotcover(&[
        "compute",
        "--knot",
        "7_7",
        "--n",
        "1..20",
        "--format",
        "records",
        "--sequential",
    ]);
    assert_eq!(par.stdout, seq.stdout);
    assert_eq!(
        par.stdout,
        knotcover(&["compute", "--knot", "7_7", "--n", "1..20", "--format", "records"]).stdout
    );
}

#[test]
fn compute_rejects_bad_input() {
    for args in [
        &["compute", "--knot", "8_1", "--n", "3"][..],
        &[
            "compute", "--genus", "2", "--a", "0", "--b", "1", "--n", "3",
        ],
        &["compute", "--genus", "1", "--b", "0", "--n", "3"],
        &["compute", "--knot", "6_2", "--n", "0"],
        &["compute", "--knot", "6_2", "--n", "5..2"],
        &["compute", "--n", "3"],
    ] {
        let o = knotcover(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
    let o = knotcover(&["compute", "--genus", "1", "--b", "0", "--n", "3"]);
    assert!(stderr(&o).contains("trivial knot"), "{}", stderr(&o));
    let o = knotcover(&["compute", "--knot", "8_1", "--n", "3"]);
    assert!(stderr(&o).contains("unknown knot"), "{}", stderr(&o));
}

#[test]
fn tables_for_bundled_knots() {
    let o = knotcover(&["table", "--knot", "7_7", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(row(&o, "n"), (1..=12).collect::<Vec<_>>());
    assert_eq!(row(&o, "alpha"), [1, 1, 1, 1, 2, 1, 1, 1, 1, 8, 1, 5]);
    assert_eq!(
        row(&o, "beta"),
        [1, 1, 13, 7, 38, 39, 421, 217, 2353, 152, 13201, 1365]
    );

    let o = knotcover(&["table", "--knot", "6_2"]);
    assert_eq!(row(&o, "alpha"), [1, 1, 1, 1, 2, 1, 1, 3, 1, 4, 1, 1]);
    assert_eq!(row(&o, "beta"), [1, 1, 5, 1, 2, 5, 29, 3, 5, 4, 131, 55]);

    let o = knotcover(&[
        "table", "--knot", "6_3", "--n-max", "1", "--format", "records",
    ]);
    let rows: Vec<TableRow> = stdout(&o).lines().map(|l| from_line(l).unwrap()).collect();
    assert_eq!(
        (rows.len(), rows[0].alpha.as_str(), rows[0].beta.as_str()),
        (1, "1", "1")
    );
}

#[test]
fn genus1_table_is_labelled() {
    let o = knotcover(&["table", "--knot", "6_1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus 1"));
    // b = -2: alpha(n) = 2^n + (-1)^n, beta(n) = (2^n - (-1)^n) / 3
    assert_eq!(row(&o, "alpha"), [1, 5, 7, 17, 31, 65]);
    assert_eq!(row(&o, "beta"), [1, 1, 3, 5, 11, 21]);
}

#[test]
fn verify_catalog_and_grid() {
    let o = knotcover(&["verify", "--catalog", "default", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verified 48 cases"));

    let o = knotcover(&["verify", "--a", "-3..3", "--b", "-3..3", "--n-max", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verified 672 cases"));

    let o = knotcover(&[
        "verify",
        "--genus",
        "1",
        "--b-range",
        "-4..4",
        "--n-max",
        "10",
        "--sequential",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verified 80 cases (sequential)"));
}

#[test]
fn verify_flags_a_corrupted_closed_form() {
    let o = knotcover(&[
        "verify",
        "--catalog",
        "default",
        "--n-max",
        "3",
        "--corrupt-closed-form",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("MISMATCH genus 2 (a=-1, b=2) n=3 [6_2]"),
        "{text}"
    );
    assert!(text.contains("circulant:"));
    assert!(
        text.contains("verified 12 cases (parallel): 12 failed") || text.contains(": 12 failed")
    );
}

#[test]
fn verify_rejects_empty_grid() {
    let o = knotcover(&["verify", "--a-range", "0..0", "--b-range", "1..2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = knotcover(&["verify", "--a-range", "3..1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_list_and_validate() {
    let o = knotcover(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["6_1", "6_2", "6_3", "7_7"] {
        assert!(
            text.lines().any(|l| l.starts_with(name)),
            "{name} missing:\n{text}"
        );
    }
    let o = knotcover(&["catalog", "validate"]);
    assert_eq!(
        (o.status.code(), stdout(&o).trim()),
        (Some(0), "ok: 4 records")
    );
}

#[test]
fn catalog_add_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("knots.jsonl");
    let p = path.to_str().unwrap();

    let o = knotcover(&[
        "catalog",
        "add",
        "--catalog",
        p,
        "--name",
        "x",
        "--genus",
        "2",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("a = 0"), "{}", stderr(&o));

    let o = knotcover(&[
        "catalog",
        "add",
        "--catalog",
        p,
        "--name",
        "k",
        "--genus",
        "2",
        "--a",
        "-1",
        "--b",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = knotcover(&[
        "catalog",
        "add",
        "--catalog",
        p,
        "--name",
        "k",
        "--genus",
        "1",
        "--b",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = knotcover(&[
        "catalog",
        "add",
        "--catalog",
        p,
        "--name",
        "m",
        "--genus",
        "1",
        "--b",
        "3",
        "--slope",
        "13/6",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let o = knotcover(&[
        "compute",
        "--catalog",
        p,
        "--knot",
        "k",
        "--n",
        "5",
        "--format",
        "records",
    ]);
    assert_eq!(records(&o)[0].torsion, vec!["2"; 4]);
    let o = knotcover(&["catalog", "list", "--catalog", p]);
    assert!(stdout(&o).contains("slope=13/6"));

    let dup = dir.path().join("dup.jsonl");
    fs::write(
        &dup,
        "# duplicate\n{\"name\":\"6_2\",\"genus\":2,\"a\":-1,\"b\":2}\n{\"name\":\"6_2\",\"genus\":2,\"a\":-1,\"b\":2}\n",
    )
    .unwrap();
    let o = knotcover(&["catalog", "validate", "--catalog", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("line 3: duplicate name \"6_2\""),
        "{}",
        stderr(&o)
    );

    let bad = dir.path().join("bad.jsonl");
    fs::write(&bad, "{\"name\":\"q\",\"genus\":1,\"a\":2,\"b\":2}\n").unwrap();
    let o = knotcover(&["catalog", "validate", "--catalog", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(knotcover(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        knotcover(&["compute", "--knot", "6_2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        knotcover(&["table", "--knot", "6_2", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}
