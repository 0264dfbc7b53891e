//! End-to-end CLI behavior: exit codes, output formats, round-trips.

use std::process::{Command, Output};

fn scrim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scrim"))
        .args(args)
        .output()
        .expect("spawn scrim")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn count_basic() {
    let out = scrim(&["count", "--q", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "total 3\n");
}

#[test]
fn count_per_order() {
    let out = scrim(&["count", "--q", "3", "--n", "3", "--per-order"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "total 8\n7 2\n14 2\n28 4\n");
}

#[test]
fn count_even_degree_warns_but_succeeds() {
    let out = scrim(&["count", "--q", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "total 0\n");
    assert!(stderr(&out).contains("even"));
}

#[test]
fn invalid_q_exits_2() {
    let out = scrim(&["count", "--q", "6", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("prime power"));
}

#[test]
fn table_csv() {
    let out = scrim(&[
        "table",
        "--q-list",
        "2",
        "--n-list",
        "1,3",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q,n,count\n2,1,3\n2,3,2\n");
}

#[test]
fn enumerate_text_lines_reparse_as_scrim() {
    let out = scrim(&["enumerate", "--q", "3", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    for line in lines {
        let check = scrim(&["check", "--q", "3", line]);
        assert_eq!(check.status.code(), Some(0), "line {line:?} not SCRIM");
        assert!(stdout(&check).contains("scrim: true"));
    }
}

#[test]
fn enumerate_order_filter_and_limit() {
    let out = scrim(&["enumerate", "--q", "3", "--n", "3", "--order", "28"]);
    assert_eq!(stdout(&out).lines().count(), 4);

    let full = scrim(&["enumerate", "--q", "3", "--n", "3"]);
    let limited = scrim(&["enumerate", "--q", "3", "--n", "3", "--limit", "3"]);
    let full_text = stdout(&full);
    let prefix: Vec<&str> = full_text.lines().take(3).collect();
    let limited_text = stdout(&limited);
    assert_eq!(limited_text.lines().collect::<Vec<_>>(), prefix);

    let bad = scrim(&["enumerate", "--q", "3", "--n", "3", "--order", "5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn enumerate_even_degree_exits_2() {
    let out = scrim(&["enumerate", "--q", "3", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_over_cap_exits_3() {
    let out = scrim(&["enumerate", "--q", "3", "--n", "3", "--work-cap", "3"]);
    assert_eq!(out.status.code(), Some(3));
    // a limit makes the same run feasible again
    let ok = scrim(&[
        "enumerate", "--q", "3", "--n", "3", "--work-cap", "3", "--limit", "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).lines().count(), 2);
}

#[test]
fn enumerate_json_schema() {
    let out = scrim(&["enumerate", "--q", "3", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "enumerate");
    assert_eq!(v["q"], 3);
    assert_eq!(v["n"], 3);
    let records = v["records"].as_array().expect("records array");
    assert_eq!(records.len(), 8);
    for r in records {
        assert!(r["order"].is_string());
        assert!(r["root_exponent"].is_string());
        let coeffs = r["coeffs"].as_array().expect("coeff vectors");
        assert_eq!(coeffs.len(), 4); // ascending degree, cubic
        for c in coeffs {
            assert_eq!(c.as_array().expect("coordinate vector").len(), 2);
        }
    }
    assert!(v["warnings"].as_array().expect("warnings").is_empty());
}

#[test]
fn check_exit_codes() {
    let scrim_poly = scrim(&["check", "--q", "2", "x + 1"]);
    assert_eq!(scrim_poly.status.code(), Some(0));

    let not_scrim = scrim(&["check", "--q", "3", "x^2 + 1"]);
    assert_eq!(not_scrim.status.code(), Some(1));
    assert!(stdout(&not_scrim).contains("scrim: false"));
    assert!(stdout(&not_scrim).contains("consistent: true"));

    let parse_fail = scrim(&["check", "--q", "3", "x^2 +"]);
    assert_eq!(parse_fail.status.code(), Some(2));
    assert!(stderr(&parse_fail).contains("byte"));

    let not_monic = scrim(&["check", "--q", "3", "2*x + 1"]);
    assert_eq!(not_monic.status.code(), Some(2));
}

#[test]
fn orders_csv_totals() {
    let out = scrim(&["orders", "--q", "3", "--n", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "order,count\n7,2\n14,2\n28,4\ntotal,8\n"
    );
}

#[test]
fn orders_published_correction_warning() {
    let out = scrim(&["orders", "--q", "2", "--n", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("10923 440"));
    assert!(!stdout(&out).contains("10928"));
    assert!(stderr(&out).contains("10928"));
    let json = scrim(&["orders", "--q", "2", "--n", "15", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    assert_eq!(v["warnings"].as_array().expect("warnings").len(), 1);
    assert_eq!(v["per_order"]["10923"], "440");
}

#[test]
fn count_published_correction_warning() {
    let out = scrim(&["count", "--q", "5", "--n", "7"]);
    assert_eq!(stdout(&out), "total 11160\n");
    assert!(stderr(&out).contains("1160"));
}

#[test]
fn oracle_match() {
    let out = scrim(&["oracle", "--q", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "match: 2 polynomials\n");
}

#[test]
fn oracle_over_cap_exits_3() {
    let out = scrim(&["oracle", "--q", "3", "--n", "3", "--work-cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn minpoly_examples() {
    let zero = scrim(&["minpoly", "--q", "3", "--mod", "28", "--i", "0"]);
    assert_eq!(zero.status.code(), Some(0));
    let text = stdout(&zero);
    assert!(text.contains("coset: {0}"));
    assert!(text.contains("minpoly: x + 2")); // x - 1 over F_9

    let one = scrim(&["minpoly", "--q", "3", "--mod", "28", "--i", "1"]);
    let text = stdout(&one);
    assert!(text.contains("coset: {1, 9, 25}"));
    assert!(text.contains("scrim_coset: true"));
    assert!(text.contains("minpoly: x^3"));

    let non_scrim = scrim(&["minpoly", "--q", "3", "--mod", "8", "--i", "1"]);
    assert!(stdout(&non_scrim).contains("scrim_coset: false"));

    let gcd_violation = scrim(&["minpoly", "--q", "3", "--mod", "9", "--i", "1"]);
    assert_eq!(gcd_violation.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [
        vec!["enumerate", "--q", "2", "--n", "7"],
        vec!["orders", "--q", "2", "--n", "9"],
    ] {
        let mut one = args.clone();
        one.extend(["--threads", "1"]);
        let mut eight = args.clone();
        eight.extend(["--threads", "8"]);
        let a = scrim(&one);
        let b = scrim(&eight);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}
