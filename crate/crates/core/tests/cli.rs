use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-cluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn xn_prints_numerator_over_denominator() {
    assert_eq!(
        stdout(&["xn", "--b", "1", "--c", "4", "--n", "7"]),
        "((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)\n"
    );
    assert_eq!(stdout(&["xn", "--n", "1"]), "x1\n");
    assert_eq!(stdout(&["xn", "--b", "2", "--c", "2", "--n", "3"]), "(x2^2+1) / x1\n");
    assert_eq!(stdout(&["xn", "--n", "3", "--expanded"]), "x1^-1*x2 + x1^-1\n");
}

#[test]
fn xn_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["xn", "--n", "-1", "--json"])).unwrap();
    assert_eq!(v["n"], -1);
    assert_eq!(v["denominator"], serde_json::json!([1, 1]));
    assert_eq!(v["text"], "((x2+1) + x1^4) / (x1*x2)");
}

#[test]
fn sequence_values_at_ones() {
    assert_eq!(
        stdout(&[
            "sequence",
            "--b",
            "1",
            "--c",
            "4",
            "--from",
            "3",
            "--to",
            "13",
            "--at-ones"
        ]),
        "2 17 9 386 43 8857 206 203321 987 4667522 4729\n"
    );
    assert_eq!(
        stdout(&["sequence", "--from", "-11", "--to", "0", "--at-ones"]),
        "7369 11333521 1538 493697 321 21506 67 937 14 41 3 2\n"
    );
}

#[test]
fn table_rows() {
    let out = stdout(&["table", "--from", "-1", "--to", "1"]);
    assert_eq!(out, "-1\t((x2+1) + x1^4) / (x1*x2)\n0\t(1 + x1^4) / x2\n1\tx1\n");
}

#[test]
fn matchpoly_agrees_with_recurrence_numerator() {
    assert_eq!(stdout(&["matchpoly", "--n", "3"]), "x2 + 1\n");
    assert_eq!(stdout(&["matchpoly", "--n", "3", "--tilde"]), "1\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["matchpoly", "--n", "6", "--json"])).unwrap();
    assert_eq!(v["count"], "386");
}

#[test]
fn graph_export() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["graph", "--n", "3"])).unwrap();
    assert_eq!(v["vertices"], 4);
    let dot = stdout(&["graph", "--b", "2", "--c", "2", "--n", "4", "--format", "dot"]);
    assert!(dot.starts_with("graph"));
}

#[test]
fn verify_single_identity() {
    let out = stdout(&["verify", "--identity", "main-14", "--from", "-4", "--to", "6"]);
    assert!(out.starts_with("PASS MAIN_14"), "{out}");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--identity", "ODD_Q_22", "--to", "7", "--json"])).unwrap();
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["xn", "--n", "abc"][..],
        &["xn", "--n", "1", "--b", "0"],
        &["graph", "--n", "1"],
        &["graph", "--n", "4", "--format", "svg"],
        &["verify", "--identity", "NOPE"],
        &["verify", "--suite", "--max", "3"],
        &["sequence", "--from", "5", "--to", "1"],
        &["matchpoly", "--b", "2", "--c", "2", "--n", "3", "--tilde"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn flag_named_in_error() {
    let out = run(&["graph", "--n", "4", "--format", "svg"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--format"));
}
