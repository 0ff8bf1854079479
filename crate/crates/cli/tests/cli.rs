use std::process::{Command, Output};

fn gsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_h3_s2() {
    let o = gsym(&["expand", "--kind", "H", "--k", "3", "--s", "2", "--n", "3", "--deterministic"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-x1^3 - x2^3 - x3^3 + x1*x2*x3\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn expand_kinds() {
    let cases: &[(&[&str], &str)] = &[
        (&["--kind", "e", "--k", "2", "--n", "3"], "x1*x2 + x1*x3 + x2*x3\n"),
        (&["--kind", "p", "--k", "2", "--n", "2"], "x1^2 + x2^2\n"),
        (&["--kind", "m", "--lambda", "2 1^2", "--n", "3"], "x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2\n"),
        (&["--kind", "E", "--k", "2", "--s", "2", "--n", "2"], "x1^2 + x2^2 + x1*x2\n"),
        (&["--kind", "P", "--k", "3", "--s", "2", "--n", "2"], "-2*x1^3 - 2*x2^3\n"),
    ];
    for (args, expected) in cases {
        let mut full = vec!["expand", "--deterministic"];
        full.extend_from_slice(args);
        let o = gsym(&full);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), *expected, "{args:?}");
    }
}

#[test]
fn bisnomial_value_and_table() {
    let o = gsym(&["bisnomial", "--n", "3", "--k", "3", "--s", "2", "--deterministic"]);
    assert_eq!(stdout(&o), "7\n");
    let o = gsym(&["bisnomial", "--n", "3", "--k", "3", "--s", "2", "--table", "q", "--deterministic"]);
    assert_eq!(stdout(&o), "q + 2*q^2 + q^3 + 2*q^4 + q^5\n");
    let o = gsym(&["bisnomial", "--n", "1..2", "--s", "1", "--format", "csv", "--deterministic"]);
    assert_eq!(stdout(&o), "n,k,value\n1,0,1\n1,1,1\n2,0,1\n2,1,2\n2,2,1\n");
}

#[test]
fn verify_ortho_grid() {
    let o = gsym(&["verify", "--id", "ortho", "--n", "1..4", "--k", "0..8", "--s", "1..4", "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 144);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["identity_id"], "ortho");
        assert_eq!(v["holds"], true);
        assert!(v.get("elapsed").is_none());
    }
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("144 passed, 0 failed"), "{err}");
    assert!(!err.contains("took"));
}

#[test]
fn verify_partition_point() {
    let o = gsym(&["verify", "--id", "mroots_closed_k1", "--lambda", "3,1", "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--id", "newton_E", "--n", "1..3", "--k", "0..5", "--s", "1..3", "--deterministic"];
    let a = gsym(&args);
    let b = gsym(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

#[test]
fn every_identity_is_listed() {
    let o = gsym(&["list", "--deterministic"]);
    let out = stdout(&o);
    for e in gsym_core::identities::registry() {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(e.id)), "{}", e.id);
    }
}

#[test]
fn paths_and_tilings() {
    let o = gsym(&["paths", "--n", "3", "--k", "3", "--s", "2", "--deterministic"]);
    assert!(stdout(&o).contains("count: 7\n"));
    let o = gsym(&["tilings", "--n", "3", "--k", "3", "--s", "2", "--model", "H", "--deterministic"]);
    let out = stdout(&o);
    assert!(out.starts_with("rrrgg  - x1^3\n"));
    assert!(out.ends_with("sum: -x1^3 - x2^3 - x3^3 + x1*x2*x3\n"));
    let o = gsym(&["paths", "--n", "3", "--k", "3", "--s", "2", "--model", "H", "--format", "json", "--deterministic"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 4);
    assert_eq!(v["paths"][0]["steps"], "EEENN");
    assert_eq!(v["paths"][0]["sign"], -1);
}

#[test]
fn svg_to_file() {
    let dir = std::env::temp_dir().join(format!("gsym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("paths.svg");
    let o = gsym(&[
        "paths", "--n", "3", "--k", "3", "--s", "2", "--model", "H", "--format", "svg", "--out",
        path.to_str().unwrap(), "--deterministic",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg") && svg.contains("</svg>"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn schur_json() {
    let o = gsym(&["schur", "--lambda", "2,1", "--s", "1", "--n", "3", "--format", "json", "--deterministic"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], true);
}

#[test]
fn bad_flags_exit_two() {
    for args in [
        &["expand", "--kind", "X", "--k", "1", "--n", "1"][..],
        &["verify", "--k", "5..2"],
        &["verify", "--id", "no_such_identity"],
        &["expand", "--kind", "H", "--k", "2", "--n", "2"],
        &["paths", "--n", "2", "--k", "2", "--s", "1", "--format", "csv"],
        &["schur", "--lambda", "1,1,1", "--s", "1", "--n", "2"],
        &["expand", "--kind", "m", "--lambda", "2,x", "--n", "2"],
    ] {
        let o = gsym(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn elapsed_goes_to_stderr() {
    let o = gsym(&["bisnomial", "--n", "2", "--k", "1", "--s", "1"]);
    assert_eq!(stdout(&o), "2\n");
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("elapsed: "));
}
