use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrweights")).args(args).env_remove("RRWEIGHTS_ORDER").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn problem(name: &str) -> String {
    format!("{}/../../problems/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn tables_match_golden_files() {
    let cases: [(&[&str], &str); 5] = [
        (&["--id", "generalminithm", "--param", "M=2", "--n", "22", "--signature", "2"], "generalminithm_M2_n22_k2.txt"),
        (&["--id", "generalmini14thm", "--param", "M=3", "--n", "23", "--signature", "(3)"], "generalmini14thm_M3_n23_k3.txt"),
        (&["--id", "firstbigcomb", "--n", "22"], "firstbigcomb_n22.txt"),
        (&["--id", "bigcomb", "--n", "19"], "bigcomb_n19.txt"),
        (&["--id", "bigcomb", "--n", "19", "--format", "csv"], "bigcomb_n19.csv"),
    ];
    for (args, file) in cases {
        let mut full = vec!["table"];
        full.extend_from_slice(args);
        assert_eq!(stdout(&full), golden(file), "{file}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--id", "partM", "--order", "40"][..],
        &["refine-check", "--id", "firstbigcomb", "--n", "24"],
        &["table", "--id", "bigcomb", "--n", "19", "--format", "json"],
    ] {
        let a = stdout(args);
        let b = stdout(args);
        assert_eq!(a, b, "{args:?}");
    }
    let par = stdout(&["verify", "--id", "twopartM", "--order", "40"]);
    let seq = stdout(&["verify", "--id", "twopartM", "--order", "40", "--sequential"]);
    assert_eq!(par, seq);
}

#[test]
fn verify_reports_one_line_per_instance() {
    let out = stdout(&["verify", "--id", "partM", "--order", "40"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|l| l.starts_with("PASS partM M=")));
    assert_eq!(stdout(&["verify", "--id", "RR1", "--order", "30"]), "PASS RR1 order=60\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--id", "RR2", "--order", "30"]), 0);
    assert_eq!(code(&["verify", "--id", "RR2", "--order", "29"]), 2);
    assert_eq!(code(&["verify", "--id", "nope"]), 2);
    assert_eq!(code(&["verify", "--id", "partM", "--param", "M=3"]), 2);
    assert_eq!(code(&["verify", "--id", "partM", "--param", "x"]), 2);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["enumerate", "--class", "diff3", "--n", "4"]), 2);
    assert_eq!(code(&["table", "--id", "generalminithm", "--param", "M=2", "--n", "22"]), 1);
    assert_eq!(code(&["table", "--id", "bigcomb", "--n", "19", "--signature", "1,2"]), 2);
    assert_eq!(code(&["discover", "--problem", "/nonexistent"]), 2);
}

#[test]
fn order_comes_from_the_environment() {
    let run_with = |order: &str| {
        Command::new(env!("CARGO_BIN_EXE_rrweights"))
            .args(["verify", "--id", "RR1"])
            .env("RRWEIGHTS_ORDER", order)
            .output()
            .unwrap()
    };
    assert_eq!(run_with("20").status.code(), Some(2));
    assert_eq!(String::from_utf8(run_with("70").stdout).unwrap(), "PASS RR1 order=70\n");
}

#[test]
fn inconsistent_discovery_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "target miniprop\nfixed RR1 all\ntail miniprop\nunknown shift=2 degree=1 denominator=t*q^2 monomials=1,t\n")
        .unwrap();
    assert_eq!(code(&["discover", "--problem", path.to_str().unwrap()]), 1);
}

fn reparse(v: &serde_json::Value) -> serde_json::Value {
    serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap()
}

#[test]
fn json_round_trips() {
    let out = stdout(&["verify", "--id", "twopart14", "--order", "40", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = value.as_array().unwrap();
    assert_eq!(reports.len(), 8);
    assert_eq!(reports[0], serde_json::json!({"id": "twopart14", "params": {"M": 4}, "order": 60, "status": "pass"}));
    assert_eq!(reparse(&value), value);

    let out = stdout(&["table", "--id", "bigcomb", "--n", "19", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        value[0],
        serde_json::json!({"mu": "(19)", "lambda": "(8,6,4,1)", "image": "(3)", "signature": "(0,0,0)"})
    );
    assert_eq!(reparse(&value), value);

    let out = stdout(&["discover", "--problem", &problem("miniprop.txt"), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["status"], "unique");
    assert_eq!(value["numerators"], serde_json::json!(["t + q"]));
}

#[test]
fn enumerate_empty_partition() {
    assert_eq!(stdout(&["enumerate", "--class", "diff2_star", "--n", "0"]), "()\n");
    assert_eq!(stdout(&["enumerate", "--class", "diff2_star", "--n", "0", "--format", "json"]), "[\n  \"()\"\n]\n");
    let rr1 = stdout(&["enumerate", "--class", "rr1", "--n", "12"]);
    let diff2 = stdout(&["enumerate", "--class", "diff2", "--n", "12"]);
    assert_eq!(rr1.lines().count(), diff2.lines().count());
    assert_eq!(stdout(&["enumerate", "--class", "mod5:1,4", "--n", "12"]), rr1);
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let args = ["table", "--id", "bigcomb", "--n", "19", "--format", "csv"];
    let mut with = args.to_vec();
    with.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(stdout(&with), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&args));
}

#[test]
fn discover_underdetermined_lists_directions() {
    let out = stdout(&["discover", "--problem", &problem("tw-pair.txt")]);
    assert!(out.starts_with("underdetermined solution: 56 unknowns"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("direction 0:")));
}
