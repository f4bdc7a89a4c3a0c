use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ts-spectra"))
        .args(args)
        .env_remove("TS_SPECTRA_LIMIT")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn spectrum_json() {
    let o = run(&["spectrum", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["values"], serde_json::json!([-6, -2, 0, 2, 6]));
    let nine = json(&run(&["spectrum", "9"]));
    assert!(!nine["values"].as_array().unwrap().contains(&Value::from(2)));
}

#[test]
fn spectrum_is_deterministic() {
    let args = ["spectrum", "14", "--witnesses", "--threads", "3"];
    assert_eq!(
        run(&args).stdout,
        run(&["spectrum", "14", "--witnesses", "--threads", "1"]).stdout
    );
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn spectrum_csv_and_multiplicities() {
    let o = run(&["spectrum", "3", "--format", "csv", "--multiplicities"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "value,multiplicity,witness\n-3,1,\n0,4,\n3,1,\n"
    );
    assert_eq!(code(&run(&["spectrum", "13", "--multiplicities"])), 3);
}

#[test]
fn spectrum_ceiling() {
    let o = run(&["spectrum", "90"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("--limit-override"));
    let o = Command::new(env!("CARGO_BIN_EXE_ts-spectra"))
        .args(["spectrum", "12"])
        .env("TS_SPECTRA_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["spectrum", "0"])), 2);
    assert_eq!(code(&run(&["spectrum", "abc"])), 2);
}

#[test]
fn witness_command() {
    let o = run(&["witness", "76", "300", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["verified"], true);
    assert_eq!(v["partition"][0], 25);
    assert_eq!(
        v["derivation"].as_array().unwrap().last().unwrap()["step"],
        "lift"
    );

    let o = run(&["witness", "9", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("no partition of 9 attains 2"));

    let o = run(&["witness", "10", "-3", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["partition"], serde_json::json!([4, 2, 2, 2]));

    assert_eq!(code(&run(&["witness", "5", "11"])), 2);
    assert_eq!(code(&run(&["witness", "5"])), 2);
}

#[test]
fn verify_commands() {
    let o = run(&["verify", "theorem-x", "--n-range", "27..60"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json(&o)["passed"], true);
    assert_eq!(code(&run(&["verify", "theorem-xx", "--n", "40"])), 0);
    assert_eq!(
        code(&run(&["verify", "inequalities", "--n-range", "76..500"])),
        0
    );
    assert_eq!(code(&run(&["verify", "lift-range", "--n", "80"])), 0);
    let o = run(&["verify", "conjecture", "--n", "76"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["summary"]["scanned"], 9_289_091);
    // far below the proven threshold the interval has holes
    let o = run(&["verify", "conjecture", "--n", "30"]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["summary"]["misses"][0]["missing"]
        .as_array()
        .unwrap()
        .contains(&Value::from(94)));
    assert_eq!(
        code(&run(&["verify", "theorem-x", "--n-range", "60..27"])),
        2
    );
    assert_eq!(code(&run(&["verify", "inequalities", "--n", "50"])), 2);
    assert_eq!(code(&run(&["verify", "nonsense"])), 2);
}

#[test]
fn verify_errata_writes_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("errata.jsonl");
    let o = run(&[
        "verify",
        "errata",
        "--n-range",
        "45..80",
        "--report",
        path.to_str().unwrap(),
    ]);
    // the even-b midpoint row of the third table does not sum to n as printed
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert!(v["summary"]["formula_errors"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r[0] == "EvenT3Row2"));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(
        lines.len() as u64,
        v["summary"]["records"].as_u64().unwrap()
    );
    assert!(lines.iter().all(|r| r["failure"]["kind"].is_string()));
}

#[test]
fn oracle_command() {
    let o = run(&["oracle", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["adjacency"], serde_json::json!([-3, 0, 3]));
    let o = run(&["oracle", "5", "--multiplicities"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["hook_multiplicities"]["0"], 36);
    assert_eq!(code(&run(&["oracle", "7"])), 3);
    assert_eq!(code(&run(&["oracle", "1"])), 2);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = run(&[
        "--output",
        path.to_str().unwrap(),
        "witness",
        "45",
        "41",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        v["partition"],
        serde_json::json!([10, 10, 8, 6, 4, 3, 2, 1, 1])
    );
}
