//! End-to-end tests for the `extrop` binary: the documented exit-code
//! contract, the JSON output shapes, and the worked examples.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use extrop::DetResult;
use serde_json::Value;

fn write_file(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extrop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extrop"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON value")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn det_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_file(dir.path(), "a.json", r#"{"rows":[["1","1"],["2","3"]]}"#);
    let v = stdout_json(&run(&["det", a.to_str().unwrap()]));
    assert_eq!(v["value"], "4");
    assert_eq!(v["tag"], "real");

    let tied = write_file(dir.path(), "tied.json", r#"{"rows":[["1","2"],["2","3"]]}"#);
    let v = stdout_json(&run(&["det", tied.to_str().unwrap(), "--method", "naive"]));
    assert_eq!(v["value"], "4v");
    assert_eq!(v["tag"], "nu");
    assert_eq!(v["optimal_count"], 2);

    let id3 = write_file(
        dir.path(),
        "id3.json",
        r#"{"rows":[["0","-inf","-inf"],["-inf","0","-inf"],["-inf","-inf","0"]]}"#,
    );
    let v = stdout_json(&run(&["det", id3.to_str().unwrap(), "--method", "both"]));
    assert_eq!(v["value"], "0");
    assert_eq!(v["optimal_count"], 1);

    // the emitted JSON re-parses under the library's own contract
    let reparsed: DetResult = serde_json::from_value(v).unwrap();
    assert_eq!(reparsed.value.to_string(), "0");
}

#[test]
fn det_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = write_file(dir.path(), "bad.json", "{not json");
    assert_eq!(code(&run(&["det", bad_json.to_str().unwrap()])), 2);

    let bad_literal = write_file(dir.path(), "lit.json", r#"{"rows":[["1","squid"]]}"#);
    assert_eq!(code(&run(&["det", bad_literal.to_str().unwrap()])), 2);

    assert_eq!(code(&run(&["det", dir.path().join("absent.json").to_str().unwrap()])), 2);

    let rect = write_file(dir.path(), "rect.json", r#"{"rows":[["1","2","3"],["4","5","6"]]}"#);
    assert_eq!(code(&run(&["det", rect.to_str().unwrap()])), 3);

    let cube = write_file(
        dir.path(),
        "cube.json",
        r#"{"rows":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let out = run_env(
        &["det", cube.to_str().unwrap(), "--method", "naive"],
        "EXTROP_NAIVE_CAP",
        "2",
    );
    assert_eq!(code(&out), 3);
    let out = run_env(
        &["det", cube.to_str().unwrap(), "--method", "naive"],
        "EXTROP_NAIVE_CAP",
        "many",
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn inv_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_file(dir.path(), "a.json", r#"{"rows":[["1","-1"],["2","2"]]}"#);
    let v = stdout_json(&run(&["inv", a.to_str().unwrap()]));
    assert_eq!(v["inverse"]["rows"], serde_json::json!([["-1", "-4"], ["-1", "-2"]]));
    assert_eq!(v["right_ok"], true);
    assert_eq!(v["left_ok"], true);

    // nu-singular: the formula evaluates but the products are not pseudo units
    let s = write_file(dir.path(), "s.json", r#"{"rows":[["1","-1"],["4","2"]]}"#);
    let v = stdout_json(&run(&["inv", s.to_str().unwrap()]));
    assert_eq!(v["right_ok"], false);
    assert_eq!(code(&run(&["inv", s.to_str().unwrap(), "--strict"])), 5);

    // determinant -inf: no inverse to report at all
    let dead = write_file(dir.path(), "dead.json", r#"{"rows":[["0","-inf"],["0","-inf"]]}"#);
    assert_eq!(code(&run(&["inv", dead.to_str().unwrap()])), 5);

    let id2 = write_file(dir.path(), "id2.json", r#"{"rows":[["0","-inf"],["-inf","0"]]}"#);
    let v = stdout_json(&run(&["inv", id2.to_str().unwrap()]));
    assert_eq!(v["inverse"]["rows"], serde_json::json!([["0", "-inf"], ["-inf", "0"]]));
}

#[test]
fn check_pair_and_classification() {
    let dir = tempfile::tempdir().unwrap();
    // a 3x3 with two distinct pseudo inverses, one of them itself
    let a = write_file(
        dir.path(),
        "a.json",
        r#"{"rows":[["0","-2","-1"],["-2","0","-3v"],["-1","-3v","0"]]}"#,
    );
    let ap = write_file(
        dir.path(),
        "ap.json",
        r#"{"rows":[["0","-2","-1"],["-2","0","-3"],["-1","-3","0"]]}"#,
    );
    for (x, y) in [(&a, &ap), (&ap, &a), (&a, &a)] {
        let v = stdout_json(&run(&["check-pair", x.to_str().unwrap(), y.to_str().unwrap()]));
        assert_eq!(v["is_inverse_pair"], true, "{x:?} vs {y:?}");
    }

    let one = write_file(dir.path(), "one.json", r#"{"rows":[["0"]]}"#);
    let wide = write_file(dir.path(), "wide.json", r#"{"rows":[["0","1"]]}"#);
    assert_eq!(
        code(&run(&["check-pair", one.to_str().unwrap(), wide.to_str().unwrap()])),
        3
    );

    let unit = write_file(dir.path(), "unit.json", r#"{"rows":[["0","-2v"],["1v","0"]]}"#);
    let v = stdout_json(&run(&["pseudo-unit", unit.to_str().unwrap()]));
    assert_eq!(v["is_pseudo_unit"], true);
    assert_eq!(v["is_idempotent"], true);

    let v = stdout_json(&run(&["regular", unit.to_str().unwrap()]));
    assert_eq!(v["regular"], true);
    assert_eq!(v["det"]["value"], "0");
}

#[test]
fn laws_cli_contract() {
    let out = run(&["laws", "--law", "no-such"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown law id"));

    let out = run(&["laws", "--law", "identical-rows"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["laws", "--law", "semiring-axioms", "--count", "25", "--seed", "9"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every output line is JSON"))
        .collect();
    assert_eq!(lines.len(), 27); // 25 reports, law summary, aggregate
    assert!(lines[..25].iter().all(|l| l["verdict"] == "pass" && l["seed"] == 9));
    assert_eq!(lines[25]["passed"], 25);
    assert_eq!(lines[26]["all_passed"], true);

    let out = run(&["laws", "--list"]);
    let ids: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["law_id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids.len(), 14);
    assert!(ids.contains(&"cauchy".to_string()));

    // a bad generator config is an input error, not a crash
    let out = run(&["laws", "--law", "freshman", "--count", "0"]);
    assert_eq!(code(&out), 2);
}

/// The documented full-suite invocation. Slow (tens of seconds in debug
/// builds), but it is the contract a scripted caller relies on.
#[test]
fn laws_full_suite_seed_42() {
    let out = run(&["laws", "--law", "all", "--seed", "42", "--count", "1000"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let last: Value = serde_json::from_str(stdout.lines().last().unwrap()).unwrap();
    assert_eq!(last["laws"], 14);
    assert_eq!(last["failures"], 0);
    assert_eq!(last["all_passed"], true);
}

#[test]
fn poly_eval_and_arity() {
    let dir = tempfile::tempdir().unwrap();
    let line = write_file(
        dir.path(),
        "line.json",
        r#"{"vars":2,"monomials":[{"exp":[1,0],"coef":"0"},{"exp":[0,1],"coef":"0"},{"exp":[0,0],"coef":"0"}]}"#,
    );
    let v = stdout_json(&run(&["poly-eval", line.to_str().unwrap(), "--point", "0,0"]));
    assert_eq!(v["value"], "0v");
    assert_eq!(v["in_zero_set"], true);

    let v = stdout_json(&run(&["poly-eval", line.to_str().unwrap(), "--point", "5,0"]));
    assert_eq!(v["value"], "5");
    assert_eq!(v["tag"], "real");
    assert_eq!(v["in_zero_set"], false);

    assert_eq!(code(&run(&["poly-eval", line.to_str().unwrap(), "--point", "1"])), 3);
    assert_eq!(code(&run(&["poly-eval", line.to_str().unwrap(), "--point", "1,bad"])), 2);
}

#[test]
fn locus_worked_examples() {
    let dir = tempfile::tempdir().unwrap();
    let ray = write_file(
        dir.path(),
        "ray.json",
        r#"{"vars":1,"monomials":[{"exp":[1],"coef":"0"},{"exp":[0],"coef":"0"}]}"#,
    );
    let out = run(&["locus", ray.to_str().unwrap(), "--box", "-2:2", "--step", "1"]);
    assert_eq!(code(&out), 0);
    let in_points: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["in_locus"] == true)
        .collect();
    assert_eq!(in_points.len(), 1);
    assert_eq!(in_points[0]["point"], serde_json::json!(["0"]));

    let line = write_file(
        dir.path(),
        "line.json",
        r#"{"vars":2,"monomials":[{"exp":[1,0],"coef":"0"},{"exp":[0,1],"coef":"0"},{"exp":[0,0],"coef":"0"}]}"#,
    );
    let out = run(&[
        "locus",
        line.to_str().unwrap(),
        "--box",
        "-1:1,-1:1",
        "--step",
        "1",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("x,y,in_locus"));
    let hits: Vec<&str> = rows.filter(|r| r.ends_with(",true")).collect();
    assert_eq!(hits, ["-1,0,true", "0,-1,true", "0,0,true", "1,1,true"]);

    let constant = write_file(
        dir.path(),
        "c.json",
        r#"{"vars":1,"monomials":[{"exp":[0],"coef":"3"}]}"#,
    );
    let out = run(&["locus", constant.to_str().unwrap(), "--box", "-2:2", "--step", "1"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .all(|l| serde_json::from_str::<Value>(l).unwrap()["in_locus"] == false));

    let cubic = write_file(
        dir.path(),
        "cubic.json",
        r#"{"vars":3,"monomials":[{"exp":[1,1,1],"coef":"0"}]}"#,
    );
    assert_eq!(
        code(&run(&["locus", cubic.to_str().unwrap(), "--box", "0:1,0:1,0:1", "--step", "1"])),
        3
    );

    assert_eq!(
        code(&run(&["locus", ray.to_str().unwrap(), "--box", "2:-2", "--step", "1"])),
        2
    );
    assert_eq!(
        code(&run(&["locus", ray.to_str().unwrap(), "--box", "-2:2", "--step", "0"])),
        2
    );
}

#[test]
fn val_demo_reports_cancellation() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(
        dir.path(),
        "f.json",
        r#"{"terms":[{"exp":"-2","coef":"1"},{"exp":"0","coef":"3"}]}"#,
    );
    let g = write_file(dir.path(), "g.json", r#"{"terms":[{"exp":"-2","coef":"-1"}]}"#);

    let v = stdout_json(&run(&["val-demo", f.to_str().unwrap()]));
    assert_eq!(v["val"], "2");

    let v = stdout_json(&run(&["val-demo", f.to_str().unwrap(), g.to_str().unwrap()]));
    assert_eq!(v["val_f"], "2");
    assert_eq!(v["val_g"], "2");
    // the leading terms cancel: the sum valuation drops inside the ray of 2v
    assert_eq!(v["sum"]["anchor"], "2v");
    assert_eq!(v["sum"]["val"], "0");
    assert_eq!(v["sum"]["in_ray"], true);
    assert_eq!(v["product"]["val"], "4");
    assert_eq!(v["verdict"], "pass");
}
