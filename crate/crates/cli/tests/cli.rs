use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn rlak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlak")).args(args).env_remove("RLAK_CAP").output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rlak-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn dims_json_and_csv() {
    let out = rlak(&["dims", "--field", "gf(2)", "--r", "2", "--max-degree", "6"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"dims":[2,3,2,6,6,11]}"#);
    let out = rlak(&["dims", "--r", "2", "--max-degree", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "degree,dim\n1,2\n2,3\n3,2");
}

#[test]
fn certificate_from_file() {
    let pres = write_temp(
        "three.json",
        r#"{"field": "gf(2)", "generators": ["x","y","z"], "relators": ["(sum (pp x 1) (br y z))"]}"#,
    );
    let out = rlak(&["certify-large", "--presentation", pres.to_str().unwrap(), "--q", "0"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["k"], 2);
    assert_eq!(v["difference"], 2);
    assert_eq!(v["generatorCount"], 6);
    assert_eq!(v["qMode"], "supplied");

    let two = write_temp("two.json", r#"{"field": "gf(2)", "generators": ["x","y"], "relators": ["(br x y)"]}"#);
    let out = rlak(&["certify-large", "--presentation", two.to_str().unwrap(), "--q", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("HypothesisFailed"));
}

#[test]
fn normalize_worked_example() {
    let pres = write_temp(
        "jac.json",
        r#"{"field": "gf(2)", "generators": ["x","y"], "relators": ["(sum (pp x 1) (pp y 1) (br x y))"]}"#,
    );
    let v = json_of(&rlak(&["normalize", "--presentation", pres.to_str().unwrap()]));
    assert_eq!(v["presentation"]["relators"][0], "(pp x' 1)");
    assert_eq!(v["omitted"][0], "y");
    assert_eq!(v["definitions"][0], "(sum x y)");
}

#[test]
fn checks_carry_anchor_and_instance() {
    let out = rlak(&["zp-check", "--max-degree", "4", "--ideal", "y", "--g", "y"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["check"], "zp-check");
    assert_eq!(v["result"], true);
    assert!(v["anchor"].as_str().unwrap().contains("Z_p"));
    assert_eq!(v["instance"]["g"], "y");

    let out = rlak(&["l991-check", "--max-degree", "6", "--h", "y", "--h", "(pp x 1)", "--g", "y", "--n", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PreconditionFailed"));
}

#[test]
fn errors_and_cap() {
    assert_eq!(rlak(&["no-such-command"]).status.code(), Some(1));
    let out = rlak(&["eval", "--max-degree", "3", "--expr", "(br x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ParseError"));
    let out = Command::new(env!("CARGO_BIN_EXE_rlak"))
        .args(["basis", "--max-degree", "3"])
        .env("RLAK_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ResourceBound"));
}

#[test]
fn verify_is_reproducible() {
    let a = rlak(&["verify", "--suite", "ore", "--seed", "3"]);
    let b = rlak(&["verify", "--suite", "ore", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("seed: 3"));
    let v = json_of(&a);
    assert_eq!(v["suites"][0]["suite"], "ore");
    assert_eq!(v["result"], true);
}

#[test]
fn algebra_queries() {
    let v = json_of(&rlak(&["eval", "--max-degree", "4", "--expr", "(pp (sum x y) 1)"]));
    assert_eq!(v["normal_form"], "(sum (br x y) (pp x 1) (pp y 1))");
    let v = json_of(&rlak(&["derived-series", "--max-degree", "4"]));
    assert_eq!(v["series"][1]["codim"], 2);
    let v = json_of(&rlak(&["nil-index", "--max-degree", "8", "--expr", "x"]));
    assert_eq!(v["nil_index"], 16);
    let v = json_of(&rlak(&["find-d", "--max-degree", "6", "--v", "x"]));
    assert_eq!(v["d"], 1);
    let v = json_of(&rlak(&["ore-div", "--f", "1 + t^3", "--g", "1 + t"]));
    assert_eq!(v["remainder"], "0");
    let v = json_of(&rlak(&["kukin-check", "--r", "2", "--k", "1", "--max-degree", "6"]));
    assert_eq!(v["result"], true);
}
