use std::path::Path;
use std::process::{Command, Output};

use adelic_hurwitz::exact::rational::parse;
use adelic_hurwitz::padic::PadicNumber;
use serde_json::Value;

fn ahz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ahz"))
        .args(args)
        .env_remove("AHZ_PREC")
        .output()
        .expect("run ahz")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn example11_golden() {
    let out = ahz(&["cohen", "example11"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/example11.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), String::from_utf8(golden).unwrap());
    let v = json(&out);
    assert_eq!(v["params"]["bracket"], 87);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for (i, r) in rows.iter().enumerate() {
        let f = r["fraction"].as_str().unwrap();
        assert_eq!(f, format!("{}/106", 3 + 106 * i));
        assert_eq!(r["unit"], true);
    }
}

#[test]
fn lemma53_suite_passes() {
    let out = ahz(&["verify", "lemma53", "--kmax", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 20);
    assert_eq!(v["pass"], true);
}

#[test]
fn degenerate_moments_vanish() {
    let out = ahz(&["moments", "--p", "3", "--a", "1", "--m", "3", "--c", "1", "--K", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["moment"] == "0"));
}

#[test]
fn exit_codes() {
    assert_eq!(ahz(&["moments", "--p", "3", "--a", "3", "--m", "3"]).status.code(), Some(2));
    assert_eq!(ahz(&["moments", "--p", "4", "--a", "1", "--m", "3"]).status.code(), Some(2));
    assert_eq!(ahz(&["nonsense"]).status.code(), Some(2));
    let stuck = ahz(&["lp", "--p", "7", "--a", "1", "--m", "3", "--beta", "0", "--s", "1/2", "--J", "8"]);
    assert_eq!(stuck.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&stuck.stderr).contains("stabilize"));
    let literal = ahz(&["--format", "text", "verify", "lemma56", "--literal", "--kmax", "3"]);
    assert_eq!(literal.status.code(), Some(1));
    let text = String::from_utf8(literal.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("FAIL literal")));
    assert!(text.lines().filter(|l| l.starts_with("PASS restricted")).count() == 5);
}

#[test]
fn precision_from_env_and_flag() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ahz"));
        c.args(["zeta-sh", "--p", "3", "--a", "1", "--m", "4", "--s", "-1"]).args(extra);
        match env {
            Some(v) => c.env("AHZ_PREC", v),
            None => c.env_remove("AHZ_PREC"),
        };
        let out = c.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        json(&out)["params"]["context"]["N"].as_u64().unwrap()
    };
    assert_eq!(run(None, &[]), 10);
    assert_eq!(run(Some("6"), &[]), 6);
    assert_eq!(run(Some("6"), &["--N", "7"]), 7);
}

#[test]
fn json_values_round_trip() {
    let out = ahz(&["lp", "--p", "3", "--a", "1", "--m", "3", "--beta", "1", "--s", "2/7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let row = &v["rows"][0];
    let x: PadicNumber = serde_json::from_value(row["padic"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&x).unwrap(), row["padic"]);
    let eff = row["effective_prec"].as_i64().unwrap();
    let shown = row["value"].as_str().unwrap().split(" + ").next().unwrap();
    let q = parse(shown).unwrap();
    assert!(PadicNumber::from_rational_abs(&q, 3, eff).eq_mod(&x, eff));

    let m = ahz(&["moments", "--p", "5", "--a", "2", "--m", "5", "--K", "6"]);
    for r in json(&m)["rows"].as_array().unwrap() {
        let s = r["moment"].as_str().unwrap();
        assert_eq!(adelic_hurwitz::exact::rational::to_string(&parse(s).unwrap()), s);
    }
}

#[test]
fn csv_has_header() {
    let out = ahz(&["--format", "csv", "mahler", "--p", "3", "--a", "1", "--m", "3", "--J", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("coeff,j,valuation"));
    assert_eq!(text.lines().filter(|l| l.starts_with("integrality,true")).count(), 1);
}

#[test]
fn report_written_to_file_matches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("claim.json");
    let out = ahz(&["verify", "claim", "--samples", "50", "--seed", "7"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let again = ahz(&["verify", "claim", "--samples", "50", "--seed", "7"]);
    assert_eq!(std::fs::read(&path).unwrap(), again.stdout);
    assert_eq!(json(&again)["checks"].as_array().unwrap().len(), 50);
}
