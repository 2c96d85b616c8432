use std::path::PathBuf;
use std::process::{Command, Output};

use gl11::algebra::{MultiLaurent, RatFunc, Value};
use gl11::lens::{lens_closed_formula, LensPoint};
use serde_json::Value as Json;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn gl11(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl11")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Json) {
    let out = gl11(args);
    let j = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (out.status.code().unwrap(), j)
}

fn value(j: &Json) -> Value {
    Value::from_json(j).unwrap()
}

#[test]
fn hopf_conway_is_one() {
    let (code, r) = report(&["link", &fixture("hopf.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["outputs"]["conway"]["text"], "1");
    assert_eq!(r["outputs"]["linking_matrix"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn chain4_delta() {
    let (code, r) = report(&["link", &fixture("chain4.json")]);
    assert_eq!(code, 0);
    let expected = &MultiLaurent::antisym(4, 1, 2) * &MultiLaurent::antisym(4, 2, 2);
    let got = value(&r["outputs"]["delta_c"]);
    assert_eq!(got.as_ratfunc().unwrap(), &RatFunc::from_poly(expected));
}

#[test]
fn weighted_delta() {
    let (code, r) = report(&["link", &fixture("hopf.json"), "--colors", "0,1"]);
    assert_eq!(code, 0);
    assert!(r["outputs"]["delta_weighted"].is_object());
    let (code, _) = report(&["link", &fixture("hopf.json"), "--colors", "0,2"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_is_invalid_input() {
    let (code, r) = report(&["link", &fixture("malformed.json")]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "invalid-input");
    let (code, _) = report(&["link", "/nonexistent/link.json"]);
    assert_eq!(code, 2);
}

#[test]
fn chain32_matches_lens_formula() {
    let (code, r) = report(&["manifold", &fixture("chain32.json"), "--omega", "m2=zeta5"]);
    assert_eq!(code, 0);
    let expected = lens_closed_formula(2, LensPoint::Root { m: 5, k: 1 }).unwrap();
    assert_eq!(value(&r["outputs"]["delta"]["refined"]), expected);
    assert_eq!(r["outputs"]["omega"]["text"], "m1=t^-2, m2=t");
}

#[test]
fn both_methods_agree() {
    let (code, r) = report(&["manifold", &fixture("chain32.json"), "--omega", "m2=zeta5", "--both"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["delta"]["equal"], true);
    assert_eq!(r["outputs"]["delta"]["kirby"], r["outputs"]["delta"]["refined"]);
}

#[test]
fn trivial_image_is_not_computable() {
    let (code, r) = report(&["manifold", &fixture("chain32.json"), "--omega", "m1=1,m2=zeta5^0"]);
    assert_eq!(code, 3);
    assert_eq!(r["status"], "not-computable");
}

#[test]
fn enumerate_classes() {
    let (code, r) = report(&["manifold", &fixture("chain32.json"), "--enumerate", "--torsion-order", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["classes"].as_array().unwrap().len(), 4);
    let (code, _) = report(&["manifold", &fixture("chain32.json"), "--enumerate"]);
    assert_eq!(code, 2);
}

#[test]
fn torsion_relation() {
    let (code, r) = report(&["torsion", &fixture("chain32.json"), "--omega", "m2=zeta5", "--charge", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["holds"], true);
    let (code, _) = report(&["torsion", &fixture("chain32.json"), "--charge", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn classify_seven_and_twelve() {
    let (_, r) = report(&["classify", "7"]);
    assert_eq!(r["outputs"]["invariant"], serde_json::json!([[1], [2, 4], [3, 5], [6]]));
    assert_eq!(r["outputs"]["matches_arithmetic"], true);
    let (_, r) = report(&["classify", "12"]);
    assert!(r["outputs"]["merged"].as_array().unwrap().contains(&serde_json::json!([5, 11])));
}

#[test]
fn lens_csv_columns() {
    let out = gl11(&["lens", "5", "--format", "csv"]);
    assert!(out.status.success());
    let mut rd = csv::Reader::from_reader(&out.stdout[..]);
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["p", "q", "k", "closed_value", "surgery_value", "equal"]);
    let rows: Vec<_> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| &r[5] == "true" && r[3] == r[4]));
}

#[test]
fn output_is_deterministic() {
    let args = ["lens", "7", "3"];
    let a = gl11(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_gl11"))
        .args(args)
        .env("GL11_THREADS", "1")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    let (code, _) = {
        let o = Command::new(env!("CARGO_BIN_EXE_gl11")).args(args).env("GL11_THREADS", "zero").output().unwrap();
        (o.status.code().unwrap(), ())
    };
    assert_eq!(code, 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = gl11(&["classify", "5", "--output", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let j: Json = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["command"], "classify");
}

#[test]
fn selftest_fast_criteria_pass() {
    let (code, r) = report(&["selftest", "--skip", "3,4,5"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["outputs"]["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn selftest_reports_the_lens_criterion() {
    let (code, r) = report(&["selftest", "--skip", "1,2,3,5,6,7,8,9"]);
    assert_eq!(code, 4);
    assert_eq!(r["outputs"]["checks"][0]["passed"], false);
    assert!(r["outputs"]["checks"][0]["detail"].as_str().unwrap().contains("0 mismatches"));
}
