use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn repring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repring")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let out = repring(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("repring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn example_d8_pipeline() {
    let (v, code) = json(&["example", "d8"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["psi2_w"]["G"], serde_json::json!([1, 1, 1, -1, 0]));
    assert_eq!(r["psi2_w"]["G_b"], serde_json::json!([1, -1, 1, 1, 0]));
    assert_eq!(r["b"][1][1], "y");
    assert!(r["odd"].as_array().unwrap().iter().all(|x| x["equal"] == true));
    let text = String::from_utf8(repring(&["example", "d8"]).stdout).unwrap();
    assert!(text.contains("V00 - V10 + V01 + V11"));
}

#[test]
fn example_klein() {
    let (v, code) = json(&["example", "klein"]);
    assert_eq!(code, 0);
    assert!(v["results"]["adams"].as_array().unwrap().iter().all(|x| x["equal"] == true));
}

#[test]
fn ring_order_and_exponent() {
    let (v, code) = json(&["ring-order", "D8"]);
    assert_eq!((v["results"]["order_from_ring"].as_u64(), code), (Some(8), 0));
    let (v, code) = json(&["ring-exponent", "C2xC4"]);
    assert_eq!((v["results"]["exponent_from_ring"].as_u64(), code), (Some(4), 0));
    let out = repring(&["ring-order", "D8"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "8");
}

#[test]
fn ring_iso_d8_q8() {
    let (v, code) = json(&["ring-iso", "D8", "Q8", "--check-adams", "2"]);
    assert_eq!(code, 0);
    let isos = v["results"]["isomorphisms"].as_array().unwrap();
    assert!(!isos.is_empty());
    assert!(v["results"]["commutes"].as_array().unwrap().iter().all(|c| c == false));
}

#[test]
fn chartable_json_shape() {
    let (v, code) = json(&["chartable", "S3"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["classes"].as_array().unwrap().len(), 3);
    let degrees: Vec<u64> = r["irreducibles"].as_array().unwrap().iter().map(|x| x["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![1, 1, 2]);
    assert_eq!(r["irreducibles"][0]["values"][0], serde_json::json!({"order": 1, "coeffs": [[0, "1"]]}));
}

#[test]
fn adams_fs_lambda() {
    let (v, _) = json(&["adams", "D8", "--k", "1"]);
    let m = v["results"]["matrix"].as_array().unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x.as_i64().unwrap(), i64::from(i == j));
        }
    }
    let (v, _) = json(&["fs", "Q8", "--k", "2"]);
    assert_eq!(v["results"]["indicators"], serde_json::json!([1, 1, 1, 1, -1]));
    let (v, code) = json(&["lambda", "Q8", "--irr", "4", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["coefficients"], serde_json::json!([1, 0, 0, 0, 0]));
}

#[test]
fn twist_spec_files() {
    let spec = data("d8_twist.json");
    let out_group = scratch("gb.json");
    let (v, code) = json(&["twist", &spec, "--emit-group", out_group.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["nondegenerate"], true);
    assert_eq!(v["results"]["twisted"]["exponent"], 4);
    let (v, code) = json(&["ring-order", out_group.to_str().unwrap()]);
    assert_eq!((v["results"]["order_from_ring"].as_u64(), code), (Some(8), 0));

    let (v, code) = json(&["verify-odd-adams", &spec, "--kmax", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdicts"].as_array().unwrap().len(), 4);
    let (v, code) = json(&["compare-adams", &spec, "--k", "2"]);
    assert_eq!((v["results"]["equal"].as_bool(), code), (Some(false), 0));

    let (_, code) = json(&["verify-odd-adams", &data("d8xc2_twist.json")]);
    assert_eq!(code, 0);
}

#[test]
fn permutation_group_file() {
    let f = scratch("s3.json");
    std::fs::write(&f, r#"{"name": "S3", "degree": 3, "perm_gens": [[1, 2, 0], [1, 0, 2]]}"#).unwrap();
    let (v, code) = json(&["ring-order", f.to_str().unwrap()]);
    assert_eq!((v["results"]["order_from_ring"].as_u64(), code), (Some(6), 0));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(repring(&["chartable", "Nope"]).status.code(), Some(2));
    let f = scratch("bad.json");
    std::fs::write(&f, r#"{"name": "bad", "order": 2, "mul": [[0, 1], [0, 1]]}"#).unwrap();
    let out = repring(&["chartable", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(repring(&["lambda", "D8", "--irr", "9", "--n", "2"]).status.code(), Some(2));
    assert_eq!(repring(&["chartable", "D8", "--limit-order", "4"]).status.code(), Some(2));
    assert_ne!(repring(&["no-such-command"]).status.code(), Some(0));
}

#[test]
fn json_reports_are_byte_identical() {
    let a = repring(&["example", "d8", "--json", "-"]).stdout;
    let b = repring(&["example", "d8", "--json", "-"]).stdout;
    assert_eq!(a, b);
    let c = repring(&["chartable", "A4", "--seed", "3", "--json", "-"]).stdout;
    let d = repring(&["chartable", "A4", "--seed", "3", "--json", "-"]).stdout;
    assert_eq!(c, d);
}
