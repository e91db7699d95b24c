use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use z4gbent::construct::{build_code, extend_type_ii, reference_pair};

fn z4gbent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4gbent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = z4gbent(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("z4gbent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn bent_counts() {
    let (code, v) = json(&["bent", "--n", "2", "--list"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 8);
    assert_eq!(v["functions"].as_array().unwrap().len(), 8);
    let (code, v) = json(&["bent", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 896);
    assert_eq!(z4gbent(&["bent", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn gbent_and_build() {
    let (code, v) = json(&["gbent", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["table"], "01010321");
    assert_eq!(v["gbent"], true);
    assert_eq!(v["spectrum_norms"], serde_json::json!([8]));

    let (code, v) = json(&["build", "--a", "x1*x2", "--b", "x1*x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["c_f"], "01010123");
    assert_eq!(v["type"], serde_json::json!([2, 3]));

    let (_, v) = json(&["build", "--m", "5"]);
    assert_eq!(v["c_f"], "01010103012101230101212323030321");
}

#[test]
fn input_errors() {
    let out = z4gbent(&["build", "--a", "x1**x2", "--b", "x1*x2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
    // not bent
    assert_eq!(
        z4gbent(&["gbent", "--a", "x1", "--b", "x1*x2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        z4gbent(&["pipeline", "--m", "3", "--samples", "100"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(z4gbent(&["verify", "--m", "4"]).status.code(), Some(2));
    assert_eq!(z4gbent(&["designs", "--m", "9"]).status.code(), Some(2));
    assert_eq!(z4gbent(&["build"]).status.code(), Some(2));
}

#[test]
fn extend_and_gray_from_file() {
    let (a, b) = reference_pair(3).unwrap();
    let cf = build_code(&a, &b).unwrap();
    let path = temp_file("cf3.txt", &cf.to_text());
    let p = path.to_str().unwrap();
    let (code, v) = json(&["extend", "--in", p, "--samples", "10000"]);
    assert_eq!(code, 0);
    assert_eq!(v["type"], serde_json::json!([2, 4]));
    assert_eq!(v["added_rows"], serde_json::json!(["00000202"]));
    assert_eq!(v["type_ii"]["holds"], true);

    let (code, v) = json(&["gray", "--in", p]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["length"].clone(), v["dimension"].clone()),
        (16.into(), 7.into())
    );
    assert_eq!(v["minimum_distance"], 4);

    let nonlinear = temp_file("nonlinear.txt", "110\n011\n");
    let out = z4gbent(&["gray", "--in", nonlinear.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gray_capacity() {
    let (a, b) = reference_pair(5).unwrap();
    let ext = extend_type_ii(&build_code(&a, &b).unwrap()).unwrap();
    let path = temp_file("ext5.txt", &ext.code.to_text());
    let (code, v) = json(&["gray", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(v["dimension"], 32);
    assert_eq!(v["self_dual"], true);
    assert!(v["minimum_distance"].is_null());
}

#[test]
fn verify_m3() {
    let (code, v) = json(&["verify", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 0x5eed);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn designs_tables() {
    let (code, v) = json(&["designs", "--m", "3"]);
    assert_eq!(code, 0);
    let designs: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["design"].as_str().unwrap())
        .collect();
    assert_eq!(
        designs,
        [
            "1-(8,2,1)",
            "1-(8,5,5)",
            "1-(8,8,1)",
            "1-(16,4,1)",
            "1-(8,2,3)",
            "1-(8,4,2)",
            "1-(8,2,3)"
        ]
    );
    assert_eq!(v["torsion"]["b"], 12);

    let (code, v) = json(&["designs", "--m", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["torsion"]["design"], "1-(128,2,63)");
    assert_eq!(v["torsion"]["b"], 4032);
    assert_eq!(v["torsion"]["coverage"], true);
}

#[test]
fn pipeline_is_reproducible() {
    let args = [
        "pipeline",
        "--a",
        "x1*x2",
        "--b",
        "x1+x1*x2",
        "--samples",
        "10000",
        "--seed",
        "0x1234",
        "--json",
    ];
    let first = z4gbent(&args);
    let second = z4gbent(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 0x1234);
    assert_eq!(v["passed"], true);
    assert_eq!(v["c_f"]["digits"], "01010321");

    let out = temp_file("report.json", "");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out.to_str().unwrap()]);
    let third = z4gbent(&with_out);
    assert!(third.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), first.stdout);
}
