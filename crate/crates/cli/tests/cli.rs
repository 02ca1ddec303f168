use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn ncnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncnet"))
        .args(args)
        .current_dir(root())
        .env_remove("NCNET_FIXTURES")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = ncnet(&a);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).expect("json report"))
}

#[test]
fn measure_prints_the_matrix() {
    let out = ncnet(&["measure", "--network", "fixtures/fig1.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("  (d, dc; ad, b+adc)\n"));

    let (code, r) = json(&["measure", "--network", "fig1"]);
    assert_eq!(code, 0);
    assert_eq!(r["output"], "(d, dc; ad, b+adc)");
    assert_eq!(r["status"], "pass");
    for k in ["command", "fixture", "status", "defects", "wall_time_ms"] {
        assert!(r.get(k).is_some(), "{k}");
    }
}

#[test]
fn ybe_exit_codes() {
    let (code, r) = json(&["ybe", "--type", "trig", "--n", "3"]);
    assert_eq!((code, r["status"].as_str()), (0, Some("pass")));
    let (code, r) = json(&["ybe", "--type", "disk", "--n", "2"]);
    assert_eq!((code, r["status"].as_str()), (1, Some("fail")));
    assert_eq!(r["defects"][0]["location"], "qybe I (1,1,1,1,1,1)");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(ncnet(&["measure", "--network", "missing.json"]).status.code(), Some(2));
    assert_eq!(ncnet(&["measure"]).status.code(), Some(2));
    assert_eq!(ncnet(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncnet(&["ybe", "--bogus"]).status.code(), Some(2));
    assert_eq!(ncnet(&["ybe", "--n", "0"]).status.code(), Some(2));
    assert_eq!(ncnet(&["verify-planar", "--network", "torus"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("ncnet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"surface\": 3}").unwrap();
    let (code, r) = json(&["validate", "--network", bad.to_str().unwrap()]);
    assert_eq!((code, r["status"].as_str()), (2, Some("error")));
}

#[test]
fn verification_commands() {
    for args in [
        vec!["validate", "--network", "torus"],
        vec!["bracket", "--network", "gamma_black"],
        vec!["verify-planar", "--network", "fig1"],
        vec!["verify-planar", "--seed", "5"],
        vec!["verify-cylinder", "--network", "gamma_black_cut"],
        vec!["verify-cylinder", "--seed", "5"],
        vec!["jacobi", "--n", "2"],
        vec!["lax", "--k", "2"],
        vec!["involution", "--k", "1", "--l", "3"],
        vec!["decompose", "--network", "fig1"],
    ] {
        let (code, r) = json(&args);
        assert_eq!(code, 0, "{args:?}: {r}");
    }
    let (_, r) = json(&["bracket", "--network", "gamma_black"]);
    assert!(r["output"].as_str().unwrap().contains("{b11, b21} = -1/2 * y2.y3 (x) y1.y3"));
}

#[test]
fn refactor_reports_the_flow_mismatch() {
    let (code, r) = json(&["refactor", "--n", "2", "--degree", "5"]);
    assert_eq!(code, 1);
    let locs: Vec<&str> = r["defects"].as_array().unwrap().iter().map(|d| d["location"].as_str().unwrap()).collect();
    assert!(!locs.is_empty() && locs.iter().all(|l| l.starts_with("d/dt B_t")), "{locs:?}");
    assert_eq!(ncnet(&["refactor", "--degree", "2"]).status.code(), Some(2));
}

#[test]
fn suite_is_deterministic() {
    let run = || {
        let (code, v) = json(&["suite", "--seed", "4"]);
        let mut v = v;
        for r in v.as_array_mut().unwrap() {
            r["wall_time_ms"] = Value::Null;
        }
        (code, v)
    };
    let (c1, a) = run();
    let (c2, b) = run();
    assert_eq!(a, b);
    assert_eq!((c1, c2), (1, 1));
    let failing: Vec<&str> =
        a.as_array().unwrap().iter().filter(|r| r["status"] != "pass").map(|r| r["command"].as_str().unwrap()).collect();
    assert_eq!(failing, vec!["refactor n=2 degree=6"]);
}

#[test]
fn fixture_directory_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_ncnet"))
        .args(["measure", "--network", "fig1"])
        .current_dir(std::env::temp_dir())
        .env("NCNET_FIXTURES", root().join("fixtures"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
