use std::process::Command;

use serde_json::Value;
use zetagen::freealg::{parse_series, Alphabet};
use zetagen::export::{self, Object};

fn zetagen(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zetagen")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = zetagen(args);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn gw_weight_three() {
    let v = json(&["gw", "--weight", "3"]);
    let Object::Series(g) = export::from_str(&v["g"].to_string()).unwrap() else { panic!("not a series") };
    assert_eq!(g, parse_series("[x,[x,y]]+[[x,y],y]", Alphabet::XY).unwrap());
    assert_eq!(v["Z"], serde_json::json!([["z3", "12"]]));
    let phi = json(&["gw", "--weight", "3", "--method", "phi"]);
    assert_eq!(phi["g"], v["g"]);
}

#[test]
fn basis_dims_weight_eight() {
    let v = json(&["basis", "--weight", "8", "--dims"]);
    assert_eq!(v, serde_json::json!({"dim": 4, "singles": 1, "irreducibles": 1, "reducibles": 2}));
}

#[test]
fn rho_inputs_agree() {
    let a = json(&["rho", "--mzv", "3,5"]);
    let b = json(&["rho", "--expr", "z(3,5)"]);
    assert_eq!(a["rho"], b["rho"]);
}

#[test]
fn verification_commands() {
    assert_eq!(json(&["verify-n", "--w", "3", "--degree", "10"])["commutes"], true);
    assert_eq!(json(&["mould", "check-tw", "--w", "3", "--depth", "3"])["passed"], true);
    let v = json(&["zwbracket", "--w", "3", "--k", "4", "--maxdepth", "3"]);
    assert!(v["depths"]["2"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(zetagen(&["frobnicate"]).0, 2);
    assert_eq!(zetagen(&["gw"]).0, 2);
    assert_eq!(zetagen(&["basis", "--weight", "13"]).0, 2);
    assert_eq!(zetagen(&["sigma", "--w", "4", "--degree", "8"]).0, 2);
    assert_eq!(zetagen(&["mould", "pal", "--depth", "9"]).0, 2);
    assert_eq!(zetagen(&["rho", "--word", "yx"]).0, 2);
}

#[test]
fn files_round_trip_and_corrupt_files_fail() {
    let dir = std::env::temp_dir().join(format!("zetagen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sigma3.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = zetagen(&["sigma", "--w", "3", "--degree", "10", "--out", p]);
    assert_eq!(code, 0);
    let v = json(&["import", p]);
    assert_eq!(v["kind"], "derivation");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 3]).unwrap();
    let (code, _, err) = zetagen(&["import", p]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_output_is_deterministic() {
    let a = zetagen(&["--text", "sigma", "--w", "5", "--degree", "8", "--eps"]);
    let b = zetagen(&["--text", "sigma", "--w", "5", "--degree", "8", "--eps"]);
    assert_eq!(a, b);
    assert!(a.1.contains("ε6^(4)"));
}
