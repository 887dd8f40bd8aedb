use std::process::{Command, Output};

use alcove::macdonald::{specialize, MacdonaldConfig, Specialization};
use alcove::rootdata::{build_affine_data, AffineType, Weight};
use alcove::weyl::AffineWeyl;
use alcove::xring::XPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["selftest"], "ok");
}

#[test]
fn flipped_orientation_fails_selftest() {
    let o = run(&["selftest", "--orientation", "flipped"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["macdonald"]).status.code(), Some(2));
}

#[test]
fn computation_errors_are_json() {
    let o = run(&["macdonald", "-r", "1", "--mu", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "rank_mismatch");
    let o = run(&["hecke", "-r", "1", "--word", "0,5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn macdonald_t0_round_trips() {
    let o = run(&["macdonald", "-t", "A", "-r", "1", "--mu", "-2", "--specialize", "t0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let got = XPoly::from_json(&v).unwrap();
    let g = AffineWeyl::new(build_affine_data(AffineType::A, 1).unwrap());
    let want = specialize(&g, &Weight::fin(vec![-2]), Specialization::T0, MacdonaldConfig::default()).unwrap();
    assert_eq!(got, want);
    assert_eq!(got.len(), 3);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["macdonald", "-r", "2", "--mu", "-1,-1"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let c = stdout(&run(&seq));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn level_zero_orbit_csv() {
    let o = run(&["orbit", "-t", "A", "-r", "1", "--weight", "0Λ+1ω", "--radius", "6", "--out", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("delta,omega1,level,word"));
    let rows: Vec<(i64, i64)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f[2], "0");
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    for k in -2..=2 {
        assert!(rows.contains(&(k, 1)) && rows.contains(&(k, -1)), "k = {k}");
    }
    assert!(rows.iter().all(|&(_, x)| x.abs() == 1));
}

#[test]
fn hecke_reports_crosscheck() {
    for basis in ["T", "X", "L"] {
        let o = run(&["hecke", "-r", "2", "--basis", basis, "--word", "0,1,2"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["crosscheck_ok"], true, "{basis}");
    }
}

#[test]
fn crystal_dot_and_quotient() {
    let o = run(&["crystal", "-r", "2", "--node", "1,2", "--window", "1", "--out", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"f~0\"") && dot.contains("color=red"));
    let o = run(&["crystal", "-r", "2", "--node", "1,2", "--window", "1", "--quotient"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 9);
    assert_eq!(v["period"], 1);
}

#[test]
fn characters_and_hasse() {
    let o = run(&["demazure-char", "-r", "1", "--weight", "1Λ", "--word", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["extremal-char", "-r", "1", "--weight", "1", "--delta-window", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["window"], 3);
    let o = run(&["hasse", "-r", "2", "--order", "zero", "--max-len", "3"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("alcove-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbit.csv");
    let o = run(&["orbit", "--weight", "1", "--radius", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("delta,"));
    std::fs::remove_dir_all(&dir).unwrap();
}
