use std::io::Write;
use std::process::{Command, Output};

use gdgap_cli::format_config;
use gdgap_core::fuzz::{trial_config, Bounds};

const EXAMPLE1: &str = "# Heronian base\nx = 0, 0\ny = 154, 0\nz = 55, 132\nc = 90, 48\nr = 10\n";
const EXAMPLE2: &str = "field = quadext 3\nx = -1, 0\ny = 1, 0\nz = 0, sqrt(3)\nc = 0, 1/3*sqrt(3)\nr = 1/2\n";

fn example3(r: &str) -> String {
    format!("field = quadext 2\nx = -sqrt(2), -1\ny = sqrt(2), -1\nz = 0, 1\nc = 0, 0\nr = {r}\n")
}

fn gdgap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdgap")).args(args).output().unwrap()
}

fn with_config(cmd: &str, text: &str, extra: &[&str]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let mut args = vec![cmd, path.as_str()];
    args.extend_from_slice(extra);
    gdgap(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn construct_example1() {
    let o = with_config("construct", EXAMPLE1, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("w = 215490/2309, 339416/6927, 49280/2309\n"));
}

#[test]
fn construct_rejects_bad_inputs() {
    let o = with_config("construct", &example3("1/2*sqrt(2)"), &[]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("prism"));

    let o = with_config("construct", &example3("1"), &[]);
    assert_eq!(o.status.code(), Some(3));

    let o = with_config("construct", "x = 0, 0\ny = 0, 1\nz = 1, 0\nc = 1/4, 1/4\nr = 1/8\n", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("swap two vertices"));

    let o = with_config("construct", "x = 0, 0\ny = 1, 0\nz = 0, 1\nc = 1, 1\nr = 1/8\n", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("tangent point not interior: a_x <= 0"));

    let o = gdgap(&["construct", "/nonexistent/config"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gap_examples() {
    let o = with_config("gap", EXAMPLE1, &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("gap = 198873308525/145467\n"));
    assert!(out.contains("equality = false\n"));

    let o = with_config("gap", EXAMPLE2, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gap = 0\n"));
    assert!(stdout(&o).contains("equality = true\n"));

    let o = with_config("gap", &example3("1/3"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gap = 7/81\n"));
}

#[test]
fn gap_json_and_approx() {
    let o = with_config("gap", EXAMPLE1, &["--json", "--approx"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["v_1"], "-7868399616");
    assert_eq!(v["lhs = rhs"], "true");
    assert!(v["gap_approx"].as_str().unwrap().starts_with('~'));
}

#[test]
fn examples_match() {
    for n in ["1", "2", "3"] {
        let o = gdgap(&["example", n]);
        assert_eq!(o.status.code(), Some(0), "example {n}: {}", stderr(&o));
        assert!(stdout(&o).contains("all match = true"));
    }
    assert_eq!(gdgap(&["example", "4"]).status.code(), Some(2));
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--trials", "30", "--seed", "42"];
    let a = gdgap(&args);
    let b = gdgap(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("summary = 30/30 ok"));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(gdgap(&["fuzz", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn fuzz_trial_replays_through_config() {
    let cfg = trial_config(42, 3, Bounds::default()).unwrap().cfg;
    let text = format_config(&cfg);
    let a = with_config("gap", &text, &[]);
    let b = with_config("gap", &text, &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn planar() {
    let o = gdgap(&["planar", "--p", "2/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("r_crit^2 = 6/25\n"));
    assert!(stdout(&o).contains("r_crit = 1/5*sqrt(6)\n"));
    assert_eq!(gdgap(&["planar", "--p", "3/2"]).status.code(), Some(2));
    assert_eq!(gdgap(&["planar", "--p", "sqrt(2)"]).status.code(), Some(2));
}

#[test]
fn equilateral() {
    let o = gdgap(&["equilateral", "--l2", "4", "--r", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("G = 0\n"));
    assert!(out.contains("regime = r_reg < r < r_crit\n"));
    assert!(out.contains("w_3 = 4\n"));

    let o = gdgap(&["equilateral", "--l2", "4", "--r", "1/4"]);
    assert!(stdout(&o).contains("regime = r < r_reg\n"));
    let o = gdgap(&["equilateral", "--l2", "24", "--r", "1"]);
    assert!(stdout(&o).contains("regime = r = r_reg\n"));
    let o = gdgap(&["equilateral", "--l2", "4", "--r", "11/20"]);
    assert!(stdout(&o).contains("G = 0\n"));

    assert_eq!(gdgap(&["equilateral", "--l2", "4", "--r", "3/5"]).status.code(), Some(3));
    assert_eq!(gdgap(&["equilateral", "--l2", "-4", "--r", "1/2"]).status.code(), Some(2));
}

#[test]
fn pech() {
    let o = gdgap(&["pech", "--sides", "3,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P = 12\n"));
    assert!(stdout(&o).contains("r = 1\n"));

    let o = gdgap(&["pech", "--sides", "2,2,2", "--quadext", "3"]);
    assert!(stdout(&o).contains("R = 2r = true\n"));

    let o = gdgap(&["pech", "--trials", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary = 5/5 ok"));

    assert_eq!(gdgap(&["pech", "--sides", "1,2,3"]).status.code(), Some(2));
}
