use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leonard"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn stderr_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is JSON")
}

const KR3_ARGS: &[&str] = &[
    "gen", "--family", "krawtchouk", "--d", "3", "--param", "s=-2", "--param", "sstar=-2", "--param", "r=2", "--param",
    "theta0=3", "--param", "thetastar0=3", "--field", "Q",
];

fn kr3_json() -> Value {
    json!({
        "field": {"kind": "Q"},
        "d": 3,
        "theta": ["3", "1", "-1", "-3"],
        "theta_star": ["3", "1", "-1", "-3"],
        "varphi": ["-6", "-8", "-6"],
        "phi": ["6", "8", "6"],
    })
}

fn write_temp(v: &Value) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{v}").unwrap();
    f
}

#[test]
fn gen_krawtchouk_matches_fixture() {
    let o = run(KR3_ARGS);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o), kr3_json());
}

#[test]
fn verify_fixture_passes() {
    let f = write_temp(&kr3_json());
    let o = run(&["verify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rep = stdout_json(&o);
    let checks = rep["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == json!(true)));
}

#[test]
fn validate_reports_vanishing_split_entry() {
    let mut broken = kr3_json();
    broken["varphi"][1] = json!("0");
    let f = write_temp(&broken);
    let o = run(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["valid"], json!(false));
    let pa2: Vec<&Value> = v["violations"].as_array().unwrap().iter().filter(|x| x["rule"] == json!("PA2")).collect();
    assert_eq!(pa2.len(), 1);
    assert_eq!(pa2[0]["i"], json!(2));
    assert_eq!(pa2[0]["sequence"], json!("varphi"));
}

#[test]
fn verify_invalid_array_exits_one() {
    let mut broken = kr3_json();
    broken["phi"][1] = json!("7");
    let o = run(&["verify", &broken.to_string()]);
    assert_eq!(o.status.code(), Some(1));
    let rep = stdout_json(&o);
    let failed: Vec<&str> =
        rep["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == json!(false)).map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, ["pa.pa4"]);
}

/// One admissible parameter choice per family.
fn family_cases() -> Vec<(&'static str, usize, &'static str, Vec<&'static str>)> {
    vec![
        ("q_racah", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "s=1", "sstar=1", "r1=16", "r2=1"]),
        ("q_hahn", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "sstar=3", "r=5"]),
        ("dual_q_hahn", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "s=3", "r=5"]),
        ("quantum_q_krawtchouk", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "hstar=1", "s=3", "r=5"]),
        ("q_krawtchouk", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "sstar=3"]),
        ("affine_q_krawtchouk", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "r=3"]),
        ("dual_q_krawtchouk", 3, "Q", vec!["theta0=0", "thetastar0=0", "q=2", "h=1", "hstar=1", "s=3"]),
        ("racah", 3, "Q", vec!["theta0=0", "thetastar0=0", "h=1", "hstar=1", "s=1", "sstar=1", "r1=1/2", "r2=11/2"]),
        ("hahn", 3, "Q", vec!["theta0=0", "thetastar0=0", "hstar=1", "s=2", "sstar=1", "r=1/2"]),
        ("dual_hahn", 3, "Q", vec!["theta0=0", "thetastar0=0", "h=1", "s=1", "sstar=2", "r=1/2"]),
        ("krawtchouk", 3, "GF(7)", vec!["theta0=0", "thetastar0=0", "s=1", "sstar=1", "r=2"]),
        ("bannai_ito", 4, "Q", vec!["theta0=1", "thetastar0=0", "h=1", "hstar=2", "s=3", "sstar=-1", "r1=0", "r2=3"]),
        ("orphan", 3, "GF(4)", vec!["theta0=0", "thetastar0=0", "h=1", "hstar=1", "s=2", "sstar=2", "r=2"]),
    ]
}

#[test]
fn gen_then_classify_recovers_every_family() {
    let cases = family_cases();
    assert_eq!(cases.len(), 13);
    for (family, d, field, params) in cases {
        let d = d.to_string();
        let mut args = vec!["gen", "--family", family, "--d", &d, "--field", field];
        for p in &params {
            args.extend(["--param", p]);
        }
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{family}: {}", String::from_utf8_lossy(&o.stderr));
        let c = run_stdin(&["classify", "-"], std::str::from_utf8(&o.stdout).unwrap());
        assert_eq!(c.status.code(), Some(0), "{family}");
        let v = stdout_json(&c);
        let found: Vec<&str> = v["matches"].as_array().unwrap().iter().map(|m| m["family"].as_str().unwrap()).collect();
        assert!(found.contains(&family), "{family}: {found:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let pa = kr3_json().to_string();
    for verb in [vec!["verify"], vec!["classify"], vec!["orbit"], vec!["ix"], vec!["aw"], vec!["table", "--what", "u"]] {
        let mut args = verb.clone();
        args.push(&pa);
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{verb:?}");
        assert_eq!(a.stdout, b.stdout, "{verb:?}");
    }
}

#[test]
fn inputs_are_not_modified() {
    let f = write_temp(&kr3_json());
    let before = std::fs::read(f.path()).unwrap();
    for verb in ["validate", "verify", "classify", "orbit", "ix", "aw"] {
        run(&[verb, f.path().to_str().unwrap()]);
    }
    assert_eq!(std::fs::read(f.path()).unwrap(), before);
}

#[test]
fn matrices_and_tables() {
    let pa = kr3_json().to_string();
    let o = run(&["realize", &pa, "--basis", "standard"]);
    let v = stdout_json(&o);
    assert_eq!(v["basis"], json!("standard"));
    assert_eq!(v["A"][0], json!(["0", "3", "0", "0"]));
    assert_eq!(v["Astar"][3], json!(["0", "0", "0", "-3"]));
    let p = stdout_json(&run(&["table", &pa, "--what", "P"]));
    assert_eq!(p[3], json!(["1", "-3", "3", "-1"]));
    let u = stdout_json(&run(&["table", &pa, "--what", "u"]));
    assert_eq!(u[1][1], json!("1/3"));
    let g = stdout_json(&run(&["table", &pa, "--what", "gram"]));
    assert_eq!(g[1][1], json!("3/8"));
    let aw = stdout_json(&run(&["aw", &pa]));
    assert_eq!((aw["beta"].clone(), aw["rho"].clone()), (json!("2"), json!("4")));
    let ix = stdout_json(&run(&["ix", &pa]));
    assert_eq!((ix[0][1][1].clone(), ix[1][1][1].clone(), ix[2][1][1].clone()), (json!("3"), json!("0"), json!("2")));
    let orbit = stdout_json(&run(&["orbit", &pa]));
    assert!(!orbit.as_array().unwrap().is_empty());
}

#[test]
fn usage_and_input_errors_exit_two() {
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert_eq!(stderr_json(&unknown)["error"]["kind"], json!("usage"));

    let flag = run(&["verify", "--nope", "x.json"]);
    assert_eq!(flag.status.code(), Some(2));

    let missing = run(&["verify", "/nonexistent/leonard/input.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());

    let malformed = run_stdin(&["verify", "-"], "{\"field\":");
    assert_eq!(malformed.status.code(), Some(2));
    assert_eq!(stderr_json(&malformed)["error"]["kind"], json!("malformed_json"));

    let mut gen = KR3_ARGS.to_vec();
    *gen.last_mut().unwrap() = "GF(9)";
    let bad_field = run(&gen);
    assert_eq!(bad_field.status.code(), Some(2));
    assert_eq!(stderr_json(&bad_field)["error"]["kind"], json!("invalid_field"));

    *gen.last_mut().unwrap() = "GF(3)";
    let small_char = run(&gen);
    assert_eq!(small_char.status.code(), Some(2));
    assert_eq!(stderr_json(&small_char)["error"]["kind"], json!("precondition"));
}

#[test]
fn realize_rejects_invalid_array() {
    let mut broken = kr3_json();
    broken["varphi"][0] = json!("5");
    let o = run(&["realize", &broken.to_string(), "--basis", "monic"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr_json(&o)["error"]["kind"], json!("invalid_array"));
}
