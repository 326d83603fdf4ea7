//! End-to-end checks of the `ostiefel` binary: JSON in, JSON out, and the
//! documented exit codes (0 ok, 1 verification/domain failure, 2 parse/usage).

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ostiefel"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("ostiefel-cli-{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn json_stdout(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout must be JSON")
}

#[test]
fn classify_critical_frame_with_certificate() {
    let b4 = ostiefel::witness::b4();
    let path = write_temp("b4.json", &serde_json::to_string(&b4).unwrap());
    let out = bin().arg("classify").arg(&path).output().unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["classification"], "critical");
    assert_eq!(v["vA_dim"], 80);
    assert_eq!(v["expected_regular_dim"], 76);
    assert_eq!(v["advisory"], false);
    assert!(
        v["certificate"].is_object(),
        "critical points carry a certificate"
    );
}

#[test]
fn classify_identity_frame_regular() {
    let i4 = ostiefel::frames::OctFrame::<ostiefel::QSqrt2>::identity(4, 4);
    let path = write_temp("i4.json", &serde_json::to_string(&i4).unwrap());
    let out = bin().arg("classify").arg(&path).output().unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["classification"], "regular");
    assert_eq!(v["vA_dim"], 76);
    assert!(v["certificate"].is_null());
}

#[test]
fn classify_rejects_non_frames_with_exit_1() {
    let junk = r#"{"k":1,"n":1,"entries":[["2","0","0","0","0","0","0","0"]]}"#;
    let path = write_temp("junk.json", junk);
    let out = bin().arg("classify").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_json_exits_2() {
    let path = write_temp("bad.json", "{this is not json");
    let out = bin().arg("classify").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_2() {
    let out = bin().arg("verify").arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_octonion_suite_passes() {
    let out = bin().arg("verify").arg("octonion").output().unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["suite"], "octonion");
    let items = v["items"].as_array().unwrap();
    assert!(!items.is_empty());
    assert!(items.iter().all(|i| i["status"] != "FAIL"));
}

#[test]
fn verify_markdown_format() {
    let out = bin()
        .args(["verify", "octonion", "--format", "markdown"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("| id | status |"));
    assert!(text.contains("0 failures"));
}

#[test]
fn member_checks_the_given_system() {
    let w = ostiefel::witness::omega84_witness();
    let path = write_temp("omega84.json", &serde_json::to_string(&w).unwrap());
    let out = bin()
        .args(["member"])
        .arg(&path)
        .args(["--l", "8", "--m", "4", "--family", "indefinite:1"])
        .output()
        .unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["member"], true);
    // the same triple is not a member of the definite space
    let out = bin()
        .args(["member"])
        .arg(&path)
        .args(["--l", "8", "--m", "4", "--family", "definite"])
        .output()
        .unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["member"], false);
}

#[test]
fn sample_is_deterministic_and_member() {
    let run = || {
        let out = bin()
            .args([
                "sample", "--l", "12", "--m", "4", "--family", "definite", "--seed", "9",
            ])
            .output()
            .unwrap();
        json_stdout(&out)
    };
    let first = run();
    let second = run();
    assert_eq!(
        first, second,
        "same seed must reproduce the point byte-identically"
    );
    // feed the sample back through `member` in float mode
    let path = write_temp("sampled.json", &first.to_string());
    let out = bin()
        .args(["member"])
        .arg(&path)
        .args([
            "--l", "12", "--m", "4", "--family", "definite", "--mode", "float",
        ])
        .output()
        .unwrap();
    assert_eq!(json_stdout(&out)["member"], true);
}

#[test]
fn lift_roundtrips_through_files() {
    let lift_input = r#"{"c":[["0","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"],["1","0","0","0","0","0","0","0"]]}"#;
    let path = write_temp("lift.json", lift_input);
    let out = bin().arg("lift").arg(&path).output().unwrap();
    let v = json_stdout(&out);
    let c = v["c"].as_array().unwrap();
    assert_eq!(c.len(), 24);
    assert_eq!(c[16], "1");
}

#[test]
fn fiber_dimension_of_identity() {
    let z0 = ostiefel::frames::OctFrame::<ostiefel::QSqrt2>::identity(2, 3);
    let path = write_temp("z0.json", &serde_json::to_string(&z0).unwrap());
    let out = bin().arg("fiber").arg(&path).output().unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["kernel_dim"], 8);
    assert_eq!(v["fiber_sphere_dim"], 7);
}

#[test]
fn spectrum_json_shape() {
    let out = bin().args(["spectrum", "--n", "3"]).output().unwrap();
    let v = json_stdout(&out);
    assert_eq!(v["austere"], false);
    let spectrum = v["spectrum"].as_array().unwrap();
    assert_eq!(spectrum.len(), 3);
    assert_eq!(spectrum[0]["eigenvalue"], "-1/√6");
    assert_eq!(spectrum[0]["multiplicity"], 10);
    let minimality = v["minimality"].as_array().unwrap();
    assert_eq!(minimality.len(), 14);
    assert!(minimality.iter().all(|i| i["zero"] == true));
}

#[test]
fn curve_subcommand_evaluates() {
    // degenerate m=3 base pair (E1 c, E2 c) with c = (1,0,…)
    let sys = ostiefel::build_system::<f64>(3, 2, ostiefel::Family::NotApplicable).unwrap();
    let mut c = vec![0.0; 8];
    c[0] = 1.0;
    let a = sys.apply(1, &c);
    let b = sys.apply(2, &c);
    let base = serde_json::json!({"a": a, "b": b});
    let path = write_temp("curve.json", &base.to_string());
    let out = bin()
        .args(["curve"])
        .arg(&path)
        .args([
            "--kind",
            "pair-boundary",
            "--t",
            "0.5",
            "--l",
            "8",
            "--m",
            "3",
        ])
        .output()
        .unwrap();
    let v = json_stdout(&out);
    assert!(v["a"].is_array() && v["b"].is_array());
    // bad kind is a usage error
    let out = bin()
        .args(["curve"])
        .arg(&path)
        .args(["--kind", "zigzag", "--t", "0.5", "--l", "8", "--m", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
