use std::process::{Command, Output};

fn conchoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conchoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn transform_prints_the_quartic() {
    let o = conchoid(&["transform", "--B", "x^2+y^2-z^2", "--C", "x-2*z"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x^4-4*x^3*z+x^2*y^2+3*x^2*z^2-4*x*y^2*z+4*y^2*z^2");
    let affine = conchoid(&["transform", "--affine", "--B", "x^2+y^2-1", "--C", "x-2"]);
    assert_eq!(stdout(&affine), stdout(&o));
}

#[test]
fn proper_transform_is_json() {
    let o = conchoid(&["transform", "--B", "x^2+y^2-z^2", "--C", "x", "--proper"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let comps = v["components"].as_array().unwrap();
    let find = |label: &str| comps.iter().find(|c| c["label"] == label).map(|c| c["mult"].as_u64().unwrap());
    assert_eq!(find("input"), Some(2));
    assert_eq!(find("base"), Some(1));
}

#[test]
fn genus_of_a_circle_and_a_line() {
    let o = conchoid(&["genus", "--d", "2", "--delta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "degree 4, genus 0");
}

#[test]
fn exit_codes() {
    // irreducible proper conchoid
    let o = conchoid(&["split", "--C", "1/25*x^2+1/9*y^2-z^2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = conchoid(&["split", "--C", "1/25*x^2+1/9*y^2-z^2", "--center", "4,0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = conchoid(&["focus", "--C", "(y+z)^2-x^2-y^2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = conchoid(&["focus", "--C", "1/25*x^2+1/9*y^2-z^2", "--center", "0,1"]);
    assert_eq!(o.status.code(), Some(1));
    // usage errors
    assert_eq!(conchoid(&["transform", "--B", "x^2+", "--C", "x"]).status.code(), Some(2));
    assert_eq!(conchoid(&["transform", "--B", "x^2+y^2-1", "--C", "x"]).status.code(), Some(2));
    assert_eq!(conchoid(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(conchoid(&["split", "--C", "x", "--center", "1"]).status.code(), Some(2));
    let o = conchoid(&["recognize", "--D", "x^2+y^2-z^2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn syntax_errors_report_the_offset() {
    let o = conchoid(&["transform", "--B", "x^2+", "--C", "x"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("offset 4"), "{err}");
}

#[test]
fn recognition_round_trip() {
    let o = conchoid(&[
        "recognize",
        "--json",
        "--D",
        "x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2+4*y^2*z^2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["candidates"][0]["witness"], "x-2*z");
    assert_eq!(v["candidates"][0]["r2"], "1");
}

#[test]
fn iterate_and_eliminate() {
    let o = conchoid(&["iterate", "--json", "--C", "x-3*z"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 16);
    let o = conchoid(&["eliminate", "--B", "x^2+y^2-z^2", "--C", "x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x^3+x*y^2-x");
}

#[test]
fn verify_suite_passes_for_generic_input() {
    let o = conchoid(&["verify", "--B", "x^2+y^2-z^2", "--C", "x^2-3*x*y+2*y*z-5*z^2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn plot_is_deterministic() {
    let args = ["plot", "--curve", "x^2+y^2-z^2", "--window=-2,2,-2,2", "--grid", "64"];
    let a = conchoid(&args);
    let b = conchoid(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("<path"));
    let bad = conchoid(&["plot", "--curve", "x", "--window=1,1,0,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn gaussian_field() {
    let o = conchoid(&["transform", "--field", "Qi", "--B", "x^2+y^2-z^2", "--C", "x+i*y-z"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains('i'));
    let o = conchoid(&["transform", "--B", "x^2+y^2-z^2", "--C", "x+i*y-z"]);
    assert_eq!(o.status.code(), Some(2));
}
