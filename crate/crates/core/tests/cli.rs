//! Golden tests for the `ordwalk` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(rel).display().to_string()
}

fn ordwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordwalk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = ordwalk(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn walk_five_to_three() {
    let o = ordwalk(&["walk", "5", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "walk 5 -> 3\nupper: 5, 4\nlower: {}\nrho0: 2\nweights: e_{4}(3)=0, e_{5}(3)=0\nosc: 0\no: z_{3}^1\n"
    );
}

#[test]
fn walk_omega_to_three_json() {
    let v = json_of(&["walk", "w", "3"]);
    let one = json!([[[], 1]]);
    assert_eq!(v["upper"], json!([[[one, 1]]]));
    assert_eq!(v["lower"], json!([[[[], 2]]]));
    assert_eq!(v["rho0"], 1);
    assert_eq!(v["weights"], json!({"w": 2}));
    assert_eq!(v["osc"], 0);
    assert_eq!(v["o"], json!({"base": "3", "exp": 1}));
}

#[test]
fn walk_to_itself_is_empty() {
    let v = json_of(&["walk", "w^2+1", "w^2+1"]);
    assert_eq!((v["upper"].clone(), v["lower"].clone(), v["rho0"].clone()), (json!([]), json!([]), json!(0)));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["cohen", "generic", "--targets", "w:0,w:4,w^2:1,w*2:3", "--seed", "9", "--format", "json"];
    assert_eq!(stdout(&ordwalk(&args)), stdout(&ordwalk(&args)));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "nope"],
        vec!["walk", "3", "5"],
        vec!["walk", "w+w", "1"],
        vec!["walk", "1"],
        vec!["--provider", "bogus", "walk", "1", "0"],
        vec!["--sample", "below:w^2:", "verify", "facts"],
        vec!["cohen", "extend", "--alpha", "w+1"],
        vec!["cohen", "modify", "--alpha", "w", "--format", "dot"],
    ] {
        assert_eq!(ordwalk(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_sample_reports_position() {
    let o = ordwalk(&["tree", "--builders", "w", "--sample", "list:1,w+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte 9"));
}

#[test]
fn verify_passes_and_injected_pin_fails() {
    let dir = tempfile::tempdir().unwrap();
    let pins = dir.path().join("pins.json");
    let pins = pins.to_str().unwrap();
    let sample = "below:w^2:3";
    let o = ordwalk(&["verify", "weights", "--sample", sample, "--pins", pins]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(pins).unwrap().replace(r#""e_w(3)": 2"#, r#""e_w(3)": 5"#);
    std::fs::write(pins, text).unwrap();
    let o = ordwalk(&["verify", "weights", "--sample", sample, "--pins", pins]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pin e_w(3) = 2 [MISMATCH]"));
}

#[test]
fn verify_report_shape() {
    let v = json_of(&["verify", "facts", "--sample", "below:w*3:3"]);
    assert_eq!(v["suite"], "facts");
    assert_eq!(v["passed"], true);
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"], json!([]));
    assert!(v["pins"].as_array().unwrap().iter().all(|p| p["matched"] == true));
}

#[test]
fn tree_iso_and_dot() {
    let v = json_of(&["tree", "--builders", "w,w*2,w^2", "--heights", "3,w", "--sample", "list:0,1,2,w+1", "--iso"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(v["iso"]["outcome"], "pass");
    assert_eq!(v["verdicts"][0][0]["kind"], "sampled_equal");
    let o = ordwalk(&["tree", "--builders", "w", "--heights", "1,2,3", "--format", "dot", "--sample", "list:0,1,2"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph fragment {"));
    assert!(dot.contains("n0 -> n1;") && dot.contains("n1 -> n2;"));
}

#[test]
fn cohen_extend_on_empty_condition() {
    assert_eq!(json_of(&["cohen", "extend", "--alpha", "w"]), json!({"positions": {"1": [4]}}));
    let o = ordwalk(&["cohen", "extend", "--alpha", "w^2", "--n", "2", "--condition", r#"{"positions":{"5":[]}}"#]);
    assert_eq!(stdout(&o), "p:\n  5: {} = {}\n  6: {632} = {w*7+1}\n");
}

#[test]
fn cohen_density_check_sets_status() {
    let cond = r#"{"positions":{"1":[4]}}"#;
    let member = ordwalk(&["cohen", "density-check", "--alpha", "w", "--n", "0", "--condition", cond]);
    assert_eq!(member.status.code(), Some(0));
    let outside = ordwalk(&["cohen", "density-check", "--alpha", "w", "--n", "1", "--condition", cond]);
    assert_eq!(outside.status.code(), Some(1));
}

#[test]
fn cohen_modify_with_empty_real_prints_base_ladder() {
    let o = ordwalk(&["cohen", "modify", "--alpha", "w*2", "--count", "3"]);
    assert!(stdout(&o).starts_with("C^x_{w*2}: w+1, w+2, w+3, ...\nzeta: 0\n"));
}

#[test]
fn cohen_scenarios_from_the_repository() {
    for name in ["square-into-double-square", "triple-omega-into-square", "square-double-into-cube", "omega-omega-into-double"] {
        let file = data(&format!("scenarios/{name}.json"));
        let o = ordwalk(&["cohen", "scenario", &file]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
        let m = ordwalk(&["cohen", "scenario", &file, "--mutate"]);
        assert_eq!(m.status.code(), Some(1), "{name}");
    }
}

#[test]
fn override_provider_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("walk.txt");
    let provider = format!("override:{}", data("overrides/oscillating.json"));
    let o = ordwalk(&["walk", "w^2", "w*2", "--provider", &provider, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("lower: w+1, w+7\n") && text.contains("osc: 1\n") && text.contains("o: z_{w*2}^2\n"));
}
