//! End-to-end checks of the command-line surface: dispatch, JSON shapes,
//! exit codes, and output determinism.

use invcurve::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (String, i32) {
    run(args.iter().map(|s| s.to_string()))
}

#[test]
fn decide_nonsingular_json_shape() {
    let (out, code) = call(&["decide", "nonsingular", "--group", "V", "--degree", "48", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exists"], serde_json::Value::Bool(false));
    assert_eq!(v["failed_conditions"], serde_json::json!([4]));
    assert!(v["basis"].as_array().unwrap().contains(&serde_json::json!([1, 1, 1])));
}

#[test]
fn unknown_group_is_a_usage_error() {
    let (_, code) = call(&["decide", "nonsingular", "--group", "Z", "--degree", "6"]);
    assert_eq!(code, EXIT_USAGE);
    let (_, code) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn molien_json_is_the_poincare_expansion() {
    let (out, code) = call(&["molien", "--group", "K", "--max", "20", "--json"]);
    assert_eq!(code, EXIT_OK);
    let coeffs: Vec<i64> = serde_json::from_str(&out).unwrap();
    assert_eq!(
        coeffs,
        vec![1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 0, 3]
    );
    // the closed form agrees without building the group
    let (closed, _) = call(&["molien", "--group", "K", "--max", "20", "--closed-form", "--json"]);
    assert_eq!(out, closed);
}

#[test]
fn classify_json_shape() {
    let (out, code) = call(&["classify", "--group", "K", "--degree", "30", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["type"], "D5_family");
    assert_eq!(v["m"], 2);
    assert_eq!(v["locus"], "V(F)∩V(Phi)");
    assert_eq!(v["count"], 24);
}

#[test]
fn verify_klein_passes_and_is_deterministic() {
    let args = ["verify", "--group", "K", "--json"];
    let (out1, code1) = call(&args);
    let (out2, code2) = call(&args);
    assert_eq!(code1, EXIT_OK);
    assert_eq!(code2, EXIT_OK);
    assert_eq!(out1, out2, "identical invocations must emit identical JSON");
    let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["status"], "pass", "check {:?}", check["name"]);
    }
}

#[test]
fn verify_icosahedral_wiman_includes_the_jacobian_constant() {
    let (out, code) = call(&["verify", "--group", "I", "--coords", "wiman"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("jacobian-at-(1,0,0) = 7290: pass"));
}

#[test]
fn valentiner_deep_checks_report_inconclusive_without_deep() {
    let (out, code) = call(&["verify", "--group", "V", "--json"]);
    assert_eq!(code, EXIT_OK, "inconclusive must not fail by default");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let statuses: Vec<(String, String)> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["name"].as_str().unwrap().to_string(),
                c["status"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert!(statuses.contains(&("wiman-coefficients".into(), "pass".into())));
    assert!(statuses.contains(&("zero-locus".into(), "inconclusive".into())));
    assert!(statuses.contains(&("nonsingular-Psi".into(), "inconclusive".into())));
    assert!(statuses.contains(&("nonsingular-F".into(), "pass".into())));
    assert!(statuses.contains(&("transversal".into(), "pass".into())));

    // strict mode turns the inconclusive outcome into a failing exit
    let (_, strict_code) = call(&["verify", "--group", "V", "--strict"]);
    assert_eq!(strict_code, EXIT_CHECK_FAILED);
}

#[test]
fn klein_has_no_wiman_frame() {
    let (_, code) = call(&["verify", "--group", "K", "--coords", "wiman"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn deep_flag_runs_the_gated_checks_with_a_bounded_budget() {
    // a tiny explicit budget keeps this quick: the deep checks now run
    // and exhaust the budget instead of being skipped
    let (out, code) = call(&[
        "verify", "--group", "V", "--deep", "--budget", "50", "--checks", "zero-locus", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"][0]["status"], "inconclusive");
    assert!(v["checks"][0]["detail"]
        .as_str()
        .unwrap()
        .contains("budget"));
}

#[test]
fn molien_threads_do_not_change_the_output() {
    let (one, _) = call(&["molien", "--group", "I", "--max", "30", "--threads", "1", "--json"]);
    let (four, _) = call(&["molien", "--group", "I", "--max", "30", "--threads", "4", "--json"]);
    assert_eq!(one, four);
}

#[test]
fn budget_env_var_is_honored() {
    std::env::set_var("INVCURVE_BUDGET", "2");
    let (out, code) = call(&["verify", "--group", "K", "--checks", "zero-locus", "--json"]);
    std::env::remove_var("INVCURVE_BUDGET");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"][0]["status"], "inconclusive");
}

#[test]
fn build_invariants_roundtrip() {
    let dir = std::env::temp_dir().join("invcurve-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("klein.json");
    let (_, code) = call(&[
        "build-invariants",
        "--group",
        "K",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([4, 6, 14, 21]));
    assert_eq!(v["field"], "zeta7");
    // F_K = x³y + y³z + z³x: the x³y coefficient is 1 in a degree-6 field
    let coeff = &v["F"]["3,1,0"];
    assert_eq!(coeff[0], serde_json::json!(["1", "1"]));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn table_output_lists_admissible_degrees() {
    let (out, code) = call(&["table", "nonsingular", "--group", "K", "--max", "100"]);
    assert_eq!(code, EXIT_OK);
    for d in ["4", "6", "14", "18", "20", "28"] {
        assert!(out.contains(d), "missing degree {}", d);
    }
    let (json_out, _) = call(&["table", "integral", "--group", "V", "--max", "60", "--json"]);
    let degs: Vec<u32> = serde_json::from_str(&json_out).unwrap();
    assert_eq!(degs, vec![6, 12, 30, 36, 42, 48, 54, 60]);
}
