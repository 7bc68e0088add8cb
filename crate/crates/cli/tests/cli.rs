use std::process::{Command, Output};

use qhw_core::quantization::HopfDocument;

fn qhw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhw"))
        .args(args)
        .output()
        .expect("qhw runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classify_coboundary_point() {
    let o = qhw(&["classify", r#"{"a2":"-1","b3":"-1"}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("TYPE_II, coboundary, xi=1"));
}

#[test]
fn classify_trivial() {
    let o = qhw(&["classify", "{}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("TRIVIAL"));
}

#[test]
fn classify_invalid_reports_residual() {
    let o = qhw(&["classify", r#"{"a1":"1","a3":"1","b1":"1","b3":"2"}"#]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.starts_with("INVALID\n"), "{out}");
    assert!(out.contains("co-Jacobi residual 2: -2"), "{out}");
}

#[test]
fn malformed_input_exits_one() {
    for bad in [r#"{"a1":"1","d1":"0"}"#, r#"{"a1":"x"}"#, "{not json"] {
        let o = qhw(&["classify", bad]);
        assert_eq!(o.status.code(), Some(1), "{bad}");
        assert!(stderr(&o).starts_with("error:"), "{bad}");
    }
    let o = qhw(&["classify", "/nonexistent/input.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qhw(&["verify", "--family", "type3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qhw(&["verify", "--family", "type2", "--order", "0"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn classify_json_and_file_input() {
    let dir = std::env::temp_dir().join(format!("qhw-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta.json");
    std::fs::write(&path, r#"{"a1":"1","b1":"1"}"#).unwrap();
    let o = qhw(&[
        "classify",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "TYPE_I_PLUS");
    assert_eq!(v["summary"], "TYPE_I_PLUS, a1=1, a3=0");
    assert_eq!(v["coboundary"], false);
    assert_eq!(v["automorphism"], "A+' = A+ - A-");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn coboundary_unit_xi() {
    let o = qhw(&["coboundary", r#"{"xi":"1"}"#]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Schouten = -(M ^ A+ ^ A-)"), "{out}");
    assert!(out.contains("mCYBE: PASS"), "{out}");
}

#[test]
fn coboundary_symbolic() {
    let out = stdout(&qhw(&["coboundary"]));
    assert!(out.contains("Schouten = -xi^2*(M ^ A+ ^ A-)"), "{out}");
    assert!(out.contains("delta(A-) = -xi*(A- ^ M)"), "{out}");
    assert!(out.contains("delta(M) = 0"), "{out}");
}

#[test]
fn verify_type_ii_symbolic() {
    let o = qhw(&["verify", "--family", "type2", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for axiom in ["homomorphism", "coassociativity", "counit", "antipode"] {
        assert!(out.contains(&format!("{axiom}: PASS")), "{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_json_is_machine_readable() {
    let o = qhw(&[
        "verify",
        "--family",
        "TYPE_I_PLUS",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["family"], "type1plus");
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
}

#[test]
fn quantize_type_ii_coboundary_point() {
    let o = qhw(&["quantize", r#"{"a2":"-1","b3":"-1"}"#, "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("[A-,A+] = M - M^2 + (2/3)*M^3 - (1/3)*M^4"),
        "{out}"
    );
    assert!(out.contains("S(A-) = -A-*exp(M)"), "{out}");
}

#[test]
fn quantize_type_i_plus_symbolic_json() {
    let o = qhw(&["quantize", "--family", "type1plus", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let doc = HopfDocument::from_json(&text).unwrap();
    assert!(doc.coproduct.a_minus.contains("A- (x) exp(a1*A+)"));
    assert_eq!(doc.family, "TYPE_I_PLUS");
    assert_eq!(doc.to_json() + "\n", text);
}

#[test]
fn quantize_zero_is_undeformed() {
    let out = stdout(&qhw(&["quantize", "{}", "--order", "2"]));
    assert!(out.contains("[A-,A+] = M\n"), "{out}");
    assert!(out.contains("D(A-) = 1 (x) A- + A- (x) 1\n"), "{out}");
    assert!(out.contains("S(A+) = -A+\n"), "{out}");
}

#[test]
fn quantize_rejects_invalid_and_mismatched_family() {
    let o = qhw(&["quantize", r#"{"a1":"1","a3":"1","b1":"1","b3":"2"}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = qhw(&["quantize", r#"{"a2":"1"}"#, "--family", "type1plus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn poisson_homomorphism_type_i_plus() {
    let o = qhw(&[
        "poisson",
        "--check",
        "homomorphism",
        "--family",
        "type1plus",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("homomorphism: PASS"));
}

#[test]
fn poisson_flags_constraint_violation() {
    let o = qhw(&[
        "poisson",
        "--check",
        "jacobi",
        r#"{"a1":"1","a3":"1","b1":"1","b3":"2"}"#,
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("jacobi: FAIL"));
}

#[test]
fn poisson_group_composition() {
    let o = qhw(&[
        "poisson",
        "--check",
        "compose",
        r#"[["0","1","0"],["0","0","1"]]"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains(r#"product = ["-1","1","1"]"#), "{out}");
}

#[test]
fn realize_default() {
    let o = qhw(&["realize"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("C = M*exp(-(1/2)*a1*A+)"), "{out}");
    assert!(out.contains("C acts as lambda: PASS"), "{out}");
    let o = qhw(&["realize", "--family", "type2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "quantize", "--family", "type2", "--order", "3", "--format", "json",
    ];
    assert_eq!(qhw(&args).stdout, qhw(&args).stdout);
}
