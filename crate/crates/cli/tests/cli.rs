use std::process::{Command, Output};

use serde_json::Value;

fn witten(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_witten"))
        .args(args)
        .env_remove("WITTEN_TERM_BUDGET")
        .output()
        .expect("run witten")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn re(v: &Value) -> f64 {
    v["value"]["re"].as_f64().unwrap()
}

#[test]
fn series_tables() {
    let out = witten(&["series", "--max", "30"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(
        rows,
        ["1,1", "4,3", "9,3", "12,3", "16,3", "24,6", "25,3", "27,1"]
    );
    assert_eq!(stdout(&witten(&["series", "--max", "1"])), "N,r\n1,1\n");
    assert_eq!(stdout(&witten(&["series", "--max", "3"])), "N,r\n1,1\n");
}

#[test]
fn series_json_format() {
    let v = json(&witten(&["series", "--max", "9", "--format", "json"]));
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[1]["N"], 4);
    assert_eq!(v[1]["r"], 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["series", "--max", "5000"][..],
        &["lfun", "--theta", "pi/3", "--s", "0.5+2i"],
        &["verify", "--only", "cubic,s3"],
    ] {
        let a = witten(args);
        let b = witten(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn lfun_endpoints() {
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    let v = json(&witten(&["lfun", "--theta", "0", "--s", "2"]));
    assert!((re(&v) - zeta2).abs() < 1e-12);
    let v = json(&witten(&["lfun", "--theta", "pi", "--s", "2"]));
    assert!((re(&v) - zeta2 / 2.0).abs() < 1e-12);
    let v = json(&witten(&["lfun", "--theta", "pi/2", "--s", "0"]));
    assert!((re(&v) - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
}

#[test]
fn floats_have_seventeen_significant_digits() {
    let text = stdout(&witten(&["zeta", "--s", "2"]));
    let line = text.lines().find(|l| l.contains("\"re\"")).unwrap();
    let number = line.split(':').nth(1).unwrap().trim().trim_end_matches(',');
    let mantissa = number.split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{number}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        witten(&["lfun", "--theta", "0", "--s", "0.5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(witten(&["zeta", "--s", "1"]).status.code(), Some(3));
    assert_eq!(witten(&["zeta", "--s", "two"]).status.code(), Some(2));
    assert_eq!(
        witten(&["lfun", "--theta", "4", "--s", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        witten(&["zeta", "--s", "2", "--tol", "1e-30"])
            .status
            .code(),
        Some(5)
    );
    assert_eq!(
        witten(&["verify", "--only", "nonsense"]).status.code(),
        Some(2)
    );

    let out = Command::new(env!("CARGO_BIN_EXE_witten"))
        .args(["series", "--max", "1000"])
        .env("WITTEN_TERM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_witten"))
        .args(["zeta", "--s", "2"])
        .env("WITTEN_TERM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn coeff_and_s3() {
    let v = json(&witten(&["coeff", "--n", "2,2,3"]));
    assert_eq!(v["closed"], 1);
    assert_eq!(v["lattice"], serde_json::json!([1, 1, 0]));
    assert!((v["quadrature"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let v = json(&witten(&["s3", "--s", "1", "--m", "3"]));
    assert_eq!(v["z_m"], v["z_m_closed"]);
    assert_eq!(v["l_values"]["e"], "5/2");
    assert_eq!(v["l_values"]["3-cycle"], "7/4");
}

#[test]
fn s3_from_table_file() {
    let path = std::env::temp_dir().join(format!("witten-c2-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"order":2,"classes":[{"label":"e","size":1},{"label":"g","size":1}],
            "irreps":[{"dim":1,"values":[1,1]},{"dim":1,"values":[1,"-1"]}]}"#,
    )
    .unwrap();
    let v = json(&witten(&[
        "s3",
        "--s",
        "0",
        "--m",
        "2",
        "--table",
        path.to_str().unwrap(),
    ]));
    std::fs::remove_file(&path).ok();
    assert_eq!(v["zeta"], "2");
    assert_eq!(v["z_m"], "2");
    assert!(v.get("z_m_closed").is_none());
}

#[test]
fn product_identity() {
    let v = json(&witten(&[
        "product", "--class", "e", "--m", "2", "--s", "1",
    ]));
    assert_eq!(v["tuple_sum_exact"], "25/4");
    assert_eq!(v["agrees"], true);
    let v = json(&witten(&[
        "product", "--theta", "pi/2", "--m", "3", "--s", "3", "--trunc", "5000",
    ]));
    let diff = (re(&v["tuple_sum"]) - re(&v["power"])).abs();
    assert!(diff < 1e-8);
}

#[test]
fn verify_full_suite() {
    let out = witten(&["verify"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    let entry = checks
        .iter()
        .find(|c| c["check_id"] == "paper_discrepancy.tilde_z_m_s3.m=2.s=0")
        .expect("discrepancy entry");
    assert_eq!(entry["kind"], "informational");
    assert_eq!(entry["lhs_exact"], "9/4");
    assert_eq!(entry["rhs_exact"], "17/8");
    for c in checks {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            &keys[..8],
            [
                "check_id",
                "suite",
                "kind",
                "lhs",
                "rhs",
                "difference",
                "bound",
                "pass"
            ]
        );
    }
}

#[test]
fn verify_only_cubic() {
    let v = json(&witten(&["verify", "--only", "cubic"]));
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["suite"] == "cubic"));
}

#[test]
fn verify_tolerance_override_can_fail() {
    let out = witten(&["verify", "--only", "moments", "--tol", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
}
