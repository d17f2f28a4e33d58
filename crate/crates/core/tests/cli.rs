use cardioid::cli::{run, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(
        std::iter::once("cardioid").chain(args.iter().copied()),
        &mut out,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn constants_default_to_json() {
    let (code, text) = call(&["constants"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows = v.as_array().unwrap();
    let find = |name: &str| {
        rows.iter().find(|r| r["name"] == name).unwrap()["value"]
            .as_f64()
            .unwrap()
    };
    assert!((find("convexity-of-p") - 0.381966).abs() < 1e-6);
    assert!((find("Delta-radius") - 0.474928).abs() < 1e-6);
    assert!(rows.iter().all(|r| !r["refs"].as_str().unwrap().is_empty()));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["constants", "--format", "csv"][..],
        &["curve", "gamma7", "--samples", "64"],
        &["verify", "--suite", "coefficients", "--seed", "42"],
    ] {
        assert_eq!(call(args), call(args));
    }
}

#[test]
fn curve_zero_starts_at_one_plus_e() {
    let (code, text) = call(&["curve", "gamma0", "--samples", "17", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<(f64, f64, f64)> = rdr.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 17);
    let (_, re, im) = rows.iter().copied().find(|r| r.0.abs() < 1e-12).unwrap();
    assert!((re - 3.718282).abs() < 1e-6 && im.abs() < 1e-12);
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["radius", "no-such-class"]).0, EXIT_USAGE);
    assert_eq!(call(&["curve", "gamma0", "--samples", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["curve", "gamma12"]).0, EXIT_USAGE);
}

#[test]
fn radius_takes_class_parameters() {
    let (code, text) = call(&["radius", "M-beta", "--beta", "2"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let r = v["value"]
        .as_f64()
        .or_else(|| v[0]["value"].as_f64())
        .unwrap();
    // 1 + r e^r = 2
    assert!((1.0 + r * r.exp() - 2.0).abs() < 1e-10);
}

#[test]
fn coefficient_suite_reports_b4_within_five_sixths() {
    let (code, text) = call(&["verify", "--suite", "coefficients", "--seed", "42"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("5/6") || text.contains("0.833333333333"));
}

#[test]
fn coeffs_command_emits_bell_ratios() {
    let (code, text) = call(&[
        "coeffs",
        "--function",
        "f1",
        "--order",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    // B_4/4! = 15/24
    assert!(text.contains("0.625"));
}
