//! End-to-end tests of the `hgc` binary: exit codes, output schemas and
//! byte-for-byte determinism.

use std::process::{Command, Output};

fn hgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn eval_2f1_log_value() {
    let out = hgc(&[
        "eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // F(1,1;2;1/2) = 2 ln 2 ≈ 1.386294361119891e0
    assert!(
        text.contains("\"value\":[1.3862943611198"),
        "unexpected output: {text}"
    );
    assert!(text.contains("\"method\":\"series\""));
}

#[test]
fn eval_with_integral_cross_check() {
    let out = hgc(&[
        "eval",
        "--type",
        "0F1",
        "--c",
        "1.5",
        "--z",
        "1",
        "--olver",
        "--cross-check",
        "integral",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"cross_check\""));
    assert!(text.contains("\"representation\":\"0F1-loop\""));
    // gap between series and loop integral is reported and tiny
    let rel = text
        .split("\"rel_diff\":")
        .nth(1)
        .and_then(|t| t.split(['}', ',']).next())
        .and_then(|t| t.parse::<f64>().ok())
        .expect("rel_diff field");
    assert!(rel < 1e-10, "rel_diff {rel}");
}

#[test]
fn eval_is_byte_identical() {
    let args = [
        "eval", "--type", "1F1", "--a", "0.7", "--c", "1.9", "--z", "0.3+0.2j",
    ];
    let a = stdout(&hgc(&args));
    let b = stdout(&hgc(&args));
    assert_eq!(a, b);
    assert!(
        a.contains("e0") || a.contains("e-"),
        "floats use %.15e: {a}"
    );
}

#[test]
fn classify_gauss_pattern() {
    let out = hgc(&[
        "classify", "--sigma", "0,1,-1", "--tau", "2,-3", "--eta", "-2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"type\":\"2F1\""), "{text}");
    assert!(text.contains("\"hypergeometric_class\":true"));
}

#[test]
fn classify_airy_flagged() {
    let out = hgc(&["classify", "--sigma", "1", "--tau", "0", "--xi", "0,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"type\":\"Airy\""));
    assert!(text.contains("\"hypergeometric_class\":false"));
}

#[test]
fn verify_targeted_lie_hermite() {
    let out = hgc(&[
        "verify", "--suite", "lie", "--sigma", "1", "--kappa", "0,-2",
    ]);
    assert!(out.status.success(), "exit 0 expected");
    let text = stdout(&out);
    assert!(text.contains("\"pass\":true"));
    assert!(text.contains("osc(C)"));
}

#[test]
fn verify_series_suite_passes() {
    let out = hgc(&["verify", "--suite", "series"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"pass\":true"));
}

#[test]
fn usage_errors_exit_2() {
    let out = hgc(&["eval", "--type", "2F1", "--a", "1", "--z", "0.5"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "missing --b/--c is a usage error"
    );
    let out = hgc(&[
        "eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--sigma", "1",
    ]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "mixed parameter styles rejected"
    );
    let out = hgc(&["eval", "--frog", "1"]);
    assert_eq!(out.status.code(), Some(2), "unknown flags rejected");
}

#[test]
fn poly_csv_has_header_and_rows() {
    let out = hgc(&[
        "poly", "--family", "laguerre", "--alpha", "0.5", "--n-max", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,degree,c0_re,c0_im,c1_re,c1_im,c2_re,c2_im"
    );
    assert_eq!(text.lines().count(), 4);
    // L1^{1/2} = 1.5 − x
    assert!(text.contains("1,1,1.500000000000000e0"));
}

#[test]
fn plot_data_csv_grid() {
    let out = hgc(&[
        "plot-data",
        "--type",
        "0F1",
        "--c",
        "1.5",
        "--z-from",
        "0",
        "--z-to",
        "1",
        "--steps",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "z_re,z_im,value_re,value_im");
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn ladder_table() {
    let out = hgc(&[
        "ladder", "--sigma", "0,1", "--kappa", "0.5,-1", "--from", "0", "--to", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // κ_1 = σ′ + κ_0 = 1.5 − z
    assert!(text.contains("\"kappa_n\":[[1.500000000000000e0"));
}
