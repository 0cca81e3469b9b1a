//! End-to-end tests of the `degen` binary: output shapes, exit codes,
//! determinism, and the JSON round-trip contract.

use degen_core::genfun::{family_values, PolyFamily};
use degen_core::recurrence::{build_trapezoid, InitialSequence};
use degen_core::report::LambdaPolyWire;
use degen_core::stirling::{shared, StirlingKind};
use degen_core::{rat, ratio, LambdaPoly};
use serde_json::Value;
use std::process::{Command, Output};

fn degen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(args)
        .env_remove("DEGEN_SEED")
        .env_remove("DEGEN_JOBS")
        .env_remove("DEGEN_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn wire_to_poly(v: &Value) -> LambdaPoly {
    let wire: LambdaPolyWire = serde_json::from_value(v.clone()).expect("wire value");
    wire.to_poly().expect("wire parses")
}

#[test]
fn table_stirling2deg_symbolic() {
    let out = degen(&["table", "stirling2deg", "--n-max", "3", "--lambda", "sym"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["rows"][2][1]["coeffs"], serde_json::json!(["1", "-1"]));
    // round-trip: every emitted entry parses back to the in-memory value
    let triangle = shared(StirlingKind::Degenerate2);
    for (n, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
        for (k, v) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(wire_to_poly(v), triangle.entry(n, k), "entry ({n},{k})");
        }
    }
}

#[test]
fn table_beta_first_value_is_minus_half() {
    let out = degen(&["table", "beta", "--n-max", "1", "--x", "0", "--lambda", "sym"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["values"][1]["coeffs"], serde_json::json!(["-1/2"]));
}

#[test]
fn table_lambda_zero_gives_classical_triangle() {
    let out = degen(&["table", "stirling2deg", "--n-max", "2", "--lambda", "0"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["rows"][2], serde_json::json!(["0", "1", "1"]));
}

#[test]
fn table_round_trip_every_kind() {
    // symbolic JSON emission matches the library values for each table kind
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("stirling1", vec![]),
        ("stirling2", vec![]),
        ("stirling1deg", vec![]),
        ("stirling2deg", vec![]),
        ("rstirling2", vec!["--r", "2"]),
        ("bernoulli", vec!["--x", "1/2"]),
        ("euler", vec!["--x", "1/2"]),
        ("beta", vec!["--x", "1/2"]),
        ("trapezoid", vec!["--init", "geom:1/2", "--r", "1"]),
    ];
    for (kind, extra) in cases {
        let mut args = vec!["table", kind, "--n-max", "4"];
        args.extend(&extra);
        let doc = stdout_json(&degen(&args));
        match kind {
            "bernoulli" | "euler" | "beta" => {
                let family = match kind {
                    "bernoulli" => PolyFamily::CarlitzBernoulli,
                    "euler" => PolyFamily::DegenerateEuler,
                    _ => PolyFamily::FullyDegenerateBernoulli,
                };
                let expect = family_values(family, &ratio(1, 2), 4, 12).unwrap();
                for (n, v) in doc["values"].as_array().unwrap().iter().enumerate() {
                    assert_eq!(wire_to_poly(v), expect.values[n], "{kind} n = {n}");
                }
            }
            "trapezoid" => {
                let expect =
                    build_trapezoid(&InitialSequence::Geometric(ratio(1, 2)), 1, 4).unwrap();
                for (n, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
                    for (m, v) in row.as_array().unwrap().iter().enumerate() {
                        assert_eq!(&wire_to_poly(v), expect.entry(n, m), "({n},{m})");
                    }
                }
            }
            "rstirling2" => {
                for (n, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
                    for (k, v) in row.as_array().unwrap().iter().enumerate() {
                        let expect =
                            degen_core::stirling::r_stirling2_convolution(n, k, 2).unwrap();
                        assert_eq!(wire_to_poly(v), expect, "({n},{k})");
                    }
                }
            }
            _ => {
                let triangle_kind = match kind {
                    "stirling1" => StirlingKind::Classical1,
                    "stirling2" => StirlingKind::Classical2,
                    "stirling1deg" => StirlingKind::Degenerate1,
                    _ => StirlingKind::Degenerate2,
                };
                let triangle = shared(triangle_kind);
                for (n, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
                    for (k, v) in row.as_array().unwrap().iter().enumerate() {
                        assert_eq!(wire_to_poly(v), triangle.entry(n, k), "{kind} ({n},{k})");
                    }
                }
            }
        }
    }
}

#[test]
fn table_csv_requires_rational_lambda() {
    let out = degen(&["table", "stirling2deg", "--n-max", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));

    let out = degen(&[
        "table",
        "stirling2deg",
        "--n-max",
        "2",
        "--format",
        "csv",
        "--lambda",
        "1/2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,k,value\n"));
    assert!(text.contains("2,1,1/2"));
}

#[test]
fn table_caps_n_max() {
    let out = degen(&["table", "stirling2deg", "--n-max", "65"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_quantities() {
    let out = degen(&["eval", "beta", "--n", "0", "--x", "0"]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"coeffs":["1"]}"#
    );
    let out = degen(&["eval", "s2deg", "--n", "2", "--k", "1", "--lambda", "1/3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "\"2/3\"");
    let out = degen(&["eval", "rs2deg", "--n", "1", "--k", "0", "--r", "2"]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"coeffs":["2"]}"#
    );
    let out = degen(&["eval", "fallingDeg", "--n", "2", "--x", "1"]);
    // (1)_{2,λ} = 1 - λ
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"coeffs":["1","-1"]}"#
    );
    // missing required index
    let out = degen(&["eval", "s2deg", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // out-of-range index
    let out = degen(&["eval", "s2deg", "--n", "2", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_shape() {
    let out = degen(&["verify", "theorem2", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["suite"], "theorem2");
    assert_eq!(doc["cases"].as_array().unwrap().len(), 13);
    assert_eq!(doc["summary"]["fail"], 0);

    let out = degen(&["verify", "theorem4", "--n-max", "5", "--r-max", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = degen(&["verify", "not-a-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_byte_identical_across_runs_and_jobs() {
    let args = [
        "verify", "all", "--n-max", "6", "--k-max", "4", "--r-max", "2", "--polys", "5",
        "--seed", "7",
    ];
    let a = degen(&args);
    let b = degen(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let mut with_jobs: Vec<&str> = args.to_vec();
    with_jobs.extend(["--jobs", "4"]);
    let c = degen(&with_jobs);
    assert_eq!(a.stdout, c.stdout, "case order must not depend on --jobs");
}

#[test]
fn verify_text_format() {
    let out = degen(&[
        "verify", "inversion", "--n-max", "3", "--format", "text",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite inversion"));
    assert!(text.contains("PASS m=0 n=0"));
    assert!(text.trim_end().ends_with("summary: 16 passed, 0 failed"));
}

#[test]
fn profile_flag_reports_wall_time() {
    let out = degen(&[
        "table", "stirling2deg", "--n-max", "16", "--profile",
    ]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("profile: table=stirling2deg n_max=16 wall_ms="), "{err}");

    let out = degen(&["verify", "theorem2", "--n-max", "4", "--profile"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("profile: suite=theorem2 wall_ms="), "{err}");
}

#[test]
fn env_variables_feed_defaults_and_flags_win() {
    let out = Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(["verify", "lemma1", "--k-max", "2", "--polys", "3"])
        .env("DEGEN_SEED", "99")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["seed"], 99);

    let out = Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(["verify", "lemma1", "--k-max", "2", "--polys", "3", "--seed", "5"])
        .env("DEGEN_SEED", "99")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["seed"], 5, "explicit flag beats environment");
}

#[test]
fn trapezoid_initial_sequences_parse() {
    let out = degen(&[
        "table", "trapezoid", "--init", "explicit:1,1/2,1/3,1/4,1/5", "--n-max", "4",
    ]);
    let doc = stdout_json(&out);
    // explicit harmonic prefix behaves like the built-in harmonic sequence
    let expect = build_trapezoid(&InitialSequence::Harmonic, 0, 4).unwrap();
    for (n, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
        for (m, v) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(&wire_to_poly(v), expect.entry(n, m));
        }
    }
    let out = degen(&["table", "trapezoid", "--init", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_lambda_evaluation_matches_symbolic() {
    // evaluate S_{2,λ}(4,2) at λ = 2/7 two ways
    let sym = degen(&["eval", "s2deg", "--n", "4", "--k", "2"]);
    let poly = wire_to_poly(&serde_json::from_slice(&sym.stdout).unwrap());
    let at = degen(&["eval", "s2deg", "--n", "4", "--k", "2", "--lambda", "2/7"]);
    let s: String = serde_json::from_slice(&at.stdout).unwrap();
    assert_eq!(s, poly.eval(&ratio(2, 7)).to_string());
    assert_eq!(poly.eval(&rat(0)), rat(7));
}
