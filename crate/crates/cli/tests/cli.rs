use std::process::{Command, Output};

use esfi_cli::{BarrierRecord, InvertRecord, RateRecord};
use serde_json::Value;

fn esfi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esfi"))
        .args(args)
        .env_remove("ESFI_GUARD_OVERRIDE")
        .output()
        .expect("run esfi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn constants_in_canonical_units() {
    let o = esfi(&["constants", "--units", "evnm", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("symbol,value,units\n"));
    assert!(text.contains("\nb,6.830890,eV^-3/2 V nm^-1\n"), "{text}");
    assert!(text.contains("\nC_FI,1.245354e17,"));
}

#[test]
fn constants_in_atomic_units() {
    let text = stdout(&esfi(&["constants", "--units", "au", "--format", "csv"]));
    assert!(text.contains("\nC_FI,22.627417,au\n"), "{text}");
    let v = json(&esfi(&["constants", "--units", "au"]));
    assert_eq!(v["C_FI"]["value"].as_f64(), Some(22.627417));
    assert!(v.get("eV").is_none());
}

#[test]
fn constants_in_si_omit_unquoted_rows() {
    let text = stdout(&esfi(&["constants", "--units", "si", "--format", "csv"]));
    for sym in ["sigma", "b", "C_FI"] {
        assert!(!text.contains(&format!("\n{sym},")), "{sym} present");
    }
    assert!(text.contains("\na_0,5.291772e-11,m\n"), "{text}");
}

#[test]
fn rate_in_atomic_units() {
    let o = esfi(&["rate", "--Z", "1", "--field", "0.05", "--units", "au", "--method", "ll"]);
    assert_eq!(o.status.code(), Some(3), "0.05 au is above the guard");
    let v = json(&esfi(&[
        "rate",
        "--Z",
        "1",
        "--field",
        "0.05",
        "--units",
        "au",
        "--method",
        "ll",
        "--extrapolate",
    ]));
    let k = v["K_e"].as_f64().unwrap();
    assert!((k / 1.295_677_433_85e-4 - 1.0).abs() < 1e-10);
    assert_eq!(v["regime"], "extrapolated");
}

#[test]
fn guard_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_esfi"))
        .args(["rate", "--field", "25", "--method", "jwkb-parabolic"])
        .env("ESFI_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    let v = json(&o);
    // frozen from an independent 30-digit evaluation
    assert!((v["K_e"].as_f64().unwrap() / 6.419_029_09e12 - 1.0).abs() < 1e-8);
    assert_eq!(v["regime"], "extrapolated");
}

#[test]
fn negative_field_is_a_validation_error() {
    let o = esfi(&["rate", "--field", "-5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("field must be positive"));
    assert_eq!(esfi(&["rate", "--Z", "0", "--field", "5"]).status.code(), Some(2));
    assert_eq!(
        esfi(&["rate", "--field", "5", "--ionization-energy", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn three_point_sweep() {
    let o = esfi(&[
        "sweep",
        "--f-min",
        "2",
        "--f-max",
        "12",
        "--points",
        "3",
        "--spacing",
        "log",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("F,K_e_ll,exponent_ll\n"));
    assert!(!text.contains('\r'));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 3);
    let k: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert!(k[0] < k[1] && k[1] < k[2]);
    assert_eq!(rows[0][0], "2.000000000e+00");
}

#[test]
fn sweep_is_byte_stable() {
    let args = [
        "sweep",
        "--f-min",
        "1",
        "--f-max",
        "15",
        "--points",
        "40",
        "--methods",
        "ll,jwkb-parabolic,jwkb-cartesian",
    ];
    let a = esfi(&args);
    let b = esfi(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_ratio_is_flat_at_low_field() {
    let o = esfi(&[
        "sweep",
        "--units",
        "au",
        "--f-min",
        "0.001",
        "--f-max",
        "0.01",
        "--points",
        "6",
        "--methods",
        "ll,jwkb-parabolic",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("F,K_e_ll,K_e_jwkb-parabolic,exponent_ll,exponent_jwkb-parabolic\n"));
    let ratios: Vec<f64> = csv_rows(&text)
        .iter()
        .map(|r| r[2].parse::<f64>().unwrap() / r[1].parse::<f64>().unwrap())
        .collect();
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    assert!(max / min - 1.0 < 0.02, "{ratios:?}");
}

#[test]
fn sweep_marks_points_above_the_guard() {
    let o = esfi(&["sweep", "--f-min", "10", "--f-max", "20", "--points", "2"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1][1], "nan");
    assert!(stderr(&o).contains("guard"));
}

#[test]
fn sweep_validation() {
    assert_eq!(esfi(&["sweep", "--f-min", "5", "--f-max", "5"]).status.code(), Some(2));
    assert_eq!(esfi(&["sweep", "--f-min", "5", "--f-max", "1"]).status.code(), Some(2));
    assert_eq!(
        esfi(&["sweep", "--f-min", "1", "--f-max", "2", "--points", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn sweep_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = esfi(&[
        "sweep",
        "--f-min",
        "2",
        "--f-max",
        "8",
        "--points",
        "4",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn invert_round_trip() {
    let v = json(&esfi(&["invert", "--target", "3.7702424526e12", "--f-hi", "30"]));
    let f = v["F"].as_f64().unwrap();
    // target has 11 significant figures, so F is recovered to about that
    assert!((f / 25.0 - 1.0).abs() < 1e-9, "{f}");
    assert!(v["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn invert_unattainable() {
    let o = esfi(&["invert", "--target", "1e99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("outside attainable range"));
}

#[test]
fn naive_barrier_suppressed_at_one_sixteenth() {
    let o = esfi(&[
        "barrier",
        "--model",
        "jwkb-naive",
        "--Z",
        "1",
        "--units",
        "au",
        "--field",
        "0.0625",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let msg = stderr(&o);
    assert!(
        msg.contains("suppression field 0.06249999") || msg.contains("suppression field 0.0625"),
        "{msg}"
    );
}

#[test]
fn parabolic_barrier_inner_point() {
    let v = json(&esfi(&[
        "barrier",
        "--model",
        "jwkb-parabolic",
        "--units",
        "au",
        "--field",
        "1e-3",
    ]));
    for key in ["coord_in", "coord_out", "G", "P_jwkb", "P_eff", "D_eff", "K_e"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let eta_in = v["coord_in"].as_f64().unwrap();
    assert!((eta_in / (1.0 + 2f64.sqrt()) - 1.0).abs() < 0.01);
}

#[test]
fn parabolic_and_cartesian_share_g() {
    let p = json(&esfi(&["barrier", "--model", "jwkb-parabolic", "--field", "6"]));
    let c = json(&esfi(&["barrier", "--model", "jwkb-cartesian", "--field", "6"]));
    let (gp, gc) = (p["G"].as_f64().unwrap(), c["G"].as_f64().unwrap());
    assert!((gp - gc).abs() < 1e-9, "{gp} vs {gc}");
}

#[test]
fn json_records_round_trip() {
    let rate = stdout(&esfi(&["rate", "--field", "7", "--method", "jwkb-cartesian"]));
    let r: RateRecord = serde_json::from_str(&rate).unwrap();
    let again: RateRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(r, again);

    let barrier = stdout(&esfi(&["barrier", "--field", "7", "--units", "si"]));
    let b: BarrierRecord = serde_json::from_str(&barrier).unwrap();
    let again: BarrierRecord = serde_json::from_str(&serde_json::to_string(&b).unwrap()).unwrap();
    assert_eq!(b, again);

    let inv = stdout(&esfi(&["invert", "--target", "1e5", "--Z", "2"]));
    let i: InvertRecord = serde_json::from_str(&inv).unwrap();
    let again: InvertRecord = serde_json::from_str(&serde_json::to_string(&i).unwrap()).unwrap();
    assert_eq!(i, again);
}

#[test]
fn out_flag_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rate.json");
    let o = esfi(&["rate", "--field", "9", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["method"], "ll");
}

#[test]
fn rate_csv_has_header() {
    let text = stdout(&esfi(&["rate", "--field", "9", "--format", "csv"]));
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("method,Z,field,"));
    assert!(lines.next().unwrap().starts_with("ll,1,9.000000000e+00,"));
}
