use std::path::Path;
use std::process::{Command, Output};

use hyperpack_cli::{parse_curve_csv, render_curve_csv, CSV_HEADER};

fn hyperpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn density_text_and_json() {
    let out = hyperpack(&["density", "--p", "7"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "h=0.78871 VolO=0.08856 piece=0.07284 delta=0.82251\n"
    );

    let out = hyperpack(&["density", "--p", "6.5", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let delta = v["delta"].as_f64().unwrap();
    assert!(delta > 0.0 && delta < 1.0);
    // pinned from the first run; an mpmath prototype agrees to 1e-15
    assert!((delta - 0.850_390_302_961_704).abs() < 1e-12, "{delta}");
}

#[test]
fn exit_codes() {
    let domain = hyperpack(&["density", "--p", "6"]);
    assert_eq!(domain.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("outside (6, ∞)"));

    let io = hyperpack(&[
        "curve",
        "--from",
        "6.5",
        "--to",
        "7",
        "--steps",
        "3",
        "--out",
        "/nonexistent/dir/c.csv",
    ]);
    assert_eq!(io.status.code(), Some(4));

    let range = hyperpack(&[
        "curve", "--from", "7", "--to", "6.5", "--steps", "3", "--out", "x.csv",
    ]);
    assert_eq!(range.status.code(), Some(3));
}

#[test]
fn curve_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let out = hyperpack(&[
        "curve",
        "--from",
        "6.01",
        "--to",
        "10",
        "--steps",
        "400",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(&format!("{CSV_HEADER}\n")));
    let records = parse_curve_csv(&text).unwrap();
    assert_eq!(records.len(), 400);
    assert_eq!(render_curve_csv(&records).unwrap(), text);

    let step = (10.0 - 6.01) / 399.0;
    let peak = records
        .iter()
        .max_by(|a, b| a.delta.total_cmp(&b.delta))
        .unwrap();
    assert!((peak.p - 6.13499).abs() <= step, "peak at {}", peak.p);
    assert!(records.windows(2).all(|w| w[0].p < w[1].p));
}

#[test]
fn curve_two_steps_and_decreasing_tail() {
    let dir = tempfile::tempdir().unwrap();
    let run = |from: &str, to: &str, steps: &str, name: &str| {
        let path = dir.path().join(name);
        let out = hyperpack(&[
            "curve",
            "--from",
            from,
            "--to",
            to,
            "--steps",
            steps,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        parse_curve_csv(&std::fs::read_to_string(Path::new(&path)).unwrap()).unwrap()
    };
    assert_eq!(run("6.5", "7", "2", "two.csv").len(), 2);
    let tail = run("7", "9", "50", "tail.csv");
    assert!(tail.windows(2).all(|w| w[1].delta < w[0].delta));
}

#[test]
fn table_optimize_limits() {
    let table = stdout(&hyperpack(&["table"]));
    assert!(table.contains("0.41431") && table.contains("0.15266"));

    let out = hyperpack(&["optimize", "--tol", "1e-6"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("p_opt=6.13499 delta_opt=0.86338"));

    let limits = stdout(&hyperpack(&["limits"]));
    assert!(limits.contains("p=6+1e-4 delta=0.85334"));
}

#[test]
fn curve_help_has_plot_recipe() {
    let help = stdout(&hyperpack(&["curve", "--help"]));
    assert!(help.contains("read_csv"));
}
