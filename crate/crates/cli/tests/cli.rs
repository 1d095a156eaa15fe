use std::process::Command;

use bilinear_cli::report::from_json;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bilinear"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = bin().args(args).output().expect("spawn");
    (
        o.status.code().unwrap_or(-1),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn unknown_suite_is_usage_error() {
    let (code, _, err) = run(&["verify", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"));
}

#[test]
fn bad_flag_values_are_usage_errors() {
    assert_eq!(run(&["verify", "hankel", "--q", "1.5"]).0, 2);
    assert_eq!(run(&["verify", "hankel", "--format", "xml"]).0, 2);
    assert_eq!(run(&["eval", "bessel", "--x", "1"]).0, 2);
    assert_eq!(run(&["eval", "nope"]).0, 2);
    assert_eq!(run(&[]).0, 2);
}

#[test]
fn domain_errors_exit_two() {
    let (code, _, err) = run(&["eval", "qbessel3", "--q", "0.5", "--nu", "0.3", "--x", "-1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn unwritable_output_is_io_error() {
    let (code, _, _) = run(&["verify", "hankel", "--out", "/nonexistent-dir/r.json"]);
    assert_eq!(code, 3);
}

#[test]
fn list_suites_in_registry_order() {
    let (code, out, _) = run(&["--list-suites"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = out.lines().collect();
    assert_eq!(names.first(), Some(&"planewave"));
    assert_eq!(names.last(), Some(&"all"));
    assert_eq!(names.len(), 10);
}

#[test]
fn eval_examples() {
    let (code, out, _) = run(&["eval", "dunkl-kernel", "--alpha", "-0.5", "--x", "0.9"]);
    assert_eq!(code, 0);
    let v: Vec<f64> = out.split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert!((v[0] - 0.9f64.cos()).abs() < 1e-14 && (v[1] - 0.9f64.sin()).abs() < 1e-14);
    let (_, out, _) = run(&["eval", "zeros", "--nu", "0.5", "--k", "2"]);
    assert_eq!(out.trim(), "6.28318530717959");
    let (_, out, _) = run(&["eval", "lommel", "--n", "1", "--a", "2.5", "--w", "0.2"]);
    assert_eq!(out.trim(), "1.0");
    let (_, out, _) = run(&[
        "eval",
        "eigenvalue",
        "--alpha",
        "-0.5",
        "--beta",
        "1",
        "--k",
        "1",
        "--sign",
        "-",
    ]);
    let v: Vec<f64> = out.split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert_eq!(v[0], 0.0);
    assert!(v[1] < 0.0);
}

#[test]
fn reports_are_deterministic() {
    for fmt in ["json", "csv", "text"] {
        let a = run(&["verify", "q-weber", "--format", fmt]);
        let b = run(&["verify", "q-weber", "--format", fmt]);
        assert_eq!(a.0, 0);
        assert_eq!(a.1, b.1, "{fmt}");
    }
}

#[test]
fn csv_header_and_rows() {
    let (_, out, _) = run(&["verify", "hankel", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("id,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass")
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn spectrum_k_max_limits_lommel_rows() {
    let (code, out, _) = run(&[
        "verify",
        "spectrum",
        "--k-max",
        "2",
        "--filter",
        "spectrum.lommel-at-zero",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let r = from_json(&out).unwrap();
    assert_eq!(r.checks.len(), 20);
    assert!(r.checks.iter().all(|c| c.pass && c.abs_err < 1e-10));
}

#[test]
fn tolerance_override_can_fail_a_suite() {
    let (code, out, _) = run(&["verify", "hankel", "--tol", "1e-30", "--format", "json"]);
    assert_eq!(code, 1);
    let r = from_json(&out).unwrap();
    assert_eq!(r.params.tol, Some(1e-30));
    assert!(!r.pass);
}

#[test]
fn config_file_feeds_settings_and_flags_win() {
    let dir = std::env::temp_dir().join(format!("bilinear-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "# overrides\nq = 0.3\nformat = json\nalpha = 0.2\n").unwrap();
    let (code, out, _) = run(&[
        "verify",
        "q-weber",
        "--config",
        cfg.to_str().unwrap(),
        "--alpha",
        "0.4",
    ]);
    assert_eq!(code, 0);
    let r = from_json(&out).unwrap();
    assert_eq!(r.params.q, Some(0.3));
    assert_eq!(r.params.alpha, Some(0.4));
    let out_path = dir.join("r.csv");
    let (code, _, _) = run(&[
        "verify",
        "hankel",
        "--format",
        "csv",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&out_path)
        .unwrap()
        .starts_with("id,"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn filter_matching_nothing_gives_empty_passing_report() {
    let (code, out, _) = run(&["verify", "hankel", "--filter", "zzz", "--format", "json"]);
    assert_eq!(code, 0);
    let r = from_json(&out).unwrap();
    assert!(r.checks.is_empty() && r.pass);
}
