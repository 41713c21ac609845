use std::io::Write;
use std::process::{Command, Output};

fn gensum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gensum"))
        .args(args)
        .output()
        .expect("spawn gensum")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeffs_table_has_first_polynomials() {
    let out = gensum(&["coeffs", "--max-order", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-1/6 x^2 + 1/6"));
    assert!(text.contains("-19/30 x^4 + 2/3 x^2 - 1/30"));
    assert!(text.contains("9/4 x^5 - 5/2 x^3 + 1/4 x"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn coeffs_csv_with_evaluation() {
    let out = gensum(&["coeffs", "--max-order", "2", "--format", "csv", "--eval", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,F_r_coeffs,F_r_star_coeffs,B_r,G_r,F_r_at,F_r_star_at"));
    // F_2(1/2) = 2!/4^2
    assert_eq!(lines.nth(2), Some("2,\"1/6,0,-1/6\",\"-1/6,0,1/6\",1/6,-1/12,1/8,-1/8"));
}

#[test]
fn sum_of_identity_at_one_half() {
    let out = gensum(&["sum", "--poly", "0,1", "--n", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("-1/8"));
}

#[test]
fn downsampled_sum_matches_hand_count() {
    // 2 * (f(0) + f(2) + f(4)) for f(k) = k^2
    let out = gensum(&["sum", "--poly", "0,0,1", "--n", "6", "--downsample-x", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("40"));
}

#[test]
fn verify_reports_all_trials_and_echoes_seed() {
    let out = gensum(&["verify", "--degree", "8", "--trials", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("seed 7,"));
    assert_eq!(text.lines().last(), Some("100/100 passed"));
    assert_eq!(text.lines().filter(|l| l.starts_with("trial ")).count(), 800);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--degree", "5", "--trials", "10", "--seed", "42", "--classical"];
    let a = gensum(&args);
    let b = gensum(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn verify_accepts_custom_grid_with_unicode_minus() {
    let out = gensum(&["verify", "--degree", "3", "--trials", "3", "--seed", "1", "--x-grid", "\u{2212}1/2,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("x=-1/2 theorem=pass"));
}

#[test]
fn zero_step_is_an_input_error() {
    let out = gensum(&["verify", "--degree", "3", "--trials", "1", "--seed", "1", "--x-grid", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["coeffs", "--max-order", "3", "--bogus"],
        vec!["coeffs"],
        vec!["sum", "--poly", "x", "--n", "1"],
        vec!["sum", "--poly", "1", "--n", "1/0"],
        vec!["accelerate", "--target", "gamma", "--order", "3"],
        vec!["accelerate", "--target", "ln2", "--terms", "3"],
        vec!["accelerate", "--target", "ln2", "--order", "3", "--terms-file", "t.csv"],
        vec!["accelerate", "--order", "3"],
    ] {
        assert_eq!(gensum(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn accelerate_targets() {
    let out = gensum(&["accelerate", "--target", "ln2", "--order", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v: f64 = stdout(&out).lines().next().unwrap().parse().unwrap();
    assert!((v - std::f64::consts::LN_2).abs() < 1e-6);

    let out = gensum(&["accelerate", "--target", "gamma", "--terms", "200"]);
    let v: f64 = stdout(&out).lines().next().unwrap().parse().unwrap();
    assert!((v - 0.5772156649).abs() < 2e-3);
}

#[test]
fn accelerate_terms_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for k in 0..30 {
        writeln!(file, "{}", 1.0 / (k as f64 + 1.0)).unwrap();
    }
    let path = file.path().to_str().unwrap();
    let out = gensum(&["accelerate", "--terms-file", path, "--order", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - std::f64::consts::LN_2).abs() < 1e-6);
}

fn bump_csv(width: f64) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "t,value").unwrap();
    for t in 0..=120 {
        let v = (-((t as f64 - 30.0) / width).powi(2)).exp();
        writeln!(file, "{t},{v}").unwrap();
    }
    file
}

#[test]
fn downsample_writes_error_table() {
    let input = bump_csv(20.0);
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("err.csv");
    let args = [
        "downsample",
        "--input",
        input.path().to_str().unwrap(),
        "--col",
        "1",
        "--header",
        "--window",
        "60",
        "--factors",
        "2,3,4,5",
        "--max-order",
        "4",
        "--output",
        output.to_str().unwrap(),
    ];
    let out = gensum(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let table = std::fs::read_to_string(&output).unwrap();
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows[0], "x,R,err");
    assert_eq!(rows.len(), 1 + 4 * 5);
    let err = |x: &str, r: &str| -> f64 {
        let row = rows.iter().find(|l| l.starts_with(&format!("{x},{r},"))).unwrap();
        row.rsplit(',').next().unwrap().parse().unwrap()
    };
    for x in ["2", "3", "4", "5"] {
        assert!(err(x, "4") < err(x, "1"), "x={x}");
    }

    let first = std::fs::read(&output).unwrap();
    assert_eq!(gensum(&args).status.code(), Some(0));
    assert_eq!(std::fs::read(&output).unwrap(), first);
}

#[test]
fn downsample_bad_inputs_exit_two() {
    let input = bump_csv(10.0);
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("err.csv");
    let run = |col: &str, header: bool, window: &str, factors: &str| {
        let mut args = vec![
            "downsample",
            "--input",
            input.path().to_str().unwrap(),
            "--col",
            col,
            "--window",
            window,
            "--factors",
            factors,
            "--max-order",
            "4",
            "--output",
            output.to_str().unwrap(),
        ];
        if header {
            args.push("--header");
        }
        gensum(&args).status.code()
    };
    // header row read as data
    assert_eq!(run("1", false, "60", "2"), Some(2));
    // missing column
    assert_eq!(run("5", true, "60", "2"), Some(2));
    // window not a multiple of the factor
    assert_eq!(run("1", true, "60", "7"), Some(2));
    // tail samples past the end of the series
    assert_eq!(run("1", true, "118", "2"), Some(2));
    assert_eq!(run("1", true, "60", "2,x"), Some(2));

    let missing = gensum(&[
        "downsample", "--input", "/nonexistent.csv", "--col", "0", "--window", "4", "--factors", "2",
        "--max-order", "1", "--output", output.to_str().unwrap(),
    ]);
    assert_eq!(missing.status.code(), Some(2));
}
