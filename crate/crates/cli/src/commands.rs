use std::fmt::Write as _;
use std::path::PathBuf;

use gensum_core::family::{family_csv, family_table};
use gensum_core::rational::format_rational;
use gensum_core::signal::{error_report, euler_accelerate, gamma_series, load_series};
use gensum_core::summation::{downsampled_sum_poly, frac_sum_eval, indefinite_sum};
use gensum_core::verify::{run_batch, VerifyConfig};
use gensum_core::{generate_family, CoefficientTable, Error, Polynomial, Rational, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Text for stdout plus whether every checked identity held.
pub struct Output {
    pub text: String,
    pub verified: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, verified: true }
    }
}

pub fn coeffs(max_order: usize, star: bool, eval: Option<&Rational>, csv: bool) -> Result<Output> {
    let family = generate_family(max_order);
    let text = if csv {
        family_csv(&family, eval)
    } else {
        family_table(&family, star, eval)
    };
    Ok(Output::ok(text))
}

fn join_rationals(xs: &[Rational]) -> String {
    xs.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn verify(degree: usize, trials: usize, seed: u64, x_grid: Vec<Rational>, classical: bool) -> Result<Output> {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "seed {seed}, degree <= {degree}, {trials} trials, x-grid {}{}",
        join_rationals(&x_grid),
        if classical { ", classical reductions" } else { "" }
    );
    let per_x = 2;
    let n_x = x_grid.len();
    let per_trial = per_x * n_x + if classical { 3 } else { 0 };
    let run = run_batch(&VerifyConfig {
        max_degree: degree,
        trials,
        seed,
        x_grid,
        classical,
    })?;
    if per_trial > 0 {
        for cases in run.cases.chunks(per_trial) {
            let trial = cases[0].trial;
            let f = cases[0].poly.to_coeff_string();
            let (by_x, reductions) = cases.split_at(per_x * n_x);
            for pair in by_x.chunks(per_x) {
                let _ = writeln!(
                    text,
                    "trial {trial} f=[{f}] x={} {}={} {}={}",
                    format_rational(&pair[0].report.x_value),
                    pair[0].check.name(),
                    verdict(pair[0].report.passed),
                    pair[1].check.name(),
                    verdict(pair[1].report.passed),
                );
            }
            if !reductions.is_empty() {
                let cols: Vec<String> = reductions
                    .iter()
                    .map(|c| format!("{}={}", c.check.name(), verdict(c.report.passed)))
                    .collect();
                let _ = writeln!(text, "trial {trial} f=[{f}] {}", cols.join(" "));
            }
            for case in cases.iter().filter(|c| !c.report.passed) {
                let _ = writeln!(
                    text,
                    "  residual {} x={} terms={}: [{}]",
                    case.check.name(),
                    format_rational(&case.report.x_value),
                    case.report.terms_used,
                    case.report.residual.to_coeff_string()
                );
            }
        }
    }
    let _ = writeln!(text, "{}/{} passed", run.trials_passed, run.trials);
    Ok(Output {
        text,
        verified: run.all_passed(),
    })
}

/// First line is the bare value; the second gives the closed form in `n`.
pub fn sum(f: &Polynomial, n: &Rational, downsample_x: Option<&Rational>) -> Result<Output> {
    let (value, closed) = match downsample_x {
        None => (frac_sum_eval(f, n), indefinite_sum(f)),
        Some(x) => {
            let s = downsampled_sum_poly(f, x)?;
            (s.eval(n), s)
        }
    };
    Ok(Output::ok(format!(
        "{}\nas a polynomial in n: [{}]\n",
        format_rational(&value),
        closed.to_coeff_string()
    )))
}

pub struct DownsampleArgs {
    pub input: PathBuf,
    pub col: usize,
    pub header: bool,
    pub window: usize,
    pub factors: Vec<usize>,
    pub max_order: usize,
    pub t0: usize,
    pub output: PathBuf,
}

pub fn downsample(args: &DownsampleArgs) -> Result<Output> {
    let series = load_series(&args.input, args.col, args.header)?;
    let family = generate_family(args.max_order);
    let report = error_report(&series, args.t0, args.window, &args.factors, args.max_order, &family)?;
    std::fs::write(&args.output, report.to_csv()).map_err(|source| Error::Io {
        path: args.output.clone(),
        source,
    })?;
    let mut text = String::new();
    let mut factors = args.factors.clone();
    factors.sort_unstable();
    factors.dedup();
    for x in factors {
        let base = report.baseline(x).unwrap_or(f64::NAN);
        let best = report.err(x, args.max_order).unwrap_or(f64::NAN);
        let _ = writeln!(text, "x={x} err(0)={base:.3e} err({})={best:.3e}", args.max_order);
    }
    let _ = writeln!(text, "wrote {} rows to {}", report.rows.len(), args.output.display());
    Ok(Output::ok(text))
}

pub enum Accelerate {
    Gamma { terms: usize },
    Ln2 { order: usize },
    File { path: PathBuf, order: usize },
}

pub fn accelerate(mode: Accelerate) -> Result<Output> {
    let (value, reference) = match mode {
        Accelerate::Gamma { terms } => (
            gamma_series(terms, &CoefficientTable::at_origin(terms))?,
            Some(EULER_GAMMA),
        ),
        Accelerate::Ln2 { order } => {
            let terms: Vec<f64> = (0..=order).map(|k| 1.0 / (k as f64 + 1.0)).collect();
            (euler_accelerate(&terms, order)?, Some(std::f64::consts::LN_2))
        }
        Accelerate::File { path, order } => {
            let series = load_series(&path, 0, false)?;
            (euler_accelerate(series.values(), order)?, None)
        }
    };
    let mut text = format!("{value}\n");
    if let Some(r) = reference {
        let _ = writeln!(text, "reference {r} abs_error {:.3e}", (value - r).abs());
    }
    Ok(Output::ok(text))
}
