//! Floating-point applications on sampled data: downsampled window sums and
//! their series correction, the Euler transform for alternating series,
//! Gregory quadrature, and the Gregory-coefficient series for Euler's
//! constant.
//!
//! Exact coefficients come from [`crate::family`] and are converted to `f64`
//! once. All sums run left to right in a fixed order.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::family::{CoefficientTable, FrFamily};
use crate::rational::{self, Rational};

/// Unit-spaced samples; `values[k]` is the reading at time `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub name: String,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(TimeSeries {
            name: name.into(),
            values,
        })
    }

    /// Samples `f(0), f(1), ..., f(len - 1)`.
    pub fn from_fn(name: impl Into<String>, len: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(name, (0..len).map(|k| f(k as f64)).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `exp(-((t - center) / width)^2)` sampled at `t = 0..len`.
pub fn bump(center: f64, width: f64, len: usize) -> TimeSeries {
    TimeSeries::from_fn(format!("bump-{center}-{width}"), len, |t| {
        (-((t - center) / width).powi(2)).exp()
    })
    .expect("nonempty")
}

/// The reference synthetic signal: `exp(-((t - 30) / 10)^2)` at `t = 0..=120`.
pub fn gaussian_bump() -> TimeSeries {
    bump(30.0, 10.0, 121)
}

/// Reads one CSV column as floats. `row` in parse errors is the 1-based line
/// of the record in the file (header included); `col` echoes `column`.
pub fn load_series(path: &Path, column: usize, has_header: bool) -> Result<TimeSeries> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::open(path).map_err(io_err)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(file);
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let row = i + 1 + usize::from(has_header);
        let record = record.map_err(|e| Error::Parse {
            row,
            col: column,
            msg: e.to_string(),
        })?;
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        let field = record.get(column).ok_or_else(|| Error::Parse {
            row,
            col: column,
            msg: format!("row has only {} fields", record.len()),
        })?;
        let v: f64 = field.parse().map_err(|_| Error::Parse {
            row,
            col: column,
            msg: format!("`{field}` is not a number"),
        })?;
        values.push(v);
    }
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    TimeSeries::new(name, values)
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    rational::to_f64(&Rational::from_integer(rational::binomial(n, k)))
}

/// `Δ_step^r s` at `t`: `sum_j (-1)^(r-j) C(r,j) s[t + j step]`.
pub fn series_forward_diff(s: &TimeSeries, t: usize, step: usize, r: usize) -> Result<f64> {
    if step == 0 {
        return Err(Error::Invalid("difference step must be at least 1".into()));
    }
    let last = t + r * step;
    if last >= s.len() {
        return Err(Error::OutOfRange {
            index: last,
            len: s.len(),
            what: "trailing samples for the forward difference",
        });
    }
    let mut acc = 0.0;
    for j in 0..=r {
        let sign = if (r - j).is_multiple_of(2) { 1.0 } else { -1.0 };
        acc += sign * binomial_f64(r, j) * s.values[t + j * step];
    }
    Ok(acc)
}

/// `x * sum_{k < n/x} s[t0 + k x]`.
pub fn windowed_sum(s: &TimeSeries, t0: usize, n: usize, x: usize) -> Result<f64> {
    if x == 0 || !n.is_multiple_of(x) {
        return Err(Error::NonDivisibleWindow { n, x });
    }
    if t0 + n > s.len() {
        return Err(Error::OutOfRange {
            index: t0 + n - 1,
            len: s.len(),
            what: "window end",
        });
    }
    let total: f64 = (0..n / x).map(|k| s.values[t0 + k * x]).sum();
    Ok(x as f64 * total)
}

/// Downsampled window sum plus the first `max_r` series corrections:
///
/// ```text
///     y[n; x] + sum_{r=1}^{R} F_r(x)/r! (Δ_x^(r-1) s(t0+n) - Δ_x^(r-1) s(t0)) / x^(r-1)
/// ```
///
/// The differences at the window end read samples up to
/// `t0 + n + (R-1) x`; they must exist.
pub fn corrected_sum(
    s: &TimeSeries,
    t0: usize,
    n: usize,
    x: usize,
    max_r: usize,
    family: &FrFamily,
) -> Result<f64> {
    Ok(*correction_path(s, t0, n, x, max_r, family)?.last().expect("nonempty"))
}

/// Partial corrected sums for `R = 0 ..= max_r`.
fn correction_path(
    s: &TimeSeries,
    t0: usize,
    n: usize,
    x: usize,
    max_r: usize,
    family: &FrFamily,
) -> Result<Vec<f64>> {
    let mut acc = windowed_sum(s, t0, n, x)?;
    family.require_order(max_r)?;
    if max_r > 0 {
        let last = t0 + n + (max_r - 1) * x;
        if last >= s.len() {
            return Err(Error::OutOfRange {
                index: last,
                len: s.len(),
                what: "tail samples past the window needed by the correction terms",
            });
        }
    }
    let xr = rational::int(x as i64);
    let mut path = Vec::with_capacity(max_r + 1);
    path.push(acc);
    for r in 1..=max_r {
        let coef = family.fr(r).eval(&xr)
            / (Rational::from_integer(rational::factorial(r)) * rational::pow(&xr, r - 1));
        let coef = rational::to_f64(&coef);
        let end = series_forward_diff(s, t0 + n, x, r - 1)?;
        let start = series_forward_diff(s, t0, x, r - 1)?;
        acc += coef * (end - start);
        path.push(acc);
    }
    Ok(path)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorRow {
    pub x: usize,
    pub order: usize,
    pub err: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ErrorReport {
    pub window: usize,
    /// Sorted by `(x, order)`.
    pub rows: Vec<ErrorRow>,
}

impl ErrorReport {
    pub fn err(&self, x: usize, order: usize) -> Option<f64> {
        self.rows
            .iter()
            .find(|row| row.x == x && row.order == order)
            .map(|row| row.err)
    }

    /// Uncorrected error `|y[n;1] - y[n;x]|`.
    pub fn baseline(&self, x: usize) -> Option<f64> {
        self.err(x, 0)
    }

    /// Header `x,R,err`; errors with 9 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,R,err\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{},{:.8e}", row.x, row.order, row.err);
        }
        out
    }
}

/// `err(R) = |y[n;1] - corrected_sum(R)|` for every `x` and `0 <= R <= max_r`.
pub fn error_report(
    s: &TimeSeries,
    t0: usize,
    n: usize,
    xs: &[usize],
    max_r: usize,
    family: &FrFamily,
) -> Result<ErrorReport> {
    let truth = windowed_sum(s, t0, n, 1)?;
    let mut factors = xs.to_vec();
    factors.sort_unstable();
    factors.dedup();
    let mut rows = Vec::with_capacity(factors.len() * (max_r + 1));
    for &x in &factors {
        let path = correction_path(s, t0, n, x, max_r, family)?;
        rows.extend(path.into_iter().enumerate().map(|(order, approx)| ErrorRow {
            x,
            order,
            err: (truth - approx).abs(),
        }));
    }
    Ok(ErrorReport { window: n, rows })
}

/// Euler transform `sum_k (-1)^k f(k) ~ sum_{r=0}^{R} (-1)^r Δ^r f(0) / 2^(r+1)`.
pub fn euler_accelerate(terms: &[f64], max_r: usize) -> Result<f64> {
    if terms.len() < max_r + 1 {
        return Err(Error::InsufficientTerms {
            needed: max_r + 1,
            available: terms.len(),
        });
    }
    // row holds Δ^r f(k) for k = 0.. after r passes
    let mut row: Vec<f64> = terms[..=max_r].to_vec();
    let mut acc = 0.0;
    let mut scale = 0.5;
    for r in 0..=max_r {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * row[0] * scale;
        scale *= 0.5;
        for k in 0..row.len() - 1 {
            row[k] = row[k + 1] - row[k];
        }
        row.pop();
    }
    Ok(acc)
}

/// `sum_{r=1}^{N} (-1)^(r+1) G_r / r`, which tends to Euler's constant.
pub fn gamma_series(terms: usize, table: &CoefficientTable) -> Result<f64> {
    if table.max_order() < terms {
        return Err(Error::InsufficientTable {
            needed: terms,
            available: table.max_order(),
        });
    }
    let mut acc = 0.0;
    for r in 1..=terms {
        let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
        acc += sign * rational::to_f64(&table.gregory[r]) / r as f64;
    }
    Ok(acc)
}

/// Gregory quadrature of `∫_0^n f` from unit samples:
/// `sum_{k<n} f(k) + sum_{r=1}^{R} G_r (Δ^(r-1) f(n) - Δ^(r-1) f(0))`.
pub fn gregory_integral(s: &TimeSeries, n: usize, max_r: usize, table: &CoefficientTable) -> Result<f64> {
    if table.max_order() < max_r {
        return Err(Error::InsufficientTable {
            needed: max_r,
            available: table.max_order(),
        });
    }
    let last = (n + max_r).saturating_sub(1);
    if last >= s.len() {
        return Err(Error::OutOfRange {
            index: last,
            len: s.len(),
            what: "samples needed by the Gregory end corrections",
        });
    }
    let mut acc = windowed_sum(s, 0, n, 1)?;
    for r in 1..=max_r {
        let g = rational::to_f64(&table.gregory[r]);
        acc += g * (series_forward_diff(s, n, 1, r - 1)? - series_forward_diff(s, 0, 1, r - 1)?);
    }
    Ok(acc)
}
