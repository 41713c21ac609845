//! The `F_r(x)` / `F*_r(x)` polynomial families and the classical numbers
//! they contain.
//!
//! `F_r(x)` is defined by the exponential generating function
//!
//! ```text
//!     z / ((1 + x z)^(1/x) - 1) = sum_r F_r(x) z^r / r!
//! ```
//!
//! and `F*_r(x) = x^r F_r(1/x)`. At `x = 0` the constant terms are the
//! Bernoulli numbers (`B_1 = -1/2`), and `F*_r(0) / r!` are the Gregory
//! coefficients.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::series::PowerSeries;

pub const DEFAULT_MAX_ORDER: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct FrFamily {
    fr: Vec<Polynomial>,
    fr_star: Vec<Polynomial>,
}

impl FrFamily {
    /// Builds a family from explicit polynomials. `fr_star` is derived by
    /// coefficient reversal.
    pub fn from_fr(fr: Vec<Polynomial>) -> Result<Self> {
        if fr.is_empty() {
            return Err(Error::Invalid("a family needs at least F_0".into()));
        }
        for (r, p) in fr.iter().enumerate() {
            if p.degree().is_some_and(|d| d > r) {
                return Err(Error::Invalid(format!("F_{r} has degree above {r}")));
            }
        }
        let fr_star = fr.iter().enumerate().map(|(r, p)| p.reversed(r)).collect();
        Ok(FrFamily { fr, fr_star })
    }

    /// Replaces one starred polynomial without touching `F_r`; for tests
    /// that need a deliberately inconsistent family.
    pub fn with_star_override(mut self, r: usize, p: Polynomial) -> Self {
        self.fr_star[r] = p;
        self
    }

    pub fn max_order(&self) -> usize {
        self.fr.len() - 1
    }

    pub fn fr(&self, r: usize) -> &Polynomial {
        &self.fr[r]
    }

    pub fn fr_star(&self, r: usize) -> &Polynomial {
        &self.fr_star[r]
    }

    pub fn fr_all(&self) -> &[Polynomial] {
        &self.fr
    }

    pub fn fr_star_all(&self) -> &[Polynomial] {
        &self.fr_star
    }

    pub fn require_order(&self, needed: usize) -> Result<()> {
        if self.max_order() >= needed {
            Ok(())
        } else {
            Err(Error::InsufficientOrder {
                needed,
                available: self.max_order(),
            })
        }
    }
}

/// Expands the generating function symbolically in `x` up to `z^max_order`.
///
/// `(1 + x z)^(1/x)` is `exp(L)` with `L = sum_{m>=1} (-1)^(m+1) x^(m-1) z^m / m`;
/// subtracting one and dividing by `z` leaves a unit-constant series whose
/// reciprocal carries `F_r(x) / r!`.
pub fn generate_family(max_order: usize) -> FrFamily {
    let top = max_order + 1;
    let log_coeffs = (0..=top)
        .map(|m| {
            if m == 0 {
                Polynomial::zero()
            } else {
                let sign = if m % 2 == 1 { 1 } else { -1 };
                Polynomial::monomial(rational::frac(sign, m as i64), m - 1)
            }
        })
        .collect();
    let log = PowerSeries::from_coeffs(top, log_coeffs);
    let shifted = log
        .exp()
        .and_then(|e| e.sub(&PowerSeries::one(top)))
        .and_then(|d| d.div_z())
        .and_then(|d| d.reciprocal())
        .expect("generating function series is well-formed by construction");
    let fr = shifted
        .coeffs()
        .iter()
        .enumerate()
        .map(|(r, c)| c.scale(&Rational::from_integer(rational::factorial(r))))
        .collect();
    FrFamily::from_fr(fr).expect("generated polynomials have degree <= r")
}

/// Second, independent route to `F*_r`: the falling-factorial recurrence
/// `sum_{k<r} C(r,k) (x)_{r-k} F*_k = 0`, solved for its top term
/// `r x F*_{r-1}` by exact division.
pub fn fr_star_by_recurrence(max_order: usize) -> Result<Vec<Polynomial>> {
    let falling: Vec<Polynomial> = (0..=max_order + 1).map(falling_factorial_poly).collect();
    let mut star = vec![Polynomial::one()];
    for r in 2..=max_order + 1 {
        let mut acc = Polynomial::zero();
        for (k, fk) in star.iter().enumerate().take(r - 1) {
            let c = Rational::from_integer(rational::binomial(r, k));
            acc = acc + (&falling[r - k] * fk).scale(&c);
        }
        let divisor = Polynomial::monomial(rational::int(r as i64), 1);
        star.push((-acc).exact_div(&divisor)?);
    }
    Ok(star)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub bernoulli: Vec<Rational>,
    pub gregory: Vec<Rational>,
}

impl CoefficientTable {
    pub fn max_order(&self) -> usize {
        self.bernoulli.len() - 1
    }

    /// Bernoulli and Gregory numbers through `max_order` without building the
    /// symbolic family, from the Stirling-number closed forms
    ///
    /// ```text
    ///     B_n = sum_k (-1)^k k! S(n,k) / (k+1)      (second kind)
    ///     G_n = (1/n!) sum_k s(n,k) / (k+1)          (first kind, signed)
    /// ```
    ///
    /// Integer arithmetic over the common denominator `lcm(1..=n+1)`; cheap
    /// for orders in the hundreds.
    pub fn at_origin(max_order: usize) -> Self {
        let lcm = (1..=max_order + 1).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)));
        let weights: Vec<BigInt> = (0..=max_order).map(|k| &lcm / BigInt::from(k + 1)).collect();
        let denom = Rational::from_integer(lcm.clone());

        let mut first = vec![BigInt::one()];
        let mut second = vec![BigInt::one()];
        let mut bernoulli = Vec::with_capacity(max_order + 1);
        let mut gregory = Vec::with_capacity(max_order + 1);
        for n in 0..=max_order {
            if n > 0 {
                first = stirling_next(&first, |_| -BigInt::from(n - 1));
                second = stirling_next(&second, BigInt::from);
            }
            let mut g = BigInt::zero();
            let mut b = BigInt::zero();
            let mut kfact = BigInt::one();
            for k in 0..=n {
                if k > 0 {
                    kfact *= BigInt::from(k);
                }
                g += &first[k] * &weights[k];
                let term = &kfact * &second[k] * &weights[k];
                if k % 2 == 0 {
                    b += term;
                } else {
                    b -= term;
                }
            }
            bernoulli.push(Rational::from_integer(b) / &denom);
            gregory.push(Rational::from_integer(g) / (&denom * Rational::from_integer(rational::factorial(n))));
        }
        CoefficientTable { bernoulli, gregory }
    }
}

/// Next row of a Stirling triangle: `next[k] = prev[k-1] + c(k) * prev[k]`.
fn stirling_next(prev: &[BigInt], c: impl Fn(usize) -> BigInt) -> Vec<BigInt> {
    let zero = BigInt::zero();
    (0..=prev.len())
        .map(|k| {
            let left = if k > 0 { &prev[k - 1] } else { &zero };
            let here = prev.get(k).map_or_else(BigInt::zero, |p| c(k) * p);
            left + here
        })
        .collect()
}

/// `B_r = F_r(0)` and `G_r = F*_r(0) / r!`.
pub fn classical_numbers(family: &FrFamily) -> CoefficientTable {
    let zero = Rational::zero();
    let bernoulli = family.fr.iter().map(|p| p.eval(&zero)).collect();
    let gregory = family
        .fr_star
        .iter()
        .enumerate()
        .map(|(r, p)| p.eval(&zero) / Rational::from_integer(rational::factorial(r)))
        .collect();
    CoefficientTable { bernoulli, gregory }
}

/// `xi_k(x) = prod_{l=1..k} (1 - l x)`.
pub fn xi_poly(k: usize) -> Polynomial {
    (1..=k).fold(Polynomial::one(), |acc, l| {
        acc * Polynomial::new(vec![Rational::one(), rational::int(-(l as i64))])
    })
}

/// Falling factorial `(x)_m = x (x-1) ... (x-m+1)`.
pub fn falling_factorial_poly(m: usize) -> Polynomial {
    (0..m).fold(Polynomial::one(), |acc, j| {
        acc * Polynomial::new(vec![rational::int(-(j as i64)), Rational::one()])
    })
}

fn check_residual_index(family: &FrFamily, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Invalid(format!("recurrence holds for r >= 2, got r = {r}")));
    }
    family.require_order(r)
}

/// `sum_{k<r} C(r,k) (x)_{r-k} F*_k(x)`; zero for a correct family.
pub fn recurrence_residual_star(family: &FrFamily, r: usize) -> Result<Polynomial> {
    check_residual_index(family, r)?;
    Ok((0..r).fold(Polynomial::zero(), |acc, k| {
        let c = Rational::from_integer(rational::binomial(r, k));
        acc + (&falling_factorial_poly(r - k) * family.fr_star(k)).scale(&c)
    }))
}

/// `sum_{k<r} C(r,k) xi_{r-k-1}(x) F_k(x)`; zero for a correct family.
///
/// This is the falling-factorial recurrence after substituting `x -> 1/x`.
/// The index on `xi` is `r-k-1`; see [`recurrence_residual_literal`].
pub fn recurrence_residual(family: &FrFamily, r: usize) -> Result<Polynomial> {
    check_residual_index(family, r)?;
    Ok(residual_with_xi_offset(family, r, 1))
}

/// Same sum with `xi_{r-k}` instead of `xi_{r-k-1}`. This form does *not*
/// vanish (at `r = 2` it equals `x^2 - x`); it is kept so the discrepancy
/// stays visible and tested.
pub fn recurrence_residual_literal(family: &FrFamily, r: usize) -> Result<Polynomial> {
    check_residual_index(family, r)?;
    Ok(residual_with_xi_offset(family, r, 0))
}

fn residual_with_xi_offset(family: &FrFamily, r: usize, offset: usize) -> Polynomial {
    (0..r).fold(Polynomial::zero(), |acc, k| {
        let c = Rational::from_integer(rational::binomial(r, k));
        acc + (&xi_poly(r - k - offset) * family.fr(k)).scale(&c)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPoint {
    /// `x = 1/2`: `F_r(1/2) = (-1)^r r! / 4^r`.
    Half,
    /// `x = 2`: `F_r(2) = (-1)^r (2r)! / ((1-2r) r! 2^(r+1))` for `r >= 1`.
    Two,
    /// `x = 1`: root of `F_r` for `r >= 1`.
    One,
    /// `x = -1`: root of `F_r` for `r >= 2`.
    MinusOne,
}

impl SpecialPoint {
    pub fn value(self) -> Rational {
        match self {
            SpecialPoint::Half => rational::frac(1, 2),
            SpecialPoint::Two => rational::int(2),
            SpecialPoint::One => rational::int(1),
            SpecialPoint::MinusOne => rational::int(-1),
        }
    }

    /// The closed-form value the family should produce at this point.
    pub fn closed_form(self, r: usize) -> Rational {
        let sign = if r.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        match self {
            SpecialPoint::Half => {
                sign * Rational::new(rational::factorial(r), num_bigint::BigInt::from(4).pow(r as u32))
            }
            SpecialPoint::Two => {
                if r == 0 {
                    return Rational::one();
                }
                let den = rational::factorial(r)
                    * num_bigint::BigInt::from(2).pow(r as u32 + 1)
                    * num_bigint::BigInt::from(1 - 2 * r as i64);
                sign * Rational::new(rational::factorial(2 * r), den)
            }
            SpecialPoint::One => {
                if r == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            SpecialPoint::MinusOne => match r {
                0 => Rational::one(),
                1 => -Rational::one(),
                _ => Rational::zero(),
            },
        }
    }
}

pub fn special_value(family: &FrFamily, r: usize, which: SpecialPoint) -> Result<Rational> {
    family.require_order(r)?;
    Ok(family.fr(r).eval(&which.value()))
}

/// CSV with header `r,F_r_coeffs,F_r_star_coeffs,B_r,G_r`; polynomial
/// fields use the comma-separated coefficient format (quoted).
/// With `eval_at`, two more columns hold `F_r(at)` and `F*_r(at)`.
pub fn family_csv(family: &FrFamily, eval_at: Option<&Rational>) -> String {
    let table = classical_numbers(family);
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut header = vec!["r", "F_r_coeffs", "F_r_star_coeffs", "B_r", "G_r"];
    if eval_at.is_some() {
        header.extend(["F_r_at", "F_r_star_at"]);
    }
    w.write_record(&header).expect("in-memory write");
    for r in 0..=family.max_order() {
        let mut row = vec![
            r.to_string(),
            family.fr(r).to_coeff_string(),
            family.fr_star(r).to_coeff_string(),
            rational::format_rational(&table.bernoulli[r]),
            rational::format_rational(&table.gregory[r]),
        ];
        if let Some(at) = eval_at {
            row.push(rational::format_rational(&family.fr(r).eval(at)));
            row.push(rational::format_rational(&family.fr_star(r).eval(at)));
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

/// Aligned text table. `star` adds the `F*_r(x)` column.
pub fn family_table(family: &FrFamily, star: bool, eval_at: Option<&Rational>) -> String {
    let table = classical_numbers(family);
    let mut header: Vec<String> = vec!["r".into(), "F_r(x)".into()];
    if star {
        header.push("F*_r(x)".into());
    }
    header.extend(["B_r".into(), "G_r".into()]);
    if let Some(at) = eval_at {
        header.push(format!("F_r({at})"));
        if star {
            header.push(format!("F*_r({at})"));
        }
    }
    let mut rows = vec![header];
    for r in 0..=family.max_order() {
        let mut row = vec![r.to_string(), family.fr(r).to_string()];
        if star {
            row.push(family.fr_star(r).to_string());
        }
        row.push(table.bernoulli[r].to_string());
        row.push(table.gregory[r].to_string());
        if let Some(at) = eval_at {
            row.push(family.fr(r).eval(at).to_string());
            if star {
                row.push(family.fr_star(r).eval(at).to_string());
            }
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}
