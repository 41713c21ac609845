//! Truncated formal power series in `z`.
//!
//! Coefficients are generic so the same algebra runs with polynomial
//! coefficients (fully symbolic in `x`) or with plain rationals (a fixed
//! numeric `x`). Truncation order is part of the value; combining series of
//! different orders is an error.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Ring operations a series coefficient needs.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Coefficient for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
}

/// Terms `z^0 ..= z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    order: usize,
    coeffs: Vec<C>,
}

/// Series whose coefficients are polynomials in `x`.
pub type PowerSeries = Series<Polynomial>;

impl<C: Coefficient> Series<C> {
    /// Pads with zeros up to `order`; terms beyond `order` are dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(order, vec![C::one()])
    }

    /// The series `z` (just `0` at order 0).
    pub fn z(order: usize) -> Self {
        Self::from_coeffs(order, vec![C::zero(), C::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &C {
        &self.coeffs[r]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut coeffs = vec![C::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(Series {
            order: self.order,
            coeffs,
        })
    }

    /// Requires a constant term of exactly one.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.order + 1);
        out.push(C::one());
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
                }
            }
            out.push(acc.scale(&-<Rational as One>::one()));
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// `exp(a)` from `E' = a' E`, i.e. `n e_n = sum_k k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.order + 1);
        out.push(C::one());
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let term = self.coeffs[k].mul(&out[n - k]).scale(&rational::int(k as i64));
                    acc = acc.add(&term);
                }
            }
            out.push(acc.scale(&rational::frac(1, n as i64)));
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }

    /// Divides by `z`, dropping the constant term; the order drops by one.
    pub fn div_z(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::Invalid("cannot divide an order-0 series by z".into()));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(Series {
            order: self.order - 1,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}
