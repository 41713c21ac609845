//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Ascending coefficient vector; `coeffs[i]` multiplies `t^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `q(t) = p(t + step)`, expanded with the binomial theorem.
    pub fn shift(&self, step: &Rational) -> Self {
        let n = self.coeffs.len();
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * step))
            .take(n)
            .collect();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let c = Rational::from_integer(rational::binomial(i, j));
                *slot += a * c * &powers[i - j];
            }
        }
        Self::new(out)
    }

    /// `q(t) = p(c * t)`.
    pub fn compose_scale(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// Coefficient reversal padded to `degree`: `t^degree * p(1/t)`.
    pub fn reversed(&self, degree: usize) -> Self {
        assert!(
            self.degree().is_none_or(|d| d <= degree),
            "reversal degree below polynomial degree"
        );
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, Rational::zero());
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        self.compose_scale(&-Rational::one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * rational::int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::zero());
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a / rational::int(i as i64 + 1)),
        );
        Self::new(out)
    }

    /// `(derivative, antiderivative)`.
    pub fn calculus(&self) -> (Self, Self) {
        (self.derivative(), self.antiderivative())
    }

    pub fn div_rem(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = den.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Quotient of an exact division; fails if the remainder is nonzero.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Comma-separated ascending coefficients, e.g. `0,-1/6,0,1/6`.
    /// The zero polynomial is written `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(rational::format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Invalid("empty polynomial coefficient list".into()));
        }
        let coeffs = s
            .split(',')
            .map(rational::parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Human-readable form in descending powers, e.g. `-19/30 x^4 + 2/3 x^2 - 1/30`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 if show_mag => f.write_str(" x")?,
                1 => f.write_str("x")?,
                _ if show_mag => write!(f, " x^{i}")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn zip_with(a: &Polynomial, b: &Polynomial, op: impl Fn(&Rational, &Rational) -> Rational) -> Polynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = Rational::zero();
    Polynomial::new(
        (0..n)
            .map(|i| {
                op(
                    a.coeffs.get(i).unwrap_or(&zero),
                    b.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect(),
    )
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("1/6,0,-1/6").eval(&int(2)), frac(-1, 2));
        assert_eq!(Polynomial::one().eval(&frac(7, 3)), int(1));
        assert_eq!(p("0,-1/4,0,1/4").eval(&int(1)), int(0));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("0,0,1").shift(&int(2)), p("4,4,1"));
        assert_eq!(p("0,1").shift(&frac(1, 3)), p("1/3,1"));
        assert_eq!(p("5/7").shift(&int(-9)), p("5/7"));
    }

    #[test]
    fn calculus_examples() {
        assert_eq!(p("0,0,1").calculus(), (p("0,2"), p("0,0,0,1/3")));
        assert_eq!(p("1").calculus(), (Polynomial::zero(), p("0,1")));
        assert_eq!(p("0,-1,0,1").calculus(), (p("-1,0,3"), p("0,0,-1/2,0,1/4")));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("-1,0,1").exact_div(&p("-1,1")).unwrap(), p("1,1"));
        assert_eq!(p("0,-1,1").exact_div(&p("0,1")).unwrap(), p("-1,1"));
        assert!(matches!(
            p("1,0,1").exact_div(&p("-1,1")),
            Err(Error::NonExactDivision)
        ));
        assert!(matches!(
            p("1,1").exact_div(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn normalization_and_text_format() {
        assert_eq!(p("1,2,0,0").degree(), Some(1));
        assert!(p("0,0").is_zero());
        assert_eq!(p("0,-2/12,0,1/6").to_coeff_string(), "0,-1/6,0,1/6");
        assert_eq!(Polynomial::zero().to_coeff_string(), "0");
        assert!("1,,2".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p("-1/30,0,2/3,0,-19/30").to_string(), "-19/30 x^4 + 2/3 x^2 - 1/30");
        assert_eq!(p("0,1,1").to_string(), "x^2 + x");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn reversal_pads_to_degree() {
        assert_eq!(p("0,-1,0,1").reversed(3), p("1,0,-1"));
        assert_eq!(p("1").reversed(2), p("0,0,1"));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..12).prop_map(|(n, d)| frac(n, d))
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 0..max_len).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn rational_field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let s = &a * &b - &c;
            // reduced form: gcd(num, den) = 1 and den > 0
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
            prop_assert!(s.denom().is_positive());
        }

        #[test]
        fn shift_composes(f in arb_poly(8), a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(f.shift(&a).shift(&b), f.shift(&(&a + &b)));
        }

        #[test]
        fn derivative_inverts_antiderivative(f in arb_poly(10)) {
            prop_assert_eq!(f.antiderivative().derivative(), f);
        }

        #[test]
        fn div_rem_reconstructs(f in arb_poly(8), g in arb_poly(5)) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.div_rem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree() < g.degree() || r.is_zero());
        }

        #[test]
        fn text_format_roundtrips(f in arb_poly(8)) {
            prop_assert_eq!(f.to_coeff_string().parse::<Polynomial>().unwrap(), f);
        }
    }
}
