//! Finite differences, indefinite sums of polynomials, and exact residuals of
//! the generalized summation identity and its classical limits.
//!
//! Every identity is checked as a polynomial in the upper limit `n`, so a
//! pass means the residual has no nonzero coefficient at all.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{classical_numbers, FrFamily};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct SumIdentityReport {
    pub residual: Polynomial,
    /// Series terms used, `deg f + 1`; later terms vanish identically.
    pub terms_used: usize,
    pub x_value: Rational,
    pub passed: bool,
}

impl SumIdentityReport {
    fn new(residual: Polynomial, terms_used: usize, x_value: Rational) -> Self {
        let passed = residual.is_zero();
        SumIdentityReport {
            residual,
            terms_used,
            x_value,
            passed,
        }
    }
}

/// `Δ_step^r f`; `r = 0` is the identity.
pub fn forward_diff(f: &Polynomial, step: &Rational, r: usize) -> Polynomial {
    let mut out = f.clone();
    for _ in 0..r {
        if out.is_zero() {
            break;
        }
        out = &out.shift(step) - &out;
    }
    out
}

/// The polynomial `S` with `S(n+1) - S(n) = f(n)` and `S(0) = 0`, so
/// `S(n) = f(0) + ... + f(n-1)` at non-negative integers.
///
/// Built top-down: the leading term `c t^d` of what is left is cancelled by
/// `c/(d+1) t^(d+1)`, whose unit difference has the same leading term.
pub fn indefinite_sum(f: &Polynomial) -> Polynomial {
    let one = Rational::one();
    let mut rest = f.clone();
    let mut sum = Polynomial::zero();
    while let Some(d) = rest.degree() {
        let term = Polynomial::monomial(rest.leading() / rational::int(d as i64 + 1), d + 1);
        rest = &rest - &forward_diff(&term, &one, 1);
        sum = sum + term;
    }
    sum
}

/// Fractional sum `sum_{k=0}^{n-1} f(k)` at any rational `n`.
pub fn frac_sum_eval(f: &Polynomial, n: &Rational) -> Rational {
    indefinite_sum(f).eval(n)
}

/// `x * sum_{k=0}^{n/x - 1} f(k x)` as a polynomial in `n`.
pub fn downsampled_sum_poly(f: &Polynomial, x: &Rational) -> Result<Polynomial> {
    if x.is_zero() {
        return Err(Error::ZeroStep);
    }
    let coarse = indefinite_sum(&f.compose_scale(x));
    Ok(coarse.compose_scale(&x.recip()).scale(x))
}

fn terms_for(f: &Polynomial) -> usize {
    f.degree().map_or(0, |d| d + 1)
}

fn endpoint_difference(p: &Polynomial) -> Polynomial {
    p - &Polynomial::constant(p.eval(&Rational::zero()))
}

/// Correction terms `F_r(x)/r! * (Δ_x^(r-1) f(n) - Δ_x^(r-1) f(0)) / x^(r-1)`
/// for `r = 1 ..= deg f + 1`, each a polynomial in `n`.
pub fn theorem1_corrections(f: &Polynomial, x: &Rational, family: &FrFamily) -> Result<Vec<Polynomial>> {
    if x.is_zero() {
        return Err(Error::ZeroStep);
    }
    let terms = terms_for(f);
    family.require_order(terms)?;
    Ok((1..=terms)
        .map(|r| {
            let coef = family.fr(r).eval(x)
                / (Rational::from_integer(rational::factorial(r)) * rational::pow(x, r - 1));
            endpoint_difference(&forward_diff(f, x, r - 1)).scale(&coef)
        })
        .collect())
}

/// `sum_{k<n} f(k) - x sum_{k<n/x} f(kx) - sum_r (correction r)`.
pub fn theorem1_residual(f: &Polynomial, x: &Rational, family: &FrFamily) -> Result<SumIdentityReport> {
    let corrections = theorem1_corrections(f, x, family)?;
    let mut residual = &indefinite_sum(f) - &downsampled_sum_poly(f, x)?;
    for c in &corrections {
        residual = residual - c;
    }
    Ok(SumIdentityReport::new(residual, corrections.len(), x.clone()))
}

/// `x sum_{k<n/x} f(kx) - sum_{k<n} f(k) - sum_r F*_r(x)/r! (Δ^(r-1) f(n) - Δ^(r-1) f(0))`.
pub fn corollary_residual(f: &Polynomial, x: &Rational, family: &FrFamily) -> Result<SumIdentityReport> {
    if x.is_zero() {
        return Err(Error::ZeroStep);
    }
    let terms = terms_for(f);
    family.require_order(terms)?;
    let one = Rational::one();
    let mut residual = &downsampled_sum_poly(f, x)? - &indefinite_sum(f);
    for r in 1..=terms {
        let coef = family.fr_star(r).eval(x) / Rational::from_integer(rational::factorial(r));
        residual = residual - endpoint_difference(&forward_diff(f, &one, r - 1)).scale(&coef);
    }
    Ok(SumIdentityReport::new(residual, terms, x.clone()))
}

/// Euler-Maclaurin correction terms `B_r/r! (f^(r-1)(n) - f^(r-1)(0))`,
/// `r = 1 ..= deg f + 1`, with `B_r = F_r(0)`.
pub fn em_corrections(f: &Polynomial, family: &FrFamily) -> Result<Vec<Polynomial>> {
    let terms = terms_for(f);
    family.require_order(terms)?;
    let bernoulli = classical_numbers(family).bernoulli;
    let mut deriv = f.clone();
    let mut out = Vec::with_capacity(terms);
    for (r, b) in bernoulli.iter().enumerate().take(terms + 1).skip(1) {
        let coef = b / Rational::from_integer(rational::factorial(r));
        out.push(endpoint_difference(&deriv).scale(&coef));
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// `sum_{k<n} f(k) - ∫_0^n f - sum_r B_r/r! (f^(r-1)(n) - f^(r-1)(0))`;
/// the `x -> 0` instance of the generalized identity.
pub fn em_residual(f: &Polynomial, family: &FrFamily) -> Result<SumIdentityReport> {
    let corrections = em_corrections(f, family)?;
    let (_, integral) = f.calculus();
    let mut residual = &indefinite_sum(f) - &integral;
    for c in &corrections {
        residual = residual - c;
    }
    Ok(SumIdentityReport::new(residual, corrections.len(), Rational::zero()))
}

/// `∫_0^n f - sum_{k<n} f(k) - sum_r G_r (Δ^(r-1) f(n) - Δ^(r-1) f(0))`
/// with `G_r = F*_r(0) / r!`.
pub fn gregory_residual(f: &Polynomial, family: &FrFamily) -> Result<SumIdentityReport> {
    let terms = terms_for(f);
    family.require_order(terms)?;
    let gregory = classical_numbers(family).gregory;
    let one = Rational::one();
    let mut residual = &f.antiderivative() - &indefinite_sum(f);
    for (r, g) in gregory.iter().enumerate().take(terms + 1).skip(1) {
        residual = residual - endpoint_difference(&forward_diff(f, &one, r - 1)).scale(g);
    }
    Ok(SumIdentityReport::new(residual, terms, Rational::zero()))
}

/// Alternating-sum identity at even `n = 2m`, as a polynomial in `m`:
///
/// ```text
///     sum_{k<2m} (-1)^k f(k) = sum_{r>=0} c_r (Δ^r f(2m) - Δ^r f(0)),
///     c_r = F*_(r+1)(2) / (r+1)!   (= (-1)^(r+1) / 2^(r+1))
/// ```
///
/// The left side is `sum_{j<m} (f(2j) - f(2j+1))`.
pub fn alternating_residual(f: &Polynomial, family: &FrFamily) -> Result<SumIdentityReport> {
    let terms = terms_for(f);
    family.require_order(terms)?;
    let one = Rational::one();
    let two = rational::int(2);
    let even = f.compose_scale(&two);
    let odd = even.shift(&rational::frac(1, 2));
    let mut residual = indefinite_sum(&(&even - &odd));
    for r in 0..terms {
        let coef = family.fr_star(r + 1).eval(&two) / Rational::from_integer(rational::factorial(r + 1));
        let diff = endpoint_difference(&forward_diff(f, &one, r).compose_scale(&two));
        residual = residual - diff.scale(&coef);
    }
    Ok(SumIdentityReport::new(residual, terms, two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generate_family;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn forward_diff_examples() {
        assert_eq!(forward_diff(&p("0,0,1"), &int(2), 1), p("4,4"));
        let f = p("3,-1/2,7");
        assert_eq!(forward_diff(&f, &frac(5, 3), 0), f);
        assert!(forward_diff(&p("0,1"), &int(9), 2).is_zero());
        assert!(forward_diff(&f, &int(0), 1).is_zero());
    }

    #[test]
    fn indefinite_sum_examples() {
        assert_eq!(indefinite_sum(&p("0,1")), p("0,-1/2,1/2"));
        assert_eq!(indefinite_sum(&p("1")), p("0,1"));
        assert_eq!(indefinite_sum(&p("0,0,1")), p("0,1/6,-1/2,1/3"));
        assert!(indefinite_sum(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn frac_sum_examples() {
        assert_eq!(frac_sum_eval(&p("0,1"), &frac(1, 2)), frac(-1, 8));
        assert_eq!(frac_sum_eval(&p("0,0,1"), &int(3)), int(5));
        assert_eq!(frac_sum_eval(&p("1"), &frac(22, 7)), frac(22, 7));
    }

    #[test]
    fn downsampled_examples() {
        assert_eq!(downsampled_sum_poly(&p("0,1"), &int(2)).unwrap(), p("0,-1,1/2"));
        assert_eq!(downsampled_sum_poly(&p("0,1"), &int(1)).unwrap(), p("0,-1/2,1/2"));
        assert_eq!(downsampled_sum_poly(&p("1"), &frac(-3, 7)).unwrap(), p("0,1"));
        assert!(matches!(downsampled_sum_poly(&p("1"), &int(0)), Err(Error::ZeroStep)));
    }

    #[test]
    fn master_identity_examples() {
        let fam = generate_family(8);
        let f = p("0,1");
        let rep = theorem1_residual(&f, &int(2), &fam).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.terms_used, 2);
        // spot value n = 4: 6 = 4 + 2
        let n = int(4);
        assert_eq!(downsampled_sum_poly(&f, &int(2)).unwrap().eval(&n), int(4));
        assert_eq!(theorem1_corrections(&f, &int(2), &fam).unwrap()[0].eval(&n), int(2));

        let g = p("2,-1,1/3,5");
        assert!(theorem1_residual(&g, &int(1), &fam).unwrap().passed);
        assert!(theorem1_corrections(&g, &int(1), &fam).unwrap().iter().all(Polynomial::is_zero));
        assert!(theorem1_residual(&p("0,0,1"), &frac(1, 2), &fam).unwrap().passed);
    }

    #[test]
    fn master_identity_errors() {
        let fam = generate_family(2);
        assert!(matches!(theorem1_residual(&p("0,1"), &int(0), &fam), Err(Error::ZeroStep)));
        assert!(matches!(
            theorem1_residual(&p("0,0,0,1"), &int(2), &fam),
            Err(Error::InsufficientOrder { needed: 4, available: 2 })
        ));
    }

    #[test]
    fn corollary_examples() {
        let fam = generate_family(8);
        assert!(corollary_residual(&p("0,1"), &int(2), &fam).unwrap().passed);
        assert!(corollary_residual(&p("4,-3,1/2,2,9"), &int(1), &fam).unwrap().passed);
        assert!(corollary_residual(&p("0,0,0,1"), &frac(1, 3), &fam).unwrap().passed);
    }

    #[test]
    fn corrupted_family_fails_identity() {
        let fam = generate_family(4);
        let mut fr = fam.fr_all().to_vec();
        fr[2] = p("1/6,0,1/6");
        let bad = FrFamily::from_fr(fr).unwrap();
        let rep = theorem1_residual(&p("0,0,1"), &int(3), &bad).unwrap();
        assert!(!rep.passed);
        assert!(!rep.residual.is_zero());
    }

    #[test]
    fn classical_limit_examples() {
        let fam = generate_family(8);
        for f in ["0,0,1", "1", "0,0,0,0,1"] {
            assert!(em_residual(&p(f), &fam).unwrap().passed, "em {f}");
        }
        for f in ["0,1", "1", "0,0,0,1"] {
            assert!(gregory_residual(&p(f), &fam).unwrap().passed, "gregory {f}");
        }
        for f in ["0,1", "1", "0,0,1"] {
            assert!(alternating_residual(&p(f), &fam).unwrap().passed, "alternating {f}");
        }
    }

    #[test]
    fn em_hand_expansion_for_squares() {
        let fam = generate_family(3);
        let c = em_corrections(&p("0,0,1"), &fam).unwrap();
        assert_eq!(c, vec![p("0,0,-1/2"), p("0,1/6"), Polynomial::zero()]);
    }

    #[test]
    fn alternating_linear_by_hand() {
        // f = k: left side is -m
        let f = p("0,1");
        let even = f.compose_scale(&int(2));
        let odd = even.shift(&frac(1, 2));
        assert_eq!(indefinite_sum(&(&even - &odd)), p("0,-1"));
    }

    #[test]
    fn series_truncation_is_exact() {
        let f = p("1,2,3,4,5");
        for x in [int(2), frac(-1, 2), frac(1, 3)] {
            for r in 6..10 {
                assert!(forward_diff(&f, &x, r - 1).is_zero());
            }
            assert!(!forward_diff(&f, &x, 4).is_zero());
        }
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-20i64..=20, 1i64..=9), 0..=max_deg + 1)
            .prop_map(|v| Polynomial::new(v.into_iter().map(|(n, d)| frac(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn summation_inverts_difference(f in arb_poly(10)) {
            prop_assert_eq!(forward_diff(&indefinite_sum(&f), &Rational::one(), 1), f);
        }

        #[test]
        fn indefinite_sum_is_linear(f in arb_poly(6), g in arb_poly(6),
                                    a in (-9i64..9, 1i64..5), b in (-9i64..9, 1i64..5)) {
            let (a, b) = (frac(a.0, a.1), frac(b.0, b.1));
            let lhs = indefinite_sum(&(&f.scale(&a) + &g.scale(&b)));
            let rhs = &indefinite_sum(&f).scale(&a) + &indefinite_sum(&g).scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn frac_sum_matches_literal_sum(f in arb_poly(6), n in 0u32..=50) {
            let literal = (0..n).fold(Rational::zero(), |acc, k| acc + f.eval(&int(k as i64)));
            prop_assert_eq!(frac_sum_eval(&f, &int(n as i64)), literal);
        }
    }
}
