//! Seeded batch verification of the summation identities on random
//! polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::family::{generate_family, FrFamily};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::summation::{
    alternating_residual, corollary_residual, em_residual, gregory_residual, theorem1_residual,
    SumIdentityReport,
};

pub const DEFAULT_X_GRID: &str = "-2,-1,-1/2,1/3,1/2,1,2,3";

pub fn default_x_grid() -> Vec<Rational> {
    DEFAULT_X_GRID
        .split(',')
        .map(|s| rational::parse_rational(s).expect("static grid"))
        .collect()
}

/// Degree uniform in `0..=max_degree`; coefficients `p/q` with
/// `|p| <= 20`, `1 <= q <= 9`.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut coeffs: Vec<Rational> = (0..=degree)
        .map(|_| rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
        .collect();
    if coeffs[degree] == rational::int(0) {
        coeffs[degree] = rational::int(1);
    }
    Polynomial::new(coeffs)
}

/// Seeded generator for every batch run.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Theorem,
    Corollary,
    EulerMaclaurin,
    Gregory,
    Alternating,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Corollary => "corollary",
            Check::EulerMaclaurin => "euler-maclaurin",
            Check::Gregory => "gregory",
            Check::Alternating => "alternating",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub trial: usize,
    pub poly: Polynomial,
    pub check: Check,
    pub report: SumIdentityReport,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub x_grid: Vec<Rational>,
    pub classical: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyRun {
    pub cases: Vec<CaseResult>,
    pub trials: usize,
    pub trials_passed: usize,
}

impl VerifyRun {
    pub fn all_passed(&self) -> bool {
        self.trials_passed == self.trials
    }
}

/// Runs every check on `trials` random polynomials. Trials are generated in
/// order from one seeded stream, so results depend only on the config.
pub fn run_batch(config: &VerifyConfig) -> Result<VerifyRun> {
    let family = generate_family(config.max_degree + 1);
    run_batch_with(config, &family)
}

pub fn run_batch_with(config: &VerifyConfig, family: &FrFamily) -> Result<VerifyRun> {
    let mut rng = rng_for(config.seed);
    let mut cases = Vec::new();
    let mut trials_passed = 0;
    for trial in 0..config.trials {
        let f = random_polynomial(&mut rng, config.max_degree);
        let start = cases.len();
        for x in &config.x_grid {
            for (check, report) in [
                (Check::Theorem, theorem1_residual(&f, x, family)?),
                (Check::Corollary, corollary_residual(&f, x, family)?),
            ] {
                cases.push(CaseResult {
                    trial,
                    poly: f.clone(),
                    check,
                    report,
                });
            }
        }
        if config.classical {
            for (check, report) in [
                (Check::EulerMaclaurin, em_residual(&f, family)?),
                (Check::Gregory, gregory_residual(&f, family)?),
                (Check::Alternating, alternating_residual(&f, family)?),
            ] {
                cases.push(CaseResult {
                    trial,
                    poly: f.clone(),
                    check,
                    report,
                });
            }
        }
        if cases[start..].iter().all(|c| c.report.passed) {
            trials_passed += 1;
        }
    }
    Ok(VerifyRun {
        cases,
        trials: config.trials,
        trials_passed,
    })
}
