//! Exact real-root counting with Sturm sequences.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Outward widening applied to an endpoint that is itself a root.
pub fn endpoint_epsilon() -> Rational {
    rational::frac(1, 1024)
}

/// `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = seq.last().expect("nonempty");
        let (_, rem) = prev.div_rem(&next).expect("nonzero divisor");
        seq.push(next);
        next = -rem;
    }
    seq
}

fn sign_changes(seq: &[Polynomial], at: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval(at))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
///
/// An endpoint that is a root is moved outward once by
/// [`endpoint_epsilon`], so a root sitting exactly on the boundary is
/// counted. If the widened endpoint is still a root, this fails.
pub fn count_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Invalid("cannot count roots of the zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::Invalid(format!("empty interval ({lo}, {hi})")));
    }
    let eps = endpoint_epsilon();
    let widen = |at: &Rational, delta: Rational| -> Result<Rational> {
        if !p.eval(at).is_zero() {
            return Ok(at.clone());
        }
        let moved = at + delta;
        if p.eval(&moved).is_zero() {
            Err(Error::EndpointIsRoot { at: moved.to_string() })
        } else {
            Ok(moved)
        }
    };
    let lo = widen(lo, -eps.clone())?;
    let hi = widen(hi, eps)?;
    let seq = sturm_sequence(p);
    Ok(sign_changes(&seq, &lo) - sign_changes(&seq, &hi))
}
