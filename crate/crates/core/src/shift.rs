//! Moving conditions at a point `θ` to the origin:
//! `δ_θ ∘ P(D) = δ_0 ∘ e^{θ·D} P(D)`, with the exponential series truncated
//! by total degree. Conditions already at the origin are left untouched.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::ExponentVector;
use crate::poly::Polynomial;
use crate::Rational;

/// `Σ_{j=0}^{cap} (θ·X)^j / j!` expanded into monomials.
pub fn exp_series(theta: &[Rational], cap: u32) -> Polynomial {
    let d = theta.len();
    let linear = Polynomial::from_terms(
        d,
        theta
            .iter()
            .enumerate()
            .map(|(i, t)| (ExponentVector::variable(d, i), t.clone())),
    )
    .expect("dimensions agree by construction");

    let mut sum = Polynomial::one(d);
    if linear.is_zero() {
        return sum;
    }
    let mut term = Polynomial::one(d);
    for j in 1..=cap {
        term = term
            .mul_truncated(&linear, cap)
            .expect("dimensions agree by construction")
            .scale(&Rational::new(1.into(), j.into()));
        sum.add_scaled_assign(&term, &Rational::from_integer(1.into()));
    }
    sum
}

/// The degree-`≤ cap` part of `e^{θ·X} · P`, or `P` itself when `θ = 0`.
///
/// Fails with [`Error::ZeroAfterTruncation`] when nothing survives, which
/// means `cap` is below the least total degree occurring in `P`.
pub fn shift_condition(p: &Polynomial, theta: &[Rational], cap: u32) -> Result<Polynomial> {
    if theta.len() != p.dimension() {
        return Err(Error::DimensionMismatch {
            expected: p.dimension(),
            found: theta.len(),
        });
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if theta.iter().all(Zero::is_zero) {
        // The shift is the identity; truncating would only lose information.
        return Ok(p.clone());
    }
    let shifted = exp_series(theta, cap).mul_truncated(p, cap)?;
    if shifted.is_zero() {
        return Err(Error::ZeroAfterTruncation { cap });
    }
    Ok(shifted)
}
