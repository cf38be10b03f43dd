//! "Reverse" reduced bases: linearly independent polynomials whose least
//! monomials do not occur in any later polynomial of the list.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::order::{ExponentVector, MonomialOrder};
use crate::poly::{support, Polynomial};

/// Transforms linearly independent polynomials into a "reverse" reduced basis.
///
/// Step `k` takes the current `q_k`, normalizes it to be monic at its least
/// monomial `β_k`, and cancels the `X^β_k` coefficient of every later
/// polynomial by subtracting a multiple of `q_k`. Earlier pivots stay absent
/// from later polynomials because `q_k` no longer contains them. The result
/// keeps the input order: `q_k = c·(P_k − Σ_{i<k} b_i P_i)`.
///
/// Returns [`Error::ZeroPivot`] with the 0-based index of the first
/// polynomial that reduces to zero, i.e. that depends on its predecessors.
pub fn reverse_reduce(polys: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    check_dimensions(polys, order)?;
    let mut work = polys.to_vec();
    for k in 0..work.len() {
        if work[k].is_zero() {
            return Err(Error::ZeroPivot(k));
        }
        let pivot = work[k].monic_at_least(order)?;
        let beta = pivot.least_monomial(order)?.clone();
        for later in &mut work[k + 1..] {
            if let Some(b) = later.coefficient(&beta).cloned() {
                later.add_scaled_assign(&pivot, &-b);
            }
        }
        work[k] = pivot;
    }
    Ok(work)
}

/// `lm(P_i) ∉ Λ{P_j}` for all `i < j`, plus linear independence.
pub fn is_reverse_reduced(polys: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    check_dimensions(polys, order)?;
    if polys.iter().any(Polynomial::is_zero) {
        return Ok(false);
    }
    let lms = polys
        .iter()
        .map(|p| p.least_monomial(order).cloned())
        .collect::<Result<Vec<_>>>()?;
    Ok(pivots_clear_later(polys, &lms) && is_linearly_independent(polys)?)
}

/// `LM(P_i) ∉ Λ{P_j}` for all `i < j`, plus linear independence.
pub fn is_reduced(polys: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    check_dimensions(polys, order)?;
    if polys.iter().any(Polynomial::is_zero) {
        return Ok(false);
    }
    let lms = polys
        .iter()
        .map(|p| p.leading_monomial(order).cloned())
        .collect::<Result<Vec<_>>>()?;
    Ok(pivots_clear_later(polys, &lms) && is_linearly_independent(polys)?)
}

fn pivots_clear_later(polys: &[Polynomial], pivots: &[ExponentVector]) -> bool {
    pivots
        .iter()
        .enumerate()
        .all(|(i, m)| polys[i + 1..].iter().all(|p| p.coefficient(m).is_none()))
}

/// Exact rank of the coefficient matrix over the joint support equals the count.
pub fn is_linearly_independent(polys: &[Polynomial]) -> Result<bool> {
    Ok(coefficient_matrix(polys)?.rank() == polys.len())
}

/// Rows are the polynomials, columns the monomials of `Λ{polys}`.
pub fn coefficient_matrix(polys: &[Polynomial]) -> Result<Matrix> {
    let columns: Vec<ExponentVector> = support(polys)?.into_iter().collect();
    Ok(coefficient_matrix_over(polys, &columns))
}

pub(crate) fn coefficient_matrix_over(polys: &[Polynomial], columns: &[ExponentVector]) -> Matrix {
    let mut m = Matrix::zeros(polys.len(), columns.len());
    for (r, p) in polys.iter().enumerate() {
        for (c, mono) in columns.iter().enumerate() {
            if let Some(v) = p.coefficient(mono) {
                m.set(r, c, v.clone());
            }
        }
    }
    m
}

/// Rank of `a ∪ b` stacked, used to compare spans.
pub fn joint_rank(a: &[Polynomial], b: &[Polynomial]) -> Result<usize> {
    let all: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    Ok(coefficient_matrix(&all)?.rank())
}

fn check_dimensions(polys: &[Polynomial], order: &MonomialOrder) -> Result<()> {
    for p in polys {
        if p.dimension() != order.dimension() {
            return Err(Error::DimensionMismatch {
                expected: order.dimension(),
                found: p.dimension(),
            });
        }
    }
    Ok(())
}

/// The multiset of least monomials, sorted for comparison.
pub fn least_monomial_set(polys: &[Polynomial], order: &MonomialOrder) -> Result<BTreeSet<ExponentVector>> {
    polys.iter().map(|p| p.least_monomial(order).cloned()).collect()
}
