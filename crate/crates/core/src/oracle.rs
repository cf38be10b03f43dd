//! Reference computations of the minimal basis that share no code path with
//! the shift/reduce pipeline. Columns are built directly from the
//! untruncated functionals `(δ_θ ∘ P(D)) X^β`.

use std::cmp::Ordering;

use itertools::Itertools;
use num_traits::Zero;

use crate::engine::{build_matrix, degree_bound, Problem};
use crate::error::{Error, Result};
use crate::order::ExponentVector;
use crate::poly::Polynomial;
use crate::Rational;

/// Upper bound on the number of subsets [`exhaustive_minimal_basis`] will visit.
pub const MAX_SUBSETS: u128 = 1_000_000;

/// Largest total degree the greedy search enumerates: [`degree_bound`].
///
/// This is `n − 1` for D-invariant conditions, where the minimal basis is a
/// lower set of size `n`; other conditions can need higher degrees.
pub fn search_degree(problem: &Problem) -> u32 {
    degree_bound(problem)
}

/// Greedy rank extension over monomials in increasing `≺`.
///
/// Keeps `X^β` whenever its column of condition values is independent of the
/// columns kept so far. The result is the `≺`-minimal interpolating basis,
/// returned ascending.
pub fn greedy_minimal_basis(problem: &Problem) -> Result<Vec<ExponentVector>> {
    let n = problem.condition_count();
    let order = problem.order();
    let mut candidates = ExponentVector::all_up_to_degree(problem.dimension(), search_degree(problem));
    order.sort(&mut candidates);

    let mut echelon = ColumnEchelon::new(n);
    let mut chosen = Vec::with_capacity(n);
    for beta in candidates {
        let column = condition_column(problem, &beta)?;
        if echelon.insert(column) {
            chosen.push(beta);
            if chosen.len() == n {
                return Ok(chosen);
            }
        }
    }
    let last = *problem.tags().last().expect("problems are nonempty");
    Err(Error::DependentConditions { tag: last })
}

fn condition_column(problem: &Problem, beta: &ExponentVector) -> Result<Vec<Rational>> {
    let probe = Polynomial::monomial(beta.clone());
    problem
        .conditions()
        .map(|(_, theta, p)| p.functional_apply(theta, &probe))
        .collect()
}

/// Column vectors kept in echelon form, keyed by their first nonzero row.
struct ColumnEchelon {
    columns: Vec<(usize, Vec<Rational>)>,
}

impl ColumnEchelon {
    fn new(rows: usize) -> Self {
        ColumnEchelon {
            columns: Vec::with_capacity(rows),
        }
    }

    /// Adds `v` if it is independent of the stored columns.
    fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (pivot, col) in &self.columns {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = &v[*pivot] / &col[*pivot];
            for (x, c) in v.iter_mut().zip(col) {
                *x -= &f * c;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.columns.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

/// Every `n`-subset of `pool` with nonsingular `T_Δ`, minimized under the set ordering.
///
/// Fails with [`Error::PoolTooLarge`] above [`MAX_SUBSETS`] subsets.
pub fn exhaustive_minimal_basis(problem: &Problem, pool: &[ExponentVector]) -> Result<Vec<ExponentVector>> {
    let n = problem.condition_count();
    let order = problem.order();
    let pool: Vec<ExponentVector> = pool.iter().cloned().unique().collect();
    let subsets = binomial(pool.len() as u128, n as u128);
    if subsets > MAX_SUBSETS {
        return Err(Error::PoolTooLarge {
            subsets,
            limit: MAX_SUBSETS,
        });
    }
    // one matrix for the whole pool; subsets select columns
    let full = build_matrix(problem, &pool)?;
    let mut best: Option<Vec<ExponentVector>> = None;
    for cols in (0..pool.len()).combinations(n) {
        let sub = crate::matrix::Matrix::from_rows(
            (0..n)
                .map(|r| cols.iter().map(|&c| full.get(r, c).clone()).collect())
                .collect(),
        );
        if !sub.is_nonsingular() {
            continue;
        }
        let set: Vec<ExponentVector> = cols.iter().map(|&c| pool[c].clone()).collect();
        best = match best {
            None => Some(set),
            Some(b) => {
                let cmp = order.compare_sets(&set, &b)?;
                assert_ne!(cmp, Ordering::Equal, "distinct subsets never tie");
                Some(if cmp == Ordering::Less { set } else { b })
            }
        };
    }
    let mut best = best.ok_or(Error::NoBasisInPool)?;
    order.sort(&mut best);
    Ok(best)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Site;
    use crate::order::MonomialOrder;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn pt(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    fn lagrange_5_3() -> Problem {
        let sites = [[0, 0], [1, 2], [2, 1]].iter().map(|p| Site::lagrange(pt(p))).collect();
        Problem::with_default_variables(MonomialOrder::grlex(2), sites).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let expected = vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0])];
        assert_eq!(greedy_minimal_basis(&lagrange_5_3()).unwrap(), expected);

        let half_x2_y = Polynomial::from_terms(2, [(ev(&[2, 0]), q(1, 2)), (ev(&[0, 1]), q(1, 1))]).unwrap();
        let cubic = Polynomial::from_terms(
            2,
            [(ev(&[3, 0]), q(1, 6)), (ev(&[2, 0]), q(-1, 2)), (ev(&[1, 1]), q(1, 1))],
        )
        .unwrap();
        let p = Problem::with_default_variables(
            MonomialOrder::grlex(2),
            vec![Site::new(
                pt(&[0, 0]),
                vec![Polynomial::one(2), Polynomial::variable(2, 0), half_x2_y, cubic],
            )
            .unwrap()],
        )
        .unwrap();
        assert_eq!(
            greedy_minimal_basis(&p).unwrap(),
            vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0]), ev(&[1, 1])]
        );

        let single =
            Problem::with_default_variables(MonomialOrder::grlex(2), vec![Site::lagrange(pt(&[3, -1]))]).unwrap();
        assert_eq!(greedy_minimal_basis(&single).unwrap(), vec![ev(&[0, 0])]);
    }

    #[test]
    fn greedy_reports_dependence() {
        let p = Problem::with_default_variables(
            MonomialOrder::grlex(2),
            vec![Site::lagrange(pt(&[1, 1])), Site::lagrange(pt(&[1, 1]))],
        )
        .unwrap();
        assert!(matches!(
            greedy_minimal_basis(&p),
            Err(Error::DependentConditions { .. })
        ));
    }

    #[test]
    fn exhaustive_examples() {
        let p = lagrange_5_3();
        let pool = ExponentVector::all_up_to_degree(2, 2);
        assert_eq!(
            exhaustive_minimal_basis(&p, &pool).unwrap(),
            vec![ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0])]
        );

        let single =
            Problem::with_default_variables(MonomialOrder::grlex(2), vec![Site::lagrange(pt(&[0, 0]))]).unwrap();
        assert_eq!(
            exhaustive_minimal_basis(&single, &[ev(&[0, 0]), ev(&[1, 0])]).unwrap(),
            vec![ev(&[0, 0])]
        );
    }

    #[test]
    fn exhaustive_errors() {
        let p = lagrange_5_3();
        assert_eq!(
            exhaustive_minimal_basis(&p, &[ev(&[1, 0]), ev(&[0, 1]), ev(&[1, 1])]),
            Err(Error::NoBasisInPool)
        );
        let big = ExponentVector::all_up_to_degree(2, 40);
        assert!(matches!(
            exhaustive_minimal_basis(&p, &big),
            Err(Error::PoolTooLarge { .. })
        ));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(10, 4), 210);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(6, 0), 1);
    }
}
