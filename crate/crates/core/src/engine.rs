//! Interpolation problems and the minimal-basis pipeline.
//!
//! Every condition `δ_θ ∘ P(D)` is moved to the origin as `e^{θ·X} P`
//! truncated at total degree `cap`, the resulting list is brought into
//! "reverse" reduced form, and the least monomials of the reduced polynomials
//! are read off as the basis. The basis is then certified by checking that
//! `T_Δ`, built from the untruncated conditions, is nonsingular.
//!
//! Truncation is exact once `cap` reaches [`degree_bound`], which is `n − 1`
//! for conditions that come from D-invariant local spaces. That is the
//! starting cap. For graded orders a smaller cap is exact whenever it
//! certifies, so [`minimal_basis_with_cap`] may start lower and doubles the
//! cap after each failure (a zero pivot, an empty truncation, a singular
//! `T_Δ`). A failure at the bound means the conditions are dependent.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::order::{ExponentVector, MonomialOrder};
use crate::poly::Polynomial;
use crate::reduce::{coefficient_matrix, reverse_reduce};
use crate::shift::shift_condition;
use crate::Rational;

/// Position of a condition: site index and condition index within the site, both 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConditionTag {
    pub site: usize,
    pub condition: usize,
}

impl fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "site {}, condition {}", self.site, self.condition)
    }
}

/// Conditions `δ_θ ∘ {P_1(D), …, P_s(D)}` at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Site {
    point: Vec<Rational>,
    conditions: Vec<Polynomial>,
}

impl Site {
    pub fn new(point: Vec<Rational>, conditions: Vec<Polynomial>) -> Result<Self> {
        if conditions.is_empty() {
            return Err(Error::InvalidProblem("a site needs at least one condition".into()));
        }
        for p in &conditions {
            if p.dimension() != point.len() {
                return Err(Error::DimensionMismatch {
                    expected: point.len(),
                    found: p.dimension(),
                });
            }
            if p.is_zero() {
                return Err(Error::InvalidProblem("zero polynomial used as a condition".into()));
            }
        }
        Ok(Site { point, conditions })
    }

    /// Plain evaluation `δ_θ`.
    pub fn lagrange(point: Vec<Rational>) -> Self {
        let d = point.len();
        Site {
            point,
            conditions: vec![Polynomial::one(d)],
        }
    }

    pub fn point(&self) -> &[Rational] {
        &self.point
    }

    pub fn conditions(&self) -> &[Polynomial] {
        &self.conditions
    }

    pub fn is_origin(&self) -> bool {
        self.point.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    variables: Vec<String>,
    order: MonomialOrder,
    sites: Vec<Site>,
}

impl Problem {
    pub fn new(variables: Vec<String>, order: MonomialOrder, sites: Vec<Site>) -> Result<Self> {
        let d = variables.len();
        if d == 0 {
            return Err(Error::InvalidProblem("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::InvalidProblem(format!("duplicate variable `{v}`")));
            }
        }
        if order.dimension() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: order.dimension(),
            });
        }
        if sites.is_empty() {
            return Err(Error::EmptyProblem);
        }
        for s in &sites {
            if s.point.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: s.point.len(),
                });
            }
        }
        Ok(Problem {
            variables,
            order,
            sites,
        })
    }

    /// Uses `x, y, z` for up to three variables and `x1, x2, …` beyond.
    pub fn with_default_variables(order: MonomialOrder, sites: Vec<Site>) -> Result<Self> {
        Self::new(default_variables(order.dimension()), order, sites)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn dimension(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// Same conditions under a different ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(self.variables.clone(), order, self.sites.clone())
    }

    pub fn with_sites(&self, sites: Vec<Site>) -> Result<Self> {
        Self::new(self.variables.clone(), self.order.clone(), sites)
    }

    /// `n`, the total number of conditions.
    pub fn condition_count(&self) -> usize {
        self.sites.iter().map(|s| s.conditions.len()).sum()
    }

    pub fn max_condition_degree(&self) -> u32 {
        self.conditions().filter_map(|(_, _, p)| p.degree()).max().unwrap_or(0)
    }

    /// Conditions flattened in site order, then condition order.
    pub fn conditions(&self) -> impl Iterator<Item = (ConditionTag, &[Rational], &Polynomial)> {
        self.sites.iter().enumerate().flat_map(|(si, s)| {
            s.conditions.iter().enumerate().map(move |(ci, p)| {
                (
                    ConditionTag {
                        site: si,
                        condition: ci,
                    },
                    s.point.as_slice(),
                    p,
                )
            })
        })
    }

    pub fn tags(&self) -> Vec<ConditionTag> {
        self.conditions().map(|(t, _, _)| t).collect()
    }
}

pub fn default_variables(dimension: usize) -> Vec<String> {
    if dimension <= 3 {
        ["x", "y", "z"][..dimension].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=dimension).map(|i| format!("x{i}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisResult {
    /// The minimal basis, ascending in `≺`.
    pub basis: Vec<ExponentVector>,
    /// Reverse reduced shifted conditions `q`, in flattened condition order.
    pub reduced: Vec<Polynomial>,
    /// Origin of each entry of `reduced`.
    pub condition_tags: Vec<ConditionTag>,
    /// Truncation degree of the successful attempt.
    pub cap_used: u32,
}

impl BasisResult {
    /// `lm(q_i)` in reduction order.
    pub fn least_monomials(&self, order: &MonomialOrder) -> Vec<ExponentVector> {
        self.reduced
            .iter()
            .map(|q| {
                q.least_monomial(order)
                    .expect("reduced polynomials are nonzero")
                    .clone()
            })
            .collect()
    }

    /// `(δ_0 ∘ q_i(D)) lm(q_j)` with rows and columns in reduction order.
    ///
    /// Upper triangular with a nonzero diagonal for a reverse reduced system.
    pub fn reduction_matrix(&self, order: &MonomialOrder) -> Matrix {
        let lms = self.least_monomials(order);
        let d = order.dimension();
        let origin = vec![Rational::zero(); d];
        let mut m = Matrix::zeros(self.reduced.len(), lms.len());
        for (i, q) in self.reduced.iter().enumerate() {
            for (j, lm) in lms.iter().enumerate() {
                let v = q
                    .functional_apply(&origin, &Polynomial::monomial(lm.clone()))
                    .expect("dimensions agree");
                m.set(i, j, v);
            }
        }
        m
    }
}

/// Computes the `≺`-minimal monomial interpolating basis.
pub fn minimal_basis(problem: &Problem) -> Result<BasisResult> {
    minimal_basis_with_cap(problem, None)
}

/// As [`minimal_basis`], starting from `initial_cap` instead of [`degree_bound`].
///
/// The override is honoured for graded orders only: there every monomial of
/// degree `≤ cap` precedes every higher one, so a certified truncated result
/// is the minimal basis. Other orders start at the bound regardless.
pub fn minimal_basis_with_cap(problem: &Problem, initial_cap: Option<u32>) -> Result<BasisResult> {
    if problem.condition_count() == 0 {
        return Err(Error::EmptyProblem);
    }
    let limit = max_cap(problem);
    let mut cap = match initial_cap {
        Some(c) if problem.order().kind().is_graded() => c,
        Some(c) => c.max(limit),
        None => limit,
    };
    loop {
        let failed_at = match attempt(problem, cap) {
            Ok(result) => return Ok(result),
            Err(tag) => tag,
        };
        if cap >= limit {
            return Err(Error::DependentConditions { tag: failed_at });
        }
        cap = cap.saturating_mul(2).max(cap + 1).min(limit);
    }
}

/// Largest truncation degree tried before reporting dependence; equal to [`degree_bound`].
pub fn max_cap(problem: &Problem) -> u32 {
    degree_bound(problem)
}

/// Upper bound on the total degree of every monomial in the minimal basis.
///
/// Let `N` be the sum over sites of the dimension of the span of all
/// derivatives of the site's conditions. Those functionals form a
/// D-invariant space containing ours, whose kernel is an ideal; its minimal
/// basis is therefore a lower set of size at most `N` and contains our
/// minimal basis. A lower set of size `N` has no monomial of degree `N` or
/// more, so the bound is `N − 1`. D-invariant conditions give `N = n`.
pub fn degree_bound(problem: &Problem) -> u32 {
    let d = problem.dimension();
    let closure: usize = problem
        .sites()
        .iter()
        .map(|site| {
            let derivatives: Vec<Polynomial> = site
                .conditions()
                .iter()
                .flat_map(|p| {
                    let deg = p.degree().unwrap_or(0);
                    ExponentVector::all_up_to_degree(d, deg)
                        .into_iter()
                        .filter_map(move |alpha| {
                            let dp = Polynomial::monomial(alpha).diff_apply(p).expect("dimensions agree");
                            (!dp.is_zero()).then_some(dp)
                        })
                })
                .collect();
            coefficient_matrix(&derivatives).expect("dimensions agree").rank()
        })
        .sum();
    closure.saturating_sub(1) as u32
}

/// Shifts every condition to the origin at truncation degree `cap`.
pub fn shifted_conditions(problem: &Problem, cap: u32) -> std::result::Result<Vec<Polynomial>, (ConditionTag, Error)> {
    problem
        .conditions()
        .map(|(tag, theta, p)| shift_condition(p, theta, cap).map_err(|e| (tag, e)))
        .collect()
}

fn attempt(problem: &Problem, cap: u32) -> std::result::Result<BasisResult, ConditionTag> {
    let tags = problem.tags();
    let shifted = shifted_conditions(problem, cap).map_err(|(tag, _)| tag)?;
    let order = problem.order();
    let reduced = reverse_reduce(&shifted, order).map_err(|e| match e {
        Error::ZeroPivot(k) => tags[k],
        _ => *tags.last().expect("nonempty"),
    })?;
    let mut basis: Vec<ExponentVector> = reduced
        .iter()
        .map(|q| {
            q.least_monomial(order)
                .expect("reduced polynomials are nonzero")
                .clone()
        })
        .collect();
    order.sort(&mut basis);
    // a singular T_Δ cannot be blamed on one condition
    match is_interpolating_basis(problem, &basis) {
        Ok(true) => Ok(BasisResult {
            basis,
            reduced,
            condition_tags: tags,
            cap_used: cap,
        }),
        _ => Err(*tags.last().expect("nonempty")),
    }
}

/// `T_Δ`: rows are the conditions in flattened order, columns the given monomials.
///
/// Entries are `(δ_θ ∘ P(D)) X^β`, computed exactly without any series.
pub fn build_matrix(problem: &Problem, monomials: &[ExponentVector]) -> Result<Matrix> {
    for m in monomials {
        problem.order().check_dimension(m)?;
    }
    let columns: Vec<Polynomial> = monomials.iter().cloned().map(Polynomial::monomial).collect();
    let rows: Vec<Vec<Rational>> = problem
        .conditions()
        .map(|(_, theta, p)| columns.iter().map(|c| p.functional_apply(theta, c)).collect())
        .collect::<Result<_>>()?;
    let mut m = Matrix::zeros(problem.condition_count(), monomials.len());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// True iff `T_Δ` is nonsingular for these `n` monomials.
pub fn is_interpolating_basis(problem: &Problem, monomials: &[ExponentVector]) -> Result<bool> {
    let n = problem.condition_count();
    if monomials.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: monomials.len(),
        });
    }
    Ok(build_matrix(problem, monomials)?.is_nonsingular())
}

/// Solves `T_Δ c = values` and returns `g = Σ c_j X^{β_j}`.
///
/// `values` follow the flattened condition order. Without an explicit
/// `basis` the minimal basis is used.
pub fn interpolate(problem: &Problem, values: &[Rational], basis: Option<&[ExponentVector]>) -> Result<Polynomial> {
    let n = problem.condition_count();
    if values.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: values.len(),
        });
    }
    let computed;
    let basis = match basis {
        Some(b) => b,
        None => {
            computed = minimal_basis(problem)?.basis;
            &computed
        }
    };
    if basis.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: basis.len(),
        });
    }
    let coefficients = build_matrix(problem, basis)?
        .solve(values)
        .ok_or(Error::SingularBasis)?;
    Polynomial::from_terms(problem.dimension(), basis.iter().cloned().zip(coefficients))
}

/// `(δ_θ ∘ P(D)) g − f` for every condition.
pub fn residuals(problem: &Problem, g: &Polynomial, values: &[Rational]) -> Result<Vec<Rational>> {
    problem
        .conditions()
        .zip(values)
        .map(|((_, theta, p), f)| Ok(p.functional_apply(theta, g)? - f))
        .collect()
}
