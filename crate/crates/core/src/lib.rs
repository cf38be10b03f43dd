//! Minimal monomial interpolating bases for multivariate Lagrange and
//! Hermite interpolation over the rationals.
//!
//! An interpolation problem is a list of sites, each a point `θ` with
//! conditions `δ_θ ∘ P(D)` (differentiate by `P(D)`, evaluate at `θ`).
//! [`minimal_basis`] returns the `≺`-minimal set of monomials `T` for which
//! every data vector has a unique interpolant in `span T`:
//!
//! ```
//! use minterp_core::{minimal_basis, parse_polynomial, MonomialOrder, Problem, Rational, Site};
//!
//! let vars: Vec<String> = vec!["x".into(), "y".into()];
//! let point = |a: i64, b: i64| vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())];
//! let one = parse_polynomial("1", &vars).unwrap();
//! let sites = vec![
//!     Site::new(point(0, 0), vec![one.clone()]).unwrap(),
//!     Site::new(point(1, 2), vec![one.clone()]).unwrap(),
//!     Site::new(point(2, 1), vec![one]).unwrap(),
//! ];
//! let problem = Problem::new(vars, MonomialOrder::grlex(2), sites).unwrap();
//! let result = minimal_basis(&problem).unwrap();
//! assert_eq!(result.basis.len(), 3); // {1, y, x}
//! ```
//!
//! All arithmetic is exact; [`oracle`] holds independent reference
//! computations used to cross-check the main pipeline.

pub mod engine;
pub mod error;
pub mod instances;
pub mod matrix;
pub mod oracle;
pub mod order;
pub mod parser;
pub mod poly;
pub mod reduce;
pub mod shift;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub use engine::{
    build_matrix, degree_bound, interpolate, is_interpolating_basis, minimal_basis, minimal_basis_with_cap, residuals,
    BasisResult, ConditionTag, Problem, Site,
};
pub use error::{Error, ParseError, Result};
pub use matrix::Matrix;
pub use oracle::{exhaustive_minimal_basis, greedy_minimal_basis};
pub use order::{is_lower_set, ExponentVector, MonomialOrder, OrderKind};
pub use parser::{format_monomial, format_polynomial, parse_monomial, parse_polynomial, parse_rational};
pub use poly::{support, Polynomial};
pub use reduce::{is_reduced, is_reverse_reduced, reverse_reduce};
pub use shift::{exp_series, shift_condition};
