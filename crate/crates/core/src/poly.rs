//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::{ExponentVector, MonomialOrder};
use crate::Rational;

/// `Σ c_α X^α` with no zero coefficient stored.
///
/// The zero polynomial is the empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dimension: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(dimension: usize) -> Self {
        Polynomial {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dimension: usize) -> Self {
        Self::constant(dimension, Rational::one())
    }

    pub fn constant(dimension: usize, c: Rational) -> Self {
        Self::term(ExponentVector::one(dimension), c)
    }

    /// `c · X^α`.
    pub fn term(monomial: ExponentVector, c: Rational) -> Self {
        let mut p = Polynomial::zero(monomial.dimension());
        if !c.is_zero() {
            p.terms.insert(monomial, c);
        }
        p
    }

    pub fn monomial(monomial: ExponentVector) -> Self {
        Self::term(monomial, Rational::one())
    }

    pub fn variable(dimension: usize, var: usize) -> Self {
        Self::monomial(ExponentVector::variable(dimension, var))
    }

    /// Builds a polynomial from possibly repeated terms, combining like terms.
    pub fn from_terms<I>(dimension: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Polynomial::zero(dimension);
        for (m, c) in terms {
            if m.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: m.dimension(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, monomial: &ExponentVector) -> Option<&Rational> {
        self.terms.get(monomial)
    }

    /// Terms sorted by decreasing `≺`.
    pub fn terms_descending(&self, order: &MonomialOrder) -> Vec<(&ExponentVector, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// `lm(P)`, the `≺`-least monomial with nonzero coefficient.
    pub fn least_monomial(&self, order: &MonomialOrder) -> Result<&ExponentVector> {
        self.check_order(order)?;
        order.min(self.terms.keys()).ok_or(Error::ZeroPolynomial)
    }

    /// `LM(P)`, the `≺`-greatest monomial with nonzero coefficient.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<&ExponentVector> {
        self.check_order(order)?;
        order.max(self.terms.keys()).ok_or(Error::ZeroPolynomial)
    }

    fn check_order(&self, order: &MonomialOrder) -> Result<()> {
        check_dims(self.dimension, order.dimension())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dims(self.dimension, other.dimension)?;
        let mut out = self.clone();
        out.add_scaled_assign(other, &Rational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dims(self.dimension, other.dimension)?;
        let mut out = self.clone();
        out.add_scaled_assign(other, &-Rational::one());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dimension);
        }
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_truncated(other, u32::MAX)
    }

    /// The part of `self · other` of total degree at most `cap`.
    pub fn mul_truncated(&self, other: &Polynomial, cap: u32) -> Result<Polynomial> {
        check_dims(self.dimension, other.dimension)?;
        let mut out = Polynomial::zero(self.dimension);
        for (a, ca) in &self.terms {
            let da = a.degree();
            for (b, cb) in &other.terms {
                if da.saturating_add(b.degree()) <= cap {
                    out.add_term(a.mul(b), ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Drops every term of total degree greater than `cap`.
    pub fn truncate(&self, cap: u32) -> Polynomial {
        Polynomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `self += c · other`, dropping cancelled terms. Dimensions must match.
    pub fn add_scaled_assign(&mut self, other: &Polynomial, c: &Rational) {
        debug_assert_eq!(self.dimension, other.dimension);
        if c.is_zero() {
            return;
        }
        for (m, b) in &other.terms {
            self.add_term(m.clone(), b * c);
        }
    }

    fn add_term(&mut self, m: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Applies the differential operator `self(D)` to `q`.
    ///
    /// `D^α X^β = (β! / (β − α)!) X^(β − α)` when `α ≤ β`, and 0 otherwise.
    pub fn diff_apply(&self, q: &Polynomial) -> Result<Polynomial> {
        check_dims(self.dimension, q.dimension)?;
        let mut out = Polynomial::zero(self.dimension);
        for (alpha, a) in &self.terms {
            for (beta, b) in &q.terms {
                if let Some(rest) = beta.checked_div(alpha) {
                    let ff = falling_factorial(beta, alpha);
                    out.add_term(rest, a * b * Rational::from_integer(ff));
                }
            }
        }
        Ok(out)
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        check_dims(self.dimension, point.len())?;
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= x.pow(e as i32);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// `(δ_θ ∘ self(D)) q`: differentiate `q` by `self(D)`, then evaluate at `theta`.
    pub fn functional_apply(&self, theta: &[Rational], q: &Polynomial) -> Result<Rational> {
        check_dims(self.dimension, theta.len())?;
        self.diff_apply(q)?.eval(theta)
    }

    /// Divides by the coefficient of `lm(P)` so that it becomes 1.
    pub fn monic_at_least(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let lm = self.least_monomial(order)?;
        let c = self.terms[lm].clone();
        Ok(self.scale(&c.recip()))
    }
}

/// `∏ β_i! / (β_i − α_i)!` for `α ≤ β`.
fn falling_factorial(beta: &ExponentVector, alpha: &ExponentVector) -> BigInt {
    let mut acc = BigInt::one();
    for (&b, &a) in beta.exponents().iter().zip(alpha.exponents()) {
        for k in (b - a + 1)..=b {
            acc *= k;
        }
    }
    acc
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `Λ{P_1, …, P_n}`: every monomial occurring with a nonzero coefficient.
pub fn support(polys: &[Polynomial]) -> Result<BTreeSet<ExponentVector>> {
    let mut out = BTreeSet::new();
    if let Some(first) = polys.first() {
        for p in polys {
            check_dims(first.dimension, p.dimension)?;
            out.extend(p.terms.keys().cloned());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(terms: &[(&[u32], i64, i64)]) -> Polynomial {
        let d = terms.first().map_or(2, |t| t.0.len());
        Polynomial::from_terms(d, terms.iter().map(|(e, n, den)| (ev(e), q(*n, *den)))).unwrap()
    }

    // x^3/6 + xy + y over (x, y)
    fn section2_poly() -> Polynomial {
        poly(&[(&[3, 0], 1, 6), (&[1, 1], 1, 1), (&[0, 1], 1, 1)])
    }

    #[test]
    fn support_examples() {
        let p = [
            Polynomial::one(2),
            Polynomial::variable(2, 0),
            poly(&[(&[2, 0], 1, 2), (&[0, 1], 1, 1)]),
        ];
        let s = support(&p).unwrap();
        let expected: BTreeSet<_> = [ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1]), ev(&[2, 0])].into();
        assert_eq!(s, expected);

        assert!(support(&[Polynomial::zero(2)]).unwrap().is_empty());
        let s = support(&[section2_poly()]).unwrap();
        assert_eq!(s, [ev(&[3, 0]), ev(&[1, 1]), ev(&[0, 1])].into());

        assert!(support(&[Polynomial::one(2), Polynomial::one(3)]).is_err());
    }

    #[test]
    fn least_and_leading_monomial() {
        let o = MonomialOrder::grlex(2);
        let p = section2_poly();
        assert_eq!(p.least_monomial(&o).unwrap(), &ev(&[0, 1]));
        assert_eq!(p.leading_monomial(&o).unwrap(), &ev(&[3, 0]));

        let single = Polynomial::term(ev(&[2, 5]), q(-3, 7));
        assert_eq!(single.least_monomial(&o).unwrap(), &ev(&[2, 5]));

        assert_eq!(Polynomial::zero(2).least_monomial(&o), Err(Error::ZeroPolynomial));
        assert_eq!(Polynomial::zero(2).leading_monomial(&o), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_examples() {
        let x = Polynomial::variable(2, 0);
        assert!(x.add(&x.neg()).unwrap().is_zero());

        let x2y = poly(&[(&[1, 0], 1, 1), (&[0, 1], 2, 1)]);
        let sq = x2y.mul(&x2y).unwrap();
        assert_eq!(sq, poly(&[(&[2, 0], 1, 1), (&[1, 1], 4, 1), (&[0, 2], 4, 1)]));

        let p = poly(&[(&[0], 1, 1), (&[1], 1, 1), (&[2], 1, 1), (&[3], 1, 1)]);
        assert_eq!(p.truncate(2), poly(&[(&[0], 1, 1), (&[1], 1, 1), (&[2], 1, 1)]));

        assert!(x.add(&Polynomial::one(3)).is_err());
        assert!(x.mul(&Polynomial::one(1)).is_err());
        assert!(x.scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn diff_apply_examples() {
        let x = Polynomial::variable(2, 0);
        let xy = Polynomial::monomial(ev(&[1, 1]));
        assert_eq!(x.diff_apply(&xy).unwrap(), Polynomial::variable(2, 1));

        // D^α X^α = α!
        let a = Polynomial::monomial(ev(&[3, 2]));
        assert_eq!(a.diff_apply(&a).unwrap(), Polynomial::constant(2, q(12, 1)));

        let b = Polynomial::monomial(ev(&[2, 4]));
        assert!(a.diff_apply(&b).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        let pt = [q(1, 1), q(2, 1)];
        assert_eq!(Polynomial::one(2).eval(&pt).unwrap(), q(1, 1));
        let x2y = poly(&[(&[1, 0], 1, 1), (&[0, 1], 2, 1)]);
        assert_eq!(x2y.eval(&pt).unwrap(), q(5, 1));
        assert_eq!(Polynomial::zero(2).eval(&pt).unwrap(), q(0, 1));
        assert!(x2y.eval(&[q(1, 1)]).is_err());
    }

    #[test]
    fn functional_apply_examples() {
        let origin = [q(0, 1), q(0, 1)];
        let one = Polynomial::one(2);
        assert_eq!(one.functional_apply(&origin, &one).unwrap(), q(1, 1));

        let dx = Polynomial::variable(2, 0);
        let xy = Polynomial::monomial(ev(&[1, 1]));
        assert_eq!(dx.functional_apply(&[q(1, 1), q(2, 1)], &xy).unwrap(), q(2, 1));

        let half_dx2_dy = poly(&[(&[2, 0], 1, 2), (&[0, 1], 1, 1)]);
        let y = Polynomial::variable(2, 1);
        assert_eq!(half_dx2_dy.functional_apply(&origin, &y).unwrap(), q(1, 1));
    }

    fn factorial(e: &ExponentVector) -> Rational {
        let mut acc = BigInt::one();
        for &k in e.exponents() {
            for i in 1..=k {
                acc *= i;
            }
        }
        Rational::from_integer(acc)
    }

    #[test]
    fn origin_functional_is_scaled_kronecker_delta() {
        for d in 1..=3 {
            let origin = vec![Rational::zero(); d];
            let monos = ExponentVector::all_up_to_degree(d, 4);
            for a in &monos {
                let pa = Polynomial::monomial(a.clone());
                for b in &monos {
                    let v = pa.functional_apply(&origin, &Polynomial::monomial(b.clone())).unwrap();
                    let expected = if a == b { factorial(b) } else { Rational::zero() };
                    assert_eq!(v, expected, "α={a:?} β={b:?}");
                }
            }
        }
    }

    fn arb_poly(d: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, d), -4i64..=4, 1i64..=3), 0..5).prop_map(
            move |ts| {
                Polynomial::from_terms(d, ts.into_iter().map(|(e, n, den)| (ExponentVector::new(e), q(n, den))))
                    .unwrap()
            },
        )
    }

    fn arb_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
        (1usize..=3).prop_flat_map(|d| (arb_poly(d), arb_poly(d), arb_poly(d)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.sub(&a).unwrap().is_zero());
            prop_assert!(a.mul(&b).unwrap().terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn diff_apply_linear_and_compositional((a, b, q) in arb_triple(), n in -3i64..=3) {
            let c = Rational::from_integer(n.into());
            // linear in the operator and in the operand
            prop_assert_eq!(
                a.add(&b.scale(&c)).unwrap().diff_apply(&q).unwrap(),
                a.diff_apply(&q).unwrap().add(&b.diff_apply(&q).unwrap().scale(&c)).unwrap()
            );
            prop_assert_eq!(
                q.diff_apply(&a.add(&b.scale(&c)).unwrap()).unwrap(),
                q.diff_apply(&a).unwrap().add(&q.diff_apply(&b).unwrap().scale(&c)).unwrap()
            );
            // (AB)(D) = A(D) ∘ B(D)
            prop_assert_eq!(
                a.mul(&b).unwrap().diff_apply(&q).unwrap(),
                a.diff_apply(&b.diff_apply(&q).unwrap()).unwrap()
            );
        }

        #[test]
        fn mul_truncated_matches_truncate_of_mul((a, b, _c) in arb_triple(), cap in 0u32..5) {
            prop_assert_eq!(a.mul_truncated(&b, cap).unwrap(), a.mul(&b).unwrap().truncate(cap));
        }
    }
}
