//! Seeded random interpolation problems for tests, benchmarks and the `generate` command.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::engine::{Problem, Site};
use crate::order::{ExponentVector, MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// `δ_θ ∘ {1}` at distinct points.
    Lagrange,
    /// Each site takes a prefix of `{1, x_i, x_i^2/2 + x_j}` at distinct points.
    Hermite,
}

/// A random rational with numerator in `-4..=4` and denominator in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

pub fn random_order<R: Rng + ?Sized>(rng: &mut R, dimension: usize) -> MonomialOrder {
    let kind = *[OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex]
        .choose(rng)
        .expect("nonempty");
    let mut precedence: Vec<usize> = (0..dimension).collect();
    precedence.shuffle(rng);
    MonomialOrder::new(kind, precedence).expect("shuffled identity is a permutation")
}

fn distinct_points<R: Rng + ?Sized>(rng: &mut R, dimension: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut points: Vec<Vec<Rational>> = Vec::with_capacity(count);
    while points.len() < count {
        let p: Vec<Rational> = (0..dimension).map(|_| random_rational(rng)).collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    points
}

/// Lagrange problem with `n` distinct points.
pub fn random_lagrange<R: Rng + ?Sized>(rng: &mut R, order: MonomialOrder, n: usize) -> Problem {
    let sites = distinct_points(rng, order.dimension(), n)
        .into_iter()
        .map(Site::lagrange)
        .collect();
    Problem::with_default_variables(order, sites).expect("valid by construction")
}

/// `{1, x_i, x_i^2/2 + x_j}` truncated to `len` conditions.
pub fn hermite_pattern(dimension: usize, i: usize, j: usize, len: usize) -> Vec<Polynomial> {
    let mut second = Polynomial::term(
        {
            let mut e = vec![0; dimension];
            e[i] = 2;
            ExponentVector::new(e)
        },
        Rational::new(1.into(), 2.into()),
    );
    second.add_scaled_assign(&Polynomial::variable(dimension, j), &Rational::from_integer(1.into()));
    [Polynomial::one(dimension), Polynomial::variable(dimension, i), second]
        .into_iter()
        .take(len)
        .collect()
}

/// Hermite problem with `n` conditions spread over distinct points.
pub fn random_hermite<R: Rng + ?Sized>(rng: &mut R, order: MonomialOrder, n: usize) -> Problem {
    let d = order.dimension();
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.gen_range(1..=left.min(3));
        sizes.push(s);
        left -= s;
    }
    let points = distinct_points(rng, d, sizes.len());
    let sites = points
        .into_iter()
        .zip(sizes)
        .map(|(point, s)| {
            let i = rng.gen_range(0..d);
            let j = rng.gen_range(0..d);
            Site::new(point, hermite_pattern(d, i, j, s)).expect("valid by construction")
        })
        .collect();
    Problem::with_default_variables(order, sites).expect("valid by construction")
}

/// Random instance with `d ∈ 1..=max_dimension`, `n ∈ 1..=max_conditions` and a random order.
pub fn random_problem<R: Rng + ?Sized>(
    rng: &mut R,
    kind: InstanceKind,
    max_dimension: usize,
    max_conditions: usize,
) -> Problem {
    let d = rng.gen_range(1..=max_dimension);
    let n = rng.gen_range(1..=max_conditions);
    let order = random_order(rng, d);
    match kind {
        InstanceKind::Lagrange => random_lagrange(rng, order, n),
        InstanceKind::Hermite => random_hermite(rng, order, n),
    }
}
