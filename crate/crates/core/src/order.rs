//! Exponent vectors, monomial orderings and comparisons between monomial sets.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// The exponent vector `α` of a monomial `X^α`.
///
/// The derived `Ord` is plain lexicographic comparison of the raw vector and is
/// only used for storage; monomial orderings go through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The monomial `1` in `dimension` variables.
    pub fn one(dimension: usize) -> Self {
        ExponentVector(vec![0; dimension])
    }

    /// The monomial `x_var`.
    pub fn variable(dimension: usize, var: usize) -> Self {
        let mut e = vec![0; dimension];
        e[var] = 1;
        ExponentVector(e)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Monomial product `X^α · X^β`.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.dimension(), other.dimension());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `β − α` when `α ≤ β` componentwise.
    pub fn checked_div(&self, divisor: &ExponentVector) -> Option<ExponentVector> {
        debug_assert_eq!(self.dimension(), divisor.dimension());
        self.0
            .iter()
            .zip(&divisor.0)
            .map(|(b, a)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// All exponent vectors of `dimension` variables with total degree at most `max_degree`.
    pub fn all_up_to_degree(dimension: usize, max_degree: u32) -> Vec<ExponentVector> {
        fn fill(prefix: &mut Vec<u32>, remaining: usize, budget: u32, out: &mut Vec<ExponentVector>) {
            if remaining == 0 {
                out.push(ExponentVector(prefix.clone()));
                return;
            }
            for e in 0..=budget {
                prefix.push(e);
                fill(prefix, remaining - 1, budget - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        fill(&mut Vec::with_capacity(dimension), dimension, max_degree, &mut out);
        out
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl OrderKind {
    pub fn is_graded(self) -> bool {
        !matches!(self, OrderKind::Lex)
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::InvalidOrder(format!(
                "unknown order kind `{other}` (expected lex, grlex or grevlex)"
            ))),
        }
    }
}

/// A monomial ordering `≺` on `d` variables.
///
/// `precedence[0]` is the most significant variable, so `grlex(y ≺ x)` over
/// variables `(x, y)` has precedence `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= precedence.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!(
                    "precedence {precedence:?} is not a permutation of 0..{}",
                    precedence.len()
                )));
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    /// `kind` with variable 0 most significant, then 1, and so on.
    pub fn natural(kind: OrderKind, dimension: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (0..dimension).collect(),
        }
    }

    pub fn lex(dimension: usize) -> Self {
        Self::natural(OrderKind::Lex, dimension)
    }

    pub fn grlex(dimension: usize) -> Self {
        Self::natural(OrderKind::Grlex, dimension)
    }

    pub fn grevlex(dimension: usize) -> Self {
        Self::natural(OrderKind::Grevlex, dimension)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn dimension(&self) -> usize {
        self.precedence.len()
    }

    /// Compares two monomials, checking dimensions.
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        self.check_dimension(a)?;
        self.check_dimension(b)?;
        Ok(self.cmp(a, b))
    }

    /// Compares two monomials of matching dimension.
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.dimension(), self.dimension());
        debug_assert_eq!(b.dimension(), self.dimension());
        let (a, b) = (a.exponents(), b.exponents());
        let lex = || {
            self.precedence
                .iter()
                .map(|&v| a[v].cmp(&b[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Grlex => total(a).cmp(&total(b)).then_with(lex),
            OrderKind::Grevlex => total(a).cmp(&total(b)).then_with(|| {
                // smaller exponent in the least significant differing variable wins
                self.precedence
                    .iter()
                    .rev()
                    .map(|&v| b[v].cmp(&a[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    pub fn check_dimension(&self, a: &ExponentVector) -> Result<()> {
        if a.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: a.dimension(),
            });
        }
        Ok(())
    }

    pub fn max<'a, I: IntoIterator<Item = &'a ExponentVector>>(&self, it: I) -> Option<&'a ExponentVector> {
        it.into_iter().max_by(|a, b| self.cmp(a, b))
    }

    pub fn min<'a, I: IntoIterator<Item = &'a ExponentVector>>(&self, it: I) -> Option<&'a ExponentVector> {
        it.into_iter().min_by(|a, b| self.cmp(a, b))
    }

    /// Sorts ascending with respect to `≺`.
    pub fn sort(&self, monomials: &mut [ExponentVector]) {
        monomials.sort_by(|a, b| self.cmp(a, b));
    }

    /// Compares two monomial sets: `T1 ≺ T2` iff `max(T1 − T2) ≺ max(T2 − T1)`.
    ///
    /// When one difference is empty the set with the nonempty difference is
    /// the greater one, so a proper subset compares `Less`. Inputs are treated
    /// as sets; duplicates are ignored.
    pub fn compare_sets(&self, t1: &[ExponentVector], t2: &[ExponentVector]) -> Result<Ordering> {
        for m in t1.iter().chain(t2) {
            self.check_dimension(m)?;
        }
        let s1: HashSet<&ExponentVector> = t1.iter().collect();
        let s2: HashSet<&ExponentVector> = t2.iter().collect();
        let max1 = self.max(s1.difference(&s2).copied());
        let max2 = self.max(s2.difference(&s1).copied());
        Ok(match (max1, max2) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => self.cmp(a, b),
        })
    }
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// True iff `set` is closed under taking divisors.
pub fn is_lower_set(set: &[ExponentVector]) -> bool {
    let members: HashSet<&ExponentVector> = set.iter().collect();
    set.iter().all(|m| {
        (0..m.dimension()).filter(|&i| m.exponents()[i] > 0).all(|i| {
            let mut e = m.exponents().to_vec();
            e[i] -= 1;
            members.contains(&ExponentVector(e))
        })
    })
}
