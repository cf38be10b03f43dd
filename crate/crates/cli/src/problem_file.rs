//! JSON problem files.
//!
//! ```json
//! {
//!   "variables": ["x", "y"],
//!   "order": { "kind": "grlex", "precedence": ["x", "y"] },
//!   "sites": [
//!     { "point": ["0", "0"], "conditions": ["1", "x", "1/2*x^2 + y"] },
//!     { "point": ["1", "2"], "conditions": ["1", "x"] }
//!   ],
//!   "values": ["1", "0", "2", "-1/3", "5"]
//! }
//! ```
//!
//! Rationals are strings (`"1/2"`); plain JSON integers are also accepted.
//! `precedence` lists variables most significant first and defaults to the
//! order of `variables`.

use minterp_core::{parse_polynomial, parse_rational, MonomialOrder, OrderKind, Problem, Rational, Site};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub order: OrderSpec,
    pub sites: Vec<SiteSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<RationalText>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    pub kind: String,
    #[serde(default)]
    pub precedence: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteSpec {
    pub point: Vec<RationalText>,
    pub conditions: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    fn parse(&self, context: &str) -> Result<Rational, CliError> {
        match self {
            RationalText::Integer(i) => Ok(Rational::from_integer((*i).into())),
            RationalText::Text(s) => parse_rational(s).map_err(|e| CliError::input(format!("{context}: {e}"))),
        }
    }
}

impl From<&Rational> for RationalText {
    fn from(r: &Rational) -> Self {
        RationalText::Text(r.to_string())
    }
}

/// Command-line overrides applied on top of the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub order: Option<String>,
    pub precedence: Option<Vec<String>>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("problem file: {e}")))
    }

    pub fn to_problem(&self, overrides: &Overrides) -> Result<Problem, CliError> {
        let vars = &self.variables;
        let kind_text = overrides.order.as_deref().unwrap_or(&self.order.kind);
        let kind: OrderKind = kind_text
            .parse()
            .map_err(|e| CliError::input(format!("order.kind: {e}")))?;
        let names = overrides.precedence.as_ref().unwrap_or(&self.order.precedence);
        let precedence = if names.is_empty() {
            (0..vars.len()).collect()
        } else {
            names
                .iter()
                .map(|n| {
                    vars.iter()
                        .position(|v| v == n)
                        .ok_or_else(|| CliError::input(format!("order.precedence: unknown variable `{n}`")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        if precedence.len() != vars.len() {
            return Err(CliError::input(format!(
                "order.precedence: expected {} variables, found {}",
                vars.len(),
                precedence.len()
            )));
        }
        let order = MonomialOrder::new(kind, precedence).map_err(|e| CliError::input(format!("order: {e}")))?;

        let mut sites = Vec::with_capacity(self.sites.len());
        for (si, s) in self.sites.iter().enumerate() {
            if s.point.len() != vars.len() {
                return Err(CliError::input(format!(
                    "sites[{si}].point: expected {} coordinates, found {}",
                    vars.len(),
                    s.point.len()
                )));
            }
            let point = s
                .point
                .iter()
                .enumerate()
                .map(|(k, r)| r.parse(&format!("sites[{si}].point[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let conditions = s
                .conditions
                .iter()
                .enumerate()
                .map(|(ci, text)| {
                    parse_polynomial(text, vars)
                        .map_err(|e| CliError::input(format!("sites[{si}].conditions[{ci}] `{text}`: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            sites.push(Site::new(point, conditions).map_err(|e| CliError::input(format!("sites[{si}]: {e}")))?);
        }
        Problem::new(vars.clone(), order, sites).map_err(|e| CliError::input(format!("problem: {e}")))
    }

    /// Data values in flattened condition order; `n` is checked against the problem.
    pub fn values(&self, n: usize) -> Result<Option<Vec<Rational>>, CliError> {
        let Some(values) = &self.values else { return Ok(None) };
        if values.len() != n {
            return Err(CliError::input(format!(
                "values: expected {n} entries, found {}",
                values.len()
            )));
        }
        values
            .iter()
            .enumerate()
            .map(|(i, v)| v.parse(&format!("values[{i}]")))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    /// Inverse of [`ProblemFile::to_problem`], used by `generate`.
    pub fn from_problem(problem: &Problem, values: Option<&[Rational]>) -> Self {
        let vars = problem.variables().to_vec();
        let order = problem.order();
        ProblemFile {
            order: OrderSpec {
                kind: order.kind().to_string(),
                precedence: order.precedence().iter().map(|&i| vars[i].clone()).collect(),
            },
            sites: problem
                .sites()
                .iter()
                .map(|s| SiteSpec {
                    point: s.point().iter().map(RationalText::from).collect(),
                    conditions: s
                        .conditions()
                        .iter()
                        .map(|p| minterp_core::format_polynomial(p, &vars, order))
                        .collect(),
                })
                .collect(),
            values: values.map(|v| v.iter().map(RationalText::from).collect()),
            variables: vars,
        }
    }
}
