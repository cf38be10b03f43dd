//! Subcommand implementations. Each returns a [`Report`] holding both the
//! human-readable text and its JSON mirror.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use minterp_core::instances::{
    random_hermite, random_lagrange, random_order, random_problem, random_rational, InstanceKind,
};
use minterp_core::parser::{format_matrix, format_operator, format_point, format_rational};
use minterp_core::{
    build_matrix, format_monomial, format_polynomial, greedy_minimal_basis, interpolate as solve, minimal_basis,
    minimal_basis_with_cap, parse_monomial, residuals, BasisResult, Error, ExponentVector, MonomialOrder, Problem,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::problem_file::{Overrides, ProblemFile};
use crate::{CliError, Report};

/// `grlex(y ≺ x)`: the kind plus variables from least to most significant.
fn order_label(order: &MonomialOrder, vars: &[String]) -> String {
    let names: Vec<&str> = order.precedence().iter().rev().map(|&i| vars[i].as_str()).collect();
    format!("{}({})", order.kind(), names.join(" ≺ "))
}

fn order_json(order: &MonomialOrder, vars: &[String]) -> Value {
    json!({
        "kind": order.kind().to_string(),
        "precedence": order.precedence().iter().map(|&i| vars[i].as_str()).collect::<Vec<_>>(),
    })
}

fn monomials(ms: &[ExponentVector], vars: &[String]) -> Vec<String> {
    ms.iter().map(|m| format_monomial(m, vars)).collect()
}

fn compute(problem: &Problem, cap: Option<u32>) -> Result<BasisResult, CliError> {
    Ok(minimal_basis_with_cap(problem, cap)?)
}

pub fn basis(file: &ProblemFile, overrides: &Overrides, cap: Option<u32>) -> Result<Report, CliError> {
    let problem = file.to_problem(overrides)?;
    let result = compute(&problem, cap)?;
    let vars = problem.variables();
    let order = problem.order();
    let basis = monomials(&result.basis, vars);
    let lms = result.least_monomials(order);

    let mut text = String::new();
    let _ = writeln!(text, "order: {}", order_label(order, vars));
    let _ = writeln!(text, "basis: {}", basis.join(", "));
    let _ = writeln!(text, "cap used: {}", result.cap_used);
    let _ = writeln!(text, "reduced conditions:");
    let mut reduced = Vec::new();
    for ((q, tag), lm) in result.reduced.iter().zip(&result.condition_tags).zip(&lms) {
        let poly = format_polynomial(q, vars, order);
        let lm = format_monomial(lm, vars);
        let _ = writeln!(text, "  [{tag}] lm = {lm}: {poly}");
        reduced.push(json!({
            "site": tag.site,
            "condition": tag.condition,
            "least_monomial": lm,
            "polynomial": poly,
        }));
    }
    let json = json!({
        "command": "basis",
        "variables": vars,
        "order": order_json(order, vars),
        "conditions": problem.condition_count(),
        "basis": basis,
        "cap_used": result.cap_used,
        "reduced": reduced,
    });
    Ok(Report { text, json, exit: 0 })
}

pub fn interpolate(file: &ProblemFile, overrides: &Overrides, cap: Option<u32>) -> Result<Report, CliError> {
    let problem = file.to_problem(overrides)?;
    let values = file
        .values(problem.condition_count())?
        .ok_or_else(|| CliError::input("interpolate needs a `values` list in the problem file"))?;
    let result = compute(&problem, cap)?;
    let g = solve(&problem, &values, Some(&result.basis))?;
    let r = residuals(&problem, &g, &values)?;
    if let Some(i) = r.iter().position(|v| !v.is_zero()) {
        // Unreachable for a certified basis; reported rather than asserted so the CLI never panics.
        return Err(CliError {
            exit: 2,
            kind: "NonzeroResidual",
            message: format!("residual {i} is {} instead of 0", format_rational(&r[i])),
            tag: problem.tags().get(i).copied(),
        });
    }

    let vars = problem.variables();
    let order = problem.order();
    let basis = monomials(&result.basis, vars);
    let interpolant = format_polynomial(&g, vars, order);
    let coefficients: Vec<Value> = result
        .basis
        .iter()
        .zip(&basis)
        .map(|(m, name)| json!({ "monomial": name, "coefficient": g.coefficient(m).map_or_else(|| "0".to_string(), format_rational) }))
        .collect();

    let mut text = String::new();
    let _ = writeln!(text, "order: {}", order_label(order, vars));
    let _ = writeln!(text, "basis: {}", basis.join(", "));
    let _ = writeln!(text, "interpolant: {interpolant}");
    let _ = writeln!(text, "residuals: exact (all {} are 0)", r.len());
    let json = json!({
        "command": "interpolate",
        "variables": vars,
        "order": order_json(order, vars),
        "basis": basis,
        "coefficients": coefficients,
        "interpolant": interpolant,
        "residual_check": "exact",
    });
    Ok(Report { text, json, exit: 0 })
}

pub fn verify(file: &ProblemFile, overrides: &Overrides, args: &[String]) -> Result<Report, CliError> {
    let problem = file.to_problem(overrides)?;
    let vars = problem.variables();
    let order = problem.order();
    let ms = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|s| !s.is_empty())
        .map(|s| parse_monomial(s, vars).map_err(|e| CliError::input(format!("monomial `{s}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let n = problem.condition_count();
    if ms.len() != n {
        return Err(CliError::input(format!("expected {n} monomials, found {}", ms.len())));
    }
    let matrix = build_matrix(&problem, &ms)?;
    let nonsingular = matrix.is_nonsingular();

    let rows: Vec<String> = problem
        .conditions()
        .map(|(_, theta, p)| format!("δ_{} ∘ {{{}}}", format_point(theta), format_operator(p, vars, order)))
        .collect();
    let cols = monomials(&ms, vars);
    let mut text = format_matrix(&matrix, &rows, &cols);
    let _ = writeln!(text, "rank: {}", matrix.rank());
    let _ = writeln!(
        text,
        "{{{}}} is {}an interpolating basis",
        cols.join(", "),
        if nonsingular { "" } else { "not " }
    );
    let json = json!({
        "command": "verify",
        "variables": vars,
        "monomials": cols,
        "rows": rows,
        "matrix": matrix.to_rows().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "rank": matrix.rank(),
        "nonsingular": nonsingular,
    });
    Ok(Report { text, json, exit: 0 })
}

/// A basis or the reason none was found, comparable across engine and oracle.
#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Basis(Vec<ExponentVector>),
    Dependent,
    Failed(String),
}

impl Outcome {
    fn from_result(r: Result<Vec<ExponentVector>, Error>) -> Self {
        match r {
            Ok(b) => Outcome::Basis(b),
            Err(Error::DependentConditions { .. }) => Outcome::Dependent,
            Err(e) => Outcome::Failed(e.to_string()),
        }
    }

    fn describe(&self, vars: &[String]) -> (String, Value) {
        match self {
            Outcome::Basis(b) => {
                let names = monomials(b, vars);
                (names.join(", "), json!({ "basis": names }))
            }
            Outcome::Dependent => ("DependentConditions".into(), json!({ "error": "DependentConditions" })),
            Outcome::Failed(m) => (format!("error: {m}"), json!({ "error": m })),
        }
    }
}

pub fn check(file: &ProblemFile, overrides: &Overrides, cap: Option<u32>) -> Result<Report, CliError> {
    let problem = file.to_problem(overrides)?;
    let (engine, oracle) = std::thread::scope(|s| {
        let oracle = s.spawn(|| Outcome::from_result(greedy_minimal_basis(&problem)));
        let engine = Outcome::from_result(minimal_basis_with_cap(&problem, cap).map(|r| r.basis));
        (
            engine,
            oracle
                .join()
                .unwrap_or_else(|_| Outcome::Failed("oracle panicked".into())),
        )
    });
    let agree = engine == oracle && !matches!(engine, Outcome::Failed(_));
    // Agreement on dependence is still a mathematical failure of the problem.
    let exit = if !agree || engine == Outcome::Dependent { 2 } else { 0 };

    let vars = problem.variables();
    let (engine_text, engine_json) = engine.describe(vars);
    let (oracle_text, oracle_json) = oracle.describe(vars);
    let text = format!(
        "engine: {engine_text}\noracle: {oracle_text}\n{}\n",
        if agree { "agree" } else { "DISAGREE" }
    );
    let json = json!({
        "command": "check",
        "variables": vars,
        "order": order_json(problem.order(), vars),
        "engine": engine_json,
        "oracle": oracle_json,
        "agree": agree,
    });
    Ok(Report { text, json, exit })
}

pub fn generate(
    seed: u64,
    kind: InstanceKind,
    dim: Option<usize>,
    conditions: Option<usize>,
    with_values: bool,
) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = dim.unwrap_or_else(|| rng.gen_range(1..=3));
    let n = conditions.unwrap_or_else(|| rng.gen_range(1..=8));
    let order = random_order(&mut rng, d);
    let problem = match kind {
        InstanceKind::Lagrange => random_lagrange(&mut rng, order, n),
        InstanceKind::Hermite => random_hermite(&mut rng, order, n),
    };
    let values: Option<Vec<_>> = with_values.then(|| (0..n).map(|_| random_rational(&mut rng)).collect());
    let file = ProblemFile::from_problem(&problem, values.as_deref());
    let json = serde_json::to_value(&file).expect("problem files serialize");
    let text = serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n";
    Ok(Report { text, json, exit: 0 })
}

pub fn bench(seed: u64, count: usize, max_conditions: usize) -> Result<Report, CliError> {
    if max_conditions == 0 {
        return Err(CliError::input("--max-conditions must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (name, kind) in [("lagrange", InstanceKind::Lagrange), ("hermite", InstanceKind::Hermite)] {
        let problems: Vec<Problem> = (0..count)
            .map(|_| random_problem(&mut rng, kind, 3, max_conditions))
            .collect();
        let (mut engine_time, mut oracle_time) = (Duration::ZERO, Duration::ZERO);
        for p in &problems {
            let t = Instant::now();
            let e = minimal_basis(p).map(|r| r.basis);
            engine_time += t.elapsed();
            let t = Instant::now();
            let o = greedy_minimal_basis(p);
            oracle_time += t.elapsed();
            if e.ok() != o.ok() {
                mismatches += 1;
            }
        }
        let _ = writeln!(
            text,
            "{name:>8}: {count} problems, engine {:.3} ms, oracle {:.3} ms",
            engine_time.as_secs_f64() * 1e3,
            oracle_time.as_secs_f64() * 1e3
        );
        rows.push(json!({
            "kind": name,
            "problems": count,
            "engine_ms": engine_time.as_secs_f64() * 1e3,
            "oracle_ms": oracle_time.as_secs_f64() * 1e3,
        }));
    }
    let _ = writeln!(text, "mismatches: {mismatches}");
    let json = json!({ "command": "bench", "seed": seed, "results": rows, "mismatches": mismatches });
    Ok(Report {
        text,
        json,
        exit: if mismatches == 0 { 0 } else { 2 },
    })
}
