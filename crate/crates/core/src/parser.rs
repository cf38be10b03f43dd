//! Polynomial expressions: parsing and canonical printing.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | var ['^' uint] | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit (`x*y`). A rational literal written
//! without spaces, `p/q`, is a single token and binds tighter than `*`:
//! `1/2*x` is `(1/2)·x`. There are no floating-point literals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;
use crate::matrix::Matrix;
use crate::order::{ExponentVector, MonomialOrder};
use crate::poly::Polynomial;
use crate::Rational;

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(Rational, bool), // value, written as an integer
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> PResult<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let simple = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, pos: start });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: String = chars[start..i].iter().collect();
            let mut denom = None;
            if i < chars.len() && chars[i] == '/' {
                let slash = i;
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(ParseError::Syntax {
                        position: slash + 1,
                        expected: "denominator digits".into(),
                    });
                }
                denom = Some(chars[dstart..i].iter().collect::<String>());
            }
            let n: BigInt = numer.parse().expect("digits");
            let value = match &denom {
                None => Rational::from_integer(n),
                Some(d) => {
                    let d: BigInt = d.parse().expect("digits");
                    if d.is_zero() {
                        return Err(ParseError::InvalidRational {
                            literal: chars[start..i].iter().collect(),
                            position: start,
                        });
                    }
                    Rational::new(n, d)
                }
            };
            out.push(Token {
                tok: Tok::Number(value, denom.is_none()),
                pos: start,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos: start,
            });
            continue;
        }
        return Err(ParseError::Syntax {
            position: start,
            expected: "a number, variable, operator or parenthesis".into(),
        });
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len(),
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    at: usize,
    variables: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(ParseError::Syntax {
            position: self.peek().pos,
            expected: expected.into(),
        })
    }

    fn dimension(&self) -> usize {
        self.variables.len()
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let negate = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            let sign = match self.peek().tok {
                Tok::Plus => Rational::one(),
                Tok::Minus => -Rational::one(),
                _ => return Ok(acc),
            };
            self.bump();
            let t = self.term()?;
            acc.add_scaled_assign(&t, &sign);
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f).expect("same dimension");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Polynomial> {
        let token = self.peek().clone();
        match token.tok {
            Tok::Number(value, _) => {
                self.bump();
                Ok(Polynomial::constant(self.dimension(), value))
            }
            Tok::Ident(name) => {
                self.bump();
                let Some(var) = self.variables.iter().position(|v| *v == name) else {
                    return Err(ParseError::UnknownVariable {
                        name,
                        position: token.pos,
                    });
                };
                let mut power = 1;
                if self.peek().tok == Tok::Caret {
                    self.bump();
                    power = self.exponent()?;
                }
                let mut e = vec![0; self.dimension()];
                e[var] = power;
                Ok(Polynomial::monomial(ExponentVector::new(e)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return self.error("`)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.error("a number, variable or `(`"),
        }
    }

    fn exponent(&mut self) -> PResult<u32> {
        let token = self.peek().clone();
        match token.tok {
            Tok::Minus => Err(ParseError::NegativeExponent { position: token.pos }),
            Tok::Number(value, true) => {
                self.bump();
                u32::try_from(value.to_integer()).map_err(|_| ParseError::Syntax {
                    position: token.pos,
                    expected: "an exponent below 2^32".into(),
                })
            }
            _ => self.error("a nonnegative integer exponent"),
        }
    }
}

fn check_variables(variables: &[String]) -> PResult<()> {
    if variables.is_empty() {
        return Err(ParseError::InvalidVariables("no variables".into()));
    }
    for (i, v) in variables.iter().enumerate() {
        let mut chars = v.chars();
        let valid = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(ParseError::InvalidVariables(format!("`{v}` is not an identifier")));
        }
        if variables[..i].contains(v) {
            return Err(ParseError::InvalidVariables(format!("duplicate variable `{v}`")));
        }
    }
    Ok(())
}

/// Parses an expression over the given variables; like terms are combined.
pub fn parse_polynomial(text: &str, variables: &[String]) -> PResult<Polynomial> {
    check_variables(variables)?;
    let mut p = Parser {
        tokens: lex(text)?,
        at: 0,
        variables,
    };
    let poly = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.error("`+`, `-`, `*` or end of input");
    }
    Ok(poly)
}

/// Parses a single monomial such as `x^2*y` or `1`.
pub fn parse_monomial(text: &str, variables: &[String]) -> PResult<ExponentVector> {
    let p = parse_polynomial(text, variables)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(ParseError::NotAMonomial { text: text.to_string() }),
    }
}

/// Parses a rational literal such as `3`, `-7/6` or `1/2`.
pub fn parse_rational(text: &str) -> PResult<Rational> {
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let tokens = lex(body)?;
    match tokens.as_slice() {
        [Token {
            tok: Tok::Number(v, _), ..
        }, Token { tok: Tok::End, .. }] => Ok(if negative { -v.clone() } else { v.clone() }),
        _ => Err(ParseError::InvalidRational {
            literal: text.to_string(),
            position: 0,
        }),
    }
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `1`, `x`, `x^2*y`; factors in variable order.
pub fn format_monomial(m: &ExponentVector, variables: &[String]) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .zip(variables)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Canonical text: terms in decreasing `≺`, e.g. `1/2*x^2 + y`. Parses back to the same polynomial.
pub fn format_polynomial(p: &Polynomial, variables: &[String], order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_descending(order).into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&format_monomial(m, variables));
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&format_monomial(m, variables));
        }
    }
    out
}

/// `P(D)` written with `D_x`-style operator names.
pub fn format_operator(p: &Polynomial, variables: &[String], order: &MonomialOrder) -> String {
    let ops: Vec<String> = variables.iter().map(|v| format!("D_{v}")).collect();
    format_polynomial(p, &ops, order)
}

pub fn format_point(point: &[Rational]) -> String {
    let parts: Vec<String> = point.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

/// Matrix with a header row of column labels and a label per row.
pub fn format_matrix(m: &Matrix, row_labels: &[String], col_labels: &[String]) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rational(m.get(r, c))).collect())
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| {
            cells
                .iter()
                .map(|row| row[c].chars().count())
                .chain(col_labels.get(c).map(|l| l.chars().count()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_width = row_labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);

    let mut out = String::new();
    out.push_str(&" ".repeat(label_width + 3));
    for (c, w) in widths.iter().enumerate() {
        let label = col_labels.get(c).map(String::as_str).unwrap_or("");
        out.push_str(&format!(" {label:>w$}"));
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        let label = row_labels.get(r).map(String::as_str).unwrap_or("");
        let pad = label_width - label.chars().count();
        out.push_str(&format!("{}{label} ( ", " ".repeat(pad)));
        for (cell, w) in row.iter().zip(&widths) {
            out.push_str(&format!("{cell:>w$} "));
        }
        out.push_str(")\n");
    }
    out
}
