//! Basis files.
//!
//! ```text
//! # comments and blank lines are ignored
//! order: lex t1 t2 t3 w11 w12 w13 v11 v12 v13
//! eliminate: t1 t2 t3          (optional)
//! complete: true               (results only)
//! degree_bound: 4              (results only)
//! w11
//! t2*w13 - t3*w12 + v11
//! ```
//!
//! The `order:` header names every variable, highest first; the variable
//! set is taken in that order. Each remaining line is one polynomial.

use std::sync::Arc;

use super::{GeneratorSet, SagbiError, SagbiResult};
use crate::poly::{self, PolyError, Polynomial, TermOrder, VariableSet};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct BasisFile<S> {
    pub order: TermOrder,
    pub polys: Vec<Polynomial<S>>,
    /// Variables to eliminate from a completed basis (group coordinates).
    pub eliminate: Vec<String>,
    pub complete: Option<bool>,
    pub degree_bound: Option<u32>,
}

impl<S: Scalar> BasisFile<S> {
    pub fn generator_set(&self) -> Result<GeneratorSet<S>, SagbiError> {
        GeneratorSet::new(self.order.clone(), self.polys.iter().cloned())
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        self.order.vars()
    }
}

fn file_err(line: usize, message: impl Into<String>) -> SagbiError {
    SagbiError::File {
        line,
        message: message.into(),
    }
}

pub fn parse_basis_file<S: Scalar>(text: &str) -> Result<BasisFile<S>, SagbiError> {
    let mut order: Option<TermOrder> = None;
    let mut polys = Vec::new();
    let mut eliminate = Vec::new();
    let mut complete = None;
    let mut degree_bound = None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("order:") {
            if order.is_some() {
                return Err(file_err(line_no, "duplicate order header"));
            }
            let mut words = rest.split_whitespace();
            if words.next() != Some("lex") {
                return Err(file_err(line_no, "only `lex` orders are supported"));
            }
            let names: Vec<&str> = words.collect();
            if names.is_empty() {
                return Err(file_err(line_no, "order header lists no variables"));
            }
            let vars = VariableSet::new(names.iter().copied()).map_err(|e| file_err(line_no, e.to_string()))?;
            order = Some(TermOrder::lex(&vars));
            continue;
        }
        let Some(ord) = &order else {
            return Err(file_err(line_no, "expected `order: lex ...` header first"));
        };
        if let Some((key, value)) = header_field(line) {
            let value = value.trim();
            match key {
                "eliminate" => {
                    for name in value.split_whitespace() {
                        if !ord.vars().contains(name) {
                            return Err(file_err(line_no, format!("unknown variable `{name}`")));
                        }
                        eliminate.push(name.to_string());
                    }
                }
                "complete" => {
                    complete = Some(match value {
                        "true" => true,
                        "false" => false,
                        _ => return Err(file_err(line_no, "expected `true` or `false`")),
                    })
                }
                "degree_bound" => {
                    degree_bound = Some(
                        value
                            .parse()
                            .map_err(|_| file_err(line_no, "expected a non-negative integer"))?,
                    )
                }
                "iterations" => {}
                _ => return Err(file_err(line_no, format!("unknown header `{key}`"))),
            }
            continue;
        }
        let p = poly::parse::<S>(line, ord.vars()).map_err(|e| match e {
            PolyError::Syntax { pos, message } => file_err(line_no, format!("position {}: {message}", pos + 1)),
            other => file_err(line_no, other.to_string()),
        })?;
        polys.push(p);
    }
    let order = order.ok_or_else(|| file_err(1, "missing `order: lex ...` header"))?;
    Ok(BasisFile {
        order,
        polys,
        eliminate,
        complete,
        degree_bound,
    })
}

// Polynomial lines never contain a colon.
fn header_field(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    Some((key.trim(), value))
}

fn order_header(order: &TermOrder) -> String {
    let names: Vec<&str> = order.priority().iter().map(|&i| order.vars().name(i)).collect();
    format!("order: lex {}", names.join(" "))
}

/// Writes polynomials as a basis file; `names` become `# name` comments.
pub fn format_basis_file<S: Scalar>(
    order: &TermOrder,
    polys: &[Polynomial<S>],
    names: Option<&[String]>,
    eliminate: &[String],
) -> String {
    let mut out = order_header(order);
    out.push('\n');
    if !eliminate.is_empty() {
        out.push_str(&format!("eliminate: {}\n", eliminate.join(" ")));
    }
    for (i, p) in polys.iter().enumerate() {
        if let Some(name) = names.and_then(|n| n.get(i)) {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&poly::format(p, order));
        out.push('\n');
    }
    out
}

pub fn format_result<S: Scalar>(result: &SagbiResult<S>) -> String {
    let order = result.basis.order();
    let mut out = order_header(order);
    out.push('\n');
    out.push_str(&format!("complete: {}\n", result.complete));
    out.push_str(&format!("degree_bound: {}\n", result.degree_bound));
    out.push_str(&format!("iterations: {}\n", result.iterations));
    for g in result.basis.generators() {
        out.push_str(&poly::format(g, order));
        out.push('\n');
    }
    out
}
