use std::fmt;

use super::{Monomial, Polynomial, TermOrder};
use crate::scalar::Scalar;

/// Canonical text form: terms in strictly decreasing `order`, ` + `/` - `
/// separators, unit coefficients suppressed except on the constant term.
pub fn format<S: Scalar>(f: &Polynomial<S>, order: &TermOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &S)> = f.terms().collect();
    terms.sort_by(|a, b| order.cmp(b.0, a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mono = format_monomial(m, order);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

/// Variables in priority order, `*`-separated; empty for the unit monomial.
pub(crate) fn format_monomial(m: &Monomial, order: &TermOrder) -> String {
    let vars = order.vars();
    let mut parts = Vec::new();
    for &i in order.priority() {
        match m.exponents()[i] {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            e => parts.push(format!("{}^{e}", vars.name(i))),
        }
    }
    parts.join("*")
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self, &TermOrder::lex(self.vars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, VariableSet};
    use num_rational::BigRational;

    #[test]
    fn canonical_strings() {
        let vs = VariableSet::screws(1);
        let order = TermOrder::lex(&vs);
        let zero = Polynomial::<BigRational>::zero(&vs);
        assert_eq!(format(&zero, &order), "0");
        let klein = parse::<BigRational>("w13*v13 + v12*w12 + v11*w11", &vs).unwrap();
        assert_eq!(format(&klein, &order), "w11*v11 + w12*v12 + w13*v13");
        let g = parse::<BigRational>("-1 + 6/4*w12^2*v11 - w11", &vs).unwrap();
        assert_eq!(format(&g, &order), "-w11 + 3/2*w12^2*v11 - 1");
    }

    #[test]
    fn respects_custom_priority() {
        let vs = VariableSet::new(["x", "y"]).unwrap();
        let yx = TermOrder::lex_with(&vs, &["y", "x"]).unwrap();
        let f = parse::<BigRational>("x^2 + x*y + 1", &vs).unwrap();
        assert_eq!(format(&f, &yx), "y*x + x^2 + 1");
    }
}
