//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := ident ('^' nat)?
//! coeff  := int ('/' nat)?
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, PolyError, Polynomial, VariableSet};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(PolyError::Syntax {
                    pos: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, S> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a Arc<VariableSet>,
    _scalar: std::marker::PhantomData<S>,
}

impl<S: Scalar> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, S)>, PolyError> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                None => break,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, S), PolyError> {
        let mut exps = vec![0u16; self.vars.len()];
        let coeff = match self.peek() {
            Some(Tok::Num(_)) => {
                let c = self.coeff()?;
                if self.peek() == Some(&Tok::Star) {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                c
            }
            Some(Tok::Ident(_)) => {
                self.factor(&mut exps)?;
                S::one()
            }
            _ => return self.err("expected a coefficient or variable"),
        };
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn coeff(&mut self) -> Result<S, PolyError> {
        let at = self.offset();
        let numer = self.nat()?;
        let denom = if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let d = self.nat()?;
            if d.is_zero() {
                return Err(PolyError::Syntax {
                    pos: at,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        S::from_bigints(&numer, &denom).ok_or(PolyError::CoefficientOverflow { pos: at })
    }

    fn nat(&mut self) -> Result<BigInt, PolyError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a number"),
        }
    }

    fn factor(&mut self, exps: &mut [u16]) -> Result<(), PolyError> {
        let at = self.offset();
        let name = match self.peek() {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return self.err("expected a variable"),
        };
        self.pos += 1;
        let idx = self
            .vars
            .index_of(&name)
            .ok_or(PolyError::UnknownVariable { name, pos: at })?;
        let power: u16 = if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp_at = self.offset();
            let n = self.nat()?;
            u16::try_from(&n).map_err(|_| PolyError::Syntax {
                pos: exp_at,
                message: "exponent too large".into(),
            })?
        } else {
            1
        };
        exps[idx] = exps[idx].checked_add(power).ok_or(PolyError::Syntax {
            pos: at,
            message: "exponent too large".into(),
        })?;
        Ok(())
    }
}

/// Parses `text` as a polynomial over `vars`.
pub fn parse<S: Scalar>(text: &str, vars: &Arc<VariableSet>) -> Result<Polynomial<S>, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Syntax {
            pos: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser::<S> {
        toks,
        pos: 0,
        end: text.len(),
        vars,
        _scalar: std::marker::PhantomData,
    };
    let terms = p.expr()?;
    Ok(Polynomial::from_terms(vars, terms))
}

/// Identifiers appearing in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>, PolyError> {
    let mut seen = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Tok::Ident(name) = t {
            if !seen.contains(&name) {
                seen.push(name);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn vs() -> Arc<VariableSet> {
        VariableSet::screws(1)
    }

    #[test]
    fn zero_and_cancellation() {
        let z = parse::<BigRational>("0", &vs()).unwrap();
        assert!(z.is_zero());
        let c = parse::<BigRational>("3/2*w11^2 - 3/2*w11^2", &vs()).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn leading_sign_and_repeated_factors() {
        let a = parse::<BigRational>("-w11*w11 + 2", &vs()).unwrap();
        let b = parse::<BigRational>("2 - w11^2", &vs()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_positions() {
        match parse::<BigRational>("w11 + + v11", &vs()) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse::<BigRational>("w11 + q7", &vs()) {
            Err(PolyError::UnknownVariable { name, pos }) => {
                assert_eq!(name, "q7");
                assert_eq!(pos, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse::<BigRational>("1/0*w11", &vs()),
            Err(PolyError::Syntax { .. })
        ));
        assert!(matches!(
            parse::<BigRational>("w11 $", &vs()),
            Err(PolyError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse::<BigRational>("", &vs()), Err(PolyError::Syntax { .. })));
        assert!(matches!(
            parse::<BigRational>("w11 2", &vs()),
            Err(PolyError::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn identifiers_in_order() {
        assert_eq!(identifiers("y*x + 2*y^2 - z").unwrap(), ["y", "x", "z"]);
    }
}
