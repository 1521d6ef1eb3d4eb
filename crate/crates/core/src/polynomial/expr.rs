//! Expansion of hand-written polynomial expressions such as
//! `(x^2+y^2+z^2-1)(x^2+y^2+z^2+3)` into exact sparse form.

use num_rational::BigRational;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, GaussianRational as Q, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_rational(&text)?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in expression")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
    defs: &'a [(&'a str, MultiPoly<Q>)],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<Q>> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Q>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let den = self.unary()?;
                let c = as_constant(&den)?;
                acc = acc.scale(&(Q::one() / &c));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<Q>> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(k)) if k.is_integer() => {
                    self.pos += 1;
                    let k: u32 = k
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly<Q>> {
        let n = self.nvars();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(n, Q::real(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(k) = self.vars.iter().position(|v| *v == name) {
                    Ok(MultiPoly::var(n, k))
                } else if let Some((_, p)) = self.defs.iter().find(|(d, _)| *d == name) {
                    Ok(p.clone())
                } else if name == "i" {
                    Ok(MultiPoly::constant(n, Q::imag_unit()))
                } else {
                    Err(Error::Parse(format!("unknown identifier '{name}'")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn as_constant(p: &MultiPoly<Q>) -> Result<Q> {
    let zero = vec![0; p.nvars()];
    if p.terms().keys().any(|e| *e != zero) {
        return Err(Error::Parse("division by a non-constant".into()));
    }
    let c = p.coeff(&zero);
    if c.is_zero() {
        return Err(Error::Parse("division by zero".into()));
    }
    Ok(c)
}

/// Expands an expression in the named variables (`i` is the imaginary unit).
pub fn expand_reference(expr: &str, vars: &[&str]) -> Result<MultiPoly<Q>> {
    expand_reference_with(expr, vars, &[])
}

/// As [`expand_reference`], with named sub-expressions such as `R2 = x^2+y^2+z^2`.
pub fn expand_reference_with(expr: &str, vars: &[&str], defs: &[(&str, &str)]) -> Result<MultiPoly<Q>> {
    let mut parsed: Vec<(&str, MultiPoly<Q>)> = Vec::new();
    for (name, body) in defs {
        let p = run(body, vars, &parsed)?;
        parsed.push((name, p));
    }
    run(expr, vars, &parsed)
}

fn run(src: &str, vars: &[&str], defs: &[(&str, MultiPoly<Q>)]) -> Result<MultiPoly<Q>> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, vars, defs };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn sphere_product_expands_to_ten_terms() {
        let p = expand_reference("(x^2+y^2+z^2-1)(x^2+y^2+z^2+3)", &XYZ).unwrap();
        // x⁴ y⁴ z⁴, 2x²y² 2x²z² 2y²z², 2x² 2y² 2z², −3
        assert_eq!(p.len(), 10);
        assert_eq!(p.coeff(&[2, 2, 0]), Q::from_i64(2));
        assert_eq!(p.coeff(&[0, 0, 2]), Q::from_i64(2));
        assert_eq!(p.coeff(&[0, 0, 0]), Q::from_i64(-3));
    }

    #[test]
    fn small_forms() {
        let vars = ["w", "x", "y", "z"];
        assert_eq!(expand_reference("(w^2+x^2-y^2-z^2)*1", &vars).unwrap().len(), 4);
        assert!(expand_reference("0", &vars).unwrap().is_empty());
        let half = expand_reference("x/2 - 3/4", &["x"]).unwrap();
        assert_eq!(half.coeff(&[1]), Q::ratio(1, 2));
        assert_eq!(half.coeff(&[0]), Q::ratio(-3, 4));
        assert_eq!(expand_reference("i*i", &["x"]).unwrap().coeff(&[0]), Q::from_i64(-1));
        assert_eq!(expand_reference("-x^2", &["x"]).unwrap().coeff(&[2]), Q::from_i64(-1));
    }

    #[test]
    fn definitions_substitute() {
        let p = expand_reference_with("R2^2 - 1", &XYZ, &[("R2", "x^2+y^2+z^2")]).unwrap();
        assert_eq!(p.coeff(&[2, 0, 2]), Q::from_i64(2));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["(x+1", "x+", "x^y", "q+1", "x/(x)", "1/0", "", "x $ 2"] {
            assert!(expand_reference(bad, &XYZ).is_err(), "{bad}");
        }
    }
}
