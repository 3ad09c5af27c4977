//! Canonical text form of polynomials and a parser that reads it back.
//!
//! Format: terms in decreasing grevlex order, rational coefficients as
//! `num/den`, quadratic coefficients as `(a+b*sqrt(d))`, e.g.
//! `3/2*x1^2*x2 - x3`. The parser accepts any expression built from
//! numbers, variables, `sqrt(d)` (`d` an integer or `p/q`), `+ - * /`, `^` and parentheses, with
//! division only by constants.

use num_traits::{One, Signed, Zero};

use super::poly::{CtxRef, Mono, Poly};
use super::{AlgebraError, Scalar};

fn format_mono(ctx: &CtxRef, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ctx.names()[i], e)),
        }
    }
    parts.join("*")
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let mono = format_mono(p.ctx(), m);
        let (neg, body) = if let Some(q) = c.as_rational() {
            let abs = Scalar::rational(q.abs());
            let body = if mono.is_empty() {
                abs.to_string()
            } else if q.abs().is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            (q.is_negative(), body)
        } else if mono.is_empty() {
            (false, c.to_string())
        } else {
            (false, format!("{c}*{mono}"))
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

struct Parser<'a> {
    ctx: &'a CtxRef,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<num_bigint::BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.factor()?)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.factor()?;
                let c = d.constant_value().ok_or(AlgebraError::Parse {
                    pos: at,
                    msg: "division by a non-constant".into(),
                })?;
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, AlgebraError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Poly::constant(self.ctx, Scalar::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "sqrt" {
                    if !self.eat(b'(') {
                        return Err(self.err("expected '(' after sqrt"));
                    }
                    let neg = self.eat(b'-');
                    let n = self.uint()?;
                    let d = if self.eat(b'/') { self.uint()? } else { One::one() };
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    let n = if neg { -n } else { n };
                    let q = num_rational::BigRational::new(n, d);
                    return Ok(Poly::constant(self.ctx, Scalar::sqrt_rational(&q)));
                }
                Poly::var_named(self.ctx, name)
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses an expression into a polynomial of `ctx`.
pub fn parse_poly(ctx: &CtxRef, s: &str) -> Result<Poly, AlgebraError> {
    let mut p = Parser { ctx, src: s.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a scalar such as `3/2`, `-1`, `(1+sqrt(5))/2` or `sqrt(-3)/3`.
pub fn parse_scalar(s: &str) -> Result<Scalar, AlgebraError> {
    let ctx = super::poly::Ctx::new::<&str>(&[]);
    let p = parse_poly(&ctx, s)?;
    p.constant_value().ok_or(AlgebraError::Parse { pos: 0, msg: "not a constant".into() })
}

impl Poly {
    /// Parses text in the given context.
    pub fn parse(ctx: &CtxRef, s: &str) -> Result<Poly, AlgebraError> {
        parse_poly(ctx, s)
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::Ctx;
    use super::*;

    #[test]
    fn canonical_example() {
        let ctx = Ctx::indexed("x", 1..=3);
        let p = Poly::parse(&ctx, "-x3 + 3/2*x2*x1^2").unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 - x3");
    }

    #[test]
    fn quadratic_coefficients_roundtrip() {
        let ctx = Ctx::new(&["u", "v"]);
        let p = Poly::parse(&ctx, "(1+sqrt(-3))/2*u*v - 2*v^2 + sqrt(-3) - 1/3").unwrap();
        let text = p.to_string();
        assert_eq!(Poly::parse(&ctx, &text).unwrap(), p);
        assert!(text.contains("sqrt(-3)"));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/sqrt(5)").unwrap(), Scalar::ratio(3, 5) * Scalar::sqrt_of(5));
        assert_eq!(parse_scalar("sqrt(-3/5)").unwrap(), Scalar::ratio(1, 5) * Scalar::sqrt_of(-15));
        assert!(parse_scalar("sqrt(1/0)").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
