//! Recursive-descent parser for scalar expressions in `q`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'q' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Poly, RatFunc, Rational, Scalar};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 4096;
const MAX_RESULT_BITS: u64 = 1 << 18;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Op(char),
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
            }
            'q' => {
                out.push((i, Tok::Q));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            _ => return Err(syntax(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    saw_q: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.column();
                self.pos += 1;
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).map_err(|_| syntax(col, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.column();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let exp = u32::try_from(n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(col, format!("exponent exceeds {MAX_EXPONENT}")))?;
                let degree = base.numer().degree().max(base.denom().degree()).unwrap_or(0);
                if degree as u64 * exp as u64 > MAX_EXPONENT as u64 {
                    return Err(syntax(col, format!("result degree exceeds {MAX_EXPONENT}")));
                }
                let bits = coefficient_bits(&base);
                if bits * exp as u64 > MAX_RESULT_BITS {
                    return Err(syntax(col, "result coefficients too large"));
                }
                self.pos += 1;
                Ok(base.pow(exp))
            }
            _ => Err(syntax(col, "expected nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RatFunc::constant(Rational::from_integer(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                self.saw_q = true;
                Ok(RatFunc::from_poly(Poly::q()))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.column(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(syntax(col, format!("unexpected {t:?}"))),
            None => Err(syntax(col, "unexpected end of input")),
        }
    }
}

pub(super) fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.chars().count(), saw_q: false };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.column(), "trailing input"));
    }
    if p.saw_q {
        Ok(Scalar::Func(value))
    } else {
        Ok(Scalar::Rat(value.as_constant().expect("q-free expression is constant")))
    }
}

fn coefficient_bits(f: &RatFunc) -> u64 {
    f.numer()
        .coeffs()
        .iter()
        .chain(f.denom().coeffs())
        .map(|c| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    #[test]
    fn rationals() {
        assert_eq!(parse_scalar("3/7").unwrap(), Scalar::rational(3, 7));
        assert_eq!(parse_scalar("-4").unwrap(), Scalar::int(-4));
        assert_eq!(parse_scalar(" 2 * (1 + 1/2) ").unwrap(), Scalar::int(3));
    }

    #[test]
    fn polynomials_in_q() {
        let s = parse_scalar("1 + q + 2*q^2 + q^3 + q^4").unwrap();
        assert_eq!(s.field(), Field::RatFunc);
        assert_eq!(s.eval_at(&Rational::from_integer(2.into())).unwrap(), Rational::from_integer(35.into()));
        assert_eq!(parse_scalar("(1 - q^2)/(1 - q)").unwrap().to_string(), "1 + q");
    }

    #[test]
    fn q_cancelling_to_constant_keeps_tag() {
        assert_eq!(parse_scalar("q/q").unwrap().field(), Field::RatFunc);
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(parse_scalar("1 +"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_scalar("1/0"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_scalar("x"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_scalar("(1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_scalar("q^-1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_scalar(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn oversized_powers_rejected() {
        assert!(matches!(parse_scalar("q^5000"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_scalar("(1 + q^2)^2049"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_scalar("123456789012345678901234567890^4096"), Err(Error::Syntax { .. })));
        assert_eq!(parse_scalar("2^10").unwrap(), Scalar::int(1024));
    }
}
