use num::{BigInt, BigRational, Signed, ToPrimitive};
use thiserror::Error;

use super::{Expr, ExprVec};
use crate::primitive::Primitive;

/// Syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

/// Parses `;`-separated components over `arity` variables.
pub fn parse(text: &str, arity: usize) -> Result<ExprVec, ParseError> {
    let comps = Parser::new(text, Some(arity)).vector()?;
    Ok(ExprVec { arity, comps })
}

/// Like [`parse`], taking the arity from the largest variable index used.
pub fn parse_infer(text: &str) -> Result<ExprVec, ParseError> {
    let comps = Parser::new(text, None).vector()?;
    let arity = comps.iter().map(Expr::min_arity).max().unwrap_or(0);
    Ok(ExprVec { arity, comps })
}

/// Parses a single component.
pub fn parse_expr(text: &str, arity: usize) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text, Some(arity));
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: Option<usize>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, arity: Option<usize>) -> Self {
        Parser { src: text.as_bytes(), pos: 0, arity }
    }

    fn err<T>(&self, offset: usize, expected: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset, expected: expected.into() })
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

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.err(self.pos, "an operator or end of input"),
        }
    }

    fn vector(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut comps = vec![self.expr()?];
        while self.eat(b';') {
            comps.push(self.expr()?);
        }
        self.finish()?;
        Ok(comps)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::add(acc, self.term()?);
            } else if self.eat(b'-') {
                acc = Expr::sub(acc, self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::mul(acc, self.unary()?);
            } else if self.eat(b'/') {
                acc = Expr::div(acc, self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(b'-') {
            Ok(Expr::neg(self.unary()?))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let exponent = self.unary()?;
        let e = match &exponent {
            Expr::Const(q) if q.is_integer() && !q.is_negative() => q.to_integer().to_u32(),
            _ => None,
        };
        match e {
            Some(e) => Ok(Expr::pow(base, e)),
            None => self.err(start, "a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.pos, "an operand"),
        };
        let c = self.src[start];
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return self.err(self.pos, "`)`");
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            return self.number();
        }
        if c.is_ascii_alphabetic() {
            let end = self.scan(|b| b.is_ascii_alphanumeric() || b == b'_');
            let word = std::str::from_utf8(&self.src[start..end]).expect("ascii");
            self.pos = end;
            if let Ok(p) = word.parse::<Primitive>() {
                if !self.eat(b'(') {
                    return self.err(self.pos, format!("`(` after `{word}`"));
                }
                let arg = self.expr()?;
                if !self.eat(b')') {
                    return self.err(self.pos, "`)`");
                }
                return Ok(Expr::call(p, arg));
            }
            return self.variable(word, start);
        }
        self.err(start, "a number, variable, function call or `(`")
    }

    fn scan(&self, pred: impl Fn(u8) -> bool) -> usize {
        let mut end = self.pos;
        while end < self.src.len() && pred(self.src[end]) {
            end += 1;
        }
        end
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let int_end = self.scan(|b| b.is_ascii_digit());
        let digits = std::str::from_utf8(&self.src[start..int_end]).expect("ascii");
        let mut value = BigRational::from_integer(digits.parse::<BigInt>().expect("digits"));
        self.pos = int_end;
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            let frac_end = self.scan(|b| b.is_ascii_digit());
            if frac_end == self.pos {
                return self.err(self.pos, "digits after `.`");
            }
            let frac = std::str::from_utf8(&self.src[self.pos..frac_end]).expect("ascii");
            let scale = num::pow(BigInt::from(10), frac.len());
            value += BigRational::new(frac.parse::<BigInt>().expect("digits"), scale);
            self.pos = frac_end;
        }
        Ok(Expr::Const(value))
    }

    fn variable(&mut self, word: &str, start: usize) -> Result<Expr, ParseError> {
        let index = word
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && !d.starts_with('0') && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<usize>().ok());
        let Some(index) = index else {
            return self.err(start, "a variable x1, x2, ... or one of exp, sin, cos, log");
        };
        if let Some(arity) = self.arity {
            if index > arity {
                return self.err(start, format!("a variable among x1..x{arity}"));
            }
        }
        Ok(Expr::Var(index - 1))
    }
}
