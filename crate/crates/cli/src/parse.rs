//! Recursive-descent parser for ring expressions.
//!
//! ```text
//! expr   := factor (" x " factor)*
//! factor := "(" expr ")" | "Z" int ["[x]/(" modulus ")"] | "GF(" int ["," modulus] ")"
//!         | "SZ(" factor "," int ")"
//! modulus:= poly | "[" int ("," int)* "]"        list is lowest degree first
//! poly   := term ("+" term)*
//! term   := int ["*"] "x" ["^" int] | int | "x" ["^" int]
//! ```
//!
//! Whitespace between tokens is ignored, except that the product operator
//! `x` needs whitespace on both sides.

use std::collections::BTreeSet;
use std::fmt;

use ringgraph_core::arith::prime_power;
use ringgraph_core::RingExpr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub expected: BTreeSet<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: expected ", self.column)?;
        let items: Vec<_> = self.expected.iter().copied().collect();
        if items.len() == 1 {
            write!(f, "{}", items[0])?;
        } else {
            write!(f, "one of {}", items.join(", "))?;
        }
        match self.found {
            Some(c) => write!(f, ", found `{c}`"),
            None => write!(f, ", found end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid ring at column {column}: {message}")]
pub struct SemanticError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Semantic(#[from] SemanticError),
}

type PResult<T> = Result<T, ExprError>;

pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ExprError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.fail(&["` x `", "end of input"]));
    }
    expr.validate().map_err(|e| SemanticError {
        column: 1,
        message: e.to_string(),
    })?;
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    /// Skips whitespace and reports whether any was skipped.
    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn fail(&self, expected: &[&'static str]) -> ExprError {
        ParseError {
            column: self.column(),
            expected: expected.iter().copied().collect(),
            found: self.peek(),
        }
        .into()
    }

    fn semantic(&self, column: usize, message: impl Into<String>) -> ExprError {
        SemanticError {
            column,
            message: message.into(),
        }
        .into()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.fail(&[name]))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.len();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(word.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail(&["integer"]));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.semantic(start + 1, format!("integer {digits} is too large")))
    }

    fn expr(&mut self) -> PResult<RingExpr> {
        let mut factors = vec![self.factor()?];
        loop {
            let save = self.pos;
            let spaced = self.skip_ws();
            if self.peek() != Some('x') {
                self.pos = save;
                break;
            }
            if !spaced {
                return Err(self.fail(&["whitespace before product operator"]));
            }
            self.pos += 1;
            if !self.peek().is_some_and(char::is_whitespace) {
                return Err(self.fail(&["whitespace after product operator"]));
            }
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            RingExpr::Prod(factors)
        })
    }

    fn factor(&mut self) -> PResult<RingExpr> {
        self.skip_ws();
        let start = self.column();
        if self.eat('(') {
            let inner = self.expr()?;
            self.expect(')', "`)`")?;
            return Ok(inner);
        }
        if self.keyword("GF") {
            self.expect('(', "`(`")?;
            let q = self.int()?;
            let (p, e) = prime_power(q).ok_or_else(|| {
                self.semantic(start, format!("GF({q}): {q} is not a prime power"))
            })?;
            let expr = if self.eat(',') {
                RingExpr::Gf {
                    p,
                    e,
                    modulus: self.modulus()?,
                }
            } else {
                RingExpr::gf(q).map_err(|e| self.semantic(start, e.to_string()))?
            };
            self.expect(')', "`)`")?;
            return Ok(expr);
        }
        if self.keyword("SZ") {
            self.expect('(', "`(`")?;
            let base = self.factor()?;
            self.expect(',', "`,`")?;
            let m = self.int()?;
            let m = u32::try_from(m)
                .map_err(|_| self.semantic(start, format!("SZ: {m} generators is too many")))?;
            self.expect(')', "`)`")?;
            return Ok(RingExpr::square_zero(base, m));
        }
        if self.keyword("Z") {
            let n = self.int()?;
            let save = self.pos;
            if self.eat('[') {
                self.expect('x', "`x`")?;
                self.expect(']', "`]`")?;
                self.expect('/', "`/`")?;
                self.expect('(', "`(`")?;
                let modulus = self.modulus()?;
                self.expect(')', "`)`")?;
                return Ok(RingExpr::poly_quot(n, modulus));
            }
            self.pos = save;
            return Ok(RingExpr::zn(n));
        }
        Err(self.fail(&["`(`", "`GF`", "`SZ`", "`Z`"]))
    }

    /// Coefficients, lowest degree first, without trailing zeros.
    fn modulus(&mut self) -> PResult<Vec<u64>> {
        let mut coeffs = if self.eat('[') {
            let mut list = vec![self.int()?];
            while self.eat(',') {
                list.push(self.int()?);
            }
            self.expect(']', "`]`")?;
            list
        } else {
            let mut acc = Vec::new();
            loop {
                let (c, k) = self.term()?;
                let k = k as usize;
                if acc.len() <= k {
                    acc.resize(k + 1, 0u64);
                }
                acc[k] = acc[k]
                    .checked_add(c)
                    .ok_or_else(|| self.semantic(self.column(), "coefficient overflow"))?;
                if !self.eat('+') {
                    break;
                }
            }
            acc
        };
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(coeffs)
    }

    /// One monomial as (coefficient, degree).
    fn term(&mut self) -> PResult<(u64, u32)> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.int()?;
            if self.eat('*') {
                self.expect('x', "`x`")?;
            } else if !self.eat('x') {
                return Ok((c, 0));
            }
            c
        } else if self.eat('x') {
            1
        } else {
            return Err(self.fail(&["integer", "`x`"]));
        };
        if !self.eat('^') {
            return Ok((coeff, 1));
        }
        let col = self.column();
        let k = self.int()?;
        let k = u32::try_from(k)
            .ok()
            .filter(|&k| k <= 64)
            .ok_or_else(|| self.semantic(col, format!("degree {k} is too large")))?;
        Ok((coeff, k))
    }
}
