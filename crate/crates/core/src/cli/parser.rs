//! Operator expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT ('/' INT)? | NAME | '(' expr ')'
//! ```
//!
//! Names: `x`, `dx`, `xK`, `dxK` (1-based `K`) in Weyl mode; `x`, `dx` in
//! Laurent mode; `s`, `T`, `Ti` in shift mode. Negative exponents are
//! accepted on invertible monomials only (`x^a` in Laurent mode, `T^j`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ore::{Algebra, LaurentWeylOp, OreOperator, ShiftOp, WeylOp};
use crate::scalars::Rational;

pub const MAX_EXPONENT: i64 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((pos, Tok::Name(chars[start..i].iter().map(|&(_, c)| c).collect())));
        } else if "+-*^()/".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { offset: pos, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    algebra: Algebra,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.offset(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<OreOperator> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.add(&self.term()?.scale(&-Rational::one()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<OreOperator> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<OreOperator> {
        if self.eat('-') {
            return Ok(self.unary()?.scale(&-Rational::one()));
        }
        self.power()
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.syntax("expected an integer")),
        }
    }

    fn power(&mut self) -> Result<OreOperator> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let negative = self.eat('-');
        let e = self.integer()?;
        let e = i64::try_from(e)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| Error::Syntax { offset: at, message: format!("exponent exceeds {MAX_EXPONENT}") })?;
        raise(&base, if negative { -e } else { e }).ok_or_else(|| Error::Syntax {
            offset: at,
            message: format!("negative power of non-invertible `{base}`"),
        })
    }

    fn atom(&mut self) -> Result<OreOperator> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if self.eat('/') {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(Error::Syntax { offset, message: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(d);
                }
                Ok(constant(self.algebra, value))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                named(self.algebra, &name).ok_or(Error::UnknownAtom { atom: name, offset })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(Tok::Sym(c)) => Err(self.syntax(format!("unexpected `{c}`"))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

fn constant(algebra: Algebra, c: Rational) -> OreOperator {
    match algebra {
        Algebra::Shift => OreOperator::Shift(ShiftOp::constant(c)),
        Algebra::Weyl(d) => OreOperator::Weyl(WeylOp::constant(d, c)),
        Algebra::LaurentWeyl => OreOperator::Laurent(LaurentWeylOp::constant(c)),
    }
}

fn named(algebra: Algebra, name: &str) -> Option<OreOperator> {
    match algebra {
        Algebra::Shift => Some(OreOperator::Shift(match name {
            "s" => ShiftOp::s(),
            "T" => ShiftOp::t(),
            "Ti" => ShiftOp::t_inv(),
            _ => return None,
        })),
        Algebra::LaurentWeyl => Some(OreOperator::Laurent(match name {
            "x" => LaurentWeylOp::x_pow(1),
            "dx" => LaurentWeylOp::d(),
            _ => return None,
        })),
        Algebra::Weyl(d) => {
            let (is_d, rest) = match name.strip_prefix("dx") {
                Some(rest) => (true, rest),
                None => (false, name.strip_prefix('x')?),
            };
            let k = if rest.is_empty() {
                1
            } else if rest.starts_with('0') {
                return None;
            } else {
                rest.parse::<usize>().ok()?
            };
            if k == 0 || k > d || (rest.is_empty() && d != 1) {
                return None;
            }
            Some(OreOperator::Weyl(if is_d { WeylOp::d(d, k - 1) } else { WeylOp::x(d, k - 1) }))
        }
    }
}

/// `base^e`; negative `e` only for invertible monomials.
fn raise(base: &OreOperator, e: i64) -> Option<OreOperator> {
    match base {
        OreOperator::Shift(a) => a.pow(e).map(OreOperator::Shift),
        OreOperator::Weyl(a) => u32::try_from(e).ok().map(|e| OreOperator::Weyl(a.pow(e))),
        OreOperator::Laurent(a) => {
            if let Ok(e) = u32::try_from(e) {
                return Some(OreOperator::Laurent(a.pow(e)));
            }
            let mut terms = a.terms().iter();
            match (terms.next(), terms.next()) {
                (Some((&(k, 0), c)), None) if c.is_one() => Some(OreOperator::Laurent(LaurentWeylOp::x_pow(k * e))),
                _ => None,
            }
        }
    }
}

/// Parses `text` as an element of `algebra`. The empty string is an error.
pub fn parse_operator(text: &str, algebra: Algebra) -> Result<OreOperator> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), algebra };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(out)
}
