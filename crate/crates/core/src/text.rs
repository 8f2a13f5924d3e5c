//! Text forms: field pairs, field elements and polynomials in `X`.
//!
//! ```text
//! pair  := gf(q) '/' gf(q) | gf(p)(t) '/' gf(p) | gf(p)(t) '/' gf(p)(t^p)
//! q     := nat | nat '^' nat
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/')? unary)*
//! unary := '-' unary | atom ('^' nat)?
//! atom  := nat | 'g' | 't' | 'X' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Division is allowed only by nonzero constants.
//! Error locations are byte offsets into the input.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::composite::{make_composite, CompositeElement};
use crate::error::{Error, Result};
use crate::fields::{
    is_prime, AnyPair, Field, FieldPair, FiniteTower, PrimeInFunctionField, PurelyInseparable,
};
use crate::poly::{Poly, PolyRing};

/// Parsed polynomials may not exceed this degree.
pub const MAX_PARSED_DEGREE: usize = 1 << 16;

fn parse_error(message: impl Into<String>, location: usize) -> Error {
    Error::Parse {
        message: message.into(),
        location,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i]
                    .parse()
                    .map_err(|_| parse_error("integer literal too large", start))?;
                out.push((Tok::Num(n), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => Tok::Ident(c as char),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(parse_error(format!("unexpected character '{ch}'"), i));
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: PolyRing<'a, F>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    allow_x: bool,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Tok {
        self.toks[self.pos].0
    }

    fn loc(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos];
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.ring.sub(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs)?;
                }
                Tok::Slash => {
                    let (_, at) = self.bump();
                    let rhs = self.unary()?;
                    if rhs.degree() != Some(0) {
                        let what = if rhs.is_zero() {
                            "division by zero"
                        } else {
                            "division by a non-constant"
                        };
                        return Err(parse_error(what, at));
                    }
                    let inv = self
                        .ring
                        .field()
                        .inv(&rhs.coeffs()[0])
                        .expect("nonzero constant");
                    acc = self.ring.scale(&inv, &acc);
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    let rhs = self.unary()?;
                    acc = self.checked_mul(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn checked_mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let deg = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
        if deg > MAX_PARSED_DEGREE {
            return Err(parse_error(
                format!("degree exceeds {MAX_PARSED_DEGREE}"),
                self.loc(),
            ));
        }
        Ok(self.ring.mul(a, b))
    }

    fn unary(&mut self) -> Result<Poly<F::Elem>> {
        if self.peek() == Tok::Minus {
            self.bump();
            let inner = self.unary()?;
            return Ok(self.ring.neg(&inner));
        }
        let base = self.atom()?;
        if self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, at) = self.bump();
        let Tok::Num(k) = tok else {
            return Err(parse_error("expected a natural-number exponent", at));
        };
        match base.degree() {
            Some(d) if d > 0 => {
                if (d as u64).saturating_mul(k) > MAX_PARSED_DEGREE as u64 {
                    return Err(parse_error(
                        format!("degree exceeds {MAX_PARSED_DEGREE}"),
                        at,
                    ));
                }
                Ok(self.ring.pow(&base, k as usize))
            }
            Some(_) => {
                let field = self.ring.field();
                Ok(self.ring.constant(field.pow(&base.coeffs()[0], k)))
            }
            None => Ok(if k == 0 { self.ring.one() } else { base }),
        }
    }

    fn atom(&mut self) -> Result<Poly<F::Elem>> {
        let field = self.ring.field();
        let (tok, at) = self.bump();
        match tok {
            Tok::Num(n) => {
                let p = field.characteristic();
                Ok(self.ring.constant(field.from_int((n % p) as i64)))
            }
            Tok::Ident('X') => {
                if !self.allow_x {
                    return Err(parse_error("X is not allowed in a field element", at));
                }
                Ok(self.ring.x())
            }
            Tok::Ident(c) => match (field.generator_symbol(), field.generator()) {
                (Some(sym), Some(gen)) if sym == c => Ok(self.ring.constant(gen)),
                _ => Err(parse_error(
                    format!("unknown symbol '{c}' for {}", field.name()),
                    at,
                )),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, at) = self.bump();
                if close != Tok::RParen {
                    return Err(parse_error("expected ')'", at));
                }
                Ok(inner)
            }
            Tok::End => Err(parse_error("unexpected end of input", at)),
            _ => Err(parse_error("expected a number, symbol or '('", at)),
        }
    }
}

fn run_parser<F: Field>(field: &F, src: &str, allow_x: bool) -> Result<Poly<F::Elem>> {
    let mut parser = Parser {
        ring: PolyRing::new(field),
        toks: tokenize(src)?,
        pos: 0,
        allow_x,
    };
    let value = parser.expr()?;
    if parser.peek() != Tok::End {
        return Err(parse_error("unexpected trailing input", parser.loc()));
    }
    Ok(value)
}

/// A polynomial in `X` over `field`.
pub fn parse_poly<F: Field>(field: &F, src: &str) -> Result<Poly<F::Elem>> {
    run_parser(field, src, true)
}

/// A field element: an expression in the field's generator.
pub fn parse_element<F: Field>(field: &F, src: &str) -> Result<F::Elem> {
    let p = run_parser(field, src, false)?;
    Ok(p.coeffs().first().cloned().unwrap_or_else(|| field.zero()))
}

/// A polynomial certified to lie in `T`.
pub fn parse_composite<P: FieldPair>(
    pair: &P,
    src: &str,
) -> Result<CompositeElement<<P::L as Field>::Elem>> {
    make_composite(pair, parse_poly(pair.big(), src)?)
}

/// Ascending powers of `X`; multi-term coefficients are parenthesized and
/// coefficients equal to 1 are dropped.
pub fn render_poly<F: Field>(field: &F, f: &Poly<F::Elem>) -> String {
    let mut terms = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if field.is_zero(c) {
            continue;
        }
        let s = field.render(c);
        let monomial = match i {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        };
        terms.push(match (i, field.is_one(c)) {
            (0, _) => s,
            (_, true) => monomial,
            _ if s.contains(['+', '/', '-']) => format!("({s})*{monomial}"),
            _ => format!("{s}*{monomial}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

pub fn render_composite<F: Field>(field: &F, e: &CompositeElement<F::Elem>) -> String {
    render_poly(field, e.poly())
}

struct PairCursor<'s> {
    src: &'s str,
    pos: usize,
}

impl PairCursor<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(parse_error(format!("expected '{lit}'"), self.pos))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return Err(parse_error("expected a number", start));
        }
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| parse_error("number too large", start))
    }

    /// `q` or `p^n`.
    fn order(&mut self) -> Result<u64> {
        let start = self.pos;
        let base = self.nat()?;
        if !self.eat("^") {
            return Ok(base);
        }
        let exp = self.nat()?;
        u32::try_from(exp)
            .ok()
            .and_then(|e| base.checked_pow(e))
            .ok_or_else(|| parse_error("field order too large", start))
    }

    /// `gf(q)`, optionally followed by `(t)` or `(t^k)`; returns
    /// `(q, None | Some(k))`.
    fn field(&mut self) -> Result<(u64, Option<u64>, usize)> {
        self.skip_ws();
        let at = self.pos;
        self.expect("gf(")?;
        let q = self.order()?;
        self.expect(")")?;
        if !self.eat("(") {
            return Ok((q, None, at));
        }
        self.expect("t")?;
        let k = if self.eat("^") { self.nat()? } else { 1 };
        self.expect(")")?;
        Ok((q, Some(k), at))
    }
}

/// Pair syntax `L/K`.
pub fn parse_pair(src: &str) -> Result<AnyPair> {
    let mut cur = PairCursor { src, pos: 0 };
    let (q_big, t_big, big_at) = cur.field()?;
    cur.expect("/")?;
    let (q_small, t_small, small_at) = cur.field()?;
    cur.skip_ws();
    if cur.pos != src.len() {
        return Err(parse_error("unexpected trailing input", cur.pos));
    }
    let unsupported = || Error::UnsupportedPair(src.trim().to_string());
    match (t_big, t_small) {
        (None, None) => Ok(AnyPair::Tower(FiniteTower::from_orders(q_big, q_small)?)),
        (None, Some(_)) => Err(parse_error(
            "a function field is not a subfield of a finite field",
            small_at,
        )),
        (Some(1), t_small) => {
            if !is_prime(q_big) {
                return Err(if crate::fields::prime_power(q_big).is_some() {
                    unsupported()
                } else {
                    parse_error(format!("{q_big} is not a prime"), big_at)
                });
            }
            if q_small != q_big {
                return Err(unsupported());
            }
            match t_small {
                None => Ok(AnyPair::FunctionField(PrimeInFunctionField::new(q_big)?)),
                Some(k) if k == q_big => Ok(AnyPair::Inseparable(PurelyInseparable::new(q_big)?)),
                Some(_) => Err(unsupported()),
            }
        }
        (Some(_), _) => Err(unsupported()),
    }
}
