//! Exact field arithmetic for the supported coefficient fields.
//!
//! Fields are explicit context objects: elements are plain values and every
//! operation goes through the field that owns them. Elements carry a
//! canonical representation, so `==` on elements is field equality and
//! `Ord` is the canonical enumeration order.

mod finite;
mod pair;
mod rational;

pub(crate) use finite::prime_power;
pub use finite::{FiniteField, Fq};
pub use pair::{
    AnyPair, Degree, FieldPair, FiniteTower, PairKind, PrimeInFunctionField, PurelyInseparable,
    SquareClassWitness, ENUMERATION_CAP,
};
pub use rational::{RatFn, RatFuncField};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use crate::error::{Error, Result};

/// What kind of field a context object describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Prime {
        p: u64,
    },
    /// `GF(p)[g] / (modulus)`; `modulus` is monic, low degree first.
    Extension {
        p: u64,
        modulus: Vec<u64>,
    },
    RationalFunction {
        p: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub trait Field: Clone + Debug {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn descriptor(&self) -> FieldDescriptor;
    /// Text name in pair syntax, e.g. `gf(4)` or `gf(2)(t)`.
    fn name(&self) -> String;
    fn characteristic(&self) -> u64;
    /// `None` for infinite fields.
    fn cardinality(&self) -> Option<u64>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }
    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Whether `a` is a well-formed canonical element of this field.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Every element exactly once, in canonical order.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    fn is_square(&self, a: &Self::Elem) -> bool;
    /// A square root of `a`, canonically chosen, if one exists.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Symbol of the adjoined generator (`g` or `t`), if any.
    fn generator_symbol(&self) -> Option<char>;
    fn generator(&self) -> Option<Self::Elem>;

    /// Canonical text form; parses back to the same element.
    fn render(&self, a: &Self::Elem) -> String;

    /// Checked arithmetic for callers holding unvalidated elements.
    fn arith(&self, a: &Self::Elem, b: &Self::Elem, op: ArithOp) -> Result<Self::Elem> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(Error::DescriptorMismatch(self.name()));
            }
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }
}

/// Smallest prime factor of `n`; `n` itself when prime. Trial division.
pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let d = smallest_prime_factor(n);
        out.push(d);
        while n.is_multiple_of(d) {
            n /= d;
        }
    }
    out
}
