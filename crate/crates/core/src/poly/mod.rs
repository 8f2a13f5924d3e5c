//! Dense univariate polynomials over a [`Field`].

pub mod finite;
pub mod function_field;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::fields::Field;

/// Default seed for randomized equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0;

/// Coefficients low degree first; never ends in a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Wraps coefficients that are already normalized.
    pub(crate) fn from_raw(coeffs: Vec<E>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Canonical order: by degree, then coefficients from the top down. For
/// finite fields this is the order of the base-`|F|` index of the coefficient
/// vector.
impl<E: Ord> Ord for Poly<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<E: Ord> PartialOrd for Poly<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `unit * prod(factor^multiplicity)` with monic, pairwise distinct factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone + Eq + Ord> Factorization<E> {
    /// Multiplies the factorization back out.
    pub fn expand<F: Field<Elem = E>>(&self, field: &F) -> Poly<E> {
        let ring = PolyRing::new(field);
        self.factors
            .iter()
            .fold(ring.constant(self.unit.clone()), |acc, (f, k)| {
                ring.mul(&acc, &ring.pow(f, *k))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Every irreducible factor repeated by multiplicity, in canonical order.
    pub fn expanded_factors(&self) -> Vec<Poly<E>> {
        self.factors
            .iter()
            .flat_map(|(f, k)| core::iter::repeat_n(f.clone(), *k))
            .collect()
    }
}

/// Polynomial algorithms whose availability depends on the coefficient field.
pub trait PolyField: Field {
    /// A positive-degree `g` with `g^2 | f`, if one exists.
    fn poly_square_divisor(&self, f: &Poly<Self::Elem>) -> Result<Option<Poly<Self::Elem>>>;

    fn poly_is_squarefree(&self, f: &Poly<Self::Elem>) -> Result<bool> {
        Ok(self.poly_square_divisor(f)?.is_none())
    }

    fn poly_is_irreducible(&self, f: &Poly<Self::Elem>) -> Result<bool>;

    fn poly_factor(&self, f: &Poly<Self::Elem>, seed: u64) -> Result<Factorization<Self::Elem>>;
}

/// Arithmetic in `F[X]`.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a, F> {
    field: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    /// Drops trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn check(&self, f: &Poly<F::Elem>) -> Result<()> {
        let normalized = f.leading().is_none_or(|c| !self.field.is_zero(c));
        if normalized && f.coeffs.iter().all(|c| self.field.contains(c)) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(self.field.name()))
        }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    /// `c * X^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        if self.field.is_zero(&c) {
            return Poly::zero();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn is_one(&self, f: &Poly<F::Elem>) -> bool {
        f.coeffs.len() == 1 && self.field.is_one(&f.coeffs[0])
    }

    /// Value at zero (the constant coefficient).
    pub fn constant_term(&self, f: &Poly<F::Elem>) -> F::Elem {
        f.coeffs
            .first()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Order of vanishing at `X = 0`; `None` for zero.
    pub fn valuation(&self, f: &Poly<F::Elem>) -> Option<usize> {
        f.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    pub fn add(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (long, short) = if f.coeffs.len() >= g.coeffs.len() {
            (f, g)
        } else {
            (g, f)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = self.field.add(c, s);
        }
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: f.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(f, &self.neg(g))
    }

    pub fn scale(&self, c: &F::Elem, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            coeffs: f.coeffs.iter().map(|a| self.field.mul(c, a)).collect(),
        }
    }

    /// `f * X^k`.
    pub fn shift(&self, f: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if f.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(f.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn mul(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.field.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                let t = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &t);
            }
        }
        self.from_coeffs(coeffs)
    }

    pub fn pow(&self, f: &Poly<F::Elem>, mut k: usize) -> Poly<F::Elem> {
        let mut acc = self.one();
        let mut base = f.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `(q, r)` with `f = q g + r` and `deg r < deg g`.
    #[allow(clippy::type_complexity)]
    pub fn divrem(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let lead = g.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.inv(lead).ok_or(Error::DivisionByZero)?;
        let dg = g.coeffs.len() - 1;
        if f.coeffs.len() <= dg {
            return Ok((Poly::zero(), f.clone()));
        }
        let mut rem = f.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = self.field.mul(&rem[i + dg], &lead_inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                let t = self.field.mul(&c, b);
                rem[i + j] = self.field.sub(&rem[i + j], &t);
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divrem(f, g)?.1)
    }

    /// `Some(f / g)` when `g` divides `f` exactly.
    pub fn div_exact(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Option<Poly<F::Elem>>> {
        let (q, r) = self.divrem(f, g)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, g: &Poly<F::Elem>, f: &Poly<F::Elem>) -> Result<bool> {
        Ok(self.rem(f, g)?.is_zero())
    }

    /// Leading coefficient and monic associate; zero maps to `(0, 0)`.
    pub fn monic(&self, f: &Poly<F::Elem>) -> (F::Elem, Poly<F::Elem>) {
        match f.leading() {
            None => (self.field.zero(), Poly::zero()),
            Some(lead) => {
                let inv = self
                    .field
                    .inv(lead)
                    .expect("leading coefficient is nonzero");
                (lead.clone(), self.scale(&inv, f))
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        self.monic(&a).1
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let coeffs = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(&self.field.from_int(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn eval(&self, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        f.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    pub fn mul_mod(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(f, g), m).expect("modulus is nonzero")
    }

    /// `f^e mod m`.
    pub fn pow_mod(&self, f: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m).expect("modulus is nonzero");
        let mut base = self.rem(f, m).expect("modulus is nonzero");
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }

    /// Product of `(X - r)` over `roots`.
    pub fn from_roots<'r>(&self, roots: impl IntoIterator<Item = &'r F::Elem>) -> Poly<F::Elem>
    where
        F::Elem: 'r,
    {
        roots.into_iter().fold(self.one(), |acc, r| {
            let linear = self.from_coeffs(vec![self.field.neg(r), self.field.one()]);
            self.mul(&acc, &linear)
        })
    }

    /// Applies `op` with operand validation.
    pub fn arith(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
        op: PolyOp,
    ) -> Result<PolyResult<F::Elem>> {
        self.check(f)?;
        self.check(g)?;
        Ok(match op {
            PolyOp::Add => PolyResult::Single(self.add(f, g)),
            PolyOp::Sub => PolyResult::Single(self.sub(f, g)),
            PolyOp::Mul => PolyResult::Single(self.mul(f, g)),
            PolyOp::DivRem => {
                let (q, r) = self.divrem(f, g)?;
                PolyResult::Pair(q, r)
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    DivRem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyResult<E> {
    Single(Poly<E>),
    Pair(Poly<E>, Poly<E>),
}
