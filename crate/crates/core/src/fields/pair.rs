use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use super::{Field, FiniteField, Fq, RatFn, RatFuncField};
use crate::error::{Error, Result};
use crate::poly::{PolyField, PolyRing};

/// Brute-force square-class enumeration runs only for `|L|` up to this size.
pub const ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

impl Degree {
    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `GF(p^m) ⊆ GF(p^n)`.
    FiniteTower { m: u32, n: u32 },
    /// `GF(p) ⊆ GF(p)(t)`.
    PrimeInFunctionField,
    /// `GF(p)(t^p) ⊆ GF(p)(t)`.
    PurelyInseparable,
}

/// Certificate `c = a^2 b` with `a ∈ L`, `b ∈ K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareClassWitness<E> {
    pub a: E,
    pub b: E,
}

/// A field extension `K ⊆ L`, with `K` realized inside `L`.
pub trait FieldPair: Clone + Debug {
    type L: PolyField;

    fn big(&self) -> &Self::L;
    fn kind(&self) -> PairKind;
    /// Text form in pair syntax, `L/K`.
    fn name(&self) -> String;
    fn degree(&self) -> Degree;

    /// Whether `x ∈ L` lies in `K`.
    fn in_subfield(&self, x: &<Self::L as Field>::Elem) -> bool;

    fn in_subfield_checked(&self, x: &<Self::L as Field>::Elem) -> Result<bool> {
        if !self.big().contains(x) {
            return Err(Error::DescriptorMismatch(self.big().name()));
        }
        Ok(self.in_subfield(x))
    }

    /// Every element of `K` in canonical order.
    fn subfield_elements(&self) -> Result<Vec<<Self::L as Field>::Elem>>;

    /// `Some(witness)` iff `c ∈ {a^2 b : a ∈ L, b ∈ K}`.
    fn square_class_member(
        &self,
        c: &<Self::L as Field>::Elem,
    ) -> Result<Option<SquareClassWitness<<Self::L as Field>::Elem>>>;

    /// Least `c ∈ L` in canonical order outside `{a^2 b}`; `None` when the
    /// square-class set is all of `L`.
    fn square_class_gap(&self) -> Result<Option<<Self::L as Field>::Elem>>;

    fn unsupported(&self) -> Error {
        Error::UnsupportedPair(self.name())
    }

    fn infinite(&self) -> Error {
        Error::InfinitePairUnsupported(self.name())
    }
}

/// `GF(p^m) ⊆ GF(p^n)`, with `K` the fixed field of `x ↦ x^(p^m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTower {
    big: FiniteField,
    sub_degree: u32,
}

impl FiniteTower {
    pub fn new(big: FiniteField, sub_degree: u32) -> Result<Self> {
        if sub_degree == 0 || !big.degree().is_multiple_of(sub_degree) {
            return Err(Error::InvalidField(format!(
                "gf({}^{sub_degree}) is not a subfield of {}",
                big.p(),
                big.name()
            )));
        }
        Ok(Self { big, sub_degree })
    }

    /// `GF(q_small) ⊆ GF(q_big)`.
    pub fn from_orders(q_big: u64, q_small: u64) -> Result<Self> {
        let big = FiniteField::new(q_big)?;
        let (p, m) = super::finite::prime_power(q_small)
            .ok_or_else(|| Error::InvalidField(format!("{q_small} is not a prime power")))?;
        if p != big.p() {
            return Err(Error::InvalidField(format!(
                "gf({q_small}) and {} have different characteristic",
                big.name()
            )));
        }
        Self::new(big, m)
    }

    pub fn sub_degree(&self) -> u32 {
        self.sub_degree
    }

    pub fn subfield_order(&self) -> u64 {
        self.big.p().pow(self.sub_degree)
    }

    /// Brute-force route: tabulate squares, then try every `b ∈ K*`.
    pub fn square_class_by_enumeration(&self, c: &Fq) -> Result<Option<SquareClassWitness<Fq>>> {
        let f = &self.big;
        if f.is_zero(c) {
            return Ok(Some(SquareClassWitness { a: Fq(0), b: Fq(1) }));
        }
        let mut roots: BTreeMap<Fq, Fq> = BTreeMap::new();
        for a in f.elements()? {
            roots.entry(f.mul(&a, &a)).or_insert(a);
        }
        for b in self.subfield_elements()?.into_iter().skip(1) {
            let quotient = f.div(c, &b)?;
            if let Some(a) = roots.get(&quotient) {
                return Ok(Some(SquareClassWitness { a: *a, b }));
            }
        }
        Ok(None)
    }

    /// Group route: the squares form an index-2 subgroup of `L*` (odd `q`),
    /// so `c` is a member iff it is a square or some `b ∈ K*` is not.
    pub fn square_class_by_group(&self, c: &Fq) -> Result<Option<SquareClassWitness<Fq>>> {
        let f = &self.big;
        if let Some(a) = f.sqrt(c) {
            return Ok(Some(SquareClassWitness { a, b: Fq(1) }));
        }
        let Some(b) = self
            .subfield_elements()?
            .into_iter()
            .skip(1)
            .find(|b| !f.is_square(b))
        else {
            return Ok(None);
        };
        let a = f
            .sqrt(&f.div(c, &b)?)
            .expect("quotient of two non-squares is a square");
        Ok(Some(SquareClassWitness { a, b }))
    }
}

impl FieldPair for FiniteTower {
    type L = FiniteField;

    fn big(&self) -> &FiniteField {
        &self.big
    }

    fn kind(&self) -> PairKind {
        PairKind::FiniteTower {
            m: self.sub_degree,
            n: self.big.degree(),
        }
    }

    fn name(&self) -> String {
        format!("{}/gf({})", self.big.name(), self.subfield_order())
    }

    fn degree(&self) -> Degree {
        Degree::Finite((self.big.degree() / self.sub_degree) as u64)
    }

    fn in_subfield(&self, x: &Fq) -> bool {
        self.big.frobenius(*x, self.sub_degree) == *x
    }

    fn subfield_elements(&self) -> Result<Vec<Fq>> {
        let f = &self.big;
        let q = f.order();
        let k = self.subfield_order();
        let step = (q - 1) / (k - 1);
        let gen = f.pow(&f.primitive_element(), step);
        let mut out = Vec::with_capacity(k as usize);
        out.push(Fq(0));
        let mut x = Fq(1);
        for _ in 0..k - 1 {
            out.push(x);
            x = f.mul(&x, &gen);
        }
        out.sort();
        Ok(out)
    }

    fn square_class_member(&self, c: &Fq) -> Result<Option<SquareClassWitness<Fq>>> {
        if !self.big.contains(c) {
            return Err(Error::DescriptorMismatch(self.big.name()));
        }
        if self.big.order() <= ENUMERATION_CAP {
            self.square_class_by_enumeration(c)
        } else {
            self.square_class_by_group(c)
        }
    }

    fn square_class_gap(&self) -> Result<Option<Fq>> {
        let f = &self.big;
        let small = self.subfield_elements()?;
        if f.order().saturating_mul(small.len() as u64) <= ENUMERATION_CAP {
            let mut members = BTreeSet::new();
            for a in f.elements()? {
                let sq = f.mul(&a, &a);
                for b in &small {
                    members.insert(f.mul(&sq, b));
                }
            }
            return Ok(f.elements()?.into_iter().find(|c| !members.contains(c)));
        }
        if f.p() == 2 || small.iter().skip(1).any(|b| !f.is_square(b)) {
            return Ok(None);
        }
        Ok((1..f.order()).map(Fq).find(|c| !f.is_square(c)))
    }
}

/// `GF(p) ⊆ GF(p)(t)`, an extension of infinite degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeInFunctionField {
    big: RatFuncField,
}

impl PrimeInFunctionField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            big: RatFuncField::new(p)?,
        })
    }
}

impl FieldPair for PrimeInFunctionField {
    type L = RatFuncField;

    fn big(&self) -> &RatFuncField {
        &self.big
    }

    fn kind(&self) -> PairKind {
        PairKind::PrimeInFunctionField
    }

    fn name(&self) -> String {
        format!("{}/gf({})", self.big.name(), self.big.p())
    }

    fn degree(&self) -> Degree {
        Degree::Infinite
    }

    fn in_subfield(&self, x: &RatFn) -> bool {
        self.big.is_constant(x)
    }

    fn subfield_elements(&self) -> Result<Vec<RatFn>> {
        Ok((0..self.big.p())
            .map(|c| self.big.from_base(Fq(c)))
            .collect())
    }

    fn square_class_member(&self, c: &RatFn) -> Result<Option<SquareClassWitness<RatFn>>> {
        if !self.big.contains(c) {
            return Err(Error::DescriptorMismatch(self.big.name()));
        }
        let f = &self.big;
        if f.is_zero(c) {
            return Ok(Some(SquareClassWitness {
                a: f.zero(),
                b: f.one(),
            }));
        }
        for b in self.subfield_elements()?.into_iter().skip(1) {
            if let Some(a) = f.sqrt(&f.div(c, &b)?) {
                return Ok(Some(SquareClassWitness { a, b }));
            }
        }
        Ok(None)
    }

    /// Scans polynomials in `t` in canonical order; `t` itself is never a
    /// member, so the scan stops by index `p`.
    fn square_class_gap(&self) -> Result<Option<RatFn>> {
        let p = self.big.p();
        let ring = PolyRing::new(self.big.base());
        for idx in 0..=p {
            let c = self
                .big
                .from_poly(ring.from_coeffs(alloc::vec![Fq(idx % p), Fq(idx / p)]));
            if self.square_class_member(&c)?.is_none() {
                return Ok(Some(c));
            }
        }
        unreachable!("t is outside the square-class set")
    }
}

/// `GF(p)(t^p) ⊆ GF(p)(t)`, purely inseparable of degree `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurelyInseparable {
    big: RatFuncField,
}

impl PurelyInseparable {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            big: RatFuncField::new(p)?,
        })
    }
}

impl FieldPair for PurelyInseparable {
    type L = RatFuncField;

    fn big(&self) -> &RatFuncField {
        &self.big
    }

    fn kind(&self) -> PairKind {
        PairKind::PurelyInseparable
    }

    fn name(&self) -> String {
        let p = self.big.p();
        format!("gf({p})(t)/gf({p})(t^{p})")
    }

    fn degree(&self) -> Degree {
        Degree::Finite(self.big.p())
    }

    fn in_subfield(&self, x: &RatFn) -> bool {
        self.big.is_pth_power(x)
    }

    fn subfield_elements(&self) -> Result<Vec<RatFn>> {
        Err(self.infinite())
    }

    fn square_class_member(&self, _c: &RatFn) -> Result<Option<SquareClassWitness<RatFn>>> {
        Err(self.unsupported())
    }

    fn square_class_gap(&self) -> Result<Option<RatFn>> {
        Err(self.unsupported())
    }
}

/// Any supported pair, as selected at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPair {
    Tower(FiniteTower),
    FunctionField(PrimeInFunctionField),
    Inseparable(PurelyInseparable),
}

impl AnyPair {
    pub fn name(&self) -> String {
        match self {
            AnyPair::Tower(p) => p.name(),
            AnyPair::FunctionField(p) => p.name(),
            AnyPair::Inseparable(p) => p.name(),
        }
    }

    pub fn kind(&self) -> PairKind {
        match self {
            AnyPair::Tower(p) => p.kind(),
            AnyPair::FunctionField(p) => p.kind(),
            AnyPair::Inseparable(p) => p.kind(),
        }
    }
}
