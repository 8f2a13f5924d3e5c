use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{distinct_prime_factors, is_prime, Field, FieldDescriptor};
use crate::error::{Error, Result};
use crate::poly::{finite as finite_poly, Poly};

/// Element of a finite field, stored as its canonical index.
///
/// The index of `c_0 + c_1 g + ... + c_{n-1} g^{n-1}` is
/// `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`, so index order is the canonical
/// enumeration order (`0, 1, g, g+1` in `GF(4)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fq(pub u64);

/// Largest field order accepted (indices and coefficient products stay in `u64`).
pub const MAX_ORDER: u64 = 1 << 32;
/// Fields up to this order get discrete log tables.
const TABLE_LIMIT: u64 = 1 << 16;
/// `elements()` refuses to materialize anything larger.
const MATERIALIZE_LIMIT: u64 = 1 << 24;

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    p: u64,
    degree: u32,
    order: u64,
    /// Monic modulus, low degree first; empty for prime fields.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// `GF(p)` or `GF(p)[g]/(m(g))`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= MAX_ORDER {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Self {
            inner: Arc::new(Inner {
                p,
                degree: 1,
                order: p,
                modulus: Vec::new(),
                tables: None,
            }),
        })
    }

    /// `GF(q)` with the least irreducible modulus in canonical order.
    pub fn new(q: u64) -> Result<Self> {
        let (p, n) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::of_degree(p, n)
    }

    pub fn of_degree(p: u64, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidField(
                "extension degree must be positive".into(),
            ));
        }
        let base = Self::prime(p)?;
        if n == 1 {
            return Ok(base);
        }
        let order = checked_order(p, n)?;
        let lower = order; // p^n candidates for the lower coefficients
        for idx in 0..lower {
            let mut coeffs = digits(idx, p, n as usize);
            coeffs.push(1);
            let candidate = Poly::from_raw(coeffs.iter().map(|&c| Fq(c)).collect());
            if finite_poly::is_irreducible(&base, &candidate) {
                return Self::build(p, n, order, coeffs);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// Extension field with an explicit modulus (low degree first). The
    /// modulus must be monic and irreducible over `GF(p)`.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let base = Self::prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField(
                "modulus must be monic of positive degree".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        let n = (modulus.len() - 1) as u32;
        if n == 1 {
            return Ok(base);
        }
        let candidate = Poly::from_raw(modulus.iter().map(|&c| Fq(c)).collect());
        if !finite_poly::is_irreducible(&base, &candidate) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        let order = checked_order(p, n)?;
        Self::build(p, n, order, modulus)
    }

    fn build(p: u64, degree: u32, order: u64, modulus: Vec<u64>) -> Result<Self> {
        let mut field = Self {
            inner: Arc::new(Inner {
                p,
                degree,
                order,
                modulus,
                tables: None,
            }),
        };
        if order <= TABLE_LIMIT {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.inner).unwrap().tables = Some(tables);
        }
        Ok(field)
    }

    fn build_tables(&self) -> Tables {
        let q = self.inner.order;
        let gen = self.primitive_element_slow();
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = Fq(1);
        for k in 0..q - 1 {
            exp.push(x.0 as u32);
            log[x.0 as usize] = k as u32;
            x = self.mul_slow(x, gen);
        }
        Tables { exp, log }
    }

    fn primitive_element_slow(&self) -> Fq {
        let q = self.inner.order;
        let factors = distinct_prime_factors(q - 1);
        (1..q)
            .map(Fq)
            .find(|&x| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(x, (q - 1) / r) != Fq(1))
            })
            .expect("finite fields have primitive elements")
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.degree == 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// Coefficients over `GF(p)`, low degree first, length `degree()`.
    pub fn coefficients(&self, a: Fq) -> Vec<u64> {
        digits(a.0, self.inner.p, self.inner.degree as usize)
    }

    /// Element `sum c_i g^i`, reducing through the modulus as needed.
    pub fn from_coefficients(&self, coeffs: &[u64]) -> Fq {
        self.reduce_poly(coeffs)
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: Fq, k: u32) -> Fq {
        let mut x = a;
        for _ in 0..k {
            x = self.pow(&x, self.inner.p);
        }
        x
    }

    /// Inverse Frobenius: the unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Fq) -> Fq {
        self.pow(&a, self.inner.order / self.inner.p)
    }

    /// A generator of the multiplicative group, least in canonical order.
    pub fn primitive_element(&self) -> Fq {
        match &self.inner.tables {
            Some(t) if !t.exp.is_empty() && self.inner.order > 2 => Fq(t.exp[1] as u64),
            _ => self.primitive_element_slow(),
        }
    }

    fn reduce_poly(&self, coeffs: &[u64]) -> Fq {
        let p = self.inner.p;
        let n = self.inner.degree as usize;
        let m = &self.inner.modulus;
        let mut r: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
        if m.is_empty() {
            return Fq(r.first().copied().unwrap_or(0));
        }
        for top in (n..r.len()).rev() {
            let c = r[top];
            if c == 0 {
                continue;
            }
            r[top] = 0;
            for j in 0..n {
                let t = c * m[j] % p;
                r[top - n + j] = (r[top - n + j] + p - t) % p;
            }
        }
        r.truncate(n);
        r.resize(n, 0);
        Fq(undigits(&r, p))
    }

    fn mul_slow(&self, a: Fq, b: Fq) -> Fq {
        let p = self.inner.p;
        if self.inner.degree == 1 {
            return Fq(a.0 * b.0 % p);
        }
        let x = self.coefficients(a);
        let y = self.coefficients(b);
        let mut prod = vec![0u64; x.len() + y.len() - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        self.reduce_poly(&prod)
    }

    fn pow_slow(&self, a: Fq, mut exp: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            exp >>= 1;
        }
        acc
    }

    fn tonelli_shanks(&self, a: Fq) -> Option<Fq> {
        let q = self.inner.order;
        if self.pow(&a, (q - 1) / 2) != Fq(1) {
            return None;
        }
        let mut s = 0;
        let mut odd = q - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let z = (2..q)
            .map(Fq)
            .find(|z| self.pow(z, (q - 1) / 2) != Fq(1))
            .expect("odd fields contain non-squares");
        let mut m = s;
        let mut c = self.pow(&z, odd);
        let mut t = self.pow(&a, odd);
        let mut r = self.pow(&a, odd.div_ceil(2));
        while t != Fq(1) {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Fq(1) {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..m - i - 1 {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

impl Field for FiniteField {
    type Elem = Fq;

    fn descriptor(&self) -> FieldDescriptor {
        if self.is_prime_field() {
            FieldDescriptor::Prime { p: self.inner.p }
        } else {
            FieldDescriptor::Extension {
                p: self.inner.p,
                modulus: self.inner.modulus.clone(),
            }
        }
    }

    fn name(&self) -> String {
        format!("gf({})", self.inner.order)
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn cardinality(&self) -> Option<u64> {
        Some(self.inner.order)
    }

    fn zero(&self) -> Fq {
        Fq(0)
    }

    fn one(&self) -> Fq {
        Fq(1)
    }

    fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.inner.p as i64) as u64)
    }

    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        let p = self.inner.p;
        if p == 2 {
            return Fq(a.0 ^ b.0);
        }
        if self.inner.degree == 1 {
            return Fq((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Fq(out)
    }

    fn neg(&self, a: &Fq) -> Fq {
        let p = self.inner.p;
        if p == 2 {
            return *a;
        }
        if self.inner.degree == 1 {
            return Fq((p - a.0) % p);
        }
        let mut x = a.0;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Fq(out)
    }

    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq(0);
        }
        match &self.inner.tables {
            Some(t) => {
                let q1 = self.inner.order - 1;
                let k = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % q1;
                Fq(t.exp[k as usize] as u64)
            }
            None => self.mul_slow(*a, *b),
        }
    }

    fn inv(&self, a: &Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        let q1 = self.inner.order - 1;
        Some(match &self.inner.tables {
            Some(t) => Fq(t.exp[((q1 - t.log[a.0 as usize] as u64) % q1) as usize] as u64),
            None => self.pow_slow(*a, q1 - 1),
        })
    }

    fn contains(&self, a: &Fq) -> bool {
        a.0 < self.inner.order
    }

    fn elements(&self) -> Result<Vec<Fq>> {
        if self.inner.order > MATERIALIZE_LIMIT {
            return Err(Error::NotSupported(format!(
                "{} is too large to enumerate",
                self.name()
            )));
        }
        Ok((0..self.inner.order).map(Fq).collect())
    }

    fn is_square(&self, a: &Fq) -> bool {
        if a.0 == 0 || self.inner.p == 2 {
            return true;
        }
        match &self.inner.tables {
            Some(t) => t.log[a.0 as usize] % 2 == 0,
            None => self.pow(a, (self.inner.order - 1) / 2) == Fq(1),
        }
    }

    fn sqrt(&self, a: &Fq) -> Option<Fq> {
        if a.0 == 0 {
            return Some(Fq(0));
        }
        if self.inner.p == 2 {
            return Some(self.pow(a, self.inner.order / 2));
        }
        let root = match &self.inner.tables {
            Some(t) => {
                let l = t.log[a.0 as usize];
                if l % 2 != 0 {
                    return None;
                }
                Fq(t.exp[(l / 2) as usize] as u64)
            }
            None => self.tonelli_shanks(*a)?,
        };
        Some(root.min(self.neg(&root)))
    }

    fn generator_symbol(&self) -> Option<char> {
        (!self.is_prime_field()).then_some('g')
    }

    fn generator(&self) -> Option<Fq> {
        (!self.is_prime_field()).then_some(Fq(self.inner.p))
    }

    fn render(&self, a: &Fq) -> String {
        if self.is_prime_field() {
            return a.0.to_string();
        }
        let coeffs = self.coefficients(*a);
        let mut terms = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "g".to_string(),
                (1, _) => format!("{c}*g"),
                (_, 1) => format!("g^{i}"),
                _ => format!("{c}*g^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

fn checked_order(p: u64, n: u32) -> Result<u64> {
    p.checked_pow(n)
        .filter(|&q| q < MAX_ORDER)
        .ok_or_else(|| Error::InvalidField(format!("{p}^{n} exceeds the supported field size")))
}

/// `q = p^n` decomposition.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = super::smallest_prime_factor(q);
    let mut n = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

fn digits(mut x: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}
