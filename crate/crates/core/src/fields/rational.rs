use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Field, FieldDescriptor, FiniteField, Fq};
use crate::error::{Error, Result};
use crate::poly::{finite as finite_poly, Poly, PolyRing};

/// Reduced fraction `num / den` over `GF(p)[t]` with `den` monic.
/// Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFn {
    num: Poly<Fq>,
    den: Poly<Fq>,
}

impl RatFn {
    pub fn numerator(&self) -> &Poly<Fq> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Fq> {
        &self.den
    }
}

/// The rational function field `GF(p)(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFuncField {
    base: FiniteField,
}

impl RatFuncField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            base: FiniteField::prime(p)?,
        })
    }

    /// The constant field `GF(p)`.
    pub fn base(&self) -> &FiniteField {
        &self.base
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    fn ring(&self) -> PolyRing<'_, FiniteField> {
        PolyRing::new(&self.base)
    }

    /// Reduces `num / den`.
    pub fn fraction(&self, num: Poly<Fq>, den: Poly<Fq>) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.ring();
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = ring.gcd(&num, &den);
        let num = ring.div_exact(&num, &g)?.expect("gcd divides");
        let den = ring.div_exact(&den, &g)?.expect("gcd divides");
        let (lead, den) = ring.monic(&den);
        let lead_inv = self.base.inv(&lead).expect("nonzero");
        Ok(RatFn {
            num: ring.scale(&lead_inv, &num),
            den,
        })
    }

    pub fn from_poly(&self, num: Poly<Fq>) -> RatFn {
        RatFn {
            num,
            den: self.ring().one(),
        }
    }

    pub fn from_base(&self, c: Fq) -> RatFn {
        self.from_poly(self.ring().constant(c))
    }

    /// The transcendental `t`.
    pub fn t(&self) -> RatFn {
        self.from_poly(self.ring().x())
    }

    /// Whether `c` lies in `GF(p)`.
    pub fn is_constant(&self, c: &RatFn) -> bool {
        c.num.degree().unwrap_or(0) == 0 && c.den.degree() == Some(0)
    }

    /// Whether `c` is a `p`-th power, i.e. lies in `GF(p)(t^p)`.
    pub fn is_pth_power(&self, c: &RatFn) -> bool {
        let p = self.p() as usize;
        let only_multiples = |f: &Poly<Fq>| {
            f.coeffs()
                .iter()
                .enumerate()
                .all(|(i, a)| a.0 == 0 || i % p == 0)
        };
        only_multiples(&c.num) && only_multiples(&c.den)
    }

    /// Rewrites a `p`-th power `c(t) = d(t^p)` as `d`. `None` when `c` is
    /// not a `p`-th power.
    pub fn contract_pth_power(&self, c: &RatFn) -> Option<RatFn> {
        if !self.is_pth_power(c) {
            return None;
        }
        let p = self.p() as usize;
        let contract =
            |f: &Poly<Fq>| Poly::from_raw(f.coeffs().iter().step_by(p).copied().collect());
        Some(RatFn {
            num: contract(&c.num),
            den: contract(&c.den),
        })
    }

    /// `c(t) -> c(t^p)`.
    pub fn expand_pth_power(&self, c: &RatFn) -> RatFn {
        let p = self.p() as usize;
        let expand = |f: &Poly<Fq>| {
            let mut out = Vec::new();
            for (i, a) in f.coeffs().iter().enumerate() {
                if i > 0 {
                    out.extend(core::iter::repeat_n(Fq(0), p - 1));
                }
                out.push(*a);
            }
            Poly::from_raw(out)
        };
        RatFn {
            num: expand(&c.num),
            den: expand(&c.den),
        }
    }

    /// Square root of a nonzero monic polynomial, if it is a square.
    fn poly_sqrt(&self, f: &Poly<Fq>) -> Option<Poly<Fq>> {
        let ring = self.ring();
        let fac = finite_poly::factor(&self.base, f, 0).ok()?;
        let unit_root = self.base.sqrt(&fac.unit)?;
        let mut root = ring.constant(unit_root);
        for (g, k) in &fac.factors {
            if k % 2 != 0 {
                return None;
            }
            root = ring.mul(&root, &ring.pow(g, k / 2));
        }
        Some(root)
    }

    fn render_poly(&self, f: &Poly<Fq>) -> String {
        let mut terms = Vec::new();
        for (i, c) in f.coeffs().iter().enumerate().rev() {
            if c.0 == 0 {
                continue;
            }
            terms.push(match (i, c.0) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl Field for RatFuncField {
    type Elem = RatFn;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::RationalFunction { p: self.p() }
    }

    fn name(&self) -> String {
        format!("gf({})(t)", self.p())
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn cardinality(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> RatFn {
        self.from_poly(Poly::zero())
    }

    fn one(&self) -> RatFn {
        self.from_poly(self.ring().one())
    }

    fn from_int(&self, n: i64) -> RatFn {
        self.from_base(self.base.from_int(n))
    }

    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let ring = self.ring();
        if a.den == b.den {
            return self
                .fraction(ring.add(&a.num, &b.num), a.den.clone())
                .unwrap();
        }
        let num = ring.add(&ring.mul(&a.num, &b.den), &ring.mul(&b.num, &a.den));
        self.fraction(num, ring.mul(&a.den, &b.den)).unwrap()
    }

    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn {
            num: self.ring().neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let ring = self.ring();
        self.fraction(ring.mul(&a.num, &b.num), ring.mul(&a.den, &b.den))
            .unwrap()
    }

    fn inv(&self, a: &RatFn) -> Option<RatFn> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.fraction(a.den.clone(), a.num.clone()).unwrap())
    }

    fn contains(&self, a: &RatFn) -> bool {
        let ring = self.ring();
        if ring.check(&a.num).is_err() || ring.check(&a.den).is_err() {
            return false;
        }
        if a.den.leading() != Some(&Fq(1)) {
            return false;
        }
        if a.num.is_zero() {
            return ring.is_one(&a.den);
        }
        ring.is_one(&ring.gcd(&a.num, &a.den))
    }

    fn elements(&self) -> Result<Vec<RatFn>> {
        Err(Error::InfiniteField(self.name()))
    }

    /// `u * n / d` with `n`, `d` monic is a square iff `u` is a square in
    /// `GF(p)` and every multiplicity in the square-free decompositions of
    /// `n` and `d` is even.
    fn is_square(&self, a: &RatFn) -> bool {
        if a.num.is_zero() {
            return true;
        }
        let ring = self.ring();
        let (unit, n) = ring.monic(&a.num);
        if !self.base.is_square(&unit) {
            return false;
        }
        [n, a.den.clone()].iter().all(|f| {
            f.degree() == Some(0)
                || finite_poly::squarefree_decomposition(&self.base, f)
                    .map(|d| d.parts.iter().all(|(_, k)| k % 2 == 0))
                    .unwrap_or(false)
        })
    }

    fn sqrt(&self, a: &RatFn) -> Option<RatFn> {
        if a.num.is_zero() {
            return Some(self.zero());
        }
        let num = self.poly_sqrt(&a.num)?;
        let den = self.poly_sqrt(&a.den)?;
        let root = self.fraction(num, den).ok()?;
        let other = self.neg(&root);
        Some(root.min(other))
    }

    fn generator_symbol(&self) -> Option<char> {
        Some('t')
    }

    fn generator(&self) -> Option<RatFn> {
        Some(self.t())
    }

    fn render(&self, a: &RatFn) -> String {
        let num = self.render_poly(&a.num);
        if self.ring().is_one(&a.den) {
            return num;
        }
        let den = self.render_poly(&a.den);
        let wrap = |s: String, more: bool| if more { format!("({s})") } else { s };
        let num_wrapped = wrap(num.clone(), num.contains('+'));
        let den_wrapped = wrap(den.clone(), den.contains('+') || den.contains('*'));
        format!("{num_wrapped}/{den_wrapped}")
    }
}
