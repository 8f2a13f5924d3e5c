//! The low-degree polynomial algorithms available over `GF(p)(t)`.
//!
//! Roots of a quadratic are found by clearing denominators: with `D` the
//! lcm of the coefficient denominators, `Y = D X` is a root of a monic
//! quadratic over `GF(p)[t]`, hence a polynomial dividing its constant
//! term. The candidate set is finite and searched exhaustively.

use alloc::vec;
use alloc::vec::Vec;

use super::{finite as finite_poly, Factorization, Poly, PolyField, PolyRing};
use crate::error::{Error, Result};
use crate::fields::{Field, Fq, RatFn, RatFuncField};

/// Distinct roots in `GF(p)(t)` of a degree-2 polynomial, sorted.
pub fn quadratic_roots(field: &RatFuncField, f: &Poly<RatFn>) -> Result<Vec<RatFn>> {
    if f.degree() != Some(2) {
        return Err(unsupported(field, f));
    }
    let ring = PolyRing::new(field);
    let base = field.base();
    let base_ring = PolyRing::new(base);
    let monic = ring.monic(f).1;
    let b = &monic.coeffs()[1];
    let c = &monic.coeffs()[0];

    if field.is_zero(c) {
        let mut roots = vec![field.zero(), field.neg(b)];
        roots.sort();
        roots.dedup();
        return Ok(roots);
    }

    let lcm = {
        let (db, dc) = (b.denominator(), c.denominator());
        let g = base_ring.gcd(db, dc);
        base_ring
            .div_exact(&base_ring.mul(db, dc), &g)?
            .expect("gcd divides")
    };
    let to_poly = |x: &RatFn, scale: &Poly<Fq>| {
        let num = base_ring.mul(x.numerator(), scale);
        base_ring
            .div_exact(&num, x.denominator())
            .unwrap()
            .expect("lcm clears denominators")
    };
    let big_b = to_poly(b, &lcm);
    let big_c = to_poly(c, &base_ring.mul(&lcm, &lcm));

    let fac = finite_poly::factor(base, &big_c, 0)?;
    let mut divisors = vec![base_ring.one()];
    for (g, k) in &fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (k + 1));
        for d in &divisors {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..*k {
                power = base_ring.mul(&power, g);
                next.push(power.clone());
            }
        }
        divisors = next;
    }

    let mut roots = Vec::new();
    for d in &divisors {
        for v in 1..field.p() {
            let y = base_ring.scale(&Fq(v), d);
            let value = base_ring.add(
                &base_ring.add(&base_ring.mul(&y, &y), &base_ring.mul(&big_b, &y)),
                &big_c,
            );
            if value.is_zero() {
                roots.push(field.fraction(y, lcm.clone())?);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn unsupported(field: &RatFuncField, f: &Poly<RatFn>) -> Error {
    Error::UnsupportedDegree {
        field: field.name(),
        degree: f.degree().unwrap_or(0),
    }
}

impl PolyField for RatFuncField {
    fn poly_square_divisor(&self, f: &Poly<RatFn>) -> Result<Option<Poly<RatFn>>> {
        let ring = PolyRing::new(self);
        let n = f.degree().ok_or(Error::ZeroElement)?;
        if n <= 1 {
            return Ok(None);
        }
        if ring.is_one(&ring.gcd(f, &ring.derivative(f))) {
            return Ok(None);
        }
        if n > 2 {
            return Err(unsupported(self, f));
        }
        let roots = quadratic_roots(self, f)?;
        if let [r] = roots.as_slice() {
            let linear = ring.from_coeffs(vec![self.neg(r), self.one()]);
            if ring.mul(&linear, &linear) == ring.monic(f).1 {
                return Ok(Some(linear));
            }
        }
        Ok(None)
    }

    fn poly_is_irreducible(&self, f: &Poly<RatFn>) -> Result<bool> {
        match f.degree() {
            None | Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(2) => Ok(quadratic_roots(self, f)?.is_empty()),
            Some(_) => Err(unsupported(self, f)),
        }
    }

    fn poly_factor(&self, f: &Poly<RatFn>, _seed: u64) -> Result<Factorization<RatFn>> {
        let ring = PolyRing::new(self);
        let (unit, monic) = ring.monic(f);
        let factors = match f.degree() {
            None => return Err(Error::ZeroElement),
            Some(0) => Vec::new(),
            Some(1) => vec![(monic, 1)],
            Some(2) => {
                let roots = quadratic_roots(self, f)?;
                let linear = |r: &RatFn| ring.from_coeffs(vec![self.neg(r), self.one()]);
                match roots.as_slice() {
                    [] => vec![(monic, 1)],
                    [r] => vec![(linear(r), 2)],
                    _ => {
                        let mut fs: Vec<_> = roots.iter().map(|r| (linear(r), 1)).collect();
                        fs.sort();
                        fs
                    }
                }
            }
            Some(_) => return Err(unsupported(self, f)),
        };
        Ok(Factorization { unit, factors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(field: &RatFuncField, b: RatFn, c: RatFn) -> Poly<RatFn> {
        PolyRing::new(field).from_coeffs(vec![c, b, field.one()])
    }

    #[test]
    fn x2_plus_t_is_irreducible_in_characteristic_two() {
        let f = RatFuncField::new(2).unwrap();
        let p = quad(&f, f.zero(), f.t());
        assert_eq!(f.poly_is_irreducible(&p), Ok(true));
        assert_eq!(f.poly_square_divisor(&p), Ok(None));
    }

    #[test]
    fn square_of_linear_is_detected() {
        let f = RatFuncField::new(2).unwrap();
        let t2 = f.mul(&f.t(), &f.t());
        // X^2 + t^2 = (X + t)^2
        let p = quad(&f, f.zero(), t2);
        let ring = PolyRing::new(&f);
        let lin = ring.from_coeffs(vec![f.t(), f.one()]);
        assert_eq!(f.poly_square_divisor(&p), Ok(Some(lin.clone())));
        assert_eq!(f.poly_factor(&p, 0).unwrap().factors, vec![(lin, 2)]);
    }

    #[test]
    fn artin_schreier_roots_with_denominators() {
        let f = RatFuncField::new(2).unwrap();
        let ring = PolyRing::new(&f);
        // roots 1/t and 1/t + 1: X^2 + X + (1/t)(1/t + 1)
        let r = f.inv(&f.t()).unwrap();
        let s = f.add(&r, &f.one());
        let p = ring.from_roots([&r, &s]);
        let roots = quadratic_roots(&f, &p).unwrap();
        let mut expected = vec![r, s];
        expected.sort();
        assert_eq!(roots, expected);
        assert_eq!(f.poly_is_irreducible(&p), Ok(false));
        // X^2 + X + t has no root: t = n(n+1) forces deg n < 1
        assert_eq!(f.poly_is_irreducible(&quad(&f, f.one(), f.t())), Ok(true));
    }

    #[test]
    fn cubic_inputs_are_rejected() {
        let f = RatFuncField::new(2).unwrap();
        let ring = PolyRing::new(&f);
        let cubic = ring.monomial(f.one(), 3);
        assert!(matches!(
            f.poly_is_irreducible(&cubic),
            Err(Error::UnsupportedDegree { degree: 3, .. })
        ));
    }

    /// Odd characteristic: reducible iff the discriminant is a square.
    #[test]
    fn root_search_matches_discriminant_in_gf3t() {
        let f = RatFuncField::new(3).unwrap();
        let base = PolyRing::new(f.base());
        let mut small = Vec::new();
        for idx in 0..27u64 {
            let coeffs = vec![Fq(idx % 3), Fq(idx / 3 % 3), Fq(idx / 9)];
            small.push(f.from_poly(base.from_coeffs(coeffs)));
        }
        let t_inv = f.inv(&f.t()).unwrap();
        let mut values = small.clone();
        values.extend(small.iter().map(|x| f.mul(x, &t_inv)));
        for b in values.iter().step_by(3) {
            for c in values.iter().step_by(2) {
                let p = quad(&f, b.clone(), c.clone());
                let disc = f.sub(&f.mul(b, b), &f.mul(&f.from_int(4), c));
                let reducible = f.is_square(&disc);
                assert_eq!(
                    f.poly_is_irreducible(&p).unwrap(),
                    !reducible,
                    "b={b:?} c={c:?}"
                );
                let fac = f.poly_factor(&p, 0).unwrap();
                assert_eq!(fac.expand(&f), p);
            }
        }
    }
}
