//! Square-free decomposition and complete factorization over finite fields:
//! square-free split, distinct-degree split, then Cantor-Zassenhaus
//! equal-degree splitting with a seeded generator.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{Factorization, Poly, PolyField, PolyRing};
use crate::error::{Error, Result};
use crate::fields::{FiniteField, Fq};

/// `(part, multiplicity)` pairs with square-free, pairwise coprime monic
/// parts; `f = unit * prod(part^multiplicity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Fq,
    pub parts: Vec<(Poly<Fq>, usize)>,
}

pub fn squarefree_decomposition(
    field: &FiniteField,
    f: &Poly<Fq>,
) -> Result<SquarefreeDecomposition> {
    let ring = PolyRing::new(field);
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (unit, monic) = ring.monic(f);
    let mut parts = Vec::new();
    decompose_monic(field, &monic, 1, &mut parts);
    parts.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(SquarefreeDecomposition { unit, parts })
}

fn decompose_monic(
    field: &FiniteField,
    f: &Poly<Fq>,
    scale: usize,
    out: &mut Vec<(Poly<Fq>, usize)>,
) {
    let ring = PolyRing::new(field);
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let mut c = ring.gcd(f, &ring.derivative(f));
    let mut w = ring.div_exact(f, &c).unwrap().expect("gcd divides f");
    let mut i = 1;
    while !ring.is_one(&w) {
        let y = ring.gcd(&w, &c);
        let part = ring.div_exact(&w, &y).unwrap().expect("gcd divides w");
        if !ring.is_one(&part) {
            out.push((part, i * scale));
        }
        w = y;
        c = ring.div_exact(&c, &w).unwrap().expect("w divides c");
        i += 1;
    }
    if !ring.is_one(&c) {
        // c is a p-th power: every exponent is a multiple of p
        let p = field.p() as usize;
        let root = ring.from_coeffs(
            c.coeffs()
                .iter()
                .step_by(p)
                .map(|&a| field.pth_root(a))
                .collect(),
        );
        decompose_monic(field, &root, scale * p, out);
    }
}

/// Splits a monic square-free `f` into `(product of all degree-d factors, d)`.
pub fn distinct_degree(field: &FiniteField, f: &Poly<Fq>) -> Vec<(Poly<Fq>, usize)> {
    let ring = PolyRing::new(field);
    let q = field.order();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ring.x();
    let mut h = ring.rem(&x, &rest).unwrap();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = ring.pow_mod(&h, q, &rest);
        let g = ring.gcd(&rest, &ring.sub(&h, &x));
        if !ring.is_one(&g) {
            rest = ring.div_exact(&rest, &g).unwrap().unwrap();
            h = ring.rem(&h, &rest).unwrap();
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

/// Splits a monic square-free `f` whose irreducible factors all have degree `d`.
pub fn equal_degree(
    field: &FiniteField,
    f: &Poly<Fq>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Poly<Fq>> {
    let ring = PolyRing::new(field);
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let q = field.order();
    loop {
        let a = ring.from_coeffs((0..n).map(|_| Fq(rng.next_u64() % q)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = ring.gcd(f, &a);
        let candidate = if !ring.is_one(&g) {
            g
        } else {
            let b = if field.p() == 2 {
                trace_map(field, &a, d, f)
            } else {
                let norm = frobenius_norm(field, &a, d, f);
                let half = ring.pow_mod(&norm, (q - 1) / 2, f);
                ring.sub(&half, &ring.one())
            };
            ring.gcd(f, &b)
        };
        let k = candidate.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = ring.div_exact(f, &candidate).unwrap().unwrap();
            let mut out = equal_degree(field, &candidate, d, rng);
            out.extend(equal_degree(field, &other, d, rng));
            return out;
        }
    }
}

/// `a^(1 + q + ... + q^(d-1)) mod f`.
fn frobenius_norm(field: &FiniteField, a: &Poly<Fq>, d: usize, f: &Poly<Fq>) -> Poly<Fq> {
    let ring = PolyRing::new(field);
    let q = field.order();
    let mut acc = ring.rem(a, f).unwrap();
    let mut conj = acc.clone();
    for _ in 1..d {
        conj = ring.pow_mod(&conj, q, f);
        acc = ring.mul_mod(&acc, &conj, f);
    }
    acc
}

/// `sum_{i < k d} a^(2^i) mod f` for `q = 2^k`.
fn trace_map(field: &FiniteField, a: &Poly<Fq>, d: usize, f: &Poly<Fq>) -> Poly<Fq> {
    let ring = PolyRing::new(field);
    let steps = field.degree() as usize * d;
    let mut term = ring.rem(a, f).unwrap();
    let mut acc = term.clone();
    for _ in 1..steps {
        term = ring.mul_mod(&term, &term, f);
        acc = ring.add(&acc, &term);
    }
    acc
}

/// Complete factorization into monic irreducibles, canonically sorted.
pub fn factor(field: &FiniteField, f: &Poly<Fq>, seed: u64) -> Result<Factorization<Fq>> {
    let sqf = squarefree_decomposition(field, f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in &sqf.parts {
        for (block, d) in distinct_degree(field, part) {
            for irr in equal_degree(field, &block, d, &mut rng) {
                factors.push((irr, *mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization {
        unit: sqf.unit,
        factors,
    })
}

/// Irreducibility over the coefficient field; `false` for constants.
pub fn is_irreducible(field: &FiniteField, f: &Poly<Fq>) -> bool {
    let ring = PolyRing::new(field);
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let monic = ring.monic(f).1;
    if !ring.is_one(&ring.gcd(&monic, &ring.derivative(&monic))) {
        return false;
    }
    let blocks = distinct_degree(field, &monic);
    blocks.len() == 1 && blocks[0].1 == n
}

impl PolyField for FiniteField {
    fn poly_square_divisor(&self, f: &Poly<Fq>) -> Result<Option<Poly<Fq>>> {
        let sqf = squarefree_decomposition(self, f)?;
        Ok(sqf
            .parts
            .into_iter()
            .find(|(_, k)| *k >= 2)
            .map(|(part, _)| part))
    }

    fn poly_is_irreducible(&self, f: &Poly<Fq>) -> Result<bool> {
        Ok(is_irreducible(self, f))
    }

    fn poly_factor(&self, f: &Poly<Fq>, seed: u64) -> Result<Factorization<Fq>> {
        factor(self, f, seed)
    }
}
