//! Field-theoretic reports on supported pairs, and two explicit
//! constructions: gcds of `p`-th powers for the purely inseparable pair,
//! and the witness polynomial for integer-valued composites.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fields::{
    Degree, Field, FieldPair, FiniteTower, Fq, PairKind, PurelyInseparable, RatFn, RatFuncField,
};
use crate::poly::{Poly, PolyRing};

/// Key order matches the serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub degree: Degree,
    pub algebraic: bool,
    pub separable: bool,
    pub normal: bool,
    pub galois: bool,
    pub purely_inseparable: bool,
    pub galois_group_order: Option<u64>,
    /// `T` is Noetherian exactly when `[L : K]` is finite.
    pub composite_noetherian: bool,
    pub composite_atomic: bool,
    pub composite_accp: bool,
}

pub fn pair_report<P: FieldPair>(pair: &P) -> PairReport {
    let degree = pair.degree();
    let (algebraic, separable, normal, purely_inseparable, galois_group_order) = match pair.kind() {
        PairKind::FiniteTower { m, n } => {
            let d = u64::from(n / m);
            (true, true, true, d == 1, Some(d))
        }
        PairKind::PrimeInFunctionField => (false, false, false, false, None),
        PairKind::PurelyInseparable => (true, false, true, true, None),
    };
    PairReport {
        degree,
        algebraic,
        separable,
        normal,
        galois: algebraic && separable && normal,
        purely_inseparable,
        galois_group_order,
        composite_noetherian: degree.is_finite(),
        composite_atomic: true,
        composite_accp: true,
    }
}

/// Monic minimal polynomial of `x` over `K`, as the product over the orbit
/// of `x` under `y ↦ y^(p^m)`.
pub fn minimal_polynomial(pair: &FiniteTower, x: Fq) -> Poly<Fq> {
    let field = pair.big();
    let ring = PolyRing::new(field);
    let mut orbit = alloc::vec![x];
    loop {
        let next = field.frobenius(*orbit.last().expect("nonempty"), pair.sub_degree());
        if next == x {
            break;
        }
        orbit.push(next);
    }
    ring.from_roots(orbit.iter())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostBezoutWitness {
    /// Exponent with `(f^(p^n), g^(p^n))` principal in `K[X]`.
    pub n: u32,
    /// The monic gcd over `K = GF(p)(s)`, `s = t^p`, written in `s`.
    pub d_over_k: Poly<RatFn>,
    /// The same gcd with `s` replaced by `t^p`.
    pub d: Poly<RatFn>,
}

/// `f^p` computed in `L[X]`, then rewritten over `GF(p)(s)`.
fn pth_power_over_k(pair: &PurelyInseparable, k: &RatFuncField, f: &Poly<RatFn>) -> Poly<RatFn> {
    let field = pair.big();
    let ring = PolyRing::new(field);
    let power = ring.pow(f, field.p() as usize);
    let coeffs = power
        .coeffs()
        .iter()
        .map(|c| {
            field
                .contract_pth_power(c)
                .expect("coefficients of a p-th power lie in GF(p)(t^p)")
        })
        .collect();
    PolyRing::new(k).from_coeffs(coeffs)
}

pub fn almost_bezout_witness(
    pair: &PurelyInseparable,
    f: &Poly<RatFn>,
    g: &Poly<RatFn>,
) -> Result<AlmostBezoutWitness> {
    let field = pair.big();
    let ring = PolyRing::new(field);
    ring.check(f)?;
    ring.check(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroElement);
    }
    let k = RatFuncField::new(field.p())?;
    let k_ring = PolyRing::new(&k);
    let fp = pth_power_over_k(pair, &k, f);
    let gp = pth_power_over_k(pair, &k, g);
    let d_over_k = k_ring.gcd(&fp, &gp);

    let fq = k_ring.div_exact(&fp, &d_over_k)?.expect("gcd divides f^p");
    let gq = k_ring.div_exact(&gp, &d_over_k)?.expect("gcd divides g^p");
    assert!(
        k_ring.is_one(&k_ring.gcd(&fq, &gq)),
        "cofactors of the gcd are coprime"
    );

    let d = ring.from_coeffs(
        d_over_k
            .coeffs()
            .iter()
            .map(|c| field.expand_pth_power(c))
            .collect(),
    );
    Ok(AlmostBezoutWitness { n: 1, d_over_k, d })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntValuedCover {
    /// `B/A`, naming the composite `A + X B[X]`.
    pub cover: FiniteTower,
    pub b: Fq,
    /// `b * prod_{a in A} (X - a)`.
    pub witness: Poly<Fq>,
    /// `witness(a)` for each `a ∈ A`, in canonical order.
    pub values: Vec<(Fq, Fq)>,
}

/// For `A ⊊ B` finite, a polynomial over `B` outside `A[X]` that maps `A`
/// into `A`, using the least `b ∈ B \ A`.
pub fn int_valued_cover(pair: &FiniteTower) -> Result<IntValuedCover> {
    let field = pair.big();
    let a_elems = pair.subfield_elements()?;
    let b = field
        .elements()?
        .into_iter()
        .find(|x| !pair.in_subfield(x))
        .ok_or(Error::NoSuchB)?;
    let ring = PolyRing::new(field);
    let witness = ring.scale(&b, &ring.from_roots(a_elems.iter()));
    let values = a_elems
        .iter()
        .map(|a| (*a, ring.eval(&witness, a)))
        .collect();
    Ok(IntValuedCover {
        cover: pair.clone(),
        b,
        witness,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::PrimeInFunctionField;
    use alloc::vec;

    fn tower(big: u64, small: u64) -> FiniteTower {
        FiniteTower::from_orders(big, small).unwrap()
    }

    #[test]
    fn report_examples() {
        let r = pair_report(&tower(4, 2));
        assert_eq!(r.degree, Degree::Finite(2));
        assert!(r.galois && r.composite_noetherian);
        assert_eq!(r.galois_group_order, Some(2));

        let r = pair_report(&PrimeInFunctionField::new(2).unwrap());
        assert_eq!(r.degree, Degree::Infinite);
        assert!(!r.composite_noetherian && !r.algebraic);

        let r = pair_report(&PurelyInseparable::new(3).unwrap());
        assert_eq!(r.degree, Degree::Finite(3));
        assert!(r.purely_inseparable && !r.separable && !r.galois && r.composite_noetherian);
    }

    #[test]
    fn report_invariants() {
        let mut reports = vec![
            pair_report(&PrimeInFunctionField::new(3).unwrap()),
            pair_report(&PurelyInseparable::new(2).unwrap()),
        ];
        for (b, s) in [(4, 4), (8, 2), (16, 4), (27, 3), (81, 9)] {
            reports.push(pair_report(&tower(b, s)));
        }
        for r in reports {
            assert_eq!(r.composite_noetherian, r.degree.is_finite());
            assert!(!r.galois || (r.separable && r.normal));
            if r.purely_inseparable && r.degree != Degree::Finite(1) {
                assert!(!r.separable);
            }
            if let (Some(order), Degree::Finite(d)) = (r.galois_group_order, r.degree) {
                assert_eq!(order, d);
            }
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        let t = tower(4, 2);
        let ring = PolyRing::new(t.big());
        let poly = |c: &[u64]| ring.from_coeffs(c.iter().map(|&x| Fq(x)).collect());
        assert_eq!(minimal_polynomial(&t, Fq(2)), poly(&[1, 1, 1]));
        assert_eq!(minimal_polynomial(&t, Fq(1)), poly(&[1, 1]));
        let t9 = tower(9, 3);
        let ring9 = PolyRing::new(t9.big());
        assert_eq!(
            minimal_polynomial(&t9, Fq(3)),
            ring9.from_coeffs(vec![Fq(1), Fq(0), Fq(1)])
        );
    }

    #[test]
    fn minimal_polynomial_degrees() {
        for (b, s) in [
            (4, 2),
            (8, 2),
            (9, 3),
            (16, 2),
            (16, 4),
            (27, 3),
            (64, 4),
            (81, 3),
            (81, 9),
        ] {
            let t = tower(b, s);
            let ext = u64::from(t.big().degree() / t.sub_degree());
            let mut max = 0;
            for x in t.big().elements().unwrap() {
                let m = minimal_polynomial(&t, x);
                let deg = m.degree().unwrap() as u64;
                assert_eq!(ext % deg, 0);
                assert!(m.coeffs().iter().all(|c| t.in_subfield(c)));
                assert!(PolyRing::new(t.big()).eval(&m, &x) == Fq(0));
                max = max.max(deg);
            }
            assert_eq!(max, ext);
            let g = t.big().primitive_element();
            assert_eq!(minimal_polynomial(&t, g).degree().unwrap() as u64, ext);
        }
    }

    #[test]
    fn minimal_polynomial_degrees_sampled() {
        use rand_chacha::ChaCha8Rng;
        use rand_core::{RngCore, SeedableRng};
        for (b, s) in [(256, 2), (256, 16), (625, 5), (729, 27), (1024, 4)] {
            let t = tower(b, s);
            let ext = u64::from(t.big().degree() / t.sub_degree());
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let g = t.big().primitive_element();
            let mut max = minimal_polynomial(&t, g).degree().unwrap() as u64;
            for _ in 0..32 {
                let x = Fq(rng.next_u64() % b);
                let m = minimal_polynomial(&t, x);
                let deg = m.degree().unwrap() as u64;
                assert_eq!(ext % deg, 0);
                assert!(PolyRing::new(t.big()).eval(&m, &x) == Fq(0));
                max = max.max(deg);
            }
            assert_eq!(max, ext, "{b}/{s}");
        }
    }

    #[test]
    fn almost_bezout_examples() {
        let pair = PurelyInseparable::new(3).unwrap();
        let field = pair.big();
        let ring = PolyRing::new(field);
        let x_plus_t = ring.from_coeffs(vec![field.t(), field.one()]);
        let w = almost_bezout_witness(&pair, &x_plus_t, &x_plus_t).unwrap();
        assert_eq!(w.n, 1);
        // X^3 + t^3
        let t3 = field.pow(&field.t(), 3);
        assert_eq!(
            w.d,
            ring.from_coeffs(vec![t3, field.zero(), field.zero(), field.one()])
        );
        // over K, the constant is s
        assert_eq!(w.d_over_k.coeffs()[0], field.t());

        let w = almost_bezout_witness(&pair, &ring.x(), &x_plus_t).unwrap();
        assert!(ring.is_one(&w.d));
        let w = almost_bezout_witness(&pair, &ring.one(), &x_plus_t).unwrap();
        assert!(ring.is_one(&w.d));
        assert_eq!(
            almost_bezout_witness(&pair, &Poly::zero(), &x_plus_t),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn int_valued_examples() {
        let c = int_valued_cover(&tower(4, 2)).unwrap();
        assert_eq!(c.b, Fq(2));
        let ring = PolyRing::new(c.cover.big());
        assert_eq!(c.witness, ring.from_coeffs(vec![Fq(0), Fq(2), Fq(2)]));
        assert!(c.values.iter().all(|(_, v)| *v == Fq(0)));

        let c = int_valued_cover(&tower(9, 3)).unwrap();
        assert_eq!(c.values.len(), 3);
        assert!(c.values.iter().all(|(_, v)| *v == Fq(0)));
        assert_eq!(c.witness.degree(), Some(3));

        assert_eq!(int_valued_cover(&tower(4, 4)), Err(Error::NoSuchB));
    }
}
