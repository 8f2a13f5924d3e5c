use composite_core::composite::{
    count_up_to, elements_up_to, factor_t, is_irreducible_t, make_composite, CompositeElement,
};
use composite_core::explorer::{DefinitionalOracle, Explorer};
use composite_core::fields::{Field, FieldPair, FiniteField, FiniteTower, Fq, RatFn, RatFuncField};
use composite_core::poly::{Poly, PolyField, PolyRing};
use composite_core::squarefree::{
    is_radical_bounded, is_squarefree_t, sqf_agreement, RadicalValue, SqfAgreement, SqfBranch,
};
use proptest::prelude::*;

const ORDERS: [u64; 14] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81, 125, 65537];

fn field(i: usize) -> FiniteField {
    FiniteField::new(ORDERS[i % ORDERS.len()]).unwrap()
}

fn poly(f: &FiniteField, raw: &[u64]) -> Poly<Fq> {
    PolyRing::new(f).from_coeffs(raw.iter().map(|r| Fq(r % f.order())).collect())
}

/// Monic polynomials of exactly degree `d`.
fn monics(f: &FiniteField, d: usize) -> Vec<Poly<Fq>> {
    let q = f.order();
    let count = q.pow(d as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(Fq(idx % q));
                idx /= q;
            }
            coeffs.push(Fq(1));
            PolyRing::new(f).from_coeffs(coeffs)
        })
        .collect()
}

proptest! {
    #[test]
    fn field_axioms(i in 0usize..14, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(i);
        let (a, b, c) = (Fq(a % f.order()), Fq(b % f.order()), Fq(c % f.order()));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if a != f.zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            prop_assert_eq!(f.pow(&a, f.order() - 1), f.one());
        }
        if let Some(r) = f.sqrt(&a) {
            prop_assert_eq!(f.mul(&r, &r), a);
        } else {
            prop_assert!(!f.is_square(&a));
        }
    }

    #[test]
    fn rational_function_axioms(
        p in prop::sample::select(vec![2u64, 3, 5]),
        raw in proptest::collection::vec(proptest::collection::vec(0u64..5, 0..4), 6),
    ) {
        let f = RatFuncField::new(p).unwrap();
        let base = PolyRing::new(f.base());
        let mk = |n: &[u64], d: &[u64]| -> RatFn {
            let den = base.from_coeffs(d.iter().map(|c| Fq(c % p)).collect());
            let den = if den.is_zero() { base.one() } else { den };
            f.fraction(base.from_coeffs(n.iter().map(|c| Fq(c % p)).collect()), den).unwrap()
        };
        let a = mk(&raw[0], &raw[1]);
        let b = mk(&raw[2], &raw[3]);
        let c = mk(&raw[4], &raw[5]);
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.sub(&f.add(&a, &b), &b), a.clone());
        if !f.is_zero(&b) {
            prop_assert_eq!(f.mul(&f.div(&a, &b).unwrap(), &b), a.clone());
        }
        prop_assert!(f.is_square(&f.mul(&a, &a)));
        let ap = f.pow(&a, p);
        prop_assert!(f.is_pth_power(&ap));
        prop_assert_eq!(f.expand_pth_power(&f.contract_pth_power(&ap).unwrap()), ap);
    }

    #[test]
    fn factorization_round_trip(i in 0usize..13, raw in proptest::collection::vec(any::<u64>(), 1..9), seed in any::<u64>()) {
        let f = field(i);
        let ring = PolyRing::new(&f);
        let g = poly(&f, &raw);
        prop_assume!(!g.is_zero());
        let fac = f.poly_factor(&g, seed).unwrap();
        prop_assert_eq!(fac.expand(&f), g.clone());
        for (q, _) in &fac.factors {
            prop_assert!(f.poly_is_irreducible(q).unwrap());
            prop_assert!(ring.monic(q).1 == *q);
        }
        prop_assert_eq!(f.poly_factor(&g, 0).unwrap(), fac);
    }

    #[test]
    fn composite_factor_round_trip(raw in proptest::collection::vec(0u64..9, 1..7)) {
        let pair = FiniteTower::from_orders(9, 3).unwrap();
        let field = pair.big();
        let ring = PolyRing::new(field);
        let mut coeffs: Vec<Fq> = raw.iter().map(|&r| Fq(r)).collect();
        coeffs[0] = Fq(coeffs[0].0 % 3);
        let e = make_composite(&pair, ring.from_coeffs(coeffs)).unwrap();
        prop_assume!(e.degree().unwrap_or(0) > 0);
        let fac = factor_t(&pair, &e).unwrap();
        prop_assert_eq!(fac.expand(field), e.poly().clone());
        prop_assert!(pair.in_subfield(&fac.unit));
        for a in &fac.atoms {
            let atom = make_composite(&pair, a.to_poly(field)).unwrap();
            prop_assert!(is_irreducible_t(&pair, &atom).unwrap());
        }
    }
}

/// Trial division by every monic polynomial of degree up to `deg / 2`.
fn irreducible_by_trial(f: &FiniteField, g: &Poly<Fq>) -> bool {
    let ring = PolyRing::new(f);
    let n = g.degree().unwrap();
    if n == 0 {
        return false;
    }
    (1..=n / 2).all(|d| monics(f, d).iter().all(|m| !ring.divides(m, g).unwrap()))
}

#[test]
fn irreducibility_matches_trial_division() {
    for q in [2, 3, 4] {
        let f = FiniteField::new(q).unwrap();
        let ring = PolyRing::new(&f);
        for d in 1..=4 {
            for m in monics(&f, d) {
                assert_eq!(
                    f.poly_is_irreducible(&m).unwrap(),
                    irreducible_by_trial(&f, &m),
                    "{m:?}"
                );
                let fac = f.poly_factor(&m, 1).unwrap();
                assert_eq!(fac.expand(&f), m);
                let square_free_by_trial = (1..=d / 2).all(|k| {
                    monics(&f, k)
                        .iter()
                        .all(|s| !ring.divides(&ring.mul(s, s), &m).unwrap())
                });
                assert_eq!(
                    f.poly_square_divisor(&m).unwrap().is_none(),
                    square_free_by_trial,
                    "{m:?}"
                );
            }
        }
    }
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    // number of monic irreducibles of degree n over GF(q): (1/n) sum_{d | n} mu(d) q^(n/d)
    for (q, n, expected) in [
        (2u64, 4usize, 3usize),
        (3, 3, 8),
        (4, 2, 6),
        (5, 2, 10),
        (2, 6, 9),
    ] {
        let f = FiniteField::new(q).unwrap();
        let count = monics(&f, n)
            .iter()
            .filter(|m| f.poly_is_irreducible(m).unwrap())
            .count();
        assert_eq!(count, expected, "GF({q}) degree {n}");
    }
}

#[test]
fn enumeration_counts_follow_closed_form() {
    for (big, small, deg) in [(2, 2, 4), (4, 2, 3), (9, 3, 2), (8, 2, 2), (16, 4, 2)] {
        let pair = FiniteTower::from_orders(big, small).unwrap();
        let all = elements_up_to(&pair, deg).unwrap();
        let expected = small * big.pow(deg as u32) - 1;
        assert_eq!(all.len() as u64, expected);
        assert_eq!(count_up_to(&pair, deg).unwrap(), u128::from(expected));
        assert!(
            all.windows(2).all(|w| w[0] < w[1]),
            "not strictly canonical"
        );
    }
}

#[test]
fn agreement_consistent_with_x_squared_branch() {
    for (big, small) in [(4, 2), (8, 2), (9, 3), (16, 4), (25, 5), (27, 3), (49, 7)] {
        let pair = FiniteTower::from_orders(big, small).unwrap();
        let mut branch_true = false;
        for e in elements_up_to(&pair, 3).unwrap() {
            if e.degree() == Some(0) {
                continue;
            }
            let v = is_squarefree_t(&pair, &e).unwrap();
            if v.branch == SqfBranch::XSquaredBranch {
                assert!(v.value);
                branch_true = true;
            }
        }
        let agree = sqf_agreement(&pair).unwrap() == SqfAgreement::Agree;
        assert_eq!(agree, !branch_true, "{big}/{small}");
    }
}

#[test]
fn radical_implies_squarefree_and_witnesses_verify() {
    for (big, small, deg) in [(4, 2, 2), (9, 3, 2), (2, 2, 3)] {
        let pair = FiniteTower::from_orders(big, small).unwrap();
        let oracle = DefinitionalOracle::build(&pair, deg).unwrap();
        for e in elements_up_to(&pair, deg).unwrap() {
            if e.degree() == Some(0) {
                continue;
            }
            let v = is_radical_bounded(&pair, &e, 2, 2).unwrap();
            if v.value == RadicalValue::Radical {
                assert!(is_squarefree_t(&pair, &e).unwrap().value);
                assert!(oracle.is_squarefree(&e));
            }
            if let RadicalValue::NotRadical { x, m } = &v.value {
                let ring = PolyRing::new(pair.big());
                let power = ring.pow(x.poly(), *m as usize);
                let power: CompositeElement<Fq> = make_composite(&pair, power).unwrap();
                let divides = |g: &CompositeElement<Fq>, f: &CompositeElement<Fq>| {
                    composite_core::composite::divides_in_t(&pair, g, f)
                        .unwrap()
                        .is_some()
                };
                assert!(divides(&e, &power) && !divides(&e, x));
            }
        }
    }
}

#[test]
fn length_sets_bounded_by_degree() {
    let pair = FiniteTower::from_orders(9, 3).unwrap();
    let mut ex = Explorer::new(&pair).unwrap();
    for e in elements_up_to(&pair, 3).unwrap() {
        if e.degree() == Some(0) {
            continue;
        }
        let report = ex.invariant_report(&e).unwrap();
        assert!(*report.length_set.last().unwrap() <= report.degree);
        assert!(*report.length_set.first().unwrap() >= 1);
        assert_eq!(ex.lengths_by_recursion(&e).unwrap(), report.length_set);
        let canonical = factor_t(&pair, &e).unwrap().atoms.len();
        assert!(report.length_set.contains(&canonical));
    }
}
