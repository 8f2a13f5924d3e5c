//! Square-free and radical elements of `T = K + X L[X]`.
//!
//! An element of `T` is square-free iff it is square-free in `L[X]`, or it
//! is `X^2 h` with `h` square-free in `L[X]` and `h(0)` outside the
//! square-class set `{a^2 b : a ∈ L, b ∈ K}`.

use alloc::vec::Vec;

use crate::composite::{
    divides_in_t, elements_up_to, factor_t, is_unit_t, make_composite, mul_t, trusted, Atom,
    CompositeElement,
};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldPair};
use crate::poly::{Poly, PolyField, PolyRing};

type Elem<P> = <<P as FieldPair>::L as Field>::Elem;

/// Default search bounds for radicality.
pub const DEFAULT_DEG_BOUND: usize = 4;
pub const DEFAULT_M_BOUND: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqfBranch {
    /// Square-free already in `L[X]`.
    InSqfLX,
    /// `X^2 h` with `h(0)` outside the square-class set.
    XSquaredBranch,
    NotSquarefree,
}

impl SqfBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            SqfBranch::InSqfLX => "InSqfLX",
            SqfBranch::XSquaredBranch => "XSquaredBranch",
            SqfBranch::NotSquarefree => "NotSquarefree",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqfEvidence<E> {
    /// A nonunit `g ∈ T` with `g^2 | e` in `T`.
    SquareDivisor(CompositeElement<E>),
    /// `h(0)` for the `X^2 h` branch, certified outside `{a^2 b}`.
    OutsideSquareClass(E),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqfVerdict<E> {
    pub value: bool,
    pub branch: SqfBranch,
    pub evidence: Option<SqfEvidence<E>>,
}

impl<E> SqfVerdict<E> {
    fn not_squarefree(g: CompositeElement<E>) -> Self {
        Self {
            value: false,
            branch: SqfBranch::NotSquarefree,
            evidence: Some(SqfEvidence::SquareDivisor(g)),
        }
    }
}

/// Rescales a factor with nonzero constant term to constant term 1, which
/// puts it in `T`.
fn normalize_at_zero<P: FieldPair>(pair: &P, q: &Poly<Elem<P>>) -> CompositeElement<Elem<P>> {
    let ring = PolyRing::new(pair.big());
    let c0 = ring.constant_term(q);
    let inv = pair.big().inv(&c0).expect("factor does not vanish at 0");
    trusted(ring.scale(&inv, q))
}

pub fn is_squarefree_t<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
) -> Result<SqfVerdict<Elem<P>>> {
    let field = pair.big();
    let ring = PolyRing::new(field);
    let r = ring.valuation(e.poly()).ok_or(Error::ZeroElement)?;
    if is_unit_t(pair, e) {
        return Err(Error::UnitElement(field.render(&e.poly().coeffs()[0])));
    }
    match r {
        0 | 1 => match field.poly_square_divisor(e.poly())? {
            None => Ok(SqfVerdict {
                value: true,
                branch: SqfBranch::InSqfLX,
                evidence: None,
            }),
            Some(q) => Ok(SqfVerdict::not_squarefree(normalize_at_zero(pair, &q))),
        },
        2 => {
            let h = ring.from_coeffs(e.poly().coeffs()[2..].to_vec());
            let h0 = ring.constant_term(&h);
            if let Some(w) = pair.square_class_member(&h0)? {
                return Ok(SqfVerdict::not_squarefree(trusted(ring.monomial(w.a, 1))));
            }
            match field.poly_square_divisor(&h)? {
                Some(q) => Ok(SqfVerdict::not_squarefree(normalize_at_zero(pair, &q))),
                None => Ok(SqfVerdict {
                    value: true,
                    branch: SqfBranch::XSquaredBranch,
                    evidence: Some(SqfEvidence::OutsideSquareClass(h0)),
                }),
            }
        }
        _ => Ok(SqfVerdict::not_squarefree(trusted(ring.x()))),
    }
}

/// Checks a `SquareDivisor` certificate: `g` is a nonunit and `g^2 | e` in `T`.
pub fn verify_square_divisor<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
    g: &CompositeElement<Elem<P>>,
) -> Result<bool> {
    let g = make_composite(pair, g.poly().clone())?;
    if g.is_zero() || is_unit_t(pair, &g) {
        return Ok(false);
    }
    Ok(divides_in_t(pair, &mul_t(pair, &g, &g), e)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SqfAgreement<E> {
    /// `Sqf(T) = Sqf(L[X]) ∩ T`.
    Agree,
    /// Least `c ∈ L` outside `{a^2 b}`; then `X^2 (X + c)` separates the sets.
    Disagree(E),
}

pub fn sqf_agreement<P: FieldPair>(pair: &P) -> Result<SqfAgreement<Elem<P>>> {
    Ok(match pair.square_class_gap()? {
        None => SqfAgreement::Agree,
        Some(c) => SqfAgreement::Disagree(c),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalValue<E> {
    Radical,
    /// `e | x^m` but `e ∤ x`.
    NotRadical {
        x: CompositeElement<E>,
        m: u32,
    },
    UnknownUpToBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalVerdict<E> {
    pub value: RadicalValue<E>,
    pub deg_bound: usize,
    pub m_bound: u32,
}

/// Whether `e` is a product of pairwise distinct `c (1 + X f)` primes.
fn is_product_of_distinct_primes<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
) -> Result<bool> {
    let fac = factor_t(pair, e)?;
    let mut bodies = Vec::with_capacity(fac.atoms.len());
    for atom in &fac.atoms {
        match atom {
            Atom::ScaledX(_) => return Ok(false),
            Atom::OnePlus { body, .. } => bodies.push(body),
        }
    }
    bodies.sort();
    Ok(bodies.windows(2).all(|w| w[0] != w[1]))
}

fn check_finite<P: FieldPair>(pair: &P, e: &CompositeElement<Elem<P>>) -> Result<()> {
    if pair.big().cardinality().is_none() {
        return Err(pair.infinite());
    }
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    if is_unit_t(pair, e) {
        return Err(Error::UnitElement(pair.big().render(&e.poly().coeffs()[0])));
    }
    Ok(())
}

/// First `(x, m)` in canonical order with `e | x^m`, `e ∤ x`.
fn radical_witness<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
    candidates: &[CompositeElement<Elem<P>>],
    m_bound: u32,
) -> Result<Option<(CompositeElement<Elem<P>>, u32)>> {
    for x in candidates {
        if divides_in_t(pair, e, x)?.is_some() {
            continue;
        }
        let mut power = x.clone();
        for m in 2..=m_bound {
            power = mul_t(pair, &power, x);
            if divides_in_t(pair, e, &power)?.is_some() {
                return Ok(Some((x.clone(), m)));
            }
        }
    }
    Ok(None)
}

/// Bounded semi-decision for radicality over a finite pair.
pub fn is_radical_bounded<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
    deg_bound: usize,
    m_bound: u32,
) -> Result<RadicalVerdict<Elem<P>>> {
    check_finite(pair, e)?;
    let candidates = elements_up_to(pair, deg_bound)?;
    radical_with_candidates(pair, e, &candidates, deg_bound, m_bound)
}

fn radical_with_candidates<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
    candidates: &[CompositeElement<Elem<P>>],
    deg_bound: usize,
    m_bound: u32,
) -> Result<RadicalVerdict<Elem<P>>> {
    let value = if is_product_of_distinct_primes(pair, e)? {
        RadicalValue::Radical
    } else {
        match radical_witness(pair, e, candidates, m_bound)? {
            Some((x, m)) => RadicalValue::NotRadical { x, m },
            None => RadicalValue::UnknownUpToBound,
        }
    };
    Ok(RadicalVerdict {
        value,
        deg_bound,
        m_bound,
    })
}

/// A square-free `f` that is not radical: `f | x^m`, `f ∤ x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SrWitness<E: Ord> {
    pub f: CompositeElement<E>,
    pub x: CompositeElement<E>,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrScanReport<E: Ord> {
    pub is_sr_refuted: bool,
    /// Square-free elements examined.
    pub examined: usize,
    pub witnesses: Vec<SrWitness<E>>,
}

/// Searches square-free elements of degree at most `deg_bound` for
/// non-radical ones. Any witness shows `T` is not an SR-domain; an empty
/// list is inconclusive.
pub fn sr_scan<P: FieldPair>(
    pair: &P,
    deg_bound: usize,
    m_bound: u32,
) -> Result<SrScanReport<Elem<P>>> {
    if pair.big().cardinality().is_none() {
        return Err(pair.infinite());
    }
    let candidates = elements_up_to(pair, deg_bound)?;
    let mut witnesses = Vec::new();
    let mut examined = 0;
    for f in &candidates {
        if is_unit_t(pair, f) || !is_squarefree_t(pair, f)?.value {
            continue;
        }
        examined += 1;
        let verdict = radical_with_candidates(pair, f, &candidates, deg_bound, m_bound)?;
        if let RadicalValue::NotRadical { x, m } = verdict.value {
            witnesses.push(SrWitness { f: f.clone(), x, m });
        }
    }
    witnesses.sort();
    Ok(SrScanReport {
        is_sr_refuted: !witnesses.is_empty(),
        examined,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FiniteTower, Fq, PrimeInFunctionField, PurelyInseparable};
    use alloc::vec;

    fn el(pair: &FiniteTower, coeffs: &[u64]) -> CompositeElement<Fq> {
        let ring = PolyRing::new(pair.big());
        make_composite(
            pair,
            ring.from_coeffs(coeffs.iter().map(|&c| Fq(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn x_squared_is_not_squarefree() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let v = is_squarefree_t(&t, &el(&t, &[0, 0, 1])).unwrap();
        assert!(!v.value);
        assert_eq!(
            v.evidence,
            Some(SqfEvidence::SquareDivisor(el(&t, &[0, 1])))
        );
        // r >= 3 answers with X directly
        let v = is_squarefree_t(&t, &el(&t, &[0, 0, 0, 1, 2])).unwrap();
        assert_eq!(
            v.evidence,
            Some(SqfEvidence::SquareDivisor(el(&t, &[0, 1])))
        );
    }

    #[test]
    fn x_squared_branch_over_gf9() {
        let t = FiniteTower::from_orders(9, 3).unwrap();
        // X^2 (X + g + 1) = (g+1) X^2 + X^3
        let e = el(&t, &[0, 0, 4, 1]);
        let v = is_squarefree_t(&t, &e).unwrap();
        assert!(v.value);
        assert_eq!(v.branch, SqfBranch::XSquaredBranch);
        // X^2 (X + 1): 1 is in the square-class set
        let e = el(&t, &[0, 0, 1, 1]);
        let v = is_squarefree_t(&t, &e).unwrap();
        assert!(!v.value);
        let Some(SqfEvidence::SquareDivisor(g)) = v.evidence else {
            panic!()
        };
        assert!(verify_square_divisor(&t, &e, &g).unwrap());
    }

    #[test]
    fn function_field_witness() {
        let pair = PrimeInFunctionField::new(2).unwrap();
        let f = pair.big();
        let ring = PolyRing::new(f);
        let e = make_composite(
            &pair,
            ring.from_coeffs(vec![f.zero(), f.zero(), f.t(), f.zero(), f.one()]),
        )
        .unwrap();
        let v = is_squarefree_t(&pair, &e).unwrap();
        assert!(v.value);
        assert_eq!(v.branch, SqfBranch::XSquaredBranch);
        assert_eq!(v.evidence, Some(SqfEvidence::OutsideSquareClass(f.t())));
    }

    #[test]
    fn agreement_trichotomy() {
        assert_eq!(
            sqf_agreement(&FiniteTower::from_orders(4, 2).unwrap()).unwrap(),
            SqfAgreement::Agree
        );
        assert_eq!(
            sqf_agreement(&FiniteTower::from_orders(9, 3).unwrap()).unwrap(),
            SqfAgreement::Disagree(Fq(4))
        );
        let pair = PrimeInFunctionField::new(2).unwrap();
        assert_eq!(
            sqf_agreement(&pair).unwrap(),
            SqfAgreement::Disagree(pair.big().t())
        );
        assert!(matches!(
            sqf_agreement(&PurelyInseparable::new(3).unwrap()),
            Err(Error::UnsupportedPair(_))
        ));
    }

    #[test]
    fn radical_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let v = is_radical_bounded(&t, &el(&t, &[0, 1]), 2, 2).unwrap();
        assert_eq!(
            v.value,
            RadicalValue::NotRadical {
                x: el(&t, &[0, 2]),
                m: 2
            }
        );
        let v = is_radical_bounded(&t, &el(&t, &[1, 2]), 2, 2).unwrap();
        assert_eq!(v.value, RadicalValue::Radical);
        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        let v = is_radical_bounded(&trivial, &el(&trivial, &[0, 1]), 3, 3).unwrap();
        assert_eq!(v.value, RadicalValue::UnknownUpToBound);
        let pair = PrimeInFunctionField::new(2).unwrap();
        let x = make_composite(&pair, PolyRing::new(pair.big()).x()).unwrap();
        assert!(matches!(
            is_radical_bounded(&pair, &x, 2, 2),
            Err(Error::InfinitePairUnsupported(_))
        ));
    }

    #[test]
    fn sr_scan_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let report = sr_scan(&t, 2, 2).unwrap();
        assert!(report.is_sr_refuted);
        assert!(report.witnesses.contains(&SrWitness {
            f: el(&t, &[0, 1]),
            x: el(&t, &[0, 2]),
            m: 2
        }));
        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        assert!(sr_scan(&trivial, 3, 3).unwrap().witnesses.is_empty());
        let t9 = FiniteTower::from_orders(9, 3).unwrap();
        let report = sr_scan(&t9, 2, 2).unwrap();
        assert!(report.is_sr_refuted);
        let first_for_x = report
            .witnesses
            .iter()
            .find(|w| w.f == el(&t9, &[0, 1]))
            .unwrap();
        assert_eq!(
            (first_for_x.x.clone(), first_for_x.m),
            (el(&t9, &[0, 3]), 2)
        );
    }
}
