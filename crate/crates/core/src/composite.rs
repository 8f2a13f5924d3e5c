//! The composite ring `T = K + X L[X]`.
//!
//! Units of `T` are the constants in `K*`. Every nonzero nonunit has the
//! canonical shape `a X^r (1 + X f)` and factors into atoms of the two
//! classes `a X` and `c (1 + X f)` with `1 + X f` irreducible in `L[X]`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldPair};
use crate::poly::{Poly, PolyField, PolyRing, DEFAULT_SEED};

type Elem<P> = <<P as FieldPair>::L as Field>::Elem;

/// A polynomial over `L` whose constant term lies in `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositeElement<E> {
    poly: Poly<E>,
}

/// Canonical order of the underlying polynomials.
impl<E: Ord> Ord for CompositeElement<E> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.poly.cmp(&other.poly)
    }
}

impl<E: Ord> PartialOrd for CompositeElement<E> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E> CompositeElement<E> {
    pub fn poly(&self) -> &Poly<E> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<E> {
        self.poly
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// Certifies `f ∈ T`.
pub fn make_composite<P: FieldPair>(
    pair: &P,
    f: Poly<Elem<P>>,
) -> Result<CompositeElement<Elem<P>>> {
    let ring = PolyRing::new(pair.big());
    ring.check(&f)?;
    let c = ring.constant_term(&f);
    if !pair.in_subfield(&c) {
        return Err(Error::NotInComposite(pair.big().render(&c)));
    }
    Ok(CompositeElement { poly: f })
}

/// Wraps a polynomial already known to lie in `T`.
pub(crate) fn trusted<E>(poly: Poly<E>) -> CompositeElement<E> {
    CompositeElement { poly }
}

pub fn is_unit_t<P: FieldPair>(_pair: &P, e: &CompositeElement<Elem<P>>) -> bool {
    e.poly.degree() == Some(0)
}

/// `Some(f / g)` when the quotient exists in `L[X]` and lies in `T`.
pub fn divides_in_t<P: FieldPair>(
    pair: &P,
    g: &CompositeElement<Elem<P>>,
    f: &CompositeElement<Elem<P>>,
) -> Result<Option<CompositeElement<Elem<P>>>> {
    let ring = PolyRing::new(pair.big());
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(ring
        .div_exact(&f.poly, &g.poly)?
        .filter(|q| pair.in_subfield(&ring.constant_term(q)))
        .map(|q| CompositeElement { poly: q }))
}

pub fn mul_t<P: FieldPair>(
    pair: &P,
    f: &CompositeElement<Elem<P>>,
    g: &CompositeElement<Elem<P>>,
) -> CompositeElement<Elem<P>> {
    CompositeElement {
        poly: PolyRing::new(pair.big()).mul(&f.poly, &g.poly),
    }
}

/// An element of `T` is an atom iff it is irreducible in `L[X]`. Zero and
/// units are not atoms.
pub fn is_irreducible_t<P: FieldPair>(pair: &P, e: &CompositeElement<Elem<P>>) -> Result<bool> {
    if e.is_zero() || is_unit_t(pair, e) {
        return Ok(false);
    }
    pair.big().poly_is_irreducible(&e.poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom<E> {
    /// `a X` with `a ∈ L*`.
    ScaledX(E),
    /// `unit * body` with `unit ∈ K*`, `body(0) = 1`, `body` irreducible in `L[X]`.
    OnePlus { unit: E, body: Poly<E> },
}

impl<E: Clone + Eq + Ord> Atom<E> {
    pub fn to_poly<F: Field<Elem = E>>(&self, field: &F) -> Poly<E> {
        let ring = PolyRing::new(field);
        match self {
            Atom::ScaledX(a) => ring.monomial(a.clone(), 1),
            Atom::OnePlus { unit, body } => ring.scale(unit, body),
        }
    }
}

/// `unit * prod(atoms)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicFactorization<E> {
    pub unit: E,
    pub atoms: Vec<Atom<E>>,
}

impl<E: Clone + Eq + Ord> AtomicFactorization<E> {
    pub fn expand<F: Field<Elem = E>>(&self, field: &F) -> Poly<E> {
        let ring = PolyRing::new(field);
        self.atoms
            .iter()
            .fold(ring.constant(self.unit.clone()), |acc, a| {
                ring.mul(&acc, &a.to_poly(field))
            })
    }
}

pub fn factor_t<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
) -> Result<AtomicFactorization<Elem<P>>> {
    factor_t_with_seed(pair, e, DEFAULT_SEED)
}

/// Canonical factorization `a X^r (1 + X f)`: one `ScaledX(a_r)`, `r - 1`
/// copies of `X`, then the irreducible factors of `1 + X f` rescaled to
/// constant term 1, in canonical order.
pub fn factor_t_with_seed<P: FieldPair>(
    pair: &P,
    e: &CompositeElement<Elem<P>>,
    seed: u64,
) -> Result<AtomicFactorization<Elem<P>>> {
    let field = pair.big();
    let ring = PolyRing::new(field);
    let r = ring.valuation(&e.poly).ok_or(Error::ZeroElement)?;
    if is_unit_t(pair, e) {
        return Err(Error::UnitElement(field.render(&e.poly.coeffs()[0])));
    }
    let lowest = e.poly.coeffs()[r].clone();
    let stripped = ring.from_coeffs(e.poly.coeffs()[r..].to_vec());
    let lowest_inv = field.inv(&lowest).expect("lowest coefficient is nonzero");
    let body = ring.scale(&lowest_inv, &stripped);

    let mut atoms = Vec::new();
    let unit = if r == 0 {
        lowest
    } else {
        let mut coeffs = vec![lowest];
        coeffs.extend((1..r).map(|_| field.one()));
        coeffs.sort();
        atoms.extend(coeffs.into_iter().map(Atom::ScaledX));
        field.one()
    };

    if body.degree().unwrap_or(0) > 0 {
        let fac = field.poly_factor(&body, seed)?;
        let mut rescale = fac.unit.clone();
        let mut bodies = Vec::new();
        for (q, k) in &fac.factors {
            let c0 = ring.constant_term(q);
            let c0_inv = field
                .inv(&c0)
                .expect("factors of 1 + Xf do not vanish at 0");
            let normalized = ring.scale(&c0_inv, q);
            for _ in 0..*k {
                rescale = field.mul(&rescale, &c0);
                bodies.push(normalized.clone());
            }
        }
        bodies.sort();
        atoms.extend(bodies.into_iter().map(|body| Atom::OnePlus {
            unit: field.one(),
            body,
        }));
        assert!(
            field.is_one(&rescale),
            "rescaling constants must multiply to 1"
        );
    }
    Ok(AtomicFactorization { unit, atoms })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primality<E> {
    Prime,
    /// `a | g h` but `a ∤ g` and `a ∤ h`.
    NotPrime {
        g: CompositeElement<E>,
        h: CompositeElement<E>,
    },
    UnknownUpToBound,
}

/// Atoms `c (1 + X f)` are prime. For `a X` this is a bounded search over
/// factors of degree at most `search_bound`, never a proof of primality.
pub fn is_prime_atom<P: FieldPair>(
    pair: &P,
    atom: &Atom<Elem<P>>,
    search_bound: usize,
) -> Result<Primality<Elem<P>>> {
    let a = match atom {
        Atom::OnePlus { .. } => return Ok(Primality::Prime),
        Atom::ScaledX(a) => a,
    };
    let field = pair.big();
    let target = CompositeElement {
        poly: PolyRing::new(field).monomial(a.clone(), 1),
    };
    let mut candidates = Vec::new();
    for x in elements_up_to(pair, search_bound)? {
        if !is_unit_t(pair, &x) && divides_in_t(pair, &target, &x)?.is_none() {
            candidates.push(x);
        }
    }
    for g in &candidates {
        for h in &candidates {
            if divides_in_t(pair, &target, &mul_t(pair, g, h))?.is_some() {
                return Ok(Primality::NotPrime {
                    g: g.clone(),
                    h: h.clone(),
                });
            }
        }
    }
    Ok(Primality::UnknownUpToBound)
}

/// Number of nonzero elements of degree at most `max_deg`: `|K| |L|^d - 1`.
pub fn count_up_to<P: FieldPair>(pair: &P, max_deg: usize) -> Result<u128> {
    let l = pair.big().cardinality().ok_or_else(|| pair.infinite())? as u128;
    let k = pair.subfield_elements()?.len() as u128;
    let mut total = k;
    for _ in 0..max_deg {
        total = total.checked_mul(l).ok_or_else(|| pair.unsupported())?;
    }
    Ok(total - 1)
}

/// Enumerations larger than this are refused.
pub const ELEMENT_LIMIT: u128 = 20_000_000;

/// All nonzero elements of degree at most `max_deg`, in canonical order.
pub fn elements_up_to<P: FieldPair>(
    pair: &P,
    max_deg: usize,
) -> Result<Vec<CompositeElement<Elem<P>>>> {
    let field = pair.big();
    if field.cardinality().is_none() {
        return Err(pair.infinite());
    }
    let count = count_up_to(pair, max_deg)?;
    if count > ELEMENT_LIMIT {
        return Err(Error::NotSupported(alloc::format!(
            "{count} elements exceed the enumeration limit"
        )));
    }
    let big = field.elements()?;
    let small = pair.subfield_elements()?;
    let ring = PolyRing::new(field);
    let mut out = Vec::with_capacity(count as usize);
    out.extend(small.iter().skip(1).map(|c| CompositeElement {
        poly: ring.constant(c.clone()),
    }));
    for deg in 1..=max_deg {
        // odometer over (c_deg, ..., c_1, c_0), most significant first
        let radices: Vec<usize> = (0..=deg)
            .map(|i| match i {
                0 => small.len(),
                i if i == deg => big.len() - 1,
                _ => big.len(),
            })
            .collect();
        let mut idx = vec![0usize; deg + 1];
        loop {
            let coeffs = (0..=deg)
                .map(|i| match i {
                    0 => small[idx[0]].clone(),
                    i if i == deg => big[idx[i] + 1].clone(),
                    i => big[idx[i]].clone(),
                })
                .collect();
            out.push(CompositeElement {
                poly: Poly::from_raw(coeffs),
            });
            let mut pos = 0;
            loop {
                if pos > deg {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < radices[pos] {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos > deg {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FiniteTower, Fq};

    fn gf4_pair() -> FiniteTower {
        FiniteTower::from_orders(4, 2).unwrap()
    }

    fn el(pair: &FiniteTower, coeffs: &[u64]) -> CompositeElement<Fq> {
        let ring = PolyRing::new(pair.big());
        make_composite(
            pair,
            ring.from_coeffs(coeffs.iter().map(|&c| Fq(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn membership() {
        let t = gf4_pair();
        let ring = PolyRing::new(t.big());
        assert!(make_composite(&t, ring.from_coeffs(vec![Fq(1), Fq(2)])).is_ok());
        assert_eq!(
            make_composite(&t, ring.constant(Fq(2))),
            Err(Error::NotInComposite("g".into()))
        );
        assert!(make_composite(&t, ring.monomial(Fq(2), 1)).is_ok());
    }

    #[test]
    fn units() {
        let t = gf4_pair();
        assert!(is_unit_t(&t, &el(&t, &[1])));
        assert!(!is_unit_t(&t, &el(&t, &[1, 2])));
        assert!(!is_unit_t(&t, &el(&t, &[])));
    }

    #[test]
    fn divisibility_examples() {
        let t = gf4_pair();
        let x = el(&t, &[0, 1]);
        // g^2 X^2 = (g+1) X^2
        let f = el(&t, &[0, 0, 3]);
        assert_eq!(divides_in_t(&t, &x, &f).unwrap(), Some(el(&t, &[0, 3])));
        assert_eq!(divides_in_t(&t, &x, &el(&t, &[0, 2])).unwrap(), None);
        let h = el(&t, &[1, 2, 3]);
        assert_eq!(divides_in_t(&t, &h, &h).unwrap(), Some(el(&t, &[1])));
        assert_eq!(
            divides_in_t(&t, &el(&t, &[]), &h),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn irreducibility_examples() {
        let t = gf4_pair();
        assert!(is_irreducible_t(&t, &el(&t, &[0, 2])).unwrap());
        assert!(is_irreducible_t(&t, &el(&t, &[1, 3])).unwrap());
        assert!(!is_irreducible_t(&t, &el(&t, &[1, 1, 1])).unwrap());
    }

    #[test]
    fn factor_examples() {
        let t = gf4_pair();
        let ring = PolyRing::new(t.big());
        let fac = factor_t(&t, &el(&t, &[1, 1, 1])).unwrap();
        assert_eq!(fac.unit, Fq(1));
        assert_eq!(
            fac.atoms,
            vec![
                Atom::OnePlus {
                    unit: Fq(1),
                    body: ring.from_coeffs(vec![Fq(1), Fq(2)])
                },
                Atom::OnePlus {
                    unit: Fq(1),
                    body: ring.from_coeffs(vec![Fq(1), Fq(3)])
                },
            ]
        );
        let fac = factor_t(&t, &el(&t, &[0, 0, 1])).unwrap();
        assert_eq!(fac.atoms, vec![Atom::ScaledX(Fq(1)), Atom::ScaledX(Fq(1))]);
        let fac = factor_t(&t, &el(&t, &[0, 2])).unwrap();
        assert_eq!(fac.atoms, vec![Atom::ScaledX(Fq(2))]);

        assert_eq!(factor_t(&t, &el(&t, &[])), Err(Error::ZeroElement));
        assert!(matches!(
            factor_t(&t, &el(&t, &[1])),
            Err(Error::UnitElement(_))
        ));
    }

    #[test]
    fn prime_atom_examples() {
        let t = gf4_pair();
        let ring = PolyRing::new(t.big());
        let one_plus = Atom::OnePlus {
            unit: Fq(1),
            body: ring.from_coeffs(vec![Fq(1), Fq(2)]),
        };
        assert_eq!(is_prime_atom(&t, &one_plus, 2).unwrap(), Primality::Prime);
        let gx = el(&t, &[0, 2]);
        assert_eq!(
            is_prime_atom(&t, &Atom::ScaledX(Fq(1)), 2).unwrap(),
            Primality::NotPrime {
                g: gx.clone(),
                h: gx
            }
        );
        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        assert_eq!(
            is_prime_atom(&trivial, &Atom::ScaledX(Fq(1)), 3).unwrap(),
            Primality::UnknownUpToBound
        );
    }

    #[test]
    fn enumeration_is_canonical_and_counted() {
        let t = gf4_pair();
        let all = elements_up_to(&t, 2).unwrap();
        assert_eq!(all.len() as u128, count_up_to(&t, 2).unwrap());
        assert_eq!(all.len(), 2 * 16 - 1);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(elements_up_to(&t, 1).unwrap().len(), 7);
        assert_eq!(elements_up_to(&t, 0).unwrap(), vec![el(&t, &[1])]);
    }
}
