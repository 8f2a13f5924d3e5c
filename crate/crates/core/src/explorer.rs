//! Brute-force ground truth for finite pairs: definitional oracles for
//! units, atoms and square-freeness, divisor sets up to associates,
//! complete factorization sets, and the factorization invariants built on
//! them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::composite::{
    divides_in_t, elements_up_to, factor_t, is_irreducible_t, is_unit_t, make_composite, mul_t,
    trusted, CompositeElement,
};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldPair};
use crate::poly::{Poly, PolyField, PolyRing};
use crate::squarefree::is_squarefree_t;

type Elem<P> = <<P as FieldPair>::L as Field>::Elem;
type PolyOf<P> = Poly<Elem<P>>;

/// Survey bounds applied unless the caller overrides them.
pub const SURVEY_MAX_FIELD: u64 = 16;
pub const SURVEY_MAX_DEG: usize = 5;

/// All nonzero elements of degree at most `max_deg`, in canonical order.
pub fn enumerate_t<P: FieldPair>(
    pair: &P,
    max_deg: usize,
) -> Result<Vec<CompositeElement<Elem<P>>>> {
    elements_up_to(pair, max_deg)
}

/// Divisor and factorization machinery for one finite pair, memoized on
/// canonical associate representatives.
pub struct Explorer<'a, P: FieldPair> {
    pair: &'a P,
    k_units: Vec<Elem<P>>,
    transversal: Vec<Elem<P>>,
    divisors: BTreeMap<PolyOf<P>, Vec<CompositeElement<Elem<P>>>>,
    factorizations: BTreeMap<PolyOf<P>, BTreeSet<Vec<PolyOf<P>>>>,
    lengths: BTreeMap<PolyOf<P>, BTreeSet<usize>>,
    chains: BTreeMap<PolyOf<P>, usize>,
}

impl<'a, P: FieldPair> Explorer<'a, P> {
    pub fn new(pair: &'a P) -> Result<Self> {
        let field = pair.big();
        if field.cardinality().is_none() {
            return Err(pair.infinite());
        }
        let k_units: Vec<_> = pair
            .subfield_elements()?
            .into_iter()
            .filter(|c| !field.is_zero(c))
            .collect();
        let mut explorer = Self {
            pair,
            k_units,
            transversal: Vec::new(),
            divisors: BTreeMap::new(),
            factorizations: BTreeMap::new(),
            lengths: BTreeMap::new(),
            chains: BTreeMap::new(),
        };
        let mut reps = BTreeSet::new();
        for c in field.elements()? {
            if !field.is_zero(&c) {
                reps.insert(explorer.coset_min(&c).0);
            }
        }
        explorer.transversal = reps.into_iter().collect();
        Ok(explorer)
    }

    pub fn pair(&self) -> &P {
        self.pair
    }

    /// Least element of `c K*` and the `b ∈ K*` reaching it.
    fn coset_min(&self, c: &Elem<P>) -> (Elem<P>, Elem<P>) {
        let field = self.pair.big();
        self.k_units
            .iter()
            .map(|b| (field.mul(b, c), b.clone()))
            .min()
            .expect("K* is nonempty")
    }

    /// Coset minima of `L*/K*`, ascending.
    pub fn transversal(&self) -> &[Elem<P>] {
        &self.transversal
    }

    /// The representative of `e K*` whose lowest nonzero coefficient is a
    /// coset minimum.
    pub fn canonical(&self, e: &CompositeElement<Elem<P>>) -> CompositeElement<Elem<P>> {
        let ring = PolyRing::new(self.pair.big());
        let Some(r) = ring.valuation(e.poly()) else {
            return e.clone();
        };
        let (_, b) = self.coset_min(&e.poly().coeffs()[r]);
        trusted(ring.scale(&b, e.poly()))
    }

    /// Every `d` with `d | e` in `T`, one per associate class, sorted.
    pub fn oracle_divisors(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<Vec<CompositeElement<Elem<P>>>> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let key = self.canonical(e).into_poly();
        if let Some(ds) = self.divisors.get(&key) {
            return Ok(ds.clone());
        }
        let field = self.pair.big();
        let ring = PolyRing::new(field);
        let mut monic_divisors = alloc::vec![ring.one()];
        if key.degree() != Some(0) {
            for (q, k) in field.poly_factor(&key, 0)?.factors {
                let mut next = Vec::with_capacity(monic_divisors.len() * (k + 1));
                for m in &monic_divisors {
                    let mut power = m.clone();
                    next.push(power.clone());
                    for _ in 0..k {
                        power = ring.mul(&power, &q);
                        next.push(power.clone());
                    }
                }
                monic_divisors = next;
            }
        }
        let whole = trusted(key.clone());
        let mut found = BTreeSet::new();
        for m in &monic_divisors {
            for c in &self.transversal {
                let d = ring.scale(c, m);
                if !self.pair.in_subfield(&ring.constant_term(&d)) {
                    continue;
                }
                let d = trusted(d);
                if divides_in_t(self.pair, &d, &whole)?.is_some() {
                    found.insert(self.canonical(&d));
                }
            }
        }
        let ds: Vec<_> = found.into_iter().collect();
        self.divisors.insert(key, ds.clone());
        Ok(ds)
    }

    /// A nonunit whose only divisors are `1` and itself.
    pub fn oracle_is_atom(&mut self, e: &CompositeElement<Elem<P>>) -> Result<bool> {
        if oracle_is_unit(self.pair, e)? {
            return Ok(false);
        }
        Ok(self.oracle_divisors(e)?.len() == 2)
    }

    /// No nonunit divisor `d` with `d^2 | e`.
    pub fn oracle_is_squarefree(&mut self, e: &CompositeElement<Elem<P>>) -> Result<bool> {
        for d in self.oracle_divisors(e)? {
            if !oracle_is_unit(self.pair, &d)?
                && divides_in_t(self.pair, &mul_t(self.pair, &d, &d), e)?.is_some()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Nonunit proper divisors: neither a unit nor associate to `e`.
    fn proper_nonunit_divisors(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<Vec<CompositeElement<Elem<P>>>> {
        let own = self.canonical(e);
        Ok(self
            .oracle_divisors(e)?
            .into_iter()
            .filter(|d| *d != own && d.degree() != Some(0))
            .collect())
    }

    fn atom_divisors(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<Vec<CompositeElement<Elem<P>>>> {
        let mut atoms = Vec::new();
        for d in self.oracle_divisors(e)? {
            if self.oracle_is_atom(&d)? {
                atoms.push(d);
            }
        }
        Ok(atoms)
    }

    fn cofactor(
        &self,
        d: &CompositeElement<Elem<P>>,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<CompositeElement<Elem<P>>> {
        let q = divides_in_t(self.pair, d, e)?.expect("d is a divisor of e");
        Ok(self.canonical(&q))
    }

    /// Every factorization of `e` into atoms, each a sorted list of
    /// canonical atoms. A unit has the single empty factorization.
    pub fn all_factorizations(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<BTreeSet<Vec<PolyOf<P>>>> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let key = self.canonical(e);
        if let Some(fs) = self.factorizations.get(key.poly()) {
            return Ok(fs.clone());
        }
        let mut out = BTreeSet::new();
        if key.degree() == Some(0) {
            out.insert(Vec::new());
        } else {
            for a in self.atom_divisors(&key)? {
                let rest = self.cofactor(&a, &key)?;
                for mut fac in self.all_factorizations(&rest)? {
                    fac.push(a.poly().clone());
                    fac.sort();
                    out.insert(fac);
                }
            }
        }
        self.factorizations.insert(key.into_poly(), out.clone());
        Ok(out)
    }

    /// Factorization lengths by divisor recursion, without building the
    /// factorizations themselves.
    pub fn lengths_by_recursion(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<BTreeSet<usize>> {
        let key = self.canonical(e);
        if let Some(ls) = self.lengths.get(key.poly()) {
            return Ok(ls.clone());
        }
        let mut out = BTreeSet::new();
        if key.degree() == Some(0) {
            out.insert(0);
        } else {
            for a in self.atom_divisors(&key)? {
                let rest = self.cofactor(&a, &key)?;
                out.extend(self.lengths_by_recursion(&rest)?.into_iter().map(|l| l + 1));
            }
        }
        self.lengths.insert(key.into_poly(), out.clone());
        Ok(out)
    }

    /// Longest strict chain `d_1 | d_2 | ... | e` of nonunits ending at `e`.
    pub fn max_chain(&mut self, e: &CompositeElement<Elem<P>>) -> Result<usize> {
        let key = self.canonical(e);
        if key.degree() == Some(0) {
            return Ok(0);
        }
        if let Some(&n) = self.chains.get(key.poly()) {
            return Ok(n);
        }
        let mut best = 0;
        for d in self.proper_nonunit_divisors(&key)? {
            best = best.max(self.max_chain(&d)?);
        }
        self.chains.insert(key.into_poly(), best + 1);
        Ok(best + 1)
    }

    pub fn invariant_report(
        &mut self,
        e: &CompositeElement<Elem<P>>,
    ) -> Result<InvariantReport<Elem<P>>> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        if is_unit_t(self.pair, e) {
            return Err(Error::UnitElement(
                self.pair.big().render(&e.poly().coeffs()[0]),
            ));
        }
        let facs = self.all_factorizations(e)?;
        let length_set: BTreeSet<usize> = facs.iter().map(Vec::len).collect();
        let min = *length_set.first().expect("nonunits have a factorization");
        let max = *length_set.last().expect("nonempty");
        Ok(InvariantReport {
            element: e.clone(),
            degree: e.degree().unwrap_or(0),
            length_set,
            elasticity: Ratio::new(max as u64, min as u64),
            nonassociate_divisor_count: self.oracle_divisors(e)?.len(),
            factorization_count: facs.len(),
        })
    }
}

/// `e | 1` in `T`.
pub fn oracle_is_unit<P: FieldPair>(pair: &P, e: &CompositeElement<Elem<P>>) -> Result<bool> {
    if e.is_zero() {
        return Ok(false);
    }
    let one = make_composite(pair, PolyRing::new(pair.big()).one())?;
    Ok(divides_in_t(pair, e, &one)?.is_some())
}

/// Sieve over all products up to a degree bound: an element is reducible
/// iff it appears as `g h` with nonunits `g, h`, and not square-free iff it
/// appears as `g^2 s` with `g` a nonunit and `s ≠ 0`.
pub struct DefinitionalOracle<E> {
    max_deg: usize,
    reducible: BTreeSet<Poly<E>>,
    non_squarefree: BTreeSet<Poly<E>>,
}

impl<E: Clone + Ord> DefinitionalOracle<E> {
    pub fn build<P: FieldPair<L = L>, L: PolyField<Elem = E>>(
        pair: &P,
        max_deg: usize,
    ) -> Result<Self> {
        let ring = PolyRing::new(pair.big());
        let all = elements_up_to(pair, max_deg)?;
        let mut by_degree: Vec<Vec<&Poly<E>>> = alloc::vec![Vec::new(); max_deg + 1];
        let mut nonunits = Vec::new();
        for e in &all {
            by_degree[e.degree().expect("nonzero")].push(e.poly());
            if !oracle_is_unit(pair, e)? {
                nonunits.push(e.poly());
            }
        }
        let mut reducible = BTreeSet::new();
        let mut non_squarefree = BTreeSet::new();
        for (i, g) in nonunits.iter().enumerate() {
            let dg = g.degree().unwrap_or(0);
            for h in &nonunits[i..] {
                if dg + h.degree().unwrap_or(0) <= max_deg {
                    reducible.insert(ring.mul(g, h));
                }
            }
            if 2 * dg <= max_deg {
                let square = ring.mul(g, g);
                for s in by_degree.iter().take(max_deg - 2 * dg + 1).flatten() {
                    non_squarefree.insert(ring.mul(&square, s));
                }
            }
        }
        Ok(Self {
            max_deg,
            reducible,
            non_squarefree,
        })
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn is_reducible(&self, e: &CompositeElement<E>) -> bool {
        self.reducible.contains(e.poly())
    }

    pub fn is_squarefree(&self, e: &CompositeElement<E>) -> bool {
        !self.non_squarefree.contains(e.poly())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Predicate {
    Unit,
    Irreducible,
    Squarefree,
    Factorization,
}

impl Predicate {
    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::Unit => "unit",
            Predicate::Irreducible => "irreducible",
            Predicate::Squarefree => "squarefree",
            Predicate::Factorization => "factorization",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<E> {
    pub element: CompositeElement<E>,
    pub predicate: Predicate,
    pub decided: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheckReport<E> {
    pub max_deg: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch<E>>,
}

impl<E> OracleCheckReport<E> {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the structural decision procedures with the definitional
/// oracle on every nonzero element of degree at most `max_deg`. For
/// `Factorization` the decided value is whether `factor_t` multiplies back
/// to the input with every atom irreducible under the oracle.
pub fn oracle_check<P: FieldPair>(pair: &P, max_deg: usize) -> Result<OracleCheckReport<Elem<P>>> {
    let oracle = DefinitionalOracle::build(pair, max_deg)?;
    let field = pair.big();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let mut record = |e: &CompositeElement<Elem<P>>, predicate, decided, expected| {
        if decided != expected {
            mismatches.push(Mismatch {
                element: e.clone(),
                predicate,
                decided,
                oracle: expected,
            });
        }
    };
    for e in elements_up_to(pair, max_deg)? {
        checked += 1;
        let unit = oracle_is_unit(pair, &e)?;
        record(&e, Predicate::Unit, is_unit_t(pair, &e), unit);
        if unit {
            continue;
        }
        record(
            &e,
            Predicate::Irreducible,
            is_irreducible_t(pair, &e)?,
            !oracle.is_reducible(&e),
        );
        record(
            &e,
            Predicate::Squarefree,
            is_squarefree_t(pair, &e)?.value,
            oracle.is_squarefree(&e),
        );
        let fac = factor_t(pair, &e)?;
        let sound = fac.expand(field) == *e.poly()
            && fac.atoms.iter().all(|a| {
                let atom = trusted(a.to_poly(field));
                !oracle_is_unit(pair, &atom).unwrap_or(true) && !oracle.is_reducible(&atom)
            });
        record(&e, Predicate::Factorization, sound, true);
    }
    Ok(OracleCheckReport {
        max_deg,
        checked,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport<E> {
    pub element: CompositeElement<E>,
    pub degree: usize,
    pub length_set: BTreeSet<usize>,
    /// `max / min` of the length set.
    pub elasticity: Ratio<u64>,
    pub nonassociate_divisor_count: usize,
    /// Factorizations up to order and associates.
    pub factorization_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveySummary {
    pub elements: usize,
    pub hfd_holds: bool,
    pub max_elasticity: Ratio<u64>,
    pub bfd_bound_respected: bool,
    pub max_nonassociate_divisors: usize,
    /// Length sets from the factorization sets and from divisor recursion agree.
    pub length_routes_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survey<E> {
    pub reports: Vec<InvariantReport<E>>,
    pub summary: SurveySummary,
}

/// Invariants of every nonzero nonunit of degree at most `max_deg`.
/// Requests beyond `|L| ≤ 16` or `max_deg ≤ 5` need `allow_large`.
pub fn invariant_survey<P: FieldPair>(
    pair: &P,
    max_deg: usize,
    allow_large: bool,
) -> Result<Survey<Elem<P>>> {
    let order = pair.big().cardinality().ok_or_else(|| pair.infinite())?;
    if !allow_large && (order > SURVEY_MAX_FIELD || max_deg > SURVEY_MAX_DEG) {
        return Err(Error::NotSupported(alloc::format!(
            "survey of {} at degree {max_deg} exceeds |L| <= {SURVEY_MAX_FIELD}, degree <= {SURVEY_MAX_DEG}",
            pair.name()
        )));
    }
    let mut explorer = Explorer::new(pair)?;
    let mut reports = Vec::new();
    let mut summary = SurveySummary {
        elements: 0,
        hfd_holds: true,
        max_elasticity: Ratio::from_integer(1),
        bfd_bound_respected: true,
        max_nonassociate_divisors: 0,
        length_routes_agree: true,
    };
    for e in elements_up_to(pair, max_deg)? {
        if is_unit_t(pair, &e) {
            continue;
        }
        let report = explorer.invariant_report(&e)?;
        summary.elements += 1;
        summary.hfd_holds &= report.length_set.len() == 1;
        summary.max_elasticity = summary.max_elasticity.max(report.elasticity);
        summary.bfd_bound_respected &= report
            .length_set
            .last()
            .is_some_and(|&m| m <= report.degree);
        summary.max_nonassociate_divisors = summary
            .max_nonassociate_divisors
            .max(report.nonassociate_divisor_count);
        summary.length_routes_agree &= explorer.lengths_by_recursion(&e)? == report.length_set;
        reports.push(report);
    }
    Ok(Survey { reports, summary })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainReport {
    pub max_strict_divisor_chain: usize,
    /// Every chain ended inside the enumerated range. Bounded evidence only.
    pub accp_witnessed: bool,
    /// Per element, the longest chain equals the longest factorization.
    pub chain_matches_max_length: bool,
}

pub fn chain_length_check<P: FieldPair>(pair: &P, max_deg: usize) -> Result<ChainReport> {
    let mut explorer = Explorer::new(pair)?;
    let mut report = ChainReport {
        max_strict_divisor_chain: 0,
        accp_witnessed: true,
        chain_matches_max_length: true,
    };
    for e in elements_up_to(pair, max_deg)? {
        if is_unit_t(pair, &e) {
            continue;
        }
        let chain = explorer.max_chain(&e)?;
        let longest = explorer
            .lengths_by_recursion(&e)?
            .last()
            .copied()
            .unwrap_or(0);
        report.chain_matches_max_length &= chain == longest;
        report.max_strict_divisor_chain = report.max_strict_divisor_chain.max(chain);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{FiniteTower, Fq, PrimeInFunctionField};
    use alloc::vec;

    fn el(pair: &FiniteTower, coeffs: &[u64]) -> CompositeElement<Fq> {
        let ring = PolyRing::new(pair.big());
        make_composite(
            pair,
            ring.from_coeffs(coeffs.iter().map(|&c| Fq(c)).collect()),
        )
        .unwrap()
    }

    fn polys(pair: &FiniteTower, list: &[&[u64]]) -> Vec<Poly<Fq>> {
        list.iter().map(|c| el(pair, c).into_poly()).collect()
    }

    /// Divisors by trial division over every element of degree at most
    /// `deg e`, grouped by pairwise association.
    fn brute_divisor_classes(pair: &FiniteTower, e: &CompositeElement<Fq>) -> usize {
        let all = elements_up_to(pair, e.degree().unwrap()).unwrap();
        let divisors: Vec<_> = all
            .into_iter()
            .filter(|d| divides_in_t(pair, d, e).unwrap().is_some())
            .collect();
        let mut classes: Vec<CompositeElement<Fq>> = Vec::new();
        for d in divisors {
            let associated = classes.iter().any(|c| {
                divides_in_t(pair, c, &d).unwrap().is_some()
                    && divides_in_t(pair, &d, c).unwrap().is_some()
            });
            if !associated {
                classes.push(d);
            }
        }
        classes.len()
    }

    #[test]
    fn enumeration_examples() {
        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        assert_eq!(
            enumerate_t(&trivial, 1).unwrap(),
            vec![
                el(&trivial, &[1]),
                el(&trivial, &[0, 1]),
                el(&trivial, &[1, 1])
            ]
        );
        let t = FiniteTower::from_orders(4, 2).unwrap();
        assert_eq!(enumerate_t(&t, 0).unwrap(), vec![el(&t, &[1])]);
        // |K| |L| - 1
        assert_eq!(enumerate_t(&t, 1).unwrap().len(), 7);
        assert!(matches!(
            enumerate_t(&PrimeInFunctionField::new(2).unwrap(), 1),
            Err(Error::InfinitePairUnsupported(_))
        ));
    }

    #[test]
    fn divisor_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let mut ex = Explorer::new(&t).unwrap();
        let ds = ex.oracle_divisors(&el(&t, &[0, 0, 1])).unwrap();
        let expected: Vec<_> = [&[1][..], &[0, 1], &[0, 2], &[0, 3], &[0, 0, 1]]
            .iter()
            .map(|c| el(&t, c))
            .collect();
        assert_eq!(ds, expected);
        assert_eq!(ex.oracle_divisors(&el(&t, &[0, 2])).unwrap().len(), 2);
        assert_eq!(
            ex.oracle_divisors(&el(&t, &[1])).unwrap(),
            vec![el(&t, &[1])]
        );
    }

    #[test]
    fn divisor_counts_match_pairwise_association() {
        for (big, small, deg) in [(4, 2, 3), (9, 3, 2), (8, 2, 2), (2, 2, 4)] {
            let t = FiniteTower::from_orders(big, small).unwrap();
            let mut ex = Explorer::new(&t).unwrap();
            for e in elements_up_to(&t, deg).unwrap() {
                assert_eq!(
                    ex.oracle_divisors(&e).unwrap().len(),
                    brute_divisor_classes(&t, &e),
                    "{e:?}"
                );
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let mut ex = Explorer::new(&t).unwrap();
        let x2 = ex.all_factorizations(&el(&t, &[0, 0, 1])).unwrap();
        let expected: BTreeSet<_> = [
            polys(&t, &[&[0, 1], &[0, 1]]),
            polys(&t, &[&[0, 2], &[0, 3]]),
        ]
        .into();
        assert_eq!(x2, expected);
        let q = ex.all_factorizations(&el(&t, &[1, 1, 1])).unwrap();
        assert_eq!(q, [polys(&t, &[&[1, 2], &[1, 3]])].into());
        let atom = ex.all_factorizations(&el(&t, &[0, 2])).unwrap();
        assert_eq!(atom, [polys(&t, &[&[0, 2]])].into());
    }

    #[test]
    fn factorizations_multiply_back() {
        let t = FiniteTower::from_orders(9, 3).unwrap();
        let ring = PolyRing::new(t.big());
        let mut ex = Explorer::new(&t).unwrap();
        for e in elements_up_to(&t, 3).unwrap() {
            if is_unit_t(&t, &e) {
                continue;
            }
            for fac in ex.all_factorizations(&e).unwrap() {
                let product = fac.iter().fold(ring.one(), |acc, a| ring.mul(&acc, a));
                let ratio = ring.div_exact(e.poly(), &product).unwrap().unwrap();
                assert_eq!(ratio.degree(), Some(0));
                assert!(t.in_subfield(&ratio.coeffs()[0]));
            }
        }
    }

    #[test]
    fn survey_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let survey = invariant_survey(&t, 3, false).unwrap();
        assert!(survey.summary.hfd_holds);
        assert!(survey.summary.bfd_bound_respected);
        assert!(survey.summary.length_routes_agree);
        let x2 = survey
            .reports
            .iter()
            .find(|r| r.element == el(&t, &[0, 0, 1]))
            .unwrap();
        assert_eq!(x2.factorization_count, 2);
        assert_eq!(x2.length_set, [2].into());

        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        let survey = invariant_survey(&trivial, 4, false).unwrap();
        assert!(survey.summary.hfd_holds);
        assert!(survey.reports.iter().all(|r| r.factorization_count == 1));

        let big = FiniteTower::from_orders(32, 2).unwrap();
        assert!(matches!(
            invariant_survey(&big, 1, false),
            Err(Error::NotSupported(_))
        ));
        assert!(invariant_survey(&big, 1, true).is_ok());
    }

    #[test]
    fn chain_examples() {
        let t = FiniteTower::from_orders(4, 2).unwrap();
        let report = chain_length_check(&t, 3).unwrap();
        assert_eq!(report.max_strict_divisor_chain, 3);
        assert!(report.accp_witnessed && report.chain_matches_max_length);
        let trivial = FiniteTower::from_orders(2, 2).unwrap();
        assert_eq!(
            chain_length_check(&trivial, 2)
                .unwrap()
                .max_strict_divisor_chain,
            2
        );
        let t9 = FiniteTower::from_orders(9, 3).unwrap();
        assert_eq!(
            chain_length_check(&t9, 1).unwrap().max_strict_divisor_chain,
            1
        );
    }

    #[test]
    fn sieve_agrees_with_divisor_oracle() {
        for (big, small, deg) in [(4, 2, 4), (9, 3, 3)] {
            let t = FiniteTower::from_orders(big, small).unwrap();
            let sieve = DefinitionalOracle::build(&t, deg).unwrap();
            let mut ex = Explorer::new(&t).unwrap();
            for e in elements_up_to(&t, deg).unwrap() {
                if oracle_is_unit(&t, &e).unwrap() {
                    continue;
                }
                assert_eq!(
                    !sieve.is_reducible(&e),
                    ex.oracle_is_atom(&e).unwrap(),
                    "{e:?}"
                );
                assert_eq!(
                    sieve.is_squarefree(&e),
                    ex.oracle_is_squarefree(&e).unwrap(),
                    "{e:?}"
                );
            }
        }
    }

    #[test]
    fn oracle_check_small() {
        for (big, small, deg) in [(4, 2, 3), (9, 3, 2), (8, 2, 2), (16, 4, 2), (25, 5, 2)] {
            let t = FiniteTower::from_orders(big, small).unwrap();
            let report = oracle_check(&t, deg).unwrap();
            assert!(report.passed(), "{big}/{small}: {:?}", report.mismatches);
        }
    }
}
