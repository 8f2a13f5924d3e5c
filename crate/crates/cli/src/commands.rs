//! Subcommand implementations, generic over the pair.

use composite_core::composite::{
    divides_in_t, factor_t_with_seed, is_irreducible_t, is_unit_t, Atom, CompositeElement,
};
use composite_core::explorer::{chain_length_check, invariant_survey, oracle_check};
use composite_core::extensions::{almost_bezout_witness, int_valued_cover, pair_report};
use composite_core::fields::{AnyPair, Degree, Field, FieldPair};
use composite_core::poly::PolyRing;
use composite_core::squarefree::{
    is_radical_bounded, is_squarefree_t, sqf_agreement, sr_scan, RadicalValue, SqfAgreement,
    SqfEvidence,
};
use composite_core::text::{parse_composite, parse_poly, render_composite, render_poly};
use composite_core::{Error, Result};
use serde_json::{json, Value};

use crate::output::{Report, Table};

type Elem<P> = <<P as FieldPair>::L as Field>::Elem;

fn show<P: FieldPair>(pair: &P, e: &CompositeElement<Elem<P>>) -> String {
    render_composite(pair.big(), e)
}

fn show_atom<P: FieldPair>(pair: &P, a: &Atom<Elem<P>>) -> String {
    render_poly(pair.big(), &a.to_poly(pair.big()))
}

fn nonzero<P: FieldPair>(pair: &P, src: &str) -> Result<CompositeElement<Elem<P>>> {
    let e = parse_composite(pair, src)?;
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(e)
}

fn nonunit<P: FieldPair>(pair: &P, src: &str) -> Result<CompositeElement<Elem<P>>> {
    let e = nonzero(pair, src)?;
    if is_unit_t(pair, &e) {
        return Err(Error::UnitElement(show(pair, &e)));
    }
    Ok(e)
}

pub fn classify<P: FieldPair>(pair: &P, src: &str, seed: u64) -> Result<Report> {
    let e = nonzero(pair, src)?;
    let unit = is_unit_t(pair, &e);
    let mut body = json!({
        "element": show(pair, &e),
        "degree": e.degree(),
        "unit": unit,
    });
    if !unit {
        let sqf = is_squarefree_t(pair, &e)?;
        let fac = factor_t_with_seed(pair, &e, seed)?;
        let map = body.as_object_mut().expect("object");
        map.insert("irreducible".into(), json!(is_irreducible_t(pair, &e)?));
        map.insert("squarefree".into(), json!(sqf.value));
        map.insert("squarefree_branch".into(), json!(sqf.branch.as_str()));
        map.insert("atom_count".into(), json!(fac.atoms.len()));
    }
    Ok(Report::new(body))
}

pub fn factor<P: FieldPair>(pair: &P, src: &str, seed: u64) -> Result<Report> {
    let e = nonunit(pair, src)?;
    let fac = factor_t_with_seed(pair, &e, seed)?;
    let atoms: Vec<String> = fac.atoms.iter().map(|a| show_atom(pair, a)).collect();
    Ok(Report::new(json!({
        "element": show(pair, &e),
        "unit": pair.big().render(&fac.unit),
        "atoms": atoms,
    })))
}

pub fn irreducible<P: FieldPair>(pair: &P, src: &str) -> Result<Report> {
    let e = nonzero(pair, src)?;
    Ok(Report::new(json!({
        "element": show(pair, &e),
        "irreducible": is_irreducible_t(pair, &e)?,
    })))
}

pub fn squarefree<P: FieldPair>(pair: &P, src: &str) -> Result<Report> {
    let e = nonunit(pair, src)?;
    let v = is_squarefree_t(pair, &e)?;
    let evidence = match &v.evidence {
        None => Value::Null,
        Some(SqfEvidence::SquareDivisor(g)) => {
            json!({"kind": "square_divisor", "g": show(pair, g)})
        }
        Some(SqfEvidence::OutsideSquareClass(h0)) => {
            json!({"kind": "outside_square_class", "h0": pair.big().render(h0)})
        }
    };
    Ok(Report::new(json!({
        "element": show(pair, &e),
        "squarefree": v.value,
        "branch": v.branch.as_str(),
        "evidence": evidence,
    })))
}

pub fn radical<P: FieldPair>(
    pair: &P,
    src: &str,
    deg_bound: usize,
    m_bound: u32,
) -> Result<Report> {
    let e = nonunit(pair, src)?;
    let v = is_radical_bounded(pair, &e, deg_bound, m_bound)?;
    let (verdict, x, m) = match &v.value {
        RadicalValue::Radical => ("Radical", Value::Null, Value::Null),
        RadicalValue::NotRadical { x, m } => ("NotRadical", json!(show(pair, x)), json!(m)),
        RadicalValue::UnknownUpToBound => ("UnknownUpToBound", Value::Null, Value::Null),
    };
    Ok(Report::new(json!({
        "element": show(pair, &e),
        "verdict": verdict,
        "x": x,
        "m": m,
        "deg_bound": v.deg_bound,
        "m_bound": v.m_bound,
    })))
}

pub fn divides<P: FieldPair>(pair: &P, divisor: &str, dividend: &str) -> Result<Report> {
    let g = parse_composite(pair, divisor)?;
    let f = parse_composite(pair, dividend)?;
    let q = divides_in_t(pair, &g, &f)?;
    Ok(Report::new(json!({
        "divisor": show(pair, &g),
        "dividend": show(pair, &f),
        "divides": q.is_some(),
        "quotient": q.map(|q| show(pair, &q)),
    })))
}

pub fn report<P: FieldPair>(pair: &P) -> Report {
    let r = pair_report(pair);
    let degree = match r.degree {
        Degree::Finite(d) => json!(d),
        Degree::Infinite => json!("infinite"),
    };
    Report::new(json!({
        "degree": degree,
        "algebraic": r.algebraic,
        "separable": r.separable,
        "normal": r.normal,
        "galois": r.galois,
        "purely_inseparable": r.purely_inseparable,
        "galois_group_order": r.galois_group_order,
        "composite_noetherian": r.composite_noetherian,
        "composite_atomic": r.composite_atomic,
        "composite_accp": r.composite_accp,
    }))
}

pub fn scan_sr<P: FieldPair>(pair: &P, deg_bound: usize, m_bound: u32) -> Result<Report> {
    let scan = sr_scan(pair, deg_bound, m_bound)?;
    let rows: Vec<Vec<String>> = scan
        .witnesses
        .iter()
        .map(|w| vec![show(pair, &w.f), show(pair, &w.x), w.m.to_string()])
        .collect();
    let witnesses: Vec<Value> = scan
        .witnesses
        .iter()
        .map(|w| json!({"f": show(pair, &w.f), "x": show(pair, &w.x), "m": w.m}))
        .collect();
    Ok(Report::new(json!({
        "pair": pair.name(),
        "deg_bound": deg_bound,
        "m_bound": m_bound,
        "is_sr_refuted": scan.is_sr_refuted,
        "squarefree_examined": scan.examined,
        "witnesses": witnesses,
    }))
    .with_table(Table {
        headers: vec!["f", "x", "m"],
        rows,
    }))
}

pub fn survey<P: FieldPair>(pair: &P, max_deg: usize, allow_large: bool) -> Result<Report> {
    let survey = invariant_survey(pair, max_deg, allow_large)?;
    let chain = chain_length_check(pair, max_deg)?;
    let s = &survey.summary;
    let mut rows = Vec::new();
    let mut elements = Vec::new();
    for r in &survey.reports {
        let lengths: Vec<usize> = r.length_set.iter().copied().collect();
        let element = show(pair, &r.element);
        rows.push(vec![
            element.clone(),
            r.degree.to_string(),
            lengths
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(";"),
            r.elasticity.to_string(),
            r.nonassociate_divisor_count.to_string(),
            r.factorization_count.to_string(),
        ]);
        elements.push(json!({
            "element": element,
            "degree": r.degree,
            "length_set": lengths,
            "elasticity": r.elasticity.to_string(),
            "nonassociate_divisors": r.nonassociate_divisor_count,
            "factorizations": r.factorization_count,
        }));
    }
    Ok(Report::new(json!({
        "pair": pair.name(),
        "max_deg": max_deg,
        "summary": {
            "elements": s.elements,
            "hfd_holds": s.hfd_holds,
            "max_elasticity": s.max_elasticity.to_string(),
            "bfd_bound_respected": s.bfd_bound_respected,
            "max_nonassociate_divisors": s.max_nonassociate_divisors,
            "length_routes_agree": s.length_routes_agree,
            "max_strict_divisor_chain": chain.max_strict_divisor_chain,
            "accp_witnessed": chain.accp_witnessed,
            "chain_matches_max_length": chain.chain_matches_max_length,
        },
        "elements": elements,
    }))
    .with_table(Table {
        headers: vec![
            "element",
            "degree",
            "length_set",
            "elasticity",
            "nonassociate_divisors",
            "factorizations",
        ],
        rows,
    }))
}

pub fn agreement<P: FieldPair>(pair: &P) -> Result<Report> {
    let body = match sqf_agreement(pair)? {
        SqfAgreement::Agree => json!({
            "pair": pair.name(),
            "agree": true,
            "witness": null,
            "separating_element": null,
        }),
        SqfAgreement::Disagree(c) => {
            let ring = PolyRing::new(pair.big());
            let field = pair.big();
            // X^2 (X + c)
            let sep = ring.from_coeffs(vec![field.zero(), field.zero(), c.clone(), field.one()]);
            json!({
                "pair": pair.name(),
                "agree": false,
                "witness": field.render(&c),
                "separating_element": render_poly(field, &sep),
            })
        }
    };
    Ok(Report::new(body))
}

pub fn oracle<P: FieldPair>(pair: &P, max_deg: usize) -> Result<Report> {
    let report = oracle_check(pair, max_deg)?;
    let rows: Vec<Vec<String>> = report
        .mismatches
        .iter()
        .map(|m| {
            vec![
                show(pair, &m.element),
                m.predicate.as_str().to_string(),
                m.decided.to_string(),
                m.oracle.to_string(),
            ]
        })
        .collect();
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "element": show(pair, &m.element),
                "predicate": m.predicate.as_str(),
                "decided": m.decided,
                "oracle": m.oracle,
            })
        })
        .collect();
    let mut out = Report::new(json!({
        "pair": pair.name(),
        "max_deg": max_deg,
        "checked": report.checked,
        "passed": report.passed(),
        "mismatches": mismatches,
    }))
    .with_table(Table {
        headers: vec!["element", "predicate", "decided", "oracle"],
        rows,
    });
    if !report.passed() {
        out.status = 1;
    }
    Ok(out)
}

pub fn almost_bezout(pair: &AnyPair, f: &str, g: &str) -> Result<Report> {
    let AnyPair::Inseparable(pair) = pair else {
        return Err(Error::UnsupportedPair(pair.name()));
    };
    let field = pair.big();
    let fp = parse_poly(field, f)?;
    let gp = parse_poly(field, g)?;
    let w = almost_bezout_witness(pair, &fp, &gp)?;
    // K = GF(p)(s) is stored as a copy of GF(p)(t); rename its variable.
    let over_k = render_poly(field, &w.d_over_k).replace('t', "s");
    Ok(Report::new(json!({
        "f": render_poly(field, &fp),
        "g": render_poly(field, &gp),
        "n": w.n,
        "d": render_poly(field, &w.d),
        "d_over_k": over_k,
    })))
}

pub fn cover(pair: &AnyPair) -> Result<Report> {
    let AnyPair::Tower(pair) = pair else {
        return Err(Error::UnsupportedPair(pair.name()));
    };
    let c = int_valued_cover(pair)?;
    let field = pair.big();
    let values: Vec<Value> = c
        .values
        .iter()
        .map(|(a, v)| json!({"a": field.render(a), "value": field.render(v)}))
        .collect();
    let maps_into_a = c.values.iter().all(|(_, v)| pair.in_subfield(v));
    Ok(Report::new(json!({
        "cover": c.cover.name(),
        "b": field.render(&c.b),
        "witness": render_poly(field, &c.witness),
        "values": values,
        "maps_into_a": maps_into_a,
    })))
}
