use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::json;

use super::{CheckReport, Violation};
use crate::bigjson::{self, ser_count, ser_signed};
use crate::constructions::{
    canonical_relabeling, filtered, g_family, g_size, h1_family, h2_family, GFamilySpec, Tail,
};
use crate::error::{invalid, Error, Result};
use crate::graph::PatternGraph;
use crate::kneser::{eta, extremal_gfree_family, pattern_to_json};
use crate::search::SearchBudget;
use crate::setcore::{binomial, ksets, BigCount, Family, KSet, MAX_GROUND};

/// Largest `n` at which G-family sizes are also counted by enumeration.
const ENUMERATION_MAX_N: u32 = 16;

/// Checks `|G(T_1, ...)| <= |G(T_1*, ...)|` where `T_1` meets the rest of the
/// support and the replacement `T_1*` is disjoint from it.
pub fn check_shift_monotonicity(spec: &GFamilySpec, replacement: KSet) -> Result<CheckReport> {
    let (first, others) = spec.centers.split_first().ok_or_else(|| invalid("spec needs at least one centre"))?;
    let rest = others.iter().fold(spec.tail.support(), |acc, c| acc.union(*c));
    if first.is_disjoint(rest) {
        return Err(invalid(format!("T_1 = {first} does not meet the rest of the support")));
    }
    if replacement.len() != spec.t as usize || !replacement.is_disjoint(rest) {
        return Err(invalid(format!("replacement {replacement} must be a {}-set disjoint from the rest", spec.t)));
    }
    let start = Instant::now();
    let moved = spec.with_first_center(replacement)?;
    let (overlapping, disjoint) = (g_family(spec)?.len(), g_family(&moved)?.len());
    let mut report = CheckReport::new(
        "shift_monotonicity",
        json!({"n": spec.n, "k": spec.k, "t": spec.t, "s": spec.s()}),
    );
    report.tested = 1;
    if overlapping > disjoint {
        report.violations.push(Violation::ShiftMonotonicity { spec: spec.clone(), replacement, overlapping, disjoint });
    }
    report.detail("spec", serde_json::to_value(spec).expect("serializes"));
    report.detail("replacement", serde_json::to_value(replacement).expect("serializes"));
    report.detail("overlapping_size", overlapping);
    report.detail("disjoint_size", disjoint);
    Ok(report.timed(start))
}

/// Sizes of the canonical `G1` and `G2` families and the sign of their
/// difference, against the prediction `+1` for `k > 2t+1` and `-1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G1G2Comparison {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub s: u32,
    #[serde(serialize_with = "ser_count")]
    pub g1: BigCount,
    #[serde(serialize_with = "ser_count")]
    pub g2: BigCount,
    /// Enumerated sizes, present for `n <= 16`.
    pub g1_enumerated: Option<usize>,
    pub g2_enumerated: Option<usize>,
    /// `|G1| - |G2|`, from enumeration when available.
    #[serde(serialize_with = "ser_signed")]
    pub difference: BigInt,
    pub predicted_sign: i8,
    pub sign: i8,
}

pub fn compare_g1_g2(n: u32, k: u32, t: u32, s: u32) -> Result<G1G2Comparison> {
    let g1_spec = GFamilySpec::canonical(n, k, t, s, true)?;
    let g2_spec = GFamilySpec::canonical(n, k, t, s, false)?;
    let (g1, g2) = (g_size(&g1_spec)?, g_size(&g2_spec)?);
    let (g1_enumerated, g2_enumerated) = if n <= ENUMERATION_MAX_N {
        (Some(g_family(&g1_spec)?.len()), Some(g_family(&g2_spec)?.len()))
    } else {
        (None, None)
    };
    let difference = match (g1_enumerated, g2_enumerated) {
        (Some(a), Some(b)) => BigInt::from(a) - BigInt::from(b),
        _ => BigInt::from(g1.clone()) - BigInt::from(g2.clone()),
    };
    let sign = if difference.is_zero() { 0 } else if difference.is_positive() { 1 } else { -1 };
    let predicted_sign = if k > 2 * t + 1 { 1 } else { -1 };
    Ok(G1G2Comparison { n, k, t, s, g1, g2, g1_enumerated, g2_enumerated, difference, predicted_sign, sign })
}

/// [`compare_g1_g2`] as a check: a sign other than the predicted one, or a
/// closed form disagreeing with enumeration, is a violation.
pub fn check_g1_g2(n: u32, k: u32, t: u32, s: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let c = compare_g1_g2(n, k, t, s)?;
    let mut report = CheckReport::new("g1_g2", json!({"n": n, "k": k, "t": t, "s": s}));
    report.tested = 1;
    for (h1_tail, closed, enumerated) in [(true, &c.g1, c.g1_enumerated), (false, &c.g2, c.g2_enumerated)] {
        if let Some(e) = enumerated {
            if BigCount::from(e) != *closed {
                report.violations.push(Violation::SizeFormula {
                    spec: GFamilySpec::canonical(n, k, t, s, h1_tail)?,
                    closed_form: closed.clone(),
                    enumerated: e,
                });
            }
        }
    }
    if c.sign != c.predicted_sign {
        report.violations.push(Violation::SignMismatch {
            n,
            k,
            t,
            s,
            difference: c.difference.clone(),
            predicted: c.predicted_sign,
        });
    }
    report.detail("g1", bigjson::count(&c.g1));
    report.detail("g2", bigjson::count(&c.g2));
    report.detail("difference", bigjson::signed(&c.difference));
    report.detail("predicted_sign", c.predicted_sign);
    report.detail("sign", c.sign);
    report.detail("enumerated", c.g1_enumerated.is_some());
    Ok(report.timed(start))
}

/// Whether the tail of `spec`, as a family on its own, is isomorphic to
/// `H1` or `H2` respectively. False when `n` is beyond the enumeration cap.
pub fn tail_is_isomorphic(spec: &GFamilySpec) -> bool {
    let (n, k, t) = (spec.n, spec.k, spec.t);
    if n > MAX_GROUND {
        return false;
    }
    let tail = filtered(n, k, |f| spec.tail.contains(f, t));
    let (blocks, model) = match spec.tail {
        Tail::H1 { x, c } => (vec![x, c], h1_family(n, k, t)),
        Tail::H2 { z } => (vec![z], h2_family(n, k, t)),
    };
    let Ok(model) = model else {
        return false;
    };
    tail.relabel(&canonical_relabeling(n, &blocks)).is_ok_and(|f| f == model)
}

/// Checks that every member of `family` lies in one of the pieces of `spec`
/// and that the tail has the right isomorphism type.
pub fn decomposition_verify(family: &Family, spec: &GFamilySpec) -> Result<CheckReport> {
    if family.n() != spec.n || family.k() != spec.k {
        return Err(invalid(format!(
            "family is on [{}] choose {} but the spec on [{}] choose {}",
            family.n(),
            family.k(),
            spec.n,
            spec.k
        )));
    }
    if let Some(&member) = family.iter().find(|f| !spec.contains(**f)) {
        return Err(Error::DecompositionInvalid { member });
    }
    let start = Instant::now();
    let mut report =
        CheckReport::new("decomposition", json!({"n": spec.n, "k": spec.k, "t": spec.t, "s": spec.s()}));
    report.tested = family.len() as u64;
    let isomorphic = tail_is_isomorphic(spec);
    if !isomorphic {
        report.violations.push(Violation::TailShape { spec: spec.clone() });
    }
    let star_sizes: Vec<usize> =
        spec.centers.iter().map(|c| family.iter().filter(|f| c.is_subset(**f)).count()).collect();
    let tail_size = family.iter().filter(|f| spec.tail.contains(**f, spec.t)).count();
    report.detail("spec", serde_json::to_value(spec).expect("serializes"));
    report.detail("tail_isomorphic", isomorphic);
    report.detail("star_members", serde_json::to_value(star_sizes).expect("serializes"));
    report.detail("tail_members", tail_size);
    report.detail("pieces_disjoint", spec.is_disjoint());
    Ok(report.timed(start))
}

/// Exploratory search for `s - 1` centres and a tail covering `family`,
/// trying centre systems in canonical order and then every `H1` and `H2`
/// tail. Fails with [`Error::Infeasible`] beyond `max_instances` candidates.
pub fn find_decomposition(family: &Family, t: u32, s: u32, max_instances: u128) -> Result<Option<GFamilySpec>> {
    let (n, k) = (family.n(), family.k());
    if s == 0 || t == 0 || t >= k {
        return Err(invalid(format!("need s >= 1 and k > t >= 1, got s = {s}, k = {k}, t = {t}")));
    }
    let (nu, tu) = (u64::from(n), i64::from(t));
    let tails = binomial(nu, i64::from(k) + 1) * binomial(u64::from(k) + 1, tu) + binomial(nu, tu + 2);
    let total = binomial(binomial(nu, tu).try_into().unwrap_or(u64::MAX), i64::from(s) - 1) * tails;
    match u128::try_from(&total) {
        Ok(v) if v <= max_instances => {}
        _ => return Err(Error::Infeasible { instances: u128::try_from(&total).unwrap_or(u128::MAX), cap: max_instances }),
    }
    let tsets: Vec<KSet> = ksets(n, t).collect();
    let mut shapes: Vec<Tail> = Vec::new();
    for c in ksets(n, k + 1) {
        for x in c.elements().into_iter().combinations(t as usize) {
            shapes.push(Tail::H1 { x: KSet::of(&x), c });
        }
    }
    shapes.extend(ksets(n, t + 2).map(|z| Tail::H2 { z }));
    for centers in tsets.iter().copied().combinations(s as usize - 1) {
        let uncovered: Vec<KSet> =
            family.iter().copied().filter(|f| !centers.iter().any(|c| c.is_subset(*f))).collect();
        if let Some(&tail) = shapes.iter().find(|tail| uncovered.iter().all(|f| tail.contains(*f, t))) {
            return GFamilySpec::new(n, k, t, centers, tail).map(Some);
        }
    }
    Ok(None)
}

/// Builds the extremal `G`-free family for `pattern` and reports each of its
/// equality conditions; a failed condition is a violation.
pub fn check_gfree(n: u32, k: u32, t: u32, pattern: &PatternGraph, budget: SearchBudget) -> Result<CheckReport> {
    if pattern.vertex_count() == 0 {
        return Err(invalid("the pattern must have at least one vertex"));
    }
    let analysis = eta(pattern, budget)?;
    if (analysis.chi as u64 - 1) * u64::from(t) > u64::from(n) {
        return Err(invalid(format!("{} disjoint {t}-sets do not fit in [{n}]", analysis.chi - 1)));
    }
    let start = Instant::now();
    let pattern_json = pattern_to_json(pattern);
    let mut report = CheckReport::new("gfree", json!({"n": n, "k": k, "t": t, "pattern": pattern_json.clone()}));
    report.tested = 1;
    report.detail("chi", analysis.chi);
    report.detail("eta", analysis.eta);
    match extremal_gfree_family(n, k, t, pattern, None, budget) {
        Ok(x) => {
            report.certified = x.conditions.g_free.is_some();
            report.detail("bound", bigjson::count(&x.bound));
            report.detail("size", x.family.len());
            report.detail("extras", serde_json::to_value(&x.extras).expect("serializes"));
            report.detail("conditions", serde_json::to_value(&x.conditions).expect("serializes"));
        }
        Err(Error::ConstructionInfeasible(failure)) => {
            report.violations.push(Violation::GFreeCondition { n, k, t, pattern: pattern_json, failure });
        }
        Err(e) => return Err(e),
    }
    Ok(report.timed(start))
}
