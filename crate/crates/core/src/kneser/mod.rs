//! Generalized Kneser graphs `KG(n, k, t)` restricted to families, pattern
//! analysis (`chi`, `eta`, special subgraphs), G-free testing and the G-free
//! size bound with its extremal construction.

mod coloring;
mod embed;
mod pattern;

use serde::Serialize;

use crate::constructions::{ell, star_union};
use crate::error::{invalid, Error, Result};
use crate::graph::PatternGraph;
use crate::search::{Found, Meter, SearchBudget};
use crate::setcore::{ksets, BigCount, Family, KSet, TSetSystem};

pub use coloring::{chromatic_number, eta, special_subgraphs, ColoringAnalysis};
pub use embed::is_embedding;
pub use pattern::{parse_builtin, parse_pattern, parse_pattern_json, pattern_to_json};

/// Adjacency in `KG(n, k, t)`: fewer than `t` common elements.
pub fn kneser_adjacent(a: KSet, b: KSet, t: u32) -> Result<bool> {
    if a == b {
        return Err(Error::IdenticalSets(a));
    }
    Ok(a.intersection_size(b) < t as usize)
}

/// `KG(n, k, t)[F]`, vertex `i` being the `i`-th member in canonical order.
pub fn conflict_graph(family: &Family, t: u32) -> PatternGraph {
    conflict_graph_of(family.members(), t)
}

pub(crate) fn conflict_graph_of(members: &[KSet], t: u32) -> PatternGraph {
    let mut g = PatternGraph::edgeless(members.len());
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate().skip(i + 1) {
            if a.intersection_size(*b) < t as usize {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Answer to "does `KG(n,k,t)[F]` contain the pattern as a subgraph?".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GFreeReport {
    pub contains: bool,
    /// `witness[v]` is the member assigned to pattern vertex `v`.
    pub witness: Option<Vec<KSet>>,
}

impl GFreeReport {
    /// A positive report must carry a valid embedding into the family.
    pub fn validate(&self, family: &Family, t: u32, pattern: &PatternGraph) -> bool {
        match (&self.witness, self.contains) {
            (None, false) => true,
            (Some(w), true) => {
                let Some(image) = w.iter().map(|s| family.index_of(s)).collect::<Option<Vec<_>>>() else {
                    return false;
                };
                is_embedding(pattern, &conflict_graph(family, t), &image)
            }
            _ => false,
        }
    }
}

/// Embedding search strategy for [`contains_pattern_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Part-by-part search when the pattern is complete multipartite,
    /// generic otherwise.
    Auto,
    Generic,
    /// Fails with invalid parameters on other patterns.
    Multipartite,
}

pub(crate) fn embed_in(
    host: &PatternGraph,
    pattern: &PatternGraph,
    strategy: Strategy,
    meter: &mut Meter,
) -> Result<Found<Vec<usize>>> {
    let parts = match strategy {
        Strategy::Generic => None,
        Strategy::Auto => pattern.multipartite_parts(),
        Strategy::Multipartite => {
            Some(pattern.multipartite_parts().ok_or_else(|| invalid("pattern is not complete multipartite"))?)
        }
    };
    Ok(match parts {
        Some(parts) => embed::embed_multipartite(&parts, host, meter),
        None => embed::embed_generic(pattern, host, meter),
    })
}

/// Exact (non-induced) subgraph containment of `pattern` in `KG(n,k,t)[F]`.
pub fn contains_pattern(family: &Family, t: u32, pattern: &PatternGraph, budget: SearchBudget) -> Result<GFreeReport> {
    contains_pattern_with(family, t, pattern, budget, Strategy::Auto)
}

pub fn contains_pattern_with(
    family: &Family,
    t: u32,
    pattern: &PatternGraph,
    budget: SearchBudget,
    strategy: Strategy,
) -> Result<GFreeReport> {
    let host = conflict_graph(family, t);
    let mut meter = Meter::new(budget);
    match embed_in(&host, pattern, strategy, &mut meter)? {
        Found::Yes(image) => Ok(GFreeReport {
            contains: true,
            witness: Some(image.into_iter().map(|i| family.members()[i]).collect()),
        }),
        Found::No => Ok(GFreeReport { contains: false, witness: None }),
        Found::OutOfBudget => Err(Error::BudgetExhausted("pattern containment")),
    }
}

fn check_nkt(n: u32, k: u32, t: u32) -> Result<()> {
    Family::empty(n, k)?;
    if t == 0 || t > k {
        return Err(invalid(format!("need 1 <= t <= k, got t = {t}, k = {k}")));
    }
    Ok(())
}

/// `ell(n, k, t, chi - 1) + eta - 1`, the largest size of a family whose
/// Kneser graph avoids the pattern (for `n` large).
pub fn gfree_bound(n: u32, k: u32, t: u32, pattern: &PatternGraph, budget: SearchBudget) -> Result<BigCount> {
    check_nkt(n, k, t)?;
    if pattern.vertex_count() == 0 {
        return Err(invalid("the pattern must have at least one vertex"));
    }
    let a = eta(pattern, budget)?;
    Ok(ell(n, k, t, (a.chi - 1) as u32)? + BigCount::from(a.eta) - 1u32)
}

/// The equality conditions checked on an extremal G-free family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityConditions {
    pub size_equals_bound: bool,
    pub extras_outside_stars: bool,
    pub extras_count_is_eta_minus_one: bool,
    /// No special subgraph of the pattern embeds into the extras' Kneser graph.
    pub extras_avoid_special_subgraphs: bool,
    /// Exact G-freeness of the whole family; `None` if the check ran out of
    /// budget.
    pub g_free: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GFreeExtremal {
    pub family: Family,
    pub centers: Vec<KSet>,
    pub extras: Vec<KSet>,
    pub chi: usize,
    pub eta: usize,
    #[serde(serialize_with = "crate::bigjson::ser_count")]
    pub bound: BigCount,
    pub conditions: EqualityConditions,
}

/// Stars on `chi - 1` canonical disjoint windows plus `eta - 1` extra sets
/// outside them. Extras are either supplied or chosen as the
/// lexicographically first tuple (in canonical order) whose Kneser graph
/// contains no special subgraph of the pattern.
pub fn extremal_gfree_family(
    n: u32,
    k: u32,
    t: u32,
    pattern: &PatternGraph,
    extras: Option<&[KSet]>,
    budget: SearchBudget,
) -> Result<GFreeExtremal> {
    let bound = gfree_bound(n, k, t, pattern, budget)?;
    let analysis = eta(pattern, budget)?;
    let (chi, eta_value) = (analysis.chi, analysis.eta);
    let windows = (chi - 1) as u32;
    if u64::from(windows) * u64::from(t) > u64::from(n) {
        return Err(Error::ConstructionInfeasible(format!("{windows} disjoint {t}-sets do not fit in [{n}]")));
    }
    let centers: Vec<KSet> = (1..=windows).map(|r| KSet::interval((r - 1) * t + 1, r * t)).collect();
    let stars = star_union(n, k, &TSetSystem::new(n, t, centers.iter().copied())?)?;
    let specials: Vec<PatternGraph> =
        special_subgraphs(pattern, budget)?.iter().map(|u| pattern.induced(u)).collect();
    let mut meter = Meter::new(budget);

    let extras: Vec<KSet> = match extras {
        Some(given) => {
            let mut v = given.to_vec();
            v.sort_unstable();
            v
        }
        None => {
            let candidates: Vec<KSet> = ksets(n, k).filter(|f| !stars.contains(f)).collect();
            let mut chosen = Vec::new();
            match pick_extras(&candidates, eta_value - 1, 0, &mut chosen, &specials, t, &mut meter) {
                Found::Yes(()) => chosen,
                Found::No => {
                    return Err(Error::ConstructionInfeasible(format!(
                        "no {} sets outside the stars avoid every special subgraph",
                        eta_value - 1
                    )))
                }
                Found::OutOfBudget => return Err(Error::BudgetExhausted("extra sets")),
            }
        }
    };
    for e in &extras {
        if e.len() != k as usize || e.max_element().is_some_and(|m| m > n) {
            return Err(invalid(format!("extra set {e} is not a {k}-subset of [{n}]")));
        }
    }

    let mut family = stars.clone();
    for &e in &extras {
        family = family.with_member(e)?;
    }
    let extras_outside_stars = extras.iter().all(|e| !stars.contains(e));
    let extras_count_is_eta_minus_one = extras.len() == eta_value - 1 && extras.windows(2).all(|w| w[0] != w[1]);
    let extras_avoid_special_subgraphs = special_free(&extras, &specials, t, &mut meter)
        .ok_or(Error::BudgetExhausted("extra sets"))?;
    let size_equals_bound = BigCount::from(family.len()) == bound;
    let host = conflict_graph(&family, t);
    let g_free = match embed_in(&host, pattern, Strategy::Auto, &mut meter)? {
        Found::Yes(_) => Some(false),
        Found::No => Some(true),
        Found::OutOfBudget => None,
    };
    let conditions = EqualityConditions {
        size_equals_bound,
        extras_outside_stars,
        extras_count_is_eta_minus_one,
        extras_avoid_special_subgraphs,
        g_free,
    };
    let failed: Vec<&str> = [
        (size_equals_bound, "size differs from the bound"),
        (extras_outside_stars, "an extra set lies in a star"),
        (extras_count_is_eta_minus_one, "extras are not eta - 1 distinct sets"),
        (extras_avoid_special_subgraphs, "extras contain a special subgraph"),
        (g_free != Some(false), "the family contains the pattern"),
    ]
    .iter()
    .filter(|(ok, _)| !ok)
    .map(|&(_, why)| why)
    .collect();
    if !failed.is_empty() {
        return Err(Error::ConstructionInfeasible(failed.join("; ")));
    }
    Ok(GFreeExtremal { family, centers, extras, chi, eta: eta_value, bound, conditions })
}

/// `None` when the budget runs out.
fn special_free(sets: &[KSet], specials: &[PatternGraph], t: u32, meter: &mut Meter) -> Option<bool> {
    let host = conflict_graph_of(sets, t);
    for sp in specials {
        if sp.vertex_count() > sets.len() {
            continue;
        }
        match embed::embed_generic(sp, &host, meter) {
            Found::Yes(_) => return Some(false),
            Found::No => {}
            Found::OutOfBudget => return None,
        }
    }
    Some(true)
}

fn pick_extras(
    candidates: &[KSet],
    need: usize,
    start: usize,
    chosen: &mut Vec<KSet>,
    specials: &[PatternGraph],
    t: u32,
    meter: &mut Meter,
) -> Found<()> {
    if chosen.len() == need {
        return Found::Yes(());
    }
    let missing = need - chosen.len();
    if candidates.len() < start + missing {
        return Found::No;
    }
    for i in start..=candidates.len() - missing {
        if !meter.tick() {
            return Found::OutOfBudget;
        }
        chosen.push(candidates[i]);
        match special_free(chosen, specials, t, meter) {
            Some(true) => match pick_extras(candidates, need, i + 1, chosen, specials, t, meter) {
                Found::No => {}
                other => return other,
            },
            Some(false) => {}
            None => return Found::OutOfBudget,
        }
        chosen.pop();
    }
    Found::No
}
