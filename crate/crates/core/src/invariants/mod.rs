//! Exact family invariants: t-intersection, trivial centres, the t-matching
//! number, the t-covering number, the removal number and shifting.

mod cover;
mod shift;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use crate::clique::{clique_number, first_clique, full_set};
use crate::error::{invalid, Error, Result};
use crate::graph::PatternGraph;
use crate::kneser::conflict_graph;
use crate::search::{Found, Meter, Outcome, SearchBudget};
use crate::setcore::{Family, KSet};

pub use cover::{tau_t, Cover};
pub use shift::{full_compress, full_compress_with_sweeps, shift};

pub(crate) fn check_t(family: &Family, t: u32) -> Result<()> {
    if t == 0 || t > family.k() {
        return Err(invalid(format!("t = {t} must satisfy 1 <= t <= k = {}", family.k())));
    }
    Ok(())
}

/// True iff every two distinct members share at least `t` elements.
pub fn is_t_intersecting(family: &Family, t: u32) -> Result<bool> {
    check_t(family, t)?;
    Ok(family
        .iter()
        .tuple_combinations()
        .all(|(a, b)| a.intersection_size(*b) >= t as usize))
}

/// Lexicographically least `t`-set contained in every member, if any.
///
/// Fails with [`Error::NotTIntersecting`] when the family is not
/// `t`-intersecting. The empty family has every `t`-set as a centre, so the
/// answer there is `{1, ..., t}`.
pub fn trivial_center(family: &Family, t: u32) -> Result<Option<KSet>> {
    if !is_t_intersecting(family, t)? {
        return Err(Error::NotTIntersecting { t });
    }
    let common = family
        .iter()
        .fold(KSet::ground(family.n()), |acc, m| acc.intersection(*m));
    if common.len() < t as usize {
        return Ok(None);
    }
    Ok(Some(KSet::from_elements(common.iter().take(t as usize)).expect("subset of a set")))
}

/// A t-matching: members pairwise meeting in fewer than `t` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingWitness {
    pub t: u32,
    pub sets: Vec<KSet>,
}

impl MatchingWitness {
    pub fn size(&self) -> usize {
        self.sets.len()
    }

    /// Checks membership, distinctness and the pairwise intersection bound.
    pub fn validate(&self, family: &Family) -> bool {
        self.sets.iter().all(|s| family.contains(s))
            && self.sets.iter().all_unique()
            && self
                .sets
                .iter()
                .tuple_combinations()
                .all(|(a, b)| a.intersection_size(*b) < self.t as usize)
    }
}

/// The t-matching number with the lexicographically least maximum matching.
///
/// Computed as the clique number of the conflict graph. On budget exhaustion
/// the witness is the largest matching found, a lower bound.
pub fn nu_t(family: &Family, t: u32, budget: SearchBudget) -> Result<Outcome<MatchingWitness>> {
    check_t(family, t)?;
    let g = conflict_graph(family, t);
    let mut meter = Meter::new(budget);
    let (clique, complete) = clique_number(&g, &full_set(family.len()), &mut meter);
    let sets = clique.iter().map(|&i| family.members()[i]).collect();
    Ok(Outcome::with_certified(MatchingWitness { t, sets }, complete))
}

/// Minimum deletion set destroying every t-matching of a given size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub value: usize,
    /// The deleted members; empty when the search ran out of budget.
    pub deleted: Vec<KSet>,
}

/// Minimum number of members whose deletion leaves no t-matching of size `s`.
///
/// On budget exhaustion `value` is a proven lower bound.
pub fn removal_number(family: &Family, s: usize, t: u32, budget: SearchBudget) -> Result<Outcome<Removal>> {
    check_t(family, t)?;
    if s == 0 {
        return Err(invalid("s must be at least 1"));
    }
    let g = conflict_graph(family, t);
    let mut meter = Meter::new(budget);
    Ok(min_clique_hitting_set(&g, s, &mut meter).map(|(value, deleted)| Removal {
        value,
        deleted: deleted.into_iter().map(|i| family.members()[i]).collect(),
    }))
}

/// Smallest vertex set meeting every `s`-clique, by iterative deepening on its
/// size with clique branching and a disjoint-clique packing bound.
pub(crate) fn min_clique_hitting_set(g: &PatternGraph, s: usize, meter: &mut Meter) -> Outcome<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    for depth in 0..=n {
        let mut alive = full_set(n);
        let mut fixed = FixedBitSet::with_capacity(n);
        match hit(g, s, &mut alive, &mut fixed, depth, meter) {
            Found::Yes(mut deleted) => {
                deleted.sort_unstable();
                return Outcome::Exact((deleted.len(), deleted));
            }
            Found::No => {}
            Found::OutOfBudget => return Outcome::Exhausted((depth, Vec::new())),
        }
    }
    unreachable!("deleting every vertex always succeeds")
}

fn hit(
    g: &PatternGraph,
    s: usize,
    alive: &mut FixedBitSet,
    fixed: &mut FixedBitSet,
    depth: usize,
    meter: &mut Meter,
) -> Found<Vec<usize>> {
    if !meter.tick() {
        return Found::OutOfBudget;
    }
    let clique = match first_clique(g, alive, s, &|_: &[usize]| true, meter) {
        Found::No => return Found::Yes(Vec::new()),
        Found::OutOfBudget => return Found::OutOfBudget,
        Found::Yes(c) => c,
    };
    if depth == 0 {
        return Found::No;
    }
    // Vertex-disjoint s-cliques each need their own deletion.
    let mut rest = alive.clone();
    let mut packed = 0;
    while packed <= depth {
        match first_clique(g, &rest, s, &|_: &[usize]| true, meter) {
            Found::Yes(c) => {
                packed += 1;
                for v in c {
                    rest.set(v, false);
                }
            }
            Found::No => break,
            Found::OutOfBudget => return Found::OutOfBudget,
        }
    }
    if packed > depth {
        return Found::No;
    }
    let mut newly_fixed = Vec::new();
    let mut result = Found::No;
    for &v in &clique {
        if fixed.contains(v) {
            continue;
        }
        alive.set(v, false);
        let r = hit(g, s, alive, fixed, depth - 1, meter);
        alive.set(v, true);
        match r {
            Found::Yes(mut del) => {
                del.push(v);
                result = Found::Yes(del);
                break;
            }
            Found::OutOfBudget => {
                result = Found::OutOfBudget;
                break;
            }
            // Later branches keep v.
            Found::No => {
                fixed.set(v, true);
                newly_fixed.push(v);
            }
        }
    }
    for v in newly_fixed {
        fixed.set(v, false);
    }
    result
}
