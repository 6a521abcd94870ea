use fixedbitset::FixedBitSet;
use itertools::Itertools;

use super::check_t;
use crate::error::Result;
use crate::search::{Found, Meter, Outcome, SearchBudget};
use crate::setcore::{Family, KSet, TSetSystem};

/// A t-covering family: every member contains at least one of its t-sets.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Cover {
    pub value: usize,
    pub cover: TSetSystem,
}

impl Cover {
    pub fn validate(&self, family: &Family) -> bool {
        self.cover.len() == self.value
            && self.cover.t() <= family.k()
            && family.iter().all(|m| self.cover.iter().any(|c| c.is_subset(*m)))
    }
}

/// The t-covering number with the lexicographically least minimum cover.
///
/// Candidates are the t-subsets of members; any other t-set covers nothing.
/// On budget exhaustion the cover is the best one found, an upper bound.
pub fn tau_t(family: &Family, t: u32, budget: SearchBudget) -> Result<Outcome<Cover>> {
    check_t(family, t)?;
    let instance = Instance::new(family, t);
    let mut meter = Meter::new(budget);
    let into_cover = |chosen: &[usize]| Cover {
        value: chosen.len(),
        cover: TSetSystem::new(family.n(), t, chosen.iter().map(|&c| instance.candidates[c])).expect("distinct t-sets"),
    };

    let mut best = instance.greedy();
    let all_members = instance.all_members();
    let mut allowed = FixedBitSet::with_capacity(instance.candidates.len());
    allowed.insert_range(..);
    instance.branch(&mut Vec::new(), &all_members, allowed, &mut best, &mut meter);
    if meter.exhausted() {
        return Ok(Outcome::Exhausted(into_cover(&best)));
    }
    let mut chosen = Vec::new();
    match instance.lex_first(None, &mut chosen, &all_members, best.len(), &mut meter) {
        Found::Yes(()) => Ok(Outcome::Exact(into_cover(&chosen))),
        _ => Ok(Outcome::Exhausted(into_cover(&best))),
    }
}

struct Instance {
    candidates: Vec<KSet>,
    covers: Vec<FixedBitSet>,
    member_cands: Vec<Vec<usize>>,
}

impl Instance {
    fn new(family: &Family, t: u32) -> Self {
        let candidates: Vec<KSet> = family
            .iter()
            .flat_map(|m| m.iter().combinations(t as usize).map(|c| KSet::from_elements(c).unwrap()))
            .sorted()
            .dedup()
            .collect();
        let m = family.len();
        let mut covers = vec![FixedBitSet::with_capacity(m); candidates.len()];
        let mut member_cands = vec![Vec::new(); m];
        for (ci, c) in candidates.iter().enumerate() {
            for (fi, f) in family.iter().enumerate() {
                if c.is_subset(*f) {
                    covers[ci].insert(fi);
                    member_cands[fi].push(ci);
                }
            }
        }
        Instance { candidates, covers, member_cands }
    }

    fn all_members(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.member_cands.len());
        s.insert_range(..);
        s
    }

    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.all_members();
        let mut chosen = Vec::new();
        while !uncovered.is_clear() {
            let c = (0..self.candidates.len())
                .max_by_key(|&c| (self.covers[c].intersection_count(&uncovered), std::cmp::Reverse(c)))
                .expect("nonempty family has candidates");
            uncovered.difference_with(&self.covers[c]);
            chosen.push(c);
        }
        chosen
    }

    /// Members pairwise sharing no allowed candidate each need their own
    /// cover element. `None` when some member has no allowed candidate.
    fn packing_bound(&self, uncovered: &FixedBitSet, allowed: &FixedBitSet) -> Option<usize> {
        let mut used = FixedBitSet::with_capacity(self.candidates.len());
        let mut count = 0;
        for f in uncovered.ones() {
            let mut any = false;
            let mut clash = false;
            for &c in &self.member_cands[f] {
                if allowed.contains(c) {
                    any = true;
                    clash |= used.contains(c);
                }
            }
            if !any {
                return None;
            }
            if !clash {
                count += 1;
                for &c in &self.member_cands[f] {
                    if allowed.contains(c) {
                        used.insert(c);
                    }
                }
            }
        }
        Some(count)
    }

    fn branch(
        &self,
        chosen: &mut Vec<usize>,
        uncovered: &FixedBitSet,
        mut allowed: FixedBitSet,
        best: &mut Vec<usize>,
        meter: &mut Meter,
    ) {
        if !meter.tick() {
            return;
        }
        if uncovered.is_clear() {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        match self.packing_bound(uncovered, &allowed) {
            Some(lb) if chosen.len() + lb < best.len() => {}
            _ => return,
        }
        let f = uncovered
            .ones()
            .min_by_key(|&f| (self.member_cands[f].iter().filter(|&&c| allowed.contains(c)).count(), f))
            .unwrap();
        let options: Vec<usize> = self.member_cands[f].iter().copied().filter(|&c| allowed.contains(c)).collect();
        for c in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[c]);
            chosen.push(c);
            self.branch(chosen, &next, allowed.clone(), best, meter);
            chosen.pop();
            allowed.set(c, false);
            if meter.exhausted() {
                return;
            }
        }
    }

    /// Lexicographically least cover using at most `remaining` more
    /// candidates, all above `prev`.
    fn lex_first(
        &self,
        prev: Option<usize>,
        chosen: &mut Vec<usize>,
        uncovered: &FixedBitSet,
        remaining: usize,
        meter: &mut Meter,
    ) -> Found<()> {
        if !meter.tick() {
            return Found::OutOfBudget;
        }
        if uncovered.is_clear() {
            return Found::Yes(());
        }
        if remaining == 0 {
            return Found::No;
        }
        let lo = prev.map_or(0, |p| p + 1);
        // Every later choice is larger, so the member whose largest candidate
        // is smallest caps the next choice.
        let mut cap = usize::MAX;
        for f in uncovered.ones() {
            let top = *self.member_cands[f].last().unwrap();
            if top < lo {
                return Found::No;
            }
            cap = cap.min(top);
        }
        let mut allowed = FixedBitSet::with_capacity(self.candidates.len());
        allowed.insert_range(lo..);
        match self.packing_bound(uncovered, &allowed) {
            Some(lb) if lb <= remaining => {}
            _ => return Found::No,
        }
        for c in lo..=cap {
            if self.covers[c].is_disjoint(uncovered) {
                continue;
            }
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[c]);
            chosen.push(c);
            match self.lex_first(Some(c), chosen, &next, remaining - 1, meter) {
                Found::No => {}
                other => return other,
            }
            chosen.pop();
        }
        Found::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star;

    #[test]
    fn star_has_cover_one() {
        let s = star(7, 3, KSet::of(&[1, 2])).unwrap();
        let c = tau_t(&s, 2, SearchBudget::unlimited()).unwrap().exact().unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.cover.members(), &[KSet::of(&[1, 2])]);
    }

    #[test]
    fn disjoint_matching_needs_one_per_member() {
        let f = Family::new(9, 3, [KSet::of(&[1, 2, 3]), KSet::of(&[4, 5, 6]), KSet::of(&[7, 8, 9])]).unwrap();
        let c = tau_t(&f, 1, SearchBudget::unlimited()).unwrap().exact().unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(c.cover.members(), &[KSet::of(&[1]), KSet::of(&[4]), KSet::of(&[7])]);
        assert!(c.validate(&f));
    }

    #[test]
    fn empty_family_needs_nothing() {
        let f = Family::empty(5, 2).unwrap();
        assert_eq!(tau_t(&f, 1, SearchBudget::unlimited()).unwrap().exact().unwrap().value, 0);
    }
}
