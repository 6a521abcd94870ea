//! Exact clique search on bitset graphs.
//!
//! `maximum_clique` is a colour-bounded branch and bound (vertices relabelled
//! by degeneracy order, greedy sequential colouring as the bound).
//! `first_clique` walks cliques in lexicographic order of their sorted vertex
//! lists, so its first hit is the lexicographically least clique of the
//! requested size.

use fixedbitset::FixedBitSet;

use crate::graph::PatternGraph;
use crate::search::{Found, Meter};

/// Vertices of `p` with their greedy colour (1-based), colours non-decreasing.
fn color_sort(g: &PatternGraph, p: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut uncolored = p.clone();
    let mut out = Vec::with_capacity(p.count_ones(..));
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.minimum() {
            q.set(v, false);
            uncolored.set(v, false);
            q.difference_with(g.neighbors(v));
            out.push((v, color));
        }
    }
    out
}

pub(crate) fn color_bound(g: &PatternGraph, p: &FixedBitSet) -> usize {
    color_sort(g, p).last().map_or(0, |&(_, c)| c)
}

pub(crate) fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

struct MaxSearch<'a, A: Fn(&[usize]) -> bool> {
    h: PatternGraph,
    map: Vec<usize>,
    cur: Vec<usize>,
    best_len: usize,
    best: Option<Vec<usize>>,
    accept: &'a A,
    meter: &'a mut Meter,
}

impl<A: Fn(&[usize]) -> bool> MaxSearch<'_, A> {
    fn original(&self, clique: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = clique.iter().map(|&x| self.map[x]).collect();
        v.sort_unstable();
        v
    }

    fn expand(&mut self, mut p: FixedBitSet) {
        if !self.meter.tick() {
            return;
        }
        let colored = color_sort(&self.h, &p);
        for &(v, color) in colored.iter().rev() {
            if self.meter.exhausted() || self.cur.len() + color <= self.best_len {
                return;
            }
            self.cur.push(v);
            if self.cur.len() > self.best_len {
                let candidate = self.original(&self.cur);
                if (self.accept)(&candidate) {
                    self.best_len = candidate.len();
                    self.best = Some(candidate);
                }
            }
            let mut np = p.clone();
            np.intersect_with(self.h.neighbors(v));
            if !np.is_clear() {
                self.expand(np);
            }
            self.cur.pop();
            p.set(v, false);
        }
    }
}

/// Largest clique inside `within` whose sorted vertex list satisfies
/// `accept`, or `None` if no accepted clique beats `floor` vertices.
/// The flag is false when the budget ran out (result is then a lower bound).
pub(crate) fn maximum_clique<A>(
    g: &PatternGraph,
    within: &FixedBitSet,
    floor: usize,
    accept: &A,
    meter: &mut Meter,
) -> (Option<Vec<usize>>, bool)
where
    A: Fn(&[usize]) -> bool,
{
    let order = g.degeneracy_order();
    let h = g.permuted(&order);
    let mut p = FixedBitSet::with_capacity(g.vertex_count());
    for (i, &v) in order.iter().enumerate() {
        if within.contains(v) {
            p.insert(i);
        }
    }
    let mut search = MaxSearch {
        h,
        map: order,
        cur: Vec::new(),
        best_len: floor,
        best: None,
        accept,
        meter,
    };
    if !p.is_clear() {
        search.expand(p);
    }
    let complete = !search.meter.exhausted();
    (search.best, complete)
}

/// Lexicographically least clique of exactly `target` vertices inside
/// `within` whose sorted vertex list satisfies `accept`.
pub(crate) fn first_clique<A>(
    g: &PatternGraph,
    within: &FixedBitSet,
    target: usize,
    accept: &A,
    meter: &mut Meter,
) -> Found<Vec<usize>>
where
    A: Fn(&[usize]) -> bool,
{
    fn dfs<A: Fn(&[usize]) -> bool>(
        g: &PatternGraph,
        cur: &mut Vec<usize>,
        p: &FixedBitSet,
        target: usize,
        accept: &A,
        meter: &mut Meter,
    ) -> Found<()> {
        if cur.len() == target {
            return if accept(cur) { Found::Yes(()) } else { Found::No };
        }
        let need = target - cur.len();
        if p.count_ones(..) < need || (need > 1 && color_bound(g, p) < need) {
            return Found::No;
        }
        for v in p.ones() {
            if !meter.tick() {
                return Found::OutOfBudget;
            }
            let mut np = p.clone();
            np.intersect_with(g.neighbors(v));
            np.set_range(..v + 1, false);
            cur.push(v);
            match dfs(g, cur, &np, target, accept, meter) {
                Found::No => {}
                other => return other,
            }
            cur.pop();
        }
        Found::No
    }

    let mut cur = Vec::with_capacity(target);
    match dfs(g, &mut cur, within, target, accept, meter) {
        Found::Yes(()) => Found::Yes(cur),
        Found::No => Found::No,
        Found::OutOfBudget => Found::OutOfBudget,
    }
}

/// Clique number with the lexicographically least maximum clique.
/// The flag is false when the budget ran out; the clique is then only the
/// best found so far.
pub(crate) fn clique_number(g: &PatternGraph, within: &FixedBitSet, meter: &mut Meter) -> (Vec<usize>, bool) {
    clique_number_with(g, within, &|_: &[usize]| true, meter)
}

pub(crate) fn clique_number_with<A>(
    g: &PatternGraph,
    within: &FixedBitSet,
    accept: &A,
    meter: &mut Meter,
) -> (Vec<usize>, bool)
where
    A: Fn(&[usize]) -> bool,
{
    let (best, complete) = maximum_clique(g, within, 0, accept, meter);
    let Some(best) = best else {
        return (Vec::new(), complete);
    };
    if !complete {
        return (best, false);
    }
    match first_clique(g, within, best.len(), accept, meter) {
        Found::Yes(lex) => (lex, true),
        // An accepted clique of this size exists, so only the budget can stop us.
        _ => (best, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SearchBudget;

    fn meter() -> Meter {
        Meter::new(SearchBudget::unlimited())
    }

    #[test]
    fn complete_and_edgeless() {
        let k5 = PatternGraph::complete(5);
        let (c, ok) = clique_number(&k5, &full_set(5), &mut meter());
        assert!(ok);
        assert_eq!(c, vec![0, 1, 2, 3, 4]);
        let e = PatternGraph::edgeless(4);
        assert_eq!(clique_number(&e, &full_set(4), &mut meter()).0, vec![0]);
        let none = PatternGraph::edgeless(0);
        assert_eq!(clique_number(&none, &full_set(0), &mut meter()).0, Vec::<usize>::new());
    }

    #[test]
    fn lexicographic_witness() {
        // Two triangles {0,3,4} and {1,2,5}; the lexicographically least is {0,3,4}.
        let g = PatternGraph::from_edges(6, &[(1, 2), (2, 5), (1, 5), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(clique_number(&g, &full_set(6), &mut meter()).0, vec![0, 3, 4]);
        let accept = |c: &[usize]| c[0] != 0;
        assert_eq!(clique_number_with(&g, &full_set(6), &accept, &mut meter()).0, vec![1, 2, 5]);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = PatternGraph::complete(30);
        let mut m = Meter::new(SearchBudget::nodes(3));
        let (_, ok) = clique_number(&g, &full_set(30), &mut m);
        assert!(!ok);
    }
}
