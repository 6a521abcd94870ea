//! Non-induced subgraph embedding of a small pattern into a host graph.

use fixedbitset::FixedBitSet;

use crate::clique::full_set;
use crate::graph::PatternGraph;
use crate::search::{Found, Meter};

/// Pattern vertices ordered so that each one has as many earlier neighbours
/// as possible (ties: higher degree, then lower index).
fn matching_order(pattern: &PatternGraph) -> Vec<usize> {
    let m = pattern.vertex_count();
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    for _ in 0..m {
        let v = (0..m)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = pattern.neighbors(v).ones().filter(|&u| placed[u]).count();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

/// Generic backtracking: pattern vertices are placed in [`matching_order`];
/// each takes the smallest unused host vertex adjacent to the images of its
/// placed neighbours. Returns `image[v]` for every pattern vertex `v`.
pub fn embed_generic(pattern: &PatternGraph, host: &PatternGraph, meter: &mut Meter) -> Found<Vec<usize>> {
    fn go(
        pattern: &PatternGraph,
        host: &PatternGraph,
        order: &[usize],
        depth: usize,
        image: &mut [Option<usize>],
        used: &mut FixedBitSet,
        meter: &mut Meter,
    ) -> Found<()> {
        if depth == order.len() {
            return Found::Yes(());
        }
        let v = order[depth];
        let mut cand = full_set(host.vertex_count());
        cand.difference_with(used);
        for u in pattern.neighbors(v).ones() {
            if let Some(w) = image[u] {
                cand.intersect_with(host.neighbors(w));
            }
        }
        for w in cand.ones() {
            if host.degree(w) < pattern.degree(v) {
                continue;
            }
            if !meter.tick() {
                return Found::OutOfBudget;
            }
            image[v] = Some(w);
            used.insert(w);
            let r = go(pattern, host, order, depth + 1, image, used, meter);
            used.set(w, false);
            match r {
                Found::No => {}
                other => return other,
            }
        }
        image[v] = None;
        Found::No
    }

    let order = matching_order(pattern);
    let mut image = vec![None; pattern.vertex_count()];
    let mut used = FixedBitSet::with_capacity(host.vertex_count());
    match go(pattern, host, &order, 0, &mut image, &mut used, meter) {
        Found::Yes(()) => Found::Yes(image.into_iter().map(Option::unwrap).collect()),
        Found::No => Found::No,
        Found::OutOfBudget => Found::OutOfBudget,
    }
}

/// Embedding of a complete multipartite pattern given by its parts: part by
/// part, each part takes an increasing tuple of host vertices from the common
/// neighbourhood of everything chosen for earlier parts. Returns `image[v]`
/// for every pattern vertex `v`.
pub fn embed_multipartite(parts: &[Vec<usize>], host: &PatternGraph, meter: &mut Meter) -> Found<Vec<usize>> {
    struct State<'a> {
        parts: &'a [Vec<usize>],
        host: &'a PatternGraph,
        chosen: Vec<usize>,
        meter: &'a mut Meter,
    }

    impl State<'_> {
        /// `allowed`: vertices adjacent to everything chosen in finished parts.
        /// `next_allowed`: the same, further restricted by the current part.
        fn go(&mut self, part: usize, filled: usize, lo: usize, allowed: &FixedBitSet, next_allowed: &FixedBitSet) -> Found<()> {
            if part == self.parts.len() {
                return Found::Yes(());
            }
            let size = self.parts[part].len();
            if filled == size {
                let next = next_allowed.clone();
                return self.go(part + 1, 0, 0, &next, &next);
            }
            let need = size - filled;
            let cands: Vec<usize> = allowed.ones().filter(|&w| w >= lo).collect();
            if cands.len() < need {
                return Found::No;
            }
            for &w in &cands[..=cands.len() - need] {
                if !self.meter.tick() {
                    return Found::OutOfBudget;
                }
                let mut narrowed = next_allowed.clone();
                narrowed.intersect_with(self.host.neighbors(w));
                // Later parts must also fit; a quick size check on the
                // remaining demand.
                let later: usize = self.parts[part + 1..].iter().map(Vec::len).sum();
                if narrowed.count_ones(..) < later {
                    continue;
                }
                self.chosen.push(w);
                match self.go(part, filled + 1, w + 1, allowed, &narrowed) {
                    Found::No => {}
                    other => return other,
                }
                self.chosen.pop();
            }
            Found::No
        }
    }

    let all = full_set(host.vertex_count());
    let mut state = State { parts, host, chosen: Vec::new(), meter };
    match state.go(0, 0, 0, &all, &all) {
        Found::Yes(()) => {
            let total = parts.iter().map(Vec::len).sum();
            let mut image = vec![0; total];
            for (v, w) in parts.iter().flatten().zip(&state.chosen) {
                image[*v] = *w;
            }
            Found::Yes(image)
        }
        Found::No => Found::No,
        Found::OutOfBudget => Found::OutOfBudget,
    }
}

/// True when `image` is an injective map sending pattern edges to host edges.
pub fn is_embedding(pattern: &PatternGraph, host: &PatternGraph, image: &[usize]) -> bool {
    let mut seen = FixedBitSet::with_capacity(host.vertex_count());
    image.len() == pattern.vertex_count()
        && image.iter().all(|&w| w < host.vertex_count() && !seen.put(w))
        && pattern.edges().iter().all(|&(u, v)| host.has_edge(image[u], image[v]))
}
