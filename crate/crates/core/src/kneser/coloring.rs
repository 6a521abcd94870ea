use itertools::Itertools;
use serde::Serialize;

use crate::clique::{clique_number, full_set};
use crate::error::{Error, Result};
use crate::graph::PatternGraph;
use crate::search::{Found, Meter, SearchBudget};

/// Chromatic number, `eta`, and a proper colouring attaining both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringAnalysis {
    pub chi: usize,
    pub eta: usize,
    /// `coloring[v]` is the 0-based colour of vertex `v`. Colours are numbered
    /// by first appearance in vertex order, and the smallest class has size
    /// `eta`.
    pub coloring: Vec<usize>,
}

impl ColoringAnalysis {
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.chi];
        for (v, &c) in self.coloring.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

fn pick_vertex(g: &PatternGraph, colors: &[Option<usize>]) -> Option<usize> {
    (0..g.vertex_count()).filter(|&v| colors[v].is_none()).max_by_key(|&v| {
        let saturation = g.neighbors(v).ones().filter_map(|u| colors[u]).unique().count();
        let open_degree = g.neighbors(v).ones().filter(|&u| colors[u].is_none()).count();
        (saturation, open_degree, std::cmp::Reverse(v))
    })
}

fn forbidden(g: &PatternGraph, colors: &[Option<usize>], v: usize, q: usize) -> Vec<bool> {
    let mut out = vec![false; q];
    for u in g.neighbors(v).ones() {
        if let Some(c) = colors[u] {
            if c < q {
                out[c] = true;
            }
        }
    }
    out
}

/// Colour count of a greedy DSATUR colouring.
fn dsatur_bound(g: &PatternGraph) -> usize {
    let n = g.vertex_count();
    let mut colors = vec![None; n];
    let mut used = 0;
    while let Some(v) = pick_vertex(g, &colors) {
        let bad = forbidden(g, &colors, v, used + 1);
        let c = (0..=used).find(|&c| !bad[c]).unwrap();
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

/// A proper colouring with at most `q` colours, by DSATUR-ordered
/// backtracking in which a fresh colour is only ever the next unused one.
pub(crate) fn color_with(g: &PatternGraph, q: usize, meter: &mut Meter) -> Found<Vec<usize>> {
    fn solve(g: &PatternGraph, q: usize, colors: &mut Vec<Option<usize>>, used: usize, meter: &mut Meter) -> Found<()> {
        let Some(v) = pick_vertex(g, colors) else {
            return Found::Yes(());
        };
        if !meter.tick() {
            return Found::OutOfBudget;
        }
        let bad = forbidden(g, colors, v, q);
        for (c, _) in bad.iter().enumerate().take(q.min(used + 1)).filter(|(_, &b)| !b) {
            colors[v] = Some(c);
            match solve(g, q, colors, used.max(c + 1), meter) {
                Found::No => {}
                other => return other,
            }
        }
        colors[v] = None;
        Found::No
    }
    let mut colors = vec![None; g.vertex_count()];
    match solve(g, q, &mut colors, 0, meter) {
        Found::Yes(()) => Found::Yes(colors.into_iter().map(Option::unwrap).collect()),
        Found::No => Found::No,
        Found::OutOfBudget => Found::OutOfBudget,
    }
}

fn exhausted(what: &'static str) -> Error {
    Error::BudgetExhausted(what)
}

pub(crate) fn chromatic_with(g: &PatternGraph, meter: &mut Meter) -> Result<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let (clique, complete) = clique_number(g, &full_set(n), meter);
    if !complete {
        return Err(exhausted("chromatic number"));
    }
    let upper = dsatur_bound(g);
    for q in clique.len()..=upper {
        match color_with(g, q, meter) {
            Found::Yes(c) => return Ok((q, c)),
            Found::No => {}
            Found::OutOfBudget => return Err(exhausted("chromatic number")),
        }
    }
    unreachable!("DSATUR colouring uses {upper} colours")
}

/// Exact chromatic number; 0 for the graph with no vertices.
pub fn chromatic_number(g: &PatternGraph, budget: SearchBudget) -> Result<usize> {
    chromatic_with(g, &mut Meter::new(budget)).map(|(q, _)| q)
}

fn normalized(coloring: &[usize]) -> Vec<usize> {
    let mut relabel: Vec<Option<usize>> = vec![None; coloring.len() + 1];
    let mut next = 0;
    coloring
        .iter()
        .map(|&c| {
            *relabel[c].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

/// Vertex subsets of size `size` that are independent in `g`, in
/// lexicographic order.
fn independent_sets(g: &PatternGraph, size: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..g.vertex_count())
        .combinations(size)
        .filter(move |u| u.iter().tuple_combinations().all(|(&a, &b)| !g.has_edge(a, b)))
}

/// `chi(G)` and `eta(G)`: the least possible size of the smallest class over
/// proper `chi`-colourings with every class nonempty. The graph with no
/// vertices has `chi = eta = 0`.
///
/// The smallest class of an optimal colouring is an independent set `U` with
/// `chi(G - U) = chi - 1`, so candidates are scanned by increasing size.
pub fn eta(g: &PatternGraph, budget: SearchBudget) -> Result<ColoringAnalysis> {
    let mut meter = Meter::new(budget);
    let (chi, _) = chromatic_with(g, &mut meter)?;
    let n = g.vertex_count();
    if chi == 0 {
        return Ok(ColoringAnalysis { chi, eta: 0, coloring: Vec::new() });
    }
    for size in 1..=n / chi {
        for u in independent_sets(g, size) {
            if !meter.tick() {
                return Err(exhausted("eta"));
            }
            let rest: Vec<usize> = (0..n).filter(|v| !u.contains(v)).collect();
            match color_with(&g.induced(&rest), chi - 1, &mut meter) {
                Found::Yes(sub) => {
                    let mut coloring = vec![chi - 1; n];
                    for (i, &v) in rest.iter().enumerate() {
                        coloring[v] = sub[i];
                    }
                    return Ok(ColoringAnalysis { chi, eta: size, coloring: normalized(&coloring) });
                }
                Found::No => {}
                Found::OutOfBudget => return Err(exhausted("eta")),
            }
        }
    }
    unreachable!("the smallest class of a chi-colouring has at most n / chi vertices")
}

/// All inclusion-minimal vertex sets `U` with `chi(G - U) = chi(G) - 1`, in
/// lexicographic order of their sorted vertex lists. Empty for the graph
/// with no vertices.
pub fn special_subgraphs(g: &PatternGraph, budget: SearchBudget) -> Result<Vec<Vec<usize>>> {
    let mut meter = Meter::new(budget);
    let (chi, _) = chromatic_with(g, &mut meter)?;
    let n = g.vertex_count();
    let mut found: Vec<Vec<usize>> = Vec::new();
    if chi == 0 {
        return Ok(found);
    }
    for size in 1..=n {
        let mut this_size = Vec::new();
        for u in (0..n).combinations(size) {
            if !meter.tick() {
                return Err(exhausted("special subgraphs"));
            }
            if found.iter().any(|f| f.iter().all(|v| u.contains(v))) {
                continue;
            }
            match color_with(&g.without(&u), chi - 1, &mut meter) {
                Found::Yes(_) => this_size.push(u),
                Found::No => {}
                Found::OutOfBudget => return Err(exhausted("special subgraphs")),
            }
        }
        found.extend(this_size);
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unlimited() -> SearchBudget {
        SearchBudget::unlimited()
    }

    #[test]
    fn complete_graphs() {
        for m in 1..6 {
            let a = eta(&PatternGraph::complete(m), unlimited()).unwrap();
            assert_eq!((a.chi, a.eta), (m, 1));
            let sp = special_subgraphs(&PatternGraph::complete(m), unlimited()).unwrap();
            assert_eq!(sp, (0..m).map(|v| vec![v]).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bipartite_patterns() {
        let k23 = PatternGraph::complete_multipartite(&[2, 3]);
        let a = eta(&k23, unlimited()).unwrap();
        assert_eq!((a.chi, a.eta), (2, 2));
        assert_eq!(special_subgraphs(&k23, unlimited()).unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        let k14 = PatternGraph::complete_multipartite(&[1, 4]);
        let a = eta(&k14, unlimited()).unwrap();
        assert_eq!((a.chi, a.eta), (2, 1));
        assert_eq!(a.classes().iter().map(Vec::len).min(), Some(1));
    }

    #[test]
    fn degenerate_patterns() {
        let empty = PatternGraph::edgeless(0);
        assert_eq!(chromatic_number(&empty, unlimited()).unwrap(), 0);
        assert!(special_subgraphs(&empty, unlimited()).unwrap().is_empty());
        let e3 = PatternGraph::edgeless(3);
        assert_eq!(chromatic_number(&e3, unlimited()).unwrap(), 1);
        assert_eq!(eta(&e3, unlimited()).unwrap().eta, 3);
        assert_eq!(special_subgraphs(&e3, unlimited()).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn odd_cycle() {
        let c5 = PatternGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let a = eta(&c5, unlimited()).unwrap();
        assert_eq!((a.chi, a.eta), (3, 1));
    }
}
