//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works from first principles on bitmasks and plain vectors
//! and does not call the searches under test.
#![allow(dead_code)]

use proptest::prelude::*;
use tmatch::{Family, KSet, PatternGraph};

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All k-subsets of [n] as bitmasks (bit e-1 for element e), ascending as integers.
pub fn all_ksets(n: u32, k: u32) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() == k).collect()
}

pub fn kset(bits: u64) -> KSet {
    KSet::from_bits(bits)
}

pub fn family_of(n: u32, k: u32, sets: &[&[u32]]) -> Family {
    Family::new(n, k, sets.iter().map(|s| KSet::of(s))).unwrap()
}

/// The eight triples of the shifting example and their fully compressed form.
pub fn shifting_example() -> (Family, Family) {
    let before: &[&[u32]] =
        &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6], &[1, 3, 4], &[2, 3, 4], &[3, 4, 5], &[3, 4, 6]];
    let after: &[&[u32]] =
        &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6], &[1, 3, 4], &[1, 3, 5], &[1, 3, 6], &[2, 3, 4]];
    (family_of(6, 3, before), family_of(6, 3, after))
}

fn bits(family: &Family) -> Vec<u64> {
    family.iter().map(|s| s.bits()).collect()
}

/// `ok[mask]` is true when the members selected by `mask` pairwise meet in
/// fewer than `t` elements.
fn matching_masks(sets: &[u64], t: u32) -> Vec<bool> {
    let m = sets.len();
    let compat: Vec<u32> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && (sets[i] & sets[j]).count_ones() < t).fold(0, |acc, j| acc | 1 << j))
        .collect();
    let mut ok = vec![false; 1 << m];
    ok[0] = true;
    for mask in 1u32..1 << m {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        ok[mask as usize] = ok[rest as usize] && rest & !compat[low] == 0;
    }
    ok
}

/// Largest t-matching by scanning every subfamily.
pub fn nu_oracle(family: &Family, t: u32) -> usize {
    let ok = matching_masks(&bits(family), t);
    (0..ok.len()).filter(|&m| ok[m]).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

/// Smallest number of t-subsets of [n] covering every member, by breadth-first
/// search over covered-member masks.
pub fn tau_oracle(family: &Family, t: u32) -> usize {
    let sets = bits(family);
    let m = sets.len();
    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let groups: Vec<u32> = all_ksets(family.n(), t)
        .into_iter()
        .map(|c| (0..m).filter(|&i| sets[i] & c == c).fold(0u32, |acc, i| acc | 1 << i))
        .filter(|&g| g != 0)
        .collect();
    let mut seen = vec![false; 1 << m];
    let mut frontier = vec![0u32];
    seen[0] = true;
    let mut depth = 0;
    loop {
        if frontier.contains(&full) {
            return depth;
        }
        let mut next = Vec::new();
        for &state in &frontier {
            for &g in &groups {
                let s = state | g;
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    next.push(s);
                }
            }
        }
        assert!(!next.is_empty(), "cover search stalled");
        frontier = next;
        depth += 1;
    }
}

/// Minimum deletions leaving no t-matching of size `s`, over all deletion sets.
pub fn removal_oracle(family: &Family, s: usize, t: u32) -> usize {
    let sets = bits(family);
    let m = sets.len();
    let ok = matching_masks(&sets, t);
    // has[r]: the members in r contain a t-matching of size s.
    let mut has = vec![false; 1 << m];
    for r in 0usize..1 << m {
        has[r] = (r.count_ones() as usize == s && ok[r]) || (0..m).any(|i| r >> i & 1 == 1 && has[r ^ 1 << i]);
    }
    let full = (1usize << m) - 1;
    (0usize..1 << m).filter(|&d| !has[full ^ d]).map(|d| d.count_ones() as usize).min().expect("deleting all works")
}

/// All t-subsets contained in every member, smallest first. For the empty
/// family every t-subset qualifies.
pub fn common_tsets(family: &Family, t: u32) -> Vec<u64> {
    let common = family.iter().fold(u64::MAX, |acc, s| acc & s.bits());
    all_ksets(family.n(), t).into_iter().filter(|c| c & common == *c).collect()
}

/// Maximum independent set size by include/exclude branching on a vertex of
/// largest degree; vertices without live neighbours are taken outright.
pub fn mis_oracle(adj: &[u64]) -> usize {
    fn go(adj: &[u64], alive: u64) -> usize {
        if alive == 0 {
            return 0;
        }
        let live = |v: usize| (adj[v] & alive).count_ones();
        let mut rest = alive;
        let mut best = None;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if live(v) == 0 {
                return 1 + go(adj, alive & !(1 << v));
            }
            if best.is_none_or(|b| live(v) > live(b)) {
                best = Some(v);
            }
        }
        let v = best.expect("alive is nonempty");
        let without = go(adj, alive & !(1 << v));
        let with = 1 + go(adj, alive & !(1 << v) & !adj[v]);
        without.max(with)
    }
    assert!(adj.len() <= 64);
    let alive = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    go(adj, alive)
}

/// Adjacency masks of the conflict graph on all k-subsets of [n].
pub fn kneser_adjacency(n: u32, k: u32, t: u32) -> Vec<u64> {
    let sets = all_ksets(n, k);
    sets.iter()
        .enumerate()
        .map(|(i, a)| {
            sets.iter()
                .enumerate()
                .filter(|&(j, b)| j != i && (a & b).count_ones() < t)
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

/// Every partition of `0..v` into blocks, as restricted growth strings.
fn partitions(v: usize) -> Vec<Vec<usize>> {
    fn go(v: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == v {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max {
            cur.push(c);
            go(v, cur, if c == max { max + 1 } else { max }, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(v, &mut Vec::new(), 0, &mut out);
    out
}

fn proper(g: &PatternGraph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// `(chi, eta)` by enumerating every partition of the vertex set.
pub fn coloring_oracle(g: &PatternGraph) -> (usize, usize) {
    let v = g.vertex_count();
    if v == 0 {
        return (0, 0);
    }
    let mut best: Option<(usize, usize)> = None;
    for p in partitions(v) {
        if !proper(g, &p) {
            continue;
        }
        let q = p.iter().max().unwrap() + 1;
        let smallest = (0..q).map(|c| p.iter().filter(|&&x| x == c).count()).min().unwrap();
        best = match best {
            Some((bq, be)) if bq < q || (bq == q && be <= smallest) => Some((bq, be)),
            _ => Some((q, smallest)),
        };
    }
    best.unwrap()
}

/// Inclusion-minimal vertex sets whose removal lowers chi by exactly one.
pub fn special_oracle(g: &PatternGraph) -> Vec<Vec<usize>> {
    let v = g.vertex_count();
    let chi = coloring_oracle(g).0;
    let hits: Vec<u32> = (0u32..1 << v)
        .filter(|&mask| {
            let removed: Vec<usize> = (0..v).filter(|&i| mask >> i & 1 == 1).collect();
            coloring_oracle(&g.without(&removed)).0 + 1 == chi
        })
        .collect();
    let mut minimal: Vec<Vec<usize>> = hits
        .iter()
        .filter(|&&m| !hits.iter().any(|&o| o != m && o & m == o))
        .map(|&m| (0..v).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    minimal.sort();
    minimal
}

/// Whether `pattern` maps injectively into `host` preserving edges.
pub fn embeds_oracle(pattern: &PatternGraph, host: &PatternGraph) -> bool {
    fn go(p: &PatternGraph, h: &PatternGraph, image: &mut Vec<usize>) -> bool {
        let u = image.len();
        if u == p.vertex_count() {
            return true;
        }
        for x in 0..h.vertex_count() {
            if image.contains(&x) || !(0..u).all(|w| !p.has_edge(u, w) || h.has_edge(x, image[w])) {
                continue;
            }
            image.push(x);
            if go(p, h, image) {
                return true;
            }
            image.pop();
        }
        false
    }
    go(pattern, host, &mut Vec::new())
}

/// Random families with n <= 8, k <= 4, at most 14 members, and a valid t <= 3.
pub fn small_family() -> impl Strategy<Value = (Family, u32)> {
    (4u32..=8)
        .prop_flat_map(|n| (Just(n), 1u32..=4.min(n)))
        .prop_flat_map(|(n, k)| {
            let pool = all_ksets(n, k);
            let max = pool.len().min(14);
            (Just(n), Just(k), proptest::sample::subsequence(pool, 0..=max), 1u32..=3.min(k))
        })
        .prop_map(|(n, k, sets, t)| (Family::new(n, k, sets.into_iter().map(kset)).unwrap(), t))
}

/// Random pattern graphs on up to `max_vertices` vertices.
pub fn small_graph(max_vertices: usize) -> impl Strategy<Value = PatternGraph> {
    (1..=max_vertices).prop_flat_map(|v| {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len).prop_map(move |e| PatternGraph::from_edges(v, &e).unwrap())
    })
}
