use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{invalid, Result};

/// A simple undirected graph with bitset adjacency rows.
///
/// Vertices are `0..vertex_count` in the Rust API; the JSON pattern format and
/// the builtin names use 1-based vertices. Conflict graphs of families reuse
/// this type with vertex `i` standing for the `i`-th member in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternGraph {
    adj: Vec<FixedBitSet>,
}

impl PatternGraph {
    pub fn edgeless(vertex_count: usize) -> Self {
        PatternGraph { adj: vec![FixedBitSet::with_capacity(vertex_count); vertex_count] }
    }

    /// Builds a graph from 0-based edges, rejecting loops and out-of-range
    /// endpoints. Repeated edges collapse.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(vertex_count);
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(invalid(format!("edge ({u},{v}) outside 0..{vertex_count}")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Self::edgeless(m);
        for (u, v) in (0..m).tuple_combinations() {
            g.add_edge(u, v);
        }
        g
    }

    /// `K_{a_0, ..., a_{q-1}}`; part `i` occupies a contiguous block of vertices.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let total = parts.iter().sum();
        let mut part_of = Vec::with_capacity(total);
        for (i, &a) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, a));
        }
        let mut g = Self::edgeless(total);
        for (u, v) in (0..total).tuple_combinations() {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// 0-based edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Subgraph induced on `vertices`, relabelled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> PatternGraph {
        let mut g = Self::edgeless(vertices.len());
        for (i, j) in (0..vertices.len()).tuple_combinations() {
            if self.has_edge(vertices[i], vertices[j]) {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Graph with `removed` deleted (remaining vertices keep their relative order).
    pub fn without(&self, removed: &[usize]) -> PatternGraph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn complement(&self) -> PatternGraph {
        let n = self.vertex_count();
        let mut g = Self::edgeless(n);
        for (u, v) in (0..n).tuple_combinations() {
            if !self.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Parts of the graph when it is complete multipartite (non-adjacency is an
    /// equivalence relation), ordered by smallest vertex; `None` otherwise.
    pub fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.vertex_count();
        let mut assigned = vec![false; n];
        let mut parts = Vec::new();
        for v in 0..n {
            if assigned[v] {
                continue;
            }
            let part: Vec<usize> = (0..n).filter(|&u| u == v || !self.has_edge(u, v)).collect();
            for &u in &part {
                if assigned[u] {
                    return None;
                }
                assigned[u] = true;
            }
            parts.push(part);
        }
        for (i, j) in (0..parts.len()).tuple_combinations() {
            for (&u, &v) in parts[i].iter().cartesian_product(&parts[j]) {
                if !self.has_edge(u, v) {
                    return None;
                }
            }
        }
        for part in &parts {
            for (&u, &v) in part.iter().tuple_combinations() {
                if self.has_edge(u, v) {
                    return None;
                }
            }
        }
        Some(parts)
    }

    /// Vertex order by repeatedly removing a minimum-degree vertex (lowest
    /// index on ties), reversed so the densest core comes first.
    pub(crate) fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).unwrap();
            removed[v] = true;
            order.push(v);
            for u in self.adj[v].ones() {
                if !removed[u] {
                    degree[u] -= 1;
                }
            }
        }
        order.reverse();
        order
    }

    /// Copy with vertex `order[i]` renamed to `i`.
    pub(crate) fn permuted(&self, order: &[usize]) -> PatternGraph {
        self.induced(order)
    }
}

impl std::fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PatternGraph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_detection() {
        let k23 = PatternGraph::complete_multipartite(&[2, 3]);
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.multipartite_parts().unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(PatternGraph::complete(3).multipartite_parts().unwrap().len(), 3);
        // A path on 4 vertices is not complete multipartite.
        let p4 = PatternGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.multipartite_parts().is_none());
        assert_eq!(PatternGraph::edgeless(3).multipartite_parts().unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_loops() {
        assert!(PatternGraph::from_edges(2, &[(1, 1)]).is_err());
        assert!(PatternGraph::from_edges(2, &[(0, 2)]).is_err());
    }
}
