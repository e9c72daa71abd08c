//! Exhaustive enumeration of small structures up to isomorphism.
//!
//! Tournaments and digraphs are generated by one-vertex extensions with
//! canonical-code deduplication; undirected graphs by edge subsets. All
//! results come back sorted by canonical code, so enumeration order is
//! deterministic.

use crate::canon::CanonicalCode;
use crate::digraph::{Digraph, PairType, Tournament};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// All tournaments on exactly `n` vertices, one per isomorphism class.
pub fn tournaments(n: usize) -> Vec<Tournament> {
    if n == 0 {
        return Vec::new();
    }
    let mut reps = vec![Tournament::new(Digraph::empty(1)).unwrap()];
    for size in 1..n {
        let mut classes: BTreeMap<CanonicalCode, Tournament> = BTreeMap::new();
        let extended: Vec<(CanonicalCode, Tournament)> = reps
            .par_iter()
            .flat_map_iter(|t| {
                (0u64..1 << size).map(move |pattern| {
                    let ext = t.extend_by_pattern(pattern);
                    (ext.digraph().canonical_code(), ext)
                })
            })
            .collect();
        for (code, t) in extended {
            classes.entry(code).or_insert(t);
        }
        reps = classes.into_values().collect();
    }
    reps
}

/// All digraphs on exactly `n` vertices, one per isomorphism class.
pub fn digraphs(n: usize) -> Vec<Digraph> {
    let mut reps = vec![Digraph::empty(0)];
    for _ in 0..n {
        let mut classes: BTreeMap<CanonicalCode, Digraph> = BTreeMap::new();
        let extended: Vec<(CanonicalCode, Digraph)> = reps
            .par_iter()
            .flat_map_iter(|d| {
                let size = d.n();
                wirings(size).into_iter().map(move |wiring| {
                    let ext = d.extend_vertex(&wiring).unwrap();
                    (ext.canonical_code(), ext)
                })
            })
            .collect();
        for (code, d) in extended {
            classes.entry(code).or_insert(d);
        }
        reps = classes.into_values().collect();
    }
    reps
}

/// Every way of wiring a new vertex to `size` existing ones.
fn wirings(size: usize) -> Vec<Vec<(usize, PairType)>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    build_wirings(size, 0, &mut current, &mut out);
    out
}

fn build_wirings(
    size: usize,
    next: usize,
    current: &mut Vec<(usize, PairType)>,
    out: &mut Vec<Vec<(usize, PairType)>>,
) {
    if next == size {
        out.push(current.clone());
        return;
    }
    for t in PairType::ALL {
        current.push((next, t));
        build_wirings(size, next + 1, current, out);
        current.pop();
    }
}

/// An undirected graph on `0..n`, used only for underlying-graph work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>, // sorted pairs (u < v)
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        Graph { n, edges }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Canonical code by minimum over all relabellings; intended for
    /// small `n` only.
    pub fn canonical_code(&self) -> Vec<u8> {
        assert!(self.n <= 8, "graph canonical code is brute-force, n <= 8");
        let mut best: Option<Vec<u8>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut enc = Vec::with_capacity(1 + self.n.saturating_sub(1) * self.n / 2);
            enc.push(self.n as u8);
            for i in 0..self.n {
                for j in i + 1..self.n {
                    enc.push(u8::from(self.has_edge(p[i], p[j])));
                }
            }
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        });
        best.unwrap_or_else(|| vec![0])
    }

    /// The largest k with a complete subgraph on k vertices.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        for subset in 0u32..1 << self.n {
            let verts: Vec<usize> = (0..self.n).filter(|&v| subset & (1 << v) != 0).collect();
            if verts.len() > best
                && verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.has_edge(u, v)))
            {
                best = verts.len();
            }
        }
        best
    }
}

fn permute<F: FnMut(&[usize])>(perm: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// All undirected graphs on exactly `n` vertices, one per isomorphism
/// class, sorted by canonical code.
pub fn graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges);
        classes.entry(g.canonical_code()).or_insert(g);
    }
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Tournament classes by vertex count: 1, 1, 2, 4, 12, 56, 456, ...
    #[test]
    fn tournament_class_counts() {
        let expected = [1usize, 1, 1, 2, 4, 12, 56, 456];
        for (n, &count) in expected.iter().enumerate().skip(1) {
            assert_eq!(tournaments(n).len(), count, "n = {n}");
        }
    }

    // Oriented-graph classes by vertex count: 1, 1, 2, 7, 42, 582.
    #[test]
    fn digraph_class_counts() {
        let expected = [1usize, 1, 2, 7, 42, 582];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(digraphs(n).len(), count, "n = {n}");
        }
    }

    // Class counts for graphs: 1, 1, 2, 4, 11, 34.
    #[test]
    fn graph_class_counts() {
        let expected = [1usize, 1, 2, 4, 11, 34];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn enumerated_tournaments_are_pairwise_non_isomorphic() {
        let ts = tournaments(5);
        for (i, a) in ts.iter().enumerate() {
            for b in &ts[i + 1..] {
                assert_ne!(
                    a.digraph().canonical_code(),
                    b.digraph().canonical_code()
                );
            }
        }
    }

    #[test]
    fn clique_number_on_small_graphs() {
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]);
        assert_eq!(triangle.clique_number(), 3);
        let path = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.clique_number(), 2);
        assert_eq!(Graph::new(3, vec![]).clique_number(), 1);
    }
}
