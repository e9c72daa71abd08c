//! Finite digraphs, tournaments and ordered digraphs.
//!
//! A digraph here is a finite set of vertices `0..n` with an irreflexive,
//! antisymmetric edge relation: between two distinct vertices there is
//! either no edge, an edge `u -> v`, or an edge `v -> u`, never both.
//! Tournaments are the complete digraphs; ordered digraphs carry the
//! linear order given by the numeric order of the vertex indices.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// The relation a pair of distinct vertices `(u, v)` can be in.
///
/// `Forward` is an edge `u -> v`, `Backward` an edge `v -> u` and
/// `NonEdge` no edge at all. Read on pairs with `u < v` these are the
/// three 2-types of a digraph; they serialize as `"N"`, `"E"` and `"E*"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairType {
    NonEdge,
    Forward,
    Backward,
}

impl PairType {
    /// All three pair types, in the order `N`, `E`, `E*`.
    pub const ALL: [PairType; 3] = [PairType::NonEdge, PairType::Forward, PairType::Backward];

    /// The type of the pair read in the opposite coordinate order.
    pub fn swap(self) -> PairType {
        match self {
            PairType::NonEdge => PairType::NonEdge,
            PairType::Forward => PairType::Backward,
            PairType::Backward => PairType::Forward,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PairType::NonEdge => "N",
            PairType::Forward => "E",
            PairType::Backward => "E*",
        }
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for PairType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for PairType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        match raw.as_str() {
            "N" => Ok(PairType::NonEdge),
            "E" => Ok(PairType::Forward),
            "E*" => Ok(PairType::Backward),
            other => Err(D::Error::custom(format!("unknown pair type {other:?}"))),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("edges ({u}, {v}) and ({v}, {u}) are both present")]
    OppositeEdges { u: usize, v: usize },
    #[error("digraph on {n} vertices is not a tournament: vertices {u} and {v} are non-adjacent")]
    NotATournament { n: usize, u: usize, v: usize },
}

/// A finite digraph: vertices `0..n` with an irreflexive antisymmetric
/// edge relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>, // adj[u * n + v] <=> edge u -> v
}

impl Digraph {
    /// The digraph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// A digraph on `n` vertices with the given edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in edges {
            d.add_edge(u, v)?;
        }
        Ok(d)
    }

    /// The transitive tournament `0 -> 1 -> ... -> n-1` (a linear order).
    pub fn linear_order(n: usize) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                d.adj[u * n + v] = true;
            }
        }
        d
    }

    /// The directed triangle `0 -> 1 -> 2 -> 0`.
    pub fn cyclic_triangle() -> Self {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), DigraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(DigraphError::SelfLoop(u));
        }
        if self.adj[v * self.n + u] {
            return Err(DigraphError::OppositeEdges { u: v, v: u });
        }
        self.adj[u * self.n + v] = true;
        Ok(())
    }

    /// Removes any edge between `u` and `v`.
    pub fn clear_pair(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
    }

    /// Sets the relation of the pair `(u, v)`, overwriting any edge.
    pub fn set_pair(&mut self, u: usize, v: usize, t: PairType) {
        self.clear_pair(u, v);
        match t {
            PairType::NonEdge => {}
            PairType::Forward => self.adj[u * self.n + v] = true,
            PairType::Backward => self.adj[v * self.n + u] = true,
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), DigraphError> {
        if v >= self.n {
            Err(DigraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// The relation of the ordered pair `(u, v)`, `u != v`.
    pub fn pair_type(&self, u: usize, v: usize) -> PairType {
        if self.adj[u * self.n + v] {
            PairType::Forward
        } else if self.adj[v * self.n + u] {
            PairType::Backward
        } else {
            PairType::NonEdge
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v] || self.adj[v * self.n + u]
    }

    /// All edges `(u, v)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u * self.n + v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj[v * self.n + u]).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adj[u * self.n + v]).count()
    }

    /// True when every pair of distinct vertices is joined by an edge.
    pub fn is_tournament(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The digraph with every edge direction reversed.
    pub fn reverse(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u * self.n + v] {
                    d.adj[v * self.n + u] = true;
                }
            }
        }
        d
    }

    /// Reverses exactly the edges with one endpoint in `part`.
    ///
    /// Edges inside `part` or inside its complement, and all non-edges,
    /// are left unchanged.
    pub fn switch(&self, part: &BTreeSet<usize>) -> Result<Digraph, DigraphError> {
        for &v in part {
            self.check_vertex(v)?;
        }
        let mut d = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u * self.n + v] && part.contains(&u) != part.contains(&v) {
                    d.adj[u * self.n + v] = false;
                    d.adj[v * self.n + u] = true;
                }
            }
        }
        Ok(d)
    }

    /// The sub-digraph induced on `vertices`, relabelled `0..k` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let k = vertices.len();
        let mut d = Digraph::empty(k);
        for i in 0..k {
            for j in 0..k {
                if i != j && self.adj[vertices[i] * self.n + vertices[j]] {
                    d.adj[i * k + j] = true;
                }
            }
        }
        d
    }

    /// Applies the relabelling `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.adj[u * self.n + v] {
                    d.adj[perm[u] * self.n + perm[v]] = true;
                }
            }
        }
        d
    }

    /// All vertex triples `{u, v, w}` carrying a directed 3-cycle, each
    /// reported once as a sorted triple `u < v < w`.
    pub fn three_cycles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                for w in v + 1..self.n {
                    if self.is_cyclic_triple(u, v, w) {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    fn is_cyclic_triple(&self, u: usize, v: usize, w: usize) -> bool {
        let n = self.n;
        (self.adj[u * n + v] && self.adj[v * n + w] && self.adj[w * n + u])
            || (self.adj[u * n + w] && self.adj[w * n + v] && self.adj[v * n + u])
    }

    /// The number of directed 3-cycles through each vertex.
    pub fn three_cycle_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n];
        for (u, v, w) in self.three_cycles() {
            counts[u] += 1;
            counts[v] += 1;
            counts[w] += 1;
        }
        counts
    }

    /// Sources and sinks: vertices adjacent to all others with only
    /// outgoing, respectively only incoming, edges.
    pub fn sources_and_sinks(&self) -> (Vec<usize>, Vec<usize>) {
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for v in 0..self.n {
            let out = self.out_degree(v);
            let inc = self.in_degree(v);
            if out == self.n - 1 && inc == 0 && self.n > 1 {
                sources.push(v);
            }
            if inc == self.n - 1 && out == 0 && self.n > 1 {
                sinks.push(v);
            }
        }
        (sources, sinks)
    }

    /// The symmetrisation of the edge relation, as sorted vertex pairs.
    pub fn underlying_graph(&self) -> BTreeSet<(usize, usize)> {
        let mut g = BTreeSet::new();
        for (u, v) in self.edges() {
            g.insert((u.min(v), u.max(v)));
        }
        g
    }

    /// Appends a fresh vertex wired to each `(target, type)` pair, where the
    /// type is read on `(new, target)`; the new vertex is non-adjacent to
    /// every other vertex.
    pub fn extend_vertex(&self, wiring: &[(usize, PairType)]) -> Result<Digraph, DigraphError> {
        let n = self.n;
        let mut d = Digraph::empty(n + 1);
        for u in 0..n {
            for v in 0..n {
                if self.adj[u * n + v] {
                    d.adj[u * (n + 1) + v] = true;
                }
            }
        }
        for &(target, t) in wiring {
            if target >= n {
                return Err(DigraphError::VertexOutOfRange { vertex: target, n });
            }
            d.set_pair(n, target, t);
        }
        Ok(d)
    }

    /// Matrix of least directed path lengths; `None` where no path exists.
    /// Diagonal entries are `Some(0)`.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        let mut matrix = Vec::with_capacity(self.n);
        for start in 0..self.n {
            let mut dist = vec![None; self.n];
            dist[start] = Some(0);
            let mut frontier = vec![start];
            let mut depth = 0usize;
            while !frontier.is_empty() {
                depth += 1;
                let mut next = Vec::new();
                for &u in &frontier {
                    for v in 0..self.n {
                        if self.adj[u * self.n + v] && dist[v].is_none() {
                            dist[v] = Some(depth);
                            next.push(v);
                        }
                    }
                }
                frontier = next;
            }
            matrix.push(dist);
        }
        matrix
    }

    /// GraphViz `digraph` rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Digraph {
    /// Compact rendering used by reports: `n=4 [0>1 2>3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}>{v}")?;
            first = false;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DigraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DigraphJson::deserialize(d)?;
        Digraph::new(raw.n, raw.edges).map_err(D::Error::custom)
    }
}

/// A tournament: a digraph with exactly one edge between every pair of
/// distinct vertices.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tournament(Digraph);

impl Tournament {
    pub fn new(d: Digraph) -> Result<Self, DigraphError> {
        for u in 0..d.n() {
            for v in u + 1..d.n() {
                if !d.adjacent(u, v) {
                    return Err(DigraphError::NotATournament { n: d.n(), u, v });
                }
            }
        }
        Ok(Tournament(d))
    }

    pub fn linear_order(n: usize) -> Self {
        Tournament(Digraph::linear_order(n))
    }

    pub fn cyclic_triangle() -> Self {
        Tournament(Digraph::cyclic_triangle())
    }

    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn reverse(&self) -> Tournament {
        Tournament(self.0.reverse())
    }

    /// Reversal of the edges at a single vertex, as a tournament.
    pub fn switch_vertex(&self, v: usize) -> Result<Tournament, DigraphError> {
        let part: BTreeSet<usize> = [v].into_iter().collect();
        Ok(Tournament(self.0.switch(&part)?))
    }

    /// Appends a vertex with the given orientation pattern: bit `i` of
    /// `pattern` set means the new vertex beats old vertex `i`.
    pub fn extend_by_pattern(&self, pattern: u64) -> Tournament {
        let wiring: Vec<(usize, PairType)> = (0..self.n())
            .map(|i| {
                let t = if pattern & (1 << i) != 0 {
                    PairType::Forward
                } else {
                    PairType::Backward
                };
                (i, t)
            })
            .collect();
        Tournament(self.0.extend_vertex(&wiring).unwrap())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Digraph::deserialize(d)?;
        Tournament::new(raw).map_err(D::Error::custom)
    }
}

impl AsRef<Digraph> for Tournament {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

/// A digraph together with the linear order given by its vertex indices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderedDigraph(pub Digraph);

impl OrderedDigraph {
    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }
}

impl AsRef<Digraph> for OrderedDigraph {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{
        brute_isomorphic, random_digraph, random_permutation, source_over_triangle,
    };
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn construction_rejects_loops_and_opposite_edges() {
        assert_eq!(Digraph::new(2, [(0, 0)]), Err(DigraphError::SelfLoop(0)));
        assert_eq!(
            Digraph::new(2, [(0, 1), (1, 0)]),
            Err(DigraphError::OppositeEdges { u: 0, v: 1 })
        );
        assert!(matches!(
            Digraph::new(2, [(0, 5)]),
            Err(DigraphError::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn tournament_requires_completeness() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            Tournament::new(path),
            Err(DigraphError::NotATournament { u: 0, v: 2, .. })
        ));
        assert!(Tournament::new(Digraph::linear_order(4)).is_ok());
    }

    #[test]
    fn reverse_of_triangle_is_triangle() {
        let c3 = Digraph::cyclic_triangle();
        assert!(brute_isomorphic(&c3, &c3.reverse()));
    }

    #[test]
    fn reverse_of_source_over_triangle_is_not_isomorphic() {
        let s4 = source_over_triangle();
        assert!(!brute_isomorphic(s4.digraph(), &s4.digraph().reverse()));
    }

    #[test]
    fn switch_on_empty_or_full_set_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let d = random_digraph(7, &mut rng);
            assert_eq!(d.switch(&BTreeSet::new()).unwrap(), d);
            let all: BTreeSet<usize> = (0..7).collect();
            assert_eq!(d.switch(&all).unwrap(), d);
        }
    }

    #[test]
    fn switching_triangle_at_any_vertex_gives_linear_order() {
        let c3 = Digraph::cyclic_triangle();
        for v in 0..3 {
            let part: BTreeSet<usize> = [v].into_iter().collect();
            let switched = c3.switch(&part).unwrap();
            assert!(switched.is_tournament());
            assert!(switched.three_cycles().is_empty());
            assert!(brute_isomorphic(&switched, &Digraph::linear_order(3)));
        }
    }

    #[test]
    fn switch_rejects_out_of_range_vertices() {
        let d = Digraph::empty(2);
        let part: BTreeSet<usize> = [9].into_iter().collect();
        assert!(matches!(
            d.switch(&part),
            Err(DigraphError::VertexOutOfRange { vertex: 9, n: 2 })
        ));
    }

    #[test]
    fn three_cycles_of_linear_orders_are_empty() {
        for n in 0..9 {
            assert!(Digraph::linear_order(n).three_cycles().is_empty());
        }
        assert_eq!(Digraph::cyclic_triangle().three_cycles(), vec![(0, 1, 2)]);
    }

    #[test]
    fn sources_and_sinks_on_small_cases() {
        let (sources, sinks) = Digraph::linear_order(3).sources_and_sinks();
        assert_eq!((sources, sinks), (vec![0], vec![2]));
        let (sources, sinks) = Digraph::cyclic_triangle().sources_and_sinks();
        assert!(sources.is_empty() && sinks.is_empty());
        // An isolated vertex is adjacent to nothing, so it is neither.
        let (sources, sinks) = Digraph::empty(3).sources_and_sinks();
        assert!(sources.is_empty() && sinks.is_empty());
    }

    #[test]
    fn underlying_graph_of_tournament_is_complete() {
        let t = Digraph::linear_order(5);
        assert_eq!(t.underlying_graph().len(), 10);
        assert!(Digraph::empty(4).underlying_graph().is_empty());
        let triangle: BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 2)].into_iter().collect();
        assert_eq!(Digraph::cyclic_triangle().underlying_graph(), triangle);
    }

    #[test]
    fn distance_matrix_on_small_cases() {
        let l3 = Digraph::linear_order(3);
        let m = l3.distance_matrix();
        assert_eq!(m[0][2], Some(1));
        assert_eq!(m[2][0], None);
        let isolated = Digraph::empty(2);
        assert_eq!(isolated.distance_matrix()[0][1], None);
        let c3 = Digraph::cyclic_triangle();
        assert_eq!(c3.distance_matrix()[1][0], Some(2));
    }

    #[test]
    fn json_round_trip_and_dot() {
        let d = Digraph::new(3, [(0, 1), (2, 1)]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[2,1]]}"#);
        let back: Digraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        let dot = d.to_dot("g");
        assert!(dot.contains("0 -> 1;") && dot.contains("2 -> 1;"));
        // Invalid edges are rejected on load.
        assert!(serde_json::from_str::<Digraph>(r#"{"n":2,"edges":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn extend_vertex_wires_only_targets() {
        let d = Digraph::linear_order(2);
        let ext = d
            .extend_vertex(&[(0, PairType::Forward), (1, PairType::Backward)])
            .unwrap();
        assert!(ext.has_edge(2, 0) && ext.has_edge(1, 2) && ext.has_edge(0, 1));
        assert_eq!(ext.edge_count(), 3);
    }

    fn arb_digraph() -> impl Strategy<Value = Digraph> {
        (1usize..8)
            .prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (Just(n), proptest::collection::vec(0u8..3, pairs))
            })
            .prop_map(|(n, cells)| {
                let mut d = Digraph::empty(n);
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        match cells[idx] {
                            0 => {}
                            1 => d.set_pair(u, v, PairType::Forward),
                            _ => d.set_pair(u, v, PairType::Backward),
                        }
                        idx += 1;
                    }
                }
                d
            })
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(d in arb_digraph()) {
            prop_assert_eq!(d.reverse().reverse(), d);
        }

        #[test]
        fn switch_is_involutive_and_complement_invariant(
            d in arb_digraph(),
            mask in 0usize..256,
        ) {
            let part: BTreeSet<usize> = (0..d.n()).filter(|v| mask & (1 << v) != 0).collect();
            let complement: BTreeSet<usize> = (0..d.n()).filter(|v| !part.contains(v)).collect();
            prop_assert_eq!(d.switch(&part).unwrap().switch(&part).unwrap(), d.clone());
            prop_assert_eq!(d.switch(&part).unwrap(), d.switch(&complement).unwrap());
        }

        #[test]
        fn reverse_and_switch_preserve_the_underlying_graph(
            d in arb_digraph(),
            mask in 0usize..256,
        ) {
            let part: BTreeSet<usize> = (0..d.n()).filter(|v| mask & (1 << v) != 0).collect();
            prop_assert_eq!(d.reverse().underlying_graph(), d.underlying_graph());
            prop_assert_eq!(d.switch(&part).unwrap().underlying_graph(), d.underlying_graph());
        }
    }

    #[test]
    fn reverse_involution_on_random_larger_digraphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let d = random_digraph(12, &mut rng);
            assert_eq!(d.reverse().reverse(), d);
            let perm = random_permutation(12, &mut rng);
            assert_eq!(d.relabel(&perm).reverse(), d.reverse().relabel(&perm));
        }
    }
}
