//! Assembly of the reduct lattice for a forbidden set.
//!
//! The lattice is determined by three finite computations: closure of
//! the forbidden set under edge reversal, closure under single-vertex
//! switches, and the status of the underlying graph of the homogeneous
//! digraph. The graph status is decided soundly where possible (a
//! non-homogeneity certificate) and otherwise reported as scale-tagged
//! evidence, never as a theorem.

use crate::digraph::{Digraph, PairType};
use crate::enumerate::{self, Graph};
use crate::forbidden::ForbiddenSet;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("scale {0} exceeds the exhaustion budget {1}")]
    ScaleBeyondBudget(usize, usize),
    #[error(
        "inconclusive at scale {scale}: clique bound {clique_bound} but some K{clique_bound}-free graph is unrealizable and no certificate was found"
    )]
    Inconclusive { scale: usize, clique_bound: usize },
}

/// Graphs on at most 8 vertices can be handled by the brute-force graph
/// canonizer; realizability search stays well below that.
const MAX_SCALE: usize = 7;

/// A sound refutation of homogeneity of the underlying graph: two
/// digraphs in the class with isomorphic underlying graphs, and a
/// one-point graph extension (a new vertex adjacent to exactly the
/// marked set) orientable over one but over no orientation above the
/// other.
#[derive(Clone, Debug, Serialize)]
pub struct NotHomogeneousCert {
    pub open: Digraph,
    pub blocked: Digraph,
    /// Graph isomorphism: vertex `i` of `open` corresponds to
    /// `graph_iso[i]` of `blocked`.
    pub graph_iso: Vec<usize>,
    /// The extension's neighbourhood, as vertices of `open`.
    pub attach_open: Vec<usize>,
    /// One orientation realizing the extension over `open`.
    pub witness_extension: Digraph,
}

impl NotHomogeneousCert {
    /// Re-verifies every part of the certificate.
    pub fn verify(&self, t: &ForbiddenSet) -> Result<(), String> {
        if !t.admits(&self.open) || !t.admits(&self.blocked) {
            return Err("certificate digraphs are not in the class".into());
        }
        let n = self.open.n();
        if self.blocked.n() != n || self.graph_iso.len() != n {
            return Err("certificate size mismatch".into());
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.open.adjacent(u, v)
                    != self.blocked.adjacent(self.graph_iso[u], self.graph_iso[v])
                {
                    return Err("recorded map is not a graph isomorphism".into());
                }
            }
        }
        // The recorded orientation realizes the extension over `open`.
        if self.witness_extension.n() != n + 1 {
            return Err("witness extension has the wrong size".into());
        }
        for u in 0..n {
            for v in 0..n {
                if self.witness_extension.has_edge(u, v) != self.open.has_edge(u, v) {
                    return Err("witness extension does not extend the open digraph".into());
                }
            }
        }
        for u in 0..n {
            let should = self.attach_open.contains(&u);
            if self.witness_extension.adjacent(u, n) != should {
                return Err("witness extension has the wrong neighbourhood".into());
            }
        }
        if !t.admits(&self.witness_extension) {
            return Err("witness extension is not in the class".into());
        }
        // No orientation realizes it over `blocked`.
        let attach_blocked: Vec<usize> =
            self.attach_open.iter().map(|&u| self.graph_iso[u]).collect();
        if extension_orientable(&self.blocked, &attach_blocked, t) {
            return Err("the extension is orientable over the blocked digraph".into());
        }
        Ok(())
    }
}

/// Whether some orientation of a new vertex adjacent to exactly `attach`
/// keeps the digraph in the class.
fn extension_orientable(d: &Digraph, attach: &[usize], t: &ForbiddenSet) -> bool {
    let k = attach.len();
    (0u64..1 << k).any(|mask| {
        let wiring: Vec<(usize, PairType)> = attach
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                let ty = if mask & (1 << i) != 0 {
                    PairType::Forward
                } else {
                    PairType::Backward
                };
                (u, ty)
            })
            .collect();
        let ext = d.extend_vertex(&wiring).expect("attach in range");
        t.admits(&ext)
    })
}

/// The status of the underlying graph at a finite audit scale.
#[derive(Clone, Debug, Serialize)]
pub enum GraphStatus {
    /// Every graph up to the scale is realizable; no refutation found.
    RandomGraphEvidence { scale: usize },
    /// Cliques of the bound are unrealizable, all smaller-clique-free
    /// graphs up to the scale are realizable; no refutation found.
    HensonGraphEvidence { clique_bound: usize, scale: usize },
    /// A verified refutation of homogeneity.
    NotHomogeneous {
        scale: usize,
        certificate: NotHomogeneousCert,
    },
}

/// All graphs on at most `m` vertices realizable as the underlying graph
/// of a class member, keyed and sorted by graph canonical code.
pub fn realizable_underlying_graphs(
    t: &ForbiddenSet,
    m: usize,
) -> Result<Vec<Graph>, ClassifyError> {
    if m > MAX_SCALE {
        return Err(ClassifyError::ScaleBeyondBudget(m, MAX_SCALE));
    }
    let mut out = Vec::new();
    for n in 0..=m {
        let mut found: Vec<Graph> = enumerate::graphs(n)
            .into_par_iter()
            .filter(|g| orientable(g, t))
            .collect();
        out.append(&mut found);
    }
    Ok(out)
}

/// Whether some antisymmetric orientation of `g` lies in the class.
fn orientable(g: &Graph, t: &ForbiddenSet) -> bool {
    let edges = &g.edges;
    (0u64..1 << edges.len()).any(|mask| {
        let oriented: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask & (1 << i) != 0 { (u, v) } else { (v, u) })
            .collect();
        let d = Digraph::new(g.n, oriented).expect("orientation is antisymmetric");
        t.admits(&d)
    })
}

/// Whether `K_n` is realizable: some `n`-vertex tournament is in the
/// class.
fn clique_realizable(t: &ForbiddenSet, n: usize) -> bool {
    enumerate::tournaments(n)
        .iter()
        .any(|tour| t.admits(tour.digraph()))
}

/// Classifies the underlying graph at audit scale `k`: a sound
/// non-homogeneity certificate when one exists at the scale, otherwise
/// scale-tagged evidence for the random graph or a clique-free
/// homogeneous graph.
pub fn classify_underlying_graph(t: &ForbiddenSet, k: usize) -> Result<GraphStatus, ClassifyError> {
    if let Some(certificate) = not_homogeneous_certificate(t, k) {
        return Ok(GraphStatus::NotHomogeneous {
            scale: k,
            certificate,
        });
    }
    if k > MAX_SCALE {
        return Err(ClassifyError::ScaleBeyondBudget(k, MAX_SCALE));
    }
    let realizable = realizable_underlying_graphs(t, k)?;
    let all_count: usize = (0..=k).map(|n| enumerate::graphs(n).len()).sum();
    if realizable.len() == all_count {
        return Ok(GraphStatus::RandomGraphEvidence { scale: k });
    }
    // Least unrealizable clique size.
    let clique_bound = (2..=k)
        .find(|&n| !clique_realizable(t, n))
        .expect("some graph is unrealizable, so some clique must be");
    // Every graph below the clique bound must be realizable for the
    // evidence to be coherent.
    let coherent = (0..=k).all(|n| {
        enumerate::graphs(n)
            .iter()
            .filter(|g| g.clique_number() < clique_bound)
            .all(|g| orientable(g, t))
    });
    if coherent {
        Ok(GraphStatus::HensonGraphEvidence {
            clique_bound,
            scale: k,
        })
    } else {
        Err(ClassifyError::Inconclusive {
            scale: k,
            clique_bound,
        })
    }
}

/// Searches for a non-homogeneity certificate at scale `k`.
///
/// Tier 1 looks at complete underlying graphs: tournaments of each size
/// up to `k`, splitting on whether the everywhere-adjacent one-point
/// extension is orientable. Tier 2 exhausts all digraph pairs with
/// isomorphic underlying graphs and all attachment subsets, up to size
/// `min(k, 4)`.
fn not_homogeneous_certificate(t: &ForbiddenSet, k: usize) -> Option<NotHomogeneousCert> {
    // Tier 1: complete graphs, largest-member-first candidate order.
    for n in (3..=k.min(8)).rev() {
        let mut open: Option<Digraph> = None;
        let mut blocked: Option<Digraph> = None;
        for cand in tournament_candidates(t, n) {
            if !t.admits(&cand) {
                continue;
            }
            let attach: Vec<usize> = (0..n).collect();
            if extension_orientable(&cand, &attach, t) {
                open.get_or_insert(cand);
            } else {
                blocked.get_or_insert(cand);
            }
            if let (Some(open), Some(blocked)) = (&open, &blocked) {
                let cert = build_certificate(open, blocked, (0..n).collect(), t)?;
                return Some(cert);
            }
        }
    }
    // Tier 2: all pairs at small scale.
    for n in 2..=k.min(4) {
        let reps: Vec<Digraph> = enumerate::digraphs(n)
            .into_iter()
            .filter(|d| t.admits(d))
            .collect();
        for d1 in &reps {
            for d2 in &reps {
                let Some(iso) = graph_isomorphism(d1, d2) else {
                    continue;
                };
                for mask in 0u32..1 << n {
                    let attach: Vec<usize> =
                        (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                    let over_d1 = extension_orientable(d1, &attach, t);
                    let mapped: Vec<usize> = attach.iter().map(|&v| iso[v]).collect();
                    let over_d2 = extension_orientable(d2, &mapped, t);
                    if over_d1 && !over_d2 {
                        if let Some(cert) = build_certificate_with(d1, d2, iso.clone(), attach, t)
                        {
                            return Some(cert);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Tournaments worth trying first: the linear order, members' one-point
/// restrictions, then the full enumeration.
fn tournament_candidates(t: &ForbiddenSet, n: usize) -> Vec<Digraph> {
    let mut out = vec![Digraph::linear_order(n)];
    for m in t.members() {
        if m.n() == n + 1 {
            for drop in 0..m.n() {
                let keep: Vec<usize> = (0..m.n()).filter(|&v| v != drop).collect();
                out.push(m.digraph().induced(&keep));
            }
        }
        if m.n() == n {
            out.push(m.digraph().clone());
        }
    }
    if n <= 7 {
        out.extend(enumerate::tournaments(n).into_iter().map(|t| t.into_digraph()));
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|d| seen.insert(d.canonical_code()));
    out
}

fn build_certificate(
    open: &Digraph,
    blocked: &Digraph,
    iso: Vec<usize>,
    t: &ForbiddenSet,
) -> Option<NotHomogeneousCert> {
    let attach: Vec<usize> = (0..open.n()).collect();
    build_certificate_with(open, blocked, iso, attach, t)
}

fn build_certificate_with(
    open: &Digraph,
    blocked: &Digraph,
    iso: Vec<usize>,
    attach: Vec<usize>,
    t: &ForbiddenSet,
) -> Option<NotHomogeneousCert> {
    // Record one realizing orientation over the open digraph.
    let k2 = attach.len();
    let witness = (0u64..1 << k2).find_map(|mask| {
        let wiring: Vec<(usize, PairType)> = attach
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                let ty = if mask & (1 << i) != 0 {
                    PairType::Forward
                } else {
                    PairType::Backward
                };
                (u, ty)
            })
            .collect();
        let ext = open.extend_vertex(&wiring).expect("attach in range");
        t.admits(&ext).then_some(ext)
    })?;
    let cert = NotHomogeneousCert {
        open: open.clone(),
        blocked: blocked.clone(),
        graph_iso: iso,
        attach_open: attach,
        witness_extension: witness,
    };
    cert.verify(t).ok()?;
    Some(cert)
}

/// A graph isomorphism between underlying graphs, by brute force; sizes
/// here are at most 4.
fn graph_isomorphism(d1: &Digraph, d2: &Digraph) -> Option<Vec<usize>> {
    let n = d1.n();
    if d2.n() != n {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    fn search(
        perm: &mut Vec<usize>,
        k: usize,
        d1: &Digraph,
        d2: &Digraph,
    ) -> Option<Vec<usize>> {
        let n = perm.len();
        if k == n {
            return Some(perm.clone());
        }
        for i in k..n {
            perm.swap(k, i);
            let ok = (0..k).all(|j| d1.adjacent(j, k) == d2.adjacent(perm[j], perm[k]));
            if ok {
                if let Some(found) = search(perm, k + 1, d1, d2) {
                    return Some(found);
                }
            }
            perm.swap(k, i);
        }
        None
    }
    search(&mut perm, 0, d1, d2)
}

/// Node labels of the reduct lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum LatticeNode {
    AutDE,
    Minus,
    Sw,
    MinusSw,
    AutGraph,
    SwGamma,
    MinusGamma,
    SwMinusGamma,
    SymD,
}

impl LatticeNode {
    pub fn label(&self) -> &'static str {
        match self {
            LatticeNode::AutDE => "Aut(D,E)",
            LatticeNode::Minus => "<->",
            LatticeNode::Sw => "<sw>",
            LatticeNode::MinusSw => "<-,sw>",
            LatticeNode::AutGraph => "Aut(D,graph)",
            LatticeNode::SwGamma => "<sw_G>",
            LatticeNode::MinusGamma => "<-_G>",
            LatticeNode::SwMinusGamma => "<sw_G,-_G>",
            LatticeNode::SymD => "Sym(D)",
        }
    }

    const ALL: [LatticeNode; 9] = [
        LatticeNode::AutDE,
        LatticeNode::Minus,
        LatticeNode::Sw,
        LatticeNode::MinusSw,
        LatticeNode::AutGraph,
        LatticeNode::SwGamma,
        LatticeNode::MinusGamma,
        LatticeNode::SwMinusGamma,
        LatticeNode::SymD,
    ];

    /// Strict containment in the full template lattice.
    fn below(self, other: LatticeNode) -> bool {
        use LatticeNode::*;
        let rank = |n: LatticeNode| -> u8 {
            match n {
                AutDE => 0,
                Minus | Sw => 1,
                MinusSw => 2,
                AutGraph => 3,
                SwGamma | MinusGamma => 4,
                SwMinusGamma => 5,
                SymD => 6,
            }
        };
        if self == other {
            return false;
        }
        // Incomparable sibling pairs.
        if matches!((self, other), (Minus, Sw) | (Sw, Minus)) {
            return false;
        }
        if matches!(
            (self, other),
            (SwGamma, MinusGamma) | (MinusGamma, SwGamma)
        ) {
            return false;
        }
        rank(self) < rank(other)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeFlags {
    pub minus_exists: bool,
    pub sw_exists: bool,
}

/// The reduct lattice computed for a forbidden set: the sublattice of
/// the nine-node template determined by the closure flags and the graph
/// status.
#[derive(Clone, Debug, Serialize)]
pub struct ReductLattice {
    pub nodes: Vec<LatticeNode>,
    pub hasse_edges: Vec<(LatticeNode, LatticeNode)>,
    pub flags: LatticeFlags,
    pub graph_status: GraphStatus,
    pub scale: usize,
    /// When the graph is certified non-homogeneous, the graph
    /// automorphism group coincides with this node and is maximal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_node: Option<LatticeNode>,
}

/// Assembles the lattice from the closure checks and the graph status.
pub fn classify_reducts(t: &ForbiddenSet, k: usize) -> Result<ReductLattice, ClassifyError> {
    let flags = LatticeFlags {
        minus_exists: t.closed_under_minus(),
        sw_exists: t.closed_under_sw(),
    };
    let graph_status = classify_underlying_graph(t, k)?;
    let mut nodes = vec![LatticeNode::AutDE];
    if flags.minus_exists {
        nodes.push(LatticeNode::Minus);
    }
    if flags.sw_exists {
        nodes.push(LatticeNode::Sw);
    }
    if flags.minus_exists && flags.sw_exists {
        nodes.push(LatticeNode::MinusSw);
    }
    let maximal_node = match &graph_status {
        GraphStatus::RandomGraphEvidence { .. } => {
            nodes.extend([
                LatticeNode::AutGraph,
                LatticeNode::SwGamma,
                LatticeNode::MinusGamma,
                LatticeNode::SwMinusGamma,
            ]);
            None
        }
        GraphStatus::HensonGraphEvidence { .. } => {
            nodes.push(LatticeNode::AutGraph);
            None
        }
        GraphStatus::NotHomogeneous { .. } => {
            // The graph group collapses onto the top of the lower part.
            Some(*nodes.last().expect("lower part is non-empty"))
        }
    };
    nodes.push(LatticeNode::SymD);
    nodes.sort();
    let hasse_edges = hasse(&nodes);
    Ok(ReductLattice {
        nodes,
        hasse_edges,
        flags,
        graph_status,
        scale: k,
        maximal_node,
    })
}

/// Transitive reduction of the template order restricted to `nodes`.
fn hasse(nodes: &[LatticeNode]) -> Vec<(LatticeNode, LatticeNode)> {
    let mut edges = Vec::new();
    for &a in nodes {
        for &b in nodes {
            if !a.below(b) {
                continue;
            }
            let covered = nodes
                .iter()
                .any(|&c| a.below(c) && c.below(b));
            if !covered {
                edges.push((a, b));
            }
        }
    }
    edges
}

impl ReductLattice {
    /// GraphViz rendering of the Hasse diagram, bottom to top.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph reducts {\n  rankdir=BT;\n");
        for node in &self.nodes {
            let extra = if Some(*node) == self.maximal_node {
                ", peripheries=2"
            } else {
                ""
            };
            s.push_str(&format!(
                "  \"{:?}\" [label=\"{}\"{extra}];\n",
                node,
                node.label()
            ));
        }
        for (a, b) in &self.hasse_edges {
            s.push_str(&format!("  \"{a:?}\" -> \"{b:?}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Sanity check used by tests: every node list is one of the lattice's
/// legal configurations.
pub fn lattice_nodes_sorted(l: &ReductLattice) -> Vec<LatticeNode> {
    let mut nodes = l.nodes.clone();
    nodes.sort();
    nodes.dedup();
    let _ = LatticeNode::ALL;
    nodes
}
