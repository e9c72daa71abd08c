//! Finite approximations of the homogeneous digraph for a forbidden set.
//!
//! The generic countable digraph omitting a forbidden set is determined
//! by its one-point extension properties. At finite scale we build
//! digraphs that realize, for every vertex subset `S` of size at most
//! `k` and every admissible wiring of a new point to `S`, some vertex
//! with exactly that wiring to `S` (its relations elsewhere are free).
//! Free amalgamation supplies the admissibility argument: a point wired
//! only to `S` creates tournaments inside `S ∪ {new}` and nowhere else.

use crate::digraph::{Digraph, DigraphError, OrderedDigraph, PairType};
use crate::forbidden::{ForbiddenSet, Violation};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// How a new vertex attaches to one target vertex.
///
/// `Out` is an edge from the new vertex to the target, `In` an edge from
/// the target to the new vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Attachment {
    None,
    Out,
    In,
}

impl Attachment {
    pub const ALL: [Attachment; 3] = [Attachment::None, Attachment::Out, Attachment::In];

    /// The pair type of `(new, target)` this attachment denotes.
    pub fn pair_type(self) -> PairType {
        match self {
            Attachment::None => PairType::NonEdge,
            Attachment::Out => PairType::Forward,
            Attachment::In => PairType::Backward,
        }
    }
}

/// A one-point extension demand: wire a new vertex to `targets` with the
/// parallel `attach` relations, non-adjacent to everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub targets: Vec<usize>,
    pub attach: Vec<Attachment>,
    /// Index position for the new vertex; existing vertices at this index
    /// or above shift up. Defaults to the top of the order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slot: Option<usize>,
}

impl ExtensionSpec {
    pub fn new(targets: Vec<usize>, attach: Vec<Attachment>) -> Self {
        assert_eq!(targets.len(), attach.len(), "attach map must be total on targets");
        ExtensionSpec {
            targets,
            attach,
            slot: None,
        }
    }

    fn wiring(&self) -> Vec<(usize, PairType)> {
        self.targets
            .iter()
            .zip(&self.attach)
            .map(|(&t, a)| (t, a.pair_type()))
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum ExtendError {
    #[error("extension refused: it would embed forbidden tournament {}", .0.member_index)]
    Refused(Violation),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// Adds one vertex to `d` per `spec`, provided the result stays in the
/// class of `t`. Only tournaments through the new vertex are re-checked;
/// the new vertex is non-adjacent outside the targets, so any new
/// tournament lies inside `targets ∪ {new}`.
pub fn extend_one_point(
    d: &Digraph,
    spec: &ExtensionSpec,
    t: &ForbiddenSet,
) -> Result<Digraph, ExtendError> {
    let extended = d.extend_vertex(&spec.wiring())?;
    let new = d.n();
    // Tournaments through the new vertex live among its neighbours.
    let mut scope: Vec<usize> = spec
        .targets
        .iter()
        .zip(&spec.attach)
        .filter(|(_, a)| **a != Attachment::None)
        .map(|(&t, _)| t)
        .collect();
    scope.push(new);
    let small = extended.induced(&scope);
    if let Some(violation) = t.violation_using(&small, scope.len() - 1) {
        return Err(ExtendError::Refused(violation));
    }
    match spec.slot {
        None => Ok(extended),
        Some(slot) => {
            let slot = slot.min(new);
            // Insert at `slot`: old indices >= slot shift up by one.
            let perm: Vec<usize> = (0..=new)
                .map(|v| {
                    if v == new {
                        slot
                    } else if v >= slot {
                        v + 1
                    } else {
                        v
                    }
                })
                .collect();
            Ok(extended.relabel(&perm))
        }
    }
}

#[derive(Debug, Error)]
pub enum AmalgamError {
    #[error("glue is not injective on side {0}")]
    NotInjective(&'static str),
    #[error("glued vertex {vertex} out of range on side {side}")]
    OutOfRange { side: &'static str, vertex: usize },
    #[error("glue is not an isomorphism of induced sub-digraphs at pair ({i}, {j})")]
    NotInducedIso { i: usize, j: usize },
}

/// A free amalgam with its embedding bookkeeping.
#[derive(Clone, Debug, Serialize)]
pub struct Amalgam {
    pub digraph: Digraph,
    /// Image of each vertex of the first factor.
    pub left_map: Vec<usize>,
    /// Image of each vertex of the second factor.
    pub right_map: Vec<usize>,
}

/// Glues `a` and `b` along `glue` (pairs of corresponding vertices) with
/// no edges between the two unglued parts.
pub fn free_amalgam(a: &Digraph, b: &Digraph, glue: &[(usize, usize)]) -> Result<Amalgam, AmalgamError> {
    for &(u, v) in glue {
        if u >= a.n() {
            return Err(AmalgamError::OutOfRange { side: "left", vertex: u });
        }
        if v >= b.n() {
            return Err(AmalgamError::OutOfRange { side: "right", vertex: v });
        }
    }
    for (i, &(u1, v1)) in glue.iter().enumerate() {
        for &(u2, v2) in &glue[i + 1..] {
            if u1 == u2 {
                return Err(AmalgamError::NotInjective("left"));
            }
            if v1 == v2 {
                return Err(AmalgamError::NotInjective("right"));
            }
            if a.pair_type(u1, u2) != b.pair_type(v1, v2) {
                return Err(AmalgamError::NotInducedIso { i: u1, j: u2 });
            }
        }
    }
    let left_map: Vec<usize> = (0..a.n()).collect();
    let mut right_map = vec![usize::MAX; b.n()];
    for &(u, v) in glue {
        right_map[v] = u;
    }
    let mut next = a.n();
    for v in 0..b.n() {
        if right_map[v] == usize::MAX {
            right_map[v] = next;
            next += 1;
        }
    }
    let mut digraph = Digraph::empty(next);
    for (u, v) in a.edges() {
        digraph.set_pair(u, v, PairType::Forward);
    }
    for (u, v) in b.edges() {
        digraph.set_pair(right_map[u], right_map[v], PairType::Forward);
    }
    Ok(Amalgam {
        digraph,
        left_map,
        right_map,
    })
}

/// Whether a demand is unrealizable or merely not yet realized.
#[derive(Clone, Debug, Serialize)]
pub enum DemandStatus {
    Missing,
    Forbidden { violation: Violation },
}

#[derive(Clone, Debug, Serialize)]
pub struct UnmetDemand {
    pub targets: Vec<usize>,
    pub attach: Vec<Attachment>,
    pub status: DemandStatus,
}

/// Audit result for the level-`k` extension property.
#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub satisfied: usize,
    pub unmet: Vec<UnmetDemand>,
}

impl ExtensionReport {
    pub fn missing(&self) -> usize {
        self.unmet
            .iter()
            .filter(|u| matches!(u.status, DemandStatus::Missing))
            .count()
    }
}

/// Checks, for every subset `S` of at most `k` vertices and every
/// attachment map over `S`, whether `d` has a vertex outside `S` with
/// exactly those relations to `S`. Unrealizable demands (the wired
/// `S ∪ {new}` embeds a forbidden tournament) are tagged instead.
pub fn verify_extension_property(d: &Digraph, t: &ForbiddenSet, k: usize) -> ExtensionReport {
    let mut satisfied = 0usize;
    let mut unmet = Vec::new();
    for targets in subsets_up_to(d.n(), k) {
        let realized = realized_patterns(d, &targets);
        for attach in attachment_maps(targets.len()) {
            if realized.contains(&attach) {
                satisfied += 1;
                continue;
            }
            match realizability_violation(d, t, &targets, &attach) {
                None => unmet.push(UnmetDemand {
                    targets: targets.clone(),
                    attach,
                    status: DemandStatus::Missing,
                }),
                Some(violation) => unmet.push(UnmetDemand {
                    targets: targets.clone(),
                    attach,
                    status: DemandStatus::Forbidden { violation },
                }),
            }
        }
    }
    ExtensionReport { satisfied, unmet }
}

/// The attachment patterns already realized over `targets` by vertices
/// outside `targets`.
fn realized_patterns(d: &Digraph, targets: &[usize]) -> Vec<Vec<Attachment>> {
    let mut found: Vec<Vec<Attachment>> = Vec::new();
    'vertex: for x in 0..d.n() {
        if targets.contains(&x) {
            continue;
        }
        let pattern: Vec<Attachment> = targets
            .iter()
            .map(|&s| match d.pair_type(x, s) {
                PairType::NonEdge => Attachment::None,
                PairType::Forward => Attachment::Out,
                PairType::Backward => Attachment::In,
            })
            .collect();
        if found.contains(&pattern) {
            continue 'vertex;
        }
        found.push(pattern);
    }
    found
}

/// `None` when the demand is realizable, otherwise the violation inside
/// the wired `S ∪ {new}`.
fn realizability_violation(
    d: &Digraph,
    t: &ForbiddenSet,
    targets: &[usize],
    attach: &[Attachment],
) -> Option<Violation> {
    let small = d.induced(targets);
    let wiring: Vec<(usize, PairType)> = attach
        .iter()
        .enumerate()
        .map(|(i, a)| (i, a.pair_type()))
        .collect();
    let wired = small.extend_vertex(&wiring).expect("indices in range");
    t.violation_using(&wired, targets.len())
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for size in 1..=k {
        let mut current = Vec::with_capacity(size);
        gen_subsets(n, size, 0, &mut current, &mut out);
    }
    out
}

fn gen_subsets(n: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for v in start..n {
        current.push(v);
        gen_subsets(n, size, v + 1, current, out);
        current.pop();
    }
}

fn attachment_maps(len: usize) -> Vec<Vec<Attachment>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                Attachment::ALL.map(|a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("budget exceeded: {vertices} vertices after {rounds} rounds (cap {cap})")]
    BudgetExceeded {
        vertices: usize,
        rounds: usize,
        cap: usize,
    },
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Hard cap on vertices added before giving up.
    pub max_vertices: usize,
    /// Probability of proposing an extra edge from a fresh vertex to each
    /// existing vertex, beyond the wiring its demand requires.
    pub extra_edge_propensity: f64,
    pub max_rounds: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_vertices: 2048,
            extra_edge_propensity: 0.35,
            max_rounds: 64,
        }
    }
}

/// Builds an ordered digraph of size at least `n` in the class of `t`
/// whose level-`k` extension property has no missing demand. The
/// construction is a fair schedule: sweep all demands in canonical
/// order, add a witness for each still-unmet realizable demand, repeat
/// until a clean sweep. Deterministic for a fixed `(t, n, k, seed)`.
pub fn build_approximation(
    t: &ForbiddenSet,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<OrderedDigraph, BuildError> {
    build_approximation_with(t, n, k, seed, &BuildOptions::default())
}

pub fn build_approximation_with(
    t: &ForbiddenSet,
    n: usize,
    k: usize,
    seed: u64,
    options: &BuildOptions,
) -> Result<OrderedDigraph, BuildError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Digraph::empty(0);
    while d.n() < n {
        d = add_random_vertex(&d, &[], t, options.extra_edge_propensity, &mut rng);
    }
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        let mut progressed = false;
        let mut clean = true;
        for targets in subsets_up_to(d.n(), k) {
            for attach in attachment_maps(targets.len()) {
                if realizes(&d, &targets, &attach)
                    || realizability_violation(&d, t, &targets, &attach).is_some()
                {
                    continue;
                }
                clean = false;
                if d.n() >= options.max_vertices {
                    return Err(BuildError::BudgetExceeded {
                        vertices: d.n(),
                        rounds,
                        cap: options.max_vertices,
                    });
                }
                let wiring: Vec<(usize, PairType)> = targets
                    .iter()
                    .zip(&attach)
                    .map(|(&s, a)| (s, a.pair_type()))
                    .collect();
                d = add_random_vertex(&d, &wiring, t, options.extra_edge_propensity, &mut rng);
                progressed = true;
            }
        }
        if clean {
            return Ok(OrderedDigraph(d));
        }
        if !progressed || rounds >= options.max_rounds {
            return Err(BuildError::BudgetExceeded {
                vertices: d.n(),
                rounds,
                cap: options.max_vertices,
            });
        }
    }
}

fn realizes(d: &Digraph, targets: &[usize], attach: &[Attachment]) -> bool {
    'vertex: for x in 0..d.n() {
        if targets.contains(&x) {
            continue;
        }
        for (&s, a) in targets.iter().zip(attach) {
            if d.pair_type(x, s) != a.pair_type() {
                continue 'vertex;
            }
        }
        return true;
    }
    false
}

/// Appends a vertex with the mandatory `wiring` plus random extra edges,
/// each kept only if the result still omits every forbidden tournament.
fn add_random_vertex(
    d: &Digraph,
    wiring: &[(usize, PairType)],
    t: &ForbiddenSet,
    propensity: f64,
    rng: &mut ChaCha8Rng,
) -> Digraph {
    let new = d.n();
    let mut ext = d.extend_vertex(wiring).expect("wiring in range");
    for u in 0..new {
        if wiring.iter().any(|&(s, _)| s == u) {
            continue;
        }
        if !rng.gen_bool(propensity) {
            continue;
        }
        let orientation = if rng.gen_bool(0.5) {
            PairType::Forward
        } else {
            PairType::Backward
        };
        ext.set_pair(new, u, orientation);
        if !admits_through(&ext, t, new) {
            ext.set_pair(new, u, PairType::NonEdge);
        }
    }
    ext
}

/// Membership re-check restricted to tournaments through `vertex`: they
/// live inside its closed neighbourhood.
fn admits_through(d: &Digraph, t: &ForbiddenSet, vertex: usize) -> bool {
    let mut scope: Vec<usize> = (0..d.n()).filter(|&u| u != vertex && d.adjacent(u, vertex)).collect();
    scope.push(vertex);
    let small = d.induced(&scope);
    t.violation_using(&small, scope.len() - 1).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;
    use crate::family::antichain_tournament;
    use crate::testutil::random_digraph;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn triangle_set() -> ForbiddenSet {
        ForbiddenSet::new(vec![Tournament::cyclic_triangle()]).unwrap()
    }

    fn i6_set() -> ForbiddenSet {
        ForbiddenSet::new(vec![antichain_tournament(6).unwrap()]).unwrap()
    }

    #[test]
    fn amalgam_of_two_edges_over_a_point() {
        let a = Digraph::new(2, [(0, 1)]).unwrap(); // x -> y
        let b = Digraph::new(2, [(0, 1)]).unwrap(); // x -> z
        let am = free_amalgam(&a, &b, &[(0, 0)]).unwrap();
        assert_eq!(am.digraph.n(), 3);
        assert!(am.digraph.has_edge(0, 1));
        assert!(am.digraph.has_edge(0, 2));
        assert!(!am.digraph.adjacent(1, 2));
        assert_eq!(am.right_map, vec![0, 2]);
    }

    #[test]
    fn amalgam_validates_the_glue() {
        let edge = Digraph::new(2, [(0, 1)]).unwrap();
        let back = Digraph::new(2, [(1, 0)]).unwrap();
        assert!(matches!(
            free_amalgam(&edge, &back, &[(0, 0), (1, 1)]),
            Err(AmalgamError::NotInducedIso { .. })
        ));
        assert!(matches!(
            free_amalgam(&edge, &edge, &[(0, 0), (0, 1)]),
            Err(AmalgamError::NotInjective("left"))
        ));
        assert!(matches!(
            free_amalgam(&edge, &edge, &[(5, 0)]),
            Err(AmalgamError::OutOfRange { side: "left", .. })
        ));
    }

    #[test]
    fn amalgams_preserve_class_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        let t = i6_set();
        for _ in 0..200 {
            // Common part, then two independent extensions of it.
            let common = loop {
                let c = random_digraph(rng.gen_range(0..4), &mut rng);
                if t.admits(&c) {
                    break c;
                }
            };
            let grow = |rng: &mut ChaCha8Rng| loop {
                let mut d = common.clone();
                for _ in 0..rng.gen_range(1..5) {
                    let wiring: Vec<(usize, PairType)> = (0..d.n())
                        .filter_map(|u| {
                            match rng.gen_range(0..3) {
                                0 => None,
                                1 => Some((u, PairType::Forward)),
                                _ => Some((u, PairType::Backward)),
                            }
                        })
                        .collect();
                    d = d.extend_vertex(&wiring).unwrap();
                }
                if t.admits(&d) {
                    break d;
                }
            };
            let a = grow(&mut rng);
            let b = grow(&mut rng);
            let glue: Vec<(usize, usize)> = (0..common.n()).map(|v| (v, v)).collect();
            let am = free_amalgam(&a, &b, &glue).unwrap();
            assert!(t.admits(&am.digraph), "free amalgam left the class");
        }
    }

    // A triangle amalgamated with a pendant edge over its distinguished
    // vertex: the standard realization shape for independent orbits.
    #[test]
    fn triangle_with_pendant_constant_stays_in_class() {
        let c3 = Digraph::cyclic_triangle();
        let pendant = Digraph::new(2, [(0, 1)]).unwrap(); // a0 -> c'
        let am = free_amalgam(&c3, &pendant, &[(0, 0)]).unwrap();
        assert_eq!(am.digraph.n(), 4);
        assert!(am.digraph.has_edge(0, 3));
        assert!(!am.digraph.adjacent(1, 3));
        assert!(!am.digraph.adjacent(2, 3));
        assert!(i6_set().admits(&am.digraph));
    }

    #[test]
    fn extension_closing_a_triangle_is_refused() {
        let t = triangle_set();
        let l2 = Digraph::linear_order(2); // u -> v
        let spec = ExtensionSpec::new(vec![0, 1], vec![Attachment::Out, Attachment::In]);
        // New w with w -> u and v -> w closes the cycle u -> v -> w -> u.
        match extend_one_point(&l2, &spec, &t) {
            Err(ExtendError::Refused(v)) => assert_eq!(v.member_index, 0),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn isolated_extension_always_succeeds() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let t = triangle_set();
        for _ in 0..20 {
            let d = loop {
                let d = random_digraph(8, &mut rng);
                if t.admits(&d) {
                    break d;
                }
            };
            let spec = ExtensionSpec::new(Vec::new(), Vec::new());
            let ext = extend_one_point(&d, &spec, &t).unwrap();
            assert_eq!(ext.n(), 9);
            assert_eq!(ext.edge_count(), d.edge_count());
        }
    }

    #[test]
    fn incremental_check_agrees_with_full_recheck() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let t = triangle_set();
        let base = build_approximation(&t, 10, 1, 4).unwrap().0;
        for _ in 0..300 {
            let size = rng.gen_range(0..4usize);
            let mut targets = Vec::new();
            while targets.len() < size {
                let v = rng.gen_range(0..base.n());
                if !targets.contains(&v) {
                    targets.push(v);
                }
            }
            targets.sort_unstable();
            let attach: Vec<Attachment> = (0..size)
                .map(|_| Attachment::ALL[rng.gen_range(0..3)])
                .collect();
            let spec = ExtensionSpec::new(targets, attach);
            match extend_one_point(&base, &spec, &t) {
                Ok(ext) => assert!(t.admits(&ext), "incremental check missed a violation"),
                Err(ExtendError::Refused(violation)) => {
                    let wired = base.extend_vertex(&spec.wiring()).unwrap();
                    assert!(!t.admits(&wired), "refusal disagrees with full recheck");
                    let small_n = violation.embedding.0.len();
                    assert_eq!(small_n, 3);
                }
                Err(other) => panic!("unexpected error {other}"),
            }
        }
    }

    #[test]
    fn slot_placement_relabels_the_order() {
        let t = triangle_set();
        let d = Digraph::linear_order(3);
        let mut spec = ExtensionSpec::new(vec![0], vec![Attachment::Out]);
        spec.slot = Some(1);
        let ext = extend_one_point(&d, &spec, &t).unwrap();
        // The new vertex sits at index 1; the old 1, 2 shifted up.
        assert!(ext.has_edge(1, 0));
        assert!(ext.has_edge(2, 3));
        assert!(ext.has_edge(0, 2));
    }

    #[test]
    fn extension_report_on_trivial_cases() {
        let t = triangle_set();
        // Non-empty digraph at level 0: only the empty demand, satisfied.
        let one = Digraph::empty(1);
        let report = verify_extension_property(&one, &t, 0);
        assert_eq!(report.satisfied, 1);
        assert!(report.unmet.is_empty());
        // A single vertex at level 1: three unmet realizable demands.
        let report = verify_extension_property(&one, &t, 1);
        assert_eq!(report.satisfied, 1);
        assert_eq!(report.missing(), 3);
        assert!(report
            .unmet
            .iter()
            .all(|u| matches!(u.status, DemandStatus::Missing)));
    }

    #[test]
    fn unrealizable_demands_are_tagged_forbidden() {
        let t = triangle_set();
        let l2 = Digraph::linear_order(2);
        let report = verify_extension_property(&l2, &t, 2);
        let forbidden: Vec<&UnmetDemand> = report
            .unmet
            .iter()
            .filter(|u| matches!(u.status, DemandStatus::Forbidden { .. }))
            .collect();
        // Exactly one wiring over {0, 1} closes the triangle.
        assert_eq!(forbidden.len(), 1);
        assert_eq!(forbidden[0].targets, vec![0, 1]);
        assert_eq!(forbidden[0].attach, vec![Attachment::Out, Attachment::In]);
    }

    #[test]
    fn single_vertex_build() {
        let t = triangle_set();
        let built = build_approximation(&t, 1, 0, 9).unwrap();
        assert_eq!(built.n(), 1);
    }

    #[test]
    fn builds_are_deterministic_per_seed() {
        let t = triangle_set();
        let a = build_approximation(&t, 8, 1, 42).unwrap();
        let b = build_approximation(&t, 8, 1, 42).unwrap();
        assert_eq!(a, b);
        let c = build_approximation(&t, 8, 1, 43).unwrap();
        assert_ne!(a, c, "different seeds should explore different digraphs");
    }

    #[test]
    fn level_one_builds_audit_clean() {
        for seed in [1, 2] {
            let t = triangle_set();
            let built = build_approximation(&t, 10, 1, seed).unwrap();
            assert!(t.admits(built.digraph()));
            let report = verify_extension_property(built.digraph(), &t, 1);
            assert_eq!(report.missing(), 0);
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let t = triangle_set();
        let options = BuildOptions {
            max_vertices: 3,
            ..BuildOptions::default()
        };
        match build_approximation_with(&t, 10, 2, 1, &options) {
            Err(BuildError::BudgetExceeded { cap: 3, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn reversal_closed_set_admits_reversed_build() {
        let t = triangle_set();
        assert!(t.closed_under_minus());
        let built = build_approximation(&t, 12, 1, 3).unwrap();
        assert!(t.admits(&built.digraph().reverse()));
    }
}
