//! An infinite anti-chain of tournaments and the family of forbidden
//! sets built from it.
//!
//! The anti-chain members arise from a linear order by reversing the
//! consecutive edges and the wrap-around edge; counting the directed
//! 3-cycles through each vertex shows no member embeds in another. A
//! blocker tournament (a source, no sink, and at least three vertices
//! on more than five 3-cycles) can never embed into any anti-chain
//! member; forbidding it together with chosen anti-chain members yields
//! pairwise non-isomorphic homogeneous digraphs whose reduct lattices
//! collapse.

use crate::canon::CanonicalCode;
use crate::digraph::{Digraph, Tournament};
use crate::enumerate;
use crate::forbidden::{ClosureViolation, ForbiddenSet, ForbiddenSetError};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("anti-chain tournaments need at least 3 vertices, got {0}")]
    IndexTooSmall(usize),
    #[error("family index {index} must be at least {min} (blocker size {k} plus 2)")]
    IndexBelowBlockerBound { index: usize, min: usize, k: usize },
    #[error("family index set must be non-empty")]
    EmptyIndexSet,
    #[error("no blocker tournament with at most {max_size} vertices (searched {searched} classes)")]
    BlockerNotFound { max_size: usize, searched: usize },
    #[error("blocker search budget of {0} tournament classes exceeded")]
    BudgetExceeded(usize),
    #[error("the two index sets are equal")]
    EqualIndexSets,
    #[error(transparent)]
    ForbiddenSet(#[from] ForbiddenSetError),
}

/// The `n`-vertex anti-chain tournament: a linear order on `1..=n`
/// (internally `0..n`) with the edges `(i, i+1)` and `(1, n)` reversed.
pub fn antichain_tournament(n: usize) -> Result<Tournament, FamilyError> {
    if n < 3 {
        return Err(FamilyError::IndexTooSmall(n));
    }
    let mut d = Digraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if j == i + 1 {
                d.add_edge(j, i).unwrap();
            } else if i == 0 && j == n - 1 {
                d.add_edge(j, i).unwrap();
            } else {
                d.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(Tournament::new(d).expect("construction is complete"))
}

/// Vertices lying on more than `threshold` directed 3-cycles.
pub fn high_cycle_vertices(t: &Tournament, threshold: usize) -> Vec<usize> {
    t.digraph()
        .three_cycle_counts()
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > threshold)
        .map(|(v, _)| v)
        .collect()
}

/// Why a blocker tournament embeds into no anti-chain member: its three
/// high-cycle vertices cannot fit into the at most two such vertices of
/// any member (3-cycles through a vertex inject under embeddings).
#[derive(Clone, Debug, Serialize)]
pub struct BlockerCertificate {
    pub source: usize,
    pub high_cycle_vertices: Vec<usize>,
    pub cycle_counts: Vec<usize>,
    /// Redundant direct checks: the blocker embeds into no anti-chain
    /// tournament up to twice its size.
    pub non_embedding_checked_up_to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Blocker {
    pub tournament: Tournament,
    pub certificate: BlockerCertificate,
}

/// Exhaustive search, by increasing size in canonical order, for a
/// tournament with a source, no sink, and at least three vertices on
/// more than five 3-cycles. `budget` caps the number of isomorphism
/// classes inspected.
pub fn find_blocker(max_size: usize, budget: usize) -> Result<Blocker, FamilyError> {
    let mut searched = 0usize;
    for n in 4..=max_size {
        for t in enumerate::tournaments(n) {
            searched += 1;
            if searched > budget {
                return Err(FamilyError::BudgetExceeded(budget));
            }
            let (sources, sinks) = t.digraph().sources_and_sinks();
            if sources.is_empty() || !sinks.is_empty() {
                continue;
            }
            let high = high_cycle_vertices(&t, 5);
            if high.len() < 3 {
                continue;
            }
            let checked_to = 2 * n;
            for m in 6..=checked_to {
                let member = antichain_tournament(m).expect("m >= 6");
                assert!(
                    t.embeds_into(member.digraph()).is_none(),
                    "high-cycle certificate contradicted by a direct embedding"
                );
            }
            let certificate = BlockerCertificate {
                source: sources[0],
                high_cycle_vertices: high,
                cycle_counts: t.digraph().three_cycle_counts(),
                non_embedding_checked_up_to: checked_to,
            };
            return Ok(Blocker {
                tournament: t,
                certificate,
            });
        }
    }
    Err(FamilyError::BlockerNotFound { max_size, searched })
}

/// A finite index set for the family; every index must be at least the
/// blocker size plus 2 (and at least 6).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyIndex {
    indices: BTreeSet<usize>,
}

impl FamilyIndex {
    pub fn new<I>(indices: I, blocker_size: usize) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = usize>,
    {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(FamilyError::EmptyIndexSet);
        }
        let min = (blocker_size + 2).max(6);
        if let Some(&bad) = indices.iter().find(|&&i| i < min) {
            return Err(FamilyError::IndexBelowBlockerBound {
                index: bad,
                min,
                k: blocker_size,
            });
        }
        Ok(FamilyIndex { indices })
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }
}

/// All one-vertex tournament extensions of `t`, up to isomorphism. For a
/// `k`-vertex tournament these are exactly the `(k+1)`-vertex
/// tournaments embedding it.
pub fn one_point_extensions(t: &Tournament) -> Vec<Tournament> {
    let mut classes: std::collections::BTreeMap<CanonicalCode, Tournament> =
        std::collections::BTreeMap::new();
    for pattern in 0u64..1 << t.n() {
        let ext = t.extend_by_pattern(pattern);
        classes.entry(ext.digraph().canonical_code()).or_insert(ext);
    }
    classes.into_values().collect()
}

/// The forbidden set for an index set `A`: the anti-chain tournaments
/// with indices in `A`, together with every `(k+1)`-vertex tournament
/// embedding the blocker.
pub fn build_family_set(a: &FamilyIndex, blocker: &Tournament) -> Result<ForbiddenSet, FamilyError> {
    let k = blocker.n();
    let min = (k + 2).max(6);
    if let Some(&bad) = a.indices.iter().find(|&&i| i < min) {
        return Err(FamilyError::IndexBelowBlockerBound { index: bad, min, k });
    }
    let mut members: Vec<Tournament> = Vec::new();
    for &n in &a.indices {
        members.push(antichain_tournament(n)?);
    }
    members.extend(one_point_extensions(blocker));
    Ok(ForbiddenSet::new(members)?)
}

/// The audited preconditions for maximality of the automorphism group.
#[derive(Clone, Debug, Serialize)]
pub struct MaximalityReport {
    /// Edge reversal does not exist: a member whose reversal embeds no
    /// member.
    pub minus_blocked: bool,
    pub minus_witness: Option<ClosureViolation>,
    /// The switch does not exist: a member and vertex whose switch embeds
    /// no member.
    pub sw_blocked: bool,
    pub sw_witness: Option<ClosureViolation>,
    /// Every linear order up to the audited bound lies in the class, so
    /// the underlying graph has arbitrarily large cliques.
    pub linear_orders_embed: bool,
    pub linear_orders_audited_to: usize,
    /// Every one-vertex extension of the blocker is a member, so no
    /// vertex can be graph-adjacent to all of a blocker copy.
    pub extension_blocking: bool,
    pub extension_member_indices: Vec<usize>,
}

impl MaximalityReport {
    pub fn all_hold(&self) -> bool {
        self.minus_blocked && self.sw_blocked && self.linear_orders_embed && self.extension_blocking
    }
}

/// Audits the maximality preconditions of a family set.
pub fn verify_maximality(
    family_set: &ForbiddenSet,
    blocker: &Tournament,
    linear_order_audit: usize,
) -> MaximalityReport {
    let minus_witness = family_set.minus_closure_violation();
    let sw_witness = family_set.sw_closure_violation();
    let linear_orders_embed = (1..=linear_order_audit)
        .all(|m| family_set.admits(&Digraph::linear_order(m)));
    // Every orientation pattern of a new vertex over the blocker must be
    // (isomorphic to) a member.
    let member_codes: Vec<&CanonicalCode> = family_set.member_codes().iter().collect();
    let mut extension_member_indices = Vec::new();
    let mut extension_blocking = true;
    for pattern in 0u64..1 << blocker.n() {
        let ext = blocker.extend_by_pattern(pattern);
        let code = ext.digraph().canonical_code();
        match member_codes.iter().position(|c| **c == code) {
            Some(idx) => extension_member_indices.push(idx),
            None => {
                extension_blocking = false;
                break;
            }
        }
    }
    extension_member_indices.sort_unstable();
    extension_member_indices.dedup();
    MaximalityReport {
        minus_blocked: minus_witness.is_some(),
        minus_witness,
        sw_blocked: sw_witness.is_some(),
        sw_witness,
        linear_orders_embed,
        linear_orders_audited_to: linear_order_audit,
        extension_blocking,
        extension_member_indices,
    }
}

/// A finite certificate that two index sets give digraphs with different
/// ages: an anti-chain tournament forbidden in one family but admitted
/// by the other.
#[derive(Clone, Debug, Serialize)]
pub struct DistinctnessCertificate {
    /// The separating anti-chain index.
    pub index: usize,
    /// Which side forbids it: the tournament is a member here.
    pub member_of_first: bool,
    /// The separating tournament itself (1-based labels in reports).
    pub tournament: Tournament,
    /// Index of the tournament in the forbidding family's member list.
    pub member_index: usize,
}

/// Produces and re-verifies a distinctness certificate for two index
/// sets over the same blocker.
pub fn distinguish_family(
    a1: &FamilyIndex,
    a2: &FamilyIndex,
    blocker: &Tournament,
) -> Result<DistinctnessCertificate, FamilyError> {
    if a1.indices == a2.indices {
        return Err(FamilyError::EqualIndexSets);
    }
    let in_first: BTreeSet<usize> = a1.indices.difference(&a2.indices).copied().collect();
    let (index, member_of_first) = match in_first.iter().next() {
        Some(&n) => {
            let least_other = a2.indices.difference(&a1.indices).next();
            match least_other {
                Some(&m) if m < n => (m, false),
                _ => (n, true),
            }
        }
        None => (
            *a2.indices
                .difference(&a1.indices)
                .next()
                .expect("sets differ"),
            false,
        ),
    };
    let tournament = antichain_tournament(index)?;
    let (forbidding, admitting) = if member_of_first {
        (build_family_set(a1, blocker)?, build_family_set(a2, blocker)?)
    } else {
        (build_family_set(a2, blocker)?, build_family_set(a1, blocker)?)
    };
    let code = tournament.digraph().canonical_code();
    let member_index = forbidding
        .member_codes()
        .iter()
        .position(|c| *c == code)
        .expect("the separating tournament is a member of its family set");
    assert!(
        admitting.admits(tournament.digraph()),
        "the separating tournament must be admitted by the other family"
    );
    Ok(DistinctnessCertificate {
        index,
        member_of_first,
        tournament,
        member_index,
    })
}
