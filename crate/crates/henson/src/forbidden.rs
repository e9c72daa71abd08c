//! Forbidden-tournament sets and the hereditary classes they define.
//!
//! A set of finite tournaments, each on at least 3 vertices, determines
//! the class of finite digraphs embedding none of them. This module
//! validates such sets, decides class membership with witnesses, and
//! checks the closure conditions governing the existence of the edge
//! reversal `-` and the vertex switch `sw` on the corresponding
//! homogeneous digraph.

use crate::canon::CanonicalCode;
use crate::digraph::{Digraph, DigraphError, Tournament};
use crate::embed::Embedding;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ForbiddenSetError {
    #[error("forbidden set must be non-empty")]
    Empty,
    #[error("member {index} has {size} vertices; members need at least 3")]
    MemberTooSmall { index: usize, size: usize },
    #[error("member {index} is not a tournament: {source}")]
    MemberNotTournament {
        index: usize,
        source: DigraphError,
    },
}

/// A violation witness: which member embeds where.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub member_index: usize,
    pub member: Tournament,
    pub embedding: Embedding,
}

/// A closure-check counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureViolation {
    pub member_index: usize,
    /// Vertex switched, for the switch check; absent for reversal.
    pub vertex: Option<usize>,
    /// The transformed member, which embeds no member of the set.
    pub transformed: Tournament,
}

/// A validated set of forbidden tournaments.
///
/// Members are deduplicated up to isomorphism and stored sorted by
/// (vertex count, canonical code), so witnesses and the minimal member
/// are deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    members: Vec<Tournament>,
    codes: Vec<CanonicalCode>,
}

impl ForbiddenSet {
    pub fn new<I>(members: I) -> Result<Self, ForbiddenSetError>
    where
        I: IntoIterator<Item = Tournament>,
    {
        let mut keyed: Vec<(usize, CanonicalCode, Tournament)> = Vec::new();
        for (index, t) in members.into_iter().enumerate() {
            if t.n() < 3 {
                return Err(ForbiddenSetError::MemberTooSmall {
                    index,
                    size: t.n(),
                });
            }
            let code = t.digraph().canonical_code();
            if !keyed.iter().any(|(_, c, _)| *c == code) {
                keyed.push((t.n(), code, t));
            }
        }
        if keyed.is_empty() {
            return Err(ForbiddenSetError::Empty);
        }
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let codes = keyed.iter().map(|(_, c, _)| c.clone()).collect();
        let members = keyed.into_iter().map(|(_, _, t)| t).collect();
        Ok(ForbiddenSet { members, codes })
    }

    /// Builds a set from raw digraphs, validating tournament completeness.
    pub fn from_digraphs<I>(digraphs: I) -> Result<Self, ForbiddenSetError>
    where
        I: IntoIterator<Item = Digraph>,
    {
        let mut members = Vec::new();
        for (index, d) in digraphs.into_iter().enumerate() {
            let t = Tournament::new(d)
                .map_err(|source| ForbiddenSetError::MemberNotTournament { index, source })?;
            if t.n() < 3 {
                return Err(ForbiddenSetError::MemberTooSmall {
                    index,
                    size: t.n(),
                });
            }
            members.push(t);
        }
        ForbiddenSet::new(members)
    }

    pub fn members(&self) -> &[Tournament] {
        &self.members
    }

    pub fn member_codes(&self) -> &[CanonicalCode] {
        &self.codes
    }

    /// The member of least vertex count, ties broken by least canonical
    /// code.
    pub fn minimal_member(&self) -> &Tournament {
        &self.members[0]
    }

    /// The first member embedding into `d`, with its embedding, if any.
    pub fn violation(&self, d: &Digraph) -> Option<Violation> {
        for (member_index, member) in self.members.iter().enumerate() {
            if member.n() > d.n() {
                continue;
            }
            if let Some(embedding) = member.embeds_into(d) {
                return Some(Violation {
                    member_index,
                    member: member.clone(),
                    embedding,
                });
            }
        }
        None
    }

    /// True when `d` embeds no member, i.e. `d` belongs to the class.
    pub fn admits(&self, d: &Digraph) -> bool {
        self.violation(d).is_none()
    }

    /// Like [`ForbiddenSet::violation`], but only embeddings whose image
    /// contains `vertex` are considered.
    pub fn violation_using(&self, d: &Digraph, vertex: usize) -> Option<Violation> {
        for (member_index, member) in self.members.iter().enumerate() {
            if member.n() > d.n() {
                continue;
            }
            if let Some(embedding) = member.embeds_into_using(d, vertex) {
                return Some(Violation {
                    member_index,
                    member: member.clone(),
                    embedding,
                });
            }
        }
        None
    }

    /// True when no member embeds into another member; on failure,
    /// returns the violating ordered pair of member indices.
    pub fn antichain_violation(&self) -> Option<(usize, usize, Embedding)> {
        for i in 0..self.members.len() {
            for j in 0..self.members.len() {
                if i == j {
                    continue;
                }
                if let Some(e) = self.members[i].embeds_into(self.members[j].digraph()) {
                    return Some((i, j, e));
                }
            }
        }
        None
    }

    pub fn is_antichain(&self) -> bool {
        self.antichain_violation().is_none()
    }

    /// Closure under edge reversal, at the level of the hereditary class:
    /// the reversal of every member must still embed some member.
    pub fn minus_closure_violation(&self) -> Option<ClosureViolation> {
        for (member_index, member) in self.members.iter().enumerate() {
            let reversed = member.reverse();
            if self.admits(reversed.digraph()) {
                return Some(ClosureViolation {
                    member_index,
                    vertex: None,
                    transformed: reversed,
                });
            }
        }
        None
    }

    pub fn closed_under_minus(&self) -> bool {
        self.minus_closure_violation().is_none()
    }

    /// Closure under single-vertex switches: switching any member at any
    /// vertex must produce a tournament that still embeds some member.
    pub fn sw_closure_violation(&self) -> Option<ClosureViolation> {
        for (member_index, member) in self.members.iter().enumerate() {
            for v in 0..member.n() {
                let switched = member.switch_vertex(v).expect("vertex in range");
                if self.admits(switched.digraph()) {
                    return Some(ClosureViolation {
                        member_index,
                        vertex: Some(v),
                        transformed: switched,
                    });
                }
            }
        }
        None
    }

    pub fn closed_under_sw(&self) -> bool {
        self.sw_closure_violation().is_none()
    }
}

/// JSON form: `{"tournaments": [{"n": …, "edges": […]}, …]}`.
#[derive(Serialize, Deserialize)]
pub struct ForbiddenSetJson {
    pub tournaments: Vec<Digraph>,
}

impl ForbiddenSet {
    pub fn to_json(&self) -> ForbiddenSetJson {
        ForbiddenSetJson {
            tournaments: self.members.iter().map(|t| t.digraph().clone()).collect(),
        }
    }

    pub fn from_json(json: ForbiddenSetJson) -> Result<Self, ForbiddenSetError> {
        ForbiddenSet::from_digraphs(json.tournaments)
    }
}

impl Serialize for ForbiddenSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ForbiddenSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ForbiddenSetJson::deserialize(d)?;
        ForbiddenSet::from_json(json).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::antichain_tournament;
    use crate::testutil::{random_digraph, random_permutation, random_tournament, source_over_triangle};
    use rand::seq::SliceRandom;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn set_of(members: &[Tournament]) -> ForbiddenSet {
        ForbiddenSet::new(members.to_vec()).unwrap()
    }

    fn c3() -> Tournament {
        Tournament::cyclic_triangle()
    }

    #[test]
    fn construction_validates_and_deduplicates() {
        assert!(matches!(
            ForbiddenSet::new(Vec::new()),
            Err(ForbiddenSetError::Empty)
        ));
        assert!(matches!(
            ForbiddenSet::new(vec![Tournament::linear_order(2)]),
            Err(ForbiddenSetError::MemberTooSmall { index: 0, size: 2 })
        ));
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            ForbiddenSet::from_digraphs(vec![path]),
            Err(ForbiddenSetError::MemberNotTournament { index: 0, .. })
        ));
        // The reverse of a triangle is an isomorphic copy: deduplicated.
        let rev = c3().reverse();
        let t = set_of(&[c3(), rev]);
        assert_eq!(t.members().len(), 1);
    }

    #[test]
    fn membership_examples() {
        let only_triangle = set_of(&[c3()]);
        for n in 0..8 {
            assert!(only_triangle.admits(&Digraph::linear_order(n)));
        }
        let i6 = antichain_tournament(6).unwrap();
        let v = only_triangle.violation(i6.digraph()).expect("triangles inside");
        assert_eq!(v.member_index, 0);
        assert!(v.embedding.verify(&v.member, i6.digraph()));
        // The witness triple is the first triangle, vertices {0, 1, 2}.
        let mut image: Vec<usize> = v.embedding.0.clone();
        image.sort_unstable();
        assert_eq!(image, vec![0, 1, 2]);
        let only_i6 = set_of(&[i6]);
        assert!(only_i6.admits(c3().digraph()));
    }

    #[test]
    fn antichain_examples() {
        let i_family = set_of(&[
            antichain_tournament(6).unwrap(),
            antichain_tournament(7).unwrap(),
            antichain_tournament(8).unwrap(),
        ]);
        assert!(i_family.is_antichain());
        let orders = set_of(&[Tournament::linear_order(3), Tournament::linear_order(4)]);
        let (small, large, e) = orders.antichain_violation().expect("prefix embeds");
        assert_eq!((small, large), (0, 1));
        assert!(e.verify(&orders.members()[small], orders.members()[large].digraph()));
        assert!(set_of(&[c3()]).is_antichain());
    }

    #[test]
    fn closure_under_reversal() {
        assert!(set_of(&[c3()]).closed_under_minus());
        assert!(set_of(&[Tournament::linear_order(3)]).closed_under_minus());
        let s4 = set_of(&[source_over_triangle()]);
        let violation = s4.minus_closure_violation().expect("sink escapes");
        assert_eq!(violation.member_index, 0);
        assert!(s4.admits(violation.transformed.digraph()));
    }

    #[test]
    fn closure_under_switching() {
        let only_triangle = set_of(&[c3()]);
        let violation = only_triangle.sw_closure_violation().expect("switch gives L3");
        assert!(violation.transformed.digraph().three_cycles().is_empty());
        assert!(set_of(&[c3(), Tournament::linear_order(3)]).closed_under_sw());
        // All tournaments of a fixed size are switch-closed.
        let all4: Vec<Tournament> = crate::enumerate::tournaments(4);
        assert!(ForbiddenSet::new(all4).unwrap().closed_under_sw());
    }

    #[test]
    fn minimal_member_is_deterministic() {
        let i6 = antichain_tournament(6).unwrap();
        let i8 = antichain_tournament(8).unwrap();
        assert_eq!(set_of(&[i8, i6.clone()]).minimal_member().n(), 6);
        assert_eq!(set_of(&[c3()]).minimal_member(), &c3());
        let a = set_of(&[c3(), Tournament::linear_order(3)]);
        let b = set_of(&[Tournament::linear_order(3), c3()]);
        assert_eq!(a.minimal_member(), b.minimal_member());
    }

    #[test]
    fn membership_is_hereditary_and_isomorphism_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sets = [set_of(&[c3()]), set_of(&[antichain_tournament(6).unwrap()])];
        for t in &sets {
            for _ in 0..60 {
                let d = random_digraph(9, &mut rng);
                let perm = random_permutation(9, &mut rng);
                assert_eq!(t.admits(&d), t.admits(&d.relabel(&perm)));
                if t.admits(&d) {
                    let mut verts: Vec<usize> = (0..9).collect();
                    verts.shuffle(&mut rng);
                    let keep = &verts[..rng.gen_range(0..9)];
                    assert!(t.admits(&d.induced(keep)), "hereditary under deletion");
                }
            }
        }
    }

    #[test]
    fn closure_transfers_to_class_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        // Reversal-closed set: membership is reversal-invariant.
        let minus_closed = set_of(&[c3()]);
        assert!(minus_closed.closed_under_minus());
        // Switch-closed set: switching a member of the class at one
        // vertex stays in the class.
        let sw_closed = set_of(&[c3(), Tournament::linear_order(3)]);
        assert!(sw_closed.closed_under_sw());
        for _ in 0..60 {
            let d = random_digraph(8, &mut rng);
            assert_eq!(minus_closed.admits(&d), minus_closed.admits(&d.reverse()));
            if sw_closed.admits(&d) {
                let v = rng.gen_range(0..8);
                let part: BTreeSet<usize> = [v].into_iter().collect();
                assert!(sw_closed.admits(&d.switch(&part).unwrap()));
            }
        }
    }

    #[test]
    fn violation_using_requires_the_vertex() {
        let only_triangle = set_of(&[c3()]);
        // Triangle on {0,1,2} plus an isolated vertex 3.
        let mut d = Digraph::cyclic_triangle();
        d = d.extend_vertex(&[]).unwrap();
        assert!(only_triangle.violation_using(&d, 3).is_none());
        assert!(only_triangle.violation_using(&d, 1).is_some());
    }

    #[test]
    fn json_loader_reports_offenders() {
        let json = r#"{"tournaments": [{"n": 3, "edges": [[0,1],[1,2],[2,0]]}]}"#;
        let t: ForbiddenSet = serde_json::from_str(json).unwrap();
        assert_eq!(t.members().len(), 1);
        let bad = r#"{"tournaments": [{"n": 3, "edges": [[0,1],[1,2]]}]}"#;
        let err = serde_json::from_str::<ForbiddenSet>(bad).unwrap_err().to_string();
        assert!(err.contains("member 0"), "unexpected message: {err}");
        let small = r#"{"tournaments": [{"n": 2, "edges": [[0,1]]}]}"#;
        let err = serde_json::from_str::<ForbiddenSet>(small).unwrap_err().to_string();
        assert!(err.contains("at least 3"), "unexpected message: {err}");
    }

    #[test]
    fn random_tournaments_of_member_size_are_detected() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let i6 = antichain_tournament(6).unwrap();
        let t = set_of(&[i6.clone()]);
        for _ in 0..50 {
            let host = random_tournament(6, &mut rng);
            let same_class = host.digraph().canonical_code() == i6.digraph().canonical_code();
            assert_eq!(!t.admits(host.digraph()), same_class);
        }
    }
}
