//! Backtracking search for tournament embeddings.
//!
//! An embedding of a tournament `S` into a digraph `D` is an injective
//! vertex map preserving edges. Because `S` is complete, any such map is
//! automatically an induced embedding.

use crate::digraph::{Digraph, Tournament};
use serde::{Deserialize, Serialize};

/// A witness embedding: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    /// Checks that `map` really embeds `pattern` into `host`.
    pub fn verify(&self, pattern: &Tournament, host: &Digraph) -> bool {
        let map = &self.0;
        if map.len() != pattern.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &h in map {
            if h >= host.n() || seen[h] {
                return false;
            }
            seen[h] = true;
        }
        pattern
            .digraph()
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(map[u], map[v]))
    }
}

struct Searcher<'a> {
    pattern: &'a Digraph,
    host: &'a Digraph,
    // candidates[p] = host vertices whose degree and 3-cycle counts admit
    // an image of pattern vertex p (3-cycles inject under embeddings)
    candidates: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn new(pattern: &'a Digraph, host: &'a Digraph) -> Self {
        let use_cycle_filter = pattern.n() >= 5 && host.n() <= 64;
        let (pat_cycles, host_cycles) = if use_cycle_filter {
            (pattern.three_cycle_counts(), host.three_cycle_counts())
        } else {
            (Vec::new(), Vec::new())
        };
        let candidates = (0..pattern.n())
            .map(|p| {
                (0..host.n())
                    .filter(|&v| {
                        host.out_degree(v) >= pattern.out_degree(p)
                            && host.in_degree(v) >= pattern.in_degree(p)
                            && (!use_cycle_filter || host_cycles[v] >= pat_cycles[p])
                    })
                    .collect()
            })
            .collect();
        Searcher {
            pattern,
            host,
            candidates,
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.pattern.n()];
        let mut used = vec![false; self.host.n()];
        if self.extend(0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(&self, depth: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if depth == self.pattern.n() {
            return true;
        }
        'cand: for &v in &self.candidates[depth] {
            if used[v] {
                continue;
            }
            for p in 0..depth {
                if self.host.pair_type(map[p], v) != self.pattern.pair_type(p, depth) {
                    continue 'cand;
                }
            }
            map[depth] = v;
            used[v] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            map[depth] = usize::MAX;
            used[v] = false;
        }
        false
    }
}

impl Tournament {
    /// Finds an embedding of `self` into `host`, if one exists.
    pub fn embeds_into(&self, host: &Digraph) -> Option<Embedding> {
        if self.n() > host.n() {
            return None;
        }
        Searcher::new(self.digraph(), host).run().map(Embedding)
    }

    /// Finds an embedding of `self` into `host` whose image contains the
    /// host vertex `must_use`.
    pub fn embeds_into_using(&self, host: &Digraph, must_use: usize) -> Option<Embedding> {
        if self.n() > host.n() || must_use >= host.n() {
            return None;
        }
        let d = self.digraph();
        // Fix each pattern vertex in turn onto the required host vertex.
        for p in 0..self.n() {
            let mut order: Vec<usize> = vec![p];
            order.extend((0..self.n()).filter(|&q| q != p));
            let reordered = d.induced(&order);
            let mut searcher = Searcher::new(&reordered, host);
            searcher.candidates[0].retain(|&v| v == must_use);
            if let Some(map) = searcher.run() {
                // Undo the reordering.
                let mut out = vec![usize::MAX; self.n()];
                for (slot, &orig) in order.iter().enumerate() {
                    out[orig] = map[slot];
                }
                return Some(Embedding(out));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::PairType;
    use crate::testutil::{random_permutation, random_tournament, source_over_triangle};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn every_tournament_embeds_into_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..8 {
            let t = random_tournament(n, &mut rng);
            let e = t.embeds_into(t.digraph()).expect("identity embedding");
            assert!(e.verify(&t, t.digraph()));
        }
    }

    #[test]
    fn larger_patterns_never_embed() {
        let l5 = Tournament::linear_order(5);
        assert!(l5.embeds_into(&Digraph::linear_order(4)).is_none());
    }

    #[test]
    fn triangle_embeds_into_its_extension_but_not_linear_orders() {
        let c3 = Tournament::cyclic_triangle();
        let s4 = source_over_triangle();
        let e = c3.embeds_into(s4.digraph()).expect("triangle inside");
        assert!(e.verify(&c3, s4.digraph()));
        for n in 0..8 {
            assert!(c3.embeds_into(&Digraph::linear_order(n)).is_none());
        }
    }

    #[test]
    fn embeddings_are_transitive() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            // Build a chain s ⊆ mid ⊆ host by taking random sub-tournaments.
            let host = random_tournament(9, &mut rng);
            let mut verts: Vec<usize> = (0..9).collect();
            verts.shuffle(&mut rng);
            let mid_verts = &verts[..6];
            let mid = Tournament::new(host.digraph().induced(mid_verts)).unwrap();
            let small_verts: Vec<usize> = (0..6).take(4).collect();
            let small = Tournament::new(mid.digraph().induced(&small_verts)).unwrap();
            let e1 = small.embeds_into(mid.digraph()).expect("by construction");
            let e2 = mid.embeds_into(host.digraph()).expect("by construction");
            // Compose the witnesses.
            let composed: Vec<usize> = e1.0.iter().map(|&v| e2.0[v]).collect();
            assert!(Embedding(composed).verify(&small, host.digraph()));
        }
    }

    #[test]
    fn three_cycle_counts_inject_under_witnesses() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let host = random_tournament(8, &mut rng);
            let mut verts: Vec<usize> = (0..8).collect();
            verts.shuffle(&mut rng);
            let pattern = Tournament::new(host.digraph().induced(&verts[..5])).unwrap();
            let e = pattern.embeds_into(host.digraph()).expect("sub-tournament");
            let pattern_counts = pattern.digraph().three_cycle_counts();
            let host_counts = host.digraph().three_cycle_counts();
            for (p, &image) in e.0.iter().enumerate() {
                assert!(pattern_counts[p] <= host_counts[image]);
            }
        }
    }

    #[test]
    fn required_vertex_constraint_is_honoured() {
        let c3 = Tournament::cyclic_triangle();
        // Two disjoint triangles; require a vertex of the second.
        let mut d = Digraph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            d.set_pair(u, v, PairType::Forward);
        }
        let e = c3.embeds_into_using(&d, 4).expect("second triangle");
        assert!(e.0.contains(&4));
        assert!(e.verify(&c3, &d));
        // No triangle through a vertex outside any triangle.
        let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(c3.embeds_into_using(&path, 0).is_none());
    }

    #[test]
    fn witness_maps_are_permutation_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let t = random_tournament(6, &mut rng);
        let perm = random_permutation(6, &mut rng);
        let relabelled = Tournament::new(t.digraph().relabel(&perm)).unwrap();
        assert!(relabelled.embeds_into(t.digraph()).is_some());
    }
}
