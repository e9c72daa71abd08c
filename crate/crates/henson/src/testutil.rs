//! Test-only helpers: independent brute-force oracles and random
//! structure generators. Nothing here may call the canonical-form or
//! embedding search it is used to check.

use crate::digraph::{Digraph, PairType, Tournament};
use rand::Rng;

/// Brute-force isomorphism oracle: tries every bijection.
pub(crate) fn brute_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.n()).collect();
    fn search(perm: &mut Vec<usize>, k: usize, a: &Digraph, b: &Digraph) -> bool {
        let n = perm.len();
        if k == n {
            return true;
        }
        for i in k..n {
            perm.swap(k, i);
            let ok = (0..=k).all(|j| {
                (0..=k).all(|l| a.has_edge(j, l) == b.has_edge(perm[j], perm[l]))
            });
            if ok && search(perm, k + 1, a, b) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    search(&mut perm, 0, a, b)
}

/// Brute-force canonical form: the minimum adjacency encoding over all
/// permutations. Independent of the partition-refinement path.
pub(crate) fn brute_min_encoding(d: &Digraph) -> Vec<u8> {
    let n = d.n();
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    fn walk(perm: &mut Vec<usize>, k: usize, d: &Digraph, best: &mut Option<Vec<u8>>) {
        let n = perm.len();
        if k == n {
            let mut enc = Vec::with_capacity(n.saturating_sub(1) * n / 2);
            for i in 0..n {
                for j in i + 1..n {
                    enc.push(match d.pair_type(perm[i], perm[j]) {
                        PairType::NonEdge => 0u8,
                        PairType::Forward => 1,
                        PairType::Backward => 2,
                    });
                }
            }
            if best.as_ref().map_or(true, |b| enc < *b) {
                *best = Some(enc);
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            walk(perm, k + 1, d, best);
            perm.swap(k, i);
        }
    }
    walk(&mut perm, 0, d, &mut best);
    best.unwrap_or_default()
}

/// Every labelled digraph on `n` vertices (3^(n(n-1)/2) of them).
pub(crate) fn all_labelled_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut counter = vec![0u8; pairs.len()];
    loop {
        let mut d = Digraph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            match counter[i] {
                0 => {}
                1 => d.set_pair(u, v, PairType::Forward),
                _ => d.set_pair(u, v, PairType::Backward),
            }
        }
        out.push(d);
        // Increment base-3 counter.
        let mut i = 0;
        loop {
            if i == counter.len() {
                return out;
            }
            counter[i] += 1;
            if counter[i] < 3 {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// A uniformly random digraph on `n` vertices.
pub(crate) fn random_digraph<R: Rng>(n: usize, rng: &mut R) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => {}
                1 => d.set_pair(u, v, PairType::Forward),
                _ => d.set_pair(u, v, PairType::Backward),
            }
        }
    }
    d
}

/// A uniformly random tournament on `n` vertices.
pub(crate) fn random_tournament<R: Rng>(n: usize, rng: &mut R) -> Tournament {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                d.set_pair(u, v, PairType::Forward);
            } else {
                d.set_pair(u, v, PairType::Backward);
            }
        }
    }
    Tournament::new(d).unwrap()
}

/// A random permutation of `0..n`.
pub(crate) fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// The source-over-triangle tournament: vertex 0 beats a directed
/// triangle on 1, 2, 3.
pub(crate) fn source_over_triangle() -> Tournament {
    Tournament::new(
        Digraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap(),
    )
    .unwrap()
}
