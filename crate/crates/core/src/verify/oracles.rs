//! Brute-force reference computations, kept independent of the fast paths
//! they check.

use crate::graph::SignedGraph;

/// Size of a largest matching using only edges `from..`, avoiding `used`.
fn best_matching(graph: &SignedGraph, from: usize, used: &mut [bool], skip: Option<usize>) -> usize {
    let edges = graph.edges();
    let mut best = 0;
    for i in from..edges.len() {
        let e = edges[i];
        if used[e.u] || used[e.v] || skip == Some(e.u) || skip == Some(e.v) {
            continue;
        }
        used[e.u] = true;
        used[e.v] = true;
        best = best.max(1 + best_matching(graph, i + 1, used, skip));
        used[e.u] = false;
        used[e.v] = false;
    }
    best
}

/// Whether every maximum matching covers `u`, by exhaustive search over
/// all matchings: true iff no matching that avoids `u` is maximum.
pub fn covered_by_every_maximum_matching(graph: &SignedGraph, u: usize) -> bool {
    let mut used = vec![false; graph.order()];
    let all = best_matching(graph, 0, &mut used, None);
    let avoiding = best_matching(graph, 0, &mut used, Some(u));
    avoiding < all
}

/// Rank over GF(2) of the edge-indicator vectors of the given cycles.
pub fn cycle_space_rank(graph: &SignedGraph, cycles: &[Vec<usize>]) -> usize {
    let index = |a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        graph
            .edges()
            .iter()
            .position(|e| (e.u, e.v) == key)
            .expect("cycle edges belong to the graph")
    };
    let words = graph.size().div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = cycles
        .iter()
        .map(|c| {
            let mut row = vec![0u64; words];
            for i in 0..c.len() {
                let k = index(c[i], c[(i + 1) % c.len()]);
                row[k / 64] ^= 1 << (k % 64);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for bit in 0..graph.size() {
        let (w, b) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][w] & b != 0 {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matchings_of_small_trees() {
        let p3 = SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap();
        assert!(covered_by_every_maximum_matching(&p3, 1));
        assert!(!covered_by_every_maximum_matching(&p3, 0));
        let p4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!((0..4).all(|u| covered_by_every_maximum_matching(&p4, u)));
    }

    #[test]
    fn cycle_space_of_k4() {
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let triangles = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        assert_eq!(cycle_space_rank(&k4, &triangles), 3);
        assert_eq!(cycle_space_rank(&k4, &triangles[..2]), 2);
    }
}
