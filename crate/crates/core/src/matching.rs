//! Maximum matchings of forests and the trees whose nullity is one less
//! than their number of leaves.
//!
//! On a forest the greedy that repeatedly matches a leaf to its neighbour is
//! optimal, and the nullity of any signing is `n − 2μ`. A vertex `u` is
//! *covered* when every maximum matching uses it, which happens exactly when
//! deleting `u` lowers the matching number.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::graph::{SignedGraph, VertexSet};
use crate::linalg::nullity;
use crate::structure::{internal_path, is_forest, is_tree, pendant_count};

fn require_forest(graph: &SignedGraph) -> Result<()> {
    if is_forest(graph) {
        Ok(())
    } else {
        Err(Error::NotForest)
    }
}

/// Size of a maximum matching of a forest.
pub fn matching_number(forest: &SignedGraph) -> Result<usize> {
    require_forest(forest)?;
    Ok(greedy_matching_size(forest))
}

fn greedy_matching_size(forest: &SignedGraph) -> usize {
    const NONE: usize = usize::MAX;
    let n = forest.order();
    let mut parent = vec![NONE; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, _) in forest.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    // Children before parents: match any still-free vertex to its free parent.
    let mut matched = vec![false; n];
    let mut size = 0;
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != NONE && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            size += 1;
        }
    }
    size
}

/// Whether every maximum matching of the forest covers `u`.
pub fn is_covered(forest: &SignedGraph, u: usize) -> Result<bool> {
    forest.check_vertex(u)?;
    require_forest(forest)?;
    let (rest, _) = forest.delete_vertex(u)?;
    Ok(greedy_matching_size(&rest) + 1 == greedy_matching_size(forest))
}

/// Nullity of a signed forest via its matching number.
pub fn tree_nullity(forest: &SignedGraph) -> Result<usize> {
    Ok(forest.order() - 2 * matching_number(forest)?)
}

/// One step of the leaf-peeling recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafPathRecord {
    pub leaf: usize,
    /// The major vertex that ends the internal path from `leaf`.
    pub major: usize,
    /// Vertices of the internal path from `leaf` to `major`.
    pub path: Vec<usize>,
    /// `path.len() − 1`.
    pub length: usize,
    /// Whether `major` is covered in the tree left after removing the path
    /// (all of it except `major`). `None` when the step failed on parity
    /// before the residual tree was formed.
    pub major_covered: Option<bool>,
}

impl LeafPathRecord {
    pub fn is_odd(&self) -> bool {
        self.length % 2 == 1
    }
}

/// Vertex ids in a certificate refer to the input tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCertificate {
    pub records: Vec<LeafPathRecord>,
    /// Order of the path the recursion bottomed out on, if it got that far.
    pub base_path_order: Option<usize>,
    /// Verdict reached by the recursion alone.
    pub recursive_verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDeficiency {
    /// `η(T) = p(T) − 1`, decided by exact rank.
    pub one_deficient: bool,
    pub certificate: TreeCertificate,
}

impl OneDeficiency {
    pub fn agrees(&self) -> bool {
        self.one_deficient == self.certificate.recursive_verdict
    }
}

/// Decides whether a tree satisfies `η(T) = p(T) − 1`.
///
/// The verdict comes from comparing the exact nullity with the leaf count.
/// The certificate independently runs the structural recursion: every
/// internal path from a leaf to a major vertex must have odd length, and
/// after peeling the path of the smallest leaf, its major vertex must be
/// covered in the remaining tree, which must itself pass. A tree with two
/// leaves is a path and passes iff it has odd order (even length).
pub fn is_one_deficient_tree(tree: &SignedGraph) -> Result<OneDeficiency> {
    if !is_tree(tree) {
        return Err(Error::NotTree);
    }
    if tree.order() < 2 {
        return precondition("tree must have at least two vertices");
    }
    let one_deficient = nullity(tree) + 1 == pendant_count(tree);
    Ok(OneDeficiency {
        one_deficient,
        certificate: peel_certificate(tree),
    })
}

fn peel_certificate(tree: &SignedGraph) -> TreeCertificate {
    let mut current = tree.clone();
    let mut original: Vec<usize> = (0..tree.order()).collect();
    let mut records = Vec::new();
    loop {
        let leaves = current.pendant_vertices();
        if leaves.len() <= 2 {
            let order = current.order();
            return TreeCertificate {
                records,
                base_path_order: Some(order),
                recursive_verdict: order % 2 == 1,
            };
        }
        let leaf_path = |leaf: usize| internal_path(&current, leaf, current.neighbors(leaf)[0].0);
        let record = |path: &[usize], covered| LeafPathRecord {
            leaf: original[path[0]],
            major: original[*path.last().expect("path has two ends")],
            path: path.iter().map(|&v| original[v]).collect(),
            length: path.len() - 1,
            major_covered: covered,
        };

        if let Some(even) = leaves.iter().map(|&l| leaf_path(l)).find(|p| p.len() % 2 == 1) {
            records.push(record(&even, None));
            return TreeCertificate {
                records,
                base_path_order: None,
                recursive_verdict: false,
            };
        }

        let path = leaf_path(leaves[0]);
        let major = *path.last().expect("path has two ends");
        let peeled = VertexSet::new(path[..path.len() - 1].iter().copied());
        let (residual, map) = current.delete_vertices(&peeled).expect("path vertices are in range");
        let new_major = map.new_id(major).expect("major vertex survives");
        let covered = is_covered(&residual, new_major).expect("residual of a tree is a tree");
        records.push(record(&path, Some(covered)));
        if !covered {
            return TreeCertificate {
                records,
                base_path_order: None,
                recursive_verdict: false,
            };
        }
        original = map.survivors().iter().map(|&v| original[v]).collect();
        current = residual;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(leaves: usize) -> SignedGraph {
        SignedGraph::unsigned(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    // Legs of the given lengths hanging off centre 0.
    fn spider(legs: &[usize]) -> SignedGraph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        SignedGraph::unsigned(next, edges).unwrap()
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(matching_number(&path(4)), Ok(2));
        assert_eq!(matching_number(&star(3)), Ok(1));
        assert_eq!(matching_number(&path(7)), Ok(3));
        assert_eq!(matching_number(&SignedGraph::empty(3)), Ok(0));
        let c3 = SignedGraph::unsigned(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(matching_number(&c3), Err(Error::NotForest));
    }

    #[test]
    fn covered_vertices() {
        let p3 = path(3);
        assert_eq!(is_covered(&p3, 1), Ok(true));
        assert_eq!(is_covered(&p3, 0), Ok(false));
        let k2 = path(2);
        assert_eq!(is_covered(&k2, 0), Ok(true));
        assert_eq!(is_covered(&k2, 1), Ok(true));
        assert!(is_covered(&k2, 2).is_err());
    }

    #[test]
    fn forest_nullity() {
        assert_eq!(tree_nullity(&path(5)), Ok(1));
        assert_eq!(tree_nullity(&path(4)), Ok(0));
        assert_eq!(tree_nullity(&star(3)), Ok(2));
    }

    #[test]
    fn paths_use_the_direct_verdict() {
        // Odd order (even length) paths are the one-deficient ones.
        let p5 = is_one_deficient_tree(&path(5)).unwrap();
        assert!(p5.one_deficient && p5.agrees());
        assert_eq!(p5.certificate.base_path_order, Some(5));
        let p6 = is_one_deficient_tree(&path(6)).unwrap();
        assert!(!p6.one_deficient && p6.agrees());
        let k2 = is_one_deficient_tree(&path(2)).unwrap();
        assert!(!k2.one_deficient);
    }

    #[test]
    fn spiders() {
        // Star K1,3: eta 2 = p - 1, all legs of length one.
        let s = is_one_deficient_tree(&star(3)).unwrap();
        assert!(s.one_deficient && s.agrees());
        assert_eq!(s.certificate.records.len(), 1);
        assert_eq!(s.certificate.records[0].major_covered, Some(true));

        // Legs 1,1,2: the length-two leg is even, eta 1 != 2.
        let s = is_one_deficient_tree(&spider(&[1, 1, 2])).unwrap();
        assert!(!s.one_deficient && s.agrees());
        let last = s.certificate.records.last().unwrap();
        assert_eq!(last.length, 2);
        assert_eq!(last.major_covered, None);

        let s = is_one_deficient_tree(&spider(&[1, 3, 3, 1])).unwrap();
        assert!(s.one_deficient && s.agrees());
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(is_one_deficient_tree(&SignedGraph::empty(2)), Err(Error::NotTree));
        let c3 = SignedGraph::unsigned(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(is_one_deficient_tree(&c3), Err(Error::NotTree));
        assert!(is_one_deficient_tree(&SignedGraph::empty(1)).is_err());
    }
}
