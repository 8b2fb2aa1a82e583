//! The signed-graph value type.
//!
//! A [`SignedGraph`] is a vertex count together with a set of signed edges
//! over the dense vertex ids `0..order`. Every operation returns a new value;
//! nothing mutates a graph after construction. Operations that remove vertices
//! relabel the survivors contiguously and hand back a [`Relabeling`] so callers
//! can translate ids between the two graphs.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Sign of an edge. The discriminants are the matrix entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Sign {
    Negative = -1,
    Positive = 1,
}

impl Sign {
    pub const fn value(self) -> i8 {
        self as i8
    }

    pub const fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub const fn is_positive(self) -> bool {
        matches!(self, Sign::Positive)
    }

    pub fn from_value(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }

    /// Product of a sequence of signs; the empty product is positive.
    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Positive, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A signed edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> VertexSet {
        let mut ids: Vec<usize> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn all(order: usize) -> VertexSet {
        VertexSet((0..order).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Fails if any member is not a vertex of a graph on `order` vertices.
    pub fn check_within(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Correspondence between the vertex ids of a graph and of a graph derived
/// from it by deleting vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Relabeling {
    fn keeping(order: usize, keep: impl Fn(usize) -> bool) -> Relabeling {
        let mut old_to_new = vec![None; order];
        let mut new_to_old = Vec::new();
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if keep(v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        Relabeling { old_to_new, new_to_old }
    }

    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Old ids of the surviving vertices, indexed by new id.
    pub fn survivors(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// A simple graph on vertices `0..order` whose edges carry a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    order: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, Sign)>>,
}

/// A connected component together with the ids its vertices had in the
/// parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: SignedGraph,
    pub vertices: Vec<usize>,
}

impl SignedGraph {
    /// Builds a graph from an edge list in any orientation and order.
    ///
    /// Repeated edges with the same sign collapse into one; a repeated edge
    /// whose signs disagree is rejected, as are loops and ids `>= order`.
    pub fn new<I>(order: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut normalized = Vec::new();
        for (a, b, sign) in edges {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(Error::VertexOutOfRange { vertex, order });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            normalized.push(Edge { u, v, sign });
        }
        normalized.sort_unstable();
        normalized.dedup();
        for pair in normalized.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::ConflictingEdge {
                    u: pair[0].u,
                    v: pair[0].v,
                });
            }
        }
        Ok(SignedGraph::from_sorted(order, normalized))
    }

    /// Same as [`SignedGraph::new`] with every edge positive.
    pub fn unsigned<I>(order: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        SignedGraph::new(order, edges.into_iter().map(|(u, v)| (u, v, Sign::Positive)))
    }

    pub fn empty(order: usize) -> SignedGraph {
        SignedGraph::from_sorted(order, Vec::new())
    }

    // `edges` must already be normalized: u < v < order, sorted, no repeated pair.
    pub(crate) fn from_sorted(order: usize, edges: Vec<Edge>) -> SignedGraph {
        let mut adjacency = vec![Vec::new(); order];
        for e in &edges {
            adjacency[e.u].push((e.v, e.sign));
            adjacency[e.v].push((e.u, e.sign));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SignedGraph {
            order,
            edges,
            adjacency,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` with the sign of the joining edge, sorted by id.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn sign_between(&self, u: usize, v: usize) -> Option<Sign> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign_between(u, v).is_some()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Leaves, i.e. vertices of degree one, in increasing order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Removes the vertices of `removed` together with their edges.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(SignedGraph, Relabeling)> {
        removed.check_within(self.order)?;
        Ok(self.retain_vertices(|v| !removed.contains(v)))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(SignedGraph, Relabeling)> {
        self.check_vertex(v)?;
        Ok(self.retain_vertices(|w| w != v))
    }

    /// Induced subgraph on the vertices for which `keep` holds.
    pub fn retain_vertices(&self, keep: impl Fn(usize) -> bool) -> (SignedGraph, Relabeling) {
        let map = Relabeling::keeping(self.order, keep);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let u = map.new_id(e.u)?;
                let v = map.new_id(e.v)?;
                Some(Edge { u, v, sign: e.sign })
            })
            .collect();
        // Relabeling is monotone, so the filtered list stays sorted.
        (SignedGraph::from_sorted(map.survivors().len(), edges), map)
    }

    /// Component label of every vertex plus the number of components.
    /// Labels are assigned in order of each component's smallest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.order];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        (0..count)
            .map(|c| {
                let (graph, map) = self.retain_vertices(|v| label[v] == c);
                Component {
                    graph,
                    vertices: map.survivors().to_vec(),
                }
            })
            .collect()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            sign: e.sign,
        }));
        SignedGraph::from_sorted(self.order + other.order, edges)
    }

    /// Appends `count` isolated vertices.
    pub fn with_isolated(&self, count: usize) -> SignedGraph {
        SignedGraph::from_sorted(self.order + count, self.edges.clone())
    }

    /// Adds edges, which must not already be present.
    pub fn with_edges<I>(&self, extra: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut all: Vec<(usize, usize, Sign)> = self.edges.iter().map(|e| (e.u, e.v, e.sign)).collect();
        for (a, b, sign) in extra {
            if self.has_edge(a, b) {
                return Err(Error::InvalidParameter(format!("edge {a}-{b} is already present")));
            }
            all.push((a, b, sign));
        }
        SignedGraph::new(self.order, all)
    }

    /// Applies `f` to every edge sign.
    pub fn map_signs(&self, mut f: impl FnMut(&Edge) -> Sign) -> SignedGraph {
        let edges = self.edges.iter().map(|e| Edge { sign: f(e), ..*e }).collect();
        SignedGraph::from_sorted(self.order, edges)
    }

    /// Renumbers vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.order || VertexSet::new(perm.iter().copied()).len() != self.order {
            return Err(Error::InvalidParameter(
                "permutation must be a bijection on the vertex set".into(),
            ));
        }
        SignedGraph::new(self.order, self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn c4() -> SignedGraph {
        SignedGraph::new(4, [(0, 1, P), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap()
    }

    #[test]
    fn build_normalizes_orientation() {
        let g = SignedGraph::new(2, [(1, 0, P)]).unwrap();
        assert_eq!(g.edges(), &[Edge { u: 0, v: 1, sign: P }]);
        let g = c4();
        assert_eq!(g.size(), 4);
        assert_eq!(g.edges()[1], Edge { u: 0, v: 3, sign: P });
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            SignedGraph::new(3, [(0, 1, P), (0, 1, N)]),
            Err(Error::ConflictingEdge { u: 0, v: 1 })
        );
        assert_eq!(SignedGraph::new(3, [(2, 2, P)]), Err(Error::Loop(2)));
        assert_eq!(
            SignedGraph::new(3, [(0, 3, P)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        // Same sign twice is just the same edge.
        assert_eq!(SignedGraph::new(3, [(0, 1, P), (1, 0, P)]).unwrap().size(), 1);
    }

    #[test]
    fn deleting_from_cycle_gives_path() {
        let (p3, map) = c4().delete_vertices(&VertexSet::new([0])).unwrap();
        assert_eq!(p3, SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(map.new_id(0), None);
        assert_eq!(map.new_id(3), Some(2));
        assert_eq!(map.old_id(0), 1);
    }

    #[test]
    fn deleting_everything_or_nothing() {
        let k2 = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let (empty, _) = k2.delete_vertices(&VertexSet::all(2)).unwrap();
        assert_eq!(empty.order(), 0);
        let (same, _) = c4().delete_vertices(&VertexSet::empty()).unwrap();
        assert_eq!(same, c4());
        assert!(c4().delete_vertices(&VertexSet::new([4])).is_err());
    }

    #[test]
    fn middle_deletion_disconnects_path() {
        let p5 = SignedGraph::unsigned(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (rest, _) = p5.delete_vertex(2).unwrap();
        let k2 = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let parts = rest.components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|c| c.graph == k2));
        assert_eq!(parts[1].vertices, vec![2, 3]);
    }

    #[test]
    fn components_of_union() {
        let p3 = SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap();
        let g = p3.disjoint_union(&c4());
        let parts = g.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].graph, p3);
        assert_eq!(parts[1].graph, c4());
        assert_eq!(parts[1].vertices, vec![3, 4, 5, 6]);

        assert_eq!(c4().components()[0].graph, c4());
        assert_eq!(SignedGraph::empty(3).components().len(), 3);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(N * N, P);
        assert_eq!(P * N, N);
        assert_eq!(Sign::product([N, N, N]), N);
        assert_eq!(Sign::product([]), P);
        assert_eq!(N.value(), -1);
    }
}
