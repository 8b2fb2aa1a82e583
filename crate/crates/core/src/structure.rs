//! Structural invariants of the underlying graph: cyclomatic number, leaves,
//! blocks, cycles and the per-vertex counts used by the nullity bound.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::linalg::signed_cycle_nullity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// A single edge.
    Bridge,
    /// As many edges as vertices, i.e. a cycle.
    Cycle,
    /// More edges than vertices.
    Complex,
}

/// A maximal 2-connected piece (or bridge) of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub kind: BlockKind,
}

impl Block {
    fn from_edges(mut edges: Vec<Edge>) -> Block {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let kind = match edges.len() {
            1 => BlockKind::Bridge,
            m if m == vertices.len() => BlockKind::Cycle,
            _ => BlockKind::Complex,
        };
        Block { vertices, edges, kind }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// A cycle given by its vertex sequence; the closing edge runs from the last
/// vertex back to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    sign: Sign,
}

impl Cycle {
    /// Checks that `vertices` is a cycle of `graph` and records its sign.
    pub fn new(graph: &SignedGraph, vertices: Vec<usize>) -> Result<Cycle> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least three vertices, got {k}"
            )));
        }
        for &v in &vertices {
            graph.check_vertex(v)?;
        }
        let mut distinct = vertices.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != k {
            return Err(Error::InvalidParameter("cycle repeats a vertex".into()));
        }
        let mut sign = Sign::Positive;
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            match graph.sign_between(a, b) {
                Some(s) => sign = sign * s,
                None => {
                    return Err(Error::InvalidParameter(format!("{a}-{b} is not an edge")));
                }
            }
        }
        Ok(Cycle { vertices, sign })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Nullity of this cycle taken as a standalone signed cycle.
    pub fn nullity(&self) -> usize {
        signed_cycle_nullity(self.len(), self.sign)
    }

    /// Consecutive vertex pairs, closing pair included.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Per-vertex quantities of the counting identities at a vertex `x` of a
/// connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutVertexStats {
    pub vertex: usize,
    /// Degree of `x`.
    pub degree: usize,
    /// Components of `g − x` that contain a degree-2 neighbour of `x`.
    pub components_with_degree_two_neighbors: usize,
    /// Neighbours of `x` that have degree 2.
    pub degree_two_neighbors: usize,
    /// Number of components of `g − x`.
    pub components_after_removal: usize,
    pub on_cycle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSummary {
    pub components: usize,
    pub cyclomatic: usize,
    pub pendants: usize,
    pub degrees: Vec<usize>,
    pub blocks: Vec<Block>,
    pub cycle_disjoint: bool,
}

impl StructureSummary {
    /// Number of blocks of each kind, as (bridges, cycles, complex).
    pub fn block_counts(&self) -> (usize, usize, usize) {
        self.blocks.iter().fold((0, 0, 0), |(b, c, x), blk| match blk.kind {
            BlockKind::Bridge => (b + 1, c, x),
            BlockKind::Cycle => (b, c + 1, x),
            BlockKind::Complex => (b, c, x + 1),
        })
    }
}

pub fn summarize(graph: &SignedGraph) -> StructureSummary {
    let blocks = blocks(graph);
    let cycle_disjoint = blocks_are_cycle_disjoint(graph.order(), &blocks);
    StructureSummary {
        components: graph.component_count(),
        cyclomatic: cyclomatic_number(graph),
        pendants: pendant_count(graph),
        degrees: graph.degrees(),
        blocks,
        cycle_disjoint,
    }
}

/// `|E| − |V| + ω`.
pub fn cyclomatic_number(graph: &SignedGraph) -> usize {
    graph.size() + graph.component_count() - graph.order()
}

pub fn pendant_count(graph: &SignedGraph) -> usize {
    (0..graph.order()).filter(|&v| graph.degree(v) == 1).count()
}

pub fn is_forest(graph: &SignedGraph) -> bool {
    cyclomatic_number(graph) == 0
}

pub fn is_tree(graph: &SignedGraph) -> bool {
    graph.order() >= 1 && graph.is_connected() && is_forest(graph)
}

/// Biconnected components (Hopcroft–Tarjan). Isolated vertices belong to no
/// block. Blocks are returned sorted by their edge lists.
pub fn blocks(graph: &SignedGraph) -> Vec<Block> {
    const UNSEEN: usize = usize::MAX;
    let n = graph.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // (vertex, parent, index of next neighbour to look at)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN || graph.degree(root) == 0 {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, next) = *frame;
            if next < graph.degree(v) {
                frame.2 += 1;
                let w = graph.neighbors(v)[next].0;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else {
                continue;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut edges = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    let sign = graph.sign_between(a, b).expect("stacked pairs are edges");
                    edges.push(Edge {
                        u: a.min(b),
                        v: a.max(b),
                        sign,
                    });
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                out.push(Block::from_edges(edges));
            }
        }
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

fn blocks_are_cycle_disjoint(order: usize, blocks: &[Block]) -> bool {
    let mut cycle_blocks_at = vec![0usize; order];
    for block in blocks {
        match block.kind {
            BlockKind::Bridge => {}
            BlockKind::Complex => return false,
            BlockKind::Cycle => {
                for &v in &block.vertices {
                    cycle_blocks_at[v] += 1;
                    if cycle_blocks_at[v] > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True iff no two distinct cycles share a vertex: every block is a bridge
/// or a cycle, and no vertex lies in two cycle blocks.
pub fn cycle_disjoint(graph: &SignedGraph) -> bool {
    blocks_are_cycle_disjoint(graph.order(), &blocks(graph))
}

/// Marks the vertices lying on some cycle, i.e. inside a cycle or complex block.
pub fn on_cycle(graph: &SignedGraph) -> Vec<bool> {
    on_cycle_from_blocks(graph.order(), &blocks(graph))
}

pub(crate) fn on_cycle_from_blocks(order: usize, blocks: &[Block]) -> Vec<bool> {
    let mut mark = vec![false; order];
    for block in blocks.iter().filter(|b| b.kind != BlockKind::Bridge) {
        for &v in &block.vertices {
            mark[v] = true;
        }
    }
    mark
}

/// One cycle per non-tree edge of the BFS spanning forest rooted at the
/// smallest vertex of each component. Non-tree edges are taken in `(u, v)`
/// order, so the basis is reproducible.
pub fn fundamental_cycles(graph: &SignedGraph) -> Vec<Cycle> {
    const NONE: usize = usize::MAX;
    let n = graph.order();
    let mut parent = vec![NONE; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in graph.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut cycles = Vec::new();
    for e in graph.edges() {
        if parent[e.v] == e.u || parent[e.u] == e.v {
            continue;
        }
        let (mut a, mut b) = (e.u, e.v);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        cycles.push(Cycle::new(graph, left).expect("tree paths close into a cycle"));
    }
    cycles
}

/// Cycle blocks containing exactly one vertex of degree at least three. A
/// component that is itself a cycle has no such vertex and is never
/// reported. Each cycle starts at its major vertex.
pub fn pendant_cycles(graph: &SignedGraph) -> Vec<Cycle> {
    pendant_cycles_from_blocks(graph, &blocks(graph))
}

pub(crate) fn pendant_cycles_from_blocks(graph: &SignedGraph, blocks: &[Block]) -> Vec<Cycle> {
    let mut out = Vec::new();
    for block in blocks.iter().filter(|b| b.kind == BlockKind::Cycle) {
        let mut majors = block.vertices.iter().copied().filter(|&v| graph.degree(v) >= 3);
        let (Some(major), None) = (majors.next(), majors.next()) else {
            continue;
        };
        out.push(walk_cycle_block(graph, block, major));
    }
    out.sort_by_key(|c| c.vertices[0]);
    out
}

/// Walks a cycle block starting at `start`, heading first to the smaller of
/// its two block neighbours.
pub(crate) fn walk_cycle_block(graph: &SignedGraph, block: &Block, start: usize) -> Cycle {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = block
            .edges
            .iter()
            .filter_map(|e| e.other(cur))
            .filter(|&w| w != prev)
            .min()
            .expect("every cycle vertex has two block neighbours");
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    Cycle::new(graph, order).expect("a cycle block walks to a cycle")
}

/// Follows the path that leaves `start` through `first` and continues
/// through degree-2 vertices. Returns the vertex sequence, from `start` to
/// the first vertex whose degree is not 2 (or back to `start` if the walk
/// closes a cycle of degree-2 vertices).
pub fn internal_path(graph: &SignedGraph, start: usize, first: usize) -> Vec<usize> {
    let mut path = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while graph.degree(cur) == 2 && cur != start {
        let next = graph
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev)
            .expect("degree-2 vertex has another neighbour");
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Counting statistics at `x`; requires a connected graph.
pub fn cut_vertex_stats(graph: &SignedGraph, x: usize) -> Result<CutVertexStats> {
    graph.check_vertex(x)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let (rest, map) = graph.delete_vertex(x)?;
    let (label, s) = rest.component_labels();
    let mut hit: Vec<usize> = graph
        .neighbors(x)
        .iter()
        .filter(|&&(y, _)| graph.degree(y) == 2)
        .map(|&(y, _)| label[map.new_id(y).expect("neighbour survives")])
        .collect();
    let m = hit.len();
    hit.sort_unstable();
    hit.dedup();
    Ok(CutVertexStats {
        vertex: x,
        degree: graph.degree(x),
        components_with_degree_two_neighbors: hit.len(),
        degree_two_neighbors: m,
        components_after_removal: s,
        on_cycle: on_cycle(graph)[x],
    })
}

/// Every simple cycle of length at least three, each listed once, by
/// depth-first search. Exponential; intended for small graphs.
pub fn simple_cycles(graph: &SignedGraph) -> Vec<Cycle> {
    fn extend(graph: &SignedGraph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
        let last = *path.last().expect("path is never empty");
        for &(w, _) in graph.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(Cycle::new(graph, path.clone()).expect("closed walk is a cycle"));
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(graph, start, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on_path = vec![false; graph.order()];
    for start in 0..graph.order() {
        let mut path = vec![start];
        on_path[start] = true;
        extend(graph, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn cycle_edges(offset: usize, len: usize) -> Vec<(usize, usize)> {
        (0..len).map(|i| (offset + i, offset + (i + 1) % len)).collect()
    }

    // Two cycles of lengths p and q sharing vertex 0.
    fn bowtie(p: usize, q: usize) -> SignedGraph {
        let mut edges = cycle_edges(0, p);
        let mut second: Vec<usize> = vec![0];
        second.extend(p..p + q - 1);
        for i in 0..q {
            edges.push((second[i], second[(i + 1) % q]));
        }
        SignedGraph::unsigned(p + q - 1, edges).unwrap()
    }

    fn k23() -> SignedGraph {
        SignedGraph::unsigned(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn summary_of_tree_and_cycle() {
        let tree = SignedGraph::unsigned(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let s = summarize(&tree);
        assert_eq!((s.cyclomatic, s.components, s.pendants), (0, 1, 3));
        assert_eq!(s.degrees.iter().sum::<usize>(), 2 * tree.size());

        let c7 = SignedGraph::unsigned(7, cycle_edges(0, 7)).unwrap();
        let s = summarize(&c7);
        assert_eq!((s.cyclomatic, s.pendants), (1, 0));
        assert!(s.cycle_disjoint);
        assert_eq!(summarize(&k23()).cyclomatic, 2);
    }

    #[test]
    fn block_kinds() {
        let p4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = blocks(&p4);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|blk| blk.kind == BlockKind::Bridge));

        let bt = blocks(&bowtie(4, 4));
        assert_eq!(bt.len(), 2);
        assert!(bt.iter().all(|blk| blk.kind == BlockKind::Cycle));
        let shared: Vec<usize> = bt[0].vertices.iter().copied().filter(|&v| bt[1].contains(v)).collect();
        assert_eq!(shared, vec![0]);

        let th = blocks(&k23());
        assert_eq!(th.len(), 1);
        assert_eq!(th[0].kind, BlockKind::Complex);
        assert!(blocks(&SignedGraph::empty(3)).is_empty());
    }

    #[test]
    fn cycle_disjointness() {
        // Two quadrangles joined by an edge.
        let mut edges = cycle_edges(0, 4);
        edges.extend(cycle_edges(4, 4));
        edges.push((0, 4));
        let g = SignedGraph::unsigned(8, edges).unwrap();
        assert!(cycle_disjoint(&g));
        assert!(!cycle_disjoint(&bowtie(4, 4)));
        assert!(!cycle_disjoint(&k23()));
    }

    #[test]
    fn fundamental_cycle_counts() {
        let tree = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(fundamental_cycles(&tree).is_empty());
        let c5 = SignedGraph::unsigned(5, cycle_edges(0, 5)).unwrap();
        let cs = fundamental_cycles(&c5);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 5);
        assert_eq!(fundamental_cycles(&k23()).len(), 2);
    }

    #[test]
    fn fundamental_cycle_signs() {
        let g = SignedGraph::new(4, [(0, 1, P), (1, 2, N), (2, 3, P), (3, 0, P), (0, 2, N)]).unwrap();
        for c in fundamental_cycles(&g) {
            let product = Sign::product(c.edge_pairs().map(|(a, b)| g.sign_between(a, b).unwrap()));
            assert_eq!(c.sign(), product);
        }
    }

    #[test]
    fn pendant_cycle_detection() {
        // infinity(4, 6, 3): C4 on 0..4, path 0-4-5, C6 on 5..11.
        let mut edges = cycle_edges(0, 4);
        edges.extend([(0, 4), (4, 5)]);
        edges.extend(cycle_edges(5, 6));
        let g = SignedGraph::unsigned(11, edges).unwrap();
        let pcs = pendant_cycles(&g);
        assert_eq!(pcs.len(), 2);
        assert_eq!(pcs[0].vertices()[0], 0);
        assert_eq!(pcs[1].vertices()[0], 5);
        assert_eq!(pcs[1].len(), 6);

        let c5 = SignedGraph::unsigned(5, cycle_edges(0, 5)).unwrap();
        assert!(pendant_cycles(&c5).is_empty());
        assert!(pendant_cycles(&k23()).is_empty());
    }

    #[test]
    fn vertex_statistics() {
        let star = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let st = cut_vertex_stats(&star, 0).unwrap();
        assert_eq!(
            (st.degree, st.components_after_removal, st.degree_two_neighbors),
            (3, 3, 0)
        );
        assert_eq!(st.components_with_degree_two_neighbors, 0);

        let c4 = SignedGraph::unsigned(4, cycle_edges(0, 4)).unwrap();
        let st = cut_vertex_stats(&c4, 1).unwrap();
        assert_eq!((st.degree, st.components_after_removal), (2, 1));
        assert_eq!(
            (st.degree_two_neighbors, st.components_with_degree_two_neighbors),
            (2, 1)
        );
        assert!(st.on_cycle);

        let st = cut_vertex_stats(&bowtie(4, 4), 0).unwrap();
        assert_eq!((st.degree, st.components_after_removal), (4, 2));
        assert_eq!(
            (st.degree_two_neighbors, st.components_with_degree_two_neighbors),
            (4, 2)
        );

        assert_eq!(cut_vertex_stats(&SignedGraph::empty(2), 0), Err(Error::Disconnected));
        assert!(cut_vertex_stats(&c4, 9).is_err());
    }

    #[test]
    fn simple_cycle_enumeration() {
        assert_eq!(simple_cycles(&k23()).len(), 3);
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // Four triangles and three quadrangles.
        assert_eq!(simple_cycles(&k4).len(), 7);
        assert_eq!(simple_cycles(&bowtie(3, 5)).len(), 2);
    }

    #[test]
    fn internal_paths() {
        let spider = SignedGraph::unsigned(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(internal_path(&spider, 4, 3), vec![4, 3, 0]);
        assert_eq!(internal_path(&spider, 1, 0), vec![1, 0]);
        let c4 = SignedGraph::unsigned(4, cycle_edges(0, 4)).unwrap();
        assert_eq!(internal_path(&c4, 0, 1), vec![0, 1, 2, 3, 0]);
    }
}
