//! The nullity bound in terms of cyclomatic number and leaf count, and
//! structural recognizers for the graphs that reach it.
//!
//! For a signed graph `Γ` whose components all have at least two vertices,
//!
//! ```text
//! η(Γ) ≤ 2c + p − 1   if p ≥ 1
//! η(Γ) ≤ 2c           if p = 0 and Γ is cycle-disjoint
//! η(Γ) ≤ 2c − 1       if p = 0 and two cycles share a vertex
//! ```
//!
//! The recognizers only look at shape (blocks, degrees, path lengths, cycle
//! signs). They never consult the nullity, so comparing their verdicts with
//! exact rank is a genuine test.

use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::graph::{SignedGraph, VertexSet};
use crate::linalg::nullity;
use crate::matching::is_one_deficient_tree;
use crate::structure::{
    internal_path, pendant_cycles_from_blocks, summarize, walk_cycle_block, Block, BlockKind, Cycle, StructureSummary,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// At least one leaf: `2c + p − 1`.
    WithLeaves,
    /// No leaves, no two cycles share a vertex: `2c`.
    LeafFreeCycleDisjoint,
    /// No leaves, some cycles share a vertex: `2c − 1`.
    LeafFreeSharedCycles,
}

impl BoundCase {
    pub fn name(self) -> &'static str {
        match self {
            BoundCase::WithLeaves => "with_leaves",
            BoundCase::LeafFreeCycleDisjoint => "leaf_free_cycle_disjoint",
            BoundCase::LeafFreeSharedCycles => "leaf_free_shared_cycles",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundVerdict {
    pub case: BoundCase,
    pub bound: i64,
    pub eta: i64,
    /// `bound − eta`; never negative if the bound holds.
    pub slack: i64,
}

fn require_no_small_components(graph: &SignedGraph) -> Result<()> {
    for c in graph.components() {
        if c.vertices.len() < 2 {
            return Err(Error::SmallComponent(c.vertices[0]));
        }
    }
    Ok(())
}

fn require_connected_with_cycles(graph: &SignedGraph, summary: &StructureSummary) -> Result<()> {
    require_no_small_components(graph)?;
    if summary.components != 1 {
        return Err(Error::Disconnected);
    }
    if summary.cyclomatic == 0 {
        return precondition("graph has no cycles");
    }
    Ok(())
}

fn verdict_from(summary: &StructureSummary, eta: usize) -> BoundVerdict {
    let c = summary.cyclomatic as i64;
    let p = summary.pendants as i64;
    let (case, bound) = if p >= 1 {
        (BoundCase::WithLeaves, 2 * c + p - 1)
    } else if summary.cycle_disjoint {
        (BoundCase::LeafFreeCycleDisjoint, 2 * c)
    } else {
        (BoundCase::LeafFreeSharedCycles, 2 * c - 1)
    };
    let eta = eta as i64;
    BoundVerdict {
        case,
        bound,
        eta,
        slack: bound - eta,
    }
}

/// Evaluates the bound. Every component must have at least two vertices.
pub fn bound(graph: &SignedGraph) -> Result<BoundVerdict> {
    require_no_small_components(graph)?;
    Ok(verdict_from(&summarize(graph), nullity(graph)))
}

fn deficiency(graph: &SignedGraph) -> i64 {
    let s = summarize(graph);
    2 * s.cyclomatic as i64 + s.pendants as i64 - nullity(graph) as i64
}

/// `η = 2c + p − 1`.
pub fn is_one_deficient(graph: &SignedGraph) -> bool {
    deficiency(graph) == 1
}

/// `η ≤ 2c + p − 2`.
pub fn is_two_plus_deficient(graph: &SignedGraph) -> bool {
    deficiency(graph) >= 2
}

/// Two vertex-disjoint cycles joined by a path, or two cycles sharing a
/// single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityShape {
    /// Each cycle starts at the vertex where the connecting path meets it.
    pub cycles: [Cycle; 2],
    /// From the first cycle to the second; a single vertex when they touch.
    pub path: Vec<usize>,
}

impl InfinityShape {
    /// Order of the connecting path (1 when the cycles share a vertex).
    pub fn path_order(&self) -> usize {
        self.path.len()
    }
}

/// Three internally disjoint paths between two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaShape {
    pub ends: (usize, usize),
    /// Sorted by length, then lexicographically.
    pub paths: [Vec<usize>; 3],
}

impl ThetaShape {
    pub fn lengths(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.paths[i].len() - 1)
    }

    /// The cycle formed by paths `i` and `j`.
    pub fn cycle(&self, graph: &SignedGraph, i: usize, j: usize) -> Cycle {
        let mut vertices = self.paths[i].clone();
        let back = &self.paths[j];
        vertices.extend(back[1..back.len() - 1].iter().rev());
        Cycle::new(graph, vertices).expect("two theta paths close a cycle")
    }

    /// The three cycles, as path pairs (0,1), (1,2), (0,2).
    pub fn cycles(&self, graph: &SignedGraph) -> [Cycle; 3] {
        [(0, 1), (1, 2), (0, 2)].map(|(i, j)| self.cycle(graph, i, j))
    }
}

/// Matches a whole connected leaf-free graph with exactly two cycle blocks
/// and otherwise only bridges.
pub fn infinity_shape(graph: &SignedGraph) -> Option<InfinityShape> {
    infinity_from(graph, &summarize(graph))
}

fn infinity_from(graph: &SignedGraph, s: &StructureSummary) -> Option<InfinityShape> {
    if s.components != 1 || s.pendants != 0 {
        return None;
    }
    let (_, cycles, complex) = s.block_counts();
    if cycles != 2 || complex != 0 {
        return None;
    }
    let cycle_blocks: Vec<&Block> = s.blocks.iter().filter(|b| b.kind == BlockKind::Cycle).collect();
    let (a, b) = (cycle_blocks[0], cycle_blocks[1]);
    if let Some(&shared) = a.vertices.iter().find(|&&v| b.contains(v)) {
        return Some(InfinityShape {
            cycles: [walk_cycle_block(graph, a, shared), walk_cycle_block(graph, b, shared)],
            path: vec![shared],
        });
    }
    let start = *a.vertices.iter().find(|&&v| graph.degree(v) == 3)?;
    let first = graph
        .neighbors(start)
        .iter()
        .map(|&(w, _)| w)
        .find(|&w| !a.contains(w))?;
    let path = internal_path(graph, start, first);
    let end = *path.last()?;
    if !b.contains(end) {
        return None;
    }
    Some(InfinityShape {
        cycles: [walk_cycle_block(graph, a, start), walk_cycle_block(graph, b, end)],
        path,
    })
}

/// Matches a whole graph made of one block with exactly two vertices of
/// degree three and all others of degree two.
pub fn theta_shape(graph: &SignedGraph) -> Option<ThetaShape> {
    theta_from(graph, &summarize(graph))
}

fn theta_from(graph: &SignedGraph, s: &StructureSummary) -> Option<ThetaShape> {
    if s.components != 1 || s.blocks.len() != 1 || s.blocks[0].kind != BlockKind::Complex {
        return None;
    }
    let mut ends = (0..graph.order()).filter(|&v| s.degrees[v] != 2);
    let (u, v) = match (ends.next(), ends.next(), ends.next()) {
        (Some(u), Some(v), None) if s.degrees[u] == 3 && s.degrees[v] == 3 => (u, v),
        _ => return None,
    };
    let mut paths: Vec<Vec<usize>> = graph
        .neighbors(u)
        .iter()
        .map(|&(w, _)| internal_path(graph, u, w))
        .collect();
    if paths.iter().any(|p| p.last() != Some(&v)) {
        return None;
    }
    paths.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Some(ThetaShape {
        ends: (u, v),
        paths: paths.try_into().ok()?,
    })
}

/// A tree with nullity-two cycles hanging from some of its leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWithCycles {
    /// The tree left after shrinking every cycle to its attachment vertex.
    pub tree: SignedGraph,
    /// `tree_vertices[i]` is the graph vertex behind tree vertex `i`.
    pub tree_vertices: Vec<usize>,
    /// Cycles, each starting at its attachment vertex, ordered by it.
    pub cycles: Vec<Cycle>,
}

impl TreeWithCycles {
    pub fn attachments(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.vertices()[0]).collect()
    }
}

/// `<length><sign>`, e.g. `4+`.
fn describe(c: &Cycle) -> String {
    format!("{}{}", c.len(), c.sign())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    Cycles(Vec<Cycle>),
    Tree(TreeWithCycles),
    Infinity(InfinityShape),
    Theta {
        shape: ThetaShape,
        /// Nullities of the cycles on path pairs (0,1), (1,2), (0,2).
        cycle_nullities: [usize; 3],
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |cs: &[Cycle]| cs.iter().map(describe).collect::<Vec<_>>().join(",");
        match self {
            Witness::None => write!(f, "none"),
            Witness::Cycles(cs) => write!(f, "cycles={}", list(cs)),
            Witness::Tree(t) => write!(
                f,
                "tree_order={} tree_leaves={} attachments={} cycles={}",
                t.tree.order(),
                t.tree.pendant_vertices().len(),
                t.attachments()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                list(&t.cycles)
            ),
            Witness::Infinity(s) => write!(f, "cycles={} path_order={}", list(&s.cycles), s.path_order()),
            Witness::Theta { shape, cycle_nullities } => {
                let [a, b, c] = shape.lengths();
                let [x, y, z] = cycle_nullities;
                write!(f, "lengths={a},{b},{c} cycle_nullities={x},{y},{z}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremalForm {
    None,
    /// Every component is a nullity-two cycle: `η = 2c + p`.
    NullityTwoCycles,
    /// A one-deficient tree with nullity-two cycles on some leaves.
    TreeWithCycles,
    /// Two nullity-two cycles sharing one vertex.
    TouchingCycles,
    /// A theta graph all of whose cycles have nullity two.
    Theta,
    /// Leaf-free, at least three cycles: a cycle on every leaf of a
    /// one-deficient tree.
    LeafFreeTree,
    /// Leaf-free bicyclic graph with nullity three.
    Bicyclic,
}

impl ExtremalForm {
    pub fn name(self) -> &'static str {
        match self {
            ExtremalForm::None => "none",
            ExtremalForm::NullityTwoCycles => "nullity_two_cycles",
            ExtremalForm::TreeWithCycles => "tree_with_cycles",
            ExtremalForm::TouchingCycles => "touching_cycles",
            ExtremalForm::Theta => "theta",
            ExtremalForm::LeafFreeTree => "leaf_free_tree",
            ExtremalForm::Bicyclic => "bicyclic",
        }
    }

    pub fn is_some(self) -> bool {
        self != ExtremalForm::None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: BoundVerdict,
    pub form: ExtremalForm,
    pub witness: Witness,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {}", self.case.name())?;
        writeln!(f, "bound {}", self.bound)?;
        writeln!(f, "eta {}", self.eta)?;
        writeln!(f, "slack {}", self.slack)
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        writeln!(f, "form {}", self.form.name())?;
        writeln!(f, "witness {}", self.witness)
    }
}

fn cycles_of_components(graph: &SignedGraph) -> Option<Vec<Cycle>> {
    let mut out = Vec::new();
    for comp in graph.components() {
        let g = &comp.graph;
        if g.order() < 3 || (0..g.order()).any(|v| g.degree(v) != 2) {
            return None;
        }
        // A connected 2-regular graph is a cycle; walk it from vertex 0.
        let mut order = vec![0];
        let (mut prev, mut cur) = (0, g.neighbors(0)[0].0);
        while cur != 0 {
            order.push(cur);
            let next = g.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        let vertices: Vec<usize> = order.iter().map(|&v| comp.vertices[v]).collect();
        let cycle = Cycle::new(graph, vertices).ok()?;
        if cycle.nullity() != 2 {
            return None;
        }
        out.push(cycle);
    }
    Some(out)
}

/// Whether every component is a cycle of nullity two, i.e. positive with
/// length divisible by four, or negative with length `2 mod 4`.
pub fn recognize_nullity_two_cycles(graph: &SignedGraph) -> Result<bool> {
    require_no_small_components(graph)?;
    Ok(graph.order() > 0 && cycles_of_components(graph).is_some())
}

fn tree_with_cycles(graph: &SignedGraph, s: &StructureSummary) -> Option<TreeWithCycles> {
    let (_, cycle_blocks, complex) = s.block_counts();
    if complex != 0 || cycle_blocks == 0 {
        return None;
    }
    let cycles = pendant_cycles_from_blocks(graph, &s.blocks);
    if cycles.len() != cycle_blocks {
        return None;
    }
    for c in &cycles {
        if c.nullity() != 2 || graph.degree(c.vertices()[0]) != 3 {
            return None;
        }
    }
    let removed = VertexSet::new(cycles.iter().flat_map(|c| c.vertices()[1..].iter().copied()));
    let (tree, map) = graph.delete_vertices(&removed).ok()?;
    let certificate = is_one_deficient_tree(&tree).ok()?;
    if !certificate.one_deficient {
        return None;
    }
    Some(TreeWithCycles {
        tree,
        tree_vertices: map.survivors().to_vec(),
        cycles,
    })
}

fn touching_cycles(graph: &SignedGraph, s: &StructureSummary) -> Option<InfinityShape> {
    let shape = infinity_from(graph, s)?;
    (shape.path_order() == 1 && shape.cycles.iter().all(|c| c.nullity() == 2)).then_some(shape)
}

fn theta_witness(graph: &SignedGraph, shape: ThetaShape) -> Witness {
    let cycle_nullities = shape.cycles(graph).map(|c| c.nullity());
    Witness::Theta { shape, cycle_nullities }
}

fn result(verdict: BoundVerdict, form: ExtremalForm, witness: Witness) -> ClassificationResult {
    ClassificationResult { verdict, form, witness }
}

fn no_form(verdict: BoundVerdict) -> ClassificationResult {
    result(verdict, ExtremalForm::None, Witness::None)
}

/// Recognizes the connected graphs with at least one cycle that satisfy
/// `η = 2c + p − 1`: a one-deficient tree carrying nullity-two cycles on
/// some of its leaves, two nullity-two cycles sharing a vertex, or a theta
/// graph all of whose cycles have nullity two.
pub fn recognize_one_deficient(graph: &SignedGraph) -> Result<ClassificationResult> {
    let s = summarize(graph);
    require_connected_with_cycles(graph, &s)?;
    let verdict = verdict_from(&s, nullity(graph));
    Ok(one_deficient_form(graph, &s, verdict))
}

fn one_deficient_form(graph: &SignedGraph, s: &StructureSummary, verdict: BoundVerdict) -> ClassificationResult {
    if let Some(t) = tree_with_cycles(graph, s) {
        return result(verdict, ExtremalForm::TreeWithCycles, Witness::Tree(t));
    }
    if let Some(shape) = touching_cycles(graph, s) {
        return result(verdict, ExtremalForm::TouchingCycles, Witness::Infinity(shape));
    }
    if let Some(shape) = theta_from(graph, s) {
        let w = theta_witness(graph, shape);
        if let Witness::Theta {
            cycle_nullities: [2, 2, 2],
            ..
        } = w
        {
            return result(verdict, ExtremalForm::Theta, w);
        }
    }
    no_form(verdict)
}

/// Recognizes connected leaf-free graphs with at least three cycles and
/// `η = 2c − 1`: a nullity-two cycle on every leaf of a one-deficient tree.
pub fn recognize_leaf_free(graph: &SignedGraph) -> Result<ClassificationResult> {
    let s = summarize(graph);
    require_connected_with_cycles(graph, &s)?;
    if s.pendants != 0 || s.cyclomatic < 3 {
        return precondition("graph must be leaf-free with at least three cycles");
    }
    let verdict = verdict_from(&s, nullity(graph));
    Ok(leaf_free_form(graph, &s, verdict))
}

fn leaf_free_form(graph: &SignedGraph, s: &StructureSummary, verdict: BoundVerdict) -> ClassificationResult {
    match tree_with_cycles(graph, s) {
        Some(t) if t.cycles.len() == t.tree.pendant_vertices().len() => {
            result(verdict, ExtremalForm::LeafFreeTree, Witness::Tree(t))
        }
        _ => no_form(verdict),
    }
}

/// Recognizes connected leaf-free bicyclic graphs with `η = 3`: two
/// nullity-two cycles joined by a path of odd order, or a theta graph whose
/// three path lengths are even and whose cycles through the shortest path
/// have nullity two. The third cycle's nullity is recorded in the witness.
pub fn recognize_bicyclic(graph: &SignedGraph) -> Result<ClassificationResult> {
    let s = summarize(graph);
    require_connected_with_cycles(graph, &s)?;
    if s.pendants != 0 || s.cyclomatic != 2 {
        return precondition("graph must be leaf-free with exactly two independent cycles");
    }
    let verdict = verdict_from(&s, nullity(graph));
    Ok(bicyclic_form(graph, &s, verdict))
}

fn bicyclic_form(graph: &SignedGraph, s: &StructureSummary, verdict: BoundVerdict) -> ClassificationResult {
    if let Some(shape) = infinity_from(graph, s) {
        if shape.path_order() % 2 == 1 && shape.cycles.iter().all(|c| c.nullity() == 2) {
            return result(verdict, ExtremalForm::Bicyclic, Witness::Infinity(shape));
        }
    } else if let Some(shape) = theta_from(graph, s) {
        let all_even = shape.lengths().iter().all(|l| l % 2 == 0);
        let w = theta_witness(graph, shape);
        if let Witness::Theta {
            cycle_nullities: [2, _, 2],
            ..
        } = w
        {
            if all_even {
                return result(verdict, ExtremalForm::Bicyclic, w);
            }
        }
    }
    no_form(verdict)
}

/// Bound verdict plus the most specific extremal form that applies.
pub fn classify(graph: &SignedGraph) -> Result<ClassificationResult> {
    require_no_small_components(graph)?;
    let s = summarize(graph);
    let verdict = verdict_from(&s, nullity(graph));
    if let Some(cycles) = cycles_of_components(graph).filter(|_| graph.order() > 0) {
        return Ok(result(verdict, ExtremalForm::NullityTwoCycles, Witness::Cycles(cycles)));
    }
    if s.components != 1 || s.cyclomatic == 0 {
        return Ok(no_form(verdict));
    }
    if s.pendants == 0 && s.cyclomatic >= 3 {
        return Ok(leaf_free_form(graph, &s, verdict));
    }
    let general = one_deficient_form(graph, &s, verdict);
    if general.form.is_some() || s.pendants != 0 || s.cyclomatic != 2 {
        return Ok(general);
    }
    Ok(bicyclic_form(graph, &s, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;
    use Sign::{Negative as N, Positive as P};

    fn cycle_edges(vs: &[usize], last: Sign) -> Vec<(usize, usize, Sign)> {
        (0..vs.len())
            .map(|i| {
                let s = if i + 1 == vs.len() { last } else { P };
                (vs[i], vs[(i + 1) % vs.len()], s)
            })
            .collect()
    }

    fn cycle(n: usize, s: Sign) -> SignedGraph {
        SignedGraph::new(n, cycle_edges(&(0..n).collect::<Vec<_>>(), s)).unwrap()
    }

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    // Two positive quadrangles on 0..4 and 4..8 sharing vertex 0 (l = 1) or
    // joined by a path with `extra` inner vertices.
    fn infinity44(order: usize) -> SignedGraph {
        let mut edges = cycle_edges(&[0, 1, 2, 3], P);
        if order == 1 {
            edges.extend(cycle_edges(&[0, 4, 5, 6], P));
            return SignedGraph::new(7, edges).unwrap();
        }
        let b = 4 + order - 2;
        let mut prev = 0;
        for v in 4..b {
            edges.push((prev, v, P));
            prev = v;
        }
        edges.push((prev, b, P));
        edges.extend(cycle_edges(&[b, b + 1, b + 2, b + 3], P));
        SignedGraph::new(b + 4, edges).unwrap()
    }

    fn theta444() -> SignedGraph {
        // Ends 0 and 1; inner vertices 2..=10.
        let mut edges = Vec::new();
        for k in 0..3 {
            let inner: Vec<usize> = (0..3).map(|i| 2 + 3 * k + i).collect();
            edges.push((0, inner[0]));
            edges.push((inner[0], inner[1]));
            edges.push((inner[1], inner[2]));
            edges.push((inner[2], 1));
        }
        SignedGraph::unsigned(11, edges).unwrap()
    }

    #[test]
    fn bound_examples() {
        let v = bound(&cycle(4, P)).unwrap();
        assert_eq!(
            (v.case, v.bound, v.eta, v.slack),
            (BoundCase::LeafFreeCycleDisjoint, 2, 2, 0)
        );
        let v = bound(&path(5)).unwrap();
        assert_eq!((v.case, v.bound, v.eta, v.slack), (BoundCase::WithLeaves, 1, 1, 0));
        let v = bound(&theta444()).unwrap();
        assert_eq!(
            (v.case, v.bound, v.eta, v.slack),
            (BoundCase::LeafFreeSharedCycles, 3, 3, 0)
        );
        assert_eq!(bound(&SignedGraph::empty(1)), Err(Error::SmallComponent(0)));
        assert_eq!(bound(&path(2).with_isolated(1)), Err(Error::SmallComponent(2)));
    }

    #[test]
    fn nullity_two_cycles() {
        let g = cycle(4, P).disjoint_union(&cycle(6, N));
        assert_eq!(recognize_nullity_two_cycles(&g), Ok(true));
        let g = cycle(4, P).disjoint_union(&cycle(6, P));
        assert_eq!(recognize_nullity_two_cycles(&g), Ok(false));
        assert_eq!(recognize_nullity_two_cycles(&path(4)), Ok(false));
        let c = classify(&cycle(4, P).disjoint_union(&cycle(6, N))).unwrap();
        assert_eq!(c.form, ExtremalForm::NullityTwoCycles);
    }

    #[test]
    fn lollipop_on_three_vertex_tree() {
        // P3 = 4-5-0 with a positive quadrangle coalesced at 0.
        let mut edges = cycle_edges(&[0, 1, 2, 3], P);
        edges.extend([(0, 5, P), (5, 4, P)]);
        let g = SignedGraph::new(6, edges).unwrap();
        let r = recognize_one_deficient(&g).unwrap();
        assert_eq!(r.form, ExtremalForm::TreeWithCycles);
        assert_eq!(r.verdict.eta, 2);
        let Witness::Tree(t) = &r.witness else { panic!() };
        assert_eq!(t.tree.order(), 3);
        assert_eq!(t.attachments(), vec![0]);
    }

    #[test]
    fn touching_and_theta_forms() {
        let r = recognize_one_deficient(&infinity44(1)).unwrap();
        assert_eq!(r.form, ExtremalForm::TouchingCycles);
        assert_eq!(r.verdict.eta, 3);
        let r = recognize_one_deficient(&theta444()).unwrap();
        assert_eq!(r.form, ExtremalForm::Theta);
        let c = classify(&theta444()).unwrap();
        assert_eq!(c.form, ExtremalForm::Theta);
        assert!(c.to_string().contains("lengths=4,4,4 cycle_nullities=2,2,2"));
    }

    #[test]
    fn bicyclic_parity() {
        let r = recognize_bicyclic(&infinity44(3)).unwrap();
        assert_eq!(r.form, ExtremalForm::Bicyclic);
        assert_eq!(r.verdict.eta, 3);
        let r = recognize_bicyclic(&infinity44(2)).unwrap();
        assert_eq!(r.form, ExtremalForm::None);
        assert!(r.verdict.eta <= 2);
        assert_eq!(recognize_bicyclic(&theta444()).unwrap().form, ExtremalForm::Bicyclic);
        assert!(recognize_bicyclic(&cycle(4, P)).is_err());
    }

    #[test]
    fn shapes() {
        let s = infinity_shape(&infinity44(3)).unwrap();
        assert_eq!(s.path_order(), 3);
        assert_eq!(s.cycles[0].len(), 4);
        assert!(infinity_shape(&theta444()).is_none());
        let t = theta_shape(&theta444()).unwrap();
        assert_eq!(t.lengths(), [4, 4, 4]);
        assert!(theta_shape(&infinity44(2)).is_none());
        let k4_minus = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(theta_shape(&k4_minus).unwrap().lengths(), [1, 2, 2]);
    }

    #[test]
    fn predicates() {
        assert!(is_one_deficient(&path(5)));
        assert!(!is_one_deficient(&path(4)));
        assert!(is_two_plus_deficient(&path(4)));
        assert!(!is_one_deficient(&cycle(4, P)));
    }
}
