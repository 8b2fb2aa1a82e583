//! Rewrites that preserve nullity (or rank), and a driver that applies them
//! until none is eligible.
//!
//! * switching at a vertex set conjugates the adjacency matrix by a `±1`
//!   diagonal matrix;
//! * deleting a leaf together with its neighbour;
//! * contracting an internal path `v1 … v6` to the single edge `v1v6`
//!   carrying the product of the five path signs;
//! * replacing a pendant cycle of nullity two by a positive quadrangle;
//! * blowing each vertex up into an independent set (rank only).

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{Edge, Sign, SignedGraph, VertexSet};
use crate::linalg::nullity;
use crate::structure::{cyclomatic_number, pendant_cycles, Cycle};

/// Flips the sign of every edge with exactly one endpoint in `set`.
pub fn switch(graph: &SignedGraph, set: &VertexSet) -> Result<SignedGraph> {
    set.check_within(graph.order())?;
    Ok(graph.map_signs(|e| {
        if set.contains(e.u) != set.contains(e.v) {
            e.sign.flipped()
        } else {
            e.sign
        }
    }))
}

/// Deletes the leaf `v` and its neighbour.
pub fn delete_pendant_pair(graph: &SignedGraph, v: usize) -> Result<SignedGraph> {
    graph.check_vertex(v)?;
    if graph.degree(v) != 1 {
        return precondition(format!("vertex {v} has degree {}, not 1", graph.degree(v)));
    }
    let u = graph.neighbors(v)[0].0;
    Ok(graph.delete_vertices(&VertexSet::new([u, v]))?.0)
}

/// Replaces the path `v1 … v6`, whose four inner vertices have degree two,
/// by the edge `v1v6` signed with the product of the path's edge signs.
/// Refused when `v1` and `v6` are already adjacent.
pub fn contract_p6(graph: &SignedGraph, path: [usize; 6]) -> Result<SignedGraph> {
    for &v in &path {
        graph.check_vertex(v)?;
    }
    if VertexSet::new(path).len() != 6 {
        return precondition("the six path vertices must be distinct");
    }
    let mut sign = Sign::Positive;
    for pair in path.windows(2) {
        match graph.sign_between(pair[0], pair[1]) {
            Some(s) => sign = sign * s,
            None => return precondition(format!("{}-{} is not an edge", pair[0], pair[1])),
        }
    }
    if let Some(&bad) = path[1..5].iter().find(|&&v| graph.degree(v) != 2) {
        return precondition(format!("inner vertex {bad} has degree {}, not 2", graph.degree(bad)));
    }
    let (first, last) = (path[0], path[5]);
    if graph.has_edge(first, last) {
        return precondition(format!(
            "{first} and {last} are already adjacent; contraction would create a parallel edge"
        ));
    }
    let (rest, map) = graph.delete_vertices(&VertexSet::new(path[1..5].iter().copied()))?;
    let a = map.new_id(first).expect("path end survives");
    let b = map.new_id(last).expect("path end survives");
    rest.with_edges([(a, b, sign)])
}

/// Replaces a pendant cycle of nullity two by a positive quadrangle hanging
/// from the same major vertex.
pub fn pendant_cycle_to_c4(graph: &SignedGraph, cycle: &Cycle) -> Result<SignedGraph> {
    let cycle = Cycle::new(graph, cycle.vertices().to_vec())?;
    let mut majors = cycle.vertices().iter().copied().filter(|&v| graph.degree(v) != 2);
    let major = match (majors.next(), majors.next()) {
        (Some(x), None) if graph.degree(x) >= 3 => x,
        _ => return precondition("cycle is not pendant: it must have exactly one major vertex"),
    };
    if cycle.nullity() != 2 {
        return precondition(format!(
            "a {} cycle of length {} has nullity 0, not 2",
            if cycle.sign().is_positive() {
                "positive"
            } else {
                "negative"
            },
            cycle.len()
        ));
    }
    let removed = VertexSet::new(cycle.vertices().iter().copied().filter(|&v| v != major));
    let (rest, map) = graph.delete_vertices(&removed)?;
    let x = map.new_id(major).expect("major vertex survives");
    let base = rest.order();
    let quad = rest.with_isolated(3);
    let (a, b, c) = (base, base + 1, base + 2);
    quad.with_edges([
        (x, a, Sign::Positive),
        (a, b, Sign::Positive),
        (b, c, Sign::Positive),
        (c, x, Sign::Positive),
    ])
}

/// Replaces vertex `i` by `multiplicities[i]` independent copies; copies of
/// adjacent vertices are joined with the original edge's sign. Copies of
/// vertex `i` are numbered consecutively, in vertex order.
pub fn blow_up(graph: &SignedGraph, multiplicities: &[usize]) -> Result<SignedGraph> {
    if multiplicities.len() != graph.order() {
        return invalid(format!(
            "expected {} multiplicities, got {}",
            graph.order(),
            multiplicities.len()
        ));
    }
    if let Some(v) = multiplicities.iter().position(|&m| m == 0) {
        return invalid(format!("vertex {v} has multiplicity zero"));
    }
    let mut first = Vec::with_capacity(graph.order());
    let mut total = 0;
    for &m in multiplicities {
        first.push(total);
        total += m;
    }
    let mut edges = Vec::new();
    for e in graph.edges() {
        for i in 0..multiplicities[e.u] {
            for j in 0..multiplicities[e.v] {
                edges.push(Edge {
                    u: first[e.u] + i,
                    v: first[e.v] + j,
                    sign: e.sign,
                });
            }
        }
    }
    edges.sort_unstable();
    Ok(SignedGraph::from_sorted(total, edges))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    PendantPairDelete,
    P6Contract,
    PendantCycleToC4,
    Switch,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::PendantPairDelete => "pendant_pair_delete",
            Rule::P6Contract => "p6_contract",
            Rule::PendantCycleToC4 => "pendant_cycle_to_c4",
            Rule::Switch => "switch",
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rule> {
        [
            Rule::PendantPairDelete,
            Rule::P6Contract,
            Rule::PendantCycleToC4,
            Rule::Switch,
        ]
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown rule `{s}`")))
    }
}

/// One applied rewrite. Vertex ids refer to the graph the step was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub vertices: Vec<usize>,
    pub nullity_before: usize,
    pub nullity_after: usize,
}

/// `<rule> <vertices...> <eta>`
impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule.name())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, " {}", self.nullity_after)
    }
}

impl FromStr for ReductionStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReductionStep> {
        let mut tokens = s.split_whitespace();
        let rule = tokens
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty step".into()))?
            .parse()?;
        let mut numbers = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad number `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let eta = numbers
            .pop()
            .ok_or_else(|| Error::InvalidParameter("step is missing its nullity".into()))?;
        Ok(ReductionStep {
            rule,
            vertices: numbers,
            nullity_before: eta,
            nullity_after: eta,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: SignedGraph,
    pub steps: Vec<ReductionStep>,
    pub final_graph: SignedGraph,
}

impl ReductionTrace {
    /// Re-applies the recorded steps to the initial graph.
    pub fn replay(&self) -> Result<SignedGraph> {
        replay(&self.initial, &self.steps)
    }

    pub fn preserves_nullity(&self) -> bool {
        self.steps.iter().all(|s| s.nullity_before == s.nullity_after)
    }
}

/// One step per line.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

pub fn apply_step(graph: &SignedGraph, rule: Rule, vertices: &[usize]) -> Result<SignedGraph> {
    match rule {
        Rule::PendantPairDelete => match vertices {
            [leaf, neighbor] if graph.neighbors(*leaf).first().map(|p| p.0) == Some(*neighbor) => {
                delete_pendant_pair(graph, *leaf)
            }
            [leaf] => delete_pendant_pair(graph, *leaf),
            _ => invalid("pendant pair step takes the leaf and its neighbour"),
        },
        Rule::P6Contract => {
            let path: [usize; 6] = vertices
                .try_into()
                .map_err(|_| Error::InvalidParameter("contraction takes six vertices".into()))?;
            contract_p6(graph, path)
        }
        Rule::PendantCycleToC4 => pendant_cycle_to_c4(graph, &Cycle::new(graph, vertices.to_vec())?),
        Rule::Switch => switch(graph, &VertexSet::new(vertices.iter().copied())),
    }
}

pub fn replay(initial: &SignedGraph, steps: &[ReductionStep]) -> Result<SignedGraph> {
    steps
        .iter()
        .try_fold(initial.clone(), |g, s| apply_step(&g, s.rule, &s.vertices))
}

/// Lexicographically least six-vertex path whose inner vertices have degree
/// two and whose ends are distinct and non-adjacent.
pub fn find_p6(graph: &SignedGraph) -> Option<[usize; 6]> {
    for v1 in 0..graph.order() {
        'start: for &(v2, _) in graph.neighbors(v1) {
            let mut path = [v1, v2, 0, 0, 0, 0];
            for i in 1..5 {
                let cur = path[i];
                if graph.degree(cur) != 2 {
                    continue 'start;
                }
                let prev = path[i - 1];
                path[i + 1] = graph
                    .neighbors(cur)
                    .iter()
                    .map(|&(w, _)| w)
                    .find(|&w| w != prev)
                    .expect("degree-2 vertex has another neighbour");
            }
            if VertexSet::new(path).len() == 6 && !graph.has_edge(path[0], path[5]) {
                return Some(path);
            }
        }
    }
    None
}

fn next_step(graph: &SignedGraph) -> Option<(Rule, Vec<usize>)> {
    if let Some(leaf) = (0..graph.order()).find(|&v| graph.degree(v) == 1) {
        return Some((Rule::PendantPairDelete, vec![leaf, graph.neighbors(leaf)[0].0]));
    }
    if let Some(path) = find_p6(graph) {
        return Some((Rule::P6Contract, path.to_vec()));
    }
    pendant_cycles(graph)
        .into_iter()
        .find(|c| c.nullity() == 2 && c.len() != 4)
        .map(|c| (Rule::PendantCycleToC4, c.vertices().to_vec()))
}

/// Applies, in priority order, pendant-pair deletion at the smallest leaf,
/// P6 contraction at the least eligible path, and quadrangle normalization
/// at the pendant cycle with the smallest major vertex, until none applies.
/// Every rule lowers the vertex count, so the loop terminates.
pub fn reduce(graph: &SignedGraph) -> ReductionTrace {
    let mut current = graph.clone();
    let mut eta = nullity(&current);
    let mut steps = Vec::new();
    while let Some((rule, vertices)) = next_step(&current) {
        let next = apply_step(&current, rule, &vertices).expect("eligible steps apply");
        let after = nullity(&next);
        steps.push(ReductionStep {
            rule,
            vertices,
            nullity_before: eta,
            nullity_after: after,
        });
        current = next;
        eta = after;
    }
    ReductionTrace {
        initial: graph.clone(),
        steps,
        final_graph: current,
    }
}

/// Upper bound on the number of steps `reduce` may take on `graph`.
pub fn step_budget(graph: &SignedGraph) -> usize {
    graph.order() + cyclomatic_number(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::graph_rank;
    use Sign::{Negative as N, Positive as P};

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize, last: Sign) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, if i == n - 1 { last } else { P }))).unwrap()
    }

    // Cycle of length `len` on 0..len with a pendant path of `tail` extra
    // vertices hanging from vertex 0.
    fn lollipop(len: usize, last: Sign, tail: usize) -> SignedGraph {
        let c = cycle(len, last);
        let mut edges: Vec<(usize, usize, Sign)> = c.edges().iter().map(|e| (e.u, e.v, e.sign)).collect();
        let mut prev = 0;
        for i in 0..tail {
            edges.push((prev, len + i, P));
            prev = len + i;
        }
        SignedGraph::new(len + tail, edges).unwrap()
    }

    #[test]
    fn switching_basics() {
        let g = cycle(5, N);
        assert_eq!(switch(&g, &VertexSet::empty()).unwrap(), g);
        assert_eq!(switch(&g, &VertexSet::all(5)).unwrap(), g);
        let k2n = SignedGraph::new(2, [(0, 1, N)]).unwrap();
        assert_eq!(switch(&k2n, &VertexSet::new([0])).unwrap(), path(2));
        assert!(switch(&g, &VertexSet::new([7])).is_err());
    }

    #[test]
    fn pendant_pairs() {
        assert_eq!(delete_pendant_pair(&path(4), 0).unwrap(), path(2));
        assert_eq!(delete_pendant_pair(&path(2), 0).unwrap().order(), 0);
        let lolly = lollipop(4, P, 1);
        let reduced = delete_pendant_pair(&lolly, 4).unwrap();
        assert_eq!(reduced, path(3));
        assert_eq!(nullity(&lolly), nullity(&reduced));
        assert!(delete_pendant_pair(&lolly, 1).is_err());
    }

    #[test]
    fn contraction_of_six_vertex_paths() {
        let c8 = cycle(8, P);
        let c4 = contract_p6(&c8, [0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!((nullity(&c8), nullity(&c4)), (2, 2));

        let p8 = path(8);
        let p4 = contract_p6(&p8, [1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!((nullity(&p8), nullity(&p4)), (0, 0));

        let c8n = cycle(8, P).map_signs(|e| if (e.u, e.v) == (2, 3) { N } else { P });
        let c4n = contract_p6(&c8n, [0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c4n.edges().iter().filter(|e| e.sign == N).count(), 1);
        assert_eq!((nullity(&c8n), nullity(&c4n)), (0, 0));

        assert!(contract_p6(&cycle(6, P), [0, 1, 2, 3, 4, 5]).is_err());
        assert!(contract_p6(&path(8), [0, 1, 2, 3, 4, 6]).is_err());
        let branched = lollipop(8, P, 1);
        assert!(contract_p6(&branched, [7, 0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn quadrangle_normalization() {
        let g = lollipop(8, P, 1);
        let c = pendant_cycles(&g).remove(0);
        let h = pendant_cycle_to_c4(&g, &c).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(nullity(&g), nullity(&h));

        let g = lollipop(6, N, 2);
        let c = pendant_cycles(&g).remove(0);
        let h = pendant_cycle_to_c4(&g, &c).unwrap();
        assert!(h.edges().iter().all(|e| e.sign == P));
        assert_eq!(nullity(&g), nullity(&h));

        let g = lollipop(6, P, 1);
        let c = pendant_cycles(&g).remove(0);
        assert!(pendant_cycle_to_c4(&g, &c).is_err());

        let bare = cycle(8, P);
        let c = Cycle::new(&bare, (0..8).collect()).unwrap();
        assert!(pendant_cycle_to_c4(&bare, &c).is_err());
    }

    #[test]
    fn blow_ups() {
        let g = cycle(5, N);
        assert_eq!(blow_up(&g, &[1; 5]).unwrap(), g);
        let k2 = path(2);
        let b = blow_up(&k2, &[2, 1]).unwrap();
        assert_eq!(b, SignedGraph::unsigned(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(graph_rank(&b), 2);
        let b = blow_up(&k2, &[2, 2]).unwrap();
        assert_eq!(b.size(), 4);
        assert_eq!(graph_rank(&b), 2);
        assert!(blow_up(&k2, &[0, 1]).is_err());
        assert!(blow_up(&k2, &[1]).is_err());
    }

    #[test]
    fn reduce_paths_and_cycles() {
        let t = reduce(&path(6));
        assert_eq!(t.steps.len(), 3);
        assert!(t.steps.iter().all(|s| s.rule == Rule::PendantPairDelete));
        assert_eq!(t.final_graph.order(), 0);

        let c4 = cycle(4, P);
        let t = reduce(&c4);
        assert!(t.steps.is_empty());
        assert_eq!(t.final_graph, c4);
    }

    #[test]
    fn reduce_normalizes_pendant_cycle() {
        // P3 with a positive C8 hung from one end.
        let g = lollipop(8, P, 2);
        let t = reduce(&g);
        assert!(t.preserves_nullity());
        assert_eq!(t.replay().unwrap(), t.final_graph);
        assert_eq!(t.steps[0].rule, Rule::PendantPairDelete);
        assert!(t.steps.len() <= step_budget(&g));
        assert_eq!(nullity(&t.final_graph), nullity(&g));
        assert_eq!(reduce(&g), t);
    }

    #[test]
    fn step_log_round_trip() {
        let t = reduce(&lollipop(10, N, 3));
        let parsed: Vec<ReductionStep> = t.to_string().lines().map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, t.steps);
        assert_eq!(replay(&t.initial, &parsed).unwrap(), t.final_graph);
        assert!("bogus 1 2".parse::<ReductionStep>().is_err());
        assert!("switch".parse::<ReductionStep>().is_err());
    }
}
