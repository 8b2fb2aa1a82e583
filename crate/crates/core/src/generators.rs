//! Builders for paths, cycles, the two bicyclic families, graph compositions
//! and seeded random graphs.
//!
//! Sign conventions: a cycle's sign class is carried by its closing edge and
//! every other edge is positive; connecting paths and join edges are
//! positive. Switching can move the signs anywhere without changing the
//! spectrum.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, precondition, Error, Result};
use crate::graph::{Sign, SignedGraph, VertexSet};
use crate::linalg::{nullity, signed_cycle_nullity};
use crate::matching::is_covered;
use crate::structure::{is_tree, pendant_count};

type EdgeList = Vec<(usize, usize, Sign)>;

fn edge_list(graph: &SignedGraph) -> EdgeList {
    graph.edges().iter().map(|e| (e.u, e.v, e.sign)).collect()
}

/// Path `0 − 1 − … − (n−1)`; `signs[i]` is the sign of edge `(i, i+1)`.
pub fn path(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if n == 0 {
        return invalid("a path needs at least one vertex");
    }
    if signs.len() != n - 1 {
        return invalid(format!(
            "a path of order {n} has {} edges, got {} signs",
            n - 1,
            signs.len()
        ));
    }
    SignedGraph::new(n, signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)))
}

pub fn positive_path(n: usize) -> Result<SignedGraph> {
    path(n, &vec![Sign::Positive; n.saturating_sub(1)])
}

fn cycle_on(vertices: &[usize], sign: Sign) -> EdgeList {
    let k = vertices.len();
    (0..k)
        .map(|i| {
            let s = if i + 1 == k { sign } else { Sign::Positive };
            (vertices[i], vertices[(i + 1) % k], s)
        })
        .collect()
}

/// Cycle on `0..n` whose closing edge `(n−1, 0)` carries `sign`.
pub fn cycle(n: usize, sign: Sign) -> Result<SignedGraph> {
    if n < 3 {
        return invalid(format!("a cycle needs at least three vertices, got {n}"));
    }
    SignedGraph::new(n, cycle_on(&(0..n).collect::<Vec<_>>(), sign))
}

/// Cycles `C_p` and `C_q` joined by a positive path of order `l`; for
/// `l = 1` the two cycles share a vertex. `C_p` lies on `0..p` and meets
/// the path at 0.
pub fn infty(p: usize, q: usize, l: usize, sign_p: Sign, sign_q: Sign) -> Result<SignedGraph> {
    if p < 3 || q < 3 || l < 1 {
        return invalid(format!("infty needs p, q ≥ 3 and l ≥ 1, got ({p}, {q}, {l})"));
    }
    let mut edges = cycle_on(&(0..p).collect::<Vec<_>>(), sign_p);
    let mut end = 0;
    for v in p..p + l - 1 {
        edges.push((end, v, Sign::Positive));
        end = v;
    }
    let next = p + l - 1;
    let second: Vec<usize> = std::iter::once(end).chain(next..next + q - 1).collect();
    edges.extend(cycle_on(&second, sign_q));
    SignedGraph::new(p + q + l - 2, edges)
}

/// Three internally disjoint paths of lengths `p`, `q`, `l` between vertices
/// 0 and 1. `signs.0` is the sign of the cycle through the first two paths,
/// `signs.1` that of the cycle through the last two.
pub fn theta(p: usize, q: usize, l: usize, signs: (Sign, Sign)) -> Result<SignedGraph> {
    let lengths = [p, q, l];
    if lengths.contains(&0) || lengths.iter().filter(|&&x| x == 1).count() > 1 {
        return invalid(format!(
            "theta needs lengths ≥ 1 with at most one equal to 1, got ({p}, {q}, {l})"
        ));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for (i, &len) in lengths.iter().enumerate() {
        let first_sign = match i {
            0 => signs.0,
            2 => signs.1,
            _ => Sign::Positive,
        };
        let mut prev = 0;
        for step in 0..len {
            let v = if step + 1 == len { 1 } else { next };
            let s = if step == 0 { first_sign } else { Sign::Positive };
            edges.push((prev, v, s));
            if v != 1 {
                next += 1;
            }
            prev = v;
        }
    }
    SignedGraph::new(next, edges)
}

pub fn star(leaves: usize) -> SignedGraph {
    SignedGraph::unsigned(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
}

/// Paths of the given lengths hanging from centre 0.
pub fn spider(legs: &[usize]) -> SignedGraph {
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
    SignedGraph::unsigned(next, edges).expect("spider edges are valid")
}

/// Glues vertex `u` of `k` onto vertex `v` of `h`. Vertices of `h` keep their
/// ids; the rest of `k` follows in order.
pub fn coalesce(h: &SignedGraph, v: usize, k: &SignedGraph, u: usize) -> Result<SignedGraph> {
    h.check_vertex(v)?;
    k.check_vertex(u)?;
    let base = h.order();
    let map = |w: usize| match w.cmp(&u) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Less => base + w,
        std::cmp::Ordering::Greater => base + w - 1,
    };
    let mut edges = edge_list(h);
    edges.extend(k.edges().iter().map(|e| (map(e.u), map(e.v), e.sign)));
    SignedGraph::new(base + k.order() - 1, edges)
}

/// Joins vertex `v` of `h` and vertex `u` of `k` by a positive path of order
/// `m ≥ 2`. `k` is shifted by `h.order()`, and the `m − 2` inner path
/// vertices come last.
pub fn path_join(h: &SignedGraph, v: usize, k: &SignedGraph, u: usize, m: usize) -> Result<SignedGraph> {
    h.check_vertex(v)?;
    k.check_vertex(u)?;
    if m < 2 {
        return invalid(format!("connecting path must have order ≥ 2, got {m}"));
    }
    let union = h.disjoint_union(k);
    let base = union.order();
    let joined = union.with_isolated(m - 2);
    let stops: Vec<usize> = std::iter::once(v)
        .chain(base..base + m - 2)
        .chain(std::iter::once(h.order() + u))
        .collect();
    joined.with_edges(stops.windows(2).map(|w| (w[0], w[1], Sign::Positive)))
}

/// `T ∪ Γ` plus positive edges from tree vertex `u` to each target of `g`.
/// The tree keeps its ids and `g` is shifted by `t.order()`.
pub fn tree_join(t: &SignedGraph, u: usize, g: &SignedGraph, targets: &VertexSet) -> Result<SignedGraph> {
    if !is_tree(t) {
        return Err(Error::NotTree);
    }
    t.check_vertex(u)?;
    targets.check_within(g.order())?;
    if targets.is_empty() {
        return invalid("tree join needs at least one target");
    }
    let base = t.order();
    t.disjoint_union(g)
        .with_edges(targets.iter().map(|w| (u, base + w, Sign::Positive)))
}

/// Adds a path of order `m ≥ 2` whose end vertices are the distinct
/// vertices `a` and `b` of `h`. The first path edge carries `sign`; new
/// vertices come last. For `m = 2` this adds the edge `ab`.
pub fn ear(h: &SignedGraph, a: usize, b: usize, m: usize, sign: Sign) -> Result<SignedGraph> {
    h.check_vertex(a)?;
    h.check_vertex(b)?;
    if a == b {
        return invalid("ear ends must be distinct");
    }
    if m < 2 {
        return invalid(format!("ear must have order ≥ 2, got {m}"));
    }
    let base = h.order();
    let stops: Vec<usize> = std::iter::once(a)
        .chain(base..base + m - 2)
        .chain(std::iter::once(b))
        .collect();
    h.with_isolated(m - 2).with_edges(
        stops
            .windows(2)
            .enumerate()
            .map(|(i, w)| (w[0], w[1], if i == 0 { sign } else { Sign::Positive })),
    )
}

/// Attaches a nullity-two cycle at each listed leaf of a tree with
/// `η(T) = p(T) − 1`. Cycle `i` is given as `(length, sign)` and goes on
/// `leaves[i]`; the new cycle vertices come last, cycle by cycle.
pub fn form1(t: &SignedGraph, leaves: &[usize], cycle_specs: &[(usize, Sign)]) -> Result<SignedGraph> {
    if !is_tree(t) {
        return Err(Error::NotTree);
    }
    if t.order() < 2 || nullity(t) + 1 != pendant_count(t) {
        return precondition("tree must satisfy η(T) = p(T) − 1");
    }
    if leaves.is_empty() || leaves.len() != cycle_specs.len() {
        return invalid("need one cycle spec per attachment leaf, and at least one");
    }
    if VertexSet::new(leaves.iter().copied()).len() != leaves.len() {
        return invalid("attachment leaves must be distinct");
    }
    let mut graph = t.clone();
    for (&leaf, &(len, sign)) in leaves.iter().zip(cycle_specs) {
        t.check_vertex(leaf)?;
        if t.degree(leaf) != 1 {
            return precondition(format!("vertex {leaf} is not a leaf of the tree"));
        }
        if len < 3 || signed_cycle_nullity(len, sign) != 2 {
            return precondition(format!("a {sign} cycle of length {len} does not have nullity 2"));
        }
        graph = coalesce(&graph, leaf, &cycle(len, sign)?, 0)?;
    }
    Ok(graph)
}

/// `G(n, prob)` with independent uniform signs; deterministic in `seed`.
pub fn random_signed(n: usize, prob: f64, seed: u64) -> Result<SignedGraph> {
    if !(0.0..=1.0).contains(&prob) {
        return invalid(format!("edge probability {prob} is not in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(prob) {
                edges.push((u, v, random_sign(&mut rng)));
            }
        }
    }
    SignedGraph::new(n, edges)
}

pub fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Replaces every sign by an independent uniform one.
pub fn randomize_signs<R: Rng + ?Sized>(graph: &SignedGraph, rng: &mut R) -> SignedGraph {
    graph.map_signs(|_| random_sign(rng))
}

/// Uniform labelled tree on `n ≥ 1` vertices (via a random Prüfer
/// sequence), all edges positive.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SignedGraph {
    if n <= 2 {
        return positive_path(n.max(1)).expect("order is positive");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two vertices remain");
    let b = leaves.pop_first().expect("two vertices remain");
    edges.push((a, b));
    SignedGraph::unsigned(n, edges).expect("Prüfer decoding yields a tree")
}

/// A random tree plus each remaining pair as an edge with probability
/// `extra`, all signs uniform.
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra: f64, rng: &mut R) -> SignedGraph {
    let tree = random_tree(n, rng);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(extra) {
                edges.push((u, v, Sign::Positive));
            }
        }
    }
    let g = tree.with_edges(edges).expect("new pairs are not tree edges");
    randomize_signs(&g, rng)
}

/// A random tree with exactly `leaves ≥ 2` leaves and `η(T) = p(T) − 1`, of
/// order at most `max_order`, certified by exact rank. Grown from a path of
/// odd order by hanging odd-length paths on covered inner vertices.
/// Returns `None` if no attempt succeeds.
pub fn random_one_deficient_tree<R: Rng + ?Sized>(leaves: usize, max_order: usize, rng: &mut R) -> Option<SignedGraph> {
    if leaves < 2 {
        return None;
    }
    'attempt: for _ in 0..200 {
        let mut tree = positive_path(*[3, 3, 5, 7].choose(rng)?).ok()?;
        while pendant_count(&tree) < leaves {
            let inner: Vec<usize> = (0..tree.order())
                .filter(|&v| tree.degree(v) >= 2 && is_covered(&tree, v).unwrap_or(false))
                .collect();
            let &anchor = inner.choose(rng)?;
            let len = *[1, 1, 1, 3, 3, 5].choose(rng)?;
            if tree.order() + len > max_order {
                continue 'attempt;
            }
            tree = coalesce(&tree, anchor, &positive_path(len + 1).ok()?, 0).ok()?;
        }
        if nullity(&tree) + 1 == pendant_count(&tree) {
            return Some(randomize_signs(&tree, rng));
        }
    }
    None
}

fn center_encodings(tree: &SignedGraph) -> String {
    let n = tree.order();
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &(w, _) in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(tree: &SignedGraph, v: usize, parent: usize) -> String {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, _)| encode(tree, w, v))
            .collect();
        children.sort_unstable();
        format!("({})", children.concat())
    }
    layer
        .iter()
        .map(|&c| encode(tree, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// Every unlabelled tree on `n ≥ 1` vertices, once each, all edges positive.
pub fn trees(n: usize) -> Vec<SignedGraph> {
    let mut current = vec![SignedGraph::empty(1)];
    for order in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..t.order() {
                let grown = t
                    .with_isolated(1)
                    .with_edges([(v, order - 1, Sign::Positive)])
                    .expect("new leaf edge is fresh");
                if seen.insert(center_encodings(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        current
    }
}

/// Flat text form of a generator call: `family key=value ...`.
///
/// ```text
/// path n=5 signs=++-+
/// cycle n=6 sign=-
/// infty p=4 q=4 l=3 signs=++
/// theta p=4 q=4 l=4 signs=++
/// star k=3
/// spider legs=1,3,3
/// form1 legs=1,1,1 cycles=4+,4+,6-
/// coalesce h=C4+ v=0 k=P3 u=0
/// path_join h=C4+ v=0 k=C4+ u=0 m=3
/// tree_join t=P3 u=1 g=C4+ targets=0,2
/// random n=8 p=0.3 seed=7
/// ```
///
/// Operands of the compositions are atoms: `P<n>` (positive path), `C<n><±>`
/// (cycle with that sign), `S<k>` (star with `k` leaves). `form1` builds a
/// spider with the given legs and attaches the cycles, in order, at its
/// leaves in increasing id order.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: String,
    pub params: Vec<(String, String)>,
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut tokens = s.split_whitespace();
        let family = tokens
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty family spec".into()))?
            .to_string();
        let params = tokens
            .map(|t| {
                t.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, found `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { family, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

fn bad<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(message.into()))
}

fn parse_signs(text: &str) -> Result<Vec<Sign>> {
    text.chars()
        .map(|c| Sign::from_symbol(c).ok_or_else(|| Error::InvalidParameter(format!("bad sign `{c}`"))))
        .collect()
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().or_else(|_| bad(format!("bad number `{t}`"))))
        .collect()
}

fn parse_cycle_spec(text: &str) -> Result<(usize, Sign)> {
    let sign = text
        .chars()
        .last()
        .and_then(Sign::from_symbol)
        .ok_or_else(|| Error::InvalidParameter(format!("cycle `{text}` must end in + or -")))?;
    let len = text[..text.len() - 1]
        .parse()
        .or_else(|_| bad(format!("bad cycle length in `{text}`")))?;
    Ok((len, sign))
}

fn parse_atom(text: &str) -> Result<SignedGraph> {
    let (head, rest) = text.split_at(text.chars().next().map_or(0, char::len_utf8));
    match head {
        "P" => positive_path(rest.parse().or_else(|_| bad(format!("bad atom `{text}`")))?),
        "S" => Ok(star(rest.parse().or_else(|_| bad(format!("bad atom `{text}`")))?)),
        "C" => {
            let (len, sign) = parse_cycle_spec(rest)?;
            cycle(len, sign)
        }
        _ => bad(format!("unknown atom `{text}`; expected P<n>, C<n><sign> or S<k>")),
    }
}

impl FamilySpec {
    fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::InvalidParameter(format!("{} needs `{key}=`", self.family)))
    }

    fn number(&self, key: &str) -> Result<usize> {
        let v = self.require(key)?;
        v.parse().or_else(|_| bad(format!("`{key}={v}` is not a count")))
    }

    fn sign_pair(&self) -> Result<(Sign, Sign)> {
        match parse_signs(self.get("signs").unwrap_or("++"))?.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => bad("`signs=` takes two signs, e.g. signs=+-"),
        }
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => bad(format!("{} does not take `{k}=`", self.family)),
            None => Ok(()),
        }
    }

    pub fn build(&self) -> Result<SignedGraph> {
        match self.family.as_str() {
            "path" => {
                self.check_keys(&["n", "signs"])?;
                let n = self.number("n")?;
                match self.get("signs") {
                    Some(s) => path(n, &parse_signs(s)?),
                    None => positive_path(n),
                }
            }
            "cycle" => {
                self.check_keys(&["n", "sign"])?;
                let sign = parse_signs(self.get("sign").unwrap_or("+"))?;
                match sign.as_slice() {
                    &[s] => cycle(self.number("n")?, s),
                    _ => bad("`sign=` takes one sign"),
                }
            }
            "infty" => {
                self.check_keys(&["p", "q", "l", "signs"])?;
                let (a, b) = self.sign_pair()?;
                infty(self.number("p")?, self.number("q")?, self.number("l")?, a, b)
            }
            "theta" => {
                self.check_keys(&["p", "q", "l", "signs"])?;
                theta(
                    self.number("p")?,
                    self.number("q")?,
                    self.number("l")?,
                    self.sign_pair()?,
                )
            }
            "star" => {
                self.check_keys(&["k"])?;
                Ok(star(self.number("k")?))
            }
            "spider" => {
                self.check_keys(&["legs"])?;
                Ok(spider(&parse_list(self.require("legs")?)?))
            }
            "form1" => {
                self.check_keys(&["legs", "cycles"])?;
                let tree = spider(&parse_list(self.require("legs")?)?);
                let specs = self
                    .require("cycles")?
                    .split(',')
                    .map(parse_cycle_spec)
                    .collect::<Result<Vec<_>>>()?;
                let leaves = tree.pendant_vertices();
                if specs.len() > leaves.len() {
                    return bad(format!("{} cycles but only {} leaves", specs.len(), leaves.len()));
                }
                form1(&tree, &leaves[..specs.len()], &specs)
            }
            "coalesce" => {
                self.check_keys(&["h", "v", "k", "u"])?;
                coalesce(
                    &parse_atom(self.require("h")?)?,
                    self.number("v")?,
                    &parse_atom(self.require("k")?)?,
                    self.number("u")?,
                )
            }
            "path_join" => {
                self.check_keys(&["h", "v", "k", "u", "m"])?;
                path_join(
                    &parse_atom(self.require("h")?)?,
                    self.number("v")?,
                    &parse_atom(self.require("k")?)?,
                    self.number("u")?,
                    self.number("m")?,
                )
            }
            "tree_join" => {
                self.check_keys(&["t", "u", "g", "targets"])?;
                tree_join(
                    &parse_atom(self.require("t")?)?,
                    self.number("u")?,
                    &parse_atom(self.require("g")?)?,
                    &VertexSet::new(parse_list(self.require("targets")?)?),
                )
            }
            "random" => {
                self.check_keys(&["n", "p", "seed"])?;
                let p = self.require("p")?;
                let prob = p.parse().or_else(|_| bad(format!("`p={p}` is not a probability")))?;
                let seed = self.get("seed").unwrap_or("0");
                let seed = seed
                    .parse()
                    .or_else(|_| bad(format!("`seed={seed}` is not an integer")))?;
                random_signed(self.number("n")?, prob, seed)
            }
            other => bad(format!("unknown family `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{cyclomatic_number, pendant_cycles, simple_cycles};
    use Sign::{Negative as N, Positive as P};

    #[test]
    fn basic_families() {
        assert_eq!(nullity(&cycle(4, P).unwrap()), 2);
        assert_eq!(nullity(&cycle(6, N).unwrap()), 2);
        assert_eq!(nullity(&path(3, &[P, P]).unwrap()), 1);
        assert!(cycle(2, P).is_err());
        assert!(path(0, &[]).is_err());
        assert!(path(3, &[P]).is_err());
        let c = cycle(5, N).unwrap();
        assert_eq!(c.sign_between(0, 4), Some(N));
    }

    #[test]
    fn infinity_graphs() {
        let g = infty(4, 4, 1, P, P).unwrap();
        assert_eq!((g.order(), cyclomatic_number(&g)), (7, 2));
        assert_eq!(nullity(&g), 3);
        let g = infty(4, 4, 2, P, P).unwrap();
        assert!(nullity(&g) <= 2);
        let g = infty(3, 3, 1, P, P).unwrap();
        assert_eq!((cyclomatic_number(&g), pendant_count(&g)), (2, 0));
        let g = infty(4, 5, 4, P, N).unwrap();
        assert_eq!(g.order(), 11);
        let signs: Vec<Sign> = simple_cycles(&g).iter().map(|c| c.sign()).collect();
        assert_eq!(signs.iter().filter(|&&s| s == N).count(), 1);
        assert!(infty(2, 4, 1, P, P).is_err());
        assert!(infty(4, 4, 0, P, P).is_err());
    }

    #[test]
    fn theta_graphs() {
        let g = theta(4, 4, 4, (P, P)).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(nullity(&g), 3);
        let g = theta(2, 2, 2, (P, P)).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert!(theta(1, 1, 3, (P, P)).is_err());
        let g = theta(1, 2, 3, (N, P)).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        let mut lens_signs: Vec<(usize, Sign)> = simple_cycles(&g).iter().map(|c| (c.len(), c.sign())).collect();
        lens_signs.sort();
        assert_eq!(lens_signs, vec![(3, N), (4, N), (5, P)]);
    }

    #[test]
    fn compositions() {
        let lolly = coalesce(&cycle(4, P).unwrap(), 0, &positive_path(2).unwrap(), 1).unwrap();
        assert_eq!((lolly.order(), lolly.size()), (5, 5));
        let g = cycle(5, N).unwrap();
        assert_eq!(coalesce(&g, 3, &SignedGraph::empty(1), 0).unwrap(), g);

        let k2 = positive_path(2).unwrap();
        assert_eq!(path_join(&k2, 1, &k2, 0, 2).unwrap(), positive_path(4).unwrap());
        let c4 = cycle(4, P).unwrap();
        let inf = path_join(&c4, 0, &c4, 0, 2).unwrap();
        assert_eq!(inf.order(), 8);
        assert_eq!(nullity(&inf), nullity(&infty(4, 4, 2, P, P).unwrap()));
        assert!(path_join(&k2, 0, &k2, 0, 1).is_err());

        let j = tree_join(&k2, 0, &c4, &VertexSet::all(4)).unwrap();
        assert_eq!(j.size(), 1 + 4 + 4);
        assert!(tree_join(&c4, 0, &k2, &VertexSet::new([0])).is_err());
        assert!(tree_join(&k2, 0, &c4, &VertexSet::empty()).is_err());

        let e = ear(&positive_path(3).unwrap(), 0, 2, 2, N).unwrap();
        assert_eq!(e, cycle(3, N).unwrap());
        assert!(ear(&positive_path(3).unwrap(), 0, 1, 2, P).is_err());
    }

    #[test]
    fn form1_graphs() {
        let p3 = positive_path(3).unwrap();
        let g = form1(&p3, &[0], &[(4, P)]).unwrap();
        assert_eq!(nullity(&g), 2);
        let s = spider(&[1, 1, 1]);
        let g = form1(&s, &[1, 2, 3], &[(4, P); 3]).unwrap();
        assert_eq!(nullity(&g), 5);
        assert_eq!(pendant_cycles(&g).len(), 3);
        assert!(form1(&s, &[1, 2, 3], &[(4, P), (4, P), (6, P)]).is_err());
        assert!(form1(&s, &[0], &[(4, P)]).is_err());
        assert!(form1(&positive_path(4).unwrap(), &[0], &[(4, P)]).is_err());
    }

    #[test]
    fn random_graphs() {
        assert_eq!(random_signed(6, 0.0, 1).unwrap().size(), 0);
        assert_eq!(random_signed(6, 1.0, 1).unwrap().size(), 15);
        assert_eq!(random_signed(9, 0.4, 42).unwrap(), random_signed(9, 0.4, 42).unwrap());
        assert!(random_signed(3, 1.5, 0).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..12 {
            assert!(is_tree(&random_tree(n, &mut rng)));
            assert!(random_connected(n, 0.2, &mut rng).is_connected());
        }
        for leaves in 2..6 {
            let t = random_one_deficient_tree(leaves, 30, &mut rng).unwrap();
            assert_eq!(pendant_count(&t), leaves);
            assert_eq!(nullity(&t) + 1, leaves);
        }
    }

    #[test]
    fn unlabelled_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn spec_text() {
        let build = |s: &str| s.parse::<FamilySpec>().unwrap().build();
        assert_eq!(nullity(&build("cycle n=4 sign=+").unwrap()), 2);
        assert_eq!(nullity(&build("theta p=4 q=4 l=4 signs=++").unwrap()), 3);
        assert_eq!(nullity(&build("form1 legs=1,1,1 cycles=4+,4+,6-").unwrap()), 5);
        assert_eq!(build("coalesce h=C4+ v=0 k=P3 u=0").unwrap().order(), 6);
        assert_eq!(build("path n=3").unwrap(), positive_path(3).unwrap());
        assert!(build("cycle n=4 sign=*").is_err());
        assert!(build("cycle n=4 colour=red").is_err());
        assert!(build("hypercube n=3").is_err());
        assert!("path n".parse::<FamilySpec>().is_err());
        let spec: FamilySpec = "infty p=4 q=4 l=3 signs=+-".parse().unwrap();
        assert_eq!(spec.to_string(), "infty p=4 q=4 l=3 signs=+-");
    }
}
