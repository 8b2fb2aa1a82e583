//! Exhaustive and sampled machine verification.
//!
//! A [`Universe`] describes a set of signed graphs: every labelled
//! underlying graph on `min_n..=max_n` vertices (optionally connected only,
//! optionally up to isomorphism), crossed with either one signing per
//! switching class, all signings, or a seeded random sample. Each
//! registered [`Property`] is run over the universe (or over its own seeded
//! generator, for properties about compositions) and the outcomes are
//! tallied into a [`VerificationReport`].
//!
//! Work is split across rayon workers per underlying graph. Tallies merge
//! associatively and counterexamples are kept sorted, so a report depends
//! only on the universe, the seed and the property selection.

mod manifest;
mod oracles;
mod properties;

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::generators::{random_connected, random_signed};
use crate::graph::{Sign, SignedGraph};

pub use manifest::MANIFEST;
pub use oracles::{covered_by_every_maximum_matching, cycle_space_rank};
pub use properties::{Check, Instance, Outcome, Property, PropertyKind, PROPERTIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMode {
    /// Spanning-forest edges positive, every other edge either sign: one
    /// representative per switching class.
    SwitchingClasses,
    AllSignings,
    /// `samples` random signed graphs per order.
    Random {
        samples: usize,
    },
}

impl fmt::Display for SignMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignMode::SwitchingClasses => write!(f, "switching_classes"),
            SignMode::AllSignings => write!(f, "all_signings"),
            SignMode::Random { samples } => write!(f, "random({samples})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    pub min_n: usize,
    pub max_n: usize,
    pub connected_only: bool,
    pub sign_mode: SignMode,
    /// Keep one labelled graph per isomorphism class of underlying graphs.
    pub dedup: bool,
    /// Seeds random sign mode and the sampled properties.
    pub seed: u64,
}

impl Universe {
    /// Connected graphs on `2..=max_n` vertices, one signing per switching
    /// class.
    pub fn new(max_n: usize) -> Result<Universe> {
        if max_n < 2 {
            return invalid(format!("max_n must be at least 2, got {max_n}"));
        }
        Ok(Universe {
            min_n: 2,
            max_n,
            connected_only: true,
            sign_mode: SignMode::SwitchingClasses,
            dedup: false,
            seed: 0,
        })
    }

    pub fn with_sign_mode(mut self, mode: SignMode) -> Universe {
        self.sign_mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Universe {
        self.seed = seed;
        self
    }

    pub fn with_min_n(mut self, min_n: usize) -> Universe {
        self.min_n = min_n;
        self
    }

    pub fn with_dedup(mut self, dedup: bool) -> Universe {
        self.dedup = dedup;
        self
    }

    pub fn with_connected_only(mut self, connected_only: bool) -> Universe {
        self.connected_only = connected_only;
        self
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}..={} {} sign_mode={} dedup={} seed={}",
            self.min_n,
            self.max_n,
            if self.connected_only { "connected" } else { "all" },
            self.sign_mode,
            self.dedup,
            self.seed
        )
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> SignedGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &(u, v))| (u, v));
    SignedGraph::unsigned(n, edges).expect("mask edges are valid")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge bitmask over all relabellings.
fn canonical_mask(graph: &SignedGraph, index: &[Vec<usize>], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            graph.edges().iter().fold(0u64, |m, e| {
                let (a, b) = (p[e.u].min(p[e.v]), p[e.u].max(p[e.v]));
                m | 1 << index[a][b]
            })
        })
        .min()
        .unwrap_or(0)
}

/// All-positive underlying graphs of order `n`, by edge bitmask.
pub fn underlying_graphs(n: usize, connected_only: bool, dedup: bool) -> Vec<SignedGraph> {
    let pairs = pairs(n);
    assert!(pairs.len() < 64, "order {n} is too large to enumerate");
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
    }
    let perms = if dedup { permutations(n) } else { Vec::new() };
    let mut seen = HashSet::new();
    (0..1u64 << pairs.len())
        .map(|mask| from_mask(n, &pairs, mask))
        .filter(|g| !connected_only || g.is_connected())
        .filter(|g| !dedup || seen.insert(canonical_mask(g, &index, &perms)))
        .collect()
}

/// Edges outside a BFS spanning forest, in edge order.
fn non_forest_edges(graph: &SignedGraph) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let n = graph.order();
    let mut parent = vec![NONE; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in graph.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| parent[e.v] != e.u && parent[e.u] != e.v)
        .map(|(i, _)| i)
        .collect()
}

fn with_negative(graph: &SignedGraph, chosen: &[usize], mask: u64) -> SignedGraph {
    let mut negative = vec![false; graph.size()];
    for (bit, &i) in chosen.iter().enumerate() {
        negative[i] = mask >> bit & 1 == 1;
    }
    let mut k = 0;
    graph.map_signs(|_| {
        k += 1;
        if negative[k - 1] {
            Sign::Negative
        } else {
            Sign::Positive
        }
    })
}

/// One signing per switching class: `2^c` graphs.
pub fn switching_transversal(graph: &SignedGraph) -> Vec<SignedGraph> {
    let free = non_forest_edges(graph);
    (0..1u64 << free.len())
        .map(|m| with_negative(graph, &free, m))
        .collect()
}

/// Every signing: `2^|E|` graphs.
pub fn all_signings(graph: &SignedGraph) -> Vec<SignedGraph> {
    let all: Vec<usize> = (0..graph.size()).collect();
    (0..1u64 << all.len()).map(|m| with_negative(graph, &all, m)).collect()
}

fn mix(mut x: u64) -> u64 {
    // splitmix64 finalizer
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    })
}

fn stream_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(seed ^ mix(stream)) ^ index))
}

fn random_instances(u: &Universe, n: usize, samples: usize) -> Vec<SignedGraph> {
    (0..samples)
        .map(|i| {
            let mut rng = stream_rng(u.seed, n as u64, i as u64);
            if u.connected_only {
                let extra = rng.random_range(0.05..0.6);
                random_connected(n, extra, &mut rng)
            } else {
                let p = rng.random_range(0.1..0.9);
                random_signed(n, p, rng.random()).expect("probability is in range")
            }
        })
        .collect()
}

/// Groups of signed graphs sharing an underlying graph (one group per
/// random instance in random mode).
fn groups(u: &Universe) -> Vec<(Option<SignedGraph>, Vec<SignedGraph>)> {
    let mut out = Vec::new();
    for n in u.min_n..=u.max_n {
        match u.sign_mode {
            SignMode::Random { samples } => {
                out.extend(random_instances(u, n, samples).into_iter().map(|g| (None, vec![g])));
            }
            SignMode::SwitchingClasses | SignMode::AllSignings => {
                out.extend(
                    underlying_graphs(n, u.connected_only, u.dedup)
                        .into_iter()
                        .map(|g| (Some(g), Vec::new())),
                );
            }
        }
    }
    out
}

fn expand(u: &Universe, underlying: &SignedGraph) -> Vec<SignedGraph> {
    match u.sign_mode {
        SignMode::AllSignings => all_signings(underlying),
        _ => switching_transversal(underlying),
    }
}

/// Every signed graph of the universe, in a fixed order.
pub fn enumerate_graphs(u: &Universe) -> impl Iterator<Item = SignedGraph> + '_ {
    groups(u).into_iter().flat_map(move |(base, given)| match base {
        Some(g) => expand(u, &g),
        None => given,
    })
}

/// A failing instance: the graph on one line plus what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub order: usize,
    pub graph: String,
    pub detail: String,
}

impl Counterexample {
    fn new(graph: &SignedGraph, detail: String) -> Counterexample {
        Counterexample {
            order: graph.order(),
            graph: graph.to_string().trim_end().replace('\n', "; "),
            detail,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub hits: u64,
    pub violations: u64,
    /// The smallest failing instances, at most the report's cap.
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn record(&mut self, graph: &SignedGraph, outcome: Outcome, cap: usize) {
        match outcome {
            Outcome::Skip => {}
            Outcome::Pass => self.checked += 1,
            Outcome::Hit => {
                self.checked += 1;
                self.hits += 1;
            }
            Outcome::Fail(detail) => {
                self.checked += 1;
                self.violations += 1;
                self.counterexamples.push(Counterexample::new(graph, detail));
                self.counterexamples.sort();
                self.counterexamples.truncate(cap);
            }
        }
    }

    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        self.checked += other.checked;
        self.hits += other.hits;
        self.violations += other.violations;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.counterexamples.truncate(cap);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub about: &'static str,
    pub kind: PropertyKind,
    pub sampled: bool,
    pub tally: Tally,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.tally.violations == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub universe: Universe,
    /// Signed graphs enumerated from the universe.
    pub instances: u64,
    pub properties: Vec<PropertyReport>,
    pub wall_time: Duration,
}

/// Wall time is not part of a report's identity.
impl PartialEq for VerificationReport {
    fn eq(&self, other: &VerificationReport) -> bool {
        self.universe == other.universe && self.instances == other.instances && self.properties == other.properties
    }
}

impl VerificationReport {
    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn total_violations(&self) -> u64 {
        self.properties.iter().map(|p| p.tally.violations).sum()
    }

    /// Violations of properties that are proved rather than merely observed.
    pub fn theorem_violations(&self) -> u64 {
        self.properties
            .iter()
            .filter(|p| p.kind == PropertyKind::Theorem)
            .map(|p| p.tally.violations)
            .sum()
    }

    /// `key=value` lines, one fact per line.
    pub fn to_key_values(&self) -> String {
        let mut out = format!(
            "universe.min_n={}\nuniverse.max_n={}\nuniverse.connected_only={}\nuniverse.sign_mode={}\nuniverse.dedup={}\nuniverse.seed={}\ninstances={}\n",
            self.universe.min_n,
            self.universe.max_n,
            self.universe.connected_only,
            self.universe.sign_mode,
            self.universe.dedup,
            self.universe.seed,
            self.instances
        );
        for p in &self.properties {
            let t = &p.tally;
            out += &format!(
                "property.{0}.kind={1}\nproperty.{0}.checked={2}\nproperty.{0}.hits={3}\nproperty.{0}.violations={4}\n",
                p.name, p.kind, t.checked, t.hits, t.violations
            );
            for (i, c) in t.counterexamples.iter().enumerate() {
                out += &format!("property.{}.counterexample.{i}={} :: {}\n", p.name, c.graph, c.detail);
            }
        }
        out += &format!(
            "total_violations={}\nwall_time_ms={}\n",
            self.total_violations(),
            self.wall_time.as_millis()
        );
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe {}", self.universe)?;
        writeln!(f, "instances {}", self.instances)?;
        for p in &self.properties {
            let t = &p.tally;
            writeln!(
                f,
                "{} {} checked={} hits={} violations={}{}{}",
                if p.passed() { "ok  " } else { "FAIL" },
                p.name,
                t.checked,
                t.hits,
                t.violations,
                if p.sampled { " sampled" } else { "" },
                if p.kind == PropertyKind::Observation {
                    " observation"
                } else {
                    ""
                },
            )?;
            for c in &t.counterexamples {
                writeln!(f, "    {} :: {}", c.graph, c.detail)?;
            }
        }
        writeln!(f, "total_violations {}", self.total_violations())?;
        writeln!(f, "wall_time_ms {}", self.wall_time.as_millis())
    }
}

/// Which properties to run, and how many counterexamples to keep for each.
#[derive(Clone, Debug)]
pub struct Selection {
    properties: Vec<&'static Property>,
    pub counterexample_cap: usize,
}

impl Selection {
    pub fn all() -> Selection {
        Selection {
            properties: PROPERTIES.iter().collect(),
            counterexample_cap: 10,
        }
    }

    /// Errors on an unknown name.
    pub fn named<S: AsRef<str>>(names: &[S]) -> Result<Selection> {
        let mut properties = Vec::new();
        for name in names {
            let name = name.as_ref();
            match PROPERTIES.iter().find(|p| p.name == name) {
                Some(p) => properties.push(p),
                None => return invalid(format!("unknown property `{name}`")),
            }
        }
        Ok(Selection {
            properties,
            counterexample_cap: 10,
        })
    }

    pub fn with_counterexample_cap(mut self, cap: usize) -> Selection {
        self.counterexample_cap = cap;
        self
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.properties.iter().map(|p| p.name).collect()
    }
}

/// Runs the selected properties. Violations are data in the report, never
/// errors.
pub fn verify(u: &Universe, selection: &Selection) -> VerificationReport {
    let start = Instant::now();
    let cap = selection.counterexample_cap;
    let props = &selection.properties;
    let empty = || (0u64, vec![Tally::default(); props.len()]);
    let merge = |(n1, a): (u64, Vec<Tally>), (n2, b): (u64, Vec<Tally>)| {
        (n1 + n2, a.into_iter().zip(b).map(|(x, y)| x.merge(y, cap)).collect())
    };

    let needs_universe = props
        .iter()
        .any(|p| matches!(p.check, Check::Graph(_) | Check::Underlying(_)));
    let (instances, mut tallies) = if needs_universe {
        groups(u)
            .into_par_iter()
            .map(|(base, given)| {
                let (mut count, mut tallies) = empty();
                if let Some(g) = &base {
                    for (p, t) in props.iter().zip(tallies.iter_mut()) {
                        if let Check::Underlying(f) = p.check {
                            t.record(g, f(g), cap);
                        }
                    }
                }
                let signed = match &base {
                    Some(g) => expand(u, g),
                    None => given,
                };
                for g in &signed {
                    count += 1;
                    let instance = Instance::new(g);
                    for (p, t) in props.iter().zip(tallies.iter_mut()) {
                        if let Check::Graph(f) = p.check {
                            t.record(g, f(&instance), cap);
                        }
                    }
                }
                (count, tallies)
            })
            .reduce(empty, merge)
    } else {
        empty()
    };

    for (p, t) in props.iter().zip(tallies.iter_mut()) {
        if let Check::Sampled { count, run } = p.check {
            let stream = name_hash(p.name);
            *t = (0..count)
                .into_par_iter()
                .map(|i| {
                    let mut rng = stream_rng(u.seed, stream, i as u64);
                    let (g, outcome) = run(i, &mut rng);
                    let mut t = Tally::default();
                    t.record(&g, outcome, cap);
                    t
                })
                .reduce(Tally::default, |a, b| a.merge(b, cap));
        }
    }

    VerificationReport {
        universe: u.clone(),
        instances,
        properties: props
            .iter()
            .zip(tallies)
            .map(|(p, tally)| PropertyReport {
                name: p.name,
                about: p.about,
                kind: p.kind,
                sampled: matches!(p.check, Check::Sampled { .. }),
                tally,
            })
            .collect(),
        wall_time: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::cyclomatic_number;

    #[test]
    fn small_universes() {
        let u = Universe::new(2).unwrap();
        assert_eq!(enumerate_graphs(&u).count(), 1);
        let u = Universe::new(3).unwrap().with_min_n(3).with_dedup(true);
        let shapes = underlying_graphs(3, true, true);
        assert_eq!(shapes.len(), 2);
        assert_eq!(enumerate_graphs(&u).count(), 1 + 2);
        assert!(Universe::new(1).is_err());
    }

    #[test]
    fn transversal_has_two_to_the_cyclomatic_number() {
        for g in underlying_graphs(4, true, false) {
            assert_eq!(switching_transversal(&g).len(), 1 << cyclomatic_number(&g));
            assert_eq!(all_signings(&g).len(), 1 << g.size());
        }
    }

    #[test]
    fn isomorphism_classes() {
        let counts: Vec<usize> = (2..=6).map(|n| underlying_graphs(n, true, true).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 21, 112]);
        assert_eq!(underlying_graphs(4, false, true).len(), 11);
    }

    #[test]
    fn random_mode_is_seeded() {
        let u = Universe::new(8)
            .unwrap()
            .with_min_n(7)
            .with_sign_mode(SignMode::Random { samples: 5 })
            .with_seed(11);
        let a: Vec<_> = enumerate_graphs(&u).collect();
        let b: Vec<_> = enumerate_graphs(&u).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(SignedGraph::is_connected));
    }

    #[test]
    fn reports_are_deterministic() {
        let u = Universe::new(4).unwrap().with_seed(5);
        let sel = Selection::named(&["nullity_bound", "blow_up_rank"]).unwrap();
        let a = verify(&u, &sel);
        let b = verify(&u, &sel);
        assert_eq!(a, b);
        assert_eq!(a.total_violations(), 0);
        assert!(a.to_key_values().contains("property.nullity_bound.violations=0"));
        assert!(Selection::named(&["no_such_property"]).is_err());
    }

    #[test]
    fn tallies_keep_the_smallest_counterexamples() {
        let big = SignedGraph::empty(5);
        let small = SignedGraph::empty(2);
        let mut t = Tally::default();
        for _ in 0..3 {
            t.record(&big, Outcome::Fail("big".into()), 2);
        }
        t.record(&small, Outcome::Fail("small".into()), 2);
        assert_eq!(t.violations, 4);
        assert_eq!(t.counterexamples.len(), 2);
        assert_eq!(t.counterexamples[0].order, 2);
        let merged = t.clone().merge(t, 2);
        assert_eq!(merged.violations, 8);
        assert_eq!(merged.counterexamples.len(), 2);
    }
}
