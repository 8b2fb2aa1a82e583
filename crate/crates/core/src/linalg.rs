//! Exact rank, nullity, and eigenvalue multiplicity.
//!
//! Everything here is computed over the integers with fraction-free
//! (Bareiss) elimination, so a zero test is always a true zero test. The
//! elimination first runs on checked `i128` arithmetic and restarts on
//! arbitrary-precision integers if any intermediate value overflows; both
//! paths perform the same pivot sequence and therefore agree bit for bit.
//!
//! Eigenvalue multiplicities are only supported at rational points: for
//! `λ = p/q` the matrix `q·A − p·I` has the same rank as `A − λI`, which turns
//! the question back into an integer rank computation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Symmetric square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymIntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl SymIntMatrix {
    pub fn zeros(order: usize) -> SymIntMatrix {
        SymIntMatrix {
            order,
            entries: vec![BigInt::zero(); order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<SymIntMatrix> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return invalid("matrix rows must all have the matrix order as length");
        }
        for i in 0..order {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return invalid(format!("entries ({i},{j}) and ({j},{i}) differ"));
                }
            }
        }
        Ok(SymIntMatrix {
            order,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    /// `den·M − num·I`.
    pub fn shifted(&self, num: &BigInt, den: &BigInt) -> SymIntMatrix {
        let mut entries: Vec<BigInt> = self.entries.iter().map(|x| x * den).collect();
        for i in 0..self.order {
            entries[i * self.order + i] -= num;
        }
        SymIntMatrix {
            order: self.order,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// The signed adjacency matrix.
pub fn adjacency(graph: &SignedGraph) -> SymIntMatrix {
    let n = graph.order();
    let mut m = SymIntMatrix::zeros(n);
    for e in graph.edges() {
        let s = BigInt::from(e.sign.value());
        m.entries[e.u * n + e.v] = s.clone();
        m.entries[e.v * n + e.u] = s;
    }
    m
}

/// Exact rank over the rationals.
pub fn rank(matrix: &SymIntMatrix) -> usize {
    let n = matrix.order;
    let small: Option<Vec<i128>> = matrix.entries.iter().map(ToPrimitive::to_i128).collect();
    match small {
        Some(entries) => rank_of_small(entries, n),
        None => bareiss_rank(matrix.entries.clone(), n, n).expect("big integers never overflow"),
    }
}

fn rank_of_small(entries: Vec<i128>, n: usize) -> usize {
    match bareiss_rank(entries.clone(), n, n) {
        Some(r) => r,
        None => {
            let big = entries.into_iter().map(BigInt::from).collect();
            bareiss_rank(big, n, n).expect("big integers never overflow")
        }
    }
}

fn shifted_small_entries(graph: &SignedGraph, num: i128, den: i128) -> Vec<i128> {
    let n = graph.order();
    let mut entries = vec![0i128; n * n];
    for e in graph.edges() {
        let s = den * i128::from(e.sign.value());
        entries[e.u * n + e.v] = s;
        entries[e.v * n + e.u] = s;
    }
    for i in 0..n {
        entries[i * n + i] = -num;
    }
    entries
}

/// Rank of the signed adjacency matrix.
pub fn graph_rank(graph: &SignedGraph) -> usize {
    rank_of_small(shifted_small_entries(graph, 0, 1), graph.order())
}

/// Multiplicity of the eigenvalue zero: `order − rank`.
pub fn nullity(graph: &SignedGraph) -> usize {
    graph.order() - graph_rank(graph)
}

/// Multiplicity of `lambda` as an eigenvalue; zero when it is not one.
pub fn multiplicity(graph: &SignedGraph, lambda: &Rational) -> usize {
    let n = graph.order();
    let (num, den) = (lambda.numer(), lambda.denom());
    let r = match (num.to_i64(), den.to_i64()) {
        (Some(p), Some(q)) => rank_of_small(shifted_small_entries(graph, p.into(), q.into()), n),
        _ => rank(&adjacency(graph).shifted(num, den)),
    };
    n - r
}

/// Closed form for the nullity of a signed path on `order` vertices: one for
/// odd order, zero for even order, whatever the signs.
pub fn signed_path_nullity(order: usize) -> usize {
    order % 2
}

/// Closed form for the nullity of a signed cycle of the given length and
/// sign: two for a positive cycle of length `0 mod 4` or a negative cycle of
/// length `2 mod 4`, zero otherwise.
pub fn signed_cycle_nullity(length: usize, sign: Sign) -> usize {
    match (sign, length % 4) {
        (Sign::Positive, 0) | (Sign::Negative, 2) => 2,
        _ => 0,
    }
}

/// Integer arithmetic needed by fraction-free elimination.
trait ExactInt: Clone {
    fn is_nil(&self) -> bool;
    fn nil() -> Self;
    fn unit() -> Self;
    /// `(pivot·x − factor·y) / prev`; the division is exact by construction.
    /// `None` signals overflow.
    fn eliminate(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn is_nil(&self) -> bool {
        *self == 0
    }

    fn nil() -> Self {
        0
    }

    fn unit() -> Self {
        1
    }

    fn eliminate(pivot: &i128, x: &i128, factor: &i128, y: &i128, prev: &i128) -> Option<i128> {
        let numerator = pivot.checked_mul(*x)?.checked_sub(factor.checked_mul(*y)?)?;
        debug_assert_eq!(numerator % prev, 0);
        Some(numerator / prev)
    }
}

impl ExactInt for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }

    fn nil() -> Self {
        Zero::zero()
    }

    fn unit() -> Self {
        One::one()
    }

    fn eliminate(pivot: &BigInt, x: &BigInt, factor: &BigInt, y: &BigInt, prev: &BigInt) -> Option<BigInt> {
        let numerator = pivot * x - factor * y;
        debug_assert!(Zero::is_zero(&(&numerator % prev)));
        Some(numerator / prev)
    }
}

/// Row-echelon rank by Bareiss elimination. Columns are scanned left to
/// right and the pivot is the first nonzero entry at or below the current
/// row, so the pivot sequence is fully determined by the input.
fn bareiss_rank<T: ExactInt>(mut a: Vec<T>, rows: usize, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev = T::unit();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !a[r * cols + col].is_nil()) else {
            continue;
        };
        if pivot_row != rank {
            for j in col..cols {
                a.swap(pivot_row * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + col].clone();
        for r in rank + 1..rows {
            let factor = a[r * cols + col].clone();
            for j in col + 1..cols {
                let updated = T::eliminate(&pivot, &a[r * cols + j], &factor, &a[rank * cols + j], &prev)?;
                a[r * cols + j] = updated;
            }
            a[r * cols + col] = T::nil();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
        let den = den.into();
        if Zero::is_zero(&den) {
            return invalid("zero denominator");
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn integer(value: i64) -> Rational {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always at least one.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        Zero::is_zero(&self.0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Rational {
        Rational::integer(value)
    }
}

/// Accepts `p/q` or a bare integer. Decimal notation is rejected.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::InvalidParameter(format!("`{s}` is not an integer or p/q fraction"));
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn cycle(n: usize, last: Sign) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, if i == n - 1 { last } else { P }))).unwrap()
    }

    fn path(n: usize) -> SignedGraph {
        SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn adjacency_entries_follow_signs() {
        let k2p = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        assert_eq!(
            adjacency(&k2p),
            SymIntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
        );
        let k2n = SignedGraph::new(2, [(0, 1, N)]).unwrap();
        assert_eq!(
            adjacency(&k2n),
            SymIntMatrix::from_rows(&[vec![0, -1], vec![-1, 0]]).unwrap()
        );
        assert_eq!(adjacency(&SignedGraph::empty(3)), SymIntMatrix::zeros(3));
    }

    #[test]
    fn ranks_of_small_matrices() {
        assert_eq!(rank(&adjacency(&path(5))), 4);
        assert_eq!(rank(&SymIntMatrix::zeros(3)), 0);
        // K4: eigenvalues 3, -1, -1, -1; nonsingular.
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(rank(&adjacency(&k4)), 4);
        assert_eq!(graph_rank(&k4), 4);
    }

    #[test]
    fn cycle_nullities() {
        assert_eq!(nullity(&cycle(4, P)), 2);
        assert_eq!(nullity(&cycle(4, N)), 0);
        assert_eq!(nullity(&cycle(6, N)), 2);
        assert_eq!(nullity(&cycle(6, P)), 0);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&cycle(4, P), &Rational::integer(0)), 2);
        assert_eq!(multiplicity(&SignedGraph::unsigned(2, [(0, 1)]).unwrap(), &1.into()), 1);
        // C4 spectrum: 2, 0, 0, -2.
        assert_eq!(multiplicity(&cycle(4, P), &2.into()), 1);
        assert_eq!(multiplicity(&cycle(4, P), &"-2".parse().unwrap()), 1);
        assert_eq!(multiplicity(&cycle(4, P), &"1/2".parse().unwrap()), 0);
    }

    #[test]
    fn big_integer_path_matches_small_path() {
        // Dense ±1 matrices drive Bareiss intermediates well past i128.
        let n = 40;
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                edges.push((u, v, if state & 1 == 0 { P } else { N }));
            }
        }
        let g = SignedGraph::new(n, edges).unwrap();
        let big = adjacency(&g);
        let forced = bareiss_rank(big.entries.clone(), n, n).unwrap();
        assert_eq!(graph_rank(&g), forced);
        assert_eq!(rank(&big), forced);
    }

    #[test]
    fn i128_overflow_is_reported() {
        let huge = i128::MAX / 2;
        assert_eq!(bareiss_rank(vec![huge, 1, 1, huge], 2, 2), None);
        let big: Vec<BigInt> = [huge, 1, 1, huge].into_iter().map(BigInt::from).collect();
        assert_eq!(bareiss_rank(big, 2, 2), Some(2));
    }

    #[test]
    fn rational_parsing() {
        let half: Rational = "2/4".parse().unwrap();
        assert_eq!(half, Rational::new(1, 2).unwrap());
        assert_eq!(half.to_string(), "1/2");
        let neg: Rational = "3/-6".parse().unwrap();
        assert_eq!(neg.numer(), &BigInt::from(-1));
        assert_eq!(neg.denom(), &BigInt::from(2));
        assert!("0.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::integer(-7));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(signed_path_nullity(5), 1);
        assert_eq!(signed_path_nullity(4), 0);
        assert_eq!(signed_cycle_nullity(8, P), 2);
        assert_eq!(signed_cycle_nullity(10, N), 2);
        assert_eq!(signed_cycle_nullity(10, P), 0);
        assert_eq!(signed_cycle_nullity(5, N), 0);
    }
}
