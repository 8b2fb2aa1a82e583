use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use signull::generators::random_signed;
use signull::linalg::{graph_rank, multiplicity, Rational};
use signull::transforms::switch;
use signull::{SignedGraph, VertexSet};

/// Rank of `A − λI` by plain Gaussian elimination over the rationals.
fn rational_rank(g: &SignedGraph, lambda: &BigRational) -> usize {
    let n = g.order();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = -lambda.clone();
    }
    for e in g.edges() {
        let s = BigRational::from_integer(i64::from(e.sign.value()).into());
        m[e.u][e.v] = s.clone();
        m[e.v][e.u] = s;
    }
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = BigRational::one() / m[rank][col].clone();
        for r in rank + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..n {
                let delta = factor.clone() * m[rank][c].clone();
                m[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

fn arb_graph() -> impl Strategy<Value = SignedGraph> {
    (1usize..=11, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_signed(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_rank_matches_rational_elimination(g in arb_graph(), num in -3i64..=3, den in 1i64..=3) {
        prop_assert_eq!(graph_rank(&g), rational_rank(&g, &BigRational::zero()));
        let lambda = BigRational::new(num.into(), den.into());
        let expected = g.order() - rational_rank(&g, &lambda);
        prop_assert_eq!(multiplicity(&g, &Rational::new(num, den).unwrap()), expected);
    }

    #[test]
    fn switching_preserves_rank(g in arb_graph(), mask in any::<u16>()) {
        let set = VertexSet::new((0..g.order()).filter(|&v| mask >> v & 1 == 1));
        prop_assert_eq!(graph_rank(&switch(&g, &set).unwrap()), graph_rank(&g));
    }
}
