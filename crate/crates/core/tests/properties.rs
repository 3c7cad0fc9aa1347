use affine_phi::loop_group::{is_unipotent_plus, word_to_loop, word_to_loop_numeric, NumericLoop};
use affine_phi::networks::lindstrom_minor;
use affine_phi::partitions::Partition;
use affine_phi::poly::MultiPoly;
use affine_phi::ring::Coefficient;
use affine_phi::tableaux::BitString;
use affine_phi::toeplitz::{minor, pieri_determinant, toeplitz_entry};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn word_strategy() -> impl Strategy<Value = BitString> {
    (0u8..2, 0usize..=6).prop_map(|(first, len)| BitString::alternating(first, len))
}

fn params_strategy(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), len).prop_map(|v| {
        v.into_iter()
            .map(|(n, d)| rational(if n == 0 { 1 } else { n }, d))
            .collect()
    })
}

fn numeric_case() -> impl Strategy<Value = (BitString, Vec<BigRational>)> {
    word_strategy().prop_flat_map(|w| {
        let len = w.len();
        (Just(w), params_strategy(len))
    })
}

/// `Σ_K T_g(M, K) T_h(K, N)`; both factors are banded so the sum is finite.
fn product_entry(g: &NumericLoop, h: &NumericLoop, m: i64, n: i64) -> BigRational {
    let (lo, hi) = g.degree_span();
    let mut acc = <BigRational as Coefficient>::zero();
    for k in m + 2 * lo - 2..=m + 2 * hi + 2 {
        acc += toeplitz_entry(g, m, k) * toeplitz_entry(h, k, n);
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn toeplitz_is_multiplicative((w1, p1) in numeric_case(), (w2, p2) in numeric_case(), m in -8i64..8, n in -8i64..8) {
        let g = word_to_loop_numeric(&w1, &p1).unwrap();
        let h = word_to_loop_numeric(&w2, &p2).unwrap();
        let gh = g.mul(&h);
        prop_assert_eq!(toeplitz_entry(&gh, m, n), product_entry(&g, &h, m, n));
    }

    #[test]
    fn block_shift(w in word_strategy(), m in -30i64..30, n in -30i64..30) {
        let g = word_to_loop(&w).unwrap();
        prop_assert_eq!(toeplitz_entry(&g, m, n), toeplitz_entry(&g, m + 2, n + 2));
    }

    #[test]
    fn numeric_minor_is_evaluated_symbolic_minor((w, p) in numeric_case(), size in 0usize..=4, pick in 0usize..64, parity in 0u8..2) {
        let shapes = Partition::all_of_size(size);
        let lambda = &shapes[pick % shapes.len()];
        let g = word_to_loop_numeric(&w, &p).unwrap();
        prop_assert!(is_unipotent_plus(&g));
        let symbolic = minor(&word_to_loop(&w).unwrap(), &Partition::empty(), lambda, parity).unwrap();
        let numeric = minor(&g, &Partition::empty(), lambda, parity).unwrap();
        let value = evaluate(&symbolic, &p);
        prop_assert_eq!(&numeric, &value);
        prop_assert_eq!(pieri_determinant(&g, lambda, parity).unwrap(), value);
    }
}

fn evaluate(poly: &MultiPoly, params: &[BigRational]) -> BigRational {
    poly.terms()
        .map(|(exps, c)| {
            exps.iter()
                .enumerate()
                .fold(BigRational::from_integer(c.clone()), |acc, (i, &e)| {
                    acc * num_traits::pow(params[i].clone(), e as usize)
                })
        })
        .sum()
}

#[test]
fn lindstrom_matches_toeplitz_with_nonempty_inner_shape() {
    let word: BitString = "0,1,0,1,0,1".parse().unwrap();
    let g = word_to_loop(&word).unwrap();
    for lambda in Partition::all_up_to(5) {
        for mu in lambda.subpartitions() {
            for parity in 0..2 {
                assert_eq!(
                    lindstrom_minor(&word, &mu, &lambda, parity).unwrap(),
                    minor(&g, &mu, &lambda, parity).unwrap(),
                    "{mu} ⊆ {lambda}, i={parity}"
                );
            }
        }
    }
}
