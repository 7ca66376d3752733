//! Weight-multiset tests: power constructions against naive tuple
//! enumeration, the recovery induction with its error taxonomy, brute-force
//! inversion agreement and document round trips.

mod common;

use common::{brute_force_invert, naive_power_weights};
use num::bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twistcheck::weights::{
    power_weights, recover_from_power, self_dual_check, PowerMode, RecoverMode, WeightError,
    WeightMultiset, WeightVector,
};

fn multiset(rank: usize, vectors: &[&[i64]]) -> WeightMultiset {
    WeightMultiset::from_vectors(rank, vectors.iter().map(|v| v.to_vec())).unwrap()
}

fn random_multiset(rng: &mut ChaCha8Rng, max_rank: usize, max_dim: usize) -> WeightMultiset {
    let rank = rng.gen_range(1..=max_rank);
    let dim = rng.gen_range(1..=max_dim);
    let vectors: Vec<Vec<i64>> = (0..dim)
        .map(|_| (0..rank).map(|_| rng.gen_range(-5..=5)).collect())
        .collect();
    WeightMultiset::from_vectors(rank, vectors).unwrap()
}

#[test]
fn power_weight_examples() {
    let w = multiset(1, &[&[1], &[-1]]);
    let sym2 = power_weights(&w, 2, PowerMode::Sym).unwrap();
    assert_eq!(sym2, multiset(1, &[&[2], &[0], &[-2]]));

    let tensor2 = power_weights(&w, 2, PowerMode::Tensor).unwrap();
    assert_eq!(tensor2, multiset(1, &[&[2], &[0], &[0], &[-2]]));

    let w = multiset(1, &[&[1], &[1], &[0]]);
    let sym2 = power_weights(&w, 2, PowerMode::Sym).unwrap();
    assert_eq!(
        sym2,
        multiset(1, &[&[2], &[2], &[2], &[1], &[1], &[0]])
    );
}

#[test]
fn power_weight_sizes_and_oracle_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let w = random_multiset(&mut rng, 3, 5);
        let n = w.dimension();
        for k in 1..=3u32 {
            for mode in [PowerMode::Tensor, PowerMode::Sym, PowerMode::Ext] {
                if mode == PowerMode::Ext && BigUint::from(k) > n {
                    assert!(matches!(
                        power_weights(&w, k, mode),
                        Err(WeightError::ExtTooLarge { .. })
                    ));
                    continue;
                }
                let fast = power_weights(&w, k, mode).unwrap();
                let naive = naive_power_weights(&w, k, mode);
                assert_eq!(fast, naive, "mode {mode:?} k {k}");
            }
        }
        let adjoint = power_weights(&w, 1, PowerMode::Adjoint).unwrap();
        assert_eq!(adjoint, naive_power_weights(&w, 1, PowerMode::Adjoint));
        assert_eq!(adjoint.dimension(), &n * &n);
    }
}

#[test]
fn adjoint_weights_sum_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let w = random_multiset(&mut rng, 3, 5);
        let adjoint = power_weights(&w, 1, PowerMode::Adjoint).unwrap();
        let mut sum = vec![num::BigInt::from(0); w.rank()];
        for (v, m) in adjoint.entries() {
            let m = num::BigInt::from(m.clone());
            for (i, c) in v.0.iter().enumerate() {
                sum[i] += num::BigInt::from(*c) * &m;
            }
        }
        assert!(sum.iter().all(|c| *c == num::BigInt::from(0)));
    }
}

#[test]
fn recover_examples() {
    let p = multiset(1, &[&[2], &[0], &[-2]]);
    let w = recover_from_power(&p, 2, 2, RecoverMode::Sym).unwrap();
    assert_eq!(w, multiset(1, &[&[1], &[-1]]));

    // Worked induction: lambda_1 = 1; removing {2} leaves maximum 2, so
    // lambda_2 = 1; removing {2, 2, 2} leaves maximum 1, so lambda_3 = 0.
    let p = multiset(1, &[&[2], &[2], &[2], &[1], &[1], &[0]]);
    let w = recover_from_power(&p, 3, 2, RecoverMode::Sym).unwrap();
    assert_eq!(w, multiset(1, &[&[1], &[1], &[0]]));

    // {2, 1} cannot be a symmetric square of a 2-dimensional multiset: it
    // already fails the size precondition, certifying invalidity.
    let p = multiset(1, &[&[2], &[1]]);
    let err = recover_from_power(&p, 2, 2, RecoverMode::Sym).unwrap_err();
    assert!(matches!(err, WeightError::SizeMismatch { .. }));
    assert!(err.to_string().contains("not a valid k-th power image"));

    // Right size but no valid preimage: the candidate is rejected by the
    // mandatory final verification.
    let p = multiset(1, &[&[2], &[1], &[-2]]);
    let err = recover_from_power(&p, 2, 2, RecoverMode::Sym).unwrap_err();
    assert!(matches!(err, WeightError::VerificationFailed));
    assert!(err.to_string().contains("not a valid k-th power image"));

    // Lexmax not divisible by k.
    let p = multiset(1, &[&[3], &[1], &[-1]]);
    let err = recover_from_power(&p, 2, 2, RecoverMode::Sym).unwrap_err();
    assert!(matches!(err, WeightError::LexmaxNotDivisible));
}

#[test]
fn recovery_round_trip_with_oracle_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut oracle_checked = 0usize;
    for _ in 0..200 {
        let w = random_multiset(&mut rng, 3, 6);
        let n: u32 = w.dimension().to_string().parse().unwrap();
        let k = rng.gen_range(1..=4u32);
        for (mode, rmode) in [
            (PowerMode::Sym, RecoverMode::Sym),
            (PowerMode::Tensor, RecoverMode::Tensor),
        ] {
            let p = power_weights(&w, k, mode).unwrap();
            let recovered = recover_from_power(&p, n, k, rmode).unwrap();
            assert_eq!(recovered, w, "mode {mode:?} k {k}");
            if n <= 4 && k <= 3 {
                oracle_checked += 1;
                let solutions = brute_force_invert(&p, n, k, mode);
                assert_eq!(solutions, vec![w.clone()], "oracle mode {mode:?} k {k}");
            }
        }
    }
    assert!(oracle_checked >= 100);
}

#[test]
fn recovery_is_independent_of_entry_order() {
    // Canonical sorting means shuffled input pairs produce identical output.
    let vectors: Vec<Vec<i64>> = vec![vec![2, 1], vec![0, 0], vec![-1, 3], vec![2, 1]];
    let a = WeightMultiset::from_vectors(2, vectors.clone()).unwrap();
    let b = WeightMultiset::from_vectors(2, vectors.into_iter().rev().collect::<Vec<_>>())
        .unwrap();
    assert_eq!(a, b);
    let pa = power_weights(&a, 3, PowerMode::Sym).unwrap();
    let pb = power_weights(&b, 3, PowerMode::Sym).unwrap();
    assert_eq!(pa, pb);
    assert_eq!(
        recover_from_power(&pa, 4, 3, RecoverMode::Sym).unwrap(),
        recover_from_power(&pb, 4, 3, RecoverMode::Sym).unwrap()
    );
}

#[test]
fn self_dual_examples() {
    assert!(self_dual_check(&multiset(1, &[&[1], &[-1]])));
    let w = multiset(1, &[&[3], &[-1], &[-1], &[-1]]);
    assert!(!self_dual_check(&w));
    // The exterior square of a non-self-dual multiset can be self-dual: the
    // known obstruction to recovering from exterior powers.
    let ext2 = power_weights(&w, 2, PowerMode::Ext).unwrap();
    assert_eq!(
        ext2,
        multiset(1, &[&[2], &[2], &[2], &[-2], &[-2], &[-2]])
    );
    assert!(self_dual_check(&ext2));
}

#[test]
fn multiplicities_compress_and_count_exactly() {
    // {0 (x 4)} with k = 3: all sums are 0; sizes follow the formulas with
    // multiplicity weighting, not tuple materialization.
    let w = WeightMultiset::from_pairs(
        1,
        vec![(WeightVector(vec![0]), BigUint::from(4u32))],
    )
    .unwrap();
    let sym = power_weights(&w, 3, PowerMode::Sym).unwrap();
    assert_eq!(sym.entries().len(), 1);
    assert_eq!(sym.dimension(), BigUint::from(20u32)); // C(6, 3)
    let ext = power_weights(&w, 3, PowerMode::Ext).unwrap();
    assert_eq!(ext.dimension(), BigUint::from(4u32)); // C(4, 3)
    let tensor = power_weights(&w, 3, PowerMode::Tensor).unwrap();
    assert_eq!(tensor.dimension(), BigUint::from(64u32));

    // Huge multiplicities stay exact.
    let big = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
    let w = WeightMultiset::from_pairs(1, vec![(WeightVector(vec![1]), big.clone())]).unwrap();
    let sym = power_weights(&w, 2, PowerMode::Sym).unwrap();
    assert_eq!(sym.dimension(), (&big * (&big + 1u32)) / 2u32);
}

#[test]
fn error_cases() {
    let w = multiset(1, &[&[1], &[-1]]);
    assert!(matches!(
        power_weights(&w, 0, PowerMode::Sym),
        Err(WeightError::ZeroK)
    ));
    assert!(matches!(
        power_weights(&w, 3, PowerMode::Ext),
        Err(WeightError::ExtTooLarge { .. })
    ));
    let p = power_weights(&w, 2, PowerMode::Sym).unwrap();
    assert!(matches!(
        recover_from_power(&p, 0, 2, RecoverMode::Sym),
        Err(WeightError::ZeroN)
    ));
    assert!(matches!(
        recover_from_power(&p, 2, 0, RecoverMode::Sym),
        Err(WeightError::ZeroK)
    ));
    assert!(WeightMultiset::from_vectors(1, Vec::<Vec<i64>>::new()).is_err());
    assert!(WeightMultiset::from_pairs(
        1,
        vec![(WeightVector(vec![1, 2]), BigUint::from(1u32))]
    )
    .is_err());
}

#[test]
fn document_round_trip() {
    let w = WeightMultiset::from_pairs(
        2,
        vec![
            (WeightVector(vec![3, -1]), BigUint::from(2u32)),
            (
                WeightVector(vec![0, 0]),
                BigUint::parse_bytes(b"99999999999999999999", 10).unwrap(),
            ),
        ],
    )
    .unwrap();
    let text = serde_json::to_string_pretty(&w).unwrap();
    let back: WeightMultiset = serde_json::from_str(&text).unwrap();
    assert_eq!(back, w);
    // Multiplicities are strings in the document.
    assert!(text.contains("\"99999999999999999999\""));

    // Zero or malformed multiplicities are rejected.
    let bad = r#"{"rank": 1, "weights": [{"v": [1], "m": "0"}]}"#;
    assert!(serde_json::from_str::<WeightMultiset>(bad).is_err());
    let bad = r#"{"rank": 1, "weights": [{"v": [1], "m": "x"}]}"#;
    assert!(serde_json::from_str::<WeightMultiset>(bad).is_err());
    let bad = r#"{"rank": 1, "weights": [{"v": [1, 2], "m": "1"}]}"#;
    assert!(serde_json::from_str::<WeightMultiset>(bad).is_err());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_multiset() -> impl Strategy<Value = WeightMultiset> {
        (1usize..=2, 1usize..=4).prop_flat_map(|(rank, dim)| {
            prop::collection::vec(prop::collection::vec(-4i64..=4, rank), dim)
                .prop_map(move |vs| WeightMultiset::from_vectors(rank, vs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn round_trip_property(w in arb_multiset(), k in 1u32..=3) {
            let n: u32 = w.dimension().to_string().parse().unwrap();
            for (mode, rmode) in [
                (PowerMode::Sym, RecoverMode::Sym),
                (PowerMode::Tensor, RecoverMode::Tensor),
            ] {
                let p = power_weights(&w, k, mode).unwrap();
                prop_assert_eq!(recover_from_power(&p, n, k, rmode).unwrap(), w.clone());
            }
        }

        #[test]
        fn negation_is_involutive_and_detects_self_duality(w in arb_multiset()) {
            prop_assert_eq!(w.negate().negate(), w.clone());
            prop_assert_eq!(self_dual_check(&w), w == w.negate());
        }
    }
}
