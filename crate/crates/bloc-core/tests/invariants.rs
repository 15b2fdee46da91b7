//! Cross-module invariants that complement the acceptance suite, plus
//! property tests on the arithmetic kernels.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use bloc_core::oracle::{build_coinvariant_ring, OracleBudget};
use bloc_core::partitions::{
    enumerate_partitions, fake_degree, parse_partition, standard_tableaux, Partition,
};
use bloc_core::poly::{q_factorial, LaurentPolynomial};
use bloc_core::symgroup::kostka;

/// Σ_σ f_σ(u)·dim S(σ) = [m]_u!: the coinvariant ring is the regular
/// representation with its grading.
#[test]
fn fake_degrees_resolve_the_graded_regular_representation() {
    for m in 1..=8usize {
        let mut total = LaurentPolynomial::zero();
        for sigma in enumerate_partitions(m) {
            total += &fake_degree(&sigma).scale(&BigInt::from(sigma.dim_irrep()));
        }
        assert_eq!(total, q_factorial(m), "m = {m}");
    }
}

/// The same identity against the oracle ring's Hilbert series, m ≤ 5.
#[test]
fn fake_degree_sum_matches_oracle_hilbert_series() {
    let budget = OracleBudget::default();
    for m in 1..=5usize {
        let ring = build_coinvariant_ring(m, &budget).unwrap();
        let mut total = LaurentPolynomial::zero();
        for sigma in enumerate_partitions(m) {
            total += &fake_degree(&sigma).scale(&BigInt::from(sigma.dim_irrep()));
        }
        assert_eq!(total, ring.hilbert_series(), "m = {m}");
    }
}

/// Conjugation complements descent sets: Dec(T) and Dec(T∨) partition
/// {1, …, m-1}.
#[test]
fn descent_sets_of_conjugates_partition_the_interval() {
    for m in 1..=7usize {
        let full: BTreeSet<usize> = (1..m).collect();
        for shape in enumerate_partitions(m) {
            for t in standard_tableaux(&shape) {
                let d = t.descent_set();
                let dc = t.conjugate().descent_set();
                assert!(d.is_disjoint(&dc), "shape {shape}");
                let union: BTreeSet<usize> = d.union(&dc).copied().collect();
                assert_eq!(union, full, "shape {shape}");
            }
        }
    }
}

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=4, 0..=4).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.iter().sum::<usize>() > max_size {
            parts.pop();
        }
        Partition::new(parts).unwrap()
    })
}

fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
    proptest::collection::btree_map(-6i64..=6, -9i64..=9, 0..=6).prop_map(|m| {
        LaurentPolynomial::from_terms(m.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in arb_partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn partition_display_parse_round_trip(p in arb_partition(12)) {
        let shown = p.to_string();
        let inner = shown.trim_start_matches('(').trim_end_matches(')');
        prop_assert_eq!(parse_partition(inner).unwrap(), p);
    }

    #[test]
    fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a - &a, LaurentPolynomial::zero());
    }

    #[test]
    fn poly_reverse_is_multiplicative(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!((&a * &b).reverse(), &a.reverse() * &b.reverse());
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn poly_evaluation_at_one_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn kostka_is_content_permutation_invariant(
        shape in arb_partition(8),
        seed in proptest::collection::vec(0usize..=3, 0..=5),
    ) {
        // build a content of the right total from the seed, then compare
        // against a rotation of it
        let size = shape.size();
        let mut content = seed;
        let mut total: usize = content.iter().sum();
        while total > size {
            let last = content.pop().unwrap();
            total -= last;
        }
        if total < size {
            content.push(size - total);
        }
        let k1 = kostka(&shape, &content).unwrap();
        let steps = 1.min(content.len().saturating_sub(1));
        content.rotate_left(steps);
        let k2 = kostka(&shape, &content).unwrap();
        prop_assert_eq!(k1, k2);
    }
}
