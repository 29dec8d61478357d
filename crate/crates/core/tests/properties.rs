mod common;

use common::*;
use proptest::collection::vec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn laurent_ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        ring_laws(&a, &b, &c)?;
    }

    #[test]
    fn expansion_is_a_ring_map(a in poly(3), b in poly(3), d in 0u32..5) {
        series_is_ring_map(&a, &b, d)?;
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b) in (3usize..=5).prop_flat_map(|n| (word(n, 4), word(n, 4)))) {
        homomorphism(&a, &b)?;
    }

    #[test]
    fn truncation_commutes_with_evaluation(w in any_word(5), d in 0u32..5) {
        truncation_commutes(&w, d)?;
    }

    #[test]
    fn identity_at_t_equal_one(w in any_word(6)) {
        t_one_identity(&w)?;
    }

    #[test]
    fn determinant_is_a_monomial(w in any_word(5)) {
        determinant_monomial(&w)?;
    }

    #[test]
    fn free_words_die_when_the_last_strand_is_deleted(w in free_word(6)) {
        delete_strand(&w)?;
    }

    #[test]
    fn json_round_trips(p in poly(3), d in 0u32..4) {
        json_round_trip(&p, d)?;
    }

    #[test]
    fn class_json_round_trips(c in basic(4, 1..=4)) {
        class_json_round_trip(&c, 4)?;
    }

    #[test]
    fn classes_are_trace_free(c in basic(5, 2..=4)) {
        trace_zero(&c, 5)?;
    }

    #[test]
    fn classes_add((c, d) in basic_pair(4, 1..=4)) {
        additivity(&c, &d, 4)?;
    }

    #[test]
    fn inverse_negates(c in basic(4, 1..=4)) {
        inversion(&c, 4)?;
    }

    #[test]
    fn products_stay_in_the_filtration(cs in (2usize..=3).prop_flat_map(|w| vec(basic(4, w..=w), 1..=3))) {
        filtration(&cs, 4)?;
    }

    #[test]
    fn pi_does_not_depend_on_depth(c in basic(4, 1..=3), extra in 0u32..=2) {
        pi_independent_of_depth(&c, 4, extra)?;
    }
}

#[test]
fn every_generator_fixes_the_weighted_row_vector() {
    for n in 2..=6 {
        for r in 1..n {
            for s in r + 1..=n {
                fixed_row_vector(n, r, s).unwrap();
            }
        }
    }
}
