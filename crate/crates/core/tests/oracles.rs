//! Independent checks of values established by computation rather than
//! quoted: each is recomputed along a second route that shares as little
//! code as possible with the first.

use gassner::braid::{evaluate_exact, evaluate_truncated, parse_word};
use gassner::graded::{
    assemble_phi_matrix, integer_rank, kernel_report, modular_rank, phi, phi_via_word, verify_tables,
};
use gassner::hall::{basic_commutators, witt_rank};
use gassner::search::{weight_five_pair_regression, SearchConfig, Searcher, PAIR_W1, PAIR_W2};
use num_bigint::BigInt;
use num_traits::Zero;

/// Lyndon words of length `w` over `m` letters, by brute force.
fn lyndon_count(m: usize, w: usize) -> usize {
    let total = m.pow(w as u32);
    (0..total)
        .filter(|&code| {
            let mut x = code;
            let word: Vec<usize> = (0..w)
                .map(|_| {
                    let d = x % m;
                    x /= m;
                    d
                })
                .collect();
            (1..w).all(|k| {
                let rot: Vec<usize> = word[k..].iter().chain(&word[..k]).copied().collect();
                word < rot
            })
        })
        .count()
}

#[test]
fn basis_sizes_match_lyndon_counts() {
    for m in 1..=4 {
        for w in 1..=6 {
            if m == 4 && w == 6 {
                continue;
            }
            let lyndon = lyndon_count(m, w);
            assert_eq!(witt_rank(m, w), lyndon as u128, "Witt({m},{w})");
            assert_eq!(basic_commutators(m, w).unwrap().len(), lyndon, "basis({m},{w})");
        }
    }
    assert_eq!(lyndon_count(3, 5), 48);
    assert_eq!(lyndon_count(3, 6), 116);
}

#[test]
fn exact_ranks_agree_with_modular_ranks() {
    for (n, w) in [(3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (4, 4), (4, 5), (5, 3), (5, 4)] {
        let pm = assemble_phi_matrix(n, w).unwrap();
        let r = integer_rank(&pm.matrix);
        for p in [1_000_000_007u64, 998_244_353] {
            assert_eq!(modular_rank(&pm.matrix, p), r, "n={n} w={w} p={p}");
        }
    }
}

#[test]
fn kernel_vectors_annihilate_the_matrix() {
    let pm = assemble_phi_matrix(4, 5).unwrap();
    let rep = kernel_report(4, 5).unwrap();
    assert_eq!(rep.kernel.len(), pm.matrix.rows() - rep.rank);
    for k in &rep.kernel {
        for j in 0..pm.matrix.cols() {
            let s: BigInt = (0..pm.matrix.rows()).map(|i| &k.coefficients[i] * pm.matrix.get(i, j)).sum();
            assert!(s.is_zero());
        }
    }
}

#[test]
fn bracketwise_phi_matches_letter_by_letter_evaluation() {
    for w in 1..=4 {
        for c in basic_commutators(3, w).unwrap().iter() {
            assert_eq!(phi(c, 4).unwrap(), phi_via_word(c, 4).unwrap(), "{c}");
        }
    }
    for c in basic_commutators(3, 5).unwrap().iter().step_by(7) {
        assert_eq!(phi(c, 4).unwrap(), phi_via_word(c, 4).unwrap(), "{c}");
    }
}

/// The first differing degree of `W1 W2^-1`, from the exact matrices:
/// `W1 W2^-1 - I = (W1 - W2) W2^-1` and `W2^-1 ≡ I` modulo `J^5`, so it is
/// the lowest degree of the exact difference `W1 - W2`.
#[test]
fn first_differing_degree_via_exact_matrices() {
    let w1 = evaluate_exact(&parse_word(PAIR_W1, 4).unwrap());
    let w2 = evaluate_exact(&parse_word(PAIR_W2, 4).unwrap());
    let diff = w1.checked_sub(&w2).unwrap();
    let low = diff.to_series(8).entries().iter().filter_map(|e| e.low_degree()).min();
    assert_eq!(low, Some(6));
    assert_eq!(weight_five_pair_regression().unwrap().first_differing_degree, low);
}

#[test]
fn search_shortcut_matches_products_and_words() {
    let cfg = SearchConfig { coeff_bound: 2, support_bound: 3, ..Default::default() };
    let s = Searcher::new(&cfg).unwrap();
    let cands = s.candidates();
    for c in cands.iter().step_by(37).take(4) {
        let linear = s.first_nonvanishing_degree(c).unwrap();
        let product = s.truncated_product(c).unwrap();
        assert_eq!(linear, product.first_nonvanishing_degree());
        let word = gassner::search::vector_to_word(s.labels(), &c.coefficients, 4).unwrap();
        assert_eq!(evaluate_truncated(&word, 8), product, "{:?}", c.combination);
    }
}

#[test]
fn modular_certificate_agrees_with_exact_evaluation() {
    let cfg = SearchConfig { coeff_bound: 1, support_bound: 1, ..Default::default() };
    let s = Searcher::new(&cfg).unwrap();
    let cands = s.candidates();
    let results: Vec<_> = cands.iter().enumerate().map(|(i, c)| s.test(i, c).unwrap()).collect();
    let shortest = results.iter().min_by_key(|r| r.word_length).unwrap();
    let (c, r) = (&cands[shortest.index], shortest);
    assert!(!r.is_identity);
    let word = gassner::search::vector_to_word(s.labels(), &c.coefficients, 4).unwrap();
    assert!(!evaluate_exact(&word).is_identity());
}

#[test]
fn table_rows_that_disagree_also_break_column_sums() {
    for n in [4, 5] {
        let rep = verify_tables(n).unwrap();
        for s in &rep.shapes {
            let broken = s.table_column_sum_violations > 0;
            if s.weight == 4 && s.shape == "left_normed" {
                assert!(broken && s.mismatched_commutators >= s.table_column_sum_violations);
            } else {
                assert!(!broken && s.mismatched_cells == 0, "{s:?}");
            }
        }
    }
}
