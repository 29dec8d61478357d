//! Strategies and property checks shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use gassner::braid::{
    delete_strand_reduction, evaluate_exact, evaluate_truncated, gassner_generator, BraidLetter, BraidWord,
};
use gassner::graded::{column_sums_vanish, is_trace_free, phi, pi, word_class};
use gassner::hall::{basic_commutators, commutator_to_word, CommutatorTerm};
use gassner::laurent::{ExponentVector, LaurentMatrix, LaurentPoly, SeriesMatrix, TruncatedSeries};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const SEED: u64 = 0x6a55_4e52;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(config(cases))
}

pub fn letter(n: usize) -> impl Strategy<Value = BraidLetter> {
    (1..n)
        .prop_flat_map(move |r| (Just(r), r + 1..=n, prop_oneof![Just(1i8), Just(-1i8)]))
        .prop_map(|(r, s, e)| BraidLetter::new(r, s, e))
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    vec(letter(n), 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

/// A word on 3 to 5 strands.
pub fn any_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=5).prop_flat_map(move |n| word(n, max_len))
}

/// A word in the free generators `A(j, n)`.
pub fn free_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=5).prop_flat_map(move |n| {
        vec((1..n, prop_oneof![Just(1i8), Just(-1i8)]), 0..=max_len).prop_map(move |l| {
            BraidWord::new(n, l.into_iter().map(|(j, e)| BraidLetter::new(j, n, e)).collect()).unwrap()
        })
    })
}

/// A basic commutator of weight in `weights` on `n` strands.
pub fn basic(n: usize, weights: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CommutatorTerm> {
    weights.prop_flat_map(move |w| {
        let b = basic_commutators(n - 1, w).unwrap();
        (0..b.len()).prop_map(move |i| b[i].clone())
    })
}

/// Two basic commutators of the same weight.
pub fn basic_pair(
    n: usize,
    weights: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (CommutatorTerm, CommutatorTerm)> {
    weights.prop_flat_map(move |w| {
        let b = basic_commutators(n - 1, w).unwrap();
        let len = b.len();
        (0..len, 0..len).prop_map(move |(i, j)| (b[i].clone(), b[j].clone()))
    })
}

pub fn poly(n_vars: usize) -> impl Strategy<Value = LaurentPoly> {
    vec((vec(-2i32..=2, n_vars), -4i64..=4), 0..5).prop_map(move |t| LaurentPoly::from_terms(n_vars, t).unwrap())
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what()))
    }
}

pub fn ring_laws(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), TestCaseError> {
    check(&(a * b) * c == a * &(b * c), || "associativity".into())?;
    check(a * b == b * a, || "commutativity".into())?;
    check(a * &(b + c) == &(a * b) + &(a * c), || "distributivity".into())?;
    check((a - &a.clone()).is_empty(), || "a - a".into())?;
    check(a * &LaurentPoly::one(a.n_vars()) == *a, || "unit".into())
}

/// Expansion into the truncated ring is a ring map.
pub fn series_is_ring_map(a: &LaurentPoly, b: &LaurentPoly, d: u32) -> Result<(), TestCaseError> {
    let s = |p: &LaurentPoly| TruncatedSeries::from_laurent(p, d);
    check(s(&(a * b)) == &s(a) * &s(b), || format!("product at D={d}"))?;
    check(s(&(a + b)) == &s(a) + &s(b), || format!("sum at D={d}"))
}

pub fn homomorphism(a: &BraidWord, b: &BraidWord) -> Result<(), TestCaseError> {
    let ab = a.concat(b).unwrap();
    check(evaluate_exact(&ab) == &evaluate_exact(a) * &evaluate_exact(b), || format!("G({a} . {b})"))?;
    let inv = &evaluate_exact(a) * &evaluate_exact(&a.inverse());
    check(inv.is_identity(), || format!("G({a}) G({a})^-1"))
}

pub fn truncation_commutes(w: &BraidWord, d: u32) -> Result<(), TestCaseError> {
    check(evaluate_exact(w).to_series(d) == evaluate_truncated(w, d), || format!("{w} at D={d}"))
}

pub fn t_one_identity(w: &BraidWord) -> Result<(), TestCaseError> {
    check(evaluate_exact(w).augmentation().is_identity(), || format!("{w} at t=1"))
}

pub fn determinant_monomial(w: &BraidWord) -> Result<(), TestCaseError> {
    let n = w.n();
    let mut e = vec![0i32; n];
    for l in w.letters() {
        e[l.r - 1] += l.exponent as i32;
        e[l.s - 1] += l.exponent as i32;
    }
    let want = LaurentPoly::monomial(n, ExponentVector::from_slice(&e).unwrap(), 1);
    check(evaluate_exact(w).determinant() == Some(want), || format!("det G({w})"))
}

pub fn delete_strand(w: &BraidWord) -> Result<(), TestCaseError> {
    let n = w.n();
    let r = delete_strand_reduction(&evaluate_exact(w)).unwrap();
    check(r == LaurentMatrix::laurent_identity(n - 1, n - 1), || format!("delete strand of {w}"))
}

/// `(1, t_1, t_1 t_2, ...)` is fixed by every generator.
pub fn fixed_row_vector(n: usize, r: usize, s: usize) -> Result<(), TestCaseError> {
    let g = gassner_generator(n, r, s).unwrap();
    let mut w = vec![LaurentPoly::one(n)];
    for k in 1..n {
        let next = &w[k - 1] * &LaurentPoly::t(n, k);
        w.push(next);
    }
    for j in 0..n {
        let mut acc = LaurentPoly::zero(n);
        for (i, wi) in w.iter().enumerate() {
            acc = &acc + &(wi * g.get(i, j));
        }
        check(acc == w[j], || format!("w G({r},{s}) column {j}"))?;
    }
    Ok(())
}

pub fn trace_zero(c: &CommutatorTerm, n: usize) -> Result<(), TestCaseError> {
    let k = phi(c, n).unwrap();
    check(is_trace_free(&k), || format!("trace of Phi({c})"))?;
    check(column_sums_vanish(&k), || format!("column sums of Phi({c})"))
}

pub fn additivity(c: &CommutatorTerm, d: &CommutatorTerm, n: usize) -> Result<(), TestCaseError> {
    let i = c.weight();
    let word = commutator_to_word(c, n).unwrap().concat(&commutator_to_word(d, n).unwrap()).unwrap();
    let lhs = word_class(&word, i).unwrap();
    let rhs = phi(c, n).unwrap().checked_add(&phi(d, n).unwrap()).unwrap();
    check(lhs == rhs, || format!("Phi({c} {d})"))
}

pub fn inversion(c: &CommutatorTerm, n: usize) -> Result<(), TestCaseError> {
    let word = commutator_to_word(c, n).unwrap().inverse();
    check(word_class(&word, c.weight()).unwrap() == phi(c, n).unwrap().neg(), || format!("Phi({c}^-1)"))
}

/// A product of weight-`i` commutator words is congruent to `I` mod `J^i`.
pub fn filtration(cs: &[CommutatorTerm], n: usize) -> Result<(), TestCaseError> {
    let i = cs[0].weight() as u32;
    let mut word = BraidWord::empty(n).unwrap();
    for c in cs {
        word = word.concat(&commutator_to_word(c, n).unwrap()).unwrap();
    }
    let m: SeriesMatrix = evaluate_truncated(&word, i);
    check(m.first_nonvanishing_degree().is_none_or(|d| d >= i), || format!("filtration of {word}"))
}

pub fn pi_independent_of_depth(c: &CommutatorTerm, n: usize, extra: u32) -> Result<(), TestCaseError> {
    let i = c.weight();
    let word = commutator_to_word(c, n).unwrap();
    let k = pi(&evaluate_truncated(&word, i as u32 + extra), i).unwrap();
    check(k == phi(c, n).unwrap(), || format!("pi of {c} at D={}", i as u32 + extra))
}

pub fn json_round_trip(p: &LaurentPoly, d: u32) -> Result<(), TestCaseError> {
    let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(p).unwrap()).unwrap();
    check(&back == p, || "poly".into())?;
    let s = TruncatedSeries::from_laurent(p, d);
    let back: TruncatedSeries = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    check(back == s, || "series".into())?;
    let n = p.n_vars();
    let m = SeriesMatrix::from_fn(2, |i, j| if i == j { s.clone() } else { TruncatedSeries::zero(n, d) });
    let back: SeriesMatrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
    check(back == m, || "matrix".into())
}

pub fn class_json_round_trip(c: &CommutatorTerm, n: usize) -> Result<(), TestCaseError> {
    let k = phi(c, n).unwrap();
    let back = serde_json::from_str(&serde_json::to_string(&k).unwrap()).unwrap();
    check(k == back, || format!("class of {c}"))?;
    let t: CommutatorTerm = serde_json::from_str(&serde_json::to_string(c).unwrap()).unwrap();
    check(&t == c, || format!("term {c}"))
}
