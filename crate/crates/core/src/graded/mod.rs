//! Graded coordinates of the congruence filtration: `pi_i`, the images
//! `Phi^i` of basic commutators, and exact rank and kernel computations over
//! the Hall basis.

mod class;
mod linalg;
mod sfold;
mod tables;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{self, evaluate_truncated, BraidWord};
use crate::error::{Error, Result};
use crate::hall::{self, basic_commutators, commutator_to_word, witt_rank, CommutatorTerm};
use crate::laurent::SeriesMatrix;

pub use class::{Coordinate, GradedClass, Monomial};
pub use linalg::{integer_kernel, integer_rank, modular_rank, IntMatrix};
pub use sfold::{sfold_property_check, SfoldReport};
pub use tables::{
    expected_class, verify_tables, CellCheck, DuplicateCell, DuplicateReading, ShapeSummary, TableReport,
};

/// Degree-`i` coefficient data of `M - I`.
///
/// Fails with a domain error when `M` is not congruent to the identity
/// modulo `J^i`; the message names the first offending lower-degree term.
pub fn pi(m: &SeriesMatrix, i: usize) -> Result<GradedClass> {
    let n = m.size();
    let Some(ctx) = m.ring_context() else {
        return Ok(GradedClass::zero(0, i));
    };
    if (ctx.max_deg as usize) < i {
        return Err(Error::usage(format!("series truncated at degree {} cannot resolve degree {i}", ctx.max_deg)));
    }
    if ctx.n_vars != n {
        return Err(Error::usage(format!("{n}x{n} matrix over {} variables", ctx.n_vars)));
    }
    let mut out = GradedClass::zero(n, i);
    for row in 0..n {
        for col in 0..n {
            for (e, c) in m.get(row, col).terms() {
                let d = e.total_degree() as usize;
                let value = if row == col && d == 0 { c - 1 } else { c.clone() };
                if d < i && value != BigInt::from(0) {
                    return Err(Error::domain(format!(
                        "entry ({}, {}) has degree-{d} coefficient {value} at {} (matrix is not congruent to I mod J^{i})",
                        row + 1,
                        col + 1,
                        if d == 0 { "1".to_string() } else { Monomial::new(e.to_index_multiset()).to_string() },
                    )));
                }
                if d == i {
                    out.add_unchecked(Coordinate::new(Monomial::new(e.to_index_multiset()), row + 1, col + 1), value);
                }
            }
        }
    }
    Ok(out)
}

/// Truncated Gassner matrices of a commutator and of its inverse, built
/// bracket by bracket: `[a, b] = A B A^-1 B^-1` and
/// `[a, b]^-1 = B A B^-1 A^-1`.
pub fn commutator_matrices(c: &CommutatorTerm, n: usize, max_deg: u32) -> Result<(SeriesMatrix, SeriesMatrix)> {
    commutator_to_word(c, n)?;
    let mut memo = HashMap::new();
    let (m, inv) = commutator_matrices_memo(c, n, max_deg, &mut memo);
    Ok((m.as_ref().clone(), inv.as_ref().clone()))
}

pub(crate) type MatrixPair = (Arc<SeriesMatrix>, Arc<SeriesMatrix>);

/// [`commutator_matrices`] for a whole list of commutators, sharing the
/// matrices of common sub-brackets.
pub(crate) fn commutator_matrices_many(cs: &[CommutatorTerm], n: usize, max_deg: u32) -> Result<Vec<MatrixPair>> {
    let mut memo = HashMap::new();
    cs.iter()
        .map(|c| {
            commutator_to_word(c, n)?;
            Ok(commutator_matrices_memo(c, n, max_deg, &mut memo))
        })
        .collect()
}

fn commutator_matrices_memo(
    c: &CommutatorTerm,
    n: usize,
    max_deg: u32,
    memo: &mut HashMap<CommutatorTerm, MatrixPair>,
) -> MatrixPair {
    if let Some(p) = memo.get(c) {
        return p.clone();
    }
    let pair = match c {
        CommutatorTerm::Leaf(j) => {
            let fwd = braid::truncated_letter(n, braid::BraidLetter::new(*j, n, 1), max_deg).expect("checked");
            let inv = braid::truncated_letter(n, braid::BraidLetter::new(*j, n, -1), max_deg).expect("checked");
            (fwd, inv)
        }
        CommutatorTerm::Bracket(a, b) => {
            let (am, ai) = commutator_matrices_memo(a, n, max_deg, memo);
            let (bm, bi) = commutator_matrices_memo(b, n, max_deg, memo);
            let fwd = &(&(am.as_ref() * bm.as_ref()) * ai.as_ref()) * bi.as_ref();
            let inv = &(&(bm.as_ref() * am.as_ref()) * bi.as_ref()) * ai.as_ref();
            (Arc::new(fwd), Arc::new(inv))
        }
    };
    memo.insert(c.clone(), pair.clone());
    pair
}

/// `Phi^i(c)` for a commutator of weight `i`, on `n` strands.
///
/// Computed bracket by bracket (see [`commutator_matrices`]); this is the
/// same matrix as evaluating [`commutator_to_word`] letter by letter,
/// which [`phi_via_word`] does.
pub fn phi(c: &CommutatorTerm, n: usize) -> Result<GradedClass> {
    let w = c.weight();
    let (m, _) = commutator_matrices(c, n, w as u32)?;
    pi(&m, w)
}

/// `pi(evaluate_truncated(commutator_to_word(c, n), i), i)`.
pub fn phi_via_word(c: &CommutatorTerm, n: usize) -> Result<GradedClass> {
    let w = c.weight();
    let word = commutator_to_word(c, n)?;
    pi(&evaluate_truncated(&word, w as u32), w)
}

/// Class in `K^i / K^{i+1}` of an arbitrary word, which must lie in `K^i`.
pub fn word_class(word: &BraidWord, i: usize) -> Result<GradedClass> {
    pi(&evaluate_truncated(word, i as u32), i)
}

/// The integer matrix of `Phi^w` on the weight-`w` Hall basis of `F_{n-1}`.
///
/// Rows follow the basis order (largest first); columns are the observed
/// nonzero coordinates in sorted order.
#[derive(Clone, Debug)]
pub struct PhiMatrix {
    pub n: usize,
    pub weight: usize,
    pub rows: Vec<CommutatorTerm>,
    pub cols: Vec<Coordinate>,
    pub classes: Vec<GradedClass>,
    pub matrix: IntMatrix,
}

impl PhiMatrix {
    pub fn row_index(&self, c: &CommutatorTerm) -> Option<usize> {
        self.rows.iter().position(|r| r == c)
    }
}

pub fn assemble_phi_matrix(n: usize, w: usize) -> Result<PhiMatrix> {
    braid::check_strands(n)?;
    if n < 3 && w > 1 {
        // a single free generator has no commutators
        return Ok(PhiMatrix {
            n,
            weight: w,
            rows: vec![],
            cols: vec![],
            classes: vec![],
            matrix: IntMatrix::zeros(0, 0),
        });
    }
    let basis = basic_commutators(n - 1, w)?;
    let classes = basis.par_iter().map(|c| phi(c, n)).collect::<Result<Vec<_>>>()?;
    Ok(phi_matrix_from_classes(n, w, basis.to_vec(), classes))
}

pub(crate) fn phi_matrix_from_classes(
    n: usize,
    w: usize,
    rows: Vec<CommutatorTerm>,
    classes: Vec<GradedClass>,
) -> PhiMatrix {
    let cols: Vec<Coordinate> =
        classes.iter().flat_map(|k| k.coords().map(|(c, _)| c.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    let index: HashMap<&Coordinate, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut matrix = IntMatrix::zeros(rows.len(), cols.len());
    for (r, k) in classes.iter().enumerate() {
        for (c, v) in k.coords() {
            matrix.set(r, index[c], v.clone());
        }
    }
    PhiMatrix { n, weight: w, rows, cols, classes, matrix }
}

/// A kernel vector over the Hall basis, primitive with its first nonzero
/// entry positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelVector {
    pub coefficients: Vec<BigInt>,
}

impl KernelVector {
    pub fn labeled<'a>(
        &'a self,
        labels: &'a [CommutatorTerm],
    ) -> impl Iterator<Item = (&'a CommutatorTerm, &'a BigInt)> {
        labels.iter().zip(&self.coefficients).filter(|(_, c)| **c != BigInt::from(0))
    }
}

/// Rank and kernel of `Phi^w` on `F_{n-1}`.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub n: usize,
    pub weight: usize,
    pub rows: Vec<CommutatorTerm>,
    pub rank: usize,
    pub expected: u128,
    pub kernel: Vec<KernelVector>,
}

impl KernelReport {
    pub fn injective(&self) -> bool {
        self.kernel.is_empty()
    }
}

pub fn kernel_report(n: usize, w: usize) -> Result<KernelReport> {
    let pm = assemble_phi_matrix(n, w)?;
    Ok(kernel_report_from(&pm))
}

pub fn kernel_report_from(pm: &PhiMatrix) -> KernelReport {
    let kernel = integer_kernel(&pm.matrix).into_iter().map(|coefficients| KernelVector { coefficients }).collect();
    KernelReport {
        n: pm.n,
        weight: pm.weight,
        rows: pm.rows.clone(),
        rank: integer_rank(&pm.matrix),
        expected: if pm.n >= 2 { witt_rank(pm.n - 1, pm.weight) } else { 0 },
        kernel,
    }
}

#[derive(Serialize)]
struct LabeledCoeff {
    label: String,
    c: String,
}

#[derive(Serialize)]
struct KernelReportRepr {
    n: usize,
    weight: usize,
    rows: usize,
    rank: usize,
    expected: String,
    injective: bool,
    kernel: Vec<Vec<LabeledCoeff>>,
}

impl Serialize for KernelReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KernelReportRepr {
            n: self.n,
            weight: self.weight,
            rows: self.rows.len(),
            rank: self.rank,
            expected: self.expected.to_string(),
            injective: self.injective(),
            kernel: self
                .kernel
                .iter()
                .map(|k| {
                    k.labeled(&self.rows)
                        .map(|(l, c)| LabeledCoeff { label: l.to_string(), c: c.to_string() })
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Checks that a class is trace-free in every factor.
pub fn is_trace_free(k: &GradedClass) -> bool {
    k.monomials().iter().all(|m| k.factor_trace(m) == BigInt::from(0))
}

/// Checks that, within every factor, each column of the class sums to zero.
///
/// Every Gassner matrix fixes the row vector `(1, t_1, t_1 t_2, ...,
/// t_1...t_{n-1})`, which is `(1, ..., 1)` at `t = 1`; hence the all-ones
/// row vector kills the leading coefficient of `M - I` for any `M` in the
/// image, and every genuine class has vanishing column sums.
pub fn column_sums_vanish(k: &GradedClass) -> bool {
    let mut sums: BTreeMap<(&Monomial, usize), BigInt> = BTreeMap::new();
    for (c, v) in k.coords() {
        *sums.entry((&c.mono, c.col)).or_default() += v;
    }
    sums.values().all(|v| v.is_zero())
}

/// Re-export of the commutator convention for callers of this module.
pub use hall::bracket_words;
