//! Shared workloads for the criterion benches.

use gassner::braid::{evaluate_exact, evaluate_truncated, parse_word};
use gassner::graded::{assemble_phi_matrix, kernel_report_from, PhiMatrix};
use gassner::search::PAIR_W1;
use gassner::{BraidWord, KernelReport, LaurentMatrix, SeriesMatrix};

/// The weight-5 commutator word on four strands used throughout the benches.
pub fn weight_five_word() -> BraidWord {
    parse_word(PAIR_W1, 4).expect("constant word parses")
}

/// Exact Laurent-matrix evaluation of a word.
pub fn exact(word: &BraidWord) -> LaurentMatrix {
    evaluate_exact(word)
}

/// Evaluation modulo `J^(max_deg+1)`.
pub fn truncated(word: &BraidWord, max_deg: u32) -> SeriesMatrix {
    evaluate_truncated(word, max_deg)
}

/// Builds the graded matrix for `(n, w)`.
pub fn phi_matrix(n: usize, w: usize) -> PhiMatrix {
    assemble_phi_matrix(n, w).expect("valid parameters")
}

/// Exact rank and kernel of a prebuilt graded matrix.
pub fn kernel(pm: &PhiMatrix) -> KernelReport {
    kernel_report_from(pm)
}
