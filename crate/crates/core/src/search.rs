//! Bounded search for nontrivial elements of the kernel of the Gassner
//! representation restricted to the free subgroup: integer combinations of
//! kernel vectors of `Phi^w` are turned into words and tested exactly.
//!
//! Testing is split in two:
//!
//! * **Identity.** A candidate is evaluated modulo a 61-bit prime at a few
//!   seeded random points. A value different from `I` proves the exact
//!   matrix is not `I`; only when every point gives `I` is the candidate
//!   evaluated exactly over `Z[t^{±1}]`.
//! * **First nonvanishing degree.** Each basis commutator `c_j` of weight
//!   `w` has matrix `I + N_j` with `N_j ≡ 0 mod J^w`. Any product of two
//!   `N`'s lies in `J^{2w}`, so modulo `J^{2w}` the candidate
//!   `prod (I + N_j)^{m_j}` equals `I + sum m_j N_j`. For a probe depth below
//!   `2w` the leading degree is therefore read off a linear combination of
//!   precomputed coefficient vectors; deeper probes multiply truncated
//!   matrices.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    check_strands, evaluate_exact, evaluate_truncated, gassner_letter, parse_word, BraidLetter, BraidWord,
};
use crate::error::{Error, Result};
use crate::graded::{commutator_matrices_many, kernel_report, pi, GradedClass, KernelVector};
use crate::hall::{commutator_to_word, CommutatorTerm, MAX_WEIGHT};
use crate::laurent::{mul_mod, ExponentVector, LaurentMatrix, PointPowers, SeriesContext, SeriesMatrix};

/// The Mersenne prime `2^61 - 1`.
pub const CERTIFICATE_PRIME: u64 = (1 << 61) - 1;

/// Number of random evaluation points used to certify non-identity.
pub const CERTIFICATE_POINTS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub weight: usize,
    /// Largest `|a_i|` in a combination of kernel basis vectors.
    pub coeff_bound: u32,
    /// Largest number of kernel basis vectors combined at once.
    pub support_bound: usize,
    /// Deepest truncation used to locate the first nonvanishing degree.
    pub degree_probe: u32,
    /// Maximum number of candidates tested.
    pub budget: usize,
    /// Seed for the evaluation points.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { n: 4, weight: 5, coeff_bound: 1, support_bound: 2, degree_probe: 8, budget: 10_000, seed: 0 }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        check_strands(self.n)?;
        if self.n < 3 {
            return Err(Error::usage("search needs n >= 3"));
        }
        if !(1..=MAX_WEIGHT).contains(&self.weight) {
            return Err(Error::usage(format!("weight must be in 1..={MAX_WEIGHT}, got {}", self.weight)));
        }
        if self.coeff_bound == 0 || self.support_bound == 0 {
            return Err(Error::usage("coefficient and support bounds must be positive"));
        }
        if (self.degree_probe as usize) < self.weight {
            return Err(Error::usage(format!(
                "degree probe {} is below the weight {}",
                self.degree_probe, self.weight
            )));
        }
        Ok(())
    }
}

/// A combination `sum a_i k_i` of kernel basis vectors, expanded over the
/// Hall basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCandidate {
    /// `(i, a_i)` pairs, kernel basis indices increasing.
    pub combination: Vec<(usize, i64)>,
    /// Coefficients over the Hall basis.
    pub coefficients: Vec<BigInt>,
}

/// Coefficients in the order `1, -1, 2, -2, ...`.
fn coefficient_order(bound: u32) -> Vec<i64> {
    (1..=bound as i64).flat_map(|a| [a, -a]).collect()
}

fn combinations(k: usize, len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > len {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + len - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Integer combinations of the kernel basis, in a fixed order: support
/// size first, then index sets lexicographically, then coefficient tuples
/// lexicographically in the order `1, -1, 2, -2, ...` with the first
/// coefficient positive (so each vector appears once up to sign). Vectors
/// whose entries share a common factor are skipped. At most `cfg.budget`
/// candidates are returned.
pub fn kernel_candidates(cfg: &SearchConfig, kernel: &[KernelVector]) -> Vec<KernelCandidate> {
    let mut out = Vec::new();
    if kernel.is_empty() || cfg.budget == 0 {
        return out;
    }
    let order = coefficient_order(cfg.coeff_bound);
    let firsts: Vec<i64> = (1..=cfg.coeff_bound as i64).collect();
    let width = kernel[0].coefficients.len();
    for k in 1..=cfg.support_bound.min(kernel.len()) {
        let mut full = false;
        combinations(k, kernel.len(), |idx| {
            let mut digits = vec![0usize; k];
            loop {
                let coeffs: Vec<i64> =
                    digits.iter().enumerate().map(|(p, &d)| if p == 0 { firsts[d] } else { order[d] }).collect();
                let mut v = vec![BigInt::zero(); width];
                for (&i, &a) in idx.iter().zip(&coeffs) {
                    for (x, c) in v.iter_mut().zip(&kernel[i].coefficients) {
                        *x += c * a;
                    }
                }
                let content = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                if content == BigInt::from(1) {
                    out.push(KernelCandidate {
                        combination: idx.iter().copied().zip(coeffs).collect(),
                        coefficients: v,
                    });
                    if out.len() >= cfg.budget {
                        full = true;
                        return false;
                    }
                }
                // odometer, last position fastest
                let mut p = k;
                loop {
                    if p == 0 {
                        return true;
                    }
                    p -= 1;
                    let radix = if p == 0 { firsts.len() } else { order.len() };
                    digits[p] += 1;
                    if digits[p] < radix {
                        break;
                    }
                    digits[p] = 0;
                }
            }
        });
        if full {
            break;
        }
    }
    out
}

/// Concatenation, in basis order, of `commutator_to_word(c_j)^{m_j}`.
pub fn vector_to_word(labels: &[CommutatorTerm], coefficients: &[BigInt], n: usize) -> Result<BraidWord> {
    if labels.len() != coefficients.len() {
        return Err(Error::usage(format!("{} labels but {} coefficients", labels.len(), coefficients.len())));
    }
    let mut word = BraidWord::empty(n)?;
    for (c, m) in labels.iter().zip(coefficients) {
        if m.is_zero() {
            continue;
        }
        let m = m.to_i64().ok_or_else(|| Error::usage(format!("coefficient {m} is too large")))?;
        word = word.concat(&commutator_to_word(c, n)?.pow(m))?;
    }
    Ok(word)
}

/// How `is_identity` was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Some evaluation point modulo the certificate prime gave a matrix other
    /// than `I`.
    Modular,
    /// The exact matrix was computed.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateResult {
    pub index: usize,
    pub combination: Vec<(usize, i64)>,
    /// Nonzero Hall-basis coefficients with their commutator labels.
    pub coefficients: Vec<(CommutatorTerm, BigInt)>,
    pub word_length: usize,
    pub is_identity: bool,
    pub certificate: Certificate,
    /// Smallest `d <= degree_probe` with a nonzero degree-`d` coefficient in
    /// `M - I`; `None` when there is none up to the probe depth.
    pub first_nonvanishing_degree: Option<u32>,
}

#[derive(Serialize)]
struct LabeledRepr {
    label: String,
    c: String,
}

#[derive(Serialize)]
struct CandidateRepr<'a> {
    index: usize,
    combination: &'a [(usize, i64)],
    coefficients: Vec<LabeledRepr>,
    word_length: usize,
    is_identity: bool,
    certificate: Certificate,
    first_nonvanishing_degree: Option<u32>,
}

impl Serialize for CandidateResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CandidateRepr {
            index: self.index,
            combination: &self.combination,
            coefficients: self
                .coefficients
                .iter()
                .map(|(l, c)| LabeledRepr { label: l.to_string(), c: c.to_string() })
                .collect(),
            word_length: self.word_length,
            is_identity: self.is_identity,
            certificate: self.certificate,
            first_nonvanishing_degree: self.first_nonvanishing_degree,
        }
        .serialize(s)
    }
}

/// Square matrix over `Z/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModMatrix {
    n: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    fn identity(n: usize, p: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        ModMatrix { n, p, data }
    }

    fn from_laurent(m: &LaurentMatrix, point: &PointPowers) -> Self {
        let n = m.size();
        let data = m.entries().iter().map(|e| e.eval_mod(point)).collect();
        ModMatrix { n, p: point.modulus(), data }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = &mut data[i * n + j];
                    *v = (*v + mul_mod(a, other.data[k * n + j], self.p)) % self.p;
                }
            }
        }
        ModMatrix { n, p: self.p, data }
    }

    fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.n, self.p);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.p)
    }
}

fn random_points(n: usize, seed: u64) -> Vec<PointPowers> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..CERTIFICATE_POINTS)
        .map(|_| {
            let values = (0..n).map(|_| rng.random_range(2..CERTIFICATE_PRIME - 1)).collect();
            PointPowers::new(CERTIFICATE_PRIME, values)
        })
        .collect()
}

fn letter_mod(n: usize, letter: BraidLetter, point: &PointPowers) -> ModMatrix {
    let g = gassner_letter(n, letter).expect("validated letter");
    let m = ModMatrix::from_laurent(&g, point);
    if letter.exponent.unsigned_abs() == 1 {
        m
    } else {
        m.pow(letter.exponent.unsigned_abs() as u64)
    }
}

fn word_mod(word: &BraidWord, point: &PointPowers) -> ModMatrix {
    let n = word.n();
    word.letters().iter().fold(ModMatrix::identity(n, point.modulus()), |acc, &l| acc.mul(&letter_mod(n, l, point)))
}

/// Whether `word` evaluates to the identity, certified modularly when it
/// does not and exactly when it does.
fn identity_test(word: &BraidWord, points: &[PointPowers]) -> (bool, Certificate) {
    if points.iter().any(|p| !word_mod(word, p).is_identity()) {
        return (false, Certificate::Modular);
    }
    (evaluate_exact(word).is_identity(), Certificate::Exact)
}

/// Tests one word: exact identity (certified as described in the module
/// docs) and the first nonvanishing degree of `M - I` up to
/// `cfg.degree_probe`.
pub fn test_candidate(word: &BraidWord, cfg: &SearchConfig) -> CandidateResult {
    let points = random_points(word.n(), cfg.seed);
    let (is_identity, certificate) = identity_test(word, &points);
    let first_nonvanishing_degree =
        if is_identity { None } else { evaluate_truncated(word, cfg.degree_probe).first_nonvanishing_degree() };
    CandidateResult {
        index: 0,
        combination: vec![],
        coefficients: vec![],
        word_length: word.len(),
        is_identity,
        certificate,
        first_nonvanishing_degree,
    }
}

type CoordKey = (usize, usize, ExponentVector);

/// Degree-`d` coefficients of `N_j`, sparse, keyed into a shared index.
struct LinearData {
    /// `per_degree[d - weight][j]` lists `(index, value)`.
    per_degree: Vec<Vec<Vec<(usize, i64)>>>,
    widths: Vec<usize>,
}

impl LinearData {
    fn build(mats: &[Arc<SeriesMatrix>], weight: u32, probe: u32) -> Option<Self> {
        let mut per_degree = Vec::new();
        let mut widths = Vec::new();
        for d in weight..=probe {
            let mut index: HashMap<CoordKey, usize> = HashMap::new();
            let mut rows = Vec::with_capacity(mats.len());
            for m in mats {
                let size = m.size();
                let mut row = Vec::new();
                for i in 0..size {
                    for j in 0..size {
                        for (e, c) in m.get(i, j).homogeneous(d) {
                            let next = index.len();
                            let k = *index.entry((i, j, *e)).or_insert(next);
                            row.push((k, c.to_i64()?));
                        }
                    }
                }
                rows.push(row);
            }
            widths.push(index.len());
            per_degree.push(rows);
        }
        Some(LinearData { per_degree, widths })
    }

    fn first_degree(&self, weight: u32, m: &[(usize, i64)]) -> Option<u32> {
        for (k, rows) in self.per_degree.iter().enumerate() {
            let mut acc = vec![0i128; self.widths[k]];
            for &(j, mj) in m {
                for &(idx, v) in &rows[j] {
                    acc[idx] += mj as i128 * v as i128;
                }
            }
            if acc.iter().any(|&x| x != 0) {
                return Some(weight + k as u32);
            }
        }
        None
    }
}

/// Everything a search needs that does not depend on the candidate.
pub struct Searcher {
    cfg: SearchConfig,
    labels: Vec<CommutatorTerm>,
    kernel: Vec<KernelVector>,
    word_lengths: Vec<usize>,
    /// Truncated `(M_j, M_j^{-1})` at depth `degree_probe`.
    mats: Vec<(Arc<SeriesMatrix>, Arc<SeriesMatrix>)>,
    linear: Option<LinearData>,
    /// `(E_j, E_j^{-1})` modulo the certificate prime, per point.
    modular: Vec<Vec<(ModMatrix, ModMatrix)>>,
    points: Vec<PointPowers>,
}

impl Searcher {
    pub fn new(cfg: &SearchConfig) -> Result<Self> {
        cfg.validate()?;
        let report = kernel_report(cfg.n, cfg.weight)?;
        let labels = report.rows.clone();
        let word_lengths =
            labels.iter().map(|c| commutator_to_word(c, cfg.n).map(|w| w.len())).collect::<Result<Vec<_>>>()?;
        let (mats, linear) = if report.kernel.is_empty() {
            (vec![], None)
        } else {
            let mats = commutator_matrices_many(&labels, cfg.n, cfg.degree_probe)?;
            let linear = if (cfg.degree_probe as usize) < 2 * cfg.weight {
                let fwd: Vec<_> = mats.iter().map(|(m, _)| Arc::clone(m)).collect();
                LinearData::build(&fwd, cfg.weight as u32, cfg.degree_probe)
            } else {
                None
            };
            (mats, linear)
        };
        let points = random_points(cfg.n, cfg.seed);
        let modular = if report.kernel.is_empty() {
            vec![]
        } else {
            points
                .iter()
                .map(|p| {
                    let mut memo = HashMap::new();
                    labels.iter().map(|c| modular_pair(c, cfg.n, p, &mut memo)).collect()
                })
                .collect()
        };
        Ok(Searcher { cfg: cfg.clone(), labels, kernel: report.kernel, word_lengths, mats, linear, modular, points })
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    pub fn labels(&self) -> &[CommutatorTerm] {
        &self.labels
    }

    pub fn kernel(&self) -> &[KernelVector] {
        &self.kernel
    }

    pub fn candidates(&self) -> Vec<KernelCandidate> {
        kernel_candidates(&self.cfg, &self.kernel)
    }

    fn sparse(&self, cand: &KernelCandidate) -> Result<Vec<(usize, i64)>> {
        cand.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                c.to_i64().map(|v| (j, v)).ok_or_else(|| Error::usage(format!("coefficient {c} is too large")))
            })
            .collect()
    }

    /// The candidate's matrix modulo `J^(degree_probe+1)`, by multiplying the
    /// truncated basis matrices.
    pub fn truncated_product(&self, cand: &KernelCandidate) -> Result<SeriesMatrix> {
        let ctx = SeriesContext { n_vars: self.cfg.n, max_deg: self.cfg.degree_probe };
        let mut acc = SeriesMatrix::identity(self.cfg.n, ctx);
        for (j, m) in self.sparse(cand)? {
            let (fwd, inv) = &self.mats[j];
            let f = if m > 0 { fwd } else { inv };
            for _ in 0..m.unsigned_abs() {
                acc = &acc * f.as_ref();
            }
        }
        Ok(acc)
    }

    /// First nonvanishing degree via the linear shortcut when the probe is
    /// shallower than twice the weight, via matrix products otherwise.
    pub fn first_nonvanishing_degree(&self, cand: &KernelCandidate) -> Result<Option<u32>> {
        match &self.linear {
            Some(lin) => Ok(lin.first_degree(self.cfg.weight as u32, &self.sparse(cand)?)),
            None => Ok(self.truncated_product(cand)?.first_nonvanishing_degree()),
        }
    }

    fn modular_identity(&self, sparse: &[(usize, i64)]) -> bool {
        self.modular.iter().zip(&self.points).all(|(mats, p)| {
            let mut acc = ModMatrix::identity(self.cfg.n, p.modulus());
            for &(j, m) in sparse {
                let (fwd, inv) = &mats[j];
                let f = if m > 0 { fwd } else { inv };
                acc = acc.mul(&f.pow(m.unsigned_abs()));
            }
            acc.is_identity()
        })
    }

    pub fn test(&self, index: usize, cand: &KernelCandidate) -> Result<CandidateResult> {
        let sparse = self.sparse(cand)?;
        let word_length = sparse.iter().map(|&(j, m)| self.word_lengths[j] * m.unsigned_abs() as usize).sum();
        let (is_identity, certificate) = if self.modular_identity(&sparse) {
            let word = vector_to_word(&self.labels, &cand.coefficients, self.cfg.n)?;
            (evaluate_exact(&word).is_identity(), Certificate::Exact)
        } else {
            (false, Certificate::Modular)
        };
        let first_nonvanishing_degree = if is_identity { None } else { self.first_nonvanishing_degree(cand)? };
        Ok(CandidateResult {
            index,
            combination: cand.combination.clone(),
            coefficients: sparse.iter().map(|&(j, m)| (self.labels[j].clone(), BigInt::from(m))).collect(),
            word_length,
            is_identity,
            certificate,
            first_nonvanishing_degree,
        })
    }
}

fn modular_pair(
    c: &CommutatorTerm,
    n: usize,
    p: &PointPowers,
    memo: &mut HashMap<CommutatorTerm, (ModMatrix, ModMatrix)>,
) -> (ModMatrix, ModMatrix) {
    if let Some(v) = memo.get(c) {
        return v.clone();
    }
    let pair = match c {
        CommutatorTerm::Leaf(j) => {
            (letter_mod(n, BraidLetter::new(*j, n, 1), p), letter_mod(n, BraidLetter::new(*j, n, -1), p))
        }
        CommutatorTerm::Bracket(a, b) => {
            let (am, ai) = modular_pair(a, n, p, memo);
            let (bm, bi) = modular_pair(b, n, p, memo);
            (am.mul(&bm).mul(&ai).mul(&bi), bm.mul(&am).mul(&bi).mul(&ai))
        }
    };
    memo.insert(c.clone(), pair.clone());
    pair
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub kernel_dimension: usize,
    pub tested: usize,
    pub identities: usize,
    pub certified_modular: usize,
    pub certified_exact: usize,
    /// `(degree, count)` for the first nonvanishing degree; `None` counts
    /// candidates with no nonzero coefficient up to the probe depth.
    pub first_degree_histogram: Vec<(Option<u32>, usize)>,
    pub notice: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub candidates: Vec<CandidateResult>,
    pub summary: SearchSummary,
}

impl SearchReport {
    /// One JSON object per line: the config, each candidate, the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let tagged = |kind: &str, v: serde_json::Value| {
            let mut m = serde_json::Map::new();
            m.insert("kind".into(), kind.into());
            m.insert("data".into(), v);
            serde_json::Value::Object(m).to_string()
        };
        out += &tagged("config", serde_json::to_value(&self.config).expect("serializable"));
        out.push('\n');
        for c in &self.candidates {
            out += &tagged("candidate", serde_json::to_value(c).expect("serializable"));
            out.push('\n');
        }
        out += &tagged("summary", serde_json::to_value(&self.summary).expect("serializable"));
        out.push('\n');
        out
    }
}

/// Runs the bounded search. Candidates are tested in parallel; the report
/// keeps enumeration order.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    let searcher = Searcher::new(cfg)?;
    let cands = searcher.candidates();
    let candidates = cands.par_iter().enumerate().map(|(i, c)| searcher.test(i, c)).collect::<Result<Vec<_>>>()?;
    let mut hist: std::collections::BTreeMap<Option<u32>, usize> = Default::default();
    for c in &candidates {
        *hist.entry(c.first_nonvanishing_degree).or_default() += 1;
    }
    let summary = SearchSummary {
        kernel_dimension: searcher.kernel.len(),
        tested: candidates.len(),
        identities: candidates.iter().filter(|c| c.is_identity).count(),
        certified_modular: candidates.iter().filter(|c| c.certificate == Certificate::Modular).count(),
        certified_exact: candidates.iter().filter(|c| c.certificate == Certificate::Exact).count(),
        first_degree_histogram: hist.into_iter().collect(),
        notice: searcher
            .kernel
            .is_empty()
            .then(|| format!("Phi^{} is injective for n = {}; nothing to search", cfg.weight, cfg.n)),
    };
    Ok(SearchReport { config: cfg.clone(), candidates, summary })
}

/// `[[[A(2,4),A(1,4)],A(1,4)],[A(3,4),A(1,4)]]`, i.e. the basic commutator
/// with leaf sequence 21131 on four strands.
pub const PAIR_W1: &str = "[[[A(2,4),A(1,4)],A(1,4)],[A(3,4),A(1,4)]]";
/// The same with `A(2,4)` and `A(3,4)` swapped (leaf sequence 31121).
pub const PAIR_W2: &str = "[[[A(3,4),A(1,4)],A(1,4)],[A(2,4),A(1,4)]]";

/// Outcome of [`weight_five_pair_regression`].
#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub truncations_equal_at_5: bool,
    pub exact_equal: bool,
    pub classes_equal: bool,
    /// First nonvanishing degree of `W1 W2^-1` (searched up to degree 8).
    pub first_differing_degree: Option<u32>,
    /// Class of `W1 W2^-1` in that degree.
    pub difference_class: Option<GradedClass>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.truncations_equal_at_5 && !self.exact_equal && self.classes_equal && self.first_differing_degree.is_some()
    }
}

/// The pair of weight-5 commutators on four strands whose `Phi^5` classes
/// coincide although their Gassner matrices differ. Fails with a domain
/// error if any of these facts does not hold.
pub fn weight_five_pair_regression() -> Result<PairReport> {
    let n = 4;
    let w1 = parse_word(PAIR_W1, n)?;
    let w2 = parse_word(PAIR_W2, n)?;
    let truncations_equal_at_5 = evaluate_truncated(&w1, 5) == evaluate_truncated(&w2, 5);
    let exact_equal = evaluate_exact(&w1) == evaluate_exact(&w2);
    let classes_equal = pi(&evaluate_truncated(&w1, 5), 5)? == pi(&evaluate_truncated(&w2, 5), 5)?;
    let diff = evaluate_truncated(&w1.concat(&w2.inverse())?, 8);
    let first_differing_degree = diff.first_nonvanishing_degree();
    let difference_class = first_differing_degree.map(|d| pi(&diff, d as usize)).transpose()?;
    let report =
        PairReport { truncations_equal_at_5, exact_equal, classes_equal, first_differing_degree, difference_class };
    if !report.passed() {
        return Err(Error::domain(format!("four-strand weight-5 regression failed: {report:?}")));
    }
    Ok(report)
}
