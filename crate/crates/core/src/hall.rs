//! Basic (Hall) commutators of the free group on `x_1, ..., x_m`, their
//! expansion into braid words, and the Witt rank formula.
//!
//! Commutator convention: `[a, b] = a b a^-1 b^-1`. At the level of graded
//! quotients this agrees with `a^-1 b^-1 a b`; the reversed `b a b^-1 a^-1`
//! would flip every sign of the weight-2 images, and the tests pin the
//! weight-2 signs against the known table.
//!
//! Order: weight first, then left components, then right components, with
//! `x_m > ... > x_1`. Bases are returned in descending order, so weight 2
//! reads `[x_m,x_{m-1}], ..., [x_m,x_1], [x_{m-1},x_{m-2}], ..., [x_2,x_1]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// Largest weight and generator count accepted by [`basic_commutators`].
pub const MAX_WEIGHT: usize = 8;
pub const MAX_GENERATORS: usize = 6;

/// A bracket tree over the generators `x_1, ..., x_m`.
///
/// JSON form: a leaf is its index, a bracket is the two-element array
/// `[left, right]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CommutatorTerm {
    Leaf(usize),
    Bracket(Box<CommutatorTerm>, Box<CommutatorTerm>),
}

impl CommutatorTerm {
    pub fn leaf(j: usize) -> Self {
        CommutatorTerm::Leaf(j)
    }

    pub fn bracket(a: CommutatorTerm, b: CommutatorTerm) -> Self {
        CommutatorTerm::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed `[...[[x_{l1}, x_{l2}], x_{l3}], ..., x_{ls}]`.
    pub fn left_normed(indices: &[usize]) -> Self {
        let mut it = indices.iter();
        let first = it.next().expect("at least one index");
        it.fold(CommutatorTerm::Leaf(*first), |acc, &j| Self::bracket(acc, CommutatorTerm::Leaf(j)))
    }

    pub fn weight(&self) -> usize {
        match self {
            CommutatorTerm::Leaf(_) => 1,
            CommutatorTerm::Bracket(a, b) => a.weight() + b.weight(),
        }
    }

    pub fn max_index(&self) -> usize {
        match self {
            CommutatorTerm::Leaf(j) => *j,
            CommutatorTerm::Bracket(a, b) => a.max_index().max(b.max_index()),
        }
    }

    /// Generator indices in reading order, e.g. `[[x3,x2],[x3,x1]]` gives
    /// `[3, 2, 3, 1]`. This list determines a basic commutator uniquely.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            CommutatorTerm::Leaf(j) => out.push(*j),
            CommutatorTerm::Bracket(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Compact label such as `21131`, joined with `.` once an index exceeds 9.
    pub fn leaf_label(&self) -> String {
        let leaves = self.leaves();
        let sep = if leaves.iter().any(|&j| j > 9) { "." } else { "" };
        leaves.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(sep)
    }

    pub fn is_left_normed(&self) -> bool {
        match self {
            CommutatorTerm::Leaf(_) => true,
            CommutatorTerm::Bracket(a, b) => matches!(**b, CommutatorTerm::Leaf(_)) && a.is_left_normed(),
        }
    }

    /// The recursive basic-commutator conditions: both components basic,
    /// `left > right`, and `right >= d` whenever `left = [c, d]`.
    pub fn is_basic(&self) -> bool {
        match self {
            CommutatorTerm::Leaf(_) => true,
            CommutatorTerm::Bracket(a, b) => {
                a.is_basic()
                    && b.is_basic()
                    && **a > **b
                    && match &**a {
                        CommutatorTerm::Leaf(_) => true,
                        CommutatorTerm::Bracket(_, d) => **b >= **d,
                    }
            }
        }
    }
}

impl Ord for CommutatorTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        use CommutatorTerm::*;
        self.weight().cmp(&other.weight()).then_with(|| match (self, other) {
            (Leaf(a), Leaf(b)) => a.cmp(b),
            (Bracket(a1, b1), Bracket(a2, b2)) => a1.cmp(a2).then_with(|| b1.cmp(b2)),
            // equal weights force equal shapes at the root
            (Leaf(_), Bracket(..)) => Ordering::Less,
            (Bracket(..), Leaf(_)) => Ordering::Greater,
        })
    }
}

impl PartialOrd for CommutatorTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CommutatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorTerm::Leaf(j) => write!(f, "x{j}"),
            CommutatorTerm::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl fmt::Debug for CommutatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type BasisCache = RwLock<HashMap<(usize, usize), Arc<Vec<CommutatorTerm>>>>;

fn basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All basic commutators of weight `w` on `m` generators, largest first.
pub fn basic_commutators(m: usize, w: usize) -> Result<Arc<Vec<CommutatorTerm>>> {
    if !(1..=MAX_GENERATORS).contains(&m) {
        return Err(Error::usage(format!("generator count {m} must lie in 1..={MAX_GENERATORS}")));
    }
    if !(1..=MAX_WEIGHT).contains(&w) {
        return Err(Error::usage(format!("weight {w} must lie in 1..={MAX_WEIGHT}")));
    }
    if let Some(b) = basis_cache().read().expect("cache poisoned").get(&(m, w)) {
        return Ok(Arc::clone(b));
    }
    let mut out = Vec::new();
    if w == 1 {
        out.extend((1..=m).map(CommutatorTerm::Leaf));
    } else {
        // a > b forces weight(a) >= weight(b)
        for wa in w.div_ceil(2)..w {
            let left = basic_commutators(m, wa)?;
            let right = basic_commutators(m, w - wa)?;
            for a in left.iter() {
                for b in right.iter() {
                    let admissible = a > b
                        && match a {
                            CommutatorTerm::Leaf(_) => true,
                            CommutatorTerm::Bracket(_, d) => b >= &**d,
                        };
                    if admissible {
                        out.push(CommutatorTerm::bracket(a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    let out = Arc::new(out);
    let mut cache = basis_cache().write().expect("cache poisoned");
    Ok(Arc::clone(cache.entry((m, w)).or_insert(out)))
}

/// Ordered basic commutators of weights `1..=max_weight`.
#[derive(Clone, Debug)]
pub struct HallBasis {
    m: usize,
    by_weight: Vec<Arc<Vec<CommutatorTerm>>>,
}

impl HallBasis {
    pub fn new(m: usize, max_weight: usize) -> Result<Self> {
        let by_weight = (1..=max_weight).map(|w| basic_commutators(m, w)).collect::<Result<_>>()?;
        Ok(HallBasis { m, by_weight })
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn max_weight(&self) -> usize {
        self.by_weight.len()
    }

    pub fn weight(&self, w: usize) -> &[CommutatorTerm] {
        &self.by_weight[w - 1]
    }

    /// Every basic commutator, ascending in the basis order.
    pub fn ascending(&self) -> impl Iterator<Item = &CommutatorTerm> {
        self.by_weight.iter().flat_map(|b| b.iter().rev())
    }
}

/// The bracket `[a, b] = a b a^-1 b^-1` on braid words.
pub fn bracket_words(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.concat(b).and_then(|ab| ab.concat(&a.inverse())).and_then(|w| w.concat(&b.inverse())).expect("same strand count")
}

/// Expands a commutator into a word in `x_j = A_{jn}`.
pub fn commutator_to_word(c: &CommutatorTerm, n: usize) -> Result<BraidWord> {
    crate::braid::check_strands(n)?;
    if c.max_index() >= n || c.leaves().contains(&0) {
        return Err(Error::usage(format!("{c} uses a generator outside x1..x{} for {n} strands", n - 1)));
    }
    Ok(expand(c, n))
}

fn expand(c: &CommutatorTerm, n: usize) -> BraidWord {
    match c {
        CommutatorTerm::Leaf(j) => BraidWord::new(n, vec![BraidLetter::new(*j, n, 1)]).expect("checked"),
        CommutatorTerm::Bracket(a, b) => bracket_words(&expand(a, n), &expand(b, n)),
    }
}

fn mobius(mut k: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if k > 1 {
        result = -result;
    }
    result
}

/// Rank of the weight-`w` lower central quotient of the free group on `m`
/// generators: `(1/w) sum_{d | w} mu(d) m^(w/d)`.
pub fn witt_rank(m: usize, w: usize) -> u128 {
    assert!(m >= 1 && w >= 1, "witt_rank needs m >= 1 and w >= 1");
    let mut total: i128 = 0;
    for d in (1..=w).filter(|d| w.is_multiple_of(*d)) {
        let mu = mobius(d) as i128;
        if mu != 0 {
            let power = (m as i128).checked_pow((w / d) as u32).expect("witt_rank overflow");
            total += mu * power;
        }
    }
    (total / w as i128) as u128
}

/// Parses `c := "x" int | "[" c "," c "]"`, ignoring whitespace.
pub fn parse_commutator(text: &str) -> Result<CommutatorTerm> {
    let mut p = TermParser { src: text.as_bytes(), pos: 0 };
    let c = p.term()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::syntax(p.pos, format!("unexpected character {:?}", p.src[p.pos] as char)));
    }
    Ok(c)
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn term(&mut self) -> Result<CommutatorTerm> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match digits.parse::<usize>() {
                    Ok(j) if j >= 1 => Ok(CommutatorTerm::Leaf(j)),
                    _ => Err(Error::syntax(start, "expected a positive generator index")),
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.term()?;
                self.expect(b',')?;
                let b = self.term()?;
                self.expect(b']')?;
                Ok(CommutatorTerm::bracket(a, b))
            }
            _ => Err(Error::syntax(self.pos, "expected 'x' or '['")),
        }
    }
}
