//! Gassner matrices of the pure braid generators `A_{rs}` and evaluation of
//! words in them, either exactly or modulo a power of the augmentation ideal.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::hall;
use crate::laurent::{LaurentMatrix, LaurentPoly, SeriesContext, SeriesMatrix, SquareMatrix};

/// Largest strand count accepted anywhere in the crate.
pub const MAX_STRANDS: usize = crate::laurent::MAX_VARS;

/// `A_{rs}^{±1}` with 1-based strands `r < s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub r: usize,
    pub s: usize,
    pub exponent: i8,
}

impl BraidLetter {
    pub fn new(r: usize, s: usize, exponent: i8) -> Self {
        BraidLetter { r, s, exponent }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { exponent: -self.exponent, ..self }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.r, self.s)?;
        if self.exponent < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the pure braid generators on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(Error::usage(format!("strand count {n} must lie in 2..={MAX_STRANDS}")));
    }
    Ok(())
}

fn check_letter(n: usize, r: usize, s: usize) -> Result<()> {
    if !(1 <= r && r < s && s <= n) {
        return Err(Error::usage(format!("generator A({r},{s}) needs 1 <= r < s <= {n}")));
    }
    Ok(())
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        check_strands(n)?;
        for l in &letters {
            check_letter(n, l.r, l.s)?;
            if l.exponent.abs() != 1 {
                return Err(Error::usage(format!("letter exponent {} must be ±1", l.exponent)));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// The free-subgroup generator `x_j = A_{jn}`.
    pub fn generator(n: usize, j: usize, exponent: i8) -> Result<Self> {
        Self::new(n, vec![BraidLetter::new(j, n, exponent)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when every letter is some `A_{jn}`, i.e. the word lies in the
    /// free subgroup obtained by deleting the last strand.
    pub fn is_free_subgroup_word(&self) -> bool {
        self.letters.iter().all(|l| l.s == self.n)
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::usage(format!("cannot concatenate words on {} and {} strands", self.n, other.n)));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// `self^k`; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Sum of exponents of each `(r, s)` generator.
    pub fn exponent_sums(&self) -> HashMap<(usize, usize), i64> {
        let mut out = HashMap::new();
        for l in &self.letters {
            *out.entry((l.r, l.s)).or_insert(0) += l.exponent as i64;
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `G_n(A_{rs})`: identity blocks around the `r`/`s` rows and columns, with
/// `1 - t_r + t_r t_s`, `t_r (1 - t_r)`, `1 - t_s`, `t_r` at the four
/// corners, `(1 - t_k)(1 - t_s)` down column `r` and `(1 - t_k)(t_r - 1)`
/// down column `s` for `r < k < s`.
pub fn gassner_generator(n: usize, r: usize, s: usize) -> Result<LaurentMatrix> {
    check_strands(n)?;
    check_letter(n, r, s)?;
    let one = LaurentPoly::one(n);
    let t = |i: usize| LaurentPoly::t(n, i);
    let one_minus = |i: usize| &one - &t(i);
    let (r0, s0) = (r - 1, s - 1);
    let mut m = LaurentMatrix::laurent_identity(n, n);
    m.set(r0, r0, &one_minus(r) + &(&t(r) * &t(s)));
    m.set(r0, s0, &t(r) * &one_minus(r));
    m.set(s0, r0, one_minus(s));
    m.set(s0, s0, t(r));
    let tr_minus_one = &t(r) - &one;
    for k in r + 1..s {
        m.set(k - 1, r0, &one_minus(k) * &one_minus(s));
        m.set(k - 1, s0, &one_minus(k) * &tr_minus_one);
    }
    Ok(m)
}

type ExactKey = (usize, usize, usize, i8);
type SeriesKey = (usize, usize, usize, i8, u32);

fn exact_cache() -> &'static RwLock<HashMap<ExactKey, Arc<LaurentMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<ExactKey, Arc<LaurentMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn series_cache() -> &'static RwLock<HashMap<SeriesKey, Arc<SeriesMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<SeriesKey, Arc<SeriesMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached<K, V>(cache: &RwLock<HashMap<K, Arc<V>>>, key: K, build: impl FnOnce() -> Result<V>) -> Result<Arc<V>>
where
    K: std::hash::Hash + Eq,
{
    if let Some(v) = cache.read().expect("cache poisoned").get(&key) {
        return Ok(Arc::clone(v));
    }
    let v = Arc::new(build()?);
    let mut w = cache.write().expect("cache poisoned");
    Ok(Arc::clone(w.entry(key).or_insert(v)))
}

/// `G_n(A_{rs})^{±1}`, built once per `(n, r, s, sign)` and shared.
pub fn gassner_letter(n: usize, letter: BraidLetter) -> Result<Arc<LaurentMatrix>> {
    let key = (n, letter.r, letter.s, letter.exponent.signum());
    cached(exact_cache(), key, || {
        let g = gassner_generator(n, letter.r, letter.s)?;
        if letter.exponent > 0 {
            Ok(g)
        } else {
            let det = &LaurentPoly::t(n, letter.r) * &LaurentPoly::t(n, letter.s);
            g.laurent_inverse(Some(&det))
        }
    })
}

/// Exact inverse of `G_n(A_{rs})`; its determinant is `t_r^{-1} t_s^{-1}`.
pub fn gassner_generator_inverse(n: usize, r: usize, s: usize) -> Result<LaurentMatrix> {
    Ok(gassner_letter(n, BraidLetter::new(r, s, -1))?.as_ref().clone())
}

/// Truncated image of one letter. Inverse letters come from the series
/// inverse of the truncated generator.
pub fn truncated_letter(n: usize, letter: BraidLetter, max_deg: u32) -> Result<Arc<SeriesMatrix>> {
    let key = (n, letter.r, letter.s, letter.exponent.signum(), max_deg);
    cached(series_cache(), key, || {
        let g = gassner_generator(n, letter.r, letter.s)?.to_series(max_deg);
        if letter.exponent > 0 {
            Ok(g)
        } else {
            g.series_inverse()
        }
    })
}

/// Ordered product of the letters' Gassner matrices; the empty word gives
/// the identity.
pub fn evaluate_exact(word: &BraidWord) -> LaurentMatrix {
    let n = word.n;
    let mut acc = LaurentMatrix::laurent_identity(n, n);
    for &l in &word.letters {
        let g = gassner_letter(n, l).expect("validated letter");
        acc = &acc * g.as_ref();
    }
    acc
}

/// The word's Gassner matrix modulo `J^(max_deg+1)`, computed entirely in
/// the truncated ring.
pub fn evaluate_truncated(word: &BraidWord, max_deg: u32) -> SeriesMatrix {
    let n = word.n;
    let mut acc = SeriesMatrix::identity(n, SeriesContext { n_vars: n, max_deg });
    for &l in &word.letters {
        let g = truncated_letter(n, l, max_deg).expect("validated letter");
        acc = &acc * g.as_ref();
    }
    acc
}

/// Sets `t_n = 1` and deletes the last row and column, giving a matrix over
/// `n - 1` strands.
pub fn delete_strand_reduction(m: &LaurentMatrix) -> Result<LaurentMatrix> {
    let n = m.size();
    if n < 2 {
        return Err(Error::usage("need at least two strands to delete one"));
    }
    let n_vars = m.ring_context().unwrap_or(n);
    if n_vars != n {
        return Err(Error::usage(format!("matrix of size {n} is over {n_vars} variables, expected {n}")));
    }
    let spec = m.specialize_one(n);
    let rows = (0..n - 1)
        .map(|i| (0..n - 1).map(|j| spec.get(i, j).drop_last_var()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(rows)
}

/// Parses the word grammar
///
/// ```text
/// word := term+
/// term := atom ("^" signed-int)?
/// atom := "A(" int "," int ")" | "x" int | "[" word "," word "]"
/// ```
///
/// `x_j` stands for `A(j, n)`; brackets expand with the convention of
/// [`hall::bracket_words`]. Whitespace between tokens is ignored.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut p = WordParser { src: text.as_bytes(), pos: 0, n };
    p.skip_ws();
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::syntax(p.pos, format!("unexpected character {:?}", p.peek_char())));
    }
    Ok(w)
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl WordParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.src.get(self.pos).map(|&b| b as char).unwrap_or('\0')
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else if self.pos >= self.src.len() {
            Err(Error::syntax(self.pos, format!("expected '{}', found end of input", c as char)))
        } else {
            Err(Error::syntax(self.pos, format!("expected '{}', found {:?}", c as char, self.peek_char())))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::syntax(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| Error::syntax(start, "integer out of range"))
    }

    fn index(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let at = self.pos;
        let v = self.int()?;
        if v < 1 {
            return Err(Error::syntax(at, format!("index {v} must be positive")));
        }
        Ok((at, v as usize))
    }

    fn word(&mut self) -> Result<BraidWord> {
        let mut letters = Vec::new();
        while let Some(b'A' | b'x' | b'[') = self.peek() {
            letters.extend(self.term()?.letters);
        }
        if letters.is_empty() {
            return Err(Error::syntax(self.pos, "expected a generator or a bracket"));
        }
        Ok(BraidWord { n: self.n, letters })
    }

    fn term(&mut self) -> Result<BraidWord> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.int()?;
            return Ok(atom.pow(k));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<BraidWord> {
        let at = self.pos;
        match self.peek() {
            Some(b'A') => {
                self.pos += 1;
                self.expect(b'(')?;
                let (_, r) = self.index()?;
                self.expect(b',')?;
                let (_, s) = self.index()?;
                self.expect(b')')?;
                check_letter(self.n, r, s)
                    .map_err(|_| Error::syntax(at, format!("A({r},{s}) needs 1 <= r < s <= {}", self.n)))?;
                Ok(BraidWord { n: self.n, letters: vec![BraidLetter::new(r, s, 1)] })
            }
            Some(b'x') => {
                self.pos += 1;
                let (pos, j) = self.index()?;
                if j >= self.n {
                    return Err(Error::syntax(pos, format!("x{j} needs 1 <= j <= {}", self.n - 1)));
                }
                Ok(BraidWord { n: self.n, letters: vec![BraidLetter::new(j, self.n, 1)] })
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(b',')?;
                let b = self.word()?;
                self.expect(b']')?;
                Ok(hall::bracket_words(&a, &b))
            }
            _ => Err(Error::syntax(self.pos, "expected 'A(', 'x' or '['")),
        }
    }
}
