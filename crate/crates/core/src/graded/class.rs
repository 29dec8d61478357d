use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Monomial `(t_{l1} - 1) ... (t_{li} - 1)` stored as the sorted list
/// `l1 <= ... <= li` of 1-based indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Monomial(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.0.contains(&var)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let k = self.0[i..].iter().take_while(|&&w| w == v).count();
            if k == 1 {
                write!(f, "t{v}")?;
            } else {
                write!(f, "t{v}^{k}")?;
            }
            i += k;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One coordinate of `⊕_{monomials} M_n(Z)`: a monomial and a 1-based
/// matrix position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinate {
    pub mono: Monomial,
    pub row: usize,
    pub col: usize,
}

impl Coordinate {
    pub fn new(mono: Monomial, row: usize, col: usize) -> Self {
        Coordinate { mono, row, col }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:e({},{})", self.mono, self.row, self.col)
    }
}

impl fmt::Debug for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Degree-`i` element of `⊕_{monomials} M_n(Z)`, e.g. an image under
/// `pi_i` or `Phi^i`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    n: usize,
    degree: usize,
    coords: BTreeMap<Coordinate, BigInt>,
}

impl GradedClass {
    pub fn zero(n: usize, degree: usize) -> Self {
        GradedClass { n, degree, coords: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Coordinate, &BigInt)> {
        self.coords.iter()
    }

    pub fn get(&self, c: &Coordinate) -> BigInt {
        self.coords.get(c).cloned().unwrap_or_default()
    }

    /// Adds `value` at `(mono, row, col)`, validating the coordinate.
    pub fn add_at(&mut self, mono: Monomial, row: usize, col: usize, value: impl Into<BigInt>) -> Result<()> {
        if mono.degree() != self.degree {
            return Err(Error::usage(format!(
                "monomial {mono} has degree {}, class has degree {}",
                mono.degree(),
                self.degree
            )));
        }
        if mono.indices().iter().any(|&l| l < 1 || l > self.n)
            || !(1..=self.n).contains(&row)
            || !(1..=self.n).contains(&col)
        {
            return Err(Error::usage(format!("coordinate {mono}:e({row},{col}) out of range for n = {}", self.n)));
        }
        self.add_unchecked(Coordinate::new(mono, row, col), value.into());
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, c: Coordinate, value: BigInt) {
        if value.is_zero() {
            return;
        }
        let slot = self.coords.entry(c.clone()).or_default();
        *slot += value;
        if slot.is_zero() {
            self.coords.remove(&c);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.degree != other.degree {
            return Err(Error::usage("graded classes of different shape cannot be added"));
        }
        let mut out = self.clone();
        for (c, v) in &other.coords {
            out.add_unchecked(c.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        if !k.is_zero() {
            out.coords = self.coords.iter().map(|(c, v)| (c.clone(), v * k)).collect();
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Monomials carrying at least one nonzero entry, sorted.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self.coords.keys().map(|c| c.mono.clone()).collect();
        out.dedup();
        out
    }

    /// The matrix attached to one monomial, as `(row, col) -> value`.
    pub fn factor(&self, mono: &Monomial) -> BTreeMap<(usize, usize), BigInt> {
        self.coords.iter().filter(|(c, _)| &c.mono == mono).map(|(c, v)| ((c.row, c.col), v.clone())).collect()
    }

    pub fn factor_trace(&self, mono: &Monomial) -> BigInt {
        self.coords.iter().filter(|(c, _)| &c.mono == mono && c.row == c.col).map(|(_, v)| v).sum()
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first_mono = true;
        for mono in self.monomials() {
            if !first_mono {
                write!(f, "; ")?;
            }
            first_mono = false;
            write!(f, "{mono}: ")?;
            let mut first = true;
            for ((r, c), v) in self.factor(&mono) {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "e{r}{c}({v})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedClass[n={}, deg={}]({self})", self.n, self.degree)
    }
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    mono: Vec<usize>,
    row: usize,
    col: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    n: usize,
    degree: usize,
    coords: Vec<CoordRepr>,
}

impl Serialize for GradedClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassRepr {
            n: self.n,
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .map(|(k, v)| CoordRepr { mono: k.mono.0.clone(), row: k.row, col: k.col, c: v.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ClassRepr::deserialize(d)?;
        let mut out = GradedClass::zero(repr.n, repr.degree);
        for c in repr.coords {
            if c.mono.windows(2).any(|w| w[0] > w[1]) {
                return Err(D::Error::custom(format!("monomial {:?} is not sorted", c.mono)));
            }
            let v: BigInt = c.c.parse().map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", c.c)))?;
            out.add_at(Monomial(c.mono), c.row, c.col, v).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
