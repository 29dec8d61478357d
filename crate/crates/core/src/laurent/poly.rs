use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, Ring, MAX_VARS};
use crate::error::{Error, Result};

/// Sparse element of `Z[t_1^{±1}, ..., t_n^{±1}]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n_vars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        LaurentPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, BigInt::one())
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(n_vars, ExponentVector::zero(n_vars), c)
    }

    /// The variable `t_var` (1-based).
    pub fn t(n_vars: usize, var: usize) -> Self {
        Self::monomial(n_vars, ExponentVector::unit(n_vars, var), 1)
    }

    pub fn monomial(n_vars: usize, exps: ExponentVector, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.n_vars(), n_vars, "exponent vector length mismatch");
        let c = c.into();
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::usage(format!("exponent vector {e:?} has length {}, expected {n_vars}", e.len())));
            }
            p.add_term(ExponentVector::from_slice(&e)?, c.into());
        }
        Ok(p)
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::usage(format!(
                "polynomials over {} and {} variables cannot be combined",
                self.n_vars, other.n_vars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.sub_assign_ref(other);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.mul_ref(other))
    }

    /// Multiplies by `c * t^e`.
    pub fn mul_monomial(&self, e: &ExponentVector, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n_vars);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.add(e), v * c);
        }
        out
    }

    /// `Some((sign, e))` when this polynomial is the unit `±t^e`.
    pub fn as_unit_monomial(&self) -> Option<(i8, ExponentVector)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    /// Substitutes `t_var = 1` (1-based); the variable stays in the ring.
    pub fn specialize_one(&self, var: usize) -> Self {
        assert!((1..=self.n_vars).contains(&var), "variable index {var} out of range");
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.terms {
            out.add_term(e.with(var, 0), c.clone());
        }
        out
    }

    /// Value at `t_1 = ... = t_n = 1`.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Drops the last variable, which must not occur in any term.
    pub fn drop_last_var(&self) -> Result<Self> {
        let n = self.n_vars;
        if n == 0 {
            return Err(Error::usage("no variable to drop"));
        }
        let mut out = Self::zero(n - 1);
        for (e, c) in &self.terms {
            if e.get(n) != 0 {
                return Err(Error::domain(format!("variable t{n} still occurs in {self}")));
            }
            out.terms.insert(ExponentVector::from_slice(&e.as_slice()[..n - 1])?, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at `t_i = point[i]` modulo the prime `p`; every point must
    /// be a unit mod `p`.
    pub fn eval_mod(&self, point_powers: &PointPowers) -> u64 {
        let p = point_powers.modulus;
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut v = reduce_bigint(c, p);
            for (i, &k) in e.as_slice().iter().enumerate() {
                v = mul_mod(v, point_powers.power(i, k), p);
            }
            acc = (acc + v) % p;
        }
        acc
    }
}

/// Evaluation point in `(Z/p)^n` with cached positive and negative powers.
#[derive(Clone, Debug)]
pub struct PointPowers {
    modulus: u64,
    values: Vec<u64>,
    inverses: Vec<u64>,
}

impl PointPowers {
    pub fn new(modulus: u64, values: Vec<u64>) -> Self {
        let inverses = values.iter().map(|&v| pow_mod(v, modulus - 2, modulus)).collect();
        PointPowers { modulus, values, inverses }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn power(&self, var: usize, k: i32) -> u64 {
        if k >= 0 {
            pow_mod(self.values[var], k as u64, self.modulus)
        } else {
            pow_mod(self.inverses[var], (-k) as u64, self.modulus)
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits in u64")
}

impl Ring for LaurentPoly {
    type Context = usize;

    fn context(&self) -> usize {
        self.n_vars
    }

    fn zero(ctx: usize) -> Self {
        LaurentPoly::zero(ctx)
    }

    fn one(ctx: usize) -> Self {
        LaurentPoly::one(ctx)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(*e, -c);
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        assert_eq!(a.n_vars, b.n_vars, "variable count mismatch");
        assert_eq!(self.n_vars, a.n_vars, "variable count mismatch");
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_one() {
            return self.add_assign_ref(b);
        }
        if b.is_one() {
            return self.add_assign_ref(a);
        }
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                match self.terms.entry(ea.add(eb)) {
                    Entry::Vacant(v) => {
                        v.insert(ca * cb);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += ca * cb,
                }
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn negate(&self) -> Self {
        LaurentPoly { n_vars: self.n_vars, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.negate()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms.iter(), "t")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.n_vars, self)
    }
}

/// Renders terms as `c*x1^a*x2^b + ...` with a given variable letter.
pub(crate) fn write_poly<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: Iterator<Item = (&'a ExponentVector, &'a BigInt)>,
{
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let mut factors = Vec::new();
        for (i, &k) in e.as_slice().iter().enumerate() {
            match k {
                0 => {}
                1 => factors.push(format!("{var}{}", i + 1)),
                _ => factors.push(format!("{var}{}^{k}", i + 1)),
            }
        }
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{}", factors.join("*"))?;
        } else {
            write!(f, "{abs}*{}", factors.join("*"))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
