use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::write_poly;
use super::{ExponentVector, LaurentPoly, Ring, MAX_VARS};
use crate::error::{Error, Result};

/// Ring parameters of a truncated series: variable count and the largest
/// total degree kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesContext {
    pub n_vars: usize,
    pub max_deg: u32,
}

/// Polynomial in `u_i = t_i - 1` with every term of total degree above
/// `max_deg` discarded, i.e. a residue modulo `J^(max_deg+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    n_vars: usize,
    max_deg: u32,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(n_vars: usize, max_deg: u32) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        TruncatedSeries { n_vars, max_deg, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize, max_deg: u32) -> Self {
        Self::constant(n_vars, max_deg, BigInt::one())
    }

    pub fn constant(n_vars: usize, max_deg: u32, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(n_vars, max_deg);
        s.add_term(ExponentVector::zero(n_vars), c.into());
        s
    }

    /// The shifted variable `u_var = t_var - 1` (1-based).
    pub fn u(n_vars: usize, max_deg: u32, var: usize) -> Self {
        let mut s = Self::zero(n_vars, max_deg);
        s.add_term(ExponentVector::unit(n_vars, var), BigInt::one());
        s
    }

    pub fn from_terms<I, C>(n_vars: usize, max_deg: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(n_vars, max_deg);
        for (e, c) in terms {
            if e.len() != n_vars || e.iter().any(|&k| k < 0) {
                return Err(Error::usage(format!("invalid series exponent {e:?} for {n_vars} variables")));
            }
            s.add_term(ExponentVector::from_slice(&e)?, c.into());
        }
        Ok(s)
    }

    /// Expands `p` under `t_i = 1 + u_i`, keeping total degree `<= max_deg`.
    /// Negative powers use `(1 + u)^(-k) = sum_j binom(-k, j) u^j`.
    pub fn from_laurent(p: &LaurentPoly, max_deg: u32) -> Self {
        let n = p.n_vars();
        let mut out = Self::zero(n, max_deg);
        let mut cache: BTreeMap<i32, Vec<BigInt>> = BTreeMap::new();
        for (e, c) in p.terms() {
            let factors: Vec<&[BigInt]> = e
                .as_slice()
                .iter()
                .map(|&k| {
                    cache.entry(k).or_insert_with(|| binomial_series(k, max_deg));
                    k
                })
                .collect::<Vec<_>>()
                .into_iter()
                .map(|k| cache[&k].as_slice())
                .collect();
            let mut exps = ExponentVector::zero(n);
            expand(&factors, 0, max_deg, c.clone(), &mut exps, &mut out);
        }
        out
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    #[inline]
    pub fn max_deg(&self) -> u32 {
        self.max_deg
    }

    pub fn series_context(&self) -> SeriesContext {
        SeriesContext { n_vars: self.n_vars, max_deg: self.max_deg }
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

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&ExponentVector::zero(self.n_vars))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous(&self, d: u32) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter().filter(move |(e, _)| e.total_degree() as u32 == d)
    }

    /// Smallest total degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total_degree() as u32).min()
    }

    /// Re-truncates to a smaller degree bound.
    /// The same truncated element as a polynomial in the `t_i`, expanding
    /// `u_i = t_i - 1`. Only meaningful modulo `J^(max_deg+1)`.
    pub fn to_t_polynomial(&self) -> LaurentPoly {
        let n = self.n_vars;
        let mut out = LaurentPoly::zero(n);
        for (e, c) in &self.terms {
            let mut p = LaurentPoly::constant(n, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                let u = &LaurentPoly::t(n, i + 1) - &LaurentPoly::one(n);
                for _ in 0..k {
                    p = &p * &u;
                }
            }
            out = &out + &p;
        }
        out
    }

    pub fn truncate(&self, max_deg: u32) -> Self {
        assert!(max_deg <= self.max_deg, "cannot raise the truncation degree");
        TruncatedSeries {
            n_vars: self.n_vars,
            max_deg,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() as u32 <= max_deg)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() || e.total_degree() as u32 > self.max_deg {
            return;
        }
        debug_assert!(e.is_non_negative());
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

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars || self.max_deg != other.max_deg {
            return Err(Error::usage(format!(
                "series over ({} vars, degree {}) and ({} vars, degree {}) cannot be combined",
                self.n_vars, self.max_deg, other.n_vars, other.max_deg
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        out.sub_assign_ref(other);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        Ok(self.mul_ref(other))
    }
}

/// Coefficients of `(1 + u)^k` up to `u^max_deg`, for any integer `k`.
fn binomial_series(k: i32, max_deg: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut c = BigInt::one();
    for j in 1..=max_deg as i64 {
        c = c * BigInt::from(k as i64 - j + 1) / BigInt::from(j);
        if c.is_zero() {
            break;
        }
        out.push(c.clone());
    }
    out
}

fn expand(
    factors: &[&[BigInt]],
    var: usize,
    budget: u32,
    coeff: BigInt,
    exps: &mut ExponentVector,
    out: &mut TruncatedSeries,
) {
    if var == factors.len() {
        out.add_term(*exps, coeff);
        return;
    }
    for (j, b) in factors[var].iter().enumerate().take(budget as usize + 1) {
        *exps = exps.with(var + 1, j as i32);
        expand(factors, var + 1, budget - j as u32, &coeff * b, exps, out);
    }
    *exps = exps.with(var + 1, 0);
}

impl Ring for TruncatedSeries {
    type Context = SeriesContext;

    fn context(&self) -> SeriesContext {
        self.series_context()
    }

    fn zero(ctx: SeriesContext) -> Self {
        TruncatedSeries::zero(ctx.n_vars, ctx.max_deg)
    }

    fn one(ctx: SeriesContext) -> Self {
        TruncatedSeries::one(ctx.n_vars, ctx.max_deg)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.context(), other.context(), "series context mismatch");
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.context(), other.context(), "series context mismatch");
        for (e, c) in &other.terms {
            self.add_term(*e, -c);
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        assert_eq!(a.context(), b.context(), "series context mismatch");
        assert_eq!(self.context(), a.context(), "series context mismatch");
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_one() {
            return self.add_assign_ref(b);
        }
        if b.is_one() {
            return self.add_assign_ref(a);
        }
        let max = self.max_deg as i32;
        let b_terms: Vec<(i32, &ExponentVector, &BigInt)> =
            b.terms.iter().map(|(e, c)| (e.total_degree(), e, c)).collect();
        let b_low = b_terms.iter().map(|t| t.0).min().unwrap_or(0);
        for (ea, ca) in &a.terms {
            let da = ea.total_degree();
            if da + b_low > max {
                continue;
            }
            for &(db, eb, cb) in &b_terms {
                if da + db > max {
                    continue;
                }
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
        TruncatedSeries {
            n_vars: self.n_vars,
            max_deg: self.max_deg,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        self.checked_add(rhs).expect("series context mismatch")
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        self.checked_sub(rhs).expect("series context mismatch")
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &'a TruncatedSeries) -> TruncatedSeries {
        self.checked_mul(rhs).expect("series context mismatch")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.negate()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms.iter(), "u")
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}; deg<={}]({})", self.n_vars, self.max_deg, self)
    }
}
