use std::fmt;

use crate::error::{Error, Result};

/// Largest number of variables supported by [`ExponentVector`].
pub const MAX_VARS: usize = 8;

/// Exponents of `t_1, ..., t_n` (or `u_1, ..., u_n` in a truncated series).
///
/// Stored inline so that polynomial maps never allocate per key. Ordering is
/// lexicographic in the exponents, which fixes the iteration order of every
/// polynomial in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    len: u8,
    exps: [i32; MAX_VARS],
}

impl ExponentVector {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        ExponentVector { len: n_vars as u8, exps: [0; MAX_VARS] }
    }

    /// Exponent vector of the single variable with 1-based index `var`.
    pub fn unit(n_vars: usize, var: usize) -> Self {
        assert!((1..=n_vars).contains(&var), "variable index {var} out of range");
        let mut e = Self::zero(n_vars);
        e.exps[var - 1] = 1;
        e
    }

    pub fn from_slice(exps: &[i32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::usage(format!("{} variables requested, at most {MAX_VARS} supported", exps.len())));
        }
        let mut e = Self::zero(exps.len());
        e.exps[..exps.len()].copy_from_slice(exps);
        Ok(e)
    }

    #[inline]
    pub fn n_vars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn as_slice(&self) -> &[i32] {
        &self.exps[..self.len as usize]
    }

    /// Exponent of the variable with 1-based index `var`.
    #[inline]
    pub fn get(&self, var: usize) -> i32 {
        self.exps[var - 1]
    }

    #[inline]
    pub fn total_degree(&self) -> i32 {
        self.exps.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_non_negative(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    pub fn with(&self, var: usize, exp: i32) -> Self {
        let mut e = *self;
        e.exps[var - 1] = exp;
        e
    }

    #[inline]
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut e = *self;
        for (a, b) in e.exps.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        e
    }

    pub fn neg(&self) -> Self {
        let mut e = *self;
        for a in e.exps.iter_mut() {
            *a = -*a;
        }
        e
    }

    /// Sorted, 1-based list of variable indices with multiplicity, e.g.
    /// `u_1 u_3^2` becomes `[1, 3, 3]`. Only meaningful for non-negative
    /// exponents.
    pub fn to_index_multiset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total_degree().max(0) as usize);
        for (i, &e) in self.as_slice().iter().enumerate() {
            for _ in 0..e.max(0) {
                out.push(i + 1);
            }
        }
        out
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}
