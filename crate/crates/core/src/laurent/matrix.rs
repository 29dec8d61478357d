use std::fmt;
use std::ops::{Index, Mul};

use super::{ExponentVector, LaurentPoly, Ring, TruncatedSeries};
use crate::error::{Error, Result};

/// Dense square matrix over one of the crate's rings, stored row-major.
/// Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<R> {
    size: usize,
    entries: Vec<R>,
}

pub type LaurentMatrix = SquareMatrix<LaurentPoly>;
pub type SeriesMatrix = SquareMatrix<TruncatedSeries>;

impl<R: Ring> SquareMatrix<R> {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { size, entries }
    }

    /// Builds from rows; every entry must share the ring context.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::usage("matrix rows must all have length equal to the row count"));
        }
        let entries: Vec<R> = rows.into_iter().flatten().collect();
        if let Some(first) = entries.first() {
            let ctx = first.context();
            if entries.iter().any(|e| e.context() != ctx) {
                return Err(Error::usage("matrix entries live in different rings"));
            }
        }
        Ok(SquareMatrix { size, entries })
    }

    pub fn identity(size: usize, ctx: R::Context) -> Self {
        Self::from_fn(size, |i, j| if i == j { R::one(ctx) } else { R::zero(ctx) })
    }

    pub fn zero(size: usize, ctx: R::Context) -> Self {
        Self::from_fn(size, |_, _| R::zero(ctx))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// Ring context of the entries; `None` for the empty matrix.
    pub fn ring_context(&self) -> Option<R::Context> {
        self.entries.first().map(Ring::context)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.size + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.size.max(1))
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::usage(format!("matrix sizes {} and {} differ", self.size, other.size)));
        }
        if self.ring_context() != other.ring_context() {
            return Err(Error::usage("matrices live over different rings"));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            a.sub_assign_ref(b);
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.size;
        let Some(ctx) = self.ring_context() else {
            return self.clone();
        };
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = R::zero(ctx);
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                out.push(acc);
            }
        }
        SquareMatrix { size: n, entries: out }
    }

    pub fn trace(&self) -> Option<R> {
        let ctx = self.ring_context()?;
        let mut acc = R::zero(ctx);
        for i in 0..self.size {
            acc.add_assign_ref(self.get(i, i));
        }
        Some(acc)
    }

    /// Matrix with row `row` and column `col` removed.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.size;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        SquareMatrix { size: n - 1, entries }
    }

    /// Determinant by Laplace expansion memoised over column subsets;
    /// `O(n 2^n)` ring multiplications and no division.
    pub fn determinant(&self) -> Option<R> {
        let n = self.size;
        let ctx = self.ring_context()?;
        // minors[mask] = det of rows (n - |mask|)..n against columns in mask
        let mut minors: Vec<Option<R>> = vec![None; 1 << n];
        minors[0] = Some(R::one(ctx));
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = R::zero(ctx);
            let mut sign_pos = true;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let a = self.get(row, col);
                if !a.is_zero() {
                    let rest = minors[mask & !(1 << col)].as_ref().expect("filled");
                    if sign_pos {
                        acc.add_product(a, rest);
                    } else {
                        acc.add_product(&a.negate(), rest);
                    }
                }
                sign_pos = !sign_pos;
            }
            minors[mask] = Some(acc);
        }
        minors.pop().flatten()
    }

    /// Classical adjugate: `adj(M)[i][j] = (-1)^(i+j) det(minor(j, i))`.
    pub fn adjugate(&self) -> Option<Self> {
        let n = self.size;
        let ctx = self.ring_context()?;
        if n == 1 {
            return Some(Self::identity(1, ctx));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(j, i).determinant().expect("nonempty minor");
                entries.push(if (i + j) % 2 == 0 { d } else { d.negate() });
            }
        }
        Some(SquareMatrix { size: n, entries })
    }
}

impl<'a, R: Ring> Mul<&'a SquareMatrix<R>> for &'a SquareMatrix<R> {
    type Output = SquareMatrix<R>;
    fn mul(self, rhs: &'a SquareMatrix<R>) -> SquareMatrix<R> {
        self.checked_mul(rhs).expect("incompatible matrices")
    }
}

impl<R> Index<(usize, usize)> for SquareMatrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.entries[i * self.size + j]
    }
}

impl LaurentMatrix {
    pub fn laurent_identity(size: usize, n_vars: usize) -> Self {
        Self::identity(size, n_vars)
    }

    /// Exact inverse of a matrix whose determinant is a unit `±t^e`:
    /// the adjugate shifted by `t^-e` and multiplied by the sign.
    ///
    /// `det_hint` skips the determinant computation when the caller
    /// already knows it.
    pub fn laurent_inverse(&self, det_hint: Option<&LaurentPoly>) -> Result<Self> {
        let n_vars = self.ring_context().ok_or_else(|| Error::usage("cannot invert the empty matrix"))?;
        let det = match det_hint {
            Some(d) => d.clone(),
            None => self.determinant().expect("nonempty"),
        };
        let (sign, e) = det
            .as_unit_monomial()
            .ok_or_else(|| Error::domain(format!("determinant {det} is not a signed monomial")))?;
        let shift = e.neg();
        let scale = num_bigint::BigInt::from(sign);
        let adj = self.adjugate().expect("nonempty");
        let inv = adj.map(|p| p.mul_monomial(&shift, &scale));
        debug_assert_eq!(inv.ring_context(), Some(n_vars));
        Ok(inv)
    }

    /// Substitutes `t_var = 1` (1-based) in every entry.
    pub fn specialize_one(&self, var: usize) -> Self {
        self.map(|p| p.specialize_one(var))
    }

    /// Substitutes every `t_i = 1`, giving an integer matrix embedded as
    /// constant polynomials.
    pub fn augmentation(&self) -> Self {
        let n_vars = self.ring_context().unwrap_or(0);
        self.map(|p| LaurentPoly::constant(n_vars, p.augmentation()))
    }

    pub fn to_series(&self, max_deg: u32) -> SeriesMatrix {
        self.map(|p| TruncatedSeries::from_laurent(p, max_deg))
    }
}

impl SeriesMatrix {
    /// Inverse of a matrix congruent to the identity modulo `J`, as
    /// `sum_{k=0}^{D} (I - M)^k` evaluated by Horner's rule.
    pub fn series_inverse(&self) -> Result<Self> {
        let ctx = self.ring_context().ok_or_else(|| Error::usage("cannot invert the empty matrix"))?;
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                let c = self.get(i, j).constant_term();
                let want = if i == j { 1 } else { 0 };
                if c != want.into() {
                    return Err(Error::domain(format!(
                        "constant term of entry ({}, {}) is {c}, expected {want}: matrix is not in K_n",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let id = Self::identity(n, ctx);
        let nil = id.checked_sub(self)?;
        let mut acc = id.clone();
        for _ in 0..ctx.max_deg {
            acc = id.checked_add(&nil.mul_unchecked(&acc))?;
        }
        Ok(acc)
    }

    /// Degree-`d` coefficient of entry `(i, j)` at monomial `e`.
    pub fn coeff(&self, i: usize, j: usize, e: &ExponentVector) -> num_bigint::BigInt {
        self.get(i, j).coeff(e)
    }

    /// Smallest total degree at which `M - I` has a nonzero coefficient.
    pub fn first_nonvanishing_degree(&self) -> Option<u32> {
        let ctx = self.ring_context()?;
        let diff = self.checked_sub(&Self::identity(self.size(), ctx)).ok()?;
        diff.entries().iter().filter_map(|e| e.low_degree()).min()
    }

    pub fn is_congruent_identity(&self) -> bool {
        self.first_nonvanishing_degree().is_none()
    }

    pub fn truncate(&self, max_deg: u32) -> Self {
        self.map(|s| s.truncate(max_deg))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(0);
        for i in 0..self.size {
            write!(f, "[")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>width$}", cells[i * self.size + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::t(n, i)
    }

    fn c(n: usize, v: i64) -> LaurentPoly {
        LaurentPoly::constant(n, v)
    }

    fn gassner_2() -> LaurentMatrix {
        let one = c(2, 1);
        SquareMatrix::from_rows(vec![
            vec![&(&one - &t(2, 1)) + &(&t(2, 1) * &t(2, 2)), &t(2, 1) * &(&one - &t(2, 1))],
            vec![&one - &t(2, 2), t(2, 1)],
        ])
        .unwrap()
    }

    #[test]
    fn identity_determinant_and_inverse() {
        let id = LaurentMatrix::laurent_identity(4, 3);
        assert_eq!(id.determinant().unwrap(), LaurentPoly::one(3));
        assert_eq!(id.laurent_inverse(None).unwrap(), id);
    }

    #[test]
    fn two_by_two_inverse_has_reciprocal_determinant() {
        let g = gassner_2();
        let det = g.determinant().unwrap();
        assert_eq!(det, &t(2, 1) * &t(2, 2));
        let inv = g.laurent_inverse(None).unwrap();
        let inv_det = inv.determinant().unwrap();
        assert_eq!(&inv_det * &det, LaurentPoly::one(2));
        assert!((&g * &inv).is_identity());
        assert!((&inv * &g).is_identity());
    }

    #[test]
    fn non_unit_determinant_is_domain_error() {
        let m = SquareMatrix::from_rows(vec![vec![c(1, 2)]]).unwrap();
        assert!(matches!(m.laurent_inverse(None), Err(Error::Domain(_))));
        let m = SquareMatrix::from_rows(vec![vec![&t(1, 1) + &c(1, 1)]]).unwrap();
        assert!(matches!(m.laurent_inverse(None), Err(Error::Domain(_))));
    }

    #[test]
    fn specialization_of_2x2_generator() {
        let g = gassner_2().specialize_one(2);
        let one = c(2, 1);
        let expect =
            SquareMatrix::from_rows(vec![vec![one.clone(), &t(2, 1) * &(&one - &t(2, 1))], vec![c(2, 0), t(2, 1)]])
                .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn series_inverse_of_identity_and_nilpotent() {
        let id = SeriesMatrix::identity(3, super::super::SeriesContext { n_vars: 2, max_deg: 3 });
        assert_eq!(id.series_inverse().unwrap(), id);
        let mut m = id.clone();
        m.set(0, 1, TruncatedSeries::u(2, 3, 1));
        let mut expect = id.clone();
        expect.set(0, 1, TruncatedSeries::u(2, 3, 1).negate());
        assert_eq!(m.series_inverse().unwrap(), expect);
    }

    #[test]
    fn series_inverse_rejects_non_congruence_matrix() {
        let ctx = super::super::SeriesContext { n_vars: 1, max_deg: 2 };
        let mut m = SeriesMatrix::identity(2, ctx);
        m.set(1, 0, TruncatedSeries::constant(1, 2, 3));
        assert!(matches!(m.series_inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn mismatched_matrix_sizes_are_usage_errors() {
        let a = LaurentMatrix::laurent_identity(2, 2);
        let b = LaurentMatrix::laurent_identity(3, 2);
        assert!(matches!(a.checked_mul(&b), Err(Error::Usage(_))));
    }
}
