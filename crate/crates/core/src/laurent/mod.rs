//! Exact arithmetic in `Z[t_1^{±1}, ..., t_n^{±1}]` and in its truncations
//! modulo powers of the augmentation ideal, plus square matrices over both.

mod exponent;
mod json;
mod matrix;
mod poly;
mod series;

use std::fmt;

pub use exponent::{ExponentVector, MAX_VARS};
pub use matrix::{LaurentMatrix, SeriesMatrix, SquareMatrix};
pub use poly::{LaurentPoly, PointPowers};
pub use series::{SeriesContext, TruncatedSeries};

pub(crate) use poly::{mul_mod, reduce_bigint};

/// Commutative ring operations shared by [`LaurentPoly`] and
/// [`TruncatedSeries`], enough to run generic matrix code.
///
/// Methods panic when the operands live in different rings; the inherent
/// `checked_*` methods report that case as [`crate::Error::Usage`].
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Context: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn context(&self) -> Self::Context;
    fn zero(ctx: Self::Context) -> Self;
    fn one(ctx: Self::Context) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self);
    fn negate(&self) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.context());
        out.add_product(self, other);
        out
    }
}
