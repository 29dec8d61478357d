//! The s-fold commutator mechanism: a left-normed commutator
//! `[..[[x_{l1}, x_{l2}], x_{l3}], .., x_{ls}]` contributes
//! `e_{l1,n}(-1) + e_{l2,n}(1)` at the `t_n`-free factor `t_{l1}...t_{ls}`,
//! and no other basic commutator reaches a `t_n`-free factor.

use num_bigint::BigInt;
use serde::Serialize;

use super::{assemble_phi_matrix, integer_rank, Monomial};
use crate::braid::check_strands;
use crate::error::{Error, Result};

/// Outcome of [`sfold_property_check`].
#[derive(Clone, Debug, Serialize)]
pub struct SfoldReport {
    pub n: usize,
    pub weight: usize,
    pub left_normed: usize,
    pub other: usize,
    /// Left-normed commutators whose top factor is not `e_{l1,n}(-1) + e_{l2,n}(1)`.
    pub top_factor_failures: Vec<String>,
    /// Other basic commutators with a nonzero `t_n`-free coordinate.
    pub tn_free_failures: Vec<String>,
    pub left_normed_rank: usize,
}

impl SfoldReport {
    pub fn passed(&self) -> bool {
        self.top_factor_failures.is_empty()
            && self.tn_free_failures.is_empty()
            && self.left_normed_rank == self.left_normed
    }
}

/// Checks the three parts of the mechanism for weight `s` on `n` strands.
pub fn sfold_property_check(n: usize, s: usize) -> Result<SfoldReport> {
    check_strands(n)?;
    if s < 3 {
        return Err(Error::usage(format!("s-fold check needs weight >= 3, got {s}")));
    }
    if n < 3 {
        return Err(Error::usage("s-fold check needs n >= 3"));
    }
    let pm = assemble_phi_matrix(n, s)?;
    let mut top_factor_failures = Vec::new();
    let mut tn_free_failures = Vec::new();
    let mut left_rows = Vec::new();
    for (i, (c, class)) in pm.rows.iter().zip(&pm.classes).enumerate() {
        if c.is_left_normed() {
            left_rows.push(i);
            let l = c.leaves();
            let top = class.factor(&Monomial::new(l.clone()));
            let mut want = std::collections::BTreeMap::new();
            want.insert((l[0], n), BigInt::from(-1));
            want.insert((l[1], n), BigInt::from(1));
            if top != want {
                top_factor_failures.push(c.to_string());
            }
        } else if class.coords().any(|(k, _)| !k.mono.contains(n)) {
            tn_free_failures.push(c.to_string());
        }
    }
    let left_normed_rank = integer_rank(&pm.matrix.select_rows(&left_rows));
    Ok(SfoldReport {
        n,
        weight: s,
        left_normed: left_rows.len(),
        other: pm.rows.len() - left_rows.len(),
        top_factor_failures,
        tn_free_failures,
        left_normed_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_three_on_four_strands() {
        let r = sfold_property_check(4, 3).unwrap();
        assert_eq!(r.left_normed, 8);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn rejects_low_weight() {
        assert!(matches!(sfold_property_check(4, 2), Err(Error::Usage(_))));
    }
}
