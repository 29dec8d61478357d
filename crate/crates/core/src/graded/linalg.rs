//! Exact rank and kernel of integer matrices by fraction-free (Bareiss)
//! elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::{mul_mod, reduce_bigint};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Row vector `v^T M`.
    pub fn left_mul(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += vi * a;
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(k, j, self.get(i, j).clone());
            }
        }
        out
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }
}

/// Row echelon form by Bareiss elimination. Returns the reduced rows and
/// the pivot column of each nonzero row.
fn bareiss_echelon(m: &IntMatrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a = m.to_rows();
    let rows = m.rows;
    let cols = m.cols;
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Rank over the rationals.
pub fn integer_rank(m: &IntMatrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Rank over `Z/p`; never exceeds [`integer_rank`] and agrees with it for
/// all but finitely many primes.
pub fn modular_rank(m: &IntMatrix, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m.to_rows().iter().map(|r| r.iter().map(|v| reduce_bigint(v, p)).collect()).collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(piv) = (rank..m.rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv_val = inv_mod(a[rank][c], p);
        for i in rank + 1..m.rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mul_mod(a[i][c], inv_val, p);
            let (pivot_rows, rest) = a.split_at_mut(i);
            for (x, &y) in rest[0][c..].iter_mut().zip(&pivot_rows[rank][c..]) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Basis of the left kernel `{ v : v^T M = 0 }`, one vector per free row,
/// each scaled to a primitive integer vector with its first nonzero entry
/// positive. Empty when the rows are independent.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let t = m.transpose();
    let (ech, pivots) = bareiss_echelon(&t);
    let n = m.rows;
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRational::zero(); n];
        x[f] = BigRational::one();
        for (k, &p) in pivots.iter().enumerate().rev() {
            let row = &ech[k];
            let mut s = BigRational::zero();
            for j in p + 1..n {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[p] = -s / BigRational::from_integer(row[p].clone());
        }
        out.push(primitive(&x));
    }
    out
}

fn primitive(x: &[BigRational]) -> Vec<BigInt> {
    let denom = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut v: Vec<BigInt> = x.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if !g.is_zero() && !g.is_one() {
        for a in v.iter_mut() {
            *a = &*a / &g;
        }
    }
    if v.iter().find(|a| !a.is_zero()).is_some_and(|a| a.is_negative()) {
        for a in v.iter_mut() {
            *a = -&*a;
        }
    }
    v
}
