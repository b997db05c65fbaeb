//! Smith normal form over the integers.
//!
//! The elimination always moves the nonzero entry of smallest absolute value
//! in the active submatrix to the pivot position, then clears its row and
//! column by Euclidean reduction. Every row operation is mirrored into `u` and
//! every column operation into `v`, so `u · m · v` is the returned diagonal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Result of [`snf`]: `u · m · v = diag(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal entries, `min(rows, cols)` of them. Nonzero entries come first,
    /// are positive, and form a divisibility chain.
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        self.d.iter().take_while(|x| !x.is_zero()).count()
    }

    /// The diagonal as a full `rows × cols` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.u.rows(), self.v.rows());
        for (i, x) in self.d.iter().enumerate() {
            out[(i, i)] = x.clone();
        }
        out
    }
}

pub fn snf(m: &IntMatrix) -> SnfResult {
    let mut calc = SnfCalc {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
    };
    calc.run();
    let n = m.rows().min(m.cols());
    let d = (0..n).map(|i| calc.a[(i, i)].clone()).collect();
    SnfResult { d, u: calc.u, v: calc.v }
}

struct SnfCalc {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfCalc {
    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            if !self.eliminate(t) {
                break;
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
    }

    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Produces the `t`-th diagonal entry. Returns false once the active
    /// submatrix is zero.
    fn eliminate(&mut self, t: usize) -> bool {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        loop {
            let Some((pi, pj)) = self.smallest_entry(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let pivot = self.a[(t, t)].clone();

            let mut dirty = false;
            for i in t + 1..rows {
                if self.a[(i, t)].is_zero() {
                    continue;
                }
                let q = self.a[(i, t)].div_floor(&pivot);
                self.add_row(i, t, &-q);
                dirty |= !self.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if self.a[(t, j)].is_zero() {
                    continue;
                }
                let q = self.a[(t, j)].div_floor(&pivot);
                self.add_col(j, t, &-q);
                dirty |= !self.a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }

            // Row and column are clear; enforce divisibility of the remainder.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => self.add_row(t, i, &BigInt::from(1)),
                None => {
                    if pivot.is_negative() {
                        self.a.negate_row(t);
                        self.u.negate_row(t);
                    }
                    return true;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntMatrix, expected: &[i64]) {
        let r = snf(m);
        assert_eq!(r.d, ints(expected));
        assert_eq!(&(&r.u * m) * &r.v, r.diagonal_matrix());
        assert!(r.u.is_unimodular() && r.v.is_unimodular());
    }

    #[test]
    fn identity_is_fixed() {
        let m = IntMatrix::identity(2);
        let r = snf(&m);
        assert_eq!(r.d, ints(&[1, 1]));
        assert_eq!(r.u, IntMatrix::identity(2));
        assert_eq!(r.v, IntMatrix::identity(2));
    }

    #[test]
    fn small_examples() {
        check(&IntMatrix::from_rows(&[vec![2, 4], vec![2, 6]]), &[2, 2]);
        check(&IntMatrix::from_rows(&[vec![4, 0], vec![0, 6]]), &[2, 12]);
        check(&IntMatrix::from_rows(&[vec![0, 0], vec![2, 0], vec![3, 4]]), &[1, 8]);
        check(&IntMatrix::from_rows(&[vec![0, 0, 0], vec![0, 0, 0]]), &[0, 0]);
        check(&IntMatrix::from_rows(&[vec![-3]]), &[3]);
    }

    #[test]
    fn empty_matrices() {
        let r = snf(&IntMatrix::zeros(0, 0));
        assert!(r.d.is_empty());
        let r = snf(&IntMatrix::zeros(3, 0));
        assert!(r.d.is_empty());
        assert_eq!(r.u, IntMatrix::identity(3));
        assert_eq!(r.rank(), 0);
    }
}
