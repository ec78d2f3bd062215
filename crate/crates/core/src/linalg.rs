//! Exact linear algebra over the rationals.
//!
//! Matrices are small (the number of exceptional curves), so plain Gaussian
//! elimination over `BigRational` is used for solving and inversion, and
//! fraction-free Bareiss elimination over `BigInt` for integer determinants
//! and definiteness tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Dense rational matrix, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !x[j].is_zero() {
                        s += self.at(i, j) * &x[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Solve `A x = b` for a square invertible `A`.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = (0..n).map(|j| self.at(i, j).clone()).collect();
                row.push(b[i].clone());
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let inv = m[col][col].clone();
            for j in col..=n {
                m[col][j] = &m[col][j] / &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in col..=n {
                        let d = &m[col][j] * &f;
                        m[r][j] = &m[r][j] - &d;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[n].clone()).collect())
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            cols.push(self.solve(&e)?);
        }
        let mut out = Mat::zero(n, n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                out.set(i, j, col[i].clone());
            }
        }
        Some(out)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = m[rank][col].clone();
            for j in col..self.cols {
                m[rank][j] = &m[rank][j] / &inv;
            }
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in col..self.cols {
                        let d = &m[rank][j] * &f;
                        m[r][j] = &m[r][j] - &d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Leading principal minors `det(A[0..k, 0..k])` for `k = 1..=n` of an
/// integer matrix, via Bareiss pivots (no row swaps: a zero pivot makes the
/// remaining minors undefined here, reported as `None` from that point on).
pub fn leading_principal_minors(m: &[Vec<BigInt>]) -> Vec<Option<BigInt>> {
    let n = m.len();
    (1..=n)
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = (0..k).map(|i| m[i][0..k].to_vec()).collect();
            Some(det_bareiss(&sub))
        })
        .collect()
}

/// Is the symmetric integer matrix positive definite?  Tested exactly via
/// the sign of every leading principal minor.
pub fn is_positive_definite(m: &[Vec<BigInt>]) -> bool {
    leading_principal_minors(m)
        .into_iter()
        .all(|d| matches!(d, Some(v) if v.is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bareiss_det() {
        let m = vec![vec![bi(2), bi(-1)], vec![bi(-1), bi(2)]];
        assert_eq!(det_bareiss(&m), bi(3));
        let m = vec![vec![bi(1), bi(1)], vec![bi(1), bi(1)]];
        assert_eq!(det_bareiss(&m), bi(0));
        // needs a row swap
        let m = vec![vec![bi(0), bi(1)], vec![bi(1), bi(0)]];
        assert_eq!(det_bareiss(&m), bi(-1));
    }

    #[test]
    fn definiteness() {
        assert!(is_positive_definite(&[
            vec![bi(2), bi(-1)],
            vec![bi(-1), bi(2)]
        ]));
        // two (-1)-vertices joined by an edge: -M = [[1,-1],[-1,1]] is singular
        assert!(!is_positive_definite(&[
            vec![bi(1), bi(-1)],
            vec![bi(-1), bi(1)]
        ]));
    }

    #[test]
    fn solve_and_rank() {
        let m = Mat::from_rows(vec![vec![rat_i(2), rat_i(1)], vec![rat_i(1), rat_i(3)]]);
        let x = m.solve(&[rat_i(5), rat_i(10)]).unwrap();
        assert_eq!(x, vec![rat_i(1), rat_i(3)]);
        assert_eq!(m.rank(), 2);
        let s = Mat::from_rows(vec![vec![rat_i(1), rat_i(2)], vec![rat_i(2), rat_i(4)]]);
        assert_eq!(s.rank(), 1);
    }
}
