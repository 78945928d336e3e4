//! Dense exact linear algebra over Q(ζ₂₄), sized for desk-scale algebras
//! (dim ≤ 16). Gaussian elimination with first-nonzero pivoting keeps the
//! results deterministic.

use crate::scalar::CycNum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Row-major dense matrix over Q(ζ₂₄).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycNum>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycMatrix {
            rows,
            cols,
            data: vec![CycNum::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = CycNum::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        CycMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: &[Vec<CycNum>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &CycNum) -> CycMatrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = &*v * s;
        }
        out
    }

    pub fn add(&self, rhs: &CycMatrix) -> CycMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn inverse(&self) -> Result<CycMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
                return Err(LinalgError::Singular);
            };
            if p != col {
                for j in 0..n {
                    let (x, y) = (a.at(col, j).clone(), a.at(p, j).clone());
                    *a.at_mut(col, j) = y;
                    *a.at_mut(p, j) = x;
                    let (x, y) = (inv.at(col, j).clone(), inv.at(p, j).clone());
                    *inv.at_mut(col, j) = y;
                    *inv.at_mut(p, j) = x;
                }
            }
            let piv = a.at(col, col).inv().expect("pivot nonzero");
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j) * &piv;
                *inv.at_mut(col, j) = inv.at(col, j) * &piv;
            }
            for r in 0..n {
                if r != col && !a.at(r, col).is_zero() {
                    let f = a.at(r, col).clone();
                    for j in 0..n {
                        let t = a.at(col, j) * &f;
                        *a.at_mut(r, j) -= &t;
                        let t = inv.at(col, j) * &f;
                        *inv.at_mut(r, j) -= &t;
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Solve self · x = rhs exactly; None when inconsistent. When the
    /// system is underdetermined, free variables are set to zero.
    pub fn solve(&self, rhs: &[CycNum]) -> Option<Vec<CycNum>> {
        assert_eq!(self.rows, rhs.len(), "rhs length mismatch");
        let n = self.rows;
        let m = self.cols;
        let mut aug: Vec<Vec<CycNum>> = (0..n)
            .map(|i| {
                let mut row: Vec<CycNum> = self.row(i).to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..m {
            let Some(p) = (r..n).find(|&rr| !aug[rr][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].inv().expect("pivot nonzero");
            for j in c..=m {
                aug[r][j] = &aug[r][j] * &inv;
            }
            for rr in 0..n {
                if rr != r && !aug[rr][c].is_zero() {
                    let f = std::mem::take(&mut aug[rr][c]);
                    for j in (c + 1)..=m {
                        let t = &aug[r][j] * &f;
                        aug[rr][j] -= &t;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == n {
                break;
            }
        }
        if aug[r..].iter().any(|row| !row[m].is_zero()) {
            return None;
        }
        let mut x = vec![CycNum::zero(); m];
        for &(rr, c) in &pivots {
            x[c] = aug[rr][m].clone();
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<CycNum>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        echelonize(rows).0.len()
    }
}

/// Reduced row echelon form; returns (nonzero rows, pivot columns).
pub fn echelonize(mut rows: Vec<Vec<CycNum>>) -> (Vec<Vec<CycNum>>, Vec<usize>) {
    let n = rows.len();
    let m = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&rr| !rows[rr][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot nonzero");
        for j in c..m {
            rows[r][j] = &rows[r][j] * &inv;
        }
        for rr in 0..n {
            if rr != r && !rows[rr][c].is_zero() {
                let f = std::mem::take(&mut rows[rr][c]);
                for j in (c + 1)..m {
                    let t = &rows[r][j] * &f;
                    rows[rr][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Remainder of `v` after reduction by echelon rows; zero iff `v` lies in
/// their span.
pub fn reduce_by_echelon(v: &[CycNum], rows: &[Vec<CycNum>], pivots: &[usize]) -> Vec<CycNum> {
    let mut rem = v.to_vec();
    for (row, &c) in rows.iter().zip(pivots.iter()) {
        if !rem[c].is_zero() {
            let f = rem[c].clone();
            for j in 0..rem.len() {
                if !row[j].is_zero() {
                    let t = &row[j] * &f;
                    rem[j] -= &t;
                }
            }
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycNum;

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CycMatrix::from_rows(vec![
            vec![c(1), CycNum::i()],
            vec![CycNum::sqrt2(), c(3)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), CycMatrix::identity(2));
        let sing = CycMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = CycMatrix::from_rows(vec![vec![c(1), c(2)], vec![c(2), c(4)]]);
        assert!(m.solve(&[c(1), c(2)]).is_some());
        assert!(m.solve(&[c(1), c(3)]).is_none());
    }

    #[test]
    fn echelon_membership() {
        let (rows, pivots) = echelonize(vec![
            vec![c(1), c(0), CycNum::omega()],
            vec![c(2), c(0), CycNum::omega().scale(&num::BigRational::from_integer(2.into()))],
            vec![c(0), c(1), c(0)],
        ]);
        assert_eq!(rows.len(), 2);
        let member = vec![c(3), c(-1), CycNum::omega().scale(&num::BigRational::from_integer(3.into()))];
        assert!(reduce_by_echelon(&member, &rows, &pivots).iter().all(CycNum::is_zero));
        let outsider = vec![c(0), c(0), c(1)];
        assert!(!reduce_by_echelon(&outsider, &rows, &pivots).iter().all(CycNum::is_zero));
    }
}
