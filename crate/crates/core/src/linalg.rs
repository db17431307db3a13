//! Dense vectors and matrices over the rationals: just enough exact linear
//! algebra for Gram forms, dual actions, and canonical subspace comparison.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_int, rat_one, rat_zero, Rat};

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![rat_zero(); n]
}

pub fn vec_from_int(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &Rat, a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![rat_zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat_one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| vec_from_int(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, val: Rat) {
        self.data[i * self.cols + j] = val;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| vec_dot(self.row(i), v)).collect()
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = rat_one();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !m.get(i, col).is_zero());
            let Some(p) = pivot else {
                return rat_zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(p, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(p, j, b);
                    m.set(col, j, a);
                }
                det = -det;
            }
            let pv = m.get(col, col).clone();
            det *= &pv;
            for i in col + 1..n {
                let factor = m.get(i, col) / &pv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let upd = m.get(i, j) - &factor * m.get(col, j);
                    m.set(i, j, upd);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<QMat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !m.get(i, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let a = m.get(pivot, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(pivot, j, b);
                    m.set(col, j, a);
                    let a = inv.get(pivot, j).clone();
                    let b = inv.get(col, j).clone();
                    inv.set(pivot, j, b);
                    inv.set(col, j, a);
                }
            }
            let pv = m.get(col, col).clone();
            for j in 0..n {
                let a = m.get(col, j) / &pv;
                m.set(col, j, a);
                let a = inv.get(col, j) / &pv;
                inv.set(col, j, a);
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let upd = m.get(i, j) - &factor * m.get(col, j);
                    m.set(i, j, upd);
                    let upd = inv.get(i, j) - &factor * inv.get(col, j);
                    inv.set(i, j, upd);
                }
            }
        }
        Ok(inv)
    }

    /// Reduced row echelon form. For a fixed row space this is unique, so it
    /// doubles as a canonical form for subspace comparison.
    pub fn rref(&self) -> QMat {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let pivot = (pivot_row..m.rows).find(|&i| !m.get(i, col).is_zero());
            let Some(p) = pivot else { continue };
            if p != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(p, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(p, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let pv = m.get(pivot_row, col).clone();
            for j in 0..m.cols {
                let a = m.get(pivot_row, j) / &pv;
                m.set(pivot_row, j, a);
            }
            for i in 0..m.rows {
                if i == pivot_row {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let upd = m.get(i, j) - &factor * m.get(pivot_row, j);
                    m.set(i, j, upd);
                }
            }
            pivot_row += 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows).filter(|&i| !vec_is_zero(r.row(i))).count()
    }

    /// Drops all-zero rows; applied after `rref` this yields a canonical
    /// basis matrix of the row space.
    pub fn drop_zero_rows(&self) -> QMat {
        let rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| self.row(i).to_vec())
            .filter(|r| !vec_is_zero(r))
            .collect();
        if rows.is_empty() {
            QMat {
                rows: 0,
                cols: self.cols,
                data: vec![],
            }
        } else {
            QMat::from_rows(rows)
        }
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }
}
