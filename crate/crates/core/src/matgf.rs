//! Dense matrices over a finite field.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fields::{FieldCtx, Gf};
use crate::json::{int_value, value_int};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfMatrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Value>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl GfMatrix {
    pub fn zeros(field: &FieldCtx, rows: usize, cols: usize) -> GfMatrix {
        GfMatrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &FieldCtx, n: usize) -> GfMatrix {
        let mut m = GfMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldCtx, rows: Vec<Vec<Gf>>) -> GfMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        GfMatrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Rows of canonical encodings.
    pub fn from_u64(field: &FieldCtx, rows: &[Vec<u64>]) -> GfMatrix {
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_u64(v)).collect()).collect();
        GfMatrix::from_rows(field, rows)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Gf {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Gf> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_u64(&self) -> Option<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|a| self.field.to_u64(a)).collect())
            .collect()
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = GfMatrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &GfMatrix) -> GfMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let f = &self.field;
        let mut r = GfMatrix::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        let t = f.mul(a, b);
                        f.add_assign(&mut r.data[i * o.cols + j], &t);
                    }
                }
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Columns in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> GfMatrix {
        let mut m = GfMatrix::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> GfMatrix {
        let mut m = GfMatrix::zeros(&self.field, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Copies `block` with its top-left corner at (r0, c0).
    pub fn put(&mut self, r0: usize, c0: usize, block: &GfMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn neg(&self) -> GfMatrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.neg(a);
        }
        m
    }

    pub fn det(&self) -> Result<Gf> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Ok(f.zero());
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = a[c * n + c].clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv)?;
            for r in c + 1..n {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let factor = f.mul(&a[r * n + c], &inv);
                for j in c..n {
                    if !a[c * n + j].is_zero() {
                        let t = f.mul(&factor, &a[c * n + j]);
                        f.sub_assign(&mut a[r * n + j], &t);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn is_singular(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rank() < self.rows)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.clone();
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..cols {
                    if !m.get(r, j).is_zero() {
                        let t = f.mul(&factor, m.get(r, j));
                        f.sub_assign(&mut m.data[i * cols + j], &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel on the given side, as rows in reduced echelon form.
    pub fn kernel(&self, side: Side) -> GfMatrix {
        match side {
            Side::Left => self.transpose().kernel(Side::Right),
            Side::Right => {
                let f = &self.field;
                let (r, pivots) = self.rref();
                let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
                let mut k = GfMatrix::zeros(f, free.len(), self.cols);
                for (t, &fc) in free.iter().enumerate() {
                    k.set(t, fc, f.one());
                    for (i, &pc) in pivots.iter().enumerate() {
                        k.set(t, pc, f.neg(r.get(i, fc)));
                    }
                }
                k.rref().0
            }
        }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            data: (0..self.rows)
                .map(|i| self.row(i).iter().map(|a| int_value(&self.field.encode(a))).collect())
                .collect(),
        }
    }

    pub fn from_json(field: &FieldCtx, j: &MatrixJson) -> Result<GfMatrix> {
        if j.data.len() != j.rows || j.data.iter().any(|r| r.len() != j.cols) {
            return Err(Error::Parse("matrix dimensions disagree with data".into()));
        }
        let mut m = GfMatrix::zeros(field, j.rows, j.cols);
        for (i, r) in j.data.iter().enumerate() {
            for (c, v) in r.iter().enumerate() {
                m.set(i, c, field.decode(&value_int(v)?)?);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_det() {
        let f = FieldCtx::prime(7).unwrap();
        assert!(f.is_one(&GfMatrix::identity(&f, 3).det().unwrap()));
    }

    #[test]
    fn vandermonde_2x2() {
        let f = FieldCtx::prime(11).unwrap();
        let m = GfMatrix::from_u64(&f, &[vec![1, 1], vec![3, 8]]);
        assert_eq!(m.det().unwrap(), f.from_u64(5));
        let r = GfMatrix::from_u64(&f, &[vec![1, 1, 0]]);
        assert_eq!(r.det().unwrap_err(), Error::NotSquare { rows: 1, cols: 3 });
    }

    #[test]
    fn zero_matrix_kernel_is_identity() {
        let f = FieldCtx::prime(5).unwrap();
        let z = GfMatrix::zeros(&f, 2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel(Side::Right), GfMatrix::identity(&f, 3));
    }

    #[test]
    fn vandermonde_full_rank() {
        let f = FieldCtx::prime(11).unwrap();
        let locs = [2u64, 5, 7];
        let rows: Vec<Vec<u64>> = (0..3).map(|i| locs.iter().map(|&a| (a.pow(i)) % 11).collect()).collect();
        let m = GfMatrix::from_u64(&f, &rows);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.kernel(Side::Right).rows(), 0);
        assert_eq!(m.kernel(Side::Left).rows(), 0);
    }

    #[test]
    fn json_roundtrip() {
        let f = FieldCtx::prime(13).unwrap();
        let m = GfMatrix::from_u64(&f, &[vec![1, 12], vec![0, 4]]);
        assert_eq!(GfMatrix::from_json(&f, &m.to_json()).unwrap(), m);
    }
}
