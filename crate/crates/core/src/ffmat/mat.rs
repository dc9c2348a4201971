use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{Field, FieldRef};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense matrix over a finite field, row-major. Vectors are columns and
/// matrices act on the left: `A·v`.
#[derive(Clone)]
pub struct Mat {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Mat {}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.data.hash(state);
    }
}

impl PartialOrd for Mat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|&a| self.field.format(a)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(field: &FieldRef, rows: usize, cols: usize) -> Mat {
        Mat {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, d: usize) -> Mat {
        Mat::scalar(field, d, 1)
    }

    pub fn scalar(field: &FieldRef, d: usize, c: u32) -> Mat {
        let mut m = Mat::zero(field, d, d);
        for i in 0..d {
            m.data[i * d + i] = c;
        }
        m
    }

    pub fn diag(field: &FieldRef, entries: &[u32]) -> Mat {
        let d = entries.len();
        let mut m = Mat::zero(field, d, d);
        for (i, &c) in entries.iter().enumerate() {
            m.data[i * d + i] = c;
        }
        m
    }

    pub fn from_vec(field: &FieldRef, rows: usize, cols: usize, data: Vec<u32>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&a| a as u64 >= field.order()) {
            return Err(Error::Dimension(format!("entry {bad} is not a field element")));
        }
        Ok(Mat {
            field: Arc::clone(field),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: &FieldRef, rows: &[Vec<u32>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Mat::from_vec(field, rows.len(), cols, rows.concat())
    }

    /// Integer matrix reduced into the prime subfield.
    pub fn from_ints(field: &FieldRef, rows: &[Vec<i64>]) -> Result<Mat> {
        let reduced: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&k| field.from_int(k)).collect())
            .collect();
        Mat::from_rows(field, &reduced)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldRef, rows: usize, columns: &[Vec<u32>]) -> Result<Mat> {
        let mut m = Mat::zero(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Dimension("column length".into()));
            }
            for (i, &a) in c.iter().enumerate() {
                m.data[i * m.cols + j] = a;
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, a: u32) {
        self.data[i * self.cols + j] = a;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as u32))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f: &Field = &self.field;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    if b != 0 {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Mat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: other.cols,
            data: out,
        }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let f: &Field = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    fn zip_with(&self, other: &Mat, op: impl Fn(u32, u32) -> u32) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| op(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: u32) -> Mat {
        Mat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| self.field.mul(a, c)).collect(),
        }
    }

    /// `A - I`.
    pub fn minus_identity(&self) -> Mat {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let a = m.get(i, i);
            m.set(i, i, self.field.sub(a, 1));
        }
        m
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j);
            }
        }
        m
    }

    /// Applies a field map entrywise (used for Frobenius twists).
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Mat {
        Mat {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f: &Field = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    m.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let a = m.get(r, j);
                m.set(r, j, f.mul(a, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
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

    /// Basis of `{v : A·v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f: &Field = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.cols, &self.kernel_basis())
    }

    /// `ker(A - I)`.
    pub fn fixed_space(&self) -> Subspace {
        self.minus_identity().kernel()
    }

    pub fn det(&self) -> u32 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f: &Field = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zero(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Mat::zero(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, e: i64) -> Result<Mat> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = Mat::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Multiplicative order, searched up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    /// Action on `Λ²V` in the basis `e_i∧e_j` (`i<j`, lexicographic):
    /// `A(e_i∧e_j) = Σ_{k<l} (A_ki A_lj − A_li A_kj) e_k∧e_l`.
    pub fn wedge_square(&self) -> Mat {
        assert!(self.is_square(), "exterior square of a non-square matrix");
        let f: &Field = &self.field;
        let d = self.rows;
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .collect();
        let m = pairs.len();
        let mut w = Mat::zero(&self.field, m, m);
        for (col, &(i, j)) in pairs.iter().enumerate() {
            for (row, &(k, l)) in pairs.iter().enumerate() {
                let a = f.mul(self.get(k, i), self.get(l, j));
                let b = f.mul(self.get(l, i), self.get(k, j));
                w.set(row, col, f.sub(a, b));
            }
        }
        w
    }

    /// `(A^-1)^T`.
    pub fn contragredient(&self) -> Result<Mat> {
        Ok(self.inverse()?.transpose())
    }

    /// Conjugate `B A B^-1`.
    pub fn conjugate(&self, b: &Mat, b_inv: &Mat) -> Mat {
        b.mul(self).mul(b_inv)
    }

    /// Minimal polynomial over the prime field, monic, low degree first.
    /// Requires all entries in the prime subfield.
    pub fn minimal_polynomial(&self) -> Vec<u32> {
        assert!(self.is_square());
        let f: &Field = &self.field;
        let n = self.rows;
        let mut powers: Vec<Vec<u32>> = vec![Mat::identity(&self.field, n).data];
        let mut current = Mat::identity(&self.field, n);
        loop {
            current = current.mul(self);
            let k = powers.len();
            // Columns: I, A, …, A^{k-1}, then A^k; solve the dependency.
            let mut cols = powers.clone();
            cols.push(current.data.clone());
            let sys = Mat::from_columns(&self.field, n * n, &cols).expect("consistent lengths");
            let kernel = sys.kernel_basis();
            if let Some(v) = kernel.into_iter().find(|v| v[k] != 0) {
                let inv = f.inv(v[k]).expect("nonzero");
                return v.iter().map(|&c| f.mul(c, inv)).collect();
            }
            powers.push(current.data.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::field;
    use super::*;

    #[test]
    fn rank_and_fixed_space() {
        let f5 = field(5, 1).unwrap();
        assert_eq!(Mat::identity(&f5, 3).fixed_space().dim(), 3);
        assert_eq!(Mat::diag(&f5, &[2, 1]).minus_identity().rank(), 1);
        let f7 = field(7, 1).unwrap();
        // Companion matrix of x^2+x+1.
        let c = Mat::from_ints(&f7, &[vec![0, -1], vec![1, -1]]).unwrap();
        assert_eq!(c.scale(2).fixed_space().dim(), 1);
        assert_eq!(c.minimal_polynomial(), vec![1, 1, 1]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f3 = field(3, 1).unwrap();
        let a = Mat::from_ints(&f3, &[vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]]).unwrap();
        let ker = a.kernel_basis();
        assert_eq!(ker.len() + a.rank(), 4);
        for v in ker {
            assert!(a.apply(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn wedge_examples() {
        let f7 = field(7, 1).unwrap();
        let w = Mat::diag(&f7, &[2, 3]).wedge_square();
        assert_eq!(w.data(), &[6]);
        assert!(Mat::identity(&f7, 4).wedge_square().is_identity());
        let a = Mat::from_ints(&f7, &[vec![1, 2], vec![3, 5]]).unwrap();
        assert_eq!(a.wedge_square().data(), &[a.det()]);
    }

    #[test]
    fn contragredient_examples() {
        let f5 = field(5, 1).unwrap();
        assert_eq!(Mat::diag(&f5, &[2, 1]).contragredient().unwrap(), Mat::diag(&f5, &[3, 1]));
        let f3 = field(3, 1).unwrap();
        let u = Mat::from_ints(&f3, &[vec![1, 1], vec![0, 1]]).unwrap();
        let expected = Mat::from_ints(&f3, &[vec![1, 0], vec![2, 1]]).unwrap();
        assert_eq!(u.contragredient().unwrap(), expected);
        let swap = Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.contragredient().unwrap(), swap);
        assert!(matches!(Mat::zero(&f3, 2, 2).contragredient(), Err(Error::Singular)));
    }

    #[test]
    fn extension_field_arithmetic() {
        let f9 = field(3, 2).unwrap();
        let z = f9.primitive_element();
        let m = Mat::scalar(&f9, 2, z);
        assert_eq!(m.order(100), Some(8));
        assert_eq!(m.det(), f9.mul(z, z));
    }
}
