use std::fmt;
use std::sync::Arc;

use super::field::{Field, FieldRef};
use super::mat::Mat;

/// Subspace of `K^n` stored as a reduced row-echelon basis; two subspaces are
/// equal iff their echelon bases are identical.
#[derive(Clone)]
pub struct Subspace {
    field: FieldRef,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(field: &FieldRef, ambient: usize) -> Subspace {
        Subspace {
            field: Arc::clone(field),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldRef, ambient: usize) -> Subspace {
        let vecs: Vec<Vec<u32>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| (i == j) as u32).collect())
            .collect();
        Subspace::from_vectors(field, ambient, &vecs)
    }

    pub fn from_vectors(field: &FieldRef, ambient: usize, vectors: &[Vec<u32>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Mat::from_rows(field, vectors).expect("vectors of ambient length");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field: Arc::clone(field),
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f: &Field = &self.field;
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut residue = v.to_vec();
        for (b, &c) in self.basis.iter().zip(&coords) {
            if c == 0 {
                continue;
            }
            for (r, &x) in residue.iter_mut().zip(b) {
                *r = f.sub(*r, f.mul(c, x));
            }
        }
        residue.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn image(&self, a: &Mat) -> Subspace {
        let imgs: Vec<Vec<u32>> = self.basis.iter().map(|b| a.apply(b)).collect();
        Subspace::from_vectors(&self.field, a.rows(), &imgs)
    }

    pub fn is_invariant(&self, a: &Mat) -> bool {
        self.basis.iter().all(|b| self.contains(&a.apply(b)))
    }

    /// Matrix of `a` restricted to this (invariant) subspace, in its echelon
    /// basis.
    pub fn restrict(&self, a: &Mat) -> Option<Mat> {
        let cols: Option<Vec<Vec<u32>>> = self.basis.iter().map(|b| self.coordinates(&a.apply(b))).collect();
        Some(Mat::from_columns(&self.field, self.dim(), &cols?).expect("square"))
    }
}

/// Incrementally grown semi-echelon basis: each stored row has a unit pivot
/// that is zero in every later row.
pub struct EchelonBuilder {
    field: FieldRef,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: &FieldRef) -> Self {
        EchelonBuilder {
            field: Arc::clone(field),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f: &Field = &self.field;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(a, r));
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[c]).expect("nonzero");
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    pub fn into_subspace(self, ambient: usize) -> Subspace {
        Subspace::from_vectors(&self.field, ambient, &self.rows)
    }
}

/// Smallest subspace containing `v` and invariant under every generator.
pub fn spin(field: &FieldRef, v: &[u32], gens: &[Mat]) -> Subspace {
    let n = v.len();
    let mut builder = EchelonBuilder::new(field);
    let mut queue = Vec::new();
    if builder.insert(v) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for g in gens {
            let img = g.apply(&w);
            if builder.insert(&img) {
                if builder.len() == n {
                    return Subspace::full(field, n);
                }
                queue.push(img);
            }
        }
    }
    builder.into_subspace(n)
}

#[cfg(test)]
mod tests {
    use super::super::field::field;
    use super::*;

    #[test]
    fn spin_examples() {
        let f3 = field(3, 1).unwrap();
        let id = Mat::identity(&f3, 2);
        assert_eq!(spin(&f3, &[1, 0], &[id]).dim(), 1);
        let swap = Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(spin(&f3, &[1, 0], std::slice::from_ref(&swap)).dim(), 2);
        assert_eq!(spin(&f3, &[1, 1], &[swap]).dim(), 1);
    }

    #[test]
    fn coordinates_and_restriction() {
        let f5 = field(5, 1).unwrap();
        let s = Subspace::from_vectors(&f5, 3, &[vec![1, 2, 0], vec![0, 0, 1]]);
        assert_eq!(s.coordinates(&[2, 4, 3]), Some(vec![2, 3]));
        assert!(!s.contains(&[0, 1, 0]));
        let a = Mat::diag(&f5, &[3, 3, 2]);
        assert!(s.is_invariant(&a));
        assert_eq!(s.restrict(&a).unwrap(), Mat::diag(&f5, &[3, 2]));
    }

    #[test]
    fn canonical_equality() {
        let f7 = field(7, 1).unwrap();
        let a = Subspace::from_vectors(&f7, 2, &[vec![1, 3]]);
        let b = Subspace::from_vectors(&f7, 2, &[vec![2, 6]]);
        assert_eq!(a, b);
    }
}
