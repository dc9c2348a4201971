use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use indexmap::IndexSet;

use super::field::FieldRef;
use super::mat::Mat;
use super::subspace::Subspace;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// Finite matrix group given by generators; elements are enumerated lazily by
/// breadth-first closure and cached.
pub struct MatGroup {
    field: FieldRef,
    dim: usize,
    gens: Vec<Mat>,
    cap: usize,
    elements: OnceLock<IndexSet<Mat>>,
}

impl Clone for MatGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        MatGroup {
            field: Arc::clone(&self.field),
            dim: self.dim,
            gens: self.gens.clone(),
            cap: self.cap,
            elements,
        }
    }
}

impl std::fmt::Debug for MatGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MatGroup")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("gens", &self.gens)
            .finish()
    }
}

impl MatGroup {
    /// Generators must be invertible `dim × dim` matrices; identities and
    /// duplicates are dropped.
    pub fn new(field: &FieldRef, dim: usize, gens: Vec<Mat>) -> Result<MatGroup> {
        let mut kept: Vec<Mat> = Vec::new();
        for g in gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Dimension(format!(
                    "generator is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if g.field().as_ref() != field.as_ref() {
                return Err(Error::Dimension("generator over a different field".into()));
            }
            if g.det() == 0 {
                return Err(Error::Singular);
            }
            if !g.is_identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(MatGroup {
            field: Arc::clone(field),
            dim,
            gens: kept,
            cap: DEFAULT_ENUMERATION_CAP,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(field: &FieldRef, dim: usize) -> MatGroup {
        MatGroup::new(field, dim, Vec::new()).expect("no generators")
    }

    /// Group with a known element set (must be closed under products).
    pub fn from_elements(field: &FieldRef, dim: usize, gens: Vec<Mat>, elements: IndexSet<Mat>) -> Result<MatGroup> {
        let g = MatGroup::new(field, dim, gens)?;
        let _ = g.elements.set(elements);
        Ok(g)
    }

    /// Subgroup consisting of exactly `elements` (which must form a group),
    /// with generators picked greedily.
    pub fn subgroup_from_elements(field: &FieldRef, dim: usize, elements: &[Mat]) -> Result<MatGroup> {
        let id = Mat::identity(field, dim);
        let mut gens: Vec<Mat> = Vec::new();
        let mut current = IndexSet::new();
        current.insert(id.clone());
        for x in elements {
            if current.contains(x) {
                continue;
            }
            gens.push(x.clone());
            current = closure(&id, &gens, elements.len().max(1), |_| true)?
                .expect("unbounded closure completes");
        }
        if current.len() != elements.len().max(1) {
            return Err(Error::Precondition("element list is not a subgroup".into()));
        }
        MatGroup::from_elements(field, dim, gens, current)
    }

    pub fn with_cap(mut self, cap: usize) -> MatGroup {
        self.cap = cap;
        self
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Mat] {
        &self.gens
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(&self.field, self.dim)
    }

    pub fn elements(&self) -> Result<&IndexSet<Mat>> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = closure(&self.identity(), &self.gens, self.cap, |_| true)?
            .expect("unbounded closure always completes");
        let _ = self.elements.set(e);
        Ok(self.elements.get().expect("just set"))
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.elements()?.len() as u64)
    }

    pub fn contains(&self, m: &Mat) -> Result<bool> {
        Ok(self.elements()?.contains(m))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Histogram `order → count` over all elements.
    pub fn order_histogram(&self) -> Result<BTreeMap<u64, u64>> {
        let els = self.elements()?;
        let limit = els.len() as u64;
        let mut h = BTreeMap::new();
        for x in els {
            let o = x.order(limit).expect("element of a finite group");
            *h.entry(o).or_insert(0) += 1;
        }
        Ok(h)
    }

    /// Common fixed space of the generators.
    pub fn fixed_space(&self) -> Subspace {
        if self.gens.is_empty() {
            return Subspace::full(&self.field, self.dim);
        }
        let stacked: Vec<Vec<u32>> = self
            .gens
            .iter()
            .flat_map(|g| {
                let d = g.minus_identity();
                (0..d.rows()).map(move |i| d.row(i).to_vec()).collect::<Vec<_>>()
            })
            .collect();
        Mat::from_rows(&self.field, &stacked)
            .expect("rectangular")
            .kernel()
    }

    /// `B G B^-1`.
    pub fn conjugate(&self, b: &Mat) -> Result<MatGroup> {
        let b_inv = b.inverse()?;
        let gens = self.gens.iter().map(|g| g.conjugate(b, &b_inv)).collect();
        MatGroup::new(&self.field, self.dim, gens).map(|g| g.with_cap(self.cap))
    }

    /// Image of every generator under `f`, e.g. contragredient or wedge.
    pub fn map_generators(&self, dim: usize, f: impl Fn(&Mat) -> Result<Mat>) -> Result<MatGroup> {
        let gens = self.gens.iter().map(f).collect::<Result<Vec<_>>>()?;
        MatGroup::new(&self.field, dim, gens).map(|g| g.with_cap(self.cap))
    }
}

/// Breadth-first closure of `start` under right multiplication by `gens`.
/// Returns `Ok(None)` as soon as `keep_going` rejects the partial set, and a
/// capped-enumeration error beyond `cap` elements.
pub fn closure(
    start: &Mat,
    gens: &[Mat],
    cap: usize,
    mut keep_going: impl FnMut(usize) -> bool,
) -> Result<Option<IndexSet<Mat>>> {
    let mut set = IndexSet::new();
    set.insert(start.clone());
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let next = set[i].mul(g);
            let (idx, fresh) = set.insert_full(next);
            if fresh {
                if set.len() > cap {
                    return Err(Error::EnumerationCapExceeded { cap });
                }
                if !keep_going(set.len()) {
                    return Ok(None);
                }
                queue.push_back(idx);
            }
        }
    }
    Ok(Some(set))
}

#[cfg(test)]
mod tests {
    use super::super::field::field;
    use super::*;

    #[test]
    fn monomial_wreath_order() {
        let f5 = field(5, 1).unwrap();
        let gens = vec![
            Mat::diag(&f5, &[2, 1]),
            Mat::diag(&f5, &[1, 2]),
            Mat::from_ints(&f5, &[vec![0, 1], vec![1, 0]]).unwrap(),
        ];
        let g = MatGroup::new(&f5, 2, gens).unwrap();
        assert_eq!(g.order().unwrap(), 32);
        assert_eq!(MatGroup::trivial(&f5, 3).order().unwrap(), 1);
    }

    #[test]
    fn dihedral_eight_in_gl2_3() {
        let f3 = field(3, 1).unwrap();
        let s1 = Mat::diag(&f3, &[2, 1]);
        let s2 = Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap();
        let g = MatGroup::new(&f3, 2, vec![s1, s2]).unwrap();
        assert_eq!(g.order().unwrap(), 8);
        let h = g.order_histogram().unwrap();
        assert_eq!(h.get(&2), Some(&5));
        assert_eq!(h.get(&4), Some(&2));
    }

    #[test]
    fn cap_is_enforced() {
        let f7 = field(7, 1).unwrap();
        let g = MatGroup::new(&f7, 1, vec![Mat::diag(&f7, &[3])]).unwrap().with_cap(4);
        assert!(matches!(g.order(), Err(Error::EnumerationCapExceeded { cap: 4 })));
    }

    #[test]
    fn rejects_singular_generators() {
        let f7 = field(7, 1).unwrap();
        let res = MatGroup::new(&f7, 2, vec![Mat::zero(&f7, 2, 2)]);
        assert!(matches!(res, Err(Error::Singular)));
    }
}
