//! Finite fields, dense matrices, subspaces and matrix groups.

pub mod field;
pub mod group;
pub mod mat;
pub mod poly;
pub mod subspace;

pub use field::{field, Field, FieldDesc, FieldRef, MAX_FIELD_ORDER};
pub use group::{closure, MatGroup, DEFAULT_ENUMERATION_CAP};
pub use mat::Mat;
pub use subspace::{spin, EchelonBuilder, Subspace};

/// All vectors of `K^d` spanning distinct lines: first nonzero entry is 1.
pub fn line_representatives(field: &FieldRef, d: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let q = field.order();
    let total = q.pow(d as u32);
    (1..total).filter_map(move |mut code| {
        let mut v = vec![0u32; d];
        for x in v.iter_mut() {
            *x = (code % q) as u32;
            code /= q;
        }
        (v.iter().find(|&&x| x != 0) == Some(&1)).then_some(v)
    })
}
