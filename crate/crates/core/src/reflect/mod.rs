//! Modular reflections, reflection subgroups, irreducibility and
//! identification of small reflection groups.

mod catalog;
mod search;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{closure, line_representatives, spin, FieldDesc, Mat, MatGroup, Subspace};

pub use catalog::{identify, monomial_model, Identification};
pub use search::{
    find_reflection_subgroup, gl2_reflections, FoundReflectionGroup, ReflectionPairSearch,
};

pub const DEFAULT_LINE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReflectionKind {
    /// Order prime to the characteristic: diagonalizable, `diag(ζ, 1, …, 1)`.
    Semisimple,
    /// Order divisible by the characteristic (a transvection). Satisfies the
    /// definition but cannot lie in a p′-group.
    Unipotent,
}

/// `Some(kind)` iff `rank(s − 1) = 1`.
pub fn classify_reflection(s: &Mat) -> Result<Option<ReflectionKind>> {
    if !s.is_square() {
        return Err(Error::Dimension("reflection test on a non-square matrix".into()));
    }
    if s.det() == 0 {
        return Err(Error::Singular);
    }
    if s.minus_identity().rank() != 1 {
        return Ok(None);
    }
    // A reflection is unipotent iff its determinant (the non-trivial
    // eigenvalue) is 1.
    Ok(Some(if s.det() == 1 {
        ReflectionKind::Unipotent
    } else {
        ReflectionKind::Semisimple
    }))
}

pub fn is_reflection(s: &Mat) -> Result<bool> {
    Ok(classify_reflection(s)?.is_some())
}

/// All reflections among the elements of `g`, in enumeration order.
pub fn reflections_of(g: &MatGroup) -> Result<Vec<Mat>> {
    let mut out = Vec::new();
    for x in g.elements()? {
        if is_reflection(x)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// Subgroup generated by the given reflections; generators are chosen
/// greedily so the closure is recomputed only when it grows.
pub fn reflection_closure(g: &MatGroup, reflections: &[Mat], cap: usize) -> Result<MatGroup> {
    let id = g.identity();
    let mut gens: Vec<Mat> = Vec::new();
    let mut current = indexmap::IndexSet::new();
    current.insert(id.clone());
    for r in reflections {
        if current.contains(r) {
            continue;
        }
        gens.push(r.clone());
        current = closure(&id, &gens, cap, |_| true)?.expect("unbounded closure completes");
    }
    MatGroup::from_elements(g.field(), g.dim(), gens, current)
}

/// Exhaustive irreducibility: the spin of every line is the whole space.
pub fn is_irreducible(g: &MatGroup, line_cap: u64) -> Result<bool> {
    let d = g.dim();
    if d == 0 {
        return Ok(false);
    }
    let q = g.field().order();
    let lines = (q.pow(d as u32) - 1) / (q - 1);
    if lines > line_cap {
        return Err(Error::LineCapExceeded { lines, cap: line_cap });
    }
    for v in line_representatives(g.field(), d) {
        if spin(g.field(), &v, g.generators()).dim() < d {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn fixed_space_of_group(g: &MatGroup) -> Subspace {
    g.fixed_space()
}

/// Basis-independent invariants used for identification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub order_histogram: BTreeMap<u64, u64>,
    pub reflections: u64,
    pub reflection_orders: BTreeMap<u64, u64>,
}

pub fn fingerprint(g: &MatGroup) -> Result<Fingerprint> {
    let order = g.order()?;
    let mut order_histogram = BTreeMap::new();
    let mut reflection_orders = BTreeMap::new();
    let mut reflections = 0;
    for x in g.elements()? {
        let o = x.order(order).expect("element of a finite group");
        *order_histogram.entry(o).or_insert(0) += 1;
        if is_reflection(x)? {
            reflections += 1;
            *reflection_orders.entry(o).or_insert(0) += 1;
        }
    }
    Ok(Fingerprint {
        order,
        order_histogram,
        reflections,
        reflection_orders,
    })
}

/// Reflection data of a group `N` over its field.
pub struct ReflectionAnalysis {
    pub field: FieldDesc,
    pub order_n: u64,
    pub reflections: Vec<Mat>,
    pub unipotent_reflections: usize,
    pub w: MatGroup,
    pub order_w: u64,
    pub irreducible: bool,
    pub fixed_dim: usize,
    pub fingerprint: Fingerprint,
    pub identification: Identification,
    pub index_n_over_w: u64,
    /// `e s e⁻¹` is a reflection for all `e ∈ N` and reflections `s`.
    pub conjugation_closed: bool,
}

pub fn reflection_subgroup(n: &MatGroup) -> Result<ReflectionAnalysis> {
    reflection_subgroup_with(n, DEFAULT_LINE_CAP)
}

pub fn reflection_subgroup_with(n: &MatGroup, line_cap: u64) -> Result<ReflectionAnalysis> {
    let order_n = n.order()?;
    let reflections = reflections_of(n)?;
    let mut unipotent_reflections = 0;
    for r in &reflections {
        if classify_reflection(r)? == Some(ReflectionKind::Unipotent) {
            unipotent_reflections += 1;
        }
    }
    let w = reflection_closure(n, &reflections, order_n as usize)?;
    let order_w = w.order()?;
    let refl_set: std::collections::HashSet<&Mat> = reflections.iter().collect();
    let mut conjugation_closed = true;
    'outer: for e in n.elements()? {
        let e_inv = e.inverse()?;
        for s in &reflections {
            if !refl_set.contains(&s.conjugate(e, &e_inv)) {
                conjugation_closed = false;
                break 'outer;
            }
        }
    }
    let irreducible = is_irreducible(&w, line_cap)?;
    let fixed_dim = w.fixed_space().dim();
    let fp = fingerprint(&w)?;
    let identification = identify(&w, &fp)?;
    Ok(ReflectionAnalysis {
        field: n.field().desc(),
        order_n,
        reflections,
        unipotent_reflections,
        w,
        order_w,
        irreducible,
        fixed_dim,
        fingerprint: fp,
        identification,
        index_n_over_w: order_n / order_w,
        conjugation_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffmat::field;

    #[test]
    fn reflection_predicate() {
        let f5 = field(5, 1).unwrap();
        assert!(is_reflection(&Mat::diag(&f5, &[2, 1])).unwrap());
        assert!(!is_reflection(&Mat::identity(&f5, 2)).unwrap());
        assert!(!is_reflection(&Mat::diag(&f5, &[2, 2])).unwrap());
        let f3 = field(3, 1).unwrap();
        let t = Mat::from_ints(&f3, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(classify_reflection(&t).unwrap(), Some(ReflectionKind::Unipotent));
        assert!(matches!(classify_reflection(&Mat::zero(&f3, 2, 2)), Err(Error::Singular)));
    }

    #[test]
    fn no_reflections_in_cyclic_three() {
        let f2 = field(2, 1).unwrap();
        let c = Mat::from_ints(&f2, &[vec![0, 1], vec![1, 1]]).unwrap();
        let e = MatGroup::new(&f2, 2, vec![c]).unwrap();
        let a = reflection_subgroup(&e).unwrap();
        assert!(a.reflections.is_empty());
        assert_eq!(a.order_w, 1);
        assert_eq!(a.fixed_dim, 2);
        assert!(!a.irreducible);
    }

    #[test]
    fn monomial_group_is_its_own_reflection_group() {
        let f5 = field(5, 1).unwrap();
        let e = MatGroup::new(
            &f5,
            2,
            vec![
                Mat::diag(&f5, &[2, 1]),
                Mat::from_ints(&f5, &[vec![0, 1], vec![1, 0]]).unwrap(),
            ],
        )
        .unwrap();
        let a = reflection_subgroup(&e).unwrap();
        assert_eq!(a.order_w, 32);
        assert_eq!(a.index_n_over_w, 1);
        assert!(a.irreducible);
        assert_eq!(a.fixed_dim, 0);
        assert!(a.conjugation_closed);
        assert_eq!(a.identification, Identification::Wreath { p: 5, r: 2 });
    }

    #[test]
    fn irreducibility_examples() {
        let f5 = field(5, 1).unwrap();
        let diag = MatGroup::new(&f5, 2, vec![Mat::diag(&f5, &[2, 1])]).unwrap();
        assert!(!is_irreducible(&diag, DEFAULT_LINE_CAP).unwrap());
        assert!(!is_irreducible(&MatGroup::trivial(&f5, 2), DEFAULT_LINE_CAP).unwrap());
        let f3 = field(3, 1).unwrap();
        let b2 = MatGroup::new(
            &f3,
            2,
            vec![
                Mat::diag(&f3, &[2, 1]),
                Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_irreducible(&b2, DEFAULT_LINE_CAP).unwrap());
        assert_eq!(spin(&f3, &[1, 1], b2.generators()).dim(), 2);
    }

    #[test]
    fn irreducibility_matches_subspace_enumeration() {
        // Oracle: a group is reducible iff some proper nonzero subspace is
        // invariant; in dimension 3 those are lines and planes (planes are
        // kernels of nonzero functionals).
        let f3 = field(3, 1).unwrap();
        let candidates = [
            vec![Mat::from_ints(&f3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap()],
            vec![Mat::diag(&f3, &[2, 1, 1]), Mat::from_ints(&f3, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap()],
            vec![
                Mat::diag(&f3, &[2, 1, 1]),
                Mat::from_ints(&f3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap(),
            ],
        ];
        for gens in candidates {
            let g = MatGroup::new(&f3, 3, gens).unwrap();
            let lines: Vec<Vec<u32>> = line_representatives(&f3, 3).collect();
            let mut reducible = false;
            for v in &lines {
                let s = Subspace::from_vectors(&f3, 3, std::slice::from_ref(v));
                if g.generators().iter().all(|x| s.is_invariant(x)) {
                    reducible = true;
                }
                let plane = Mat::from_rows(&f3, std::slice::from_ref(v)).unwrap().kernel();
                if g.generators().iter().all(|x| plane.is_invariant(x)) {
                    reducible = true;
                }
            }
            assert_eq!(is_irreducible(&g, DEFAULT_LINE_CAP).unwrap(), !reducible);
        }
    }
}
