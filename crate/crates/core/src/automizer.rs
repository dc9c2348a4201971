//! Matrix image of `N_G(P)/C_G(P)` acting on `Ω₁(P)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ffmat::{field, FieldRef, Mat, MatGroup};
use crate::groupalgo::AbelianPStructure;
use crate::perm::{PermGroup, Permutation};

/// Largest `Ω₁(P)` indexed exhaustively.
const MAX_OMEGA1: u64 = 1 << 16;

/// Exhaustive coordinate table of `Ω₁(P)` in a fixed basis.
pub struct Omega1Index {
    p: u64,
    basis: Vec<Permutation>,
    coords: HashMap<Permutation, Vec<u32>>,
}

impl Omega1Index {
    pub fn new(p: u64, basis: Vec<Permutation>) -> Result<Self> {
        let k = basis.len() as u32;
        let size = p.checked_pow(k).filter(|&s| s <= MAX_OMEGA1).ok_or_else(|| {
            Error::Automizer(format!("Ω₁ of order {p}^{k} is too large to index"))
        })?;
        let degree = basis.first().map_or(0, |b| b.degree());
        let mut coords = HashMap::with_capacity(size as usize);
        coords.insert(Permutation::identity(degree), vec![0u32; k as usize]);
        for (i, b) in basis.iter().enumerate() {
            let existing: Vec<(Permutation, Vec<u32>)> = coords.iter().map(|(x, c)| (x.clone(), c.clone())).collect();
            let mut power = b.clone();
            for e in 1..p {
                for (x, c) in &existing {
                    let mut c2 = c.clone();
                    c2[i] = e as u32;
                    coords.insert(x.compose(&power), c2);
                }
                power = power.compose(b);
            }
        }
        if coords.len() as u64 != size {
            return Err(Error::Automizer("Ω₁ basis is not independent".into()));
        }
        Ok(Omega1Index { p, basis, coords })
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coordinates(&self, x: &Permutation) -> Option<&[u32]> {
        self.coords.get(x).map(|v| v.as_slice())
    }

    /// Matrix of `x ↦ n x n⁻¹`; columns are images of basis vectors, so
    /// `n ↦ M(n)` is a homomorphism for the product `a·b` = "a then b".
    pub fn conjugation_matrix(&self, fp: &FieldRef, n: &Permutation) -> Result<Mat> {
        let n_inv = n.inverse();
        let cols = self
            .basis
            .iter()
            .map(|b| {
                let img = n.compose(b).compose(&n_inv);
                self.coordinates(&img)
                    .map(|c| c.to_vec())
                    .ok_or_else(|| Error::Automizer("element does not normalize Ω₁(P)".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Mat::from_columns(fp, self.rank(), &cols)
    }
}

/// Basis of `Ω₁(P)` from the decomposition: `g_i^(p^(e_i - 1))`.
pub fn omega1_basis(s: &AbelianPStructure) -> Vec<Permutation> {
    s.omega1_generators()
}

pub struct AutomizerAction {
    pub structure: AbelianPStructure,
    pub basis: Vec<Permutation>,
    pub index: Omega1Index,
    /// `E` as a matrix group over `F_p` of dimension `rank Ω₁(P)`.
    pub e: MatGroup,
    /// Normalizer elements whose images are the generators of `e`, in order.
    pub lift: Vec<(Mat, Permutation)>,
    pub order_e: u64,
}

/// Builds `E` from generators of `N_G(P)` and checks `|E| = |N|/|C|` and
/// `p ∤ |E|`.
pub fn automizer_action(
    structure: &AbelianPStructure,
    normalizer: &PermGroup,
    centralizer: &PermGroup,
) -> Result<AutomizerAction> {
    let p = structure.p;
    let fp = field(p, 1)?;
    let basis = omega1_basis(structure);
    let index = Omega1Index::new(p, basis.clone())?;
    let mut lift: Vec<(Mat, Permutation)> = Vec::new();
    for n in normalizer.generators() {
        let m = index.conjugation_matrix(&fp, n)?;
        if m.is_identity() || lift.iter().any(|(x, _)| *x == m) {
            continue;
        }
        lift.push((m, n.clone()));
    }
    let e = MatGroup::new(&fp, index.rank(), lift.iter().map(|(m, _)| m.clone()).collect())?;
    let order_e = e.order()?;
    let n_order = normalizer.order()?;
    let c_order = centralizer.order()?;
    if c_order == 0 || n_order % c_order != 0 || order_e != n_order / c_order {
        return Err(Error::Automizer(format!(
            "matrix image has order {order_e}, expected |N|/|C| = {n_order}/{c_order}"
        )));
    }
    if order_e % p == 0 {
        return Err(Error::Automizer(format!("{p} divides |E| = {order_e}")));
    }
    Ok(AutomizerAction {
        structure: structure.clone(),
        basis,
        index,
        e,
        lift,
        order_e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalgo::construct::{alternating, symmetric};
    use crate::groupalgo::{
        abelian_structure, centralizer_of_subgroup, normalizer_of_subgroup, sylow_subgroup,
        DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn automizer_of(g: &PermGroup, p: u64, seed: u64) -> AutomizerAction {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = sylow_subgroup(g, p, DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS, &mut rng).unwrap();
        let s = abelian_structure(&q, p).unwrap();
        let n = normalizer_of_subgroup(g, &q, DEFAULT_ORBIT_CAP, &mut rng).unwrap();
        let c = centralizer_of_subgroup(g, &q, DEFAULT_ORBIT_CAP, &mut rng).unwrap();
        automizer_action(&s, &n.group, &c).unwrap()
    }

    #[test]
    fn coordinates_in_basis() {
        let a = perm("(1,2,3,4,5)", 10);
        let b = perm("(6,7,8,9,10)", 10);
        let idx = Omega1Index::new(5, vec![a.clone(), b.clone()]).unwrap();
        let x = a.compose(&b).compose(&b);
        assert_eq!(idx.coordinates(&x), Some(&[1u32, 2][..]));
    }

    #[test]
    fn a4_automizer_is_cyclic_of_order_three() {
        let aut = automizer_of(&alternating(4), 2, 1);
        assert_eq!(aut.order_e, 3);
        assert_eq!(aut.e.dim(), 2);
    }

    #[test]
    fn s10_automizer_is_the_monomial_group() {
        let aut = automizer_of(&symmetric(10), 5, 2);
        assert_eq!(aut.order_e, 32);
        // Oracle: the monomial model F_5^× ≀ S_2, up to change of basis.
        let model = crate::reflect::monomial_model(&aut.e, 2).unwrap();
        assert_eq!(
            crate::reflect::fingerprint(&aut.e).unwrap(),
            crate::reflect::fingerprint(&model).unwrap()
        );
    }

    #[test]
    fn conjugation_matrices_are_multiplicative() {
        let g = symmetric(10);
        let aut = automizer_of(&g, 5, 3);
        let fp = field(5, 1).unwrap();
        let lifts: Vec<&Permutation> = aut.lift.iter().map(|(_, n)| n).collect();
        for a in &lifts {
            for b in &lifts {
                let lhs = aut.index.conjugation_matrix(&fp, &a.compose(b)).unwrap();
                let rhs = aut
                    .index
                    .conjugation_matrix(&fp, a)
                    .unwrap()
                    .mul(&aut.index.conjugation_matrix(&fp, b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
