//! `F_{p^m}`-structures on `Ω₁(P)` and the split `E = N ⋊ Γ`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{field, poly, FieldRef, Mat, MatGroup, Subspace};
use crate::numth::{divisors, gcd};
use crate::reflect::reflection_subgroup;

/// How to choose the field degree `m` among the valid structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KPolicy {
    /// Smallest `m` for which the reflection subgroup of `N` over `K` is
    /// irreducible; the largest valid `m` if there is none.
    Auto,
    /// Exactly this degree.
    Degree(u32),
    /// Largest valid degree.
    Maximal,
}

pub struct SemilinearDecomposition {
    pub m: u32,
    /// Generator of `F_p[S]^× ≅ K^×`, a matrix over `F_p`.
    pub s: Mat,
    pub min_poly: Vec<u32>,
    /// `N = C_E(S)`.
    pub n: MatGroup,
    /// `γ(e)` for each generator `e` of `E`: `e S e⁻¹ = S^(p^γ(e))`.
    pub gamma_of_generators: Vec<u32>,
    pub gamma_order: u64,
    /// Element `σ` of order `|Γ|` with `⟨γ(σ)⟩ = Γ`; `⟨σ⟩` complements `N`.
    pub section: Mat,
    /// Free `F_p[S]`-basis of `Ω₁(P)`.
    pub k_basis: Vec<Vec<u32>>,
    /// `F_p`-span of the free basis.
    pub v_sub: Subspace,
}

impl SemilinearDecomposition {
    pub fn dim_k(&self) -> usize {
        self.k_basis.len()
    }

    /// `γ(x)` with `x S x⁻¹ = S^(p^γ(x))`; `None` if `x` does not normalize
    /// `F_p[S]^×`.
    pub fn gamma(&self, x: &Mat) -> Result<Option<u32>> {
        Frobenius::new(&self.s, self.s.field().p(), self.m)?.gamma(x, &self.s)
    }
}

struct Frobenius {
    powers: Vec<Mat>,
}

impl Frobenius {
    /// `S^(p^j)` for `j < m`.
    fn new(s: &Mat, p: u64, m: u32) -> Result<Self> {
        let mut powers = vec![s.clone()];
        for _ in 1..m {
            let last = powers.last().expect("nonempty").clone();
            powers.push(last.pow(p as i64)?);
        }
        Ok(Frobenius { powers })
    }

    fn gamma(&self, e: &Mat, s: &Mat) -> Result<Option<u32>> {
        let image = e.mul(s).mul(&e.inverse()?);
        Ok(self.powers.iter().position(|x| *x == image).map(|j| j as u32))
    }
}

/// Free basis of an `F_p[S]`-module structure: greedy over the standard basis.
fn free_basis(s: &Mat, m: u32) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let d = s.rows();
    let f = s.field();
    let mut k_basis = Vec::new();
    let mut fp_basis: Vec<Vec<u32>> = Vec::new();
    for i in 0..d {
        let e: Vec<u32> = (0..d).map(|j| (i == j) as u32).collect();
        let span = Subspace::from_vectors(f, d, &fp_basis);
        if span.contains(&e) {
            continue;
        }
        let mut v = e.clone();
        for _ in 0..m {
            fp_basis.push(v.clone());
            v = s.apply(&v);
        }
        k_basis.push(e);
    }
    (k_basis, fp_basis)
}

/// Checks that `S` defines a `K`-structure normalized by `E` and splits `E`.
pub fn verify_k_structure(e: &MatGroup, s: &Mat) -> Result<SemilinearDecomposition> {
    let f = e.field();
    if f.degree() != 1 {
        return Err(Error::Semilinear("E must be given over a prime field".into()));
    }
    let p = f.p();
    let d = e.dim();
    let min_poly = s.minimal_polynomial();
    let m = (min_poly.len() - 1) as u32;
    if !poly::is_irreducible(&min_poly, p as u32) {
        return Err(Error::Semilinear("minimal polynomial of S is reducible".into()));
    }
    if !d.is_multiple_of(m as usize) {
        return Err(Error::Semilinear(format!("degree {m} does not divide dimension {d}")));
    }
    let expected_order = p.pow(m) - 1;
    if s.order(expected_order) != Some(expected_order) {
        return Err(Error::Semilinear(format!("S does not have order {expected_order}")));
    }
    let frob = Frobenius::new(s, p, m)?;
    let mut gamma_of_generators = Vec::new();
    for g in e.generators() {
        let j = frob
            .gamma(g, s)?
            .ok_or_else(|| Error::Semilinear("a generator conjugates S outside its Galois orbit".into()))?;
        gamma_of_generators.push(j);
    }
    let t = gamma_of_generators
        .iter()
        .fold(m as u64, |acc, &j| gcd(acc, j as u64));
    let gamma_order = m as u64 / t;

    let mut kernel = Vec::new();
    let mut section = None;
    for x in e.elements()? {
        let j = frob
            .gamma(x, s)?
            .ok_or_else(|| Error::Semilinear("an element conjugates S outside its Galois orbit".into()))?;
        if j == 0 {
            kernel.push(x.clone());
        } else if section.is_none()
            && gcd(j as u64, m as u64) == t
            && x.pow(gamma_order as i64)?.is_identity()
        {
            section = Some(x.clone());
        }
    }
    if gamma_order == 1 {
        section = Some(e.identity());
    }
    let section = section.ok_or_else(|| Error::Semilinear("E does not split over N".into()))?;
    let n = MatGroup::subgroup_from_elements(f, d, &kernel)?;
    if n.order()? * gamma_order != e.order()? {
        return Err(Error::Semilinear("|E| ≠ |N|·|Γ|".into()));
    }
    let (k_basis, _) = free_basis(s, m);
    let v_sub = Subspace::from_vectors(f, d, &k_basis);
    Ok(SemilinearDecomposition {
        m,
        s: s.clone(),
        min_poly,
        n,
        gamma_of_generators,
        gamma_order,
        section,
        k_basis,
        v_sub,
    })
}

/// Always-valid `m = 1` structure with `S = ω·I`.
pub fn prime_field_structure(e: &MatGroup) -> Result<SemilinearDecomposition> {
    let s = Mat::scalar(e.field(), e.dim(), e.field().primitive_element());
    verify_k_structure(e, &s)
}

/// Valid structures of degree `m`, with `S` scanned in element order.
pub fn structures_of_degree(e: &MatGroup, m: u32) -> Result<Vec<SemilinearDecomposition>> {
    if m == 1 {
        return Ok(vec![prime_field_structure(e)?]);
    }
    let p = e.field().p();
    let target = p.pow(m) - 1;
    let limit = e.order()?;
    let mut out = Vec::new();
    for c in e.elements()? {
        if c.order(limit) != Some(target) {
            continue;
        }
        if let Ok(dec) = verify_k_structure(e, c) {
            if dec.m == m {
                out.push(dec);
            }
        }
    }
    Ok(out)
}

pub struct KStructure {
    pub decomposition: SemilinearDecomposition,
    /// Number of valid choices of `S` at the chosen degree.
    pub candidates: usize,
}

fn candidate_degrees(e: &MatGroup) -> Vec<u32> {
    divisors(e.dim() as u64).into_iter().map(|m| m as u32).collect()
}

/// Largest `m` with a valid structure; ties broken by element order.
pub fn find_k_structure(e: &MatGroup) -> Result<KStructure> {
    choose_k_structure(e, KPolicy::Maximal)
}

pub fn choose_k_structure(e: &MatGroup, policy: KPolicy) -> Result<KStructure> {
    let pick = |m: u32| -> Result<Option<KStructure>> {
        let mut all = structures_of_degree(e, m)?;
        if all.is_empty() {
            return Ok(None);
        }
        let candidates = all.len();
        Ok(Some(KStructure {
            decomposition: all.swap_remove(0),
            candidates,
        }))
    };
    let mut degrees = candidate_degrees(e);
    match policy {
        KPolicy::Degree(m) => pick(m)?.ok_or_else(|| {
            Error::Semilinear(format!("no F_{{p^{m}}}-structure normalized by E"))
        }),
        KPolicy::Maximal => {
            degrees.reverse();
            for m in degrees {
                if let Some(k) = pick(m)? {
                    return Ok(k);
                }
            }
            unreachable!("m = 1 is always valid")
        }
        KPolicy::Auto => {
            let mut last = None;
            for m in degrees {
                if let Some(k) = pick(m)? {
                    let r = restrict_to_k(&k.decomposition)?;
                    if reflection_subgroup(&r.n_k)?.irreducible {
                        return Ok(k);
                    }
                    last = Some(k);
                }
            }
            Ok(last.expect("m = 1 is always valid"))
        }
    }
}

/// `N` rewritten as `K`-linear matrices in the free basis.
pub struct Restriction {
    pub field: FieldRef,
    /// Image of `S` in `K`: a root of its minimal polynomial.
    pub alpha: u32,
    pub n_k: MatGroup,
    /// Columns `S^k v_i` ordered by `i` then `k`.
    fp_basis: Mat,
    fp_basis_inv: Mat,
    /// Coordinates of each element of `K` in the basis `1, α, …, α^(m-1)`.
    alpha_coords: HashMap<u32, Vec<u32>>,
    m: usize,
    fp: FieldRef,
}

impl Restriction {
    /// `F_p`-matrix in the standard basis of a `K`-linear map.
    pub fn to_prime_field(&self, a: &Mat) -> Result<Mat> {
        let r = a.rows();
        let m = self.m;
        let k: &crate::ffmat::Field = &self.field;
        let mut cols = vec![vec![0u32; r * m]; r * m];
        for j in 0..r {
            for kk in 0..m {
                let col = &mut cols[j * m + kk];
                let alpha_k = k.pow(self.alpha, kk as i64);
                for i in 0..r {
                    let x = k.mul(a.get(i, j), alpha_k);
                    let coords = &self.alpha_coords[&x];
                    for (l, &c) in coords.iter().enumerate() {
                        col[i * m + l] = c;
                    }
                }
            }
        }
        let in_basis = Mat::from_columns(&self.fp, r * m, &cols)?;
        Ok(self.fp_basis.mul(&in_basis).mul(&self.fp_basis_inv))
    }

    /// `K`-matrix of an `F_p`-matrix commuting with `S`.
    pub fn to_k(&self, g: &Mat) -> Result<Mat> {
        let r = g.rows() / self.m;
        let m = self.m;
        let k: &crate::ffmat::Field = &self.field;
        let mut out = Mat::zero(&self.field, r, r);
        for j in 0..r {
            let w = g.apply(&self.fp_basis.col(j * m));
            let c = self.fp_basis_inv.apply(&w);
            for i in 0..r {
                let mut a = 0u32;
                for l in 0..m {
                    let coef = c[i * m + l];
                    if coef != 0 {
                        a = k.add(a, k.mul(coef, k.pow(self.alpha, l as i64)));
                    }
                }
                out.set(i, j, a);
            }
        }
        Ok(out)
    }
}

pub fn restrict_to_k(dec: &SemilinearDecomposition) -> Result<Restriction> {
    let fp = dec.s.field().clone();
    let p = fp.p();
    let m = dec.m;
    let kf = field(p, m)?;
    let alpha = kf
        .elements()
        .find(|&a| a != 0 && kf.eval_prime_poly(&dec.min_poly, a) == 0)
        .ok_or_else(|| Error::Semilinear("minimal polynomial has no root in K".into()))?;
    let mut alpha_coords = HashMap::new();
    let total = kf.order();
    for code in 0..total {
        let mut c = code;
        let mut coords = Vec::with_capacity(m as usize);
        let mut x = 0u32;
        for l in 0..m {
            let digit = (c % p) as u32;
            c /= p;
            coords.push(digit);
            if digit != 0 {
                x = kf.add(x, kf.mul(digit, kf.pow(alpha, l as i64)));
            }
        }
        alpha_coords.insert(x, coords);
    }
    if alpha_coords.len() as u64 != total {
        return Err(Error::Semilinear("powers of α do not span K".into()));
    }
    let (_, fp_vectors) = free_basis(&dec.s, m);
    let d = dec.s.rows();
    let fp_basis = Mat::from_columns(&fp, d, &fp_vectors)?;
    let fp_basis_inv = fp_basis.inverse()?;
    let mut r = Restriction {
        field: kf.clone(),
        alpha,
        n_k: MatGroup::trivial(&kf, d / m as usize),
        fp_basis,
        fp_basis_inv,
        alpha_coords,
        m: m as usize,
        fp,
    };
    let gens = dec
        .n
        .generators()
        .iter()
        .map(|g| r.to_k(g))
        .collect::<Result<Vec<_>>>()?;
    r.n_k = MatGroup::new(&kf, d / m as usize, gens)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl3_2_element(rows: &[Vec<i64>]) -> Mat {
        let f2 = field(2, 1).unwrap();
        Mat::from_ints(&f2, rows).unwrap()
    }

    /// `7:3 ≤ GL₃(2)`: companion matrix of `x³+x+1` and the Frobenius
    /// `x ↦ x²` in the basis `1, x, x²`.
    fn frobenius_group() -> MatGroup {
        let c = gl3_2_element(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 0]]);
        let frob = gl3_2_element(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]);
        let f2 = field(2, 1).unwrap();
        MatGroup::new(&f2, 3, vec![c, frob]).unwrap()
    }

    #[test]
    fn frobenius_group_has_order_21() {
        assert_eq!(frobenius_group().order().unwrap(), 21);
    }

    #[test]
    fn f8_structure() {
        let e = frobenius_group();
        let k = find_k_structure(&e).unwrap();
        let dec = &k.decomposition;
        assert_eq!(dec.m, 3);
        assert_eq!(dec.n.order().unwrap(), 7);
        assert_eq!(dec.gamma_order, 3);
        assert_eq!(dec.dim_k(), 1);
        let r = restrict_to_k(dec).unwrap();
        assert_eq!(r.n_k.order().unwrap(), 7);
        for g in dec.n.generators() {
            assert_eq!(&r.to_prime_field(&r.to_k(g).unwrap()).unwrap(), g);
        }
        let refl = reflection_subgroup(&r.n_k).unwrap();
        assert_eq!(refl.reflections.len(), 6);
        assert!(refl.irreducible);
        assert_eq!(choose_k_structure(&e, KPolicy::Auto).unwrap().decomposition.m, 3);
    }

    #[test]
    fn prime_field_structure_is_trivial_split() {
        let f5 = field(5, 1).unwrap();
        let e = MatGroup::new(
            &f5,
            2,
            vec![Mat::diag(&f5, &[2, 1]), Mat::from_ints(&f5, &[vec![0, 1], vec![1, 0]]).unwrap()],
        )
        .unwrap();
        let dec = prime_field_structure(&e).unwrap();
        assert_eq!(dec.m, 1);
        assert_eq!(dec.n.order().unwrap(), 32);
        assert_eq!(dec.gamma_order, 1);
        let r = restrict_to_k(&dec).unwrap();
        assert_eq!(r.n_k.order().unwrap(), 32);
    }

    #[test]
    fn semidihedral_sixteen_policies() {
        // Sylow 2-subgroup of GL₂(3) = ΓL₁(9): scalars of F₉ and Frobenius.
        let f3 = field(3, 1).unwrap();
        // Companion matrix of x²+2x+2, a primitive polynomial over F₃.
        let c = Mat::from_ints(&f3, &[vec![0, -2], vec![1, -2]]).unwrap();
        let frob = Mat::from_ints(&f3, &[vec![1, -2], vec![0, -1]]).unwrap();
        let e = MatGroup::new(&f3, 2, vec![c, frob]).unwrap();
        assert_eq!(e.order().unwrap(), 16);
        let max = find_k_structure(&e).unwrap();
        assert_eq!(max.decomposition.m, 2);
        assert_eq!(max.decomposition.gamma_order, 2);
        assert_eq!(max.decomposition.n.order().unwrap(), 8);
        let auto = choose_k_structure(&e, KPolicy::Auto).unwrap();
        assert_eq!(auto.decomposition.m, 1);
        assert_eq!(auto.decomposition.n.order().unwrap(), 16);
    }
}
