//! `H²(P, F_p)^E = V^E ⊕ (Λ²V)^E` with `V = Ω₁(P)^*`, and Solomon's identity
//! `(Λ²V)^W = Λ²(V^W)` for reflection groups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{Mat, MatGroup};
use crate::reflect::ReflectionAnalysis;

/// Groups up to this order also get the averaging-projector cross-check.
pub const PROJECTOR_CHECK_LIMIT: u64 = 10_000;

pub fn dual_module(e: &MatGroup) -> Result<MatGroup> {
    e.map_generators(e.dim(), Mat::contragredient)
}

pub fn wedge_module(e: &MatGroup) -> Result<MatGroup> {
    let d = e.dim();
    e.map_generators(d * d.saturating_sub(1) / 2, |g| Ok(g.wedge_square()))
}

/// Rank of `|G|⁻¹ Σ g`; equals the fixed dimension when `p ∤ |G|`.
pub fn projector_rank(g: &MatGroup) -> Result<usize> {
    let f = g.field();
    let order = g.order()?;
    let inv = f
        .inv(f.from_int((order % f.p()) as i64))
        .ok_or_else(|| Error::Precondition("p divides the group order".into()))?;
    let mut sum = Mat::zero(f, g.dim(), g.dim());
    for x in g.elements()? {
        sum = sum.add(x);
    }
    Ok(sum.scale(inv).rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierRank {
    pub p: u64,
    /// `dim V^E` on the dual module.
    pub dim_v_e: usize,
    /// `dim (Λ²V)^E`.
    pub dim_wedge_e: usize,
    pub total: usize,
    /// `dim Ω₁(P)^E` on the natural module.
    pub natural_fixed_dim: usize,
    /// `None` when `|E|` exceeds the projector limit.
    pub projector_agrees: Option<bool>,
}

/// Rank of the `p`-part of the multiplier through the stable-element formula.
pub fn multiplier_p_part_rank(e: &MatGroup) -> Result<MultiplierRank> {
    let f = e.field();
    let p = f.p();
    if f.degree() != 1 {
        return Err(Error::Precondition("E must act over the prime field".into()));
    }
    if p == 2 {
        return Err(Error::Precondition("multiplier formula requires p > 2".into()));
    }
    let order = e.order()?;
    if order % p == 0 {
        return Err(Error::Precondition(format!("{p} divides |E| = {order}")));
    }
    let dual = dual_module(e)?;
    let wedge = wedge_module(&dual)?;
    let dim_v_e = dual.fixed_space().dim();
    let dim_wedge_e = wedge.fixed_space().dim();
    let natural_fixed_dim = e.fixed_space().dim();
    let projector_agrees = if order <= PROJECTOR_CHECK_LIMIT {
        Some(
            projector_rank(&dual)? == dim_v_e
                && projector_rank(&wedge)? == dim_wedge_e
                && projector_rank(e)? == natural_fixed_dim,
        )
    } else {
        None
    };
    Ok(MultiplierRank {
        p,
        dim_v_e,
        dim_wedge_e,
        total: dim_v_e + dim_wedge_e,
        natural_fixed_dim,
        projector_agrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolomonCheck {
    pub wedge_invariants: usize,
    pub fixed_dim: usize,
    pub holds: bool,
}

/// Compares `dim (Λ²V)^W` with `f(f−1)/2`, `f = dim V^W`, on the dual module.
pub fn solomon_check(w: &MatGroup) -> Result<SolomonCheck> {
    let dual = dual_module(w)?;
    let f = dual.fixed_space().dim();
    let wedge_invariants = wedge_module(&dual)?.fixed_space().dim();
    Ok(SolomonCheck {
        wedge_invariants,
        fixed_dim: f,
        holds: wedge_invariants == f * f.saturating_sub(1) / 2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub p: u64,
    pub dim_v_e: usize,
    pub dim_wedge_e: usize,
    pub total: usize,
    pub fixed_w_dim: usize,
    /// `dim (Ω₁(P)^*)^W`; equals `fixed_w_dim` for p′-groups.
    pub dual_fixed_w_dim: usize,
    pub projector_agrees: Option<bool>,
    /// `total > 0 ⇒ fixed_w_dim > 0`.
    pub consistent: bool,
}

/// The multiplier rank of `E` against the fixed space of `W ≤ E` over `F_p`.
pub fn obstruction_consistency(e: &MatGroup, analysis: &ReflectionAnalysis) -> Result<ObstructionReport> {
    if analysis.w.field().degree() != 1 || analysis.w.dim() != e.dim() {
        return Err(Error::Precondition("W must be computed over F_p on Ω₁(P)".into()));
    }
    let rank = multiplier_p_part_rank(e)?;
    let dual_fixed_w_dim = dual_module(&analysis.w)?.fixed_space().dim();
    Ok(ObstructionReport {
        p: rank.p,
        dim_v_e: rank.dim_v_e,
        dim_wedge_e: rank.dim_wedge_e,
        total: rank.total,
        fixed_w_dim: analysis.fixed_dim,
        dual_fixed_w_dim,
        projector_agrees: rank.projector_agrees,
        consistent: rank.total == 0 || analysis.fixed_dim > 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffmat::field;
    use crate::reflect::reflection_subgroup;

    #[test]
    fn dual_of_diagonal() {
        let f5 = field(5, 1).unwrap();
        let e = MatGroup::new(&f5, 2, vec![Mat::diag(&f5, &[2, 1])]).unwrap();
        let d = dual_module(&e).unwrap();
        assert_eq!(d.generators(), &[Mat::diag(&f5, &[3, 1])]);
        assert_eq!(dual_module(&d).unwrap().generators(), e.generators());
    }

    #[test]
    fn gl2_5_has_no_multiplier() {
        // GL₂(5) itself is rejected (5 divides its order); its largest
        // monomial p′-subgroup has no invariants on V or Λ²V.
        let f5 = field(5, 1).unwrap();
        let transvection = Mat::from_ints(&f5, &[vec![1, 1], vec![0, 1]]).unwrap();
        let lower = transvection.transpose();
        let gl = MatGroup::new(&f5, 2, vec![Mat::diag(&f5, &[2, 1]), transvection, lower]).unwrap();
        assert_eq!(gl.order().unwrap(), 480);
        assert!(multiplier_p_part_rank(&gl).is_err());
        // The invariant spaces themselves vanish: exhaustive over all vectors.
        let dual = dual_module(&gl).unwrap();
        let fixed = (1..25u32)
            .map(|c| vec![c % 5, c / 5])
            .filter(|v| dual.elements().unwrap().iter().all(|g| g.apply(v) == *v))
            .count();
        assert_eq!(fixed, 0);
        assert!(gl.elements().unwrap().iter().any(|g| g.det() != 1));
        let mono = MatGroup::new(
            &f5,
            2,
            vec![Mat::diag(&f5, &[2, 1]), Mat::from_ints(&f5, &[vec![0, 1], vec![1, 0]]).unwrap()],
        )
        .unwrap();
        let r = multiplier_p_part_rank(&mono).unwrap();
        assert_eq!(r.total, 0);
        assert_eq!(r.projector_agrees, Some(true));
    }

    #[test]
    fn rejects_characteristic_two() {
        let f2 = field(2, 1).unwrap();
        let e = MatGroup::trivial(&f2, 2);
        assert!(matches!(multiplier_p_part_rank(&e), Err(Error::Precondition(_))));
    }

    #[test]
    fn solomon_examples() {
        let f5 = field(5, 1).unwrap();
        let t = solomon_check(&MatGroup::trivial(&f5, 3)).unwrap();
        assert_eq!((t.wedge_invariants, t.fixed_dim, t.holds), (3, 3, true));
        let w = MatGroup::new(&f5, 2, vec![Mat::diag(&f5, &[2, 1])]).unwrap();
        let s = solomon_check(&w).unwrap();
        assert_eq!((s.wedge_invariants, s.fixed_dim, s.holds), (0, 1, true));
        let f3 = field(3, 1).unwrap();
        let b2 = MatGroup::new(
            &f3,
            2,
            vec![Mat::diag(&f3, &[2, 1]), Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap()],
        )
        .unwrap();
        let s = solomon_check(&b2).unwrap();
        assert_eq!((s.wedge_invariants, s.fixed_dim, s.holds), (0, 0, true));
    }

    #[test]
    fn cyclic_four_in_gl2_3_is_obstructed() {
        // Z4 = ⟨[[0,-1],[1,0]]⟩ acting on F₃²: det = 1, so Λ²V is trivial.
        let f3 = field(3, 1).unwrap();
        let e = MatGroup::new(&f3, 2, vec![Mat::from_ints(&f3, &[vec![0, -1], vec![1, 0]]).unwrap()]).unwrap();
        let a = reflection_subgroup(&e).unwrap();
        let o = obstruction_consistency(&e, &a).unwrap();
        assert_eq!((o.dim_v_e, o.dim_wedge_e, o.total), (0, 1, 1));
        assert_eq!(o.fixed_w_dim, 2);
        assert!(o.consistent);
    }
}
