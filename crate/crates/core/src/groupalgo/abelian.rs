use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::is_power_of;
use crate::perm::{PermGroup, Permutation};

/// Largest abelian p-group decomposed by explicit element lists.
const MAX_ELEMENTS: u64 = 1 << 16;

/// Invariant-factor decomposition `P ≅ ∏ Z/p^{e_i}` of an abelian p-group.
#[derive(Clone, Debug)]
pub struct AbelianPStructure {
    pub p: u64,
    /// Nonincreasing exponents `e_1 ≥ … ≥ e_k`.
    pub exponents: Vec<u32>,
    /// `generators[i]` has order `p^{exponents[i]}`; together they form a
    /// direct decomposition.
    pub generators: Vec<Permutation>,
    /// `Ω₁(P)`, generated by `generators[i]^(p^(e_i - 1))`.
    pub omega1: PermGroup,
    pub group: PermGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub p: u64,
    pub exponents: Vec<u32>,
}

impl AbelianPStructure {
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .map(|&e| self.p.pow(e))
            .product()
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_homocyclic(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] == w[1])
    }

    pub fn omega1_generators(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .zip(&self.exponents)
            .map(|(g, &e)| g.pow(self.p.pow(e - 1) as i64))
            .collect()
    }

    pub fn invariants(&self) -> AbelianInvariants {
        AbelianInvariants {
            p: self.p,
            exponents: self.exponents.clone(),
        }
    }
}

/// Decomposes an abelian p-group into cyclic factors.
///
/// Greedy on quotient orders: at each step pick `a` whose image in `P/H` has
/// maximal order `p^t`, then correct it by an element of `H` so that `a` itself
/// has order `p^t`; `P = H × ⟨a⟩ × …` follows by induction.
pub fn abelian_structure(group: &PermGroup, p: u64) -> Result<AbelianPStructure> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let order = group.order()?;
    if !is_power_of(order, p) {
        return Err(Error::NotPGroup { p, order });
    }
    if order > MAX_ELEMENTS {
        return Err(Error::SubgroupTooLarge {
            order,
            limit: MAX_ELEMENTS,
        });
    }
    let degree = group.degree();
    let all = group.elements()?;
    let id = Permutation::identity(degree);

    let mut h_list = vec![id.clone()];
    let mut h_set: HashSet<Permutation> = h_list.iter().cloned().collect();
    let mut generators = Vec::new();
    let mut exponents = Vec::new();

    while (h_list.len() as u64) < order {
        let mut best: Option<(u32, &Permutation)> = None;
        for a in &all {
            if h_set.contains(a) {
                continue;
            }
            let mut t = 0u32;
            let mut x = a.clone();
            while !h_set.contains(&x) {
                x = x.pow(p as i64);
                t += 1;
            }
            if best.is_none_or(|(bt, _)| t > bt) {
                best = Some((t, a));
            }
        }
        let (t, a) = best.expect("H is a proper subgroup");
        let pt = p.pow(t) as i64;
        let corrected = h_list
            .iter()
            .map(|h| a.compose(h))
            .find(|c| c.pow(pt).is_identity())
            .expect("a direct factor complement element exists");
        let mut next = Vec::with_capacity(h_list.len() * pt as usize);
        let mut power = id.clone();
        for _ in 0..pt {
            for h in &h_list {
                next.push(h.compose(&power));
            }
            power = power.compose(&corrected);
        }
        h_set = next.iter().cloned().collect();
        h_list = next;
        generators.push(corrected);
        exponents.push(t);
    }

    let omega_gens: Vec<Permutation> = generators
        .iter()
        .zip(&exponents)
        .map(|(g, &e)| g.pow(p.pow(e - 1) as i64))
        .collect();
    let omega1 = PermGroup::new(degree, omega_gens)?;
    Ok(AbelianPStructure {
        p,
        exponents,
        generators,
        omega1,
        group: group.clone(),
    })
}
