//! Standard permutation group constructions.

use crate::perm::{PermGroup, Permutation};

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        let cycle: Vec<u32> = (0..n as u32).collect();
        gens.push(Permutation::from_cycles(n, &[cycle]).expect("valid cycle"));
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("valid cycle"));
    }
    PermGroup::new(n, gens).expect("consistent degree")
}

pub fn alternating(n: usize) -> PermGroup {
    let gens = (2..n as u32)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).expect("valid cycle"))
        .collect();
    PermGroup::new(n, gens).expect("consistent degree")
}

pub fn cyclic(n: usize) -> PermGroup {
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[(0..n as u32).collect()]).expect("valid cycle")]
    } else {
        Vec::new()
    };
    PermGroup::new(n, gens).expect("consistent degree")
}

fn shifted(g: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in g.images().iter().enumerate() {
        images[offset + i] = offset as u32 + x;
    }
    Permutation::from_images(images).expect("block embedding is a bijection")
}

/// `A × B` on the disjoint union of the point sets (A's points first).
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| shifted(g, 0, degree))
        .collect();
    gens.extend(b.generators().iter().map(|g| shifted(g, a.degree(), degree)));
    PermGroup::new(degree, gens).expect("consistent degree")
}

/// `A ≀ S_r` in its imprimitive action on `r` blocks of `deg(A)` points.
pub fn wreath_product(a: &PermGroup, r: usize) -> PermGroup {
    let m = a.degree();
    let degree = m * r;
    let mut gens = Vec::new();
    for block in 0..r {
        for g in a.generators() {
            gens.push(shifted(g, block * m, degree));
        }
    }
    let block_perm = |target: &dyn Fn(usize) -> usize| {
        let images: Vec<u32> = (0..degree)
            .map(|x| (target(x / m) * m + x % m) as u32)
            .collect();
        Permutation::from_images(images).expect("block permutation")
    };
    if r >= 2 {
        gens.push(block_perm(&|b| (b + 1) % r));
        gens.push(block_perm(&|b| match b {
            0 => 1,
            1 => 0,
            other => other,
        }));
    }
    PermGroup::new(degree, gens).expect("consistent degree")
}
