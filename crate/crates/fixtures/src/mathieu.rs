//! Mathieu groups from classical generators, the extended binary Golay code,
//! the Steiner system `S(3,6,22)` and the Higman–Sims graph.

use anyhow::{ensure, Result};
use reflaut::perm::{PermGroup, Permutation};

use crate::graph::Graph;

pub const M11_ORDER: u64 = 7_920;
pub const M23_ORDER: u64 = 10_200_960;
pub const HS2_ORDER: u64 = 88_704_000;

pub fn m11() -> Result<PermGroup> {
    let gens = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
        .iter()
        .map(|s| Permutation::parse(s, 11))
        .collect::<reflaut::Result<Vec<_>>>()?;
    Ok(PermGroup::new(11, gens)?)
}

pub fn m23() -> Result<PermGroup> {
    let gens = [
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
    ]
    .iter()
    .map(|s| Permutation::parse(s, 23))
    .collect::<reflaut::Result<Vec<_>>>()?;
    Ok(PermGroup::new(23, gens)?)
}

const INFINITY: usize = 23;

/// The extended quadratic-residue code of length 24: coordinates `0..23` are
/// `F₂₃`, coordinate 23 is `∞`. Codewords are bitmasks.
pub fn golay_code() -> Result<Vec<u32>> {
    let residues: std::collections::BTreeSet<usize> = (1..23).map(|x| x * x % 23).collect();
    let mut basis: Vec<u32> = Vec::new();
    for shift in 0..23 {
        let w = residues.iter().chain(&[0]).fold(0u32, |w, &r| w | 1 << ((r + shift) % 23));
        insert_reduced(&mut basis, w);
    }
    insert_reduced(&mut basis, (1 << 24) - 1);
    ensure!(basis.len() == 12, "code dimension is {}", basis.len());
    let mut words = vec![0u32];
    for b in &basis {
        let more: Vec<u32> = words.iter().map(|w| w ^ b).collect();
        words.extend(more);
    }
    let octads = words.iter().filter(|w| w.count_ones() == 8).count();
    ensure!(octads == 759, "{octads} octads");
    ensure!(words.iter().all(|w| *w == 0 || w.count_ones() >= 8), "minimum weight below 8");
    Ok(words)
}

fn insert_reduced(basis: &mut Vec<u32>, mut w: u32) {
    for b in basis.iter() {
        let lead = 31 - b.leading_zeros();
        if w >> lead & 1 == 1 {
            w ^= b;
        }
    }
    if w != 0 {
        basis.push(w);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
}

/// Blocks of `S(3,6,22)` on points `0..22`: octads through `22` and `∞`
/// with those two points removed.
pub fn steiner_hexads() -> Result<Vec<u32>> {
    let fixed = (1u32 << 22) | (1 << INFINITY);
    let hexads: Vec<u32> = golay_code()?
        .into_iter()
        .filter(|w| w.count_ones() == 8 && w & fixed == fixed)
        .map(|w| w & !fixed)
        .collect();
    ensure!(hexads.len() == 77, "{} hexads", hexads.len());
    Ok(hexads)
}

/// Vertex `0` is `∞`, vertices `1..=22` the points, the rest the hexads;
/// `∞` sees the points, a point sees the hexads through it, and two hexads
/// are adjacent when disjoint.
pub fn higman_sims_graph() -> Result<Graph> {
    let hexads = steiner_hexads()?;
    let mut g = Graph::new(100);
    for x in 0..22 {
        g.add_edge(0, 1 + x);
        for (i, h) in hexads.iter().enumerate() {
            if h >> x & 1 == 1 {
                g.add_edge(1 + x, 23 + i);
            }
        }
    }
    for (i, a) in hexads.iter().enumerate() {
        for (j, b) in hexads.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                g.add_edge(23 + i, 23 + j);
            }
        }
    }
    ensure!(g.srg_parameters() == Some((22, 0, 6)), "not SRG(100,22,0,6)");
    Ok(g)
}
