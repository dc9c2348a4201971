//! Janko's first group as the 7-dimensional matrix group over `F₁₁`
//! generated by a cyclic permutation matrix and Janko's matrix of order 5,
//! acting on its orbit of 266 projective points.

use std::collections::HashMap;

use anyhow::{bail, ensure, Result};
use rand::Rng;
use reflaut::ffmat::{field, FieldRef, Mat};
use reflaut::perm::{PermGroup, Permutation};

pub const J1_ORDER: u64 = 175_560;
pub const J1_DEGREE: usize = 266;

const JANKO_Z: [[i64; 7]; 7] = [
    [-3, 2, -1, -1, -3, -1, -3],
    [-2, 1, 1, 3, 1, 3, 3],
    [-1, -1, -3, -1, -3, -3, 2],
    [-1, -3, -1, -3, -3, 2, -1],
    [-3, -1, -3, -3, 2, -1, -1],
    [1, 3, 3, -2, 1, 1, 3],
    [3, 3, -2, 1, 1, 3, 1],
];

pub fn janko_matrices() -> Result<(FieldRef, Vec<Mat>)> {
    let f = field(11, 1)?;
    let y_rows: Vec<Vec<i64>> = (0..7).map(|i| (0..7).map(|j| i64::from(j == (i + 1) % 7)).collect()).collect();
    let y = Mat::from_ints(&f, &y_rows)?;
    let z = Mat::from_ints(&f, &JANKO_Z.iter().map(|r| r.to_vec()).collect::<Vec<_>>())?;
    ensure!(y.order(100) == Some(7) && z.order(100) == Some(5), "generator orders are not 7 and 5");
    Ok((f, vec![y, z]))
}

fn normalize(f: &FieldRef, mut v: Vec<u32>) -> Vec<u32> {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = f.inv(lead).expect("nonzero");
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
    }
    v
}

/// Orbit of the projective point `v` under `gens`, or `None` beyond `cap`.
fn projective_orbit(f: &FieldRef, gens: &[Mat], v: Vec<u32>, cap: usize) -> Option<Vec<Vec<u32>>> {
    let start = normalize(f, v);
    let mut seen = HashMap::from([(start.clone(), 0usize)]);
    let mut orbit = vec![start];
    let mut i = 0;
    while i < orbit.len() {
        for g in gens {
            let w = normalize(f, g.apply(&orbit[i]));
            if !seen.contains_key(&w) {
                if orbit.len() == cap {
                    return None;
                }
                seen.insert(w.clone(), orbit.len());
                orbit.push(w);
            }
        }
        i += 1;
    }
    Some(orbit)
}

/// A faithful action on a projective orbit of at most `cap` points spanned by
/// an eigenvector of a random group element.
fn small_orbit_action<R: Rng + ?Sized>(f: &FieldRef, gens: &[Mat], cap: usize, rng: &mut R) -> Result<PermGroup> {
    let mut x = Mat::identity(f, 7);
    for _ in 0..200 {
        x = x.mul(&gens[rng.gen_range(0..gens.len())]);
        for lambda in 1..11u32 {
            for v in x.sub(&Mat::scalar(f, 7, lambda)).kernel_basis() {
                let Some(orbit) = projective_orbit(f, gens, v, cap) else {
                    continue;
                };
                let index: HashMap<&Vec<u32>, u32> = orbit.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
                let perms = gens
                    .iter()
                    .map(|g| Permutation::from_images(orbit.iter().map(|v| index[&normalize(f, g.apply(v))]).collect()))
                    .collect::<reflaut::Result<Vec<_>>>()?;
                return Ok(PermGroup::new(orbit.len(), perms)?);
            }
        }
    }
    bail!("no projective orbit of at most {cap} points found")
}

fn element_of_order<R: Rng + ?Sized>(g: &PermGroup, k: u64, rng: &mut R) -> Result<Permutation> {
    for _ in 0..1000 {
        let x = g.random_element(rng)?;
        if x.order() % k == 0 {
            return Ok(x.pow((x.order() / k) as i64));
        }
    }
    bail!("no element of order {k} found")
}

/// The action on the 266 cosets of a maximal `PSL₂(11)`: an element `u` of
/// order 11 and an involution `t` generate such a subgroup `H` whenever
/// `|⟨u, t⟩| = 660`, and the orbit of an `H`-orbit of points, as a set, has
/// stabilizer exactly `H`.
pub fn j1<R: Rng + ?Sized>(rng: &mut R) -> Result<PermGroup> {
    let (f, gens) = janko_matrices()?;
    let g = small_orbit_action(&f, &gens, 2_000, rng)?;
    ensure!(g.order()? == J1_ORDER, "matrix group has order {}", g.order()?);
    let u = element_of_order(&g, 11, rng)?;
    for _ in 0..2_000 {
        let t = element_of_order(&g, 2, rng)?;
        let h = PermGroup::new(g.degree(), vec![u.clone(), t])?;
        if h.order()? != 660 {
            continue;
        }
        let mut block = vec![0u32];
        let mut i = 0;
        while i < block.len() {
            for s in h.generators() {
                let y = s.apply(block[i]);
                if !block.contains(&y) {
                    block.push(y);
                }
            }
            i += 1;
        }
        block.sort_unstable();
        let mut blocks = vec![block.clone()];
        let mut index = HashMap::from([(block, 0u32)]);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
        let mut k = 0;
        while k < blocks.len() {
            for (s, imgs) in g.generators().iter().zip(images.iter_mut()) {
                let mut b: Vec<u32> = blocks[k].iter().map(|&x| s.apply(x)).collect();
                b.sort_unstable();
                let next = index.len() as u32;
                let j = *index.entry(b.clone()).or_insert_with(|| {
                    blocks.push(b);
                    next
                });
                imgs.push(j);
            }
            k += 1;
        }
        ensure!(blocks.len() == J1_DEGREE, "{} translates of the PSL2(11)-orbit", blocks.len());
        let perms = images.into_iter().map(Permutation::from_images).collect::<reflaut::Result<Vec<_>>>()?;
        return Ok(PermGroup::new(J1_DEGREE, perms)?);
    }
    bail!("no PSL2(11) subgroup found")
}
