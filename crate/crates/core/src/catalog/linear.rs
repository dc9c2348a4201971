//! Projective linear and semilinear groups acting on the points of
//! `PG(d−1, q)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ffmat::{field, line_representatives, FieldRef, Mat};
use crate::numth::{gcd, is_prime, log_p};
use crate::perm::{PermGroup, Permutation};

pub const MAX_LINEAR_Q: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearFamily {
    Psl2,
    Pgl2,
    PSigmaL2,
    PGammaL2,
    Psl3,
}

impl fmt::Display for LinearFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinearFamily::Psl2 => "PSL2",
            LinearFamily::Pgl2 => "PGL2",
            LinearFamily::PSigmaL2 => "PSigmaL2",
            LinearFamily::PGammaL2 => "PGammaL2",
            LinearFamily::Psl3 => "PSL3",
        })
    }
}

impl LinearFamily {
    pub fn dimension(self) -> usize {
        match self {
            LinearFamily::Psl3 => 3,
            _ => 2,
        }
    }

    pub fn order(self, q: u64) -> u64 {
        let r = (2..=q).find(|&d| q.is_multiple_of(d) && is_prime(d)).expect("prime power");
        let n = log_p(q, r) as u64;
        let pgl2 = q * (q * q - 1);
        match self {
            LinearFamily::Psl2 => pgl2 / gcd(2, q - 1),
            LinearFamily::Pgl2 => pgl2,
            LinearFamily::PSigmaL2 => pgl2 / gcd(2, q - 1) * n,
            LinearFamily::PGammaL2 => pgl2 * n,
            LinearFamily::Psl3 => q.pow(3) * (q.pow(3) - 1) * (q * q - 1) / gcd(3, q - 1),
        }
    }
}

/// Points of `PG(d−1, q)` as normalized vectors (first nonzero entry 1).
pub struct ProjectiveSpace {
    field: FieldRef,
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl ProjectiveSpace {
    pub fn new(field: &FieldRef, d: usize) -> Self {
        let points: Vec<Vec<u32>> = line_representatives(field, d).collect();
        let index = points.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        ProjectiveSpace {
            field: field.clone(),
            points,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn normalize(&self, mut v: Vec<u32>) -> Vec<u32> {
        let f = &self.field;
        if let Some(&lead) = v.iter().find(|&&x| x != 0) {
            let inv = f.inv(lead).expect("nonzero");
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        v
    }

    /// Permutation of `v ↦ σ(g v)`, `σ` the Frobenius power `x ↦ x^(p^frob)`;
    /// `g` must be invertible.
    pub fn semilinear_permutation(&self, g: &Mat, frob: u32) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|v| {
                let w: Vec<u32> = g.apply(v).into_iter().map(|x| self.field.frobenius(x, frob)).collect();
                self.index[&self.normalize(w)]
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

fn sl_generators(f: &FieldRef, d: usize) -> Result<Vec<Mat>> {
    let w = f.primitive_element();
    let w_inv = f.inv(w).expect("nonzero");
    let mut gens = Vec::new();
    let mut t = Mat::identity(f, d);
    t.set(0, 1, 1);
    gens.push(t);
    for i in 0..d - 1 {
        let mut diag = vec![1u32; d];
        diag[i] = w;
        diag[i + 1] = w_inv;
        gens.push(Mat::diag(f, &diag));
    }
    // Signed cyclic permutation matrix `e_i ↦ e_{i+1}` with determinant 1.
    let minus_one = f.neg(1);
    let mut c = Mat::zero(f, d, d);
    for i in 0..d {
        c.set((i + 1) % d, i, 1);
    }
    if d.is_multiple_of(2) {
        c.set(0, d - 1, minus_one);
    }
    gens.push(c);
    Ok(gens)
}

/// The projective group of `family` over `F_q`, `q ≤ 16`, on `PG(d−1, q)`;
/// the order is checked against the standard formula.
pub fn projective_group(family: LinearFamily, q: u64) -> Result<PermGroup> {
    if q > MAX_LINEAR_Q {
        return Err(Error::UnknownGroupSpec(format!("{family}:{q}: q must be at most {MAX_LINEAR_Q}")));
    }
    let r = (2..=q)
        .find(|&d| q.is_multiple_of(d) && is_prime(d))
        .ok_or_else(|| Error::UnknownGroupSpec(format!("{family}:{q}")))?;
    let n = log_p(q, r);
    let f = field(r, n)?;
    let d = family.dimension();
    let space = ProjectiveSpace::new(&f, d);
    let mut gens: Vec<Permutation> = sl_generators(&f, d)?
        .iter()
        .map(|g| space.semilinear_permutation(g, 0))
        .collect();
    if matches!(family, LinearFamily::Pgl2 | LinearFamily::PGammaL2) {
        gens.push(space.semilinear_permutation(&Mat::diag(&f, &[f.primitive_element(), 1]), 0));
    }
    if matches!(family, LinearFamily::PSigmaL2 | LinearFamily::PGammaL2) && n > 1 {
        gens.push(space.semilinear_permutation(&Mat::identity(&f, d), 1));
    }
    gens.retain(|g| !g.is_identity());
    let g = PermGroup::new(space.len(), gens)?;
    let expected = family.order(q);
    let computed = g.order()?;
    if computed != expected {
        return Err(Error::OrderMismatch { expected, computed });
    }
    Ok(g)
}
