//! Normalizers and centralizers by orbit–stabilizer on conjugates.

use rand::Rng;

use super::orbit::{orbit, stabilizer, Orbit};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Largest subgroup whose full element set is used as an orbit key.
pub const MAX_KEYED_SUBGROUP: u64 = 256;

/// Canonical keys for elements and small subgroups of a fixed group `G`.
///
/// An element of `G` is determined by its images of a base of `G`, so the
/// sorted list of base-image tuples of a subgroup's elements identifies the
/// subgroup exactly.
#[derive(Clone, Debug)]
pub struct ElementKeyer {
    base: Vec<u32>,
    wide: bool,
}

impl ElementKeyer {
    pub fn for_group(group: &PermGroup) -> Result<Self> {
        let mut base = group.chain()?.base();
        if base.is_empty() {
            base.push(0);
        }
        Ok(ElementKeyer {
            base,
            wide: group.degree() > 256,
        })
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    fn width(&self) -> usize {
        if self.wide {
            2
        } else {
            1
        }
    }

    /// Appends the base images of `c^-1 x c`.
    fn push_conjugate(&self, x: &Permutation, c: &Permutation, c_inv: &Permutation, out: &mut Vec<u8>) {
        for &b in &self.base {
            let img = c.apply(x.apply(c_inv.apply(b)));
            if self.wide {
                out.extend_from_slice(&(img as u16).to_le_bytes());
            } else {
                out.push(img as u8);
            }
        }
    }

    pub fn element_key(&self, x: &Permutation) -> Box<[u8]> {
        let id = Permutation::identity(x.degree());
        self.conjugate_element_key(x, &id, &id)
    }

    pub fn conjugate_element_key(&self, x: &Permutation, c: &Permutation, c_inv: &Permutation) -> Box<[u8]> {
        let mut out = Vec::with_capacity(self.base.len() * self.width());
        self.push_conjugate(x, c, c_inv, &mut out);
        out.into_boxed_slice()
    }

    /// Key of `c^-1 P c` where `elements` lists all of `P`.
    pub fn conjugate_subgroup_key(&self, elements: &[Permutation], c: &Permutation, c_inv: &Permutation) -> Box<[u8]> {
        let chunk = self.base.len() * self.width();
        let mut buf = Vec::with_capacity(chunk * elements.len());
        for x in elements {
            self.push_conjugate(x, c, c_inv, &mut buf);
        }
        let mut chunks: Vec<&[u8]> = buf.chunks(chunk).collect();
        chunks.sort_unstable();
        chunks.concat().into_boxed_slice()
    }

    pub fn subgroup_key(&self, elements: &[Permutation]) -> Box<[u8]> {
        let degree = elements.first().map(|x| x.degree()).unwrap_or(0);
        let id = Permutation::identity(degree);
        self.conjugate_subgroup_key(elements, &id, &id)
    }
}

/// Result of a normalizer computation.
pub struct Normalizer {
    pub group: PermGroup,
    /// Number of conjugates of the subgroup (the Sylow count when P is Sylow).
    pub conjugates: u64,
}

fn keyed_elements(sub: &PermGroup) -> Result<Vec<Permutation>> {
    let order = sub.order()?;
    if order > MAX_KEYED_SUBGROUP {
        return Err(Error::SubgroupTooLarge {
            order,
            limit: MAX_KEYED_SUBGROUP,
        });
    }
    sub.elements()
}

/// `N_G(P)` as the stabilizer of `P` under conjugation.
pub fn normalizer_of_subgroup<R: Rng + ?Sized>(
    g: &PermGroup,
    p: &PermGroup,
    cap: usize,
    rng: &mut R,
) -> Result<Normalizer> {
    let elements = keyed_elements(p)?;
    let keyer = ElementKeyer::for_group(g)?;
    let key = |c: &Permutation| keyer.conjugate_subgroup_key(&elements, c, &c.inverse());
    let act = |c: &Permutation, h: &Permutation| c.compose(h);
    let seed = Permutation::identity(g.degree());
    let orb: Orbit<Box<[u8]>> = orbit(g.generators(), seed.clone(), key, act, cap)?;
    let group = stabilizer(g, &orb, &seed, key, act, rng)?;
    Ok(Normalizer {
        group,
        conjugates: orb.len() as u64,
    })
}

/// `C_H(x)` by orbit–stabilizer on the conjugacy class of `x` in `H`.
/// Keys use the base of `keyer`, which must come from a group containing
/// `H` and `x`.
pub fn centralizer_of_element<R: Rng + ?Sized>(
    h: &PermGroup,
    x: &Permutation,
    keyer: &ElementKeyer,
    cap: usize,
    rng: &mut R,
) -> Result<PermGroup> {
    let key = |c: &Permutation| keyer.conjugate_element_key(x, c, &c.inverse());
    let act = |c: &Permutation, g: &Permutation| c.compose(g);
    let seed = Permutation::identity(h.degree());
    let orb = orbit(h.generators(), seed.clone(), key, act, cap)?;
    stabilizer(h, &orb, &seed, key, act, rng)
}

/// `C_G(P)` as the iterated centralizer of the generators of `P`.
pub fn centralizer_of_subgroup<R: Rng + ?Sized>(
    g: &PermGroup,
    p: &PermGroup,
    cap: usize,
    rng: &mut R,
) -> Result<PermGroup> {
    let keyer = ElementKeyer::for_group(g)?;
    let mut c = g.clone();
    for x in p.generators() {
        if x.is_identity() {
            continue;
        }
        c = centralizer_of_element(&c, x, &keyer, cap, rng)?;
    }
    Ok(c)
}
