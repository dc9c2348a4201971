//! Base and strong generating sets.

use rand::Rng;

use super::Permutation;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Resource limits for chain construction.
#[derive(Clone, Copy, Debug)]
pub struct ChainLimits {
    /// Cap on `sum(orbit lengths) * degree`, i.e. the stored transversal size.
    pub max_transversal_entries: usize,
}

impl Default for ChainLimits {
    fn default() -> Self {
        ChainLimits {
            max_transversal_entries: 60_000_000,
        }
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// For each point, the index into `reps` of its coset representative.
    slot: Vec<u32>,
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut lvl = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            slot: vec![NONE; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        lvl.rebuild_orbit(degree);
        lvl
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        // Keep existing representatives; only extend the orbit.
        if self.orbit.is_empty() {
            self.slot[self.base_point as usize] = 0;
            self.orbit.push(self.base_point);
            self.reps.push(Permutation::identity(degree));
            self.inv_reps.push(Permutation::identity(degree));
        }
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            let u = self.slot[beta as usize] as usize;
            for s in &self.gens {
                let img = s.apply(beta);
                if self.slot[img as usize] == NONE {
                    let rep = self.reps[u].compose(s);
                    self.slot[img as usize] = self.reps.len() as u32;
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                    self.orbit.push(img);
                }
            }
            i += 1;
        }
    }

    #[inline]
    fn rep(&self, point: u32) -> Option<&Permutation> {
        match self.slot[point as usize] {
            NONE => None,
            k => Some(&self.reps[k as usize]),
        }
    }

    #[inline]
    fn inv_rep(&self, point: u32) -> Option<&Permutation> {
        match self.slot[point as usize] {
            NONE => None,
            k => Some(&self.inv_reps[k as usize]),
        }
    }
}

/// A stabilizer chain `G = G^(0) > G^(1) > … > G^(k) = 1` with explicit
/// transversals. Base points are chosen as the smallest point moved by the
/// element that forces a new level.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    limits: ChainLimits,
}

impl StabChain {
    fn empty(degree: usize, limits: ChainLimits) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
            limits,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Deterministic Schreier–Sims.
    pub fn build(degree: usize, gens: &[Permutation], limits: ChainLimits) -> Result<Self> {
        let mut chain = StabChain::empty(degree, limits);
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return Ok(chain);
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for l in 0..chain.levels.len() {
                chain.levels[l].gens.push(g.clone());
                if g.apply(chain.levels[l].base_point) != chain.levels[l].base_point {
                    break;
                }
            }
        }
        for l in 0..chain.levels.len() {
            chain.levels[l].rebuild_orbit(degree);
        }
        chain.check_limits()?;

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            let mut restarted = false;
            let mut oi = 0;
            'scan: while oi < chain.levels[l].orbit.len() {
                let beta = chain.levels[l].orbit[oi];
                let ngens = chain.levels[l].gens.len();
                for si in 0..ngens {
                    let level = &chain.levels[l];
                    let s = &level.gens[si];
                    let img = s.apply(beta);
                    let u_beta = level.rep(beta).expect("orbit point");
                    let u_img = level.inv_rep(img).expect("orbit point");
                    let h = u_beta.compose(s).compose(u_img);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = chain.strip_from(h, l + 1);
                    if j < chain.levels.len() || !residue.is_identity() {
                        chain.insert_residue(residue, l + 1, j)?;
                        i = j as isize;
                        restarted = true;
                        break 'scan;
                    }
                }
                oi += 1;
            }
            if !restarted {
                i -= 1;
            }
        }
        Ok(chain)
    }

    /// Randomized construction for a group whose order is known in advance.
    ///
    /// `sample` must return elements of the target group. The result is exact:
    /// the product of basic orbit lengths can only reach `target` once the
    /// chain is a complete base and strong generating set.
    pub fn build_with_order<F>(
        degree: usize,
        target: u64,
        limits: ChainLimits,
        max_samples: usize,
        mut sample: F,
    ) -> Result<Self>
    where
        F: FnMut() -> Result<Permutation>,
    {
        let mut chain = StabChain::empty(degree, limits);
        let mut n = 0;
        while chain.order()? < target {
            if n >= max_samples {
                return Err(Error::OrderNotReached {
                    target,
                    reached: chain.order()?,
                });
            }
            n += 1;
            let g = sample()?;
            let (residue, j) = chain.strip_from(g, 0);
            if residue.is_identity() {
                continue;
            }
            chain.insert_residue(residue, 0, j)?;
        }
        let reached = chain.order()?;
        if reached != target {
            return Err(Error::OrderNotReached { target, reached });
        }
        Ok(chain)
    }

    /// Adds `residue` (which fixes the first `j` base points) to levels
    /// `from..=j`, creating level `j` if needed.
    fn insert_residue(&mut self, residue: Permutation, from: usize, j: usize) -> Result<()> {
        if j == self.levels.len() {
            let b = residue
                .smallest_moved_point()
                .expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for m in from..=j {
            self.levels[m].gens.push(residue.clone());
            self.levels[m].rebuild_orbit(self.degree);
        }
        self.check_limits()
    }

    fn check_limits(&self) -> Result<()> {
        let stored: usize = self.levels.iter().map(|l| l.orbit.len()).sum::<usize>() * self.degree;
        if stored > self.limits.max_transversal_entries {
            return Err(Error::ChainTooLarge {
                cap: self.limits.max_transversal_entries,
            });
        }
        Ok(())
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    fn strip_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base_point);
            match level.inv_rep(beta) {
                None => return (g, l),
                Some(inv) => g = g.compose(inv),
            }
        }
        (g, self.levels.len())
    }

    pub fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        self.strip_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (r, j) = self.strip(g);
        j == self.levels.len() && r.is_identity()
    }

    pub fn order(&self) -> Result<u64> {
        self.levels.iter().try_fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .ok_or(Error::OrderOverflow)
        })
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Basic orbits, each in discovery order.
    pub fn fundamental_orbits(&self) -> Vec<Vec<u32>> {
        self.levels.iter().map(|l| l.orbit.clone()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_generators(&self, k: usize) -> &[Permutation] {
        self.levels.get(k).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn base_images(&self, g: &Permutation) -> Vec<u32> {
        self.levels.iter().map(|l| g.apply(l.base_point)).collect()
    }

    /// Uniformly distributed element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.reps.len());
            g = g.compose(&level.reps[k]);
        }
        g
    }

    /// All elements, in a fixed order. Intended for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for g in &out {
                for u in &level.reps {
                    next.push(g.compose(u));
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        let c = StabChain::build(5, &[p("(1,2,3,4,5)", 5), p("(1,2)", 5)], ChainLimits::default())
            .unwrap();
        assert_eq!(c.order().unwrap(), 120);
        let a4 = StabChain::build(4, &[p("(1,2,3)", 4), p("(2,3,4)", 4)], ChainLimits::default())
            .unwrap();
        assert_eq!(a4.order().unwrap(), 12);
        assert!(a4.contains(&p("(1,2,3)", 4)));
        assert!(!a4.contains(&p("(1,2)", 4)));
    }

    #[test]
    fn trivial_and_identity_generators() {
        let c = StabChain::build(3, &[Permutation::identity(3)], ChainLimits::default()).unwrap();
        assert_eq!(c.order().unwrap(), 1);
        assert!(c.contains(&Permutation::identity(3)));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(c.random_element(&mut rng).is_identity());
    }

    #[test]
    fn known_order_build_matches_deterministic() {
        let gens = [p("(1,2,3,4,5,6,7)", 7), p("(1,2)", 7)];
        let full = StabChain::build(7, &gens, ChainLimits::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rnd = StabChain::build_with_order(7, 5040, ChainLimits::default(), 1000, || {
            Ok(full.random_element(&mut rng))
        })
        .unwrap();
        assert_eq!(rnd.order().unwrap(), 5040);
        for g in full.elements().iter().step_by(97) {
            assert!(rnd.contains(g));
        }
    }

    #[test]
    fn elements_are_distinct() {
        let c = StabChain::build(4, &[p("(1,2,3,4)", 4), p("(1,2)", 4)], ChainLimits::default())
            .unwrap();
        let els = c.elements();
        let set: std::collections::HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn chain_cap_is_enforced() {
        let gens = [p("(1,2,3,4,5,6,7,8)", 8), p("(1,2)", 8)];
        let err = StabChain::build(
            8,
            &gens,
            ChainLimits {
                max_transversal_entries: 40,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::ChainTooLarge { cap: 40 }));
    }
}
