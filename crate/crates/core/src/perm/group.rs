use std::sync::OnceLock;

use rand::Rng;

use super::chain::{ChainLimits, StabChain};
use super::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Once the chain exists the group is immutable and `Sync`.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    limits: ChainLimits,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            limits: self.limits,
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            limits: ChainLimits::default(),
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    pub fn with_limits(mut self, limits: ChainLimits) -> Self {
        self.limits = limits;
        self
    }

    /// Wraps an already verified chain; `gens` are taken from its strong
    /// generating set.
    pub fn from_chain(chain: StabChain) -> Self {
        let degree = chain.degree();
        let gens = chain.strong_generators().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        PermGroup {
            degree,
            gens,
            limits: ChainLimits::default(),
            chain: cell,
        }
    }

    /// Subgroup of known order built from a sampler of its elements.
    pub fn with_known_order<F>(degree: usize, order: u64, max_samples: usize, sample: F) -> Result<Self>
    where
        F: FnMut() -> Result<Permutation>,
    {
        let chain = StabChain::build_with_order(degree, order, ChainLimits::default(), max_samples, sample)?;
        Ok(PermGroup::from_chain(chain))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> Result<&StabChain> {
        if let Some(c) = self.chain.get() {
            return Ok(c);
        }
        let c = StabChain::build(self.degree, &self.gens, self.limits)?;
        let _ = self.chain.set(c);
        Ok(self.chain.get().expect("just set"))
    }

    pub fn order(&self) -> Result<u64> {
        self.chain()?.order()
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: g.degree(),
            });
        }
        Ok(self.chain()?.contains(g))
    }

    /// Uniform random element drawn through the stabilizer chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Permutation> {
        Ok(self.chain()?.random_element(rng))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Explicit element list. Only for small groups.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        Ok(self.chain()?.elements())
    }

    /// Whether `other` is a subgroup of `self` (checked on generators).
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self` normalizes `other` (checked on generators).
    pub fn normalizes(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.gens {
            for h in other.generators() {
                if !other.contains(&h.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Product-replacement random element generator. Needs only generators;
/// the output is not uniform but reaches every element after burn-in.
pub struct ProductReplacer {
    slots: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacer {
    pub fn new<R: Rng + ?Sized>(degree: usize, gens: &[Permutation], rng: &mut R) -> Self {
        let mut slots: Vec<Permutation> = gens.to_vec();
        if slots.is_empty() {
            slots.push(Permutation::identity(degree));
        }
        let base_len = slots.len();
        while slots.len() < 10.max(base_len) {
            let k = slots.len() % base_len;
            slots.push(slots[k].clone());
        }
        let mut pr = ProductReplacer {
            slots,
            acc: Permutation::identity(degree),
        };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    pub fn next<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Permutation {
        let n = self.slots.len();
        if n == 1 {
            let e = rng.gen_range(0..64);
            return self.slots[0].pow(e);
        }
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let inv = rng.gen_bool(0.5);
        let right = if inv {
            self.slots[j].inverse()
        } else {
            self.slots[j].clone()
        };
        self.slots[i] = if rng.gen_bool(0.5) {
            self.slots[i].compose(&right)
        } else {
            right.compose(&self.slots[i])
        };
        self.acc = self.acc.compose(&self.slots[i]);
        self.acc.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn random_elements_cover_s3() {
        let s3 = PermGroup::new(3, vec![p("(1,2,3)", 3), p("(1,2)", 3)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = HashSet::new();
        for _ in 0..10_000 {
            let g = s3.random_element(&mut rng).unwrap();
            assert!(s3.contains(&g).unwrap());
            seen.insert(g);
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn product_replacement_covers_s3() {
        let gens = [p("(1,2,3)", 3), p("(1,2)", 3)];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut pr = ProductReplacer::new(3, &gens, &mut rng);
        let mut seen = HashSet::new();
        for _ in 0..10_000 {
            seen.insert(pr.next(&mut rng));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let g = PermGroup::new(4, vec![p("(1,2)", 4)]).unwrap();
        assert!(matches!(
            g.contains(&p("(1,2)", 5)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(PermGroup::new(4, vec![p("(1,2)", 3)]).is_err());
    }
}
