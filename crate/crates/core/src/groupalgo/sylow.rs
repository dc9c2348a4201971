use rand::Rng;

use super::subgroup::normalizer_of_subgroup;
use crate::error::{Error, Result};
use crate::numth::{is_prime, p_part};
use crate::perm::{p_part_of_element, PermGroup, Permutation};

pub const DEFAULT_SYLOW_RESTARTS: usize = 200;

/// Random draws allowed per climbing step before a restart.
const DRAWS_PER_STEP: usize = 400;

enum Attempt {
    Found(PermGroup),
    Retry,
}

/// Sylow p-subgroup by normalizer climbing: start from the p-part of a random
/// element and repeatedly adjoin a p-element of `N_G(Q)` lying outside `Q`.
pub fn sylow_subgroup<R: Rng + ?Sized>(
    g: &PermGroup,
    p: u64,
    orbit_cap: usize,
    restarts: usize,
    rng: &mut R,
) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order()?, p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    for _ in 0..restarts.max(1) {
        if let Attempt::Found(q) = attempt(g, p, target, orbit_cap, rng)? {
            return Ok(q);
        }
    }
    Err(Error::SylowRetriesExhausted { p, restarts })
}

fn random_p_element<R: Rng + ?Sized>(
    h: &PermGroup,
    p: u64,
    avoid: Option<&PermGroup>,
    rng: &mut R,
) -> Result<Option<Permutation>> {
    for _ in 0..DRAWS_PER_STEP {
        let y = p_part_of_element(&h.random_element(rng)?, p);
        if y.is_identity() {
            continue;
        }
        match avoid {
            Some(q) if q.contains(&y)? => continue,
            _ => return Ok(Some(y)),
        }
    }
    Ok(None)
}

fn attempt<R: Rng + ?Sized>(
    g: &PermGroup,
    p: u64,
    target: u64,
    orbit_cap: usize,
    rng: &mut R,
) -> Result<Attempt> {
    let Some(y) = random_p_element(g, p, None, rng)? else {
        return Ok(Attempt::Retry);
    };
    let mut q = PermGroup::new(g.degree(), vec![y])?;
    loop {
        let order = q.order()?;
        if order == target {
            return Ok(Attempt::Found(q));
        }
        let n = normalizer_of_subgroup(g, &q, orbit_cap, rng)?;
        let Some(y) = random_p_element(&n.group, p, Some(&q), rng)? else {
            return Ok(Attempt::Retry);
        };
        let mut gens = q.generators().to_vec();
        gens.push(y);
        q = PermGroup::new(g.degree(), gens)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalgo::construct::{alternating, symmetric};
    use crate::groupalgo::orbit::DEFAULT_ORBIT_CAP;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sylow_of_a4_is_klein() {
        let a4 = alternating(4);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let q = sylow_subgroup(&a4, 2, DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS, &mut rng).unwrap();
        assert_eq!(q.order().unwrap(), 4);
        assert!(q.is_abelian());
        assert!(a4.contains_group(&q).unwrap());
    }

    #[test]
    fn sylow_of_s10_at_five() {
        let s10 = symmetric(10);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q = sylow_subgroup(&s10, 5, DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS, &mut rng).unwrap();
        assert_eq!(q.order().unwrap(), 25);
        assert!(q.is_abelian());
        assert!(q.elements().unwrap().iter().all(|x| x.order() <= 5));
    }

    #[test]
    fn non_abelian_sylow_is_found_too() {
        let s4 = symmetric(4);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let q = sylow_subgroup(&s4, 2, DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS, &mut rng).unwrap();
        assert_eq!(q.order().unwrap(), 8);
        assert!(!q.is_abelian());
    }

    #[test]
    fn coprime_prime_gives_trivial_group() {
        let s4 = symmetric(4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q = sylow_subgroup(&s4, 5, DEFAULT_ORBIT_CAP, DEFAULT_SYLOW_RESTARTS, &mut rng).unwrap();
        assert_eq!(q.order().unwrap(), 1);
        assert!(matches!(
            sylow_subgroup(&s4, 4, DEFAULT_ORBIT_CAP, 1, &mut rng),
            Err(Error::NotPrime(4))
        ));
    }
}
