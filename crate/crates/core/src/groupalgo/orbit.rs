use std::collections::VecDeque;
use std::hash::Hash;

use indexmap::IndexSet;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub const DEFAULT_ORBIT_CAP: usize = 5_000_000;

const ROOT: u32 = u32::MAX;

/// An orbit with a Schreier tree. States are identified by keys; the tree
/// records, for each state, its parent and the generator leading to it.
pub struct Orbit<K> {
    keys: IndexSet<K>,
    parent: Vec<(u32, u32)>,
    edges: Vec<u32>,
    ngens: usize,
}

impl<K: Hash + Eq> Orbit<K> {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.keys.iter()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.keys.get_index_of(key)
    }

    /// Index of `state_i ^ gens[g]`.
    pub fn edge(&self, i: usize, g: usize) -> usize {
        self.edges[i * self.ngens + g] as usize
    }

    /// Generator indices along the tree path from the seed to state `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while self.parent[i].0 != ROOT {
            let (par, g) = self.parent[i];
            w.push(g as usize);
            i = par as usize;
        }
        w.reverse();
        w
    }

    /// Element `t_i` with `seed ^ t_i = state_i`.
    pub fn transversal(&self, i: usize, gens: &[Permutation], degree: usize) -> Permutation {
        self.word(i)
            .into_iter()
            .fold(Permutation::identity(degree), |acc, g| acc.compose(&gens[g]))
    }

    /// `t_i * g * t_j^-1` where `j` is the image of state `i` under `g`.
    pub fn schreier_generator(
        &self,
        i: usize,
        g: usize,
        gens: &[Permutation],
        degree: usize,
    ) -> Permutation {
        let j = self.edge(i, g);
        self.transversal(i, gens, degree)
            .compose(&gens[g])
            .compose(&self.transversal(j, gens, degree).inverse())
    }
}

/// Breadth-first orbit of `seed` under the right action `act`.
///
/// The action is spot-checked on the seed: `(x^g)^h` must have the same key
/// as `x^(gh)` for the first few generator pairs.
pub fn orbit<S, K, FK, FA>(
    gens: &[Permutation],
    seed: S,
    key: FK,
    act: FA,
    cap: usize,
) -> Result<Orbit<K>>
where
    K: Hash + Eq,
    FK: Fn(&S) -> K,
    FA: Fn(&S, &Permutation) -> S,
{
    for g in gens.iter().take(3) {
        for h in gens.iter().take(3) {
            let two_step = key(&act(&act(&seed, g), h));
            let one_step = key(&act(&seed, &g.compose(h)));
            if two_step != one_step {
                return Err(Error::InvalidAction);
            }
        }
    }

    let ngens = gens.len();
    let mut keys = IndexSet::new();
    keys.insert(key(&seed));
    let mut parent = vec![(ROOT, 0u32)];
    let mut edges: Vec<u32> = Vec::new();
    let mut queue: VecDeque<S> = VecDeque::new();
    queue.push_back(seed);
    let mut current = 0usize;
    while let Some(state) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let next = act(&state, g);
            let k = key(&next);
            let (idx, fresh) = keys.insert_full(k);
            if fresh {
                if keys.len() > cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                parent.push((current as u32, gi as u32));
                queue.push_back(next);
            }
            edges.push(idx as u32);
        }
        current += 1;
    }
    Ok(Orbit {
        keys,
        parent,
        edges,
        ngens,
    })
}

/// Orbit of a point under the natural action.
pub fn point_orbit(group: &PermGroup, point: u32, cap: usize) -> Result<Orbit<u32>> {
    orbit(group.generators(), point, |&x| x, |&x, g| g.apply(x), cap)
}

/// Stabilizer of the seed, built with the exact target order `|G| / |orbit|`.
///
/// Uniform elements `x` of `G` are mapped into the stabilizer as
/// `x * t_j^-1`, where `t_j` is the transversal element for `seed ^ x`.
pub fn stabilizer<S, K, FK, FA, R>(
    group: &PermGroup,
    orb: &Orbit<K>,
    seed: &S,
    key: FK,
    act: FA,
    rng: &mut R,
) -> Result<PermGroup>
where
    K: Hash + Eq,
    FK: Fn(&S) -> K,
    FA: Fn(&S, &Permutation) -> S,
    R: Rng + ?Sized,
{
    let order = group.order()?;
    let len = orb.len() as u64;
    if order % len != 0 {
        return Err(Error::Precondition(format!(
            "orbit length {len} does not divide group order {order}"
        )));
    }
    let target = order / len;
    let degree = group.degree();
    let gens = group.generators();
    let chain = group.chain()?;
    PermGroup::with_known_order(degree, target, 10_000, || {
        let x = chain.random_element(rng);
        let j = orb
            .index_of(&key(&act(seed, &x)))
            .ok_or_else(|| Error::Precondition("state outside computed orbit".into()))?;
        Ok(x.compose(&orb.transversal(j, gens, degree).inverse()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalgo::construct::symmetric;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn point_orbit_of_s4() {
        let s4 = symmetric(4);
        let o = point_orbit(&s4, 0, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.len(), 4);
        for i in 0..o.len() {
            let t = o.transversal(i, s4.generators(), 4);
            assert_eq!(t.apply(0), *o.key(i));
        }
    }

    #[test]
    fn point_stabilizer_of_s5() {
        let s5 = symmetric(5);
        let o = point_orbit(&s5, 2, DEFAULT_ORBIT_CAP).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let st = stabilizer(&s5, &o, &2u32, |&x| x, |&x, g| g.apply(x), &mut rng).unwrap();
        assert_eq!(st.order().unwrap(), 24);
        assert!(st.generators().iter().all(|g| g.apply(2) == 2));
    }

    #[test]
    fn schreier_generators_fix_the_seed() {
        let s5 = symmetric(5);
        let o = point_orbit(&s5, 0, DEFAULT_ORBIT_CAP).unwrap();
        for i in 0..o.len() {
            for g in 0..s5.generators().len() {
                assert_eq!(o.schreier_generator(i, g, s5.generators(), 5).apply(0), 0);
            }
        }
    }

    #[test]
    fn orbit_cap_is_reported() {
        let s5 = symmetric(5);
        let err = point_orbit(&s5, 0, 3).err().unwrap();
        assert!(matches!(err, Error::OrbitCapExceeded { cap: 3 }));
    }

    #[test]
    fn non_action_is_rejected() {
        let s4 = symmetric(4);
        // Left multiplication used as if it were a right action.
        let res = orbit(
            s4.generators(),
            Permutation::parse("(1,2,3)", 4).unwrap(),
            |x| x.clone(),
            |x, g| g.compose(x),
            100,
        );
        assert!(matches!(res, Err(Error::InvalidAction)));
    }
}
