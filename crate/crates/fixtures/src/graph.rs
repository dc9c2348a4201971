//! Simple graphs on at most a few hundred vertices and randomized search for
//! their automorphisms.

use anyhow::{bail, Result};
use rand::seq::IteratorRandom;
use rand::Rng;
use reflaut::perm::{PermGroup, Permutation};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bits::empty(n); n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len() as usize
    }

    fn common(&self, u: usize, v: usize) -> usize {
        let mut b = self.adj[u].clone();
        b.and_assign(&self.adj[v]);
        b.len() as usize
    }

    /// `Some((k, λ, μ))` when the graph is strongly regular.
    pub fn srg_parameters(&self) -> Option<(usize, usize, usize)> {
        let k = self.degree(0);
        let (mut lambda, mut mu) = (None, None);
        for u in 0..self.n {
            if self.degree(u) != k {
                return None;
            }
            for v in u + 1..self.n {
                let slot = if self.adjacent(u, v) { &mut lambda } else { &mut mu };
                let c = self.common(u, v);
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return None,
                    _ => {}
                }
            }
        }
        Some((k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    /// Distances from `u`; `usize::MAX` for unreachable vertices.
    pub fn distances(&self, u: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.n];
        d[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].iter() {
                if d[y] == usize::MAX {
                    d[y] = d[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        d
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.n
            && (0..self.n).all(|u| {
                self.adj[u]
                    .iter()
                    .all(|v| self.adjacent(g.apply(u as u32) as usize, g.apply(v as u32) as usize))
            })
    }

    /// One attempt at a random automorphism: vertices are mapped one at a time
    /// to random images consistent with adjacency to every vertex mapped so
    /// far. A complete assignment is an automorphism by construction.
    fn try_random_automorphism<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Permutation> {
        let n = self.n;
        let mut domain: Vec<Bits> = (0..n)
            .map(|u| {
                let mut b = Bits::full(n);
                for v in 0..n {
                    if self.degree(v) != self.degree(u) {
                        b.remove(v);
                    }
                }
                b
            })
            .collect();
        let mut image: Vec<Option<usize>> = vec![None; n];
        for _ in 0..n {
            let u = (0..n)
                .filter(|&u| image[u].is_none())
                .min_by_key(|&u| domain[u].len())
                .expect("an unassigned vertex remains");
            let v = domain[u].iter().choose(rng)?;
            image[u] = Some(v);
            for w in 0..n {
                if image[w].is_some() {
                    continue;
                }
                if self.adjacent(u, w) {
                    domain[w].and_assign(&self.adj[v]);
                } else {
                    domain[w].and_not_assign(&self.adj[v]);
                    domain[w].remove(v);
                }
                if domain[w].len() == 0 {
                    return None;
                }
            }
        }
        let images = image.into_iter().map(|v| v.expect("assigned") as u32).collect();
        Permutation::from_images(images).ok()
    }

    pub fn random_automorphism<R: Rng + ?Sized>(&self, rng: &mut R, attempts: usize) -> Option<Permutation> {
        (0..attempts).find_map(|_| self.try_random_automorphism(rng))
    }

    /// A subgroup of the automorphism group of order `target`, generated by
    /// random automorphisms and then reduced to few generators. Fails if the
    /// automorphisms found generate a group whose order exceeds or does not
    /// divide into `target`.
    pub fn automorphism_group<R: Rng + ?Sized>(&self, target: u64, rng: &mut R) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut order = 1;
        for _ in 0..64 {
            let Some(g) = self.random_automorphism(rng, 10_000) else {
                bail!("no automorphism found in 10000 attempts");
            };
            debug_assert!(self.is_automorphism(&g));
            gens.push(g);
            order = PermGroup::new(self.n, gens.clone())?.order()?;
            if order == target {
                return Ok(reduce_generators(PermGroup::new(self.n, gens)?, rng)?);
            }
            if order > target || !target.is_multiple_of(order) {
                bail!("automorphism group has order divisible by {order}, expected {target}");
            }
        }
        bail!("random automorphisms generate order {order}, expected {target}")
    }
}

/// Two or three random elements generating all of `g`, else `g` unchanged.
pub fn reduce_generators<R: Rng + ?Sized>(g: PermGroup, rng: &mut R) -> reflaut::Result<PermGroup> {
    let order = g.order()?;
    for k in [2, 3] {
        for _ in 0..40 {
            let cand = (0..k).map(|_| g.random_element(rng)).collect::<reflaut::Result<Vec<_>>>()?;
            let h = PermGroup::new(g.degree(), cand)?;
            if h.order()? == order {
                return Ok(h);
            }
        }
    }
    Ok(g)
}
