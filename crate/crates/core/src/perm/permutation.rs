use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::numth::{lcm, p_part};

/// A bijection of `{0, …, degree-1}`.
///
/// Products follow the right-action convention used by most computer algebra
/// systems: `x^(g*h) = (x^g)^h`, i.e. `g * h` applies `g` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree || seen[x] {
                return Err(Error::NotABijection { degree });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let xu = x as usize;
                if xu >= degree {
                    return Err(Error::PointOutOfRange {
                        point: xu + 1,
                        degree,
                    });
                }
                if seen[xu] {
                    return Err(Error::RepeatedPoint { point: xu + 1 });
                }
                seen[xu] = true;
                images[xu] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation `"(1,2,3)(4,5)"` or image notation
    /// `"[2,3,1,4]"`. The empty cycle `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let malformed = |reason: &str| Error::MalformedPermutation {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(malformed("empty text"));
        }
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| malformed("unclosed '['"))?;
            let mut images = Vec::with_capacity(degree);
            for tok in inner.split(',').filter(|s| !s.is_empty()) {
                let v: usize = tok.parse().map_err(|_| malformed("bad integer"))?;
                if v == 0 || v > degree {
                    return Err(Error::PointOutOfRange { point: v, degree });
                }
                images.push((v - 1) as u32);
            }
            if images.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: images.len(),
                });
            }
            return Permutation::from_images(images);
        }

        let mut cycles = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| malformed("expected '('"))?;
            let close = open.find(')').ok_or_else(|| malformed("unclosed '('"))?;
            let body = &open[..close];
            if body.contains('(') {
                return Err(malformed("nested '('"));
            }
            rest = &open[close + 1..];
            if body.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let v: usize = tok.parse().map_err(|_| malformed("bad integer"))?;
                if v == 0 || v > degree {
                    return Err(Error::PointOutOfRange { point: v, degree });
                }
                cycle.push((v - 1) as u32);
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // x^(g^-1 s g): maps g(x) to g(s(x)).
        let mut images = vec![0u32; self.images.len()];
        for (x, &sx) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[sx as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Non-trivial cycles, each starting at its smallest point, sorted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Element order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1, |acc, len| lcm(acc, len as u64))
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let cycles = self.cycle_type().len();
        (n - cycles).is_multiple_of(2)
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

/// The p-part of `g`: `g^m` where `m` is the p'-part of the order of `g`.
pub fn p_part_of_element(g: &Permutation, p: u64) -> Permutation {
    let order = g.order();
    let m = order / p_part(order, p);
    g.pow(m as i64)
}
