use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{fingerprint, Fingerprint};
use crate::error::Result;
use crate::ffmat::{Mat, MatGroup};
use crate::numth::{factorial, gcd};

/// Names of the reflection groups the catalog can recognize.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identification {
    Trivial,
    /// Weyl group of type A₂ (dihedral of order 6).
    A2,
    /// Weyl group of type B₂ (dihedral of order 8).
    B2,
    /// Weyl group of type G₂ (dihedral of order 12).
    G2,
    G5,
    G8,
    G16,
    Cyclic(u64),
    /// Monomial group `F_p^× ≀ S_r`.
    Wreath { p: u64, r: u64 },
    Unidentified,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::Trivial => write!(f, "trivial"),
            Identification::A2 => write!(f, "A2"),
            Identification::B2 => write!(f, "B2"),
            Identification::G2 => write!(f, "G2"),
            Identification::G5 => write!(f, "G5"),
            Identification::G8 => write!(f, "G8"),
            Identification::G16 => write!(f, "G16"),
            Identification::Cyclic(m) => write!(f, "cyclic-{m}"),
            Identification::Wreath { p, r } => write!(f, "wreath({p},{r})"),
            Identification::Unidentified => write!(f, "unidentified"),
        }
    }
}

/// Fingerprint of the dihedral group of order `2m` realized as a real
/// reflection group: `m` reflections of order 2, rotations `r^k` of order
/// `m / gcd(k, m)`.
fn dihedral_fingerprint(m: u64) -> Fingerprint {
    let mut order_histogram = BTreeMap::new();
    for k in 0..m {
        *order_histogram.entry(m / gcd(k, m)).or_insert(0) += 1;
    }
    *order_histogram.entry(2).or_insert(0) += m;
    Fingerprint {
        order: 2 * m,
        order_histogram,
        reflections: m,
        reflection_orders: BTreeMap::from([(2, m)]),
    }
}

/// Reflection counts of the primitive rank-2 groups, by order of the
/// reflection: G₅ has 16 reflections of order 3, G₈ has 6 of order 2 and 12
/// of order 4, G₁₆ has 48 of order 5.
fn primitive_rank2(order: u64) -> Option<(Identification, BTreeMap<u64, u64>)> {
    match order {
        72 => Some((Identification::G5, BTreeMap::from([(3, 16)]))),
        96 => Some((Identification::G8, BTreeMap::from([(2, 6), (4, 12)]))),
        600 => Some((Identification::G16, BTreeMap::from([(5, 48)]))),
        _ => None,
    }
}

/// `F_p^× ≀ S_r` as monomial matrices over the field of `like`.
pub fn monomial_model(like: &MatGroup, r: usize) -> Result<MatGroup> {
    let f = like.field();
    let omega = f.primitive_element();
    let mut gens = Vec::new();
    let mut d = vec![1u32; r];
    d[0] = omega;
    gens.push(Mat::diag(f, &d));
    if r >= 2 {
        let cycle: Vec<Vec<u32>> = (0..r)
            .map(|i| (0..r).map(|j| ((i + 1) % r == j) as u32).collect())
            .collect();
        gens.push(Mat::from_rows(f, &cycle)?);
        let swap: Vec<Vec<u32>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let t = match i {
                            0 => 1,
                            1 => 0,
                            x => x,
                        };
                        (t == j) as u32
                    })
                    .collect()
            })
            .collect();
        gens.push(Mat::from_rows(f, &swap)?);
    }
    MatGroup::new(f, r, gens)
}

/// Matches a fingerprint against the catalog; ambiguous matches are
/// reported as unidentified.
pub fn identify(w: &MatGroup, fp: &Fingerprint) -> Result<Identification> {
    if fp.order == 1 {
        return Ok(Identification::Trivial);
    }
    let d = w.dim();
    if d == 1 {
        return Ok(Identification::Cyclic(fp.order));
    }
    let mut matches: Vec<Identification> = Vec::new();
    if d == 2 {
        for (m, name) in [(3, Identification::A2), (4, Identification::B2), (6, Identification::G2)] {
            if *fp == dihedral_fingerprint(m) {
                matches.push(name);
            }
        }
        if let Some((name, refl)) = primitive_rank2(fp.order) {
            if fp.reflections == refl.values().sum::<u64>() && fp.reflection_orders == refl {
                matches.push(name);
            }
        }
    }
    let f = w.field();
    if f.degree() == 1 {
        let p = f.p();
        let expected = factorial(d as u64).and_then(|r| (p - 1).checked_pow(d as u32)?.checked_mul(r));
        if expected == Some(fp.order) {
            let model = monomial_model(w, d)?;
            if fingerprint(&model)? == *fp {
                let name = if p == 3 && d == 2 {
                    Identification::B2
                } else {
                    Identification::Wreath { p, r: d as u64 }
                };
                matches.push(name);
            }
        }
    }
    matches.dedup();
    Ok(match matches.len() {
        1 => matches.pop().expect("one match"),
        _ => Identification::Unidentified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffmat::field;

    #[test]
    fn dihedral_models() {
        let d8 = dihedral_fingerprint(4);
        assert_eq!(d8.order, 8);
        assert_eq!(d8.order_histogram, BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        let d12 = dihedral_fingerprint(6);
        assert_eq!(d12.order_histogram, BTreeMap::from([(1, 1), (2, 7), (3, 2), (6, 2)]));
    }

    #[test]
    fn b2_over_f3() {
        let f3 = field(3, 1).unwrap();
        let w = MatGroup::new(
            &f3,
            2,
            vec![
                Mat::diag(&f3, &[2, 1]),
                Mat::from_ints(&f3, &[vec![0, 1], vec![1, 0]]).unwrap(),
            ],
        )
        .unwrap();
        let fp = fingerprint(&w).unwrap();
        assert_eq!(fp.reflections, 4);
        assert_eq!(identify(&w, &fp).unwrap(), Identification::B2);
    }

    #[test]
    fn wreath_seven_is_not_g5() {
        let f7 = field(7, 1).unwrap();
        let probe = MatGroup::trivial(&f7, 2);
        let w = monomial_model(&probe, 2).unwrap();
        let fp = fingerprint(&w).unwrap();
        assert_eq!(fp.order, 72);
        assert_eq!(fp.reflections, 16);
        assert_eq!(identify(&w, &fp).unwrap(), Identification::Wreath { p: 7, r: 2 });
    }

    #[test]
    fn scalars_are_cyclic() {
        let f8 = field(2, 3).unwrap();
        let w = MatGroup::new(&f8, 1, vec![Mat::scalar(&f8, 1, f8.primitive_element())]).unwrap();
        let fp = fingerprint(&w).unwrap();
        assert_eq!(fp.reflections, 6);
        assert_eq!(identify(&w, &fp).unwrap().to_string(), "cyclic-7");
    }
}
