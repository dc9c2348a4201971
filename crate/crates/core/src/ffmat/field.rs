use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly;
use crate::error::{Error, Result};
use crate::numth::is_prime;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

const NO_LOG: u32 = u32::MAX;

/// Parameters of `F_{p^n}`; the modulus is stored low-degree first and monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub n: u32,
    pub modulus: Vec<u32>,
}

/// `F_{p^n}` with elements packed as base-p integers `c_0 + c_1 p + …`, where
/// `c_i` is the coefficient of `x^i` modulo the fixed modulus.
///
/// Multiplication goes through exp/log tables for a primitive element;
/// addition uses a table up to 256 elements.
pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u16>>,
    primitive: u32,
}

pub type FieldRef = Arc<Field>;

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Field {}

fn digits(mut v: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn pack(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Lexicographically smallest monic irreducible of degree `n`, ordering the
/// non-leading coefficients by their packed value (so `x^3+x+1` precedes
/// `x^3+x^2+1` over `F_2`).
fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(n) as u32;
    for v in 0..count {
        let mut f = digits(v, p, n);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub fn field(p: u64, n: u32) -> Result<FieldRef> {
    Field::new(p, n).map(Arc::new)
}

impl Field {
    pub fn new(p: u64, n: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::Precondition("field degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, n });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, n);

        let slow_mul = |a: u32, b: u32| -> u32 {
            let r = poly::mul_mod(&digits(a, p, n), &digits(b, p, n), &modulus, p);
            let mut d = r;
            d.resize(n as usize, 0);
            pack(&d, p)
        };

        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut primitive = 1;
        if q > 2 {
            for g in 2..q {
                exp.clear();
                let mut x = 1u32;
                loop {
                    exp.push(x);
                    x = slow_mul(x, g);
                    if x == 1 || exp.len() >= q as usize - 1 {
                        break;
                    }
                }
                if x == 1 && exp.len() == q as usize - 1 {
                    primitive = g;
                    break;
                }
            }
        } else {
            exp.push(1);
        }
        let mut log = vec![NO_LOG; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }

        let mut field = Field {
            p,
            n,
            q,
            modulus,
            exp,
            log,
            add: None,
            primitive,
        };
        if q <= 256 {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digitwise(a, b) as u16;
                }
            }
            field.add = Some(table);
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn desc(&self) -> FieldDesc {
        FieldDesc {
            p: self.p as u64,
            n: self.n,
            modulus: self.modulus.clone(),
        }
    }

    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    pub fn is_prime_subfield(&self, a: u32) -> bool {
        a < self.p
    }

    fn add_digitwise(&self, mut a: u32, mut b: u32) -> u32 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add {
            Some(t) => t[(a * self.q + b) as usize] as u32,
            None => self.add_digitwise(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.n == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u32> = digits(a, self.p, self.n)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        pack(&d, self.p)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        let m = self.q - 1;
        self.exp[(if s >= m { s - m } else { s }) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let m = self.q - 1;
        Some(self.exp[((m - self.log[a as usize]) % m) as usize])
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let m = (self.q - 1) as i64;
        let k = (self.log[a as usize] as i64 * e.rem_euclid(m)).rem_euclid(m);
        self.exp[k as usize]
    }

    /// Discrete logarithm to the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        match self.log.get(a as usize) {
            Some(&l) if l != NO_LOG => Some(l),
            _ => None,
        }
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// `a^(p^j)`.
    pub fn frobenius(&self, a: u32, j: u32) -> u32 {
        let mut x = a;
        for _ in 0..j % self.n {
            x = self.pow(x, self.p as i64);
        }
        x
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let m = self.q as u64 - 1;
        Some(m / crate::numth::gcd(l, m))
    }

    /// `f(a)` for a polynomial with prime-subfield coefficients.
    pub fn eval_prime_poly(&self, f: &[u32], a: u32) -> u32 {
        f.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, a), c))
    }

    pub fn format(&self, a: u32) -> String {
        if self.n == 1 {
            return a.to_string();
        }
        if a == 0 {
            return "0".into();
        }
        format!("z^{}", self.log[a as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(field(7, 1).unwrap().modulus(), &[0, 1]);
        assert!(matches!(field(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(field(2, 17), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn field_axioms_small_fields() {
        for &(p, n) in &[(2, 1), (2, 3), (3, 2), (5, 1), (2, 6), (7, 2), (11, 1)] {
            let f = field(p, n).unwrap();
            let els: Vec<u32> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.frobenius(a, n), a);
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in els.iter().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_has_order_n() {
        let f = field(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(
                    f.frobenius(f.add(a, b), 1),
                    f.add(f.frobenius(a, 1), f.frobenius(b, 1))
                );
            }
        }
        let moved = f.elements().filter(|&a| f.frobenius(a, 1) != a).count();
        assert_eq!(moved, 27 - 3);
    }

    #[test]
    fn large_field_uses_digitwise_addition() {
        let f = field(3, 6).unwrap();
        let z = f.primitive_element();
        assert_eq!(f.element_order(z), Some(728));
        assert_eq!(f.sub(f.add(z, 5), 5), z);
    }
}
