//! Dense polynomials over a prime field, coefficients low-degree first.
//! Every returned polynomial is trimmed: no trailing zero coefficients, and the
//! zero polynomial is the empty vector.

fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (a, p) = (a as u64, p as u64);
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r as u32
}

pub fn degree(f: &[u32]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn sub(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(out)
}

pub fn mul(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a as u64 * b as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `f` modulo a nonzero `g`.
pub fn rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = inv_mod(g[dg], p) as u64;
    let mut r = trim(f.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - dg;
        for (i, &b) in g.iter().enumerate().take(dg + 1) {
            let t = c * b as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

pub fn mul_mod(f: &[u32], g: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(f, g, p), m, p)
}

pub fn pow_mod(f: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = rem(&[1], m, p);
    let mut base = rem(f, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
        e >>= 1;
    }
    result
}

/// Monic greatest common divisor.
pub fn gcd(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let inv = inv_mod(a[d], p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
    a
}

/// Irreducibility over `F_p`: no factor of degree `k ≤ n/2`, tested as
/// `gcd(f, x^{p^k} - x) = 1`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(n) = degree(f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=n / 2 {
        h = pow_mod(&h, p as u64, f, p);
        let d = gcd(f, &sub(&h, &x, p), p);
        if degree(&d) != Some(0) {
            return false;
        }
    }
    true
}
