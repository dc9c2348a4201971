//! Weyl groups on `V = Y ⊗ F_p`, twisted Frobenius fixed spaces `V^{wF}` and
//! the reflection property of the induced automizer on `V^{w₀F}`.
//!
//! `Y` is the coroot lattice in the basis of simple coroots. With the Cartan
//! matrix `a_ij = ⟨α_i^∨, α_j⟩`, the simple reflection `s_i` sends `α_j^∨` to
//! `α_j^∨ − a_ji α_i^∨`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{field, FieldRef, Mat, MatGroup, Subspace};
use crate::numth::{factorial, is_prime};
use crate::reflect::{fingerprint, identify, is_irreducible, reflection_subgroup, Fingerprint, Identification, DEFAULT_LINE_CAP};

type IMat = Vec<Vec<i64>>;

fn imul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn iidentity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    F4,
    G2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedDatum(s.to_string());
        let s = s.trim();
        let (letter, rest) = s.split_at(s.chars().next().ok_or_else(bad)?.len_utf8());
        let n: usize = rest.parse().map_err(|_| bad())?;
        let t = match (letter.to_ascii_uppercase().as_str(), n) {
            ("A", n) => CartanType::A(n),
            ("B", n) => CartanType::B(n),
            ("C", n) => CartanType::C(n),
            ("D", n) => CartanType::D(n),
            ("F", 4) => CartanType::F4,
            ("G", 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }
}

impl CartanType {
    fn validate(self) -> Result<()> {
        let ok = match self {
            CartanType::A(n) => (1..=5).contains(&n),
            CartanType::B(n) | CartanType::C(n) => (2..=4).contains(&n),
            CartanType::D(n) => n == 4,
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedDatum(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// `|W|` from the standard formulas.
    pub fn weyl_order(self) -> u64 {
        let fact = |n: usize| factorial(n as u64).expect("small rank");
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1 << n) * fact(n),
            CartanType::D(n) => (1 << (n - 1)) * fact(n),
            CartanType::F4 => 1152,
            CartanType::G2 => 12,
        }
    }

    /// Torsion primes of the simply connected group (`Sp_{2n}` has none).
    pub fn torsion_primes(self) -> &'static [u64] {
        match self {
            CartanType::A(_) | CartanType::C(_) => &[],
            CartanType::B(_) | CartanType::D(_) | CartanType::G2 => &[2],
            CartanType::F4 => &[2, 3],
        }
    }

    /// `a_ij = ⟨α_i^∨, α_j⟩`; in `B_n` the last root is short, in `F₄` the
    /// last two, in `G₂` the first.
    pub fn cartan_matrix(self) -> IMat {
        let n = self.rank();
        let mut a: IMat = (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect()).collect();
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self {
            CartanType::A(n) => (0..n - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            CartanType::B(n) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -1, -2);
            }
            CartanType::C(n) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -2, -1);
            }
            CartanType::D(n) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            CartanType::F4 => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            CartanType::G2 => bond(0, 1, -3, -1),
        }
        a
    }
}

/// Root datum of the simply connected group with an optional diagram
/// automorphism `M_φ` acting on `Y`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub cartan: IMat,
    pub simple: Vec<IMat>,
    pub phi: Option<IMat>,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Result<RootDatum> {
        cartan_type.validate()?;
        let cartan = cartan_type.cartan_matrix();
        let n = cartan_type.rank();
        let simple = (0..n)
            .map(|i| {
                let mut s = iidentity(n);
                for j in 0..n {
                    // Column j is e_j − a_ji e_i.
                    s[i][j] -= cartan[j][i];
                }
                s
            })
            .collect();
        Ok(RootDatum {
            cartan_type,
            cartan,
            simple,
            phi: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Attaches the permutation `α_i^∨ ↦ α_{σ(i)}^∨`; `σ` must preserve the
    /// Cartan matrix.
    pub fn with_diagram_automorphism(mut self, sigma: &[usize]) -> Result<RootDatum> {
        let n = self.rank();
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::UnsupportedDatum("diagram automorphism is not a permutation".into()));
        }
        let preserves = (0..n).all(|i| (0..n).all(|j| self.cartan[sigma[i]][sigma[j]] == self.cartan[i][j]));
        if !preserves {
            return Err(Error::UnsupportedDatum("permutation is not a diagram symmetry".into()));
        }
        let mut m = vec![vec![0i64; n]; n];
        for (i, &t) in sigma.iter().enumerate() {
            m[t][i] = 1;
        }
        self.phi = Some(m);
        Ok(self)
    }

    /// The order-2 symmetry of `A_n` (`n ≥ 2`) or `D₄` swapping the last two nodes.
    pub fn with_graph_automorphism(self) -> Result<RootDatum> {
        let n = self.rank();
        let sigma: Vec<usize> = match self.cartan_type {
            CartanType::A(n) if n >= 2 => (0..n).rev().collect(),
            CartanType::D(4) => vec![0, 1, 3, 2],
            t => return Err(Error::UnsupportedDatum(format!("{t} has no graph automorphism"))),
        };
        debug_assert_eq!(sigma.len(), n);
        self.with_diagram_automorphism(&sigma)
    }
}

/// An element of `W` with a reduced word (1-based simple indices).
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub matrix: IMat,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word_label(&self) -> String {
        if self.word.is_empty() {
            "1".into()
        } else {
            self.word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(".")
        }
    }
}

/// All of `W` over the integers in breadth-first (length) order.
pub fn weyl_elements(datum: &RootDatum) -> Vec<WeylElement> {
    let n = datum.rank();
    let mut index: HashMap<IMat, usize> = HashMap::new();
    let mut out = vec![WeylElement {
        matrix: iidentity(n),
        word: Vec::new(),
    }];
    index.insert(iidentity(n), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, s) in datum.simple.iter().enumerate() {
            let m = imul(&out[i].matrix, s);
            if !index.contains_key(&m) {
                let mut word = out[i].word.clone();
                word.push(k + 1);
                index.insert(m.clone(), out.len());
                queue.push_back(out.len());
                out.push(WeylElement { matrix: m, word });
            }
        }
    }
    out
}

fn reduce(f: &FieldRef, m: &IMat) -> Mat {
    Mat::from_ints(f, m).expect("square integer matrix")
}

/// `W` as a matrix group over `F_p`; errors if reduction mod `p` is not
/// faithful.
pub fn weyl_matgroup(datum: &RootDatum, p: u64) -> Result<MatGroup> {
    let fp = field(p, 1)?;
    let gens = datum.simple.iter().map(|s| reduce(&fp, s)).collect();
    let g = MatGroup::new(&fp, datum.rank(), gens)?;
    let expected = datum.cartan_type.weyl_order();
    if g.order()? != expected {
        return Err(Error::Precondition(format!(
            "W({}) mod {p} has order {}, not {expected}",
            datum.cartan_type,
            g.order()?
        )));
    }
    Ok(g)
}

/// `F = (q mod p) · M_φ` on `V`.
#[derive(Clone, Debug)]
pub struct TwistedFrobenius {
    pub q_mod_p: u64,
    pub phi: Option<IMat>,
    pub matrix: Mat,
}

impl TwistedFrobenius {
    pub fn new(datum: &RootDatum, q: u64, p: u64) -> Result<TwistedFrobenius> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if q.is_multiple_of(p) {
            return Err(Error::Precondition(format!("p = {p} divides q = {q}")));
        }
        let fp = field(p, 1)?;
        let phi = datum.phi.clone().unwrap_or_else(|| iidentity(datum.rank()));
        let matrix = reduce(&fp, &phi).scale((q % p) as u32);
        Ok(TwistedFrobenius {
            q_mod_p: q % p,
            phi: datum.phi.clone(),
            matrix,
        })
    }
}

/// A twist class selector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Identity,
    Coxeter,
    Longest,
    Word(Vec<usize>),
}

impl FromStr for Twist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "id" => Ok(Twist::Identity),
            "coxeter" => Ok(Twist::Coxeter),
            "longest" | "w0" => Ok(Twist::Longest),
            w => w
                .split('.')
                .map(|t| {
                    t.strip_prefix('s')
                        .and_then(|i| i.parse::<usize>().ok())
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| Error::Precondition(format!("bad twist {s:?}: expected 1, coxeter, longest or s1.s2…")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Twist::Word),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Identity => write!(f, "1"),
            Twist::Coxeter => write!(f, "coxeter"),
            Twist::Longest => write!(f, "longest"),
            Twist::Word(w) => {
                let parts: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
                write!(f, "{}", parts.join("."))
            }
        }
    }
}

impl Twist {
    pub fn matrix(&self, datum: &RootDatum, elements: &[WeylElement]) -> Result<IMat> {
        let n = datum.rank();
        let word_matrix = |w: &[usize]| -> Result<IMat> {
            w.iter().try_fold(iidentity(n), |acc, &i| {
                datum
                    .simple
                    .get(i - 1)
                    .map(|s| imul(&acc, s))
                    .ok_or_else(|| Error::Precondition(format!("simple reflection s{i} out of range")))
            })
        };
        match self {
            Twist::Identity => Ok(iidentity(n)),
            Twist::Coxeter => word_matrix(&(1..=n).collect::<Vec<_>>()),
            Twist::Longest => Ok(elements.last().expect("W nonempty").matrix.clone()),
            Twist::Word(w) => word_matrix(w),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistedClass {
    /// Shortest-word representative.
    pub representative: String,
    pub size: usize,
    pub fixed_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedDimScan {
    pub cartan_type: CartanType,
    pub q: u64,
    pub p: u64,
    pub classes: Vec<TwistedClass>,
    pub identity_dim: usize,
    pub max_dim: usize,
    pub argmax: Vec<String>,
    pub max_at_identity: bool,
    /// `dim V^{wF}` is constant on every `F`-twisted class.
    pub class_constant: bool,
}

/// `dim ker(wF − 1)` for every `w ∈ W`, grouped by `F`-twisted conjugacy
/// `w ~ u w φ(u)⁻¹`.
pub fn fixed_dim_scan(datum: &RootDatum, q: u64, p: u64) -> Result<FixedDimScan> {
    let frob = TwistedFrobenius::new(datum, q, p)?;
    let fp = frob.matrix.field().clone();
    let elements = weyl_elements(datum);
    let n = datum.rank();
    let (phi, phi_inv) = match &datum.phi {
        Some(m) => {
            let mut inv = iidentity(n);
            // M_φ is a permutation matrix: inverse is the transpose.
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    inv[j][i] = x;
                }
            }
            (m.clone(), inv)
        }
        None => (iidentity(n), iidentity(n)),
    };
    let index: HashMap<&IMat, usize> = elements.iter().enumerate().map(|(i, e)| (&e.matrix, i)).collect();
    let inverse_of: Vec<usize> = (0..elements.len())
        .map(|i| {
            let m = &elements[i].matrix;
            (0..elements.len())
                .find(|&j| imul(m, &elements[j].matrix) == iidentity(n))
                .expect("group")
        })
        .collect();
    let dims: Vec<usize> = elements
        .iter()
        .map(|w| reduce(&fp, &w.matrix).mul(&frob.matrix).fixed_space().dim())
        .collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    let mut class_constant = true;
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let w = &elements[members[k]].matrix;
            for u in 0..elements.len() {
                let u_m = &elements[u].matrix;
                let phi_u_inv = imul(&imul(&phi, &elements[inverse_of[u]].matrix), &phi_inv);
                let x = index[&imul(&imul(u_m, w), &phi_u_inv)];
                if class_of[x] == usize::MAX {
                    class_of[x] = c;
                    members.push(x);
                }
            }
            k += 1;
        }
        class_constant &= members.iter().all(|&m| dims[m] == dims[start]);
        classes.push(TwistedClass {
            representative: elements[start].word_label(),
            size: members.len(),
            fixed_dim: dims[start],
        });
    }
    let max_dim = *dims.iter().max().expect("W nonempty");
    let argmax = classes
        .iter()
        .filter(|c| c.fixed_dim == max_dim)
        .map(|c| c.representative.clone())
        .collect();
    Ok(FixedDimScan {
        cartan_type: datum.cartan_type,
        q,
        p,
        identity_dim: dims[0],
        max_dim,
        max_at_identity: dims[0] == max_dim,
        argmax,
        classes,
        class_constant,
    })
}

pub struct SubspaceAutomizer {
    /// `S = V^{w₀F}`.
    pub subspace: Subspace,
    /// `|{u ∈ W : u(S) = S}|`.
    pub stabilizer_order: u64,
    /// `|{u ∈ W : u|_S = id}|`.
    pub kernel_order: u64,
    /// Induced group on the echelon basis of `S`.
    pub group: MatGroup,
}

pub fn subspace_automizer(datum: &RootDatum, q: u64, p: u64, twist: &Twist) -> Result<SubspaceAutomizer> {
    let frob = TwistedFrobenius::new(datum, q, p)?;
    let fp = frob.matrix.field().clone();
    let elements = weyl_elements(datum);
    let w0 = reduce(&fp, &twist.matrix(datum, &elements)?);
    let s = w0.mul(&frob.matrix).fixed_space();
    if s.is_zero() {
        return Err(Error::Precondition("V^{w₀F} is zero".into()));
    }
    let mut induced: Vec<Mat> = Vec::new();
    let mut stabilizer_order = 0;
    let mut kernel_order = 0;
    for u in &elements {
        let m = reduce(&fp, &u.matrix);
        if let Some(r) = s.restrict(&m) {
            stabilizer_order += 1;
            if r.is_identity() {
                kernel_order += 1;
            } else if !induced.contains(&r) {
                induced.push(r);
            }
        }
    }
    let group = MatGroup::new(&fp, s.dim(), induced)?;
    Ok(SubspaceAutomizer {
        subspace: s,
        stabilizer_order,
        kernel_order,
        group,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReflChevalleyReport {
    pub cartan_type: CartanType,
    pub q: u64,
    pub p: u64,
    pub twist: String,
    pub subspace_dim: usize,
    pub order: u64,
    pub reflections: usize,
    pub reflection_subgroup_order: u64,
    pub generated_by_reflections: bool,
    pub irreducible: bool,
    pub fingerprint: Fingerprint,
    pub identification: Identification,
    pub pass: bool,
}

/// Checks that the induced group on `V^{w₀F}` is an irreducible reflection
/// group; `w₀` must attain the maximal fixed dimension.
pub fn check_refl_chevalley(datum: &RootDatum, q: u64, p: u64, twist: &Twist) -> Result<ReflChevalleyReport> {
    if datum.cartan_type.torsion_primes().contains(&p) {
        return Err(Error::Precondition(format!("{p} is a torsion prime for {}", datum.cartan_type)));
    }
    let scan = fixed_dim_scan(datum, q, p)?;
    let aut = subspace_automizer(datum, q, p, twist)?;
    if aut.subspace.dim() != scan.max_dim {
        return Err(Error::Precondition(format!(
            "twist gives dim {} but the maximum is {} (attained at {})",
            aut.subspace.dim(),
            scan.max_dim,
            scan.argmax.join(", ")
        )));
    }
    let analysis = reflection_subgroup(&aut.group)?;
    let order = analysis.order_n;
    let generated_by_reflections = analysis.order_w == order;
    let irreducible = is_irreducible(&aut.group, DEFAULT_LINE_CAP)?;
    let fp = fingerprint(&aut.group)?;
    let identification = identify(&aut.group, &fp)?;
    Ok(ReflChevalleyReport {
        cartan_type: datum.cartan_type,
        q,
        p,
        twist: twist.to_string(),
        subspace_dim: aut.subspace.dim(),
        order,
        reflections: analysis.reflections.len(),
        reflection_subgroup_order: analysis.order_w,
        generated_by_reflections,
        irreducible,
        fingerprint: fp,
        identification,
        pass: generated_by_reflections && irreducible,
    })
}

/// Histogram of fixed dimensions over all of `W`.
pub fn fixed_dim_histogram(scan: &FixedDimScan) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for c in &scan.classes {
        *h.entry(c.fixed_dim).or_insert(0) += c.size;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v: Vec<CartanType> = (1..=5).map(CartanType::A).collect();
        v.extend((2..=4).map(CartanType::B));
        v.extend((2..=4).map(CartanType::C));
        v.extend([CartanType::D(4), CartanType::F4, CartanType::G2]);
        v
    }

    #[test]
    fn weyl_orders_and_longest_element() {
        for t in all_types() {
            let d = RootDatum::new(t).unwrap();
            let els = weyl_elements(&d);
            assert_eq!(els.len() as u64, t.weyl_order(), "{t}");
            // −1 ∈ W exactly for B, C, D₄, F₄, G₂ and A₁.
            let minus: IMat = iidentity(t.rank()).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
            let has_minus = els.iter().any(|e| e.matrix == minus);
            assert_eq!(has_minus, !matches!(t, CartanType::A(n) if n > 1), "{t}");
        }
    }

    #[test]
    fn braid_relations() {
        for t in all_types() {
            let d = RootDatum::new(t).unwrap();
            let n = t.rank();
            for i in 0..n {
                assert_eq!(imul(&d.simple[i], &d.simple[i]), iidentity(n));
                for j in i + 1..n {
                    let m = match d.cartan[i][j] * d.cartan[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        x => panic!("bad bond {x}"),
                    };
                    let st = imul(&d.simple[i], &d.simple[j]);
                    let mut acc = iidentity(n);
                    for k in 1..=m {
                        acc = imul(&acc, &st);
                        assert_eq!(acc == iidentity(n), k == m, "{t} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn simple_reflections_are_reflections_mod_p() {
        for t in all_types() {
            let d = RootDatum::new(t).unwrap();
            let p = if t == CartanType::F4 { 5 } else { 3 };
            let g = weyl_matgroup(&d, p).unwrap();
            for s in g.generators() {
                assert!(crate::reflect::is_reflection(s).unwrap());
            }
        }
        let f4 = RootDatum::new(CartanType::F4).unwrap();
        assert_eq!(weyl_matgroup(&f4, 5).unwrap().order().unwrap(), 1152);
    }

    #[test]
    fn twist_parsing() {
        assert_eq!("1".parse::<Twist>().unwrap(), Twist::Identity);
        assert_eq!("coxeter".parse::<Twist>().unwrap(), Twist::Coxeter);
        assert_eq!("s1.s2.s1".parse::<Twist>().unwrap(), Twist::Word(vec![1, 2, 1]));
        assert!("1.2".parse::<Twist>().is_err());
        assert!("s0".parse::<Twist>().is_err());
    }

    #[test]
    fn a2_scans() {
        let a2 = RootDatum::new(CartanType::A(2)).unwrap();
        let s = fixed_dim_scan(&a2, 8, 7).unwrap();
        assert_eq!((s.identity_dim, s.max_dim, s.max_at_identity), (2, 2, true));
        assert_eq!(s.classes.len(), 3);
        let s = fixed_dim_scan(&a2, 2, 7).unwrap();
        assert_eq!((s.identity_dim, s.max_dim), (0, 1));
        assert_eq!(s.argmax, vec!["s1.s2".to_string()]);
        assert!(s.class_constant);
        let a1 = RootDatum::new(CartanType::A(1)).unwrap();
        assert_eq!(fixed_dim_scan(&a1, 4, 3).unwrap().identity_dim, 1);
    }

    #[test]
    fn twisted_classes_of_unitary_type() {
        // ²A₂: F = q·(graph); the twisted classes are W-classes of w·φ.
        let d = RootDatum::new(CartanType::A(2)).unwrap().with_graph_automorphism().unwrap();
        let s = fixed_dim_scan(&d, 2, 3).unwrap();
        assert!(s.class_constant);
        assert_eq!(s.classes.iter().map(|c| c.size).sum::<usize>(), 6);
    }

    #[test]
    fn subspace_automizer_examples() {
        let a2 = RootDatum::new(CartanType::A(2)).unwrap();
        let aut = subspace_automizer(&a2, 8, 7, &Twist::Identity).unwrap();
        assert_eq!(aut.group.order().unwrap(), 6);
        assert_eq!(crate::reflect::reflections_of(&aut.group).unwrap().len(), 3);
        assert!(is_irreducible(&aut.group, DEFAULT_LINE_CAP).unwrap());

        let b2 = RootDatum::new(CartanType::B(2)).unwrap();
        let aut = subspace_automizer(&b2, 3, 5, &Twist::Coxeter).unwrap();
        assert_eq!(aut.subspace.dim(), 1);
        assert_eq!(aut.group.order().unwrap(), 4);
        assert_eq!(crate::reflect::reflections_of(&aut.group).unwrap().len(), 3);
    }

    #[test]
    fn refl_chevalley_checks() {
        let a2 = RootDatum::new(CartanType::A(2)).unwrap();
        let r = check_refl_chevalley(&a2, 8, 7, &Twist::Identity).unwrap();
        assert!(r.pass);
        let r = check_refl_chevalley(&a2, 2, 7, &Twist::Coxeter).unwrap();
        assert!(r.pass);
        assert_eq!((r.subspace_dim, r.order), (1, 3));
        assert!(check_refl_chevalley(&a2, 2, 7, &Twist::Identity).is_err());

        let g2 = RootDatum::new(CartanType::G2).unwrap();
        let r = check_refl_chevalley(&g2, 8, 7, &Twist::Identity).unwrap();
        assert!(r.pass);
        assert_eq!(r.identification, Identification::G2);
        assert!(check_refl_chevalley(&g2, 3, 2, &Twist::Identity).is_err());
    }

    #[test]
    fn rejects_bad_data() {
        assert!("E6".parse::<CartanType>().is_err());
        assert!("A6".parse::<CartanType>().is_err());
        assert_eq!("b3".parse::<CartanType>().unwrap(), CartanType::B(3));
        let b2 = RootDatum::new(CartanType::B(2)).unwrap();
        assert!(b2.with_diagram_automorphism(&[1, 0]).is_err());
        assert!(fixed_dim_scan(&RootDatum::new(CartanType::A(2)).unwrap(), 7, 7).is_err());
    }
}
