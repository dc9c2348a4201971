use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groupalgo::construct::{alternating, cyclic, direct_product, symmetric, wreath_product};
use crate::numth::{is_power_of, is_prime, log_p, p_part};
use crate::perm::PermGroup;

use super::ingest::ingest_generators;
use super::linear::{projective_group, LinearFamily};

/// A group description accepted on the command line.
///
/// Grammar: `Sym:n`, `Alt:n`, `Cyclic:n`, `PSL2:q`, `PGL2:q`, `PSigmaL2:q`,
/// `PGammaL2:q`, `PSL3:q`, `Wreath:r:<atom>`, `File:<path>`, a fixture name
/// such as `M11` or `HS.2`, and products `A*B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    Linear(LinearFamily, u64),
    Wreath(usize, Box<GroupSpec>),
    File(PathBuf),
    Named(String),
    Product(Vec<GroupSpec>),
}

fn parse_num<T: FromStr>(s: &str, whole: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::UnknownGroupSpec(whole.to_string()))
}

fn prime_power(q: u64, whole: &str) -> Result<u64> {
    let p = (2..=q).find(|&d| q.is_multiple_of(d) && is_prime(d)).unwrap_or(0);
    if q < 2 || !is_power_of(q, p) {
        return Err(Error::UnknownGroupSpec(format!("{whole}: {q} is not a prime power")));
    }
    Ok(q)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('*') {
            let parts = s.split('*').map(GroupSpec::from_str).collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Product(parts));
        }
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        let family = |f: LinearFamily| -> Result<GroupSpec> { Ok(GroupSpec::Linear(f, prime_power(parse_num(rest, s)?, s)?)) };
        match head {
            "Sym" | "S" => Ok(GroupSpec::Sym(parse_num(rest, s)?)),
            "Alt" | "A" => Ok(GroupSpec::Alt(parse_num(rest, s)?)),
            "Cyclic" | "C" => Ok(GroupSpec::Cyclic(parse_num(rest, s)?)),
            "PSL2" => family(LinearFamily::Psl2),
            "PGL2" => family(LinearFamily::Pgl2),
            "PSigmaL2" => family(LinearFamily::PSigmaL2),
            "PGammaL2" => family(LinearFamily::PGammaL2),
            "PSL3" => family(LinearFamily::Psl3),
            "Wreath" => {
                let (r, atom) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::UnknownGroupSpec(s.to_string()))?;
                Ok(GroupSpec::Wreath(parse_num(r, s)?, Box::new(atom.parse()?)))
            }
            "File" if !rest.is_empty() => Ok(GroupSpec::File(PathBuf::from(rest))),
            _ if rest.is_empty() && !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '.' || c == '_') => {
                Ok(GroupSpec::Named(s.to_string()))
            }
            _ => Err(Error::UnknownGroupSpec(s.to_string())),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "Sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "Alt:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "Cyclic:{n}"),
            GroupSpec::Linear(fam, q) => write!(f, "{fam}:{q}"),
            GroupSpec::Wreath(r, a) => write!(f, "Wreath:{r}:{a}"),
            GroupSpec::File(p) => write!(f, "File:{}", p.display()),
            GroupSpec::Named(n) => write!(f, "{n}"),
            GroupSpec::Product(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("*"))
            }
        }
    }
}

/// How `PSL2:q` is replaced by `H̃` with `H̃/H` a Hall p′-subgroup of `Out(H)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HallExtension {
    /// Extend `PSL2:q` only.
    #[default]
    Auto,
    Off,
    /// Extend, and fail for specs with no documented extension.
    On,
}

/// Fixture file for a name: `.` becomes `_`, suffix `.gens`.
pub fn fixture_path(data_dir: &Path, name: &str) -> PathBuf {
    data_dir.join(format!("{}.gens", name.replace('.', "_")))
}

impl GroupSpec {
    pub fn construct(&self, data_dir: Option<&Path>) -> Result<PermGroup> {
        Ok(match self {
            GroupSpec::Sym(n) => symmetric(*n),
            GroupSpec::Alt(n) => alternating(*n),
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Linear(fam, q) => projective_group(*fam, *q)?,
            GroupSpec::Wreath(r, a) => wreath_product(&a.construct(data_dir)?, *r),
            GroupSpec::File(path) => ingest_generators(path)?,
            GroupSpec::Named(name) => {
                let dir = data_dir.ok_or_else(|| {
                    Error::UnknownGroupSpec(format!("{name}: no data directory configured"))
                })?;
                ingest_generators(&fixture_path(dir, name))?
            }
            GroupSpec::Product(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| Error::UnknownGroupSpec("empty product".into()))?;
                let mut g = first.construct(data_dir)?;
                for part in it {
                    g = direct_product(&g, &part.construct(data_dir)?);
                }
                g
            }
        })
    }

    /// The group to analyze at `p`: `PSL2:q` becomes `PSL₂(q) ⋊ ⟨δ, φ^{n_p}⟩`
    /// with `δ` the diagonal automorphism when `p ≠ 2` and `q` odd, and
    /// `n_p` the `p`-part of `n = log_r q`.
    pub fn for_prime(&self, p: u64, hall: HallExtension) -> Result<GroupSpec> {
        match (self, hall) {
            (_, HallExtension::Off) => Ok(self.clone()),
            (GroupSpec::Linear(LinearFamily::Psl2, q), _) => {
                let r = (2..=*q).find(|&d| q % d == 0 && is_prime(d)).expect("prime power");
                let n = log_p(*q, r) as u64;
                let with_delta = r != 2 && p != 2;
                let with_phi = n / p_part(n, p) > 1;
                let fam = match (with_delta, with_phi) {
                    (false, false) => LinearFamily::Psl2,
                    (true, false) => LinearFamily::Pgl2,
                    (false, true) => LinearFamily::PSigmaL2,
                    (true, true) => LinearFamily::PGammaL2,
                };
                if with_phi && n / p_part(n, p) != n {
                    return Err(Error::UnknownGroupSpec(format!(
                        "{self}: Hall {p}′-extension by a proper power of the Frobenius is not implemented"
                    )));
                }
                Ok(GroupSpec::Linear(fam, *q))
            }
            (_, HallExtension::Auto) => Ok(self.clone()),
            (_, HallExtension::On) => Err(Error::UnknownGroupSpec(format!(
                "{self}: no Hall extension is documented for this spec"
            ))),
        }
    }

    /// `Some(n)` for a `PSL₂(p^n)` family member analyzed in its defining
    /// characteristic `p` whose automizer contains `F_{p^n}^×`, i.e. all but
    /// `PSL₂(q)` and `PΣL₂(q)` with `q` odd.
    pub fn field_degree_hint(&self, p: u64) -> Option<u32> {
        match self {
            GroupSpec::Linear(fam, q) if fam.dimension() == 2 && q % p == 0 => {
                let full_torus = p == 2 || matches!(fam, LinearFamily::Pgl2 | LinearFamily::PGammaL2);
                full_torus.then(|| log_p(*q, p))
            }
            _ => None,
        }
    }

    pub fn factors(&self) -> Vec<GroupSpec> {
        match self {
            GroupSpec::Product(parts) => parts.clone(),
            s => vec![s.clone()],
        }
    }
}
