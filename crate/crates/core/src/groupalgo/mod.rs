//! Orbits, stabilizers, normalizers, centralizers and Sylow subgroups of
//! permutation groups.

pub mod abelian;
pub mod construct;
pub mod orbit;
pub mod subgroup;
pub mod sylow;

pub use abelian::{abelian_structure, AbelianInvariants, AbelianPStructure};
pub use orbit::{orbit, point_orbit, stabilizer, Orbit, DEFAULT_ORBIT_CAP};
pub use subgroup::{
    centralizer_of_element, centralizer_of_subgroup, normalizer_of_subgroup, ElementKeyer,
    Normalizer, MAX_KEYED_SUBGROUP,
};
pub use sylow::{sylow_subgroup, DEFAULT_SYLOW_RESTARTS};
