//! Automizers of abelian Sylow subgroups, modular reflection groups and
//! Schur-multiplier obstructions, computed on concrete finite groups.

pub mod error;
pub mod ffmat;
pub mod automizer;
pub mod catalog;
pub mod cohom;
pub mod groupalgo;
pub mod numth;
pub mod perm;
pub mod reflect;
pub mod semilinear;
pub mod weylmod;

pub use error::{Error, Result};
