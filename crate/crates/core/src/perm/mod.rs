//! Permutations, stabilizer chains and permutation groups.

mod chain;
mod group;
mod permutation;

pub use chain::{ChainLimits, StabChain};
pub use group::{PermGroup, ProductReplacer};
pub use permutation::{p_part_of_element, Permutation};
