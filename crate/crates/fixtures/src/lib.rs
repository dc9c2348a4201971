//! Generators for the sporadic groups used by the classification table,
//! each built from a combinatorial or matrix model and verified by order.

pub mod graph;
pub mod hexagon;
pub mod janko;
pub mod mathieu;
