//! Finite permutation groups, exhaustive subgroup lattices, and mechanical
//! checks of weak s-supplementation results on a corpus of small groups.
//!
//! Products are read left to right throughout: `xy` applies `x` first.

pub mod arith;
pub mod bitset;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod perm;
pub mod permutability;
pub mod report;
pub mod structure;
pub mod subgroup;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use lattice::{SubgroupId, SubgroupLattice, SylowSet};
pub use group::{CayleyTable, Group, DEFAULT_ORDER_CAP};
pub use perm::Perm;
pub use permutability::{GroupAnalysis, Property, SupplementWitness};
pub use subgroup::{ProductSet, Quotient, Subgroup};
