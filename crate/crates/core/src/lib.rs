//! Exact computation with small finite p-groups: Cayley-table
//! construction of the classical families, complete subgroup-lattice
//! enumeration, analytic subgroup counting for abelian groups via
//! partition combinatorics, isomorphism testing, small-order catalogs,
//! and a suite of executable theorem checks over all of it.
//!
//! Everything is exact (arbitrary-precision counts, no floating point)
//! and deterministic: identical inputs produce byte-identical outputs,
//! regardless of how many worker threads the enumeration uses.

pub mod catalog;
pub mod checks;
pub mod counting;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod iso;
pub mod lattice;
pub mod partition;

pub use error::{Error, Result};
pub use group::GroupTable;
pub use groupspec::GroupSpec;
pub use lattice::{SubgroupProfile, SubgroupSet};
pub use partition::Partition;
