//! Valid involutions, quotient singularities and topological invariants of
//! Fujiki orbifolds `S(G)θ^[n]` built from finite symplectic automorphism
//! groups of K3 surfaces.
//!
//! * [`permcore`] — permutations and finite permutation groups.
//! * [`involutions`] — valid involutions, their enumeration and classification.
//! * [`fixedpoints`] — fixed-point combinatorics of the Fujiki construction.
//! * [`singularities`] — counts of isolated quotient singularities.
//! * [`invariants`] — Betti and Chern numbers and the rationality check.
//! * [`catalog`] — curated group data and reference tables.

pub mod catalog;
pub mod fixedpoints;
pub mod invariants;
pub mod involutions;
pub mod permcore;
pub mod singularities;

pub use catalog::{load_catalog, Catalog, CatalogEntry, CatalogError, ComputedRow};
pub use fixedpoints::FujikiInput;
pub use invariants::{InvariantSet, Rational, Verification};
pub use involutions::{GroupInvolution, InvolutionError};
pub use permcore::{GroupTable, Perm, PermError};
pub use singularities::SingularityProfile;
