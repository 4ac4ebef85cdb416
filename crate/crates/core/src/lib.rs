//! Computational workbench for the 2-modular representation theory of
//! symmetric groups: exact GF(2) linear algebra, permutation/Specht/
//! irreducible module constructions, branching functors, a MeatAxe for
//! structural analysis, Brauer characters, and batch verification of a
//! catalog of structural facts together with the classification of
//! irreducible tensor products.

pub mod cache;
pub mod chars;
pub mod expr;
pub mod functors;
pub mod gf2;
pub mod group;
pub mod lemmas;
pub mod meataxe;
pub mod module;
pub mod partition;
pub mod report;
pub mod specht;
pub mod sweep;

pub use gf2::{GF2Matrix, Rng, Subspace};
pub use module::{Group, Module};
pub use partition::Partition;
