//! Specht ideals of the reflection groups of types A, B and D: exact polynomial algebra,
//! signed permutations, the dominance-type posets on (bi/di)partitions, Specht polynomial
//! generators, graded ideal membership, orbit-type varieties and the dihedral case.

pub mod combinat;
pub mod dihedral;
pub mod error;
pub mod exactalg;
pub mod groups;
pub mod ideals;
pub mod identities;
pub mod specht;
pub mod varieties;
pub mod verify;

pub use error::{Error, Result};
