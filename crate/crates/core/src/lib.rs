//! Numerical semigroups: factorizations, Apéry sets, Betti elements and the
//! set of elements with a unique factorization length, with closed forms for
//! `<a, a+1, a+2>` and for arithmetic sequences.

pub mod arith;
pub mod error;
pub mod render;
pub mod semigroup;
pub mod triple;
pub mod verify;

pub use arith::ArithSemigroup;
pub use error::{Error, Result};
pub use render::{monomial_table, partition_table, MonomialTable, PartitionTable};
pub use semigroup::{
    enumerate_factorizations, minimal_generators, BettiClassification, Factorization,
    FactorizationGraph, Presentation, Semigroup,
};
pub use triple::{MonomialStyle, SeedDescriptor, TripleDecomposition, TripleSemigroup, UlfElement};
