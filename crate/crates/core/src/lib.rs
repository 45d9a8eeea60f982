//! Finite group computations: permutation groups, class algebras, formed
//! spaces over small fields, commuting graphs and loop folders.

pub mod arith;
pub mod classalgebra;
pub mod commgraph;
pub mod error;
pub mod gfq;
pub mod loopfolder;
pub mod perm;
pub mod permgroup;
pub mod verifier;

pub use error::{Error, Result};
pub use perm::Permutation;
