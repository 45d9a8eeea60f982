//! Linear algebra over GF(2), GF(4), GF(8) and GF(16): formed spaces,
//! classical groups, semisimple decompositions and centralizer orders.

pub mod centralizer;
pub mod classical;
pub mod decompose;
pub mod field;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod survey;

pub use centralizer::{centralizer_order_formula, unitary_order3_centralizer};
pub use classical::ClassicalKind;
pub use decompose::{
    commutator_space, decompose_under, fixed_space, validate_decomposition, SemisimpleDecomposition,
    Summand, SummandKind, ValidationReport,
};
pub use field::{Elem, Field};
pub use forms::{FormKind, FormedSpace};
pub use linalg::{Matrix, Poly, Vector};
