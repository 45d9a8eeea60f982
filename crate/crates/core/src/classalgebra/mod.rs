//! Class algebras of finite groups: exact cyclotomic character values,
//! validated character tables, class multiplication coefficients computed
//! from tables and by pair counting, and involution-inversion queries.

mod cyclo;
mod inversion;
mod structconst;
mod table;

pub use cyclo::{Cyclotomic, Rational};
pub use inversion::{inversion_table, inversion_witness, inverts, ClassLabel, InversionTable};
pub use structconst::{
    match_classes, structure_constant_brute, structure_constant_char, ClassAlgebra, GroupClassAlgebra,
    StructureConstantTensor,
};
pub use table::{ingest_table, shipped, shipped_names, CharacterTable, TableClass};
