//! The quantized function algebra `O_q(G)` in the Peter-Weyl basis.
//!
//! Products contract a 3j symbol against a dual 3j symbol per constituent.
//! Coproducts only use integer matrix-unit constants.

mod algebra;
mod element;
mod hopf;
pub mod pbw;

pub use algebra::{
    comultiply, coproduct_constants, counit, counit_leg, labels_up_to, multiply, pairing, specialize_q1,
    structure_constants, tensor_pairing, ClassicalEntry, ClassicalKey, ClassicalTable, ClassicalTerm, CoproductConstant, Corruption, OqAlgebra,
    ProductTerm, StructureEntry, StructureTable,
};
pub use element::{PWElement, PWSymbol, PWTensor};
pub use hopf::{random_element, random_scalar, verify_hopf, verify_hopf_on, HopfFailure, HopfReport};
