//! Schur-Weyl realization of `O_q(M_k)` as Hecke-equivariant functionals on
//! `V^{⊗n}`, with the projection π onto them and the quadratic relations
//! they imply.

mod classical;
mod decomp;
mod frt;
mod functional;
mod rhat;

pub use classical::classical_symmetrizer;
pub use decomp::{schur_weyl_decompose, tensor_power_rep, Isotypic, IsotypicSummary, SWDecomp, SWSummary, SchurWeyl};
pub use frt::{degree_two_products, frt_relations, frt_relations_in, FrtDoc, FrtReport, Relation, RelationDoc, Residual, TermDoc};
pub use functional::{flatten, FlatPair, FunctionalElement, FunctionalTensor};
pub use rhat::{flip, hecke_generators, q_involution, r_matrix, rhat, RhatData};

use crate::error::Result;
use crate::exactmath::{QMatrix, QScalar};

/// `(1 + Q^{-T} ⊗ Q)/2`, the n = 2 projection written through the
/// involution: `Q^{-T}` on the dual square, `Q` on `V⊗V`.
pub fn pi_from_involution(k: usize) -> Result<QMatrix> {
    let q = q_involution(k)?;
    let dual = q.inverse()?.transpose();
    let both = dual.kron(&q);
    let half = QScalar::from_ratio(1, 2)?;
    QMatrix::identity(both.rows()).add(&both).map(|m| m.scale(&half))
}

#[cfg(test)]
mod tests;
