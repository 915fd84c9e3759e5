//! Exact computations in quantized function algebras `O_q(G)` for
//! `G = SL₂` and `GL_k`, presented in the Peter-Weyl basis of matrix
//! coefficients and carried out over the field `Q(q)`.
//!
//! * [`exactmath`]: canonical elements of `Q(q)` and exact linear algebra.
//! * [`uqrep`]: type-1 representations of `U_q(sl₂)` and `U_q(gl_k)`.
//! * [`clebsch`]: Clebsch-Gordan decompositions and 3j symbols.
//! * [`ofun`]: the bialgebra structure of `O_q(G)`.
//! * [`schurweyl`]: the Schur-Weyl model of `O_q(M_k)` built from Hecke
//!   actions on `V^{⊗n}`.
//! * [`cli`]: the `peterweyl` command-line tool.

pub mod clebsch;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod ofun;
pub mod schurweyl;
pub mod uqrep;

pub use error::{Error, Result};
