use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};

/// `R = q Σ e_ii⊗e_ii + Σ_{i≠j} e_ii⊗e_jj + (q − q⁻¹) Σ_{i>j} e_ij⊗e_ji`
/// on `V⊗V`, basis index `i·k + j` for `e_i ⊗ e_j`.
pub fn r_matrix(k: usize) -> QMatrix {
    let n = k * k;
    let mut r = QMatrix::zeros(n, n);
    let gap = QScalar::laurent(&[(1, 1), (-1, -1)]);
    for i in 0..k {
        for j in 0..k {
            let idx = i * k + j;
            r.set(idx, idx, if i == j { QScalar::q() } else { QScalar::one() });
            if i > j {
                // e_ij ⊗ e_ji sends e_j ⊗ e_i to e_i ⊗ e_j.
                r.set(i * k + j, j * k + i, gap.clone());
            }
        }
    }
    r
}

/// The flip `σ(e_i ⊗ e_j) = e_j ⊗ e_i`.
pub fn flip(k: usize) -> QMatrix {
    let n = k * k;
    let mut s = QMatrix::zeros(n, n);
    for i in 0..k {
        for j in 0..k {
            s.set(j * k + i, i * k + j, QScalar::one());
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhatData {
    pub k: usize,
    pub r: QMatrix,
    /// `R̂ = σ∘R`.
    pub matrix: QMatrix,
    pub sym_projector: QMatrix,
    pub alt_projector: QMatrix,
}

pub fn rhat(k: usize) -> Result<RhatData> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("R-matrix needs k >= 2, got {k}")));
    }
    let r = r_matrix(k);
    let matrix = flip(k).mul(&r)?;
    let n = k * k;
    let id = QMatrix::identity(n);
    let q = QScalar::q();
    let qi = QScalar::q_pow(-1);
    let norm = (&q + &qi).inv()?;
    let sym_projector = matrix.add(&id.scale(&qi))?.scale(&norm);
    let alt_projector = id.scale(&q).sub(&matrix)?.scale(&norm);
    Ok(RhatData { k, r, matrix, sym_projector, alt_projector })
}

/// `T_i = I^{⊗(i−1)} ⊗ R̂ ⊗ I^{⊗(n−i−1)}` for `i = 1..n−1`.
pub fn hecke_generators(k: usize, n: usize) -> Result<Vec<QMatrix>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Hecke generators need n >= 2, got {n}")));
    }
    let rh = rhat(k)?.matrix;
    Ok((0..n - 1)
        .map(|i| {
            let left = QMatrix::identity(k.pow(i as u32));
            let right = QMatrix::identity(k.pow((n - i - 2) as u32));
            left.kron(&rh).kron(&right)
        })
        .collect())
}

/// `Q = sym − alt` on `V⊗V`; an involution specializing to the flip.
pub fn q_involution(k: usize) -> Result<QMatrix> {
    let d = rhat(k)?;
    d.sym_projector.sub(&d.alt_projector)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_matches_the_displayed_r() {
        let r = r_matrix(2);
        let gap: QScalar = "q-q^-1".parse().unwrap();
        let expected = QMatrix::from_rows(vec![
            vec![QScalar::q(), 0.into(), 0.into(), 0.into()],
            vec![0.into(), 1.into(), 0.into(), 0.into()],
            vec![0.into(), gap, 1.into(), 0.into()],
            vec![0.into(), 0.into(), 0.into(), QScalar::q()],
        ])
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn hecke_quadratic_and_projectors() {
        for k in 2..=3 {
            let d = rhat(k).unwrap();
            let n = k * k;
            let id = QMatrix::identity(n);
            let a = d.matrix.sub(&id.scale(&QScalar::q())).unwrap();
            let b = d.matrix.add(&id.scale(&QScalar::q_pow(-1))).unwrap();
            assert!(a.mul(&b).unwrap().is_zero());
            assert_eq!(d.sym_projector.add(&d.alt_projector).unwrap(), id);
            assert_eq!(d.sym_projector.mul(&d.sym_projector).unwrap(), d.sym_projector);
            assert_eq!(d.alt_projector.mul(&d.alt_projector).unwrap(), d.alt_projector);
            let rebuilt = d.sym_projector.scale(&QScalar::q()).sub(&d.alt_projector.scale(&QScalar::q_pow(-1))).unwrap();
            assert_eq!(rebuilt, d.matrix);
        }
    }

    #[test]
    fn eigenvalue_multiplicities_and_classical_limit() {
        let d = rhat(2).unwrap();
        assert_eq!(d.sym_projector.rank(), 3);
        assert_eq!(d.alt_projector.rank(), 1);
        let at_one = d.matrix.eval_at_one().unwrap();
        let sigma = flip(2).eval_at_one().unwrap();
        assert_eq!(at_one, sigma);
    }

    #[test]
    fn q_is_an_involution() {
        let q = q_involution(2).unwrap();
        assert!(q.mul(&q).unwrap().is_identity());
        assert_eq!(q.eval_at_one().unwrap(), flip(2).eval_at_one().unwrap());
    }

    #[test]
    fn braid_relation() {
        for k in 2..=3 {
            let t = hecke_generators(k, 3).unwrap();
            let l = t[0].mul(&t[1]).unwrap().mul(&t[0]).unwrap();
            let r = t[1].mul(&t[0]).unwrap().mul(&t[1]).unwrap();
            assert_eq!(l, r);
        }
        assert!(hecke_generators(2, 1).is_err());
    }
}
