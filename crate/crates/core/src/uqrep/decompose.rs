use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};


use super::rep::{apply_f_word, Rep};
use super::{irrep, Family, IrrepLabel};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightVector {
    pub weight: Vec<i64>,
    pub vector: Vec<QScalar>,
}

/// Basis of the joint kernel of all `E_i`, weight space by weight space.
/// Weights come in lexicographically decreasing order; within a weight the
/// vectors follow the kernel's free-column order. Each vector is scaled so
/// its first nonzero coordinate is 1.
pub fn highest_weight_vectors(r: &Rep) -> Vec<HighestWeightVector> {
    let spaces = r.weight_spaces();
    let mut out = Vec::new();
    for (weight, cols) in spaces.iter().rev() {
        let mut stacked: Vec<Vec<QScalar>> = Vec::new();
        for i in 0..r.algebra.rank() {
            let up: Vec<i64> = weight.iter().zip(r.algebra.simple_root(i)).map(|(a, b)| a + b).collect();
            if let Some(rows) = spaces.get(&up) {
                for &row in rows {
                    stacked.push(cols.iter().map(|&c| r.e[i].get(row, c).clone()).collect());
                }
            }
        }
        let m = if stacked.is_empty() {
            QMatrix::zeros(1, cols.len())
        } else {
            QMatrix::from_rows(stacked).expect("rectangular")
        };
        for v in m.kernel() {
            let coords = v.col_vec(0);
            let lead = coords.iter().find(|c| !c.is_zero()).expect("nonzero kernel vector").inv().unwrap();
            let mut full = vec![QScalar::zero(); r.dim];
            for (&c, x) in cols.iter().zip(&coords) {
                if !x.is_zero() {
                    full[c] = x * &lead;
                }
            }
            out.push(HighestWeightVector { weight: weight.clone(), vector: full });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub label: IrrepLabel,
    pub multiplicity: usize,
    /// One `dim(source) × dim(label)` matrix per copy.
    pub embeddings: Vec<QMatrix>,
}

/// Which copy and which registry basis vector a column of `C` carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnLabel {
    pub constituent: usize,
    pub copy: usize,
    pub basis: usize,
}

/// Complete decomposition `ρ(g) = C · (⊕ ρ_ν(g)) · C⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub source: Rep,
    pub constituents: Vec<Constituent>,
    pub columns: Vec<ColumnLabel>,
    pub c: QMatrix,
    pub cinv: QMatrix,
}

impl Decomposition {
    /// Column index of `(constituent, copy, basis)`.
    pub fn column(&self, constituent: usize, copy: usize, basis: usize) -> usize {
        let mut offset = 0;
        for (i, c) in self.constituents.iter().enumerate() {
            let d = c.label.dim();
            if i == constituent {
                return offset + copy * d + basis;
            }
            offset += c.multiplicity * d;
        }
        panic!("constituent {constituent} out of range")
    }

    pub fn constituent_index(&self, label: &IrrepLabel) -> Option<usize> {
        self.constituents.iter().position(|c| &c.label == label)
    }
}

fn label_for_weight(r: &Rep, weight: &[i64]) -> Result<IrrepLabel> {
    let label = IrrepLabel { algebra: r.algebra, hw: weight.to_vec() };
    label.validate().map_err(|_| {
        let what = match r.algebra.family {
            Family::Sl2 => "dominant",
            Family::Gl => "polynomial",
        };
        Error::Consistency(format!("highest weight {weight:?} is not {what}"))
    })?;
    Ok(label)
}

/// Decomposes a representation built from vector representations into the
/// registry's irreducible models.
pub fn decompose(r: &Rep) -> Result<Decomposition> {
    let hws = highest_weight_vectors(r);
    let mut grouped: BTreeMap<Vec<i64>, Vec<Vec<QScalar>>> = BTreeMap::new();
    for hw in hws {
        grouped.entry(hw.weight).or_default().push(hw.vector);
    }
    let mut constituents = Vec::new();
    let mut columns = Vec::new();
    let mut cols: Vec<Vec<QScalar>> = Vec::new();
    let mut col_weights: Vec<Vec<i64>> = Vec::new();
    for (ci, (weight, vectors)) in grouped.into_iter().rev().enumerate() {
        let label = label_for_weight(r, &weight)?;
        let model = irrep(&label)?;
        let mut embeddings = Vec::new();
        for (copy, v) in vectors.iter().enumerate() {
            let mut emb_cols = Vec::with_capacity(model.words.len());
            for (basis, (word, scale)) in model.words.iter().zip(&model.scales).enumerate() {
                let w = apply_f_word(r, word, v)?;
                let w: Vec<QScalar> = w.iter().map(|x| x * scale).collect();
                if w.iter().all(|x| x.is_zero()) {
                    return Err(Error::Consistency(format!("F-closure of a {label} vector collapsed")));
                }
                emb_cols.push(w.clone());
                cols.push(w);
                col_weights.push(model.rep.weights[basis].clone());
                columns.push(ColumnLabel { constituent: ci, copy, basis });
            }
            embeddings.push(QMatrix::from_fn(r.dim, emb_cols.len(), |row, c| emb_cols[c][row].clone()));
        }
        constituents.push(Constituent { label, multiplicity: vectors.len(), embeddings });
    }
    if cols.len() != r.dim {
        return Err(Error::Consistency(format!(
            "constituent dimensions sum to {} but the representation has dimension {}",
            cols.len(),
            r.dim
        )));
    }
    let c = QMatrix::from_fn(r.dim, r.dim, |row, col| cols[col][row].clone());
    let cinv = block_inverse(&c, &r.weights, &col_weights)?;
    Ok(Decomposition { source: r.clone(), constituents, columns, c, cinv })
}

/// Inverts a weight-preserving change of basis one weight block at a time.
pub(crate) fn block_inverse(c: &QMatrix, row_weights: &[Vec<i64>], col_weights: &[Vec<i64>]) -> Result<QMatrix> {
    let n = c.rows();
    let mut rows_by: BTreeMap<&Vec<i64>, Vec<usize>> = BTreeMap::new();
    let mut cols_by: BTreeMap<&Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, w) in row_weights.iter().enumerate() {
        rows_by.entry(w).or_default().push(i);
    }
    for (i, w) in col_weights.iter().enumerate() {
        cols_by.entry(w).or_default().push(i);
    }
    let mut inv = QMatrix::zeros(n, n);
    for (w, rows) in &rows_by {
        let cols = cols_by.get(w).map(|v| v.as_slice()).unwrap_or(&[]);
        if cols.len() != rows.len() {
            return Err(Error::Consistency(format!("weight {w:?}: {} rows vs {} columns", rows.len(), cols.len())));
        }
        let block = c.select(rows, cols).inverse()?;
        for (i, &col) in cols.iter().enumerate() {
            for (j, &row) in rows.iter().enumerate() {
                inv.set(col, row, block.get(i, j).clone());
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqrep::{tensor_rep, trivial_rep, vector_rep, AlgebraSpec};

    fn power(alg: AlgebraSpec, n: usize) -> Rep {
        let v = vector_rep(alg);
        let mut acc = v.clone();
        for _ in 1..n {
            acc = tensor_rep(&acc, &v).unwrap();
        }
        acc
    }

    #[test]
    fn hw_vectors_of_v_and_vv() {
        let alg = AlgebraSpec::gl(2).unwrap();
        let hv = highest_weight_vectors(&vector_rep(alg));
        assert_eq!(hv.len(), 1);
        assert_eq!(hv[0].weight, vec![1, 0]);
        assert_eq!(hv[0].vector, vec![1.into(), 0.into()]);

        let hv = highest_weight_vectors(&power(alg, 2));
        assert_eq!(hv.len(), 2);
        assert_eq!(hv[0].weight, vec![2, 0]);
        assert_eq!(hv[0].vector, vec![1.into(), 0.into(), 0.into(), 0.into()]);
        assert_eq!(hv[1].weight, vec![1, 1]);
        assert_eq!(hv[1].vector, vec![0.into(), 1.into(), -QScalar::q(), 0.into()]);
    }

    #[test]
    fn decompose_vv_gl2() {
        let alg = AlgebraSpec::gl(2).unwrap();
        let d = decompose(&power(alg, 2)).unwrap();
        let summary: Vec<_> = d.constituents.iter().map(|c| (c.label.hw.clone(), c.multiplicity)).collect();
        assert_eq!(summary, vec![(vec![2, 0], 1), (vec![1, 1], 1)]);
        assert!(d.c.mul(&d.cinv).unwrap().is_identity());
    }

    #[test]
    fn decompose_with_trivial_is_identity() {
        let alg = AlgebraSpec::gl(2).unwrap();
        let r = tensor_rep(&vector_rep(alg), &trivial_rep(alg)).unwrap();
        let d = decompose(&r).unwrap();
        assert_eq!(d.constituents.len(), 1);
        assert!(d.c.is_identity());
    }

    #[test]
    fn v_cubed_gl3_multiplicities() {
        let alg = AlgebraSpec::gl(3).unwrap();
        let d = decompose(&power(alg, 3)).unwrap();
        let summary: Vec<_> = d.constituents.iter().map(|c| (c.label.hw.clone(), c.multiplicity)).collect();
        assert_eq!(summary, vec![(vec![3, 0, 0], 1), (vec![2, 1, 0], 2), (vec![1, 1, 1], 1)]);
    }
}
