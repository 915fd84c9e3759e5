//! Clebsch-Gordan embeddings `V_ν → V_λ ⊗ V_μ`, 3j symbols and their duals.
//!
//! With `C` the matrix whose columns are the embedded registry bases, a
//! 3j symbol is an entry of `C⁻¹` (coordinates of `X₁⊗X₂` in the `φ_k(X₃)`
//! basis) and a dual 3j symbol is an entry of `C`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};
use crate::uqrep::{block_inverse, decompose, irrep, tensor_rep, AlgebraSpec, IrrepLabel};

/// A module map `V_ν → V_λ ⊗ V_μ`, the `k`-th of its kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub lambda: IrrepLabel,
    pub mu: IrrepLabel,
    pub nu: IrrepLabel,
    pub k: usize,
    pub matrix: QMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgBlock {
    pub nu: IrrepLabel,
    pub multiplicity: usize,
    /// First column of this block in `C`.
    pub offset: usize,
}

/// Full change of basis for `V_λ ⊗ V_μ` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgBasis {
    pub lambda: IrrepLabel,
    pub mu: IrrepLabel,
    pub blocks: Vec<CgBlock>,
    pub c: QMatrix,
    pub cinv: QMatrix,
}

impl CgBasis {
    /// The canonical basis from decomposing `irrep(λ) ⊗ irrep(μ)`.
    pub fn new(lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<Self> {
        lambda.algebra.check_same(&mu.algebra)?;
        let rl = irrep(lambda)?;
        let rm = irrep(mu)?;
        let d = decompose(&tensor_rep(&rl.rep, &rm.rep)?)?;
        let mut blocks = Vec::new();
        let mut offset = 0;
        for c in &d.constituents {
            blocks.push(CgBlock { nu: c.label.clone(), multiplicity: c.multiplicity, offset });
            offset += c.multiplicity * c.label.dim();
        }
        Ok(CgBasis { lambda: lambda.clone(), mu: mu.clone(), blocks, c: d.c, cinv: d.cinv })
    }

    /// Assembles `C` from an arbitrary complete set of embeddings, grouped by
    /// `ν` in order of first appearance, and inverts it.
    pub fn from_embeddings(lambda: &IrrepLabel, mu: &IrrepLabel, embs: &[Embedding]) -> Result<Self> {
        let dim = lambda.dim() * mu.dim();
        let mut order: Vec<IrrepLabel> = Vec::new();
        for e in embs {
            if &e.lambda != lambda || &e.mu != mu {
                return Err(Error::InvalidArgument(format!(
                    "embedding into {}⊗{} given for {lambda}⊗{mu}",
                    e.lambda, e.mu
                )));
            }
            if !order.contains(&e.nu) {
                order.push(e.nu.clone());
            }
        }
        let rl = irrep(lambda)?;
        let rm = irrep(mu)?;
        let mut row_weights = Vec::with_capacity(dim);
        for wl in &rl.rep.weights {
            for wm in &rm.rep.weights {
                row_weights.push(wl.iter().zip(wm).map(|(a, b)| a + b).collect::<Vec<i64>>());
            }
        }
        let mut cols: Vec<Vec<QScalar>> = Vec::with_capacity(dim);
        let mut col_weights = Vec::with_capacity(dim);
        let mut blocks = Vec::new();
        for nu in order {
            let model = irrep(&nu)?;
            let mut copies: Vec<&Embedding> = embs.iter().filter(|e| e.nu == nu).collect();
            copies.sort_by_key(|e| e.k);
            blocks.push(CgBlock { nu: nu.clone(), multiplicity: copies.len(), offset: cols.len() });
            for e in copies {
                if e.matrix.rows() != dim || e.matrix.cols() != nu.dim() {
                    return Err(Error::DimensionMismatch(format!("embedding of {nu} has wrong shape")));
                }
                for b in 0..nu.dim() {
                    cols.push(e.matrix.col_vec(b));
                    col_weights.push(model.rep.weights[b].clone());
                }
            }
        }
        if cols.len() != dim {
            return Err(Error::DimensionMismatch(format!("{} embedded columns for dimension {dim}", cols.len())));
        }
        let c = QMatrix::from_fn(dim, dim, |r, col| cols[col][r].clone());
        let cinv = block_inverse(&c, &row_weights, &col_weights)?;
        Ok(CgBasis { lambda: lambda.clone(), mu: mu.clone(), blocks, c, cinv })
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.lambda.algebra
    }

    /// Row of `C` (and column of `C⁻¹`) for the basis tensor `b₁ ⊗ b₂`.
    pub fn pair_index(&self, b1: usize, b2: usize) -> usize {
        b1 * self.mu.dim() + b2
    }

    pub fn column(&self, block: usize, k: usize, b: usize) -> usize {
        let blk = &self.blocks[block];
        blk.offset + k * blk.nu.dim() + b
    }

    pub fn embeddings(&self) -> Vec<Embedding> {
        let mut out = Vec::new();
        for blk in &self.blocks {
            let d = blk.nu.dim();
            for k in 0..blk.multiplicity {
                let start = blk.offset + k * d;
                let cols: Vec<usize> = (start..start + d).collect();
                let rows: Vec<usize> = (0..self.c.rows()).collect();
                out.push(Embedding {
                    lambda: self.lambda.clone(),
                    mu: self.mu.clone(),
                    nu: blk.nu.clone(),
                    k,
                    matrix: self.c.select(&rows, &cols),
                });
            }
        }
        out
    }

    /// The bracketed sum `Σ_k C[(i₁,i₂),(ν,k,a)] · C⁻¹[(ν,k,b),(j₁,j₂)]`,
    /// i.e. the coefficient of `f^ν_{ab}` in `f^λ_{i₁j₁} f^μ_{i₂j₂}`, for all
    /// blocks at once. Zero coefficients are omitted.
    pub fn product(&self, i1: usize, j1: usize, i2: usize, j2: usize) -> Vec<(usize, usize, usize, QScalar)> {
        let row = self.pair_index(i1, i2);
        let col = self.pair_index(j1, j2);
        let mut out = Vec::new();
        for (bi, blk) in self.blocks.iter().enumerate() {
            let d = blk.nu.dim();
            let mut acc = vec![QScalar::zero(); d * d];
            let mut touched = false;
            for k in 0..blk.multiplicity {
                let base = blk.offset + k * d;
                let left: Vec<(usize, &QScalar)> =
                    (0..d).map(|a| (a, self.c.get(row, base + a))).filter(|(_, x)| !x.is_zero()).collect();
                if left.is_empty() {
                    continue;
                }
                let right: Vec<(usize, &QScalar)> =
                    (0..d).map(|b| (b, self.cinv.get(base + b, col))).filter(|(_, x)| !x.is_zero()).collect();
                for &(a, x) in &left {
                    for &(b, y) in &right {
                        acc[a * d + b] += x * y;
                        touched = true;
                    }
                }
            }
            if touched {
                for (idx, v) in acc.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.push((bi, idx / d, idx % d, v));
                    }
                }
            }
        }
        out
    }
}

/// All embeddings of constituents of `irrep(λ) ⊗ irrep(μ)`, ordered by
/// `ν` lexicographically decreasing, then copy index.
pub fn embeddings(lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<Vec<Embedding>> {
    Ok(CgBasis::new(lambda, mu)?.embeddings())
}

/// One symbol `(λ μ ν; b₁ b₂ b₃)_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeJEntry {
    pub nu: Vec<i64>,
    pub k: usize,
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub value: QScalar,
}

/// 3j symbols (entries of `C⁻¹`) and dual 3j symbols (entries of `C`),
/// sorted by `(ν descending, k, b₁, b₂, b₃)`, zeros omitted. Indices are
/// 0-based positions in the registry bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeJTable {
    pub algebra: AlgebraSpec,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub entries: Vec<ThreeJEntry>,
    pub dual_entries: Vec<ThreeJEntry>,
}

impl ThreeJTable {
    pub fn from_basis(cg: &CgBasis) -> Self {
        let mut entries = Vec::new();
        let mut dual_entries = Vec::new();
        for (bi, blk) in cg.blocks.iter().enumerate() {
            for k in 0..blk.multiplicity {
                for b1 in 0..cg.lambda.dim() {
                    for b2 in 0..cg.mu.dim() {
                        let pair = cg.pair_index(b1, b2);
                        for b3 in 0..blk.nu.dim() {
                            let col = cg.column(bi, k, b3);
                            let mk = |value: &QScalar| ThreeJEntry {
                                nu: blk.nu.hw.clone(),
                                k,
                                b1,
                                b2,
                                b3,
                                value: value.clone(),
                            };
                            let v = cg.cinv.get(col, pair);
                            if !v.is_zero() {
                                entries.push(mk(v));
                            }
                            let v = cg.c.get(pair, col);
                            if !v.is_zero() {
                                dual_entries.push(mk(v));
                            }
                        }
                    }
                }
            }
        }
        ThreeJTable { algebra: cg.algebra(), lambda: cg.lambda.hw.clone(), mu: cg.mu.hw.clone(), entries, dual_entries }
    }

    /// Value of the 3j symbol, zero when absent.
    pub fn get(&self, nu: &[i64], k: usize, b1: usize, b2: usize, b3: usize) -> QScalar {
        lookup(&self.entries, nu, k, b1, b2, b3)
    }

    pub fn get_dual(&self, nu: &[i64], k: usize, b1: usize, b2: usize, b3: usize) -> QScalar {
        lookup(&self.dual_entries, nu, k, b1, b2, b3)
    }
}

fn lookup(list: &[ThreeJEntry], nu: &[i64], k: usize, b1: usize, b2: usize, b3: usize) -> QScalar {
    list.iter()
        .find(|e| e.nu == nu && e.k == k && e.b1 == b1 && e.b2 == b2 && e.b3 == b3)
        .map(|e| e.value.clone())
        .unwrap_or_default()
}

pub fn threej(lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<ThreeJTable> {
    Ok(ThreeJTable::from_basis(&CgBasis::new(lambda, mu)?))
}

/// `φ'_j = Σ_k g[k][j] φ_k` within one `(λ, μ, ν)` multiplicity space.
pub fn change_multiplicity_basis(embs: &[Embedding], g: &QMatrix) -> Result<Vec<Embedding>> {
    let c = embs.len();
    if g.rows() != c || g.cols() != c {
        return Err(Error::DimensionMismatch(format!("need a {c}×{c} matrix, got {}×{}", g.rows(), g.cols())));
    }
    if c == 0 {
        return Ok(Vec::new());
    }
    if g.rank() < c {
        return Err(Error::Singular);
    }
    let first = &embs[0];
    if embs.iter().any(|e| e.lambda != first.lambda || e.mu != first.mu || e.nu != first.nu) {
        return Err(Error::InvalidArgument("embeddings belong to different (λ, μ, ν)".into()));
    }
    let mut sorted: Vec<&Embedding> = embs.iter().collect();
    sorted.sort_by_key(|e| e.k);
    let mut out = Vec::with_capacity(c);
    for j in 0..c {
        let mut m = QMatrix::zeros(first.matrix.rows(), first.matrix.cols());
        for (k, e) in sorted.iter().enumerate() {
            let coeff = g.get(k, j);
            if !coeff.is_zero() {
                m = m.add(&e.matrix.scale(coeff))?;
            }
        }
        out.push(Embedding { lambda: first.lambda.clone(), mu: first.mu.clone(), nu: first.nu.clone(), k: j, matrix: m });
    }
    Ok(out)
}
