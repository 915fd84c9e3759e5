//! Independent q = 1 reference: classical U(sl2) and U(gl2) modules over
//! BigRational with the primitive coproduct and a separate elimination
//! routine. Shares nothing with the library except the number type.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<BigRational>>;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![BigRational::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca, rb, cb) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect()
}

/// Gauss-Jordan with row swaps; returns (reduced matrix, pivot columns).
pub fn reduce(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

pub fn kernel(m: &Mat, cols: usize) -> Vec<Vec<BigRational>> {
    if m.is_empty() {
        return (0..cols).map(|i| (0..cols).map(|j| if i == j { int(1) } else { int(0) }).collect()).collect();
    }
    let (r, pivots) = reduce(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &Mat) -> Mat {
    let n = m.len();
    let aug: Mat = m.iter().zip(identity(n)).map(|(row, id)| row.iter().cloned().chain(id).collect()).collect();
    let (r, pivots) = reduce(&aug);
    assert_eq!(&pivots[..], &(0..n).collect::<Vec<_>>()[..], "singular");
    r.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// A module of a rank-one Lie algebra: one raising and one lowering operator
/// plus the weight of every basis vector.
#[derive(Clone, Debug)]
pub struct ClassicalRep {
    pub weights: Vec<Vec<i64>>,
    pub e: Mat,
    pub f: Mat,
}

impl ClassicalRep {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// `L(n)` of sl2 on `v_0..v_n`: `E v_m = m v_{m-1}`, `F v_m = (n-m) v_{m+1}`.
pub fn sl2_irrep(n: i64) -> ClassicalRep {
    let d = (n + 1) as usize;
    let mut e = zeros(d, d);
    let mut f = zeros(d, d);
    for m in 0..d {
        if m > 0 {
            e[m - 1][m] = int(m as i64);
        }
        if m + 1 < d {
            f[m + 1][m] = int(n - m as i64);
        }
    }
    ClassicalRep { weights: (0..d).map(|m| vec![n - 2 * m as i64]).collect(), e, f }
}

/// `L(a, b)` of gl2 on `v_0..v_{a-b}`: `F v_m = v_{m+1}`,
/// `E v_m = m(a-b-m+1) v_{m-1}`.
pub fn gl2_irrep(a: i64, b: i64) -> ClassicalRep {
    let n = a - b;
    let d = (n + 1) as usize;
    let mut e = zeros(d, d);
    let mut f = zeros(d, d);
    for m in 0..d {
        let mi = m as i64;
        if m > 0 {
            e[m - 1][m] = int(mi * (n - mi + 1));
        }
        if m + 1 < d {
            f[m + 1][m] = int(1);
        }
    }
    ClassicalRep { weights: (0..d).map(|m| vec![a - m as i64, b + m as i64]).collect(), e, f }
}

pub fn irrep(hw: &[i64]) -> ClassicalRep {
    match hw {
        [n] => sl2_irrep(*n),
        [a, b] => gl2_irrep(*a, *b),
        _ => panic!("rank-one labels only"),
    }
}

/// `A ⊗ B` with `X ↦ X⊗1 + 1⊗X`, first factor major.
pub fn tensor(a: &ClassicalRep, b: &ClassicalRep) -> ClassicalRep {
    let (ia, ib) = (identity(a.dim()), identity(b.dim()));
    let mut weights = Vec::new();
    for wa in &a.weights {
        for wb in &b.weights {
            weights.push(wa.iter().zip(wb).map(|(x, y)| x + y).collect());
        }
    }
    ClassicalRep {
        weights,
        e: add(&kron(&a.e, &ib), &kron(&ia, &b.e)),
        f: add(&kron(&a.f, &ib), &kron(&ia, &b.f)),
    }
}

/// One isotypic copy inside a decomposition: label and its column range.
#[derive(Clone, Debug)]
pub struct Block {
    pub nu: Vec<i64>,
    pub offset: usize,
    pub dim: usize,
}

/// Columns of `C` are the images of the basis of each irreducible summand,
/// matching [`irrep`]'s normalization.
pub fn decompose(r: &ClassicalRep) -> (Mat, Vec<Block>) {
    let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, w) in r.weights.iter().enumerate() {
        by_weight.entry(w.clone()).or_default().push(i);
    }
    let mut cols: Vec<Vec<BigRational>> = Vec::new();
    let mut blocks = Vec::new();
    for (w, idx) in by_weight.iter().rev() {
        let restricted: Mat = r.e.iter().map(|row| idx.iter().map(|&c| row[c].clone()).collect()).collect();
        for v in kernel(&restricted, idx.len()) {
            let mut hw = vec![BigRational::zero(); r.dim()];
            for (&c, x) in idx.iter().zip(v) {
                hw[c] = x;
            }
            let model = irrep(w);
            let offset = cols.len();
            let mut cur = hw;
            for m in 0..model.dim() {
                cols.push(cur.clone());
                if m + 1 < model.dim() {
                    let fv: Vec<BigRational> =
                        r.f.iter().map(|row| row.iter().zip(&cur).map(|(x, y)| x * y).sum()).collect();
                    let s = model.f[m + 1][m].recip();
                    cur = fv.into_iter().map(|x| x * &s).collect();
                }
            }
            blocks.push(Block { nu: w.clone(), offset, dim: model.dim() });
        }
    }
    assert_eq!(cols.len(), r.dim(), "summands do not span");
    let n = r.dim();
    let c: Mat = (0..n).map(|row| (0..n).map(|col| cols[col][row].clone()).collect()).collect();
    (c, blocks)
}

pub type ProductMap = BTreeMap<(usize, usize, usize, usize, Vec<i64>, usize, usize), BigRational>;

/// `f^λ_{i₁j₁} f^μ_{i₂j₂} = Σ C[(i₁,i₂),(ν,a)] C⁻¹[(ν,b),(j₁,j₂)] f^ν_{ab}`,
/// as a map of nonzero coefficients.
pub fn structure_constants(lambda: &[i64], mu: &[i64]) -> ProductMap {
    let (l, m) = (irrep(lambda), irrep(mu));
    let (c, blocks) = decompose(&tensor(&l, &m));
    let cinv = inverse(&c);
    let dm = m.dim();
    let mut out = ProductMap::new();
    for i1 in 0..l.dim() {
        for j1 in 0..l.dim() {
            for i2 in 0..dm {
                for j2 in 0..dm {
                    let (row, col) = (i1 * dm + i2, j1 * dm + j2);
                    for b in &blocks {
                        for x in 0..b.dim {
                            for y in 0..b.dim {
                                let v = &c[row][b.offset + x] * &cinv[b.offset + y][col];
                                if v.is_zero() {
                                    continue;
                                }
                                let key = (i1, j1, i2, j2, b.nu.clone(), x, y);
                                let slot = out.entry(key).or_insert_with(BigRational::zero);
                                *slot += v;
                            }
                        }
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Δ f_{ij} = Σ_z f_{iz} ⊗ f_{zj}` as `(i, j, i₁, j₁, i₂, j₂) → 1`.
pub fn coproduct(dim: usize) -> BTreeMap<(usize, usize, usize, usize, usize, usize), i64> {
    let mut out = BTreeMap::new();
    for i in 0..dim {
        for j in 0..dim {
            for z in 0..dim {
                out.insert((i, j, i, z, z, j), 1);
            }
        }
    }
    out
}
