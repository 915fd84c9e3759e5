use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::functional::{FunctionalElement, FunctionalTensor};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};
use crate::ofun::{PWElement, PWSymbol};
use crate::uqrep::{decompose, tensor_rep, trivial_rep, vector_rep, AlgebraSpec, IrrepLabel, Rep};

/// One isotypic component `V_λ ⊠ W_λ` of `V^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotypic {
    pub lambda: IrrepLabel,
    pub dim_v: usize,
    pub dim_w: usize,
    /// First column of the component in `C`.
    pub offset: usize,
}

type Sparse = Vec<Vec<(usize, QScalar)>>;

/// Isotypic decomposition of `V^{⊗n}` under U_q(gl_k). Copy `p` of `V_λ`
/// occupies columns `offset + p·dim_v ..` of `C`; the copies index a basis
/// of `W_λ` and the rows of `C⁻¹` the dual basis.
#[derive(Clone, Debug)]
pub struct SWDecomp {
    pub k: usize,
    pub n: usize,
    pub isotypic: Vec<Isotypic>,
    pub c: QMatrix,
    pub cinv: QMatrix,
    c_rows: Sparse,
    c_cols: Sparse,
    cinv_rows: Sparse,
    cinv_cols: Sparse,
    /// `(component, copy, basis)` for each column of `C`.
    column_info: Vec<(usize, usize, usize)>,
}

pub fn tensor_power_rep(k: usize, n: usize) -> Result<Rep> {
    let alg = AlgebraSpec::gl(k)?;
    let v = vector_rep(alg);
    let mut acc = trivial_rep(alg);
    for _ in 0..n {
        acc = tensor_rep(&acc, &v)?;
    }
    Ok(acc)
}

fn sparse_rows(m: &QMatrix) -> Sparse {
    (0..m.rows())
        .map(|r| m.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
        .collect()
}

pub fn schur_weyl_decompose(k: usize, n: usize) -> Result<SWDecomp> {
    let d = decompose(&tensor_power_rep(k, n)?)?;
    let mut isotypic = Vec::new();
    let mut column_info = Vec::new();
    let mut offset = 0;
    for (ci, c) in d.constituents.iter().enumerate() {
        let dim_v = c.label.dim();
        isotypic.push(Isotypic { lambda: c.label.clone(), dim_v, dim_w: c.multiplicity, offset });
        for p in 0..c.multiplicity {
            for b in 0..dim_v {
                column_info.push((ci, p, b));
            }
        }
        offset += dim_v * c.multiplicity;
    }
    if offset != k.pow(n as u32) {
        return Err(Error::Consistency(format!("isotypic dimensions sum to {offset}, expected {}", k.pow(n as u32))));
    }
    let c_rows = sparse_rows(&d.c);
    let c_cols = sparse_rows(&d.c.transpose());
    let cinv_rows = sparse_rows(&d.cinv);
    let cinv_cols = sparse_rows(&d.cinv.transpose());
    Ok(SWDecomp { k, n, isotypic, c: d.c, cinv: d.cinv, c_rows, c_cols, cinv_rows, cinv_cols, column_info })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicSummary {
    pub lambda: Vec<i64>,
    pub dim_v: usize,
    pub dim_w: usize,
}

/// Dimension table of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWSummary {
    pub k: usize,
    pub n: usize,
    pub isotypic: Vec<IsotypicSummary>,
    pub total: usize,
    /// E.g. `4x1 + 2x2 = 8`.
    pub identity: String,
}

impl SWDecomp {
    pub fn tensor_dim(&self) -> usize {
        self.k.pow(self.n as u32)
    }

    pub fn summary(&self) -> SWSummary {
        let total = self.isotypic.iter().map(|c| c.dim_v * c.dim_w).sum();
        let parts: Vec<String> = self.isotypic.iter().map(|c| format!("{}x{}", c.dim_v, c.dim_w)).collect();
        SWSummary {
            k: self.k,
            n: self.n,
            isotypic: self
                .isotypic
                .iter()
                .map(|c| IsotypicSummary { lambda: c.lambda.hw.clone(), dim_v: c.dim_v, dim_w: c.dim_w })
                .collect(),
            total,
            identity: format!("{} = {total}", parts.join(" + ")),
        }
    }

    fn check(&self, phi: &FunctionalElement) -> Result<()> {
        if phi.k != self.k || phi.n != self.n {
            return Err(Error::DimensionMismatch(format!(
                "functional of degree {} (k={}) against decomposition of degree {} (k={})",
                phi.n, phi.k, self.n, self.k
            )));
        }
        Ok(())
    }

    /// `g^λ_{ab}(φ)`: the coordinates of the function defined by `φ` in the
    /// matrix elements `f^λ_{ab}`. Keys are `(component, a, b)`.
    pub fn coefficients(&self, phi: &FunctionalElement) -> Result<BTreeMap<(usize, usize, usize), QScalar>> {
        self.check(phi)?;
        let mut g: BTreeMap<(usize, usize, usize), QScalar> = BTreeMap::new();
        for (&(j, i), coeff) in phi.terms() {
            for (col, x) in &self.c_rows[j] {
                let (comp, p, a) = self.column_info[*col];
                let cx = coeff * x;
                for (row, y) in &self.cinv_cols[i] {
                    let (comp2, p2, b) = self.column_info[*row];
                    if comp2 == comp && p2 == p {
                        *g.entry((comp, a, b)).or_default() += &(&cx * y);
                    }
                }
            }
        }
        g.retain(|_, v| !v.is_zero());
        Ok(g)
    }

    /// `X^λ_{b,c*} = (1/dim W_λ) Σ_p (c*⊠p*) ⊗ (b⊠p)`.
    pub fn equivariant_basis(&self, comp: usize, b: usize, c: usize) -> Result<FunctionalElement> {
        let iso = self.isotypic.get(comp).ok_or_else(|| Error::InvalidArgument(format!("no component {comp}")))?;
        if b >= iso.dim_v || c >= iso.dim_v {
            return Err(Error::InvalidArgument(format!("basis index out of range for {}", iso.lambda)));
        }
        let w = QScalar::from_i64(iso.dim_w as i64).inv()?;
        let mut out = FunctionalElement::zero(self.k, self.n);
        for p in 0..iso.dim_w {
            let base = iso.offset + p * iso.dim_v;
            for (j, x) in &self.cinv_rows[base + c] {
                let wx = &w * x;
                for (i, y) in &self.c_cols[base + b] {
                    out.add_term(*j, *i, &(&wx * y));
                }
            }
        }
        Ok(out)
    }

    /// The projection π: the equivariant functional defining the same
    /// function on U_q as `φ`.
    pub fn project_pi(&self, phi: &FunctionalElement) -> Result<FunctionalElement> {
        let mut out = FunctionalElement::zero(self.k, self.n);
        for ((comp, a, b), g) in self.coefficients(phi)? {
            let x = self.equivariant_basis(comp, b, a)?;
            for (&(j, i), c) in x.terms() {
                out.add_term(j, i, &(c * &g));
            }
        }
        Ok(out)
    }

    /// π as a `k^{2n} × k^{2n}` matrix in the flattening `(J, I) ↦ J·kⁿ + I`.
    pub fn pi_matrix(&self) -> Result<QMatrix> {
        let d = self.tensor_dim();
        let mut m = QMatrix::zeros(d * d, d * d);
        for j in 0..d {
            for i in 0..d {
                let mut e = FunctionalElement::zero(self.k, self.n);
                e.add_term(j, i, &QScalar::one());
                for (&(j2, i2), c) in self.project_pi(&e)?.terms() {
                    m.set(j2 * d + i2, j * d + i, c.clone());
                }
            }
        }
        Ok(m)
    }

    /// The Peter-Weyl element defining the same function as `φ`.
    pub fn functional_to_pw(&self, phi: &FunctionalElement) -> Result<PWElement> {
        let alg = AlgebraSpec::gl(self.k)?;
        let mut out = PWElement::zero(alg);
        for ((comp, a, b), g) in self.coefficients(phi)? {
            out.add_term(PWSymbol { lambda: self.isotypic[comp].lambda.clone(), i: a, j: b }, &g);
        }
        Ok(out)
    }

    /// `f^λ_{ij} ↦ X^λ_{j,i*}`; every `λ` must occur in `V^{⊗n}`.
    pub fn pw_to_functional(&self, f: &PWElement) -> Result<FunctionalElement> {
        let mut out = FunctionalElement::zero(self.k, self.n);
        for (s, c) in f.terms() {
            let comp = self
                .isotypic
                .iter()
                .position(|iso| iso.lambda == s.lambda)
                .ok_or_else(|| Error::InvalidArgument(format!("{} does not occur in degree {}", s.lambda, self.n)))?;
            for (&(j, i), x) in self.equivariant_basis(comp, s.j, s.i)?.terms() {
                out.add_term(j, i, &(x * c));
            }
        }
        Ok(out)
    }
}

/// Memoized Schur-Weyl data for one `k`, one decomposition per degree.
pub struct SchurWeyl {
    pub k: usize,
    cache: Mutex<HashMap<usize, Arc<SWDecomp>>>,
}

impl SchurWeyl {
    pub fn new(k: usize) -> Result<Self> {
        AlgebraSpec::gl(k)?;
        Ok(SchurWeyl { k, cache: Default::default() })
    }

    pub fn decomp(&self, n: usize) -> Result<Arc<SWDecomp>> {
        if let Some(d) = self.cache.lock().unwrap_or_else(|p| p.into_inner()).get(&n) {
            return Ok(d.clone());
        }
        let d = Arc::new(schur_weyl_decompose(self.k, n)?);
        self.cache.lock().unwrap_or_else(|p| p.into_inner()).insert(n, d.clone());
        Ok(d)
    }

    /// The unit: the empty tensor at `n = 0`.
    pub fn unit(&self) -> FunctionalElement {
        let mut f = FunctionalElement::zero(self.k, 0);
        f.add_term(0, 0, &QScalar::one());
        f
    }

    /// `fg = π(f ⊗ g)`.
    pub fn multiply_sw(&self, f: &FunctionalElement, g: &FunctionalElement) -> Result<FunctionalElement> {
        let joined = f.concat(g)?;
        self.decomp(joined.n)?.project_pi(&joined)
    }

    /// `(π ⊗ π) Σ_Z (J*⊗Z) ⊗ (Z*⊗I)`.
    pub fn comultiply_sw(&self, f: &FunctionalElement) -> Result<FunctionalTensor> {
        let d = self.decomp(f.n)?;
        d.check(f)?;
        let dim = d.tensor_dim();
        let mut memo: HashMap<(usize, usize), FunctionalElement> = HashMap::new();
        let mut pi = |j: usize, i: usize| -> Result<FunctionalElement> {
            if let Some(x) = memo.get(&(j, i)) {
                return Ok(x.clone());
            }
            let mut e = FunctionalElement::zero(d.k, d.n);
            e.add_term(j, i, &QScalar::one());
            let x = d.project_pi(&e)?;
            memo.insert((j, i), x.clone());
            Ok(x)
        };
        let mut out = FunctionalTensor { k: self.k, n: f.n, terms: BTreeMap::new() };
        for (&(j, i), c) in f.terms() {
            for z in 0..dim {
                let left = pi(j, z)?;
                let right = pi(z, i)?;
                for (&l, lc) in left.terms() {
                    let lc = lc * c;
                    for (&r, rc) in right.terms() {
                        out.add_term(l, r, &(&lc * rc));
                    }
                }
            }
        }
        Ok(out)
    }
}
