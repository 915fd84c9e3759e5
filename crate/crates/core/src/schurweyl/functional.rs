use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::QScalar;

/// An element of `(V*)^{⊗n} ⊗ V^{⊗n}`, read as the function
/// `u ↦ Σ coeff · ⟨J| ρ(u) |I⟩` on U_q. Multi-indices are stored flattened
/// in base `k`, first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalElement {
    pub k: usize,
    pub n: usize,
    terms: BTreeMap<(usize, usize), QScalar>,
}

impl FunctionalElement {
    pub fn zero(k: usize, n: usize) -> Self {
        FunctionalElement { k, n, terms: BTreeMap::new() }
    }

    pub fn tensor_dim(&self) -> usize {
        self.k.pow(self.n as u32)
    }

    /// `e_J* ⊗ e_I` for multi-indices `J`, `I` of length `n`.
    pub fn basis(k: usize, dual: &[usize], vector: &[usize]) -> Result<Self> {
        if dual.len() != vector.len() || dual.iter().chain(vector).any(|&x| x >= k) {
            return Err(Error::InvalidArgument(format!("bad multi-indices {dual:?}, {vector:?} for k = {k}")));
        }
        let mut f = FunctionalElement::zero(k, dual.len());
        f.add_term(flatten(k, dual), flatten(k, vector), &QScalar::one());
        Ok(f)
    }

    /// `Y* ⊗ X` from coordinate vectors of length `kⁿ`.
    pub fn outer(k: usize, n: usize, dual: &[QScalar], vector: &[QScalar]) -> Result<Self> {
        let d = k.pow(n as u32);
        if dual.len() != d || vector.len() != d {
            return Err(Error::DimensionMismatch(format!("expected coordinate vectors of length {d}")));
        }
        let mut f = FunctionalElement::zero(k, n);
        for (j, y) in dual.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            for (i, x) in vector.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                f.add_term(j, i, &(y * x));
            }
        }
        Ok(f)
    }

    pub fn add_term(&mut self, dual: usize, vector: usize, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (dual, vector);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `((J, I), coeff)` with flattened indices.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dual: usize, vector: usize) -> QScalar {
        self.terms.get(&(dual, vector)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Self::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::DimensionMismatch(format!(
                "functionals of shape (k={}, n={}) and (k={}, n={})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&(j, i), c) in &other.terms {
            out.add_term(j, i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&QScalar::from_i64(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = FunctionalElement::zero(self.k, self.n);
        for (&(j, i), x) in &self.terms {
            out.add_term(j, i, &(x * c));
        }
        out
    }

    /// `(J₁J₂, I₁I₂)`: the tensor product of functionals before projection.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::DimensionMismatch(format!("k = {} vs k = {}", self.k, other.k)));
        }
        let shift = other.tensor_dim();
        let mut out = FunctionalElement::zero(self.k, self.n + other.n);
        for (&(j1, i1), c1) in &self.terms {
            for (&(j2, i2), c2) in &other.terms {
                out.add_term(j1 * shift + j2, i1 * shift + i2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// Coordinates in the flattening `(J, I) ↦ J·kⁿ + I`.
    pub fn to_vector(&self) -> Vec<QScalar> {
        let d = self.tensor_dim();
        let mut v = vec![QScalar::zero(); d * d];
        for (&(j, i), c) in &self.terms {
            v[j * d + i] = c.clone();
        }
        v
    }

    pub fn from_vector(k: usize, n: usize, v: &[QScalar]) -> Result<Self> {
        let d = k.pow(n as u32);
        if v.len() != d * d {
            return Err(Error::DimensionMismatch(format!("expected {} coordinates", d * d)));
        }
        let mut f = FunctionalElement::zero(k, n);
        for (x, c) in v.iter().enumerate() {
            f.add_term(x / d, x % d, c);
        }
        Ok(f)
    }
}

pub fn flatten(k: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &d| acc * k + d)
}

/// A flattened `(dual, vector)` index pair.
pub type FlatPair = (usize, usize);

/// An element of the tensor square of the functionals, the target of the
/// Schur-Weyl coproduct: `((J, Z), (Z', I)) → coeff`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalTensor {
    pub k: usize,
    pub n: usize,
    pub terms: BTreeMap<(FlatPair, FlatPair), QScalar>,
}

impl FunctionalTensor {
    pub fn add_term(&mut self, left: (usize, usize), right: (usize, usize), c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let e = self.terms.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }
}
