use std::collections::BTreeMap;

use crate::exactmath::QScalar;

/// Sparse action of U_q(gl_k) on `V^{⊗n}` without materializing the
/// `kⁿ × kⁿ` generator matrices. Basis vectors are indexed by their digit
/// string in base `k`, first tensor factor most significant.
#[derive(Clone, Copy, Debug)]
pub struct TensorPower {
    pub k: usize,
    pub n: usize,
}

pub type SparseVec = BTreeMap<usize, QScalar>;

impl TensorPower {
    pub fn new(k: usize, n: usize) -> Self {
        TensorPower { k, n }
    }

    pub fn dim(&self) -> usize {
        self.k.pow(self.n as u32)
    }

    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for p in (0..self.n).rev() {
            d[p] = idx % self.k;
            idx /= self.k;
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.k + d)
    }

    /// ε-weight of a basis vector: the letter counts of its digit string.
    pub fn weight(&self, idx: usize) -> Vec<i64> {
        let mut w = vec![0; self.k];
        for d in self.digits(idx) {
            w[d] += 1;
        }
        w
    }

    /// All basis indices of a given ε-weight, ascending.
    pub fn weight_space(&self, weight: &[i64]) -> Vec<usize> {
        if weight.iter().any(|&x| x < 0) || weight.iter().sum::<i64>() != self.n as i64 {
            return Vec::new();
        }
        (0..self.dim()).filter(|&i| self.weight(i) == weight).collect()
    }

    /// `ΔⁿE_i = Σ_p 1^{⊗p} ⊗ E_i ⊗ (K_i⁻¹)^{⊗(n-p-1)}`.
    pub fn apply_e(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&idx, c) in v {
            let mut d = self.digits(idx);
            for p in 0..self.n {
                if d[p] != i + 1 {
                    continue;
                }
                let exp: i64 = d[p + 1..].iter().map(|&x| -cartan_exp(x, i)).sum();
                d[p] = i;
                accumulate(&mut out, self.index(&d), c * &QScalar::q_pow(exp));
                d[p] = i + 1;
            }
        }
        out
    }

    /// `ΔⁿF_i = Σ_p K_i^{⊗p} ⊗ F_i ⊗ 1^{⊗(n-p-1)}`.
    pub fn apply_f(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&idx, c) in v {
            let mut d = self.digits(idx);
            for p in 0..self.n {
                if d[p] != i {
                    continue;
                }
                let exp: i64 = d[..p].iter().map(|&x| cartan_exp(x, i)).sum();
                d[p] = i + 1;
                accumulate(&mut out, self.index(&d), c * &QScalar::q_pow(exp));
                d[p] = i;
            }
        }
        out
    }
}

/// Exponent of `q` by which `K_i` acts on the basis vector `e_x` of `V`.
fn cartan_exp(x: usize, i: usize) -> i64 {
    if x == i {
        1
    } else if x == i + 1 {
        -1
    } else {
        0
    }
}

pub(crate) fn accumulate(v: &mut SparseVec, idx: usize, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&idx) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                v.remove(&idx);
            }
        }
        None => {
            v.insert(idx, c);
        }
    }
}
