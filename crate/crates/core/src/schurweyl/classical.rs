use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `P = (1/n!) Σ_σ σ ⊗ σ` acting simultaneously on both multi-indices of
/// `(V*)^{⊗n} ⊗ V^{⊗n}`, in the flattening `(J, I) ↦ J·kⁿ + I`.
pub fn classical_symmetrizer(k: usize, n: usize) -> Result<QMatrix> {
    if n > 6 {
        return Err(Error::InvalidArgument(format!("symmetrizer limited to n <= 6, got {n}")));
    }
    let d = k.pow(n as u32);
    let perms = permutations(n);
    let w = QScalar::from_ratio(1, perms.len() as i64)?;
    let digits = |mut x: usize| {
        let mut v = vec![0; n];
        for p in (0..n).rev() {
            v[p] = x % k;
            x /= k;
        }
        v
    };
    let permute = |idx: &[usize], s: &[usize]| {
        let mut out = vec![0; n];
        for (p, &t) in s.iter().enumerate() {
            out[t] = idx[p];
        }
        out.iter().fold(0, |acc, &x| acc * k + x)
    };
    let mut m = QMatrix::zeros(d * d, d * d);
    for j in 0..d {
        let jd = digits(j);
        for i in 0..d {
            let id = digits(i);
            for s in &perms {
                let to = permute(&jd, s) * d + permute(&id, s);
                let v = m.get(to, j * d + i) + &w;
                m.set(to, j * d + i, v);
            }
        }
    }
    Ok(m)
}
