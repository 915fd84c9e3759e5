use serde::{Deserialize, Serialize};

use super::{AlgebraSpec, Generator};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};

/// Generator matrices of a representation plus the weight of each basis
/// vector (ε-coordinates for gl_k, the H-eigenvalue for sl2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rep {
    pub algebra: AlgebraSpec,
    pub dim: usize,
    pub e: Vec<QMatrix>,
    pub f: Vec<QMatrix>,
    pub k: Vec<QMatrix>,
    pub kinv: Vec<QMatrix>,
    pub weights: Vec<Vec<i64>>,
}

impl Rep {
    /// Builds a representation whose `K_i` are read off from the weights.
    pub fn from_weights(algebra: AlgebraSpec, e: Vec<QMatrix>, f: Vec<QMatrix>, weights: Vec<Vec<i64>>) -> Self {
        let dim = weights.len();
        let (k, kinv) = cartan_from_weights(algebra, &weights);
        Rep { algebra, dim, e, f, k, kinv, weights }
    }

    pub fn generator(&self, g: Generator) -> &QMatrix {
        match g {
            Generator::E(i) => &self.e[i],
            Generator::F(i) => &self.f[i],
            Generator::K(i) => &self.k[i],
            Generator::Kinv(i) => &self.kinv[i],
        }
    }

    /// `ρ(g₁ g₂ ⋯ g_m)` for a word `[g₁, …, g_m]`; the empty word gives `I`.
    pub fn act_word(&self, word: &[Generator]) -> QMatrix {
        let mut acc = QMatrix::identity(self.dim);
        for &g in word {
            acc = acc.mul(self.generator(g)).expect("square generator matrices");
        }
        acc
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> std::collections::BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: std::collections::BTreeMap<Vec<i64>, Vec<usize>> = Default::default();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// Every generator matrix, tagged.
    pub fn generators(&self) -> Vec<(Generator, &QMatrix)> {
        Generator::all(self.algebra).into_iter().map(|g| (g, self.generator(g))).collect()
    }
}

fn cartan_from_weights(algebra: AlgebraSpec, weights: &[Vec<i64>]) -> (Vec<QMatrix>, Vec<QMatrix>) {
    let mut k = Vec::new();
    let mut kinv = Vec::new();
    for i in 0..algebra.rank() {
        let exps: Vec<i64> = weights.iter().map(|w| algebra.coroot_pairing(w, i)).collect();
        k.push(QMatrix::diagonal(&exps.iter().map(|&e| QScalar::q_pow(e)).collect::<Vec<_>>()));
        kinv.push(QMatrix::diagonal(&exps.iter().map(|&e| QScalar::q_pow(-e)).collect::<Vec<_>>()));
    }
    (k, kinv)
}

/// The vector representation: `E_i = e_{i,i+1}`, `F_i = e_{i+1,i}`.
pub fn vector_rep(algebra: AlgebraSpec) -> Rep {
    let n = algebra.k;
    let e = (0..algebra.rank()).map(|i| QMatrix::unit(n, n, i, i + 1)).collect();
    let f = (0..algebra.rank()).map(|i| QMatrix::unit(n, n, i + 1, i)).collect();
    let weights = match algebra.family {
        super::Family::Sl2 => vec![vec![1], vec![-1]],
        super::Family::Gl => (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = 1;
                w
            })
            .collect(),
    };
    Rep::from_weights(algebra, e, f, weights)
}

/// The one-dimensional trivial representation.
pub fn trivial_rep(algebra: AlgebraSpec) -> Rep {
    let zero = || (0..algebra.rank()).map(|_| QMatrix::zeros(1, 1)).collect();
    Rep::from_weights(algebra, zero(), zero(), vec![vec![0; algebra.weight_len()]])
}

/// `A ⊗ B` via the coproduct; basis order is lexicographic with the
/// `A`-index major.
pub fn tensor_rep(a: &Rep, b: &Rep) -> Result<Rep> {
    a.algebra.check_same(&b.algebra)?;
    let ia = QMatrix::identity(a.dim);
    let ib = QMatrix::identity(b.dim);
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut k = Vec::new();
    let mut kinv = Vec::new();
    for i in 0..a.algebra.rank() {
        e.push(a.e[i].kron(&b.kinv[i]).add(&ia.kron(&b.e[i]))?);
        f.push(a.f[i].kron(&ib).add(&a.k[i].kron(&b.f[i]))?);
        k.push(a.k[i].kron(&b.k[i]));
        kinv.push(a.kinv[i].kron(&b.kinv[i]));
    }
    let mut weights = Vec::with_capacity(a.dim * b.dim);
    for wa in &a.weights {
        for wb in &b.weights {
            weights.push(wa.iter().zip(wb).map(|(x, y)| x + y).collect());
        }
    }
    Ok(Rep { algebra: a.algebra, dim: a.dim * b.dim, e, f, k, kinv, weights })
}

/// Outcome of [`check_relations`]: one entry per failed identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every defining identity of a type-1 representation exactly.
pub fn check_relations(r: &Rep) -> RelationReport {
    let mut report = RelationReport::default();
    let q = QScalar::q();
    let q2 = &q * &q;
    let qm2 = QScalar::q_pow(-2);
    let denom = (&q - &QScalar::q_pow(-1)).inv().expect("q - q^-1 is nonzero");
    let id = QMatrix::identity(r.dim);
    let mut check = |name: String, ok: bool| {
        report.checked += 1;
        if !ok {
            report.failures.push(name);
        }
    };
    for i in 0..r.algebra.rank() {
        let (e, f, k, kinv) = (&r.e[i], &r.f[i], &r.k[i], &r.kinv[i]);
        check(format!("K{0}·Kinv{0} = I", i + 1), k.mul(kinv).map(|m| m == id).unwrap_or(false));
        let diag_ok = k.is_diagonal()
            && r.weights.iter().enumerate().all(|(j, w)| *k.get(j, j) == QScalar::q_pow(r.algebra.coroot_pairing(w, i)));
        check(format!("K{} diagonal with q^<wt, alpha>", i + 1), diag_ok);
        let conj = |m: &QMatrix| k.mul(m).and_then(|x| x.mul(kinv));
        check(format!("K{0} E{0} Kinv{0} = q^2 E{0}", i + 1), conj(e).map(|x| x == e.scale(&q2)).unwrap_or(false));
        check(format!("K{0} F{0} Kinv{0} = q^-2 F{0}", i + 1), conj(f).map(|x| x == f.scale(&qm2)).unwrap_or(false));
        let comm = e.mul(f).and_then(|ef| f.mul(e).and_then(|fe| ef.sub(&fe)));
        let rhs = k.sub(kinv).map(|d| d.scale(&denom));
        let ok = matches!((comm, rhs), (Ok(a), Ok(b)) if a == b);
        check(format!("E{0}F{0} - F{0}E{0} = (K{0} - Kinv{0})/(q - q^-1)", i + 1), ok);
        let alpha = r.algebra.simple_root(i);
        let shifts = |m: &QMatrix, sign: i64| {
            (0..r.dim).all(|row| {
                (0..r.dim).all(|col| {
                    m.get(row, col).is_zero()
                        || r.weights[row].iter().zip(&r.weights[col]).zip(&alpha).all(|((a, b), c)| *a == b + sign * c)
                })
            })
        };
        check(format!("E{} raises weights by alpha", i + 1), shifts(e, 1));
        check(format!("F{} lowers weights by alpha", i + 1), shifts(f, -1));
    }
    report
}

/// Applies `F_{w[0]}`, then `F_{w[1]}`, … to a dense vector.
pub(crate) fn apply_f_word(r: &Rep, word: &[usize], v: &[QScalar]) -> Result<Vec<QScalar>> {
    let mut cur = v.to_vec();
    for &i in word {
        cur = r.f.get(i).ok_or_else(|| Error::InvalidArgument(format!("no F{}", i + 1)))?.mul_vec(&cur)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(s: &str) -> QScalar {
        s.parse().unwrap()
    }

    #[test]
    fn vector_rep_gl2_cartan() {
        let v = vector_rep(AlgebraSpec::gl(2).unwrap());
        assert_eq!(v.k[0], QMatrix::diagonal(&[QScalar::q(), QScalar::q_pow(-1)]));
        assert!(check_relations(&v).passed());
    }

    #[test]
    fn vector_rep_sl2_commutator() {
        let v = vector_rep(AlgebraSpec::sl2());
        let comm = v.e[0].mul(&v.f[0]).unwrap().sub(&v.f[0].mul(&v.e[0]).unwrap()).unwrap();
        assert_eq!(comm, QMatrix::diagonal(&[1.into(), (-1).into()]));
        assert!(check_relations(&v).passed());
    }

    #[test]
    fn vector_rep_gl3() {
        let v = vector_rep(AlgebraSpec::gl(3).unwrap());
        assert_eq!(v.dim, 3);
        assert!(v.e[0].get(0, 1).is_one());
        assert!(v.e[1].get(1, 2).is_one());
        assert!(check_relations(&v).passed());
    }

    #[test]
    fn coproduct_on_v_tensor_v() {
        let v = vector_rep(AlgebraSpec::gl(2).unwrap());
        let vv = tensor_rep(&v, &v).unwrap();
        // F·(e1⊗e1) = e2⊗e1 + q e1⊗e2; basis order e11, e12, e21, e22.
        let image = vv.f[0].col_vec(0);
        assert_eq!(image, vec![0.into(), QScalar::q(), 1.into(), 0.into()]);
        // E·(e2⊗e1) = q^-1 e1⊗e1 and E·(e1⊗e2) = e1⊗e1.
        assert_eq!(vv.e[0].get(0, 2), &qs("q^-1"));
        assert!(vv.e[0].get(0, 1).is_one());
        // E·(e2⊗e2) = e1⊗e2·q ... expanded: E e2⊗K⁻¹e2 + e2⊗E e2 = q e1⊗e2 + e2⊗e1.
        assert_eq!(vv.e[0].col_vec(3), vec![0.into(), QScalar::q(), 1.into(), 0.into()]);
        assert!(check_relations(&vv).passed());
    }

    #[test]
    fn tensoring_with_trivial() {
        let alg = AlgebraSpec::gl(2).unwrap();
        let v = vector_rep(alg);
        let t = trivial_rep(alg);
        assert_eq!(tensor_rep(&v, &t).unwrap(), v);
        assert_eq!(tensor_rep(&t, &v).unwrap(), v);
        assert!(tensor_rep(&v, &vector_rep(AlgebraSpec::sl2())).is_err());
    }

    #[test]
    fn corrupted_generator_is_reported() {
        let mut v = vector_rep(AlgebraSpec::gl(2).unwrap());
        v.e[0].set(0, 1, 2.into());
        let report = check_relations(&v);
        assert!(report.failures.iter().any(|f| f.starts_with("E1F1 - F1E1")));
    }
}
