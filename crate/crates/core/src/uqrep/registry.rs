//! Canonical models of the irreducible representations.
//!
//! The basis of `V_λ` is a list of F-words applied to a highest-weight
//! vector: `b_m = scale_m · F_{w_m} v`. Because every generator matrix in
//! such a basis is intrinsic to the module, any other realization of `V_λ`
//! (for instance inside a tensor product) reproduces the same matrices when
//! the same words are applied to its own highest-weight vector.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::Zero;
use once_cell::sync::Lazy;
use serde::Serialize;

use super::rep::Rep;
use super::tensor_power::{SparseVec, TensorPower};
use super::{Family, IrrepLabel};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar, Solution};

#[derive(Clone, Debug, Serialize)]
pub struct IrrepModel {
    pub label: IrrepLabel,
    pub rep: Rep,
    /// `words[m]` lists simple-root indices; `F_{w[0]}` is applied first.
    pub words: Vec<Vec<usize>>,
    pub scales: Vec<QScalar>,
}

static REGISTRY: Lazy<Mutex<HashMap<IrrepLabel, Arc<IrrepModel>>>> = Lazy::new(Default::default);

/// The registry's model of `V_λ`. Repeated calls return the same object.
pub fn irrep(label: &IrrepLabel) -> Result<Arc<IrrepModel>> {
    label.validate()?;
    if let Some(m) = REGISTRY.lock().unwrap_or_else(|p| p.into_inner()).get(label) {
        return Ok(m.clone());
    }
    let model = match label.algebra.family {
        Family::Sl2 => sl2_model(label),
        Family::Gl if label.hw[label.algebra.k - 1] > 0 => shifted_model(label)?,
        Family::Gl => gl_model(label)?,
    };
    let mut reg = REGISTRY.lock().unwrap_or_else(|p| p.into_inner());
    Ok(reg.entry(label.clone()).or_insert_with(|| Arc::new(model)).clone())
}

/// `V_λ ≅ V_{λ-c} ⊗ det^c` with `c` the last part. The determinant is a
/// line on which E and F vanish and every `K_i` is 1, so only the weights
/// move.
fn shifted_model(label: &IrrepLabel) -> Result<IrrepModel> {
    let c = label.hw[label.algebra.k - 1];
    let base = IrrepLabel::new(label.algebra, label.hw.iter().map(|x| x - c).collect())?;
    let m = irrep(&base)?;
    let weights = m.rep.weights.iter().map(|w| w.iter().map(|x| x + c).collect()).collect();
    let rep = Rep::from_weights(label.algebra, m.rep.e.clone(), m.rep.f.clone(), weights);
    Ok(IrrepModel { label: label.clone(), rep, words: m.words.clone(), scales: m.scales.clone() })
}

/// `v_0..v_n` with `E v_m = [m] v_{m-1}`, `F v_m = [n-m] v_{m+1}`,
/// `K v_m = q^{n-2m} v_m`.
fn sl2_model(label: &IrrepLabel) -> IrrepModel {
    let n = label.hw[0];
    let dim = (n + 1) as usize;
    let mut e = QMatrix::zeros(dim, dim);
    let mut f = QMatrix::zeros(dim, dim);
    for m in 0..dim {
        if m > 0 {
            e.set(m - 1, m, QScalar::qint(m as i64));
        }
        if m + 1 < dim {
            f.set(m + 1, m, QScalar::qint(n - m as i64));
        }
    }
    let weights = (0..=n).map(|m| vec![n - 2 * m]).collect();
    let rep = Rep::from_weights(label.algebra, vec![e], vec![f], weights);
    let mut scales = Vec::with_capacity(dim);
    let mut acc = QScalar::one();
    for m in 0..dim {
        scales.push(acc.inv().expect("quantum factorials are nonzero"));
        acc = &acc * &QScalar::qint(n - m as i64);
    }
    let words = (0..dim).map(|m| vec![0; m]).collect();
    IrrepModel { label: label.clone(), rep, words, scales }
}

/// Realizes `V_λ` (last part zero) inside `V^{⊗|λ|}` from the first highest-weight vector of
/// weight λ (lexicographic kernel order) and a breadth-first F-word basis
/// whose members stay linearly independent at `q = 1`.
fn gl_model(label: &IrrepLabel) -> Result<IrrepModel> {
    let alg = label.algebra;
    let k = alg.k;
    let n = label.size();
    let tp = TensorPower::new(k, n);
    let target_dim = label.dim();

    let hw = first_highest_weight_vector(&tp, &label.hw)?;

    struct Node {
        word: Vec<usize>,
        vec: SparseVec,
        weight: Vec<i64>,
    }
    let mut nodes = vec![Node { word: Vec::new(), vec: hw, weight: label.hw.clone() }];
    let mut echelon = RationalEchelon::default();
    if !echelon.insert(&nodes[0].vec)? {
        return Err(Error::Consistency(format!("{label}: highest-weight vector vanishes at q=1")));
    }
    let mut p = 0;
    while p < nodes.len() && nodes.len() < target_dim {
        for i in 0..alg.rank() {
            let v = tp.apply_f(i, &nodes[p].vec);
            if v.is_empty() || !echelon.insert(&v)? {
                continue;
            }
            let mut word = nodes[p].word.clone();
            word.push(i);
            let weight: Vec<i64> =
                nodes[p].weight.iter().zip(alg.simple_root(i)).map(|(a, b)| a - b).collect();
            nodes.push(Node { word, vec: v, weight });
            if nodes.len() == target_dim {
                break;
            }
        }
        p += 1;
    }
    if nodes.len() != target_dim {
        return Err(Error::Consistency(format!(
            "{label}: F-closure has dimension {} but Weyl dimension is {target_dim}",
            nodes.len()
        )));
    }

    let mut by_weight: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (m, node) in nodes.iter().enumerate() {
        by_weight.entry(node.weight.clone()).or_default().push(m);
    }
    let coords = |y: &SparseVec, weight: &[i64]| -> Result<Vec<(usize, QScalar)>> {
        if y.is_empty() {
            return Ok(Vec::new());
        }
        let cands = by_weight.get(weight).ok_or_else(|| {
            Error::Consistency(format!("{label}: image lands in missing weight {weight:?}"))
        })?;
        let mut support: Vec<usize> = y.keys().copied().collect();
        for &c in cands {
            support.extend(nodes[c].vec.keys().copied());
        }
        support.sort_unstable();
        support.dedup();
        let m = QMatrix::from_fn(support.len(), cands.len(), |r, c| {
            nodes[cands[c]].vec.get(&support[r]).cloned().unwrap_or_default()
        });
        let b = QMatrix::column(support.iter().map(|s| y.get(s).cloned().unwrap_or_default()).collect());
        match m.solve(&b)? {
            Solution::Unique(x) => Ok(cands.iter().enumerate().map(|(j, &c)| (c, x.get(j, 0).clone())).collect()),
            _ => Err(Error::Consistency(format!("{label}: generator image outside the F-closure"))),
        }
    };

    let mut e_mats = Vec::new();
    let mut f_mats = Vec::new();
    for i in 0..alg.rank() {
        let alpha = alg.simple_root(i);
        let mut e = QMatrix::zeros(target_dim, target_dim);
        let mut f = QMatrix::zeros(target_dim, target_dim);
        for (m, node) in nodes.iter().enumerate() {
            let up: Vec<i64> = node.weight.iter().zip(&alpha).map(|(a, b)| a + b).collect();
            for (r, c) in coords(&tp.apply_e(i, &node.vec), &up)? {
                e.set(r, m, c);
            }
            let down: Vec<i64> = node.weight.iter().zip(&alpha).map(|(a, b)| a - b).collect();
            for (r, c) in coords(&tp.apply_f(i, &node.vec), &down)? {
                f.set(r, m, c);
            }
        }
        e_mats.push(e);
        f_mats.push(f);
    }
    let weights = nodes.iter().map(|n| n.weight.clone()).collect();
    let rep = Rep::from_weights(alg, e_mats, f_mats, weights);
    Ok(IrrepModel {
        label: label.clone(),
        rep,
        words: nodes.into_iter().map(|n| n.word).collect(),
        scales: vec![QScalar::one(); target_dim],
    })
}

/// First vector (lexicographic kernel order, leading coefficient 1) of the
/// joint kernel of all `E_i` on the given weight space of `V^{⊗n}`.
fn first_highest_weight_vector(tp: &TensorPower, weight: &[i64]) -> Result<SparseVec> {
    let space = tp.weight_space(weight);
    if space.is_empty() {
        // Only the trivial label at n = 0 reaches here with an empty power.
        if tp.n == 0 {
            let mut v = SparseVec::new();
            v.insert(0, QScalar::one());
            return Ok(v);
        }
        return Err(Error::Consistency(format!("empty weight space {weight:?}")));
    }
    let pos: HashMap<usize, usize> = space.iter().enumerate().map(|(j, &i)| (i, j)).collect();
    let mut rows: Vec<Vec<QScalar>> = Vec::new();
    for i in 0..tp.k - 1 {
        let mut target: BTreeMap<usize, Vec<QScalar>> = BTreeMap::new();
        for (&idx, &col) in &pos {
            let mut b = SparseVec::new();
            b.insert(idx, QScalar::one());
            for (t, c) in tp.apply_e(i, &b) {
                target.entry(t).or_insert_with(|| vec![QScalar::zero(); space.len()])[col] = c;
            }
        }
        rows.extend(target.into_values());
    }
    let m = if rows.is_empty() { QMatrix::zeros(1, space.len()) } else { QMatrix::from_rows(rows)? };
    let kernel = m.kernel();
    let v = kernel
        .first()
        .ok_or_else(|| Error::Consistency(format!("no highest-weight vector of weight {weight:?}")))?;
    let coords = v.col_vec(0);
    let lead = coords.iter().find(|c| !c.is_zero()).expect("kernel vectors are nonzero").inv()?;
    Ok(space.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(&i, c)| (i, &c * &lead)).collect())
}

/// Row echelon basis of rational vectors, used to test independence of
/// `q = 1` specializations.
#[derive(Default)]
struct RationalEchelon {
    rows: Vec<(usize, BTreeMap<usize, BigRational>)>,
}

impl RationalEchelon {
    /// Inserts the specialization of `v` at `q = 1`; returns whether it was
    /// independent of the vectors already present.
    fn insert(&mut self, v: &SparseVec) -> Result<bool> {
        let mut w: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&i, c) in v {
            let x = c.eval_at_one()?;
            if !x.is_zero() {
                w.insert(i, x);
            }
        }
        for (p, row) in &self.rows {
            if let Some(f) = w.get(p).cloned() {
                for (j, x) in row {
                    let e = w.entry(*j).or_insert_with(BigRational::zero);
                    *e -= &f * x;
                    if e.is_zero() {
                        w.remove(j);
                    }
                }
            }
        }
        let Some((&p, lead)) = w.iter().next() else {
            return Ok(false);
        };
        let lead = lead.clone();
        for x in w.values_mut() {
            *x /= &lead;
        }
        self.rows.push((p, w));
        Ok(true)
    }
}
