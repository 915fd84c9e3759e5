use std::collections::HashMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::rhat::r_matrix;
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};
use crate::ofun::pbw::{generator, join_signed, word_to_string};
use crate::ofun::{labels_up_to, OqAlgebra, PWElement, PWSymbol};

/// A linear relation `Σ coeff · word = 0` among degree-two words in the
/// generators `x_g`, `g = i·k + j`. The first term is the pivot, with
/// coefficient one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub k: usize,
    pub terms: Vec<(Vec<usize>, QScalar)>,
}

impl Relation {
    pub fn text(&self) -> String {
        let terms: Vec<(String, QScalar)> =
            self.terms.iter().map(|(w, c)| (word_to_string(self.k, w), c.clone())).collect();
        format!("{} = 0", join_signed(&terms))
    }

    /// Coefficients at `q = 1`, zero terms dropped.
    pub fn at_q1(&self) -> Result<Vec<(Vec<usize>, BigRational)>> {
        let mut out = Vec::new();
        for (w, c) in &self.terms {
            let v = c.eval_at_one()?;
            if v != BigRational::from_integer(0.into()) {
                out.push((w.clone(), v));
            }
        }
        Ok(out)
    }
}

/// An entry of `RX₁X₂ − X₂X₁R` that failed to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub row: usize,
    pub col: usize,
    pub value: PWElement,
}

#[derive(Clone, Debug)]
pub struct FrtReport {
    pub k: usize,
    pub relations: Vec<Relation>,
    pub entries_checked: usize,
    pub residuals: Vec<Residual>,
}

impl FrtReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }

    pub fn to_doc(&self) -> FrtDoc {
        FrtDoc {
            k: self.k,
            relations: self
                .relations
                .iter()
                .map(|r| RelationDoc {
                    text: r.text(),
                    terms: r
                        .terms
                        .iter()
                        .map(|(w, c)| TermDoc { word: word_to_string(self.k, w), coeff: c.clone() })
                        .collect(),
                })
                .collect(),
            entries_checked: self.entries_checked,
            nonzero_entries: self.residuals.iter().map(|r| format!("({},{}): {}", r.row, r.col, r.value)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub word: String,
    pub coeff: QScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub text: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrtDoc {
    pub k: usize,
    pub relations: Vec<RelationDoc>,
    pub entries_checked: usize,
    pub nonzero_entries: Vec<String>,
}

/// Column order for elimination: one preferred word per unordered pair of
/// generators first, so that reduced relations read `ab = q ba`,
/// `cb = bc`, `ad = da + (q − q⁻¹) bc` and so on.
fn word_order(k: usize) -> Vec<(usize, usize)> {
    let n = k * k;
    let mut preferred = Vec::new();
    let mut rest = Vec::new();
    for g1 in 0..n {
        for g2 in 0..n {
            let (i, j, k2, l) = (g1 / k, g1 % k, g2 / k, g2 % k);
            let ordered = g1 < g2;
            let anti = i < k2 && j > l;
            let anti_rev = i > k2 && j < l;
            if (ordered && !anti) || anti_rev {
                preferred.push((g1, g2));
            } else {
                rest.push((g1, g2));
            }
        }
    }
    preferred.extend(rest);
    preferred
}

/// All products `x_{g₁} x_{g₂}` in the Peter-Weyl basis.
pub fn degree_two_products(alg: &OqAlgebra) -> Result<HashMap<(usize, usize), PWElement>> {
    let k = alg.spec.k;
    let gens: Vec<PWElement> = (0..k * k).map(|g| generator(alg, g / k, g % k)).collect::<Result<_>>()?;
    let mut out = HashMap::new();
    for g1 in 0..k * k {
        for g2 in 0..k * k {
            out.insert((g1, g2), alg.multiply(&gens[g1], &gens[g2])?);
        }
    }
    Ok(out)
}

pub fn frt_relations(k: usize) -> Result<FrtReport> {
    let spec = crate::uqrep::AlgebraSpec::gl(k)?;
    frt_relations_in(&OqAlgebra::shared(spec))
}

/// Derives the quadratic relations from the Peter-Weyl structure constants
/// and checks every entry of `RX₁X₂ − X₂X₁R`.
pub fn frt_relations_in(alg: &OqAlgebra) -> Result<FrtReport> {
    let k = alg.spec.k;
    let products = degree_two_products(alg)?;
    let symbols: Vec<PWSymbol> = labels_up_to(alg.spec, 2)
        .into_iter()
        .filter(|l| l.size() == 2)
        .flat_map(|l| PWSymbol::all_of(&l))
        .collect();
    let order = word_order(k);
    let m = QMatrix::from_fn(symbols.len(), order.len(), |r, c| products[&order[c]].coeff(&symbols[r]));
    let kernel = m.kernel();
    let expected = k.pow(4) - symbols.len();
    if kernel.len() != expected {
        return Err(Error::Consistency(format!("{} relations found, expected {expected}", kernel.len())));
    }
    let stacked = QMatrix::from_fn(kernel.len(), order.len(), |r, c| kernel[r].get(c, 0).clone());
    let rref = stacked.rref();
    let mut relations = Vec::new();
    for (row, &pivot) in rref.pivots.iter().enumerate() {
        let mut others: Vec<(usize, QScalar)> = (0..order.len())
            .filter(|&c| c != pivot && !rref.matrix.get(row, c).is_zero())
            .map(|c| (c, rref.matrix.get(row, c).clone()))
            .collect();
        others.sort_by_key(|(c, x)| (x.complexity(), order[*c]));
        let mut terms = vec![(vec![order[pivot].0, order[pivot].1], rref.matrix.get(row, pivot).clone())];
        terms.extend(others.into_iter().map(|(c, x)| (vec![order[c].0, order[c].1], x)));
        relations.push(Relation { k, terms });
    }

    let r = r_matrix(k);
    let n = k * k;
    // (X₁X₂)[(i,k),(j,l)] = x_ij x_kl and (X₂X₁)[(i,k),(j,l)] = x_kl x_ij.
    let x1x2 = |row: usize, col: usize| {
        let (i, kk, j, l) = (row / k, row % k, col / k, col % k);
        &products[&(i * k + j, kk * k + l)]
    };
    let x2x1 = |row: usize, col: usize| {
        let (i, kk, j, l) = (row / k, row % k, col / k, col % k);
        &products[&(kk * k + l, i * k + j)]
    };
    let mut residuals = Vec::new();
    for row in 0..n {
        for col in 0..n {
            let mut acc = PWElement::zero(alg.spec);
            for mid in 0..n {
                let a = r.get(row, mid);
                if !a.is_zero() {
                    acc = acc.add(&x1x2(mid, col).scale(a))?;
                }
                let b = r.get(mid, col);
                if !b.is_zero() {
                    acc = acc.sub(&x2x1(row, mid).scale(b))?;
                }
            }
            if !acc.is_zero() {
                residuals.push(Residual { row, col, value: acc });
            }
        }
    }
    Ok(FrtReport { k, relations, entries_checked: n * n, residuals })
}
