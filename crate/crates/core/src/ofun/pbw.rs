//! Generator notation for `O_q(M_k)`: `a, b, c, d` for `k = 2`, `x11, x12, …`
//! otherwise, with normal ordering by the lexicographic PBW order.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use super::algebra::{labels_up_to, OqAlgebra};
use super::element::{PWElement, PWSymbol, PWTensor};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar, Solution};
use crate::uqrep::{Family, IrrepLabel};

/// Name of the matrix-element generator `x_{ij}` (0-based).
pub fn generator_name(k: usize, i: usize, j: usize) -> String {
    if k == 2 {
        ["a", "b", "c", "d"][i * 2 + j].to_string()
    } else {
        format!("x{}{}", i + 1, j + 1)
    }
}

/// The degree-one element `x_{ij} = f^{V}_{ij}`.
pub fn generator(alg: &OqAlgebra, i: usize, j: usize) -> Result<PWElement> {
    if alg.spec.family != Family::Gl {
        return Err(Error::InvalidArgument("generator notation needs gl_k".into()));
    }
    PWElement::symbol(&IrrepLabel::vector(alg.spec), i, j)
}

/// `a*b*a` style rendering of a word in the generators (flat indices `i·k+j`).
pub fn word_to_string(k: usize, word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|&g| generator_name(k, g / k, g % k)).collect::<Vec<_>>().join("*")
}

/// `a^2*b` style rendering of an exponent vector.
pub fn monomial_to_string(k: usize, exps: &[usize]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| {
            let n = generator_name(k, g / k, g % k);
            if e == 1 {
                n
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Splits a coefficient into a sign and a magnitude string suitable for
/// `± coeff*word`. Laurent polynomials print as `q - q^-1`; other values in
/// canonical form. Multi-term magnitudes come parenthesized. A magnitude of
/// one is returned as the empty string.
pub fn signed_coeff(c: &QScalar) -> (bool, String) {
    if let Some((low, poly)) = c.as_laurent() {
        let terms: Vec<(i64, &num_bigint::BigInt)> = poly
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
            .map(|(i, x)| (i as i64 + low, x))
            .collect();
        let negative = num_traits::Signed::is_negative(terms[0].1);
        let mut s = String::new();
        for (n, (e, x)) in terms.iter().enumerate() {
            let flip = num_traits::Signed::is_negative(*x) != negative;
            let mag = num_traits::Signed::abs(*x);
            if n > 0 {
                s.push_str(if flip { " - " } else { " + " });
            }
            let one = num_traits::One::is_one(&mag);
            match (*e, one) {
                (0, _) => s.push_str(&mag.to_string()),
                (1, true) => s.push('q'),
                (e, true) => s.push_str(&format!("q^{e}")),
                (1, false) => s.push_str(&format!("{mag}*q")),
                (e, false) => s.push_str(&format!("{mag}*q^{e}")),
            }
        }
        if terms.len() > 1 {
            return (negative, format!("({s})"));
        }
        return (negative, if s == "1" { String::new() } else { s });
    }
    let negative = c.numer().leading_sign() == std::cmp::Ordering::Less;
    let mag = if negative { -c } else { c.clone() };
    (negative, format!("({mag})"))
}

/// Joins `(word, coeff)` pairs as `w₁ - q*w₂ - (q - q^-1)*w₃`.
pub fn join_signed(terms: &[(String, QScalar)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (word, c)) in terms.iter().enumerate() {
        let (neg, mag) = signed_coeff(c);
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = match (mag.is_empty(), word == "1") {
            (true, _) => word.clone(),
            (false, true) => mag,
            (false, false) => format!("{mag}*{word}"),
        };
        out.push_str(&body);
    }
    out
}

/// PBW monomials of one degree together with their Peter-Weyl expansions.
pub struct PbwBasis {
    pub k: usize,
    pub degree: usize,
    /// Exponent vectors over the generators in the order `x11 < x12 < …`,
    /// sorted lexicographically descending.
    pub monomials: Vec<Vec<usize>>,
    symbols: Vec<PWSymbol>,
    matrix: QMatrix,
}

impl PbwBasis {
    pub fn new(alg: &OqAlgebra, degree: usize) -> Result<Self> {
        let spec = alg.spec;
        if spec.family != Family::Gl {
            return Err(Error::InvalidArgument("PBW notation needs gl_k".into()));
        }
        let k = spec.k;
        let mut monomials = Vec::new();
        compositions(k * k, degree, &mut Vec::new(), &mut monomials);
        monomials.sort_by(|a, b| b.cmp(a));
        let symbols: Vec<PWSymbol> = labels_up_to(spec, degree)
            .into_iter()
            .filter(|l| l.size() == degree)
            .flat_map(|l| PWSymbol::all_of(&l))
            .collect();
        let index: HashMap<&PWSymbol, usize> = symbols.iter().enumerate().map(|(n, s)| (s, n)).collect();
        let mut matrix = QMatrix::zeros(symbols.len(), monomials.len());
        for (col, m) in monomials.iter().enumerate() {
            let mut acc = PWElement::unit(spec);
            for (g, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    acc = alg.multiply(&acc, &generator(alg, g / k, g % k)?)?;
                }
            }
            for (s, c) in acc.terms() {
                let row = *index.get(s).ok_or_else(|| Error::Consistency(format!("{s} outside degree {degree}")))?;
                matrix.set(row, col, c.clone());
            }
        }
        Ok(PbwBasis { k, degree, monomials, symbols, matrix })
    }

    /// Coordinates of a homogeneous element in the PBW basis.
    pub fn express(&self, f: &PWElement) -> Result<Vec<(Vec<usize>, QScalar)>> {
        let mut b = vec![QScalar::zero(); self.symbols.len()];
        for (s, c) in f.terms() {
            let row = self
                .symbols
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::InvalidArgument(format!("{s} is not of degree {}", self.degree)))?;
            b[row] = c.clone();
        }
        match self.matrix.solve(&QMatrix::column(b))? {
            Solution::Unique(x) => Ok(self
                .monomials
                .iter()
                .enumerate()
                .filter(|(n, _)| !x.get(*n, 0).is_zero())
                .map(|(n, m)| (m.clone(), x.get(n, 0).clone()))
                .collect()),
            _ => Err(Error::Consistency("PBW monomials do not form a basis".into())),
        }
    }
}

fn compositions(parts: usize, total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() + 1 == parts {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        compositions(parts, total - x, cur, out);
        cur.pop();
    }
}

/// Normal-ordered form of an element of `O_q(M_k)`, monomials grouped by
/// descending degree.
pub fn to_pbw(alg: &OqAlgebra, f: &PWElement) -> Result<Vec<(Vec<usize>, QScalar)>> {
    let mut by_degree: BTreeMap<usize, PWElement> = BTreeMap::new();
    for (s, c) in f.terms() {
        by_degree.entry(s.lambda.size()).or_insert_with(|| PWElement::zero(alg.spec)).add_term(s.clone(), c);
    }
    let mut out = Vec::new();
    for (n, part) in by_degree.into_iter().rev() {
        out.extend(PbwBasis::new(alg, n)?.express(&part)?);
    }
    Ok(out)
}

pub fn pretty(alg: &OqAlgebra, f: &PWElement) -> Result<String> {
    let k = alg.spec.k;
    let terms: Vec<(String, QScalar)> =
        to_pbw(alg, f)?.into_iter().map(|(m, c)| (monomial_to_string(k, &m), c)).collect();
    Ok(join_signed(&terms))
}

/// Normal-ordered form of a tensor, as `(left monomial, right monomial) → coeff`.
/// Coefficients keyed by (left exponents, right exponents).
pub type PbwTensor = BTreeMap<(Vec<usize>, Vec<usize>), QScalar>;

pub fn tensor_to_pbw(alg: &OqAlgebra, t: &PWTensor) -> Result<PbwTensor> {
    let mut bases: HashMap<usize, PbwBasis> = HashMap::new();
    let mut cache: HashMap<PWSymbol, Vec<(Vec<usize>, QScalar)>> = HashMap::new();
    let mut out = PbwTensor::new();
    for ((a, b), c) in t.terms() {
        for s in [a, b] {
            if !cache.contains_key(s) {
                let n = s.lambda.size();
                let basis = match bases.entry(n) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(PbwBasis::new(alg, n)?),
                };
                cache.insert(s.clone(), basis.express(&PWElement::from_symbol(s.clone()))?);
            }
        }
        for (ma, ca) in &cache[a] {
            for (mb, cb) in &cache[b] {
                *out.entry((ma.clone(), mb.clone())).or_default() += &(c * &(ca * cb));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

pub fn pretty_tensor(alg: &OqAlgebra, t: &PWTensor) -> Result<String> {
    let k = alg.spec.k;
    let mut terms: Vec<(Vec<usize>, Vec<usize>, QScalar)> =
        tensor_to_pbw(alg, t)?.into_iter().map(|((a, b), c)| (a, b, c)).collect();
    terms.sort_by(|x, y| (&y.0, &y.1).cmp(&(&x.0, &x.1)));
    let terms: Vec<(String, QScalar)> = terms
        .into_iter()
        .map(|(a, b, c)| (format!("{}⊗{}", monomial_to_string(k, &a), monomial_to_string(k, &b)), c))
        .collect();
    Ok(join_signed(&terms))
}
