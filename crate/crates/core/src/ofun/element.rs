use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::QScalar;
use crate::uqrep::{AlgebraSpec, IrrepLabel};

/// The matrix element `f^λ_{ij}(u) = ρ_λ(u)[i][j]`: `i` is the dual slot
/// `Y* = b_i*`, `j` the vector slot `X = b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PWSymbol {
    pub lambda: IrrepLabel,
    pub i: usize,
    pub j: usize,
}

impl PWSymbol {
    pub fn new(lambda: IrrepLabel, i: usize, j: usize) -> Result<Self> {
        lambda.validate()?;
        let d = lambda.dim();
        if i >= d || j >= d {
            return Err(Error::InvalidArgument(format!("index ({i},{j}) out of range for {lambda} of dimension {d}")));
        }
        Ok(PWSymbol { lambda, i, j })
    }

    /// Every symbol of one irreducible, row-major.
    pub fn all_of(lambda: &IrrepLabel) -> Vec<PWSymbol> {
        let d = lambda.dim();
        (0..d * d).map(|x| PWSymbol { lambda: lambda.clone(), i: x / d, j: x % d }).collect()
    }
}

impl fmt::Display for PWSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hw: Vec<String> = self.lambda.hw.iter().map(|x| x.to_string()).collect();
        write!(f, "f[{}]_{{{},{}}}", hw.join(","), self.i, self.j)
    }
}

/// A finite ℚ(q)-combination of Peter-Weyl symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PWElement {
    pub algebra: AlgebraSpec,
    terms: BTreeMap<PWSymbol, QScalar>,
}

impl PWElement {
    pub fn zero(algebra: AlgebraSpec) -> Self {
        PWElement { algebra, terms: BTreeMap::new() }
    }

    /// `f^{triv}_{0,0}`, the unit of the algebra.
    pub fn unit(algebra: AlgebraSpec) -> Self {
        Self::from_symbol(PWSymbol { lambda: IrrepLabel::trivial(algebra), i: 0, j: 0 })
    }

    pub fn from_symbol(s: PWSymbol) -> Self {
        let algebra = s.lambda.algebra;
        let mut terms = BTreeMap::new();
        terms.insert(s, QScalar::one());
        PWElement { algebra, terms }
    }

    pub fn symbol(lambda: &IrrepLabel, i: usize, j: usize) -> Result<Self> {
        Ok(Self::from_symbol(PWSymbol::new(lambda.clone(), i, j)?))
    }

    pub fn from_terms(algebra: AlgebraSpec, terms: impl IntoIterator<Item = (PWSymbol, QScalar)>) -> Result<Self> {
        let mut out = PWElement::zero(algebra);
        for (s, c) in terms {
            algebra.check_same(&s.lambda.algebra)?;
            out.add_term(s, &c);
        }
        Ok(out)
    }

    pub fn add_term(&mut self, s: PWSymbol, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PWSymbol, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Self::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &PWSymbol) -> QScalar {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.algebra.check_same(&other.algebra)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&QScalar::from_i64(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return PWElement::zero(self.algebra);
        }
        PWElement { algebra: self.algebra, terms: self.terms.iter().map(|(s, x)| (s.clone(), x * c)).collect() }
    }

    /// Largest `|λ|` among the terms.
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|s| s.lambda.size()).max().unwrap_or(0)
    }

    /// Parses the `[{"lambda", "i", "j", "coeff"}]` form.
    pub fn from_json_value(algebra: AlgebraSpec, v: &serde_json::Value) -> Result<Self> {
        let docs: Vec<TermDoc> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = PWElement::zero(algebra);
        for d in docs {
            let s = PWSymbol::new(IrrepLabel::new(algebra, d.lambda)?, d.i, d.j)?;
            out.add_term(s, &d.coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    lambda: Vec<i64>,
    i: usize,
    j: usize,
    coeff: QScalar,
}

impl Serialize for PWElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (sym, c) in &self.terms {
            seq.serialize_element(&TermDoc { lambda: sym.lambda.hw.clone(), i: sym.i, j: sym.j, coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl fmt::Display for PWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})*{s}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of `O_q ⊗ O_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PWTensor {
    pub algebra: AlgebraSpec,
    terms: BTreeMap<(PWSymbol, PWSymbol), QScalar>,
}

impl PWTensor {
    pub fn zero(algebra: AlgebraSpec) -> Self {
        PWTensor { algebra, terms: BTreeMap::new() }
    }

    /// `f ⊗ g`, expanded bilinearly.
    pub fn outer(f: &PWElement, g: &PWElement) -> Result<Self> {
        f.algebra.check_same(&g.algebra)?;
        let mut out = PWTensor::zero(f.algebra);
        for (s1, c1) in f.terms() {
            for (s2, c2) in g.terms() {
                out.add_term(s1.clone(), s2.clone(), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn add_term(&mut self, a: PWSymbol, b: PWSymbol, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
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

    pub fn terms(&self) -> impl Iterator<Item = (&(PWSymbol, PWSymbol), &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Self::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &PWSymbol, b: &PWSymbol) -> QScalar {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.algebra.check_same(&other.algebra)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c);
        }
        Ok(out)
    }
}

impl Serialize for PWTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Side {
            lambda: Vec<i64>,
            i: usize,
            j: usize,
        }
        #[derive(Serialize)]
        struct Doc {
            left: Side,
            right: Side,
            coeff: QScalar,
        }
        let side = |x: &PWSymbol| Side { lambda: x.lambda.hw.clone(), i: x.i, j: x.j };
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((a, b), c) in &self.terms {
            seq.serialize_element(&Doc { left: side(a), right: side(b), coeff: c.clone() })?;
        }
        seq.end()
    }
}
