use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::element::{PWElement, PWSymbol, PWTensor};
use crate::clebsch::CgBasis;
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QScalar};
use crate::uqrep::{irrep, tensor_rep, AlgebraSpec, Family, Generator, IrrepLabel};

/// Perturbs one dual 3j symbol (an entry of `C`) of one tensor product.
/// Exists only to give the Hopf checks a negative control.
#[derive(Clone, Debug)]
pub struct Corruption {
    pub lambda: IrrepLabel,
    pub mu: IrrepLabel,
    pub row: usize,
    pub col: usize,
    pub delta: QScalar,
}

type BasisKey = (IrrepLabel, IrrepLabel);

/// `O_q(G)` for one algebra, with memoized Clebsch-Gordan data and basis
/// products. Caches are filled on demand and never invalidated; every entry
/// is a pure function of its key, so concurrent fills agree.
pub struct OqAlgebra {
    pub spec: AlgebraSpec,
    corruption: Option<Corruption>,
    bases: Mutex<HashMap<BasisKey, Arc<CgBasis>>>,
    products: Mutex<HashMap<(PWSymbol, PWSymbol), Arc<PWElement>>>,
}

static SHARED: Lazy<Mutex<HashMap<AlgebraSpec, Arc<OqAlgebra>>>> = Lazy::new(Default::default);

impl OqAlgebra {
    pub fn new(spec: AlgebraSpec) -> Self {
        OqAlgebra { spec, corruption: None, bases: Default::default(), products: Default::default() }
    }

    pub fn with_corruption(spec: AlgebraSpec, corruption: Corruption) -> Self {
        OqAlgebra { corruption: Some(corruption), ..Self::new(spec) }
    }

    /// Process-wide instance for `spec`.
    pub fn shared(spec: AlgebraSpec) -> Arc<Self> {
        let mut m = SHARED.lock().unwrap_or_else(|p| p.into_inner());
        m.entry(spec).or_insert_with(|| Arc::new(OqAlgebra::new(spec))).clone()
    }

    pub fn cg_basis(&self, lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<Arc<CgBasis>> {
        let key = (lambda.clone(), mu.clone());
        if let Some(b) = self.bases.lock().unwrap_or_else(|p| p.into_inner()).get(&key) {
            return Ok(b.clone());
        }
        let mut basis = CgBasis::new(lambda, mu)?;
        if let Some(c) = &self.corruption {
            if &c.lambda == lambda && &c.mu == mu {
                let v = basis.c.get(c.row, c.col) + &c.delta;
                basis.c.set(c.row, c.col, v);
            }
        }
        let basis = Arc::new(basis);
        self.bases.lock().unwrap_or_else(|p| p.into_inner()).insert(key, basis.clone());
        Ok(basis)
    }

    fn check(&self, a: &AlgebraSpec) -> Result<()> {
        self.spec.check_same(a)
    }

    /// `f^λ_{i₁j₁} · f^μ_{i₂j₂}`.
    pub fn basis_product(&self, s1: &PWSymbol, s2: &PWSymbol) -> Result<Arc<PWElement>> {
        let key = (s1.clone(), s2.clone());
        if let Some(p) = self.products.lock().unwrap_or_else(|p| p.into_inner()).get(&key) {
            return Ok(p.clone());
        }
        self.check(&s1.lambda.algebra)?;
        self.check(&s2.lambda.algebra)?;
        let cg = self.cg_basis(&s1.lambda, &s2.lambda)?;
        let mut out = PWElement::zero(self.spec);
        for (block, a, b, c) in cg.product(s1.i, s1.j, s2.i, s2.j) {
            out.add_term(PWSymbol { lambda: cg.blocks[block].nu.clone(), i: a, j: b }, &c);
        }
        let out = Arc::new(out);
        self.products.lock().unwrap_or_else(|p| p.into_inner()).insert(key, out.clone());
        Ok(out)
    }

    pub fn multiply(&self, f: &PWElement, g: &PWElement) -> Result<PWElement> {
        self.check(&f.algebra)?;
        self.check(&g.algebra)?;
        let mut out = PWElement::zero(self.spec);
        for (s1, c1) in f.terms() {
            for (s2, c2) in g.terms() {
                let c = c1 * c2;
                for (s, x) in self.basis_product(s1, s2)?.terms() {
                    out.add_term(s.clone(), &(x * &c));
                }
            }
        }
        Ok(out)
    }

    /// Product in `O_q ⊗ O_q`, leg by leg.
    pub fn multiply_tensors(&self, x: &PWTensor, y: &PWTensor) -> Result<PWTensor> {
        let mut out = PWTensor::zero(self.spec);
        for ((a1, b1), c1) in x.terms() {
            for ((a2, b2), c2) in y.terms() {
                let c = c1 * c2;
                let left = self.basis_product(a1, a2)?;
                let right = self.basis_product(b1, b2)?;
                for (l, lc) in left.terms() {
                    let lc = lc * &c;
                    for (r, rc) in right.terms() {
                        out.add_term(l.clone(), r.clone(), &(&lc * rc));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every basis product `f^λ_{i₁j₁} f^μ_{i₂j₂}`.
    pub fn structure_constants(&self, lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<StructureTable> {
        let mut entries = Vec::new();
        for s1 in PWSymbol::all_of(lambda) {
            for s2 in PWSymbol::all_of(mu) {
                let p = self.basis_product(&s1, &s2)?;
                let product =
                    p.terms().map(|(s, c)| ProductTerm { nu: s.lambda.hw.clone(), a: s.i, b: s.j, coeff: c.clone() }).collect();
                entries.push(StructureEntry { i1: s1.i, j1: s1.j, i2: s2.i, j2: s2.j, product });
            }
        }
        Ok(StructureTable { algebra: self.spec, lambda: lambda.hw.clone(), mu: mu.hw.clone(), entries })
    }
}

pub fn multiply(f: &PWElement, g: &PWElement) -> Result<PWElement> {
    f.algebra.check_same(&g.algebra)?;
    OqAlgebra::shared(f.algebra).multiply(f, g)
}

pub fn structure_constants(lambda: &IrrepLabel, mu: &IrrepLabel) -> Result<StructureTable> {
    lambda.algebra.check_same(&mu.algebra)?;
    OqAlgebra::shared(lambda.algebra).structure_constants(lambda, mu)
}

/// `(i, j, i₁, j₁, i₂, j₂, n)`: `f_{i₁j₁} ⊗ f_{i₂j₂}` occurs `n` times in `Δ(f_{ij})`.
pub type CoproductConstant = (usize, usize, usize, usize, usize, usize, i64);

/// Integer structure constants of `Δ(f_{ij}) = Σ_z f_{iz} ⊗ f_{zj}`.
/// Depends on nothing but the dimension.
pub fn coproduct_constants(dim: usize) -> Vec<CoproductConstant> {
    let mut out = Vec::with_capacity(dim * dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for z in 0..dim {
                out.push((i, j, i, z, z, j, 1));
            }
        }
    }
    out
}

pub fn comultiply(f: &PWElement) -> PWTensor {
    let mut out = PWTensor::zero(f.algebra);
    let mut cache: HashMap<usize, Vec<CoproductConstant>> = HashMap::new();
    for (s, c) in f.terms() {
        let table = cache.entry(s.lambda.dim()).or_insert_with_key(|&d| coproduct_constants(d));
        for &(i, j, i1, j1, i2, j2, n) in table.iter() {
            if i == s.i && j == s.j {
                let a = PWSymbol { lambda: s.lambda.clone(), i: i1, j: j1 };
                let b = PWSymbol { lambda: s.lambda.clone(), i: i2, j: j2 };
                out.add_term(a, b, &(c * &QScalar::from_i64(n)));
            }
        }
    }
    out
}

/// `ε(f^λ_{ij}) = δ_{ij}`.
pub fn counit(f: &PWElement) -> QScalar {
    f.terms().filter(|(s, _)| s.i == s.j).map(|(_, c)| c.clone()).sum()
}

/// `(ε ⊗ id)` or `(id ⊗ ε)` applied to a tensor.
pub fn counit_leg(t: &PWTensor, left: bool) -> PWElement {
    let mut out = PWElement::zero(t.algebra);
    for ((a, b), c) in t.terms() {
        let (eps, keep) = if left { (a, b) } else { (b, a) };
        if eps.i == eps.j {
            out.add_term(keep.clone(), c);
        }
    }
    out
}

fn check_word(algebra: AlgebraSpec, word: &[Generator]) -> Result<()> {
    if let Some(g) = word.iter().find(|g| g.index() >= algebra.rank()) {
        return Err(Error::InvalidArgument(format!("{g} is not a generator of {algebra}")));
    }
    Ok(())
}

/// `⟨f, u⟩` for `u` the ordered product of `word`.
pub fn pairing(f: &PWElement, word: &[Generator]) -> Result<QScalar> {
    check_word(f.algebra, word)?;
    let mut mats: HashMap<&IrrepLabel, QMatrix> = HashMap::new();
    let mut acc = QScalar::zero();
    for (s, c) in f.terms() {
        if !mats.contains_key(&s.lambda) {
            mats.insert(&s.lambda, irrep(&s.lambda)?.rep.act_word(word));
        }
        acc += c * mats[&s.lambda].get(s.i, s.j);
    }
    Ok(acc)
}

/// `⟨x, Δu⟩`, with `Δu` acting through the coproduct on `ρ_λ ⊗ ρ_μ`.
pub fn tensor_pairing(x: &PWTensor, word: &[Generator]) -> Result<QScalar> {
    check_word(x.algebra, word)?;
    let mut mats: HashMap<(&IrrepLabel, &IrrepLabel), QMatrix> = HashMap::new();
    let mut acc = QScalar::zero();
    for ((a, b), c) in x.terms() {
        let key = (&a.lambda, &b.lambda);
        let m = match mats.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let r = tensor_rep(&irrep(&a.lambda)?.rep, &irrep(&b.lambda)?.rep)?;
                e.insert(r.act_word(word))
            }
        };
        let db = b.lambda.dim();
        acc += c * m.get(a.i * db + b.i, a.j * db + b.j);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTerm {
    pub nu: Vec<i64>,
    pub a: usize,
    pub b: usize,
    pub coeff: QScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub product: Vec<ProductTerm>,
}

/// `f^λ_{i₁j₁} f^μ_{i₂j₂} = Σ coeff · f^ν_{ab}` for all index quadruples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTable {
    pub algebra: AlgebraSpec,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub entries: Vec<StructureEntry>,
}

mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `(i₁, j₁, i₂, j₂, ν, a, b)`.
pub type ClassicalKey = (usize, usize, usize, usize, Vec<i64>, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalTerm {
    pub nu: Vec<i64>,
    pub a: usize,
    pub b: usize,
    #[serde(with = "rational_str")]
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalEntry {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub product: Vec<ClassicalTerm>,
}

/// A structure table evaluated at `q = 1`. Terms that vanish there are kept
/// out, so tables compare directly with a classical computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalTable {
    pub algebra: AlgebraSpec,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub entries: Vec<ClassicalEntry>,
}

impl ClassicalTable {
    /// `(i₁, j₁, i₂, j₂, ν, a, b) → value`, nonzero values only.
    pub fn as_map(&self) -> BTreeMap<ClassicalKey, BigRational> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            for t in &e.product {
                m.insert((e.i1, e.j1, e.i2, e.j2, t.nu.clone(), t.a, t.b), t.value.clone());
            }
        }
        m
    }
}

pub fn specialize_q1(table: &StructureTable) -> Result<ClassicalTable> {
    let mut entries = Vec::with_capacity(table.entries.len());
    for e in &table.entries {
        let mut product = Vec::new();
        for t in &e.product {
            let value = t.coeff.eval_at_one().map_err(|_| Error::PoleAtOne {
                entry: format!(
                    "f[{:?}]_{{{},{}}} · f[{:?}]_{{{},{}}} → f[{:?}]_{{{},{}}} = {}",
                    table.lambda, e.i1, e.j1, table.mu, e.i2, e.j2, t.nu, t.a, t.b, t.coeff
                ),
            })?;
            if value != BigRational::from_integer(0.into()) {
                product.push(ClassicalTerm { nu: t.nu.clone(), a: t.a, b: t.b, value });
            }
        }
        entries.push(ClassicalEntry { i1: e.i1, j1: e.j1, i2: e.i2, j2: e.j2, product });
    }
    Ok(ClassicalTable { algebra: table.algebra, lambda: table.lambda.clone(), mu: table.mu.clone(), entries })
}

/// All labels of `algebra` with `|λ| ≤ max_weight`, ascending.
pub fn labels_up_to(algebra: AlgebraSpec, max_weight: usize) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    match algebra.family {
        Family::Sl2 => {
            for n in 0..=max_weight as i64 {
                out.push(IrrepLabel { algebra, hw: vec![n] });
            }
        }
        Family::Gl => {
            fn rec(k: usize, left: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for p in 0..=left.min(cap) {
                    cur.push(p);
                    rec(k, left - p, p, cur, out);
                    cur.pop();
                }
            }
            let mut parts = Vec::new();
            rec(algebra.k, max_weight as i64, max_weight as i64, &mut Vec::new(), &mut parts);
            parts.sort();
            out.extend(parts.into_iter().map(|hw| IrrepLabel { algebra, hw }));
        }
    }
    out
}
