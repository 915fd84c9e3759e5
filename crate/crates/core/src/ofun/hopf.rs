use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::algebra::{comultiply, counit, counit_leg, labels_up_to, OqAlgebra};
use super::element::{PWElement, PWSymbol, PWTensor};
use crate::error::Result;
use crate::exactmath::QScalar;
use crate::uqrep::IrrepLabel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFailure {
    pub axiom: String,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub labels: Vec<Vec<i64>>,
    /// Number of exact identities evaluated, per axiom.
    pub checked: BTreeMap<String, usize>,
    pub failures: Vec<HopfFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, axiom: &str, ok: bool, witness: impl FnOnce() -> String) {
        *self.checked.entry(axiom.to_string()).or_default() += 1;
        if !ok {
            self.failures.push(HopfFailure { axiom: axiom.to_string(), witness: witness() });
        }
    }
}

/// Random elements with a few terms and small coefficients in `ℚ(q)`.
pub fn random_element(rng: &mut impl Rng, symbols: &[PWSymbol]) -> PWElement {
    let algebra = symbols[0].lambda.algebra;
    let mut f = PWElement::zero(algebra);
    for _ in 0..rng.gen_range(1..=3) {
        let s = symbols.choose(rng).expect("nonempty").clone();
        f.add_term(s, &random_scalar(rng));
    }
    f
}

pub fn random_scalar(rng: &mut impl Rng) -> QScalar {
    let mut c = QScalar::from_i64(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
    c *= &QScalar::q_pow(rng.gen_range(-1..=1));
    if rng.gen_bool(0.25) {
        c += QScalar::one();
    }
    if c.is_zero() {
        QScalar::one()
    } else {
        c
    }
}

/// Bialgebra axioms on every symbol of weight `≤ max_weight` (all pairs and
/// triples) plus `samples` random combinations.
pub fn verify_hopf(alg: &OqAlgebra, max_weight: usize, samples: usize, seed: u64) -> Result<HopfReport> {
    verify_hopf_on(alg, &labels_up_to(alg.spec, max_weight), samples, seed)
}

pub fn verify_hopf_on(alg: &OqAlgebra, labels: &[IrrepLabel], samples: usize, seed: u64) -> Result<HopfReport> {
    let mut report = HopfReport { labels: labels.iter().map(|l| l.hw.clone()).collect(), ..Default::default() };
    let symbols: Vec<PWSymbol> = labels.iter().flat_map(PWSymbol::all_of).collect();
    let elems: Vec<PWElement> = symbols.iter().cloned().map(PWElement::from_symbol).collect();
    let unit = PWElement::unit(alg.spec);

    report.record("unit comultiplication", comultiply(&unit) == PWTensor::outer(&unit, &unit)?, || "Δ1 ≠ 1⊗1".into());
    for f in &elems {
        single_checks(alg, &mut report, f, &unit)?;
    }

    let mut pair = BTreeMap::new();
    for (x, f) in elems.iter().enumerate() {
        for (y, g) in elems.iter().enumerate() {
            let fg = alg.multiply(f, g)?;
            pair_checks(alg, &mut report, f, g, &fg)?;
            pair.insert((x, y), fg);
        }
    }
    for (x, f) in elems.iter().enumerate() {
        for (y, g) in elems.iter().enumerate() {
            for (z, h) in elems.iter().enumerate() {
                let left = alg.multiply(&pair[&(x, y)], h)?;
                let right = alg.multiply(f, &pair[&(y, z)])?;
                report.record("associativity", left == right, || format!("f = {f}, g = {g}, h = {h}"));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let f = random_element(&mut rng, &symbols);
        let g = random_element(&mut rng, &symbols);
        let h = random_element(&mut rng, &symbols);
        single_checks(alg, &mut report, &f, &unit)?;
        let fg = alg.multiply(&f, &g)?;
        pair_checks(alg, &mut report, &f, &g, &fg)?;
        let left = alg.multiply(&fg, &h)?;
        let right = alg.multiply(&f, &alg.multiply(&g, &h)?)?;
        report.record("associativity", left == right, || format!("f = {f}, g = {g}, h = {h}"));
    }
    Ok(report)
}

fn single_checks(alg: &OqAlgebra, report: &mut HopfReport, f: &PWElement, unit: &PWElement) -> Result<()> {
    let d = comultiply(f);
    report.record("counit (ε⊗id)Δ = id", counit_leg(&d, true) == *f, || format!("f = {f}"));
    report.record("counit (id⊗ε)Δ = id", counit_leg(&d, false) == *f, || format!("f = {f}"));
    report.record("coassociativity", coassoc_left(&d) == coassoc_right(&d), || format!("f = {f}"));
    report.record("unit", alg.multiply(unit, f)? == *f && alg.multiply(f, unit)? == *f, || format!("f = {f}"));
    Ok(())
}

fn pair_checks(alg: &OqAlgebra, report: &mut HopfReport, f: &PWElement, g: &PWElement, fg: &PWElement) -> Result<()> {
    let lhs = comultiply(fg);
    let rhs = alg.multiply_tensors(&comultiply(f), &comultiply(g))?;
    report.record("Δ(fg) = Δ(f)Δ(g)", lhs == rhs, || format!("f = {f}, g = {g}"));
    report.record("ε(fg) = ε(f)ε(g)", counit(fg) == counit(f) * counit(g), || format!("f = {f}, g = {g}"));
    Ok(())
}

type Triple = BTreeMap<(PWSymbol, PWSymbol, PWSymbol), QScalar>;

fn add3(m: &mut Triple, k: (PWSymbol, PWSymbol, PWSymbol), c: QScalar) {
    let e = m.entry(k).or_default();
    *e += &c;
}

/// `(Δ⊗id)Δ`.
fn coassoc_left(d: &PWTensor) -> Triple {
    let mut m = Triple::new();
    for ((a, b), c) in d.terms() {
        for ((x, y), c2) in comultiply(&PWElement::from_symbol(a.clone())).terms() {
            add3(&mut m, (x.clone(), y.clone(), b.clone()), c * c2);
        }
    }
    m.retain(|_, v| !v.is_zero());
    m
}

/// `(id⊗Δ)Δ`.
fn coassoc_right(d: &PWTensor) -> Triple {
    let mut m = Triple::new();
    for ((a, b), c) in d.terms() {
        for ((x, y), c2) in comultiply(&PWElement::from_symbol(b.clone())).terms() {
            add3(&mut m, (a.clone(), x.clone(), y.clone()), c * c2);
        }
    }
    m.retain(|_, v| !v.is_zero());
    m
}
