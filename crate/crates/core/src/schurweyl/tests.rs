use super::*;
use crate::exactmath::{QMatrix, QScalar};
use crate::ofun::pbw::generator;
use crate::ofun::{comultiply, OqAlgebra, PWElement};
use crate::uqrep::{AlgebraSpec, Generator};

fn dims(k: usize, n: usize) -> Vec<(Vec<i64>, usize, usize)> {
    schur_weyl_decompose(k, n).unwrap().isotypic.iter().map(|c| (c.lambda.hw.clone(), c.dim_v, c.dim_w)).collect()
}

#[test]
fn dimension_tables() {
    assert_eq!(dims(2, 2), vec![(vec![2, 0], 3, 1), (vec![1, 1], 1, 1)]);
    assert_eq!(dims(2, 3), vec![(vec![3, 0], 4, 1), (vec![2, 1], 2, 2)]);
    assert_eq!(dims(3, 3), vec![(vec![3, 0, 0], 10, 1), (vec![2, 1, 0], 8, 2), (vec![1, 1, 1], 1, 1)]);
    assert_eq!(dims(2, 0), vec![(vec![0, 0], 1, 1)]);
    assert_eq!(schur_weyl_decompose(2, 3).unwrap().summary().identity, "4x1 + 2x2 = 8");
}

/// Coordinates of `s = e₂⊗e₁ + q e₁⊗e₂`, `t = e₂⊗e₁ − q⁻¹ e₁⊗e₂` and of
/// the dual vectors `s*`, `t*` on the zero-weight space.
fn s_t() -> [Vec<QScalar>; 4] {
    let q = QScalar::q();
    let qi = QScalar::q_pow(-1);
    let s = vec![0.into(), q.clone(), 1.into(), 0.into()];
    let t = vec![0.into(), -&qi, 1.into(), 0.into()];
    let m = QMatrix::from_rows(vec![vec![q, -&qi], vec![1.into(), 1.into()]]).unwrap();
    let inv = m.inverse().unwrap();
    let s_star = vec![0.into(), inv.get(0, 0).clone(), inv.get(0, 1).clone(), 0.into()];
    let t_star = vec![0.into(), inv.get(1, 0).clone(), inv.get(1, 1).clone(), 0.into()];
    [s, t, s_star, t_star]
}

#[test]
fn cross_terms_are_killed() {
    let d = schur_weyl_decompose(2, 2).unwrap();
    let [s, t, s_star, t_star] = s_t();
    let st = FunctionalElement::outer(2, 2, &s_star, &t).unwrap();
    let ts = FunctionalElement::outer(2, 2, &t_star, &s).unwrap();
    assert!(d.project_pi(&st).unwrap().is_zero());
    assert!(d.project_pi(&ts).unwrap().is_zero());
    let ss = FunctionalElement::outer(2, 2, &s_star, &s).unwrap();
    assert!(!d.project_pi(&ss).unwrap().is_zero());
}

#[test]
fn pi_equals_half_one_plus_q() {
    let d = schur_weyl_decompose(2, 2).unwrap();
    let pi = d.pi_matrix().unwrap();
    assert_eq!(pi, pi_from_involution(2).unwrap());
    assert_eq!(pi.rank(), 10);
    assert_eq!(pi.mul(&pi).unwrap(), pi);
}

#[test]
fn pi_rank_and_idempotence_k3() {
    let d = schur_weyl_decompose(3, 2).unwrap();
    let pi = d.pi_matrix().unwrap();
    assert_eq!(pi.mul(&pi).unwrap(), pi);
    assert_eq!(pi.rank(), 36 + 9);
    assert_eq!(pi, pi_from_involution(3).unwrap());
}

#[test]
fn pi_at_one_is_the_symmetrizer() {
    for (k, n) in [(2, 1), (2, 2), (2, 3), (3, 2)] {
        let pi = schur_weyl_decompose(k, n).unwrap().pi_matrix().unwrap();
        let p = classical_symmetrizer(k, n).unwrap();
        assert_eq!(pi.eval_at_one().unwrap(), p.eval_at_one().unwrap(), "k={k} n={n}");
    }
    let p = classical_symmetrizer(2, 2).unwrap();
    assert_eq!(p.mul(&p).unwrap(), p);
}

#[test]
fn equivariant_basis_is_fixed() {
    let d = schur_weyl_decompose(2, 3).unwrap();
    for (comp, iso) in d.isotypic.iter().enumerate() {
        for b in 0..iso.dim_v {
            for c in 0..iso.dim_v {
                let x = d.equivariant_basis(comp, b, c).unwrap();
                assert_eq!(d.project_pi(&x).unwrap(), x);
            }
        }
    }
}

#[test]
fn sw_products_agree_with_peter_weyl() {
    for k in 2..=3 {
        let sw = SchurWeyl::new(k).unwrap();
        let alg = OqAlgebra::shared(AlgebraSpec::gl(k).unwrap());
        let d1 = sw.decomp(1).unwrap();
        let d2 = sw.decomp(2).unwrap();
        let gens: Vec<PWElement> = (0..k * k).map(|g| generator(&alg, g / k, g % k).unwrap()).collect();
        for x in &gens {
            for y in &gens {
                let fx = d1.pw_to_functional(x).unwrap();
                let fy = d1.pw_to_functional(y).unwrap();
                let prod = sw.multiply_sw(&fx, &fy).unwrap();
                assert_eq!(d2.functional_to_pw(&prod).unwrap(), alg.multiply(x, y).unwrap());
            }
        }
    }
}

#[test]
fn sw_unit_and_coproduct() {
    let sw = SchurWeyl::new(2).unwrap();
    let alg = OqAlgebra::shared(AlgebraSpec::gl(2).unwrap());
    let d1 = sw.decomp(1).unwrap();
    let a = generator(&alg, 0, 0).unwrap();
    let fa = d1.pw_to_functional(&a).unwrap();
    assert_eq!(sw.multiply_sw(&fa, &sw.unit()).unwrap(), fa);
    assert_eq!(sw.multiply_sw(&sw.unit(), &fa).unwrap(), fa);
    let delta = sw.comultiply_sw(&fa).unwrap();
    let mut expected = FunctionalTensor { k: 2, n: 1, ..Default::default() };
    for ((l, r), c) in comultiply(&a).terms() {
        let fl = d1.pw_to_functional(&PWElement::from_symbol(l.clone())).unwrap();
        let fr = d1.pw_to_functional(&PWElement::from_symbol(r.clone())).unwrap();
        for (&x, cx) in fl.terms() {
            for (&y, cy) in fr.terms() {
                expected.add_term(x, y, &(c * &(cx * cy)));
            }
        }
    }
    assert_eq!(delta, expected);
}

#[test]
fn frt_k2_relations() {
    let report = frt_relations(2).unwrap();
    assert!(report.passed());
    assert_eq!(report.entries_checked, 16);
    let text: Vec<String> = report.relations.iter().map(|r| r.text()).collect();
    assert_eq!(
        text,
        vec![
            "a*b - q*b*a = 0",
            "a*c - q*c*a = 0",
            "a*d - d*a - (q - q^-1)*b*c = 0",
            "b*d - q*d*b = 0",
            "c*b - b*c = 0",
            "c*d - q*d*c = 0",
        ]
    );
    for r in &report.relations {
        let at1 = r.at_q1().unwrap();
        assert_eq!(at1.len(), 2);
        assert_eq!(at1[0].1, -at1[1].1.clone());
    }
}

#[test]
fn frt_k3_entries_vanish() {
    let report = frt_relations(3).unwrap();
    assert!(report.passed());
    assert_eq!(report.entries_checked, 81);
    assert_eq!(report.relations.len(), 36);
}

#[test]
fn hecke_commutes_with_action() {
    for (k, n) in [(2, 3), (3, 3)] {
        let rep = tensor_power_rep(k, n).unwrap();
        for t in hecke_generators(k, n).unwrap() {
            for g in Generator::all(rep.algebra) {
                let m = rep.generator(g);
                assert_eq!(t.mul(m).unwrap(), m.mul(&t).unwrap());
            }
        }
    }
}

#[test]
fn degree_mismatch_is_rejected() {
    let d = schur_weyl_decompose(2, 2).unwrap();
    let f = FunctionalElement::basis(2, &[0], &[1]).unwrap();
    assert!(d.project_pi(&f).is_err());
}
