use num_bigint::BigInt;
use num_rational::BigRational;
use peterweyl::exactmath::{normalize, Laurent, Poly, QMatrix, QScalar, Solution};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Laurent> {
    (-3i64..3, prop::collection::vec(-4i64..=4, 1..4))
        .prop_map(|(low, c)| Laurent::new(low, c.into_iter().map(BigInt::from).collect()))
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |l| l.coeffs.iter().any(|c| *c != BigInt::from(0)))
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| normalize(&n, &d).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = QScalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

/// Sparse-ish entries from a small palette, so ranks vary.
fn entry() -> impl Strategy<Value = QScalar> {
    prop_oneof![
        3 => Just(QScalar::zero()),
        1 => Just(QScalar::one()),
        1 => Just(QScalar::q()),
        1 => Just(QScalar::from(-2)),
        1 => Just(QScalar::q_pow(-1)),
        1 => scalar(),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c)
            .prop_map(move |v| QMatrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn square(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(entry(), n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-7i64..=7, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn addition_is_a_group(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &QScalar::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_and_distributivity(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QScalar::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_scalar(), b in nonzero_scalar()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(a.checked_div(&b).unwrap(), &a * &b.inv().unwrap());
        prop_assert!(QScalar::zero().inv().is_err());
    }

    #[test]
    fn normal_form_is_canonical(n in laurent(), d in nonzero_laurent(), p in nonzero_laurent()) {
        let x = normalize(&n, &d).unwrap();
        // Multiplying numerator and denominator by a common factor changes nothing.
        let pp = normalize(&p, &Laurent::new(0, vec![1.into()])).unwrap();
        let y = normalize(&n, &d).unwrap() * &pp;
        let z = y.checked_div(&pp).unwrap();
        prop_assert_eq!(&x, &z);
        // Rebuilding from the stored parts is a fixed point.
        prop_assert_eq!(QScalar::from_polys(x.numer().clone(), x.denom().clone()).unwrap(), x.clone());
        prop_assert!(Poly::gcd(x.numer(), x.denom()).is_constant());
        prop_assert!(x.denom().leading().unwrap() > &BigInt::from(0));
    }

    #[test]
    fn text_and_json_round_trip(a in scalar()) {
        let back: QScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QScalar>(&json).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in scalar(), b in scalar(), x in rational()) {
        if let (Ok(ea), Ok(eb)) = (a.eval(&x), b.eval(&x)) {
            prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        }
        if let (Ok(ea), Ok(e1)) = (a.eval(&BigRational::from_integer(1.into())), a.eval_at_one()) {
            prop_assert_eq!(ea, e1);
        }
    }

    #[test]
    fn rank_nullity(m in matrix(5)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul(v).unwrap().is_zero());
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let r = m.rref();
        let again = r.matrix.rref();
        prop_assert_eq!(&again.matrix, &r.matrix);
        prop_assert_eq!(again.pivots, r.pivots.clone());
        for (row, &p) in r.pivots.iter().enumerate() {
            prop_assert!(r.matrix.get(row, p).is_one());
        }
    }

    #[test]
    fn inverse_round_trip(m in square(4)) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
            Err(_) => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn solve_agrees_with_multiplication(m in matrix(4), seed in prop::collection::vec(entry(), 4)) {
        let x = QMatrix::from_fn(m.cols(), 1, |i, _| seed[i % seed.len()].clone());
        let b = m.mul(&x).unwrap();
        match m.solve(&b).unwrap() {
            Solution::Unique(y) | Solution::Particular(y) => prop_assert_eq!(m.mul(&y).unwrap(), b),
            Solution::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
        }
    }

    #[test]
    fn products_transpose_and_kron(a in square(3), b in square(3)) {
        if a.cols() == b.rows() {
            prop_assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
        }
        let k = a.kron(&b);
        prop_assert_eq!(k.rows(), a.rows() * b.rows());
        prop_assert_eq!(k.rank(), a.rank() * b.rank());
    }
}
