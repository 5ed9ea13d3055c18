use proptest::prelude::*;
use qkfact::exactq::{certificate_violation, q_pochhammer, q_pochhammer_inv, qexp_big_nilpotent, qexp_nilpotent, sample_params, Admissibility, ParamPoint, Scalar};
use qkfact::linalg::Matrix;
use qkfact::Error;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

#[test]
fn pochhammer_examples() {
    assert_eq!(q_pochhammer(&s(1, 3), &s(1, 2), 0).unwrap(), Scalar::one());
    assert_eq!(q_pochhammer(&s(1, 3), &s(1, 2), 2).unwrap(), s(5, 9));
    assert_eq!(q_pochhammer(&s(1, 2), &s(1, 3), -1).unwrap(), s(-2, 1));
}

#[test]
fn negative_index_reports_the_vanishing_factor() {
    // 1 - x p^{-1} = 0 at x = p
    let e = q_pochhammer(&s(1, 3), &s(1, 3), -2).unwrap_err();
    assert!(matches!(e, Error::VanishingFactor { index: -1, .. }), "{e:?}");
}

#[test]
fn exponential_examples() {
    let p = s(1, 2);
    assert_eq!(qexp_nilpotent(&Matrix::zeros(3, 3), &p).unwrap(), Matrix::identity(3));
    let c = s(-7, 5);
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, c.clone());
    let e = qexp_nilpotent(&m, &p).unwrap();
    let mut want = Matrix::identity(2);
    want.set(0, 1, &c * &s(2, 1));
    assert_eq!(e, want);
    let lhs = qexp_nilpotent(&m.scale(&p), &p).unwrap();
    let rhs = Matrix::identity(2).sub(&m).unwrap().mul(&e).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn exponential_rejects_non_nilpotent() {
    let m = Matrix::identity(2);
    assert!(matches!(qexp_nilpotent(&m, &s(1, 2)), Err(Error::NotNilpotent(_))));
}

#[test]
fn sampling_contract() {
    let adm = Admissibility::default();
    let a = sample_params(1, &adm).unwrap();
    assert_eq!(a, sample_params(1, &adm).unwrap());
    assert_eq!(certificate_violation(&a, &adm), None);
    let mut forced = Admissibility::default();
    forced.overrides.insert("q".into(), Scalar::one());
    assert!(matches!(sample_params(1, &forced), Err(Error::SamplerExhausted { .. })));
}

#[test]
fn overrides_take_precedence() {
    let mut adm = Admissibility::default();
    adm.overrides.insert("xi".into(), s(3, 7));
    let p = sample_params(9, &adm).unwrap();
    assert_eq!(p.xi, s(3, 7));
    adm.overrides.insert("nonsense".into(), s(3, 7));
    assert!(sample_params(9, &adm).is_err());
}

#[test]
fn params_serialize_as_flat_string_map() {
    let p = sample_params(4, &Admissibility::default()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&p).unwrap();
    assert_eq!(v["q"], serde_json::Value::String(p.q.to_string()));
    let back: ParamPoint = serde_json::from_value(v).unwrap();
    assert_eq!(back, p);
}

fn rational() -> impl Strategy<Value = Scalar> {
    (1i64..40, 1i64..40, any::<bool>()).prop_map(|(n, d, neg)| if neg { -Scalar::ratio(n, d) } else { Scalar::ratio(n, d) })
}

fn strictly_lower(dim: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), dim * dim).prop_map(move |v| {
        let mut m = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..i {
                m.set(i, j, v[i * dim + j].clone());
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pochhammer_chain(x in rational(), p in rational(), n in 0i64..=6) {
        prop_assume!(!p.abs().is_one());
        let one = Scalar::one();
        let neg = match q_pochhammer(&x, &p, -n) { Ok(v) => v, Err(_) => return Ok(()) };
        let fwd = q_pochhammer(&(&p.pow(-n).unwrap() * &x), &p, n).unwrap();
        prop_assert_eq!(&neg * &fwd, one.clone());
        let refl = q_pochhammer(&(&p / &x), &p, n).unwrap();
        if !refl.is_zero() {
            let rhs = &(&(-&x).pow(-n).unwrap() * &p.pow(n * (n + 1) / 2).unwrap()) / &refl;
            prop_assert_eq!(&neg, &rhs);
        }
        if let Ok(inv) = q_pochhammer_inv(&x, &p, n) {
            prop_assert_eq!(&inv * &q_pochhammer(&x, &p, n).unwrap(), one);
        }
    }

    #[test]
    fn exponential_inverse_laws(m in (1usize..=6).prop_flat_map(strictly_lower), p in rational()) {
        prop_assume!(!p.abs().is_one());
        let e = qexp_nilpotent(&m, &p).unwrap();
        let pi = p.inv().unwrap();
        let e_inv = qexp_nilpotent(&m.scale(&pi), &pi).unwrap();
        prop_assert_eq!(e.mul(&e_inv).unwrap(), Matrix::identity(m.rows()));
        let big = qexp_big_nilpotent(&m.scale(&-Scalar::one()), &p).unwrap();
        prop_assert_eq!(e.mul(&big).unwrap(), Matrix::identity(m.rows()));
    }

    #[test]
    fn scalar_text_round_trip(x in rational()) {
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}
