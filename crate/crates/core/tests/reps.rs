use proptest::prelude::*;
use qkfact::exactq::{sample_params, Admissibility, ParamPoint, Scalar};
use qkfact::fock::{FockOp, FockSpace};
use qkfact::reps::{
    build_rep, check_serre, coaction, general_grading_identity, grading_shift, psi_twist, tables_equal, weight_check, Gen, RepName,
};

fn params(seed: u64) -> ParamPoint {
    sample_params(seed, &Admissibility::default()).unwrap()
}

#[test]
fn documented_table_entries() {
    let p = params(101);
    let q2 = &p.q * &p.q;
    let rho = build_rep(RepName::Rho, &p, 6).unwrap();
    assert_eq!(rho.get(Gen::E1).unwrap().apply_basis(1), &[(0, &q2 / &(Scalar::one() - &q2))]);
    let ups = build_rep(RepName::Upsilon, &p, 6).unwrap();
    for j in 0..=6usize {
        let want = &(&p.u * &p.u) * &p.q.pow(-1 - 2 * j as i64).unwrap();
        assert_eq!(ups.get(Gen::K1).unwrap().apply_basis(j), &[(j, want)]);
    }
    let phi = build_rep(RepName::Phi, &p, 6).unwrap();
    assert_eq!(phi.get(Gen::E0).unwrap().nnz(), 0);
}

#[test]
fn grading_shift_is_a_group_action() {
    let p = params(102);
    let rho = build_rep(RepName::Rho, &p, 5).unwrap();
    assert_eq!(tables_equal(&grading_shift(&rho, &Scalar::one()).unwrap(), &rho).unwrap(), None);
    let (z, w) = (p.z().clone(), p.spec("w").unwrap().clone());
    let twice = grading_shift(&grading_shift(&rho, &z).unwrap(), &w).unwrap();
    assert_eq!(tables_equal(&twice, &grading_shift(&rho, &(&z * &w)).unwrap()).unwrap(), None);
}

#[test]
fn coproduct_of_e1_on_rho_rhobar() {
    let p = params(103);
    let (q, n) = (&p.q, 5);
    let rho = build_rep(RepName::Rho, &p, n).unwrap();
    let rhob = build_rep(RepName::RhoBar, &p, n).unwrap();
    let got = coaction(&rho, &rhob, Gen::E1, false).unwrap();
    let s = FockSpace::fock_legs(n, 2);
    let c = (Scalar::one() - q * q).inv().unwrap();
    let a = |leg| qkfact::fock::make_generator(&qkfact::fock::Generator::A, leg, &s, q).unwrap();
    let k = FockOp::diagonal(&s, |d| q.pow(-2 * d[0] as i64)).unwrap();
    let want = a(0).scale(&(&(q * q) * &c)).add(&k.compose(&a(1)).unwrap().scale(&c)).unwrap();
    assert!(got.agree_on_window(&want).unwrap().is_equal());
}

#[test]
fn trivial_coproduct_is_one_dimensional() {
    let p = params(104);
    let t = build_rep(RepName::Trivial, &p, 3).unwrap();
    for g in [Gen::E0, Gen::K1] {
        let x = coaction(&t, &t, g, false).unwrap();
        assert_eq!(x.domain().dim(), 1);
    }
    assert_eq!(coaction(&t, &t, Gen::K1, false).unwrap().apply_basis(0), &[(0, Scalar::one())]);
}

#[test]
fn corrupting_one_table_is_detected() {
    let p = params(105);
    let rho = build_rep(RepName::Rho, &p, 6).unwrap();
    let e0 = rho.get(Gen::E0).unwrap();
    let bump = FockOp::diagonal(&rho.carrier, |d| Ok(Scalar::from_int(if d[0] == 2 { 2 } else { 1 }))).unwrap();
    let bad = rho.with_image(Gen::E0, e0.compose(&bump).unwrap()).unwrap();
    let r = check_serre(&bad).unwrap();
    assert!(!r.passed());
    assert!(check_serre(&rho).unwrap().passed());
}

#[test]
fn psi_dictionary() {
    let p = params(106);
    for (plus, minus) in [(RepName::Rho, RepName::RhoMinus), (RepName::RhoBar, RepName::RhoBarMinus), (RepName::Phi, RepName::PhiMinus)] {
        let t = psi_twist(&build_rep(plus, &p, 5).unwrap(), minus).unwrap();
        assert_eq!(tables_equal(&t, &build_rep(minus, &p, 5).unwrap()).unwrap(), None, "{plus}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn every_table_is_a_representation(seed in 0u64..10_000) {
        let p = params(seed);
        let zz = p.spec("Z").unwrap().clone();
        for name in RepName::NAMED {
            let rep = build_rep(name, &p, 5).unwrap();
            prop_assert!(check_serre(&rep).unwrap().passed(), "{}", name);
            prop_assert!(weight_check(&rep).unwrap().passed(), "{}", name);
            for (s0, s1) in [(0, 1), (1, 0), (1, 1)] {
                prop_assert!(general_grading_identity(&rep, s0, s1, &zz).unwrap().passed(), "{} {} {}", name, s0, s1);
            }
        }
    }
}
