use qkfact::exactq::{sample_params, Admissibility, ParamPoint, Scalar};
use qkfact::fock::{FockOp, FockSpace};
use qkfact::operators::{build_fusion, build_k, build_l, build_o, build_r, w_c2, Boundary, FusionKind, OVariant, RPair, Variant, CATALOGUE};
use qkfact::reps::RepName;

fn params(seed: u64) -> ParamPoint {
    sample_params(seed, &Admissibility::default()).unwrap()
}

fn sorted(mut v: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    v.sort_by_key(|t| t.0);
    v
}

#[test]
fn l_operators_on_the_vacuum() {
    let p = params(201);
    let (q, z) = (&p.q, p.z());
    let s = w_c2(5);
    let at = |d: [usize; 2]| s.index(&d).unwrap();
    let one = Scalar::one();
    let l = build_l(RepName::Rho, z, Variant::Plus, &p, 5).unwrap();
    assert_eq!(l.apply_basis(at([0, 0])), &[(at([0, 0]), one.clone())]);
    let want = sorted(vec![
        (at([1, 0]), &(&q.inv().unwrap() * z) * &(&one - &(q * q))),
        (at([0, 1]), &one - &(&(q * q) * &(z * z))),
    ]);
    assert_eq!(l.apply_basis(at([0, 1])), want.as_slice());
    let phi = build_l(RepName::Phi, z, Variant::Plus, &p, 5).unwrap();
    assert_eq!(phi.apply_basis(at([0, 0])), &[(at([0, 0]), q.clone())]);
}

#[test]
fn l_variants() {
    let p = params(202);
    let z = p.z();
    let pz = &p.p() * z;
    for pi in [RepName::Rho, RepName::RhoBar, RepName::Upsilon, RepName::Phi] {
        let plus = build_l(pi, z, Variant::Plus, &p, 5).unwrap();
        assert_eq!(build_l(pi, z, Variant::Minus, &p, 5).unwrap(), plus.flip_legs().unwrap());
        let t = build_l(pi, z, Variant::Tilde, &p, 5).unwrap();
        let prod = t.compose(&build_l(pi, &pz, Variant::Plus, &p, 5).unwrap()).unwrap();
        assert!(prod.agree_on_window(&FockOp::identity(&w_c2(5))).unwrap().is_equal(), "{pi}");
    }
}

#[test]
fn k_operator_values() {
    let p = params(203);
    let (q, z, xi, u) = (&p.q, p.z(), &p.xi, &p.u);
    let one = Scalar::one();
    for pi in [RepName::Rho, RepName::RhoBar, RepName::Upsilon, RepName::Phi] {
        assert_eq!(build_k(pi, z, Boundary::Right, &p, 4).unwrap().apply_basis(0), &[(0, one.clone())], "{pi}");
    }
    let k = build_k(RepName::Rho, z, Boundary::Right, &p, 4).unwrap();
    let want = &(-&(&q.inv().unwrap() * xi)) * &(&one - &(&(&(q * q) / xi) * &(z * z)));
    assert_eq!(k.apply_basis(1), &[(1, want)]);
    let k = build_k(RepName::Phi, z, Boundary::Right, &p, 4).unwrap();
    let want = &(&u.pow(-4).unwrap() * &q.pow(-6).unwrap()) * &(xi * xi);
    assert_eq!(k.apply_basis(2), &[(2, want)]);
    let kpi = build_k(RepName::Pi, z, Boundary::Right, &p, 4).unwrap();
    assert_eq!(kpi.apply_basis(0), &[(0, &(xi * &(z * z)) - &one)]);
    assert_eq!(kpi.apply_basis(1), &[(1, xi - &(z * z))]);
}

#[test]
fn r_and_o_values() {
    let p = params(204);
    let (q, z, u) = (&p.q, p.z(), &p.u);
    let s = FockSpace::fock_legs(5, 2);
    let at = |d: [usize; 2]| s.index(&d).unwrap();
    let one = Scalar::one();
    let r = build_r(RPair::RhoRhoBar, z, false, &p, 5).unwrap();
    assert_eq!(r.apply_basis(at([0, 0])), &[(at([0, 0]), one.clone())]);
    let q2i = q.pow(-2).unwrap();
    let want = sorted(vec![(at([1, 0]), q2i.clone()), (at([0, 1]), -&(&(&q2i * q) * z))]);
    assert_eq!(r.apply_basis(at([1, 0])), want.as_slice());
    let r0 = build_r(RPair::UpsilonPhi, &Scalar::zero(), false, &p, 5).unwrap();
    let diag = FockOp::diagonal(&s, |d| {
        let (j1, j2) = (d[0] as i64, d[1] as i64);
        Ok(&u.pow(2 * (j2 - j1))? * &q.pow((j1 - j2) - 2 * j1 * (j2 + 1))?)
    })
    .unwrap();
    assert!(r0.agree_on_blocks(&diag, 5).unwrap().is_equal());
    let o = build_o(OVariant::O, &p, 5).unwrap();
    assert_eq!(o.apply_basis(at([0, 0])), &[(at([0, 0]), one)]);
    let want = sorted(vec![(at([1, 0]), u.clone()), (at([0, 1]), u.clone())]);
    assert_eq!(o.apply_basis(at([1, 0])), want.as_slice());
    let oi = build_o(OVariant::Inverse, &p, 5).unwrap();
    assert!(o.compose(&oi).unwrap().agree_on_blocks(&FockOp::identity(&s), 5).unwrap().is_equal());
    assert_eq!(build_o(OVariant::O21, &p, 5).unwrap(), o.flip_legs().unwrap());
}

#[test]
fn r_tilde_inverts_shifted_r() {
    let p = params(205);
    let z = p.z();
    let s = FockSpace::fock_legs(5, 2);
    for pair in [RPair::RhoRhoBar, RPair::UpsilonPhi] {
        let rt = build_r(pair, z, true, &p, 5).unwrap();
        let r = build_r(pair, &(&p.p() * z), false, &p, 5).unwrap();
        assert!(rt.is_block_preserving() && r.is_block_preserving());
        assert!(rt.compose(&r).unwrap().agree_on_blocks(&FockOp::identity(&s), 5).unwrap().is_equal());
    }
}

// q^{-D} acts after a†, so both maps carry q^{-1} on the raised component.
#[test]
fn fusion_maps_on_low_vectors() {
    let p = params(206);
    let (q, r) = (&p.q, &p.r);
    let s = w_c2(4);
    let at = |d: [usize; 2]| s.index(&d).unwrap();
    let c = &q.inv().unwrap() * &(Scalar::one() - q * q);
    let iota = build_fusion(FusionKind::Iota, r, &p, 4).unwrap();
    let want = sorted(vec![(at([1, 0]), c.clone()), (at([0, 1]), -&(q * r))]);
    assert_eq!(iota.apply_basis(0), want.as_slice());
    let tau = build_fusion(FusionKind::Tau, r, &p, 4).unwrap();
    assert_eq!(tau.apply_basis(at([0, 0])), &[(0, Scalar::one())]);
    assert_eq!(tau.apply_basis(at([0, 1])), &[(1, &c / r)]);
    assert!(build_fusion(FusionKind::Iota, &Scalar::zero(), &p, 4).is_err());
}

#[test]
fn catalogue_lists_every_constructor() {
    for name in ["L rho", "K Pi", "K~ upsilon", "R rho rhobar", "R upsilon phi", "O", "iota(r)", "tau(r)"] {
        assert!(CATALOGUE.iter().any(|(n, _)| *n == name), "{name}");
    }
}
