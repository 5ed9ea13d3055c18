use qkfact::exactq::{sample_params, Admissibility, ParamPoint, Scalar};
use qkfact::fock::{FockOp, FockSpace};
use qkfact::operators::{build_k, build_l, build_r, Boundary, RPair, Variant};
use qkfact::reps::RepName;
use qkfact::solvers::{
    fusion_k, fusion_l, reflection_problem, residual_check, solve, solve_k_from_intertwining, solve_r_rho_rhobar,
    solve_r_upsilon_phi, Ansatz, Equation, LinearProblem,
};

fn params(seed: u64) -> ParamPoint {
    sample_params(seed, &Admissibility::default()).unwrap()
}

#[test]
fn closed_form_k_has_zero_residual() {
    let p = params(301);
    let y = p.spec("y").unwrap().clone();
    let zs = [p.z().clone(), p.spec("x").unwrap().clone()];
    let l = |w: &Scalar| build_l(RepName::Rho, w, Variant::Plus, &p, 6);
    let prob = reflection_problem(&l, &y, &zs, &p, 6).unwrap();
    let k = build_k(RepName::Rho, &y, Boundary::Right, &p, 6).unwrap();
    assert_eq!(residual_check(&prob, &k, 5).unwrap(), None);
    let wrong = build_k(RepName::Rho, &y, Boundary::Right, &p.with("xi", &p.xi + &Scalar::one()).unwrap(), 6).unwrap();
    assert!(residual_check(&prob, &wrong, 5).unwrap().is_some());
}

#[test]
fn k_upsilon_oracle_is_one_dimensional() {
    let p = params(302);
    let z = p.z().clone();
    let sol = solve_k_from_intertwining(&z, &p, 6, 5).unwrap().restrict(4).unwrap();
    assert_eq!(sol.dim(), 1);
    let want = build_k(RepName::Upsilon, &z, Boundary::Right, &p, 6).unwrap();
    assert!(sol.normalized().unwrap().agree_on_blocks(&want, 4).unwrap().is_equal());
}

#[test]
fn r_oracles_match_closed_forms() {
    let p = params(303);
    let z = p.z().clone();
    let sol = solve_r_upsilon_phi(&z, &p, 5, 4).unwrap().restrict(3).unwrap();
    assert_eq!(sol.dim(), 1, "{:?}", sol.stage_dims);
    let want = build_r(RPair::UpsilonPhi, &z, false, &p, 5).unwrap();
    let got = sol.normalized().unwrap();
    assert!(got.agree_on_blocks(&want, 3).unwrap().is_equal());
    assert_eq!(got.entry(0, 0), Scalar::one());
    let z2s = [p.spec("z2").unwrap().clone(), p.spec("w").unwrap().clone()];
    let sol = solve_r_rho_rhobar(&z, &z2s, &p, 5, 4).unwrap().restrict(3).unwrap();
    assert_eq!(sol.dim(), 1, "{:?}", sol.stage_dims);
    let want = build_r(RPair::RhoRhoBar, &z, false, &p, 5).unwrap();
    assert!(sol.normalized().unwrap().agree_on_blocks(&want, 3).unwrap().is_equal());
}

#[test]
fn restrict_beyond_the_solved_range_is_refused() {
    let p = params(304);
    let sol = solve_k_from_intertwining(p.z(), &p, 5, 3).unwrap();
    assert!(sol.restrict(4).is_err());
}

// Commutant of a diagonal with distinct entries: diagonal ansatz leaves one free value per basis vector.
#[test]
fn generic_solver_counts_free_entries() {
    let s = FockSpace::fock(4);
    let d = FockOp::diagonal(&s, |d| Ok(Scalar::from_int(d[0] as i64 + 2))).unwrap();
    let prob = LinearProblem {
        unknown: s.clone(),
        ansatz: Ansatz::Diagonal,
        equations: vec![Equation::intertwining("commute", vec![0], d.clone(), d)],
    };
    assert_eq!(solve(&prob, 4).unwrap().dim(), 5);
}

#[test]
fn fusion_at_r_one_recovers_rho() {
    let p = params(305);
    let z = p.z().clone();
    let l = fusion_l(&Scalar::one(), &z, &p, 4).unwrap();
    let want = build_l(RepName::Rho, &z, Variant::Plus, &p, 4).unwrap();
    let ratio = &want.entry(0, 0) / &l.entry(0, 0);
    assert!(l.scale(&ratio).agree_on_window(&want).unwrap().is_equal());
    let zs = [p.spec("x").unwrap().clone(), p.spec("w").unwrap().clone()];
    let (k, sol) = fusion_k(&Scalar::one(), &z, &zs, &p, 4).unwrap();
    assert_eq!(sol.dim(), 1);
    assert!(k.agree_on_blocks(&build_k(RepName::Rho, &z, Boundary::Right, &p, 4).unwrap(), 4).unwrap().is_equal());
}
