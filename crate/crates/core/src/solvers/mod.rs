//! Independent oracles: K-, R- and fusion operators recovered from the linear
//! equations they satisfy, with runtime-reported solution dimensions.

mod linear;

pub use linear::{residual_check, solve, Ansatz, Equation, LinearProblem, SolutionSet, Term};

use crate::error::{Error, Result};
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::{FockOp, FockSpace};
use crate::operators::{build_k, build_l, w_c2, Boundary, Variant};
use crate::reps::{build_rep, coaction, grading_shift, Gen, Rep, RepName};

/// Re-express a charge-preserving operator exact on blocks `0..=n` at truncation `n`.
pub fn shrink(op: &FockOp, n: usize) -> Result<FockOp> {
    let small = op.domain().with_truncation(n);
    let blocks = (0..=n).map(|m| op.restrict_to_block(m)).collect::<Result<Vec<_>>>()?;
    FockOp::from_blocks(&small, &blocks)
}

/// The right reflection equation for a diagonal `K(y)` with the given L-operators,
/// one equation per auxiliary spectral value `z`:
/// `L(y/z) K L(yz) K_Pi(z) = K_Pi(z) L(yz) K L(y/z)`.
pub fn reflection_problem(
    l: &dyn Fn(&Scalar) -> Result<FockOp>,
    y: &Scalar,
    zs: &[Scalar],
    params: &ParamPoint,
    n: usize,
) -> Result<LinearProblem> {
    let s = w_c2(n);
    let mut equations = Vec::new();
    for z in zs {
        let kpi = build_k(RepName::Pi, z, Boundary::Right, params, n)?.embed(&s, &[1])?;
        let l1 = l(&(y / z))?;
        let l2 = l(&(y * z))?;
        equations.push(Equation {
            name: format!("reflection at z = {z}"),
            positions: vec![0],
            terms: vec![
                Term { coeff: Scalar::one(), left: l1.clone(), right: l2.compose(&kpi)? },
                Term { coeff: -Scalar::one(), left: kpi.compose(&l2)?, right: l1 },
            ],
        });
    }
    Ok(LinearProblem { unknown: FockSpace::fock(n), ansatz: Ansatz::Diagonal, equations })
}

/// Diagonal solutions of the right reflection equation for `pi` in `{rho, rhobar, upsilon, phi}`.
pub fn solve_k_from_re(pi: RepName, y: &Scalar, zs: &[Scalar], params: &ParamPoint, n: usize, top: usize) -> Result<SolutionSet> {
    let l = |w: &Scalar| build_l(pi, w, Variant::Plus, params, n);
    solve(&reflection_problem(&l, y, zs, params, n)?, top)
}

/// `e0 - q^{-1} xi^{-1} k0 f1` and `e1 - q^{-1} xi k1 f0` in a full representation.
pub fn coideal_generators(rep: &Rep, params: &ParamPoint) -> Result<[FockOp; 2]> {
    let qi = params.q.inv()?;
    let c0 = &qi * &params.xi.inv()?;
    let c1 = &qi * &params.xi;
    let b0 = rep.get(Gen::E0)?.sub(&rep.get(Gen::K0)?.compose(rep.get(Gen::F1)?)?.scale(&c0))?;
    let b1 = rep.get(Gen::E1)?.sub(&rep.get(Gen::K1)?.compose(rep.get(Gen::F0)?)?.scale(&c1))?;
    Ok([b0, b1])
}

/// `K upsilon_z(b) = upsilon_{1/z}(b) K` for the two coideal generators, diagonal ansatz.
pub fn solve_k_from_intertwining(z: &Scalar, params: &ParamPoint, n: usize, top: usize) -> Result<SolutionSet> {
    let ups = build_rep(RepName::Upsilon, params, n)?;
    let a = coideal_generators(&grading_shift(&ups, z)?, params)?;
    let b = coideal_generators(&grading_shift(&ups, &z.inv()?)?, params)?;
    let equations = a
        .into_iter()
        .zip(b)
        .enumerate()
        .map(|(i, (a, b))| Equation::intertwining(format!("coideal generator {i}"), vec![0], a, b))
        .collect();
    solve(&LinearProblem { unknown: FockSpace::fock(n), ansatz: Ansatz::Diagonal, equations }, top)
}

/// Charge-preserving `X` on `W ⊗ W` with `X (ups_z ⊗ phi^-)(Δx) = (ups_z ⊗ phi^-)(Δ^op x) X`
/// for `x` in `{f0, f1, k0, k1}`.
pub fn solve_r_upsilon_phi(z: &Scalar, params: &ParamPoint, n: usize, top: usize) -> Result<SolutionSet> {
    let ups = grading_shift(&build_rep(RepName::Upsilon, params, n)?, z)?;
    let phi = build_rep(RepName::PhiMinus, params, n)?;
    let equations = [Gen::F0, Gen::F1, Gen::K0, Gen::K1]
        .into_iter()
        .map(|g| {
            Ok(Equation::intertwining(
                format!("coproduct of {}", g.name()),
                vec![0, 1],
                coaction(&ups, &phi, g, false)?,
                coaction(&ups, &phi, g, true)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    solve(&LinearProblem { unknown: FockSpace::fock_legs(n, 2), ansatz: Ansatz::Block, equations }, top)
}

/// Charge-preserving `X` on `W ⊗ W` with
/// `X_12 L_rho(z z2)_13 M_32 = M_32 L_rho(z z2)_13 X_12`, `M = L^-_rhobar(1/z2)^{-1}`,
/// imposed for every `z2` in `z2s`.
pub fn solve_r_rho_rhobar(z: &Scalar, z2s: &[Scalar], params: &ParamPoint, n: usize, top: usize) -> Result<SolutionSet> {
    let s = FockSpace::new(n, vec![crate::fock::Leg::Fock, crate::fock::Leg::Fock, crate::fock::Leg::Two]);
    let mut equations = Vec::new();
    for z2 in z2s {
        let (l13, m32) = rho_rhobar_factors(z, z2, params, &s)?;
        equations.push(Equation {
            name: format!("three-leg relation at z2 = {z2}"),
            positions: vec![0, 1],
            terms: vec![
                Term { coeff: Scalar::one(), left: FockOp::identity(&s), right: l13.compose(&m32)? },
                Term { coeff: -Scalar::one(), left: m32.compose(&l13)?, right: FockOp::identity(&s) },
            ],
        });
    }
    solve(&LinearProblem { unknown: FockSpace::fock_legs(n, 2), ansatz: Ansatz::Block, equations }, top)
}

/// `(L_rho(z z2)_13, L^-_rhobar(1/z2)^{-1}_32)` on `W ⊗ W ⊗ C^2`.
pub fn rho_rhobar_factors(z: &Scalar, z2: &Scalar, params: &ParamPoint, s: &FockSpace) -> Result<(FockOp, FockOp)> {
    let n = s.n();
    let l13 = build_l(RepName::Rho, &(z * z2), Variant::Plus, params, n)?.embed(s, &[0, 2])?;
    // L^-(w)^{-1} is the leg swap of L(w)^{-1} = L~(w / q^2).
    let w = &z2.inv()? / &params.p();
    let m = build_l(RepName::RhoBar, &w, Variant::Tilde, params, n)?.flip_legs()?;
    Ok((l13, m.embed(s, &[2, 1])?))
}

/// `X (rho_{r,z} ⊗ Pi)(Δu) = (rho_{r,z} ⊗ Pi)(Δ^op u) X` for `u` in `{e0, e1, k1}`,
/// general charge-preserving ansatz on `W ⊗ C^2`.
pub fn solve_l_r(r: &Scalar, z: &Scalar, params: &ParamPoint, n: usize, top: usize) -> Result<SolutionSet> {
    let pr = params.with("r", r.clone())?;
    let rho = grading_shift(&build_rep(RepName::RhoR, &pr, n)?, z)?;
    let pi = build_rep(RepName::Pi, &pr, n)?;
    let equations = [Gen::E0, Gen::E1, Gen::K1]
        .into_iter()
        .map(|g| {
            Ok(Equation::intertwining(
                format!("coproduct of {}", g.name()),
                vec![0, 1],
                coaction(&rho, &pi, g, false)?,
                coaction(&rho, &pi, g, true)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    solve(&LinearProblem { unknown: w_c2(n), ansatz: Ansatz::Block, equations }, top)
}

/// Extra truncation used when a solved operator has to be exact on all blocks up to `n`.
pub const SOLVE_SLACK: usize = 3;

/// `L(r, z)` normalized to fix `w_0 ⊗ v+`, exact on blocks `0..=n`.
pub fn fusion_l(r: &Scalar, z: &Scalar, params: &ParamPoint, n: usize) -> Result<FockOp> {
    let big = n + SOLVE_SLACK;
    let sol = solve_l_r(r, z, params, big, big)?.restrict(n + 1)?;
    if sol.dim() != 1 {
        return Err(Error::SolutionDimension { what: "L(r, z)".into(), dim: sol.dim(), expected: 1 });
    }
    shrink(&sol.normalized()?, n)
}

/// `K_rho(r, y)` from the reflection equation with `L(r, .)`, normalized to fix `w_0`.
pub fn fusion_k(r: &Scalar, y: &Scalar, zs: &[Scalar], params: &ParamPoint, n: usize) -> Result<(FockOp, SolutionSet)> {
    let big = n + SOLVE_SLACK;
    let l = |w: &Scalar| fusion_l(r, w, params, big);
    let sol = solve(&reflection_problem(&l, y, zs, params, big)?, big)?.restrict(n)?;
    let k = sol.normalized()?;
    Ok((shrink(&k, n)?, sol))
}


#[cfg(test)]
mod fusion_tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};
    use crate::operators::{build_fusion, FusionKind};

    #[test]
    fn fusion_k_relations() {
        let p = sample_params(35, &Admissibility::default()).unwrap();
        let n = 4;
        let zs = [p.spec("x").unwrap().clone(), p.spec("w").unwrap().clone()];
        let (r, z, q) = (p.r.clone(), p.z().clone(), p.q.clone());
        let (k1, sol) = fusion_k(&Scalar::one(), &z, &zs, &p, n).unwrap();
        assert_eq!(sol.dim(), 1);
        assert!(k1.agree_on_blocks(&build_k(RepName::Rho, &z, Boundary::Right, &p, n).unwrap(), n).unwrap().is_equal());
        let (k, sol) = fusion_k(&r, &z, &zs, &p, n + 1).unwrap();
        assert_eq!(sol.dim(), 1);
        let (kq, _) = fusion_k(&(&q * &r), &(&q * &z), &zs, &p, n + 1).unwrap();
        let s = w_c2(n + 1);
        let lhs = FockOp::product(&[
            &k.embed(&s, &[0]).unwrap(),
            &fusion_l(&r, &(&z * &z), &p, n + 1).unwrap(),
            &build_k(RepName::Pi, &z, Boundary::Right, &p, n + 1).unwrap().embed(&s, &[1]).unwrap(),
            &build_fusion(FusionKind::Iota, &r, &p, n + 1).unwrap(),
        ])
        .unwrap();
        let rhs = build_fusion(FusionKind::Iota, &r, &p, n + 1).unwrap().compose(&kq).unwrap();
        let (x, y) = (&lhs.apply_basis(0)[0].1, &rhs.apply_basis(0)[0].1);
        let c = x / y;
        for j in 0..n {
            let scaled: Vec<_> = rhs.apply_basis(j).iter().map(|(i, v)| (*i, &c * v)).collect();
            assert_eq!(lhs.apply_basis(j), scaled.as_slice(), "column {j}");
        }
    }
}
