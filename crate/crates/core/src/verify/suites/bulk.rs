//! The intertwiner O and the factorization of L-operators.

use crate::error::Result;
use crate::fock::{FockOp, FockSpace, Leg};
use crate::operators::{build_l, build_o, OVariant, Variant};
use crate::reps::{build_rep, coaction, grading_shift, Gen, RepName};
use crate::verify::{Acc, Ctx};

pub fn o_plus(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let shifted = |name, w| grading_shift(&build_rep(name, p, n)?, &w);
    let rho = shifted(RepName::Rho, z / &p.u)?;
    let rhob = shifted(RepName::RhoBar, z * &p.u)?;
    let ups = shifted(RepName::Upsilon, z.clone())?;
    let phi = shifted(RepName::Phi, z.clone())?;
    let o = build_o(OVariant::O, p, n)?;
    let mut acc = Acc::new();
    for g in [Gen::E0, Gen::E1, Gen::K0, Gen::K1] {
        let lhs = o.compose(&coaction(&rho, &rhob, g, false)?)?;
        let rhs = coaction(&ups, &phi, g, false)?.compose(&o)?;
        acc.window(&format!("O intertwines Δ({})", g.name()), &lhs, &rhs)?;
    }
    Ok(acc)
}

pub fn o_minus(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let shifted = |name, w| grading_shift(&build_rep(name, p, n)?, &w);
    let rhob = shifted(RepName::RhoBarMinus, z / &p.u)?;
    let rho = shifted(RepName::RhoMinus, z * &p.u)?;
    let phi = shifted(RepName::PhiMinus, z.clone())?;
    let ups = shifted(RepName::Upsilon, z.clone())?;
    let o21 = build_o(OVariant::O21, p, n)?;
    let mut acc = Acc::new();
    acc.window("O21 is the leg swap of O", &o21, &build_o(OVariant::O, p, n)?.flip_legs()?)?;
    for g in [Gen::F0, Gen::F1, Gen::K0, Gen::K1] {
        let lhs = o21.compose(&coaction(&rhob, &rho, g, false)?)?;
        let rhs = coaction(&phi, &ups, g, false)?.compose(&o21)?;
        acc.window(&format!("O21 intertwines Δ({})", g.name()), &lhs, &rhs)?;
    }
    Ok(acc)
}

pub fn factorization(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let s = FockSpace::new(n, vec![Leg::Fock, Leg::Fock, Leg::Two]);
    let l = |name, w: &_, legs: &[usize]| build_l(name, w, Variant::Plus, p, n)?.embed(&s, legs);
    let o12 = build_o(OVariant::O, p, n)?.embed(&s, &[0, 1])?;
    let lhs = FockOp::product(&[&o12, &l(RepName::Rho, &(z / &p.u), &[0, 2])?, &l(RepName::RhoBar, &(z * &p.u), &[1, 2])?])?;
    let rhs = FockOp::product(&[&l(RepName::Upsilon, z, &[0, 2])?, &l(RepName::Phi, z, &[1, 2])?, &o12])?;
    let mut acc = Acc::new();
    acc.window("O_12 L_rho(z/u)_13 L_rhobar(uz)_23 = L_ups(z)_13 L_phi(z)_23 O_12", &lhs, &rhs)?;
    Ok(acc)
}

pub fn factorization_minus(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let s = FockSpace::new(n, vec![Leg::Two, Leg::Fock, Leg::Fock]);
    let l = |name, w: &_, legs: &[usize]| build_l(name, w, Variant::Minus, p, n)?.embed(&s, legs);
    let o32 = build_o(OVariant::O, p, n)?.embed(&s, &[2, 1])?;
    let lhs = FockOp::product(&[&o32, &l(RepName::Rho, &(z / &p.u), &[0, 2])?, &l(RepName::RhoBar, &(z * &p.u), &[0, 1])?])?;
    let rhs = FockOp::product(&[&l(RepName::Upsilon, z, &[0, 2])?, &l(RepName::Phi, z, &[0, 1])?, &o32])?;
    let mut acc = Acc::new();
    acc.window("O_32 L-_rho(z/u)_13 L-_rhobar(uz)_12 = L-_ups(z)_13 L-_phi(z)_12 O_32", &lhs, &rhs)?;
    Ok(acc)
}
