//! Representation tables: defining relations, grading identities, the ψ dictionary.

use crate::error::Result;
use crate::exactq::Scalar;
use crate::fock::{FockOp, FockSpace, Generator};
use crate::reps::{
    build_rep, check_serre, coaction, general_grading_identity, psi_twist, tables_equal, weight_check, Gen, RepName,
};
use crate::verify::suites::gen;
use crate::verify::{Acc, Ctx};

pub fn relations(ctx: &Ctx) -> Result<Acc> {
    let mut acc = Acc::new();
    for name in RepName::NAMED {
        let rep = build_rep(name, &ctx.params, ctx.n)?;
        acc.relations(name.as_str(), &check_serre(&rep)?);
        acc.relations(name.as_str(), &weight_check(&rep)?);
    }
    // coproduct tables on rho ⊗ rhobar
    let (p, n, q) = (&ctx.params, ctx.n, &ctx.params.q);
    let rho = build_rep(RepName::Rho, p, n)?;
    let rhob = build_rep(RepName::RhoBar, p, n)?;
    let s = FockSpace::fock_legs(n, 2);
    let k1 = FockOp::diagonal(&s, |d| q.pow(-2 * d[0] as i64 - 2 * (d[1] as i64 + 1)))?;
    acc.window("Δ(k1) on rho ⊗ rhobar", &coaction(&rho, &rhob, Gen::K1, false)?, &k1)?;
    let c = (Scalar::one() - &(q * q)).inv()?;
    let a1 = gen(Generator::A, 0, &s, q)?.scale(&(&c * &(q * q)));
    let qd = FockOp::diagonal(&s, |d| q.pow(-2 * d[0] as i64))?;
    let e1 = a1.add(&qd.compose(&gen(Generator::A, 1, &s, q)?)?.scale(&c))?;
    acc.window("Δ(e1) on rho ⊗ rhobar", &coaction(&rho, &rhob, Gen::E1, false)?, &e1)?;
    Ok(acc)
}

pub fn grading(ctx: &Ctx) -> Result<Acc> {
    let mut acc = Acc::new();
    let zz = ctx.params.spec("Z")?;
    for name in RepName::NAMED {
        let rep = build_rep(name, &ctx.params, ctx.n)?;
        for (s0, s1) in [(0, 1), (1, 0), (1, 1), (2, 1)] {
            acc.relations(name.as_str(), &general_grading_identity(&rep, s0, s1, zz)?);
        }
    }
    Ok(acc)
}

pub fn psi(ctx: &Ctx) -> Result<Acc> {
    let mut acc = Acc::new();
    for (plus, minus) in [
        (RepName::Rho, RepName::RhoMinus),
        (RepName::RhoBar, RepName::RhoBarMinus),
        (RepName::Phi, RepName::PhiMinus),
        (RepName::Upsilon, RepName::Upsilon),
        (RepName::Pi, RepName::Pi),
    ] {
        let twisted = psi_twist(&build_rep(plus, &ctx.params, ctx.n)?, minus)?;
        let table = build_rep(minus, &ctx.params, ctx.n)?;
        let diff = tables_equal(&twisted, &table)?;
        acc.truth(&format!("{minus} = {plus} ∘ ψ"), diff.is_none(), || diff.unwrap_or_default());
    }
    Ok(acc)
}
