//! Reflection equations, defining relations of K and R, boundary factorization.

use crate::error::Result;
use crate::exactq::{q_pochhammer, q_pochhammer_inv, ParamPoint, Scalar};
use crate::fock::{FockOp, FockSpace, Generator, Leg};
use crate::operators::{build_k, build_l, build_o, build_r, w_c2, Boundary, OVariant, RPair, Variant};
use crate::reps::{build_rep, grading_shift, RepName};
use crate::solvers::{coideal_generators, rho_rhobar_factors};
use crate::verify::suites::gen;
use crate::verify::suites::oscillator::{diag2, exp_of, lowering_raising};
use crate::verify::{Acc, Ctx};

/// The four representations with diagonal K-operators.
pub const K_REPS: [RepName; 4] = [RepName::Upsilon, RepName::Phi, RepName::Rho, RepName::RhoBar];

/// `L(y/z) K(y) L(yz) K_Pi(z) = K_Pi(z) L(yz) K(y) L(y/z)`.
pub fn reflection_right(ctx: &Ctx, pi: RepName) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let (y, z) = (p.spec("y")?, p.z());
    let s = w_c2(n);
    let kpi = build_k(RepName::Pi, z, Boundary::Right, p, n)?.embed(&s, &[1])?;
    let k = build_k(pi, y, Boundary::Right, p, n)?.embed(&s, &[0])?;
    let l1 = build_l(pi, &(y / z), Variant::Plus, p, n)?;
    let l2 = build_l(pi, &(y * z), Variant::Plus, p, n)?;
    let mut acc = Acc::new();
    acc.window(
        &format!("right reflection equation for {pi}"),
        &FockOp::product(&[&l1, &k, &l2, &kpi])?,
        &FockOp::product(&[&kpi, &l2, &k, &l1])?,
    )?;
    Ok(acc)
}

/// `K~(y) L~(yz) K~_Pi(z) L(y/z) = L(y/z) K~_Pi(z) L~(yz) K~(y)`.
pub fn reflection_left(ctx: &Ctx, pi: RepName) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let (y, z) = (p.spec("y")?, p.z());
    let s = w_c2(n);
    let kpi = build_k(RepName::Pi, z, Boundary::Left, p, n)?.embed(&s, &[1])?;
    let k = build_k(pi, y, Boundary::Left, p, n)?.embed(&s, &[0])?;
    let l1 = build_l(pi, &(y / z), Variant::Plus, p, n)?;
    let lt = build_l(pi, &(y * z), Variant::Tilde, p, n)?;
    let mut acc = Acc::new();
    acc.window(
        &format!("left reflection equation for {pi}"),
        &FockOp::product(&[&k, &lt, &kpi, &l1])?,
        &FockOp::product(&[&l1, &kpi, &lt, &k])?,
    )?;
    Ok(acc)
}

macro_rules! per_rep {
    ($($name:ident => $f:ident($rep:expr);)*) => {
        $(pub fn $name(ctx: &Ctx) -> Result<Acc> { $f(ctx, $rep) })*
    };
}

per_rep! {
    re_right_upsilon => reflection_right(RepName::Upsilon);
    re_right_phi => reflection_right(RepName::Phi);
    re_right_rho => reflection_right(RepName::Rho);
    re_right_rhobar => reflection_right(RepName::RhoBar);
    re_left_upsilon => reflection_left(RepName::Upsilon);
    re_left_phi => reflection_left(RepName::Phi);
    re_left_rho => reflection_left(RepName::Rho);
    re_left_rhobar => reflection_left(RepName::RhoBar);
}

/// `K_ups(z) ups_z(b) = ups_{1/z}(b) K_ups(z)` for both coideal generators.
pub fn k_intertwining(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let ups = build_rep(RepName::Upsilon, p, n)?;
    let a = coideal_generators(&grading_shift(&ups, z)?, p)?;
    let b = coideal_generators(&grading_shift(&ups, &z.inv()?)?, p)?;
    let k = build_k(RepName::Upsilon, z, Boundary::Right, p, n)?;
    let mut acc = Acc::new();
    for (i, (a, b)) in a.iter().zip(&b).enumerate() {
        acc.window(&format!("K_ups intertwines coideal generator {i}"), &k.compose(a)?, &b.compose(&k)?)?;
    }
    Ok(acc)
}

/// The closed-form `R_{ups phi}(z)` solves its defining linear relations.
pub fn r_defining_upsilon_phi(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let ups = grading_shift(&build_rep(RepName::Upsilon, p, n)?, z)?;
    let phi = build_rep(RepName::PhiMinus, p, n)?;
    let x = build_r(RPair::UpsilonPhi, z, false, p, n)?;
    let mut acc = Acc::new();
    for g in [crate::reps::Gen::F0, crate::reps::Gen::F1, crate::reps::Gen::K0, crate::reps::Gen::K1] {
        let lhs = x.compose(&crate::reps::coaction(&ups, &phi, g, false)?)?;
        let rhs = crate::reps::coaction(&ups, &phi, g, true)?.compose(&x)?;
        acc.window(&format!("R_ups_phi intertwines Δ({}) with Δop", g.name()), &lhs, &rhs)?;
    }
    Ok(acc)
}

/// The closed-form `R_{rho rhobar}(z)` solves the three-leg relation at two auxiliary points.
pub fn r_defining_rho_rhobar(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let z = p.z();
    let s = FockSpace::new(n, vec![Leg::Fock, Leg::Fock, Leg::Two]);
    let x = build_r(RPair::RhoRhoBar, z, false, p, n)?.embed(&s, &[0, 1])?;
    let mut acc = Acc::new();
    for z2 in [p.spec("z2")?, p.spec("w")?] {
        let (l13, m32) = rho_rhobar_factors(z, z2, p, &s)?;
        acc.window(
            &format!("X_12 L_rho(z z2)_13 M_32 = M_32 L_rho(z z2)_13 X_12 at z2 = {z2}"),
            &FockOp::product(&[&x, &l13, &m32])?,
            &FockOp::product(&[&m32, &l13, &x])?,
        )?;
    }
    Ok(acc)
}

fn vacuum_fixed(acc: &mut Acc, what: &str, op: &FockOp) {
    let ok = op.apply_basis(0) == [(0, Scalar::one())];
    acc.truth(&format!("{what} fixes the vacuum"), ok, || format!("{what} on the vacuum gives {:?}", op.apply_basis(0)));
}

fn tampered(p: &ParamPoint, on: bool) -> Result<ParamPoint> {
    if on {
        p.with("xi", &p.xi + &Scalar::one())
    } else {
        Ok(p.clone())
    }
}

/// `K_ups(z)_1 R_{ups phi}(z^2) K_phi(z)_2 O = O K_rho(z/u)_1 R_{rho rhobar}(z^2) K_rhobar(uz)_2`.
pub fn factorization_right(ctx: &Ctx) -> Result<Acc> {
    let (p, n, m) = (&ctx.params, ctx.n, ctx.m_max);
    let z = p.z();
    let z2 = z * z;
    let pr = tampered(p, ctx.tamper)?;
    let s = FockSpace::fock_legs(n, 2);
    let k = |pi, w: &Scalar, leg: usize, p: &ParamPoint| build_k(pi, w, Boundary::Right, p, n)?.embed(&s, &[leg]);
    let o = build_o(OVariant::O, p, n)?;
    let lhs_factors = [
        k(RepName::Upsilon, z, 0, p)?,
        build_r(RPair::UpsilonPhi, &z2, false, p, n)?,
        k(RepName::Phi, z, 1, p)?,
        o.clone(),
    ];
    let rhs_factors = [
        o.clone(),
        k(RepName::Rho, &(z / &p.u), 0, &pr)?,
        build_r(RPair::RhoRhoBar, &z2, false, p, n)?,
        k(RepName::RhoBar, &(z * &p.u), 1, &pr)?,
    ];
    let mut acc = Acc::new();
    for (i, f) in lhs_factors.iter().chain(&rhs_factors).enumerate() {
        vacuum_fixed(&mut acc, &format!("factor {i}"), f);
    }
    let lhs = FockOp::product(&lhs_factors.iter().collect::<Vec<_>>())?;
    let rhs = FockOp::product(&rhs_factors.iter().collect::<Vec<_>>())?;
    acc.blocks("right boundary factorization", &lhs, &rhs, m)?;
    Ok(acc)
}

/// `K~_rhobar(uz)_2 R~_{rho rhobar}(z^2) K~_rho(z/u)_1 O^-1 = O^-1 K~_phi(z)_2 R~_{ups phi}(z^2) K~_ups(z)_1`.
pub fn factorization_left(ctx: &Ctx) -> Result<Acc> {
    let (p, n, m) = (&ctx.params, ctx.n, ctx.m_max);
    let z = p.z();
    let z2 = z * z;
    let s = FockSpace::fock_legs(n, 2);
    let k = |pi, w: &Scalar, leg: usize| build_k(pi, w, Boundary::Left, p, n)?.embed(&s, &[leg]);
    let oi = build_o(OVariant::Inverse, p, n)?;
    let lhs_factors = [
        k(RepName::RhoBar, &(z * &p.u), 1)?,
        build_r(RPair::RhoRhoBar, &z2, true, p, n)?,
        k(RepName::Rho, &(z / &p.u), 0)?,
        oi.clone(),
    ];
    let rhs_factors = [
        oi.clone(),
        k(RepName::Phi, z, 1)?,
        build_r(RPair::UpsilonPhi, &z2, true, p, n)?,
        k(RepName::Upsilon, z, 0)?,
    ];
    let mut acc = Acc::new();
    for (i, f) in lhs_factors.iter().chain(&rhs_factors).enumerate() {
        vacuum_fixed(&mut acc, &format!("factor {i}"), f);
    }
    let lhs = FockOp::product(&lhs_factors.iter().collect::<Vec<_>>())?;
    let rhs = FockOp::product(&rhs_factors.iter().collect::<Vec<_>>())?;
    acc.blocks("left boundary factorization", &lhs, &rhs, m)?;
    Ok(acc)
}

/// The identity left after moving the diagonal factors through, with `g = p u^-2 xi^-1`:
/// `E (g z^2;p)_{D1} (p^{1-D1} z^2/g;p)_{D1}^-1 e_p(p z^2/g ā†_1 a_2) E^-1
///  = (g z^2;p)_{D1} e_p(-a_1 ā†_2 p^{D1} g z^2) e_p(p z^2/g ā†_1 a_2) (p^{1-D2} z^2/g;p)_{D2}^-1`,
/// `E = e_p(p a_1 ā†_2)`.
pub fn factorization_reduced(ctx: &Ctx) -> Result<Acc> {
    let (p, n, m) = (&ctx.params, ctx.n, ctx.m_max);
    let q = p.q.clone();
    let pp = p.p();
    let z = p.z();
    let g = &(&pp / &(&p.u * &p.u)) / &p.xi;
    let y1 = &(&g * z) * z;
    let y2 = &(z * z) / &g;
    let s = FockSpace::fock_legs(n, 2);
    let e = exp_of(&s, ctx, &pp, &|t| lowering_raising(t, &q))?;
    let ei = e.inverse_blocks()?;
    let poch1 = diag2(&s, |j, _| q_pochhammer(&y1, &pp, j))?;
    let inv1 = diag2(&s, |j, _| q_pochhammer_inv(&(&pp.pow(1 - j)? * &y2), &pp, j))?;
    let inv2 = diag2(&s, |_, k| q_pochhammer_inv(&(&pp.pow(1 - k)? * &y2), &pp, k))?;
    let h = exp_of(&s, ctx, &(&pp * &y2), &|t| {
        gen(Generator::AbarDag, 0, t, &q)?.compose(&gen(Generator::A, 1, t, &q)?)
    })?;
    let gm = exp_of(&s, ctx, &-y1.clone(), &|t| {
        lowering_raising(t, &q)?.compose(&FockOp::diagonal(t, |d| pp.pow(d[0] as i64))?)
    })?;
    let lhs = FockOp::product(&[&e, &poch1, &inv1, &h, &ei])?;
    let rhs = FockOp::product(&[&poch1, &gm, &h, &inv2])?;
    let mut acc = Acc::new();
    acc.blocks("reduced boundary factorization", &lhs, &rhs, m)?;
    Ok(acc)
}

/// Anchor vectors and documented low-charge values.
pub fn normalizations(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let (q, z) = (&p.q, p.z());
    let mut acc = Acc::new();
    for pi in K_REPS {
        vacuum_fixed(&mut acc, &format!("right K_{pi}"), &build_k(pi, z, Boundary::Right, p, n)?);
        vacuum_fixed(&mut acc, &format!("left K_{pi}"), &build_k(pi, z, Boundary::Left, p, n)?);
    }
    let s2 = FockSpace::fock_legs(n, 2);
    let total = FockOp::diagonal(&s2, |d| q.pow(2 * (d[0] + d[1]) as i64))?;
    for pair in [RPair::RhoRhoBar, RPair::UpsilonPhi] {
        for tilde in [false, true] {
            let r = build_r(pair, z, tilde, p, n)?;
            let what = format!("R {pair:?} tilde={tilde}");
            vacuum_fixed(&mut acc, &what, &r);
            acc.truth(&format!("{what} preserves charge"), r.is_block_preserving(), || what.clone());
            acc.blocks(&format!("{what} commutes with the charge"), &r.compose(&total)?, &total.compose(&r)?, n)?;
        }
    }
    vacuum_fixed(&mut acc, "O", &build_o(OVariant::O, p, n)?);
    // L-operators on w_0 ⊗ v+
    let s = w_c2(n);
    let plus0 = s.index(&[0, 0]).expect("in range");
    let minus0 = s.index(&[0, 1]).expect("in range");
    let plus1 = s.index(&[1, 0]).expect("in range");
    let one = Scalar::one();
    let lrho = build_l(RepName::Rho, z, Variant::Plus, p, n)?;
    acc.truth("L_rho fixes w0 ⊗ v+", lrho.apply_basis(plus0) == [(plus0, one.clone())], || format!("{:?}", lrho.apply_basis(plus0)));
    let mut want = vec![
        (plus1, &(&q.inv()? * z) * &(&one - &(q * q))),
        (minus0, &one - &(&(q * q) * &(z * z))),
    ];
    want.sort_by_key(|t| t.0);
    acc.truth("L_rho on w0 ⊗ v-", lrho.apply_basis(minus0) == want.as_slice(), || format!("{:?}", lrho.apply_basis(minus0)));
    let lphi = build_l(RepName::Phi, z, Variant::Plus, p, n)?;
    acc.truth("L_phi on w0 ⊗ v+ is q", lphi.apply_basis(plus0) == [(plus0, q.clone())], || format!("{:?}", lphi.apply_basis(plus0)));
    Ok(acc)
}

/// Tilde and left variants against inverses of shifted plain ones.
pub fn links(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let (q, z) = (&p.q, p.z());
    let pp = p.p();
    let mut acc = Acc::new();
    let swapped = p.with("xi", p.xitilde.inv()?)?;
    let qz = q * z;
    for pi in K_REPS {
        let lt = build_l(pi, z, Variant::Tilde, p, n)?;
        let l = build_l(pi, &(&pp * z), Variant::Plus, p, n)?;
        acc.window(&format!("L~_{pi}(z) L_{pi}(q^2 z) = 1"), &lt.compose(&l)?, &FockOp::identity(&w_c2(n)))?;
        let lm = build_l(pi, z, Variant::Minus, p, n)?;
        acc.window(&format!("L-_{pi} is the leg swap of L_{pi}"), &lm, &build_l(pi, z, Variant::Plus, p, n)?.flip_legs()?)?;
        let left = build_k(pi, z, Boundary::Left, p, n)?;
        let right = build_k(pi, &qz, Boundary::Right, &swapped, n)?.inverse_blocks()?;
        acc.window(&format!("K~_{pi}(z) = K_{pi}(qz)^-1 with xi -> 1/xi~"), &left, &right)?;
    }
    // K~_Pi(z) = (1 - q^2 xi~ z^2)(1 - q^2 z^2 / xi~) K_Pi(qz)^-1 |_{xi -> 1/xi~}
    let kl = build_k(RepName::Pi, z, Boundary::Left, p, n)?;
    let kr = build_k(RepName::Pi, &qz, Boundary::Right, &swapped, n)?;
    let one = Scalar::one();
    let qz2 = &qz * &qz;
    let c = &(&one - &(&qz2 * &p.xitilde)) * &(&one - &(&qz2 / &p.xitilde));
    acc.window("K~_Pi(z) K_Pi(qz)|_(xi -> 1/xi~) is scalar", &kl.compose(&kr)?, &FockOp::identity(kl.domain()).scale(&c))?;
    for pair in [RPair::RhoRhoBar, RPair::UpsilonPhi] {
        let rt = build_r(pair, z, true, p, n)?;
        let r = build_r(pair, &(&pp * z), false, p, n)?;
        acc.blocks(&format!("R~ {pair:?}(z) R(q^2 z) = 1"), &rt.compose(&r)?, &FockOp::identity(rt.domain()), n)?;
    }
    let o = build_o(OVariant::O, p, n)?;
    acc.blocks("O O^-1 = 1", &o.compose(&build_o(OVariant::Inverse, p, n)?)?, &FockOp::identity(o.domain()), n)?;
    Ok(acc)
}
