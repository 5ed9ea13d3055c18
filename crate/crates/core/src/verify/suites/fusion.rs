//! Fusion: the short exact sequence `W -> W ⊗ C^2 -> W` and the fused K-operator.

use crate::error::Result;
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::FockOp;
use crate::operators::{build_fusion, build_k, w_c2, Boundary, FusionKind};
use crate::reps::{build_rep, coaction, grading_shift, Gen, Rep, RepName};
use crate::solvers::{fusion_k, fusion_l};
use crate::verify::{Acc, Ctx};

/// Truncation used for fusion; each step solves a linear system a few blocks higher.
pub const FUSION_DIM: usize = 5;

fn rho_rz(r: &Scalar, z: &Scalar, p: &ParamPoint, n: usize) -> Result<Rep> {
    grading_shift(&build_rep(RepName::RhoR, &p.with("r", r.clone())?, n)?, z)
}

/// `lhs = c rhs` on the columns with charge `<= m` certified by both windows; returns `c`.
fn proportional(acc: &mut Acc, check: &str, lhs: &FockOp, rhs: &FockOp, m: usize) -> Option<Scalar> {
    let dom = lhs.domain();
    let mut c: Option<Scalar> = None;
    let mut cols = 0;
    for j in 0..dom.dim() {
        if dom.charge(j) > m || !lhs.in_window(j) || !rhs.in_window(j) {
            continue;
        }
        cols += 1;
        let (a, b) = (lhs.apply_basis(j), rhs.apply_basis(j));
        if c.is_none() {
            if let (Some((i, x)), Some((k, y))) = (a.first(), b.first()) {
                if i == k {
                    c = Some(x / y);
                }
            }
        }
        let scaled: Vec<(usize, Scalar)> = match &c {
            Some(c) => b.iter().map(|(i, y)| (*i, c * y)).filter(|(_, y)| !y.is_zero()).collect(),
            None => b.to_vec(),
        };
        if a != scaled.as_slice() {
            acc.truth(check, false, || format!("column {} differs: {a:?} vs {scaled:?}", dom.label(j)));
            return None;
        }
    }
    acc.truth(check, cols > 0 && c.is_some(), || "no comparable columns".into());
    acc.vectors += cols;
    c
}

/// `iota(r)` and `tau(r)` intertwine, and `0 -> W -> W ⊗ C^2 -> W -> 0` is exact on each block.
pub fn ses(ctx: &Ctx) -> Result<Acc> {
    let (p, n) = (&ctx.params, ctx.n);
    let (q, r, z) = (&p.q, &p.r, p.z());
    let iota = build_fusion(FusionKind::Iota, r, p, n)?;
    let tau = build_fusion(FusionKind::Tau, r, p, n)?;
    let mid_rep = rho_rz(r, z, p, n)?;
    let pi = grading_shift(&build_rep(RepName::Pi, p, n)?, z)?;
    let sub = rho_rz(&(q * r), &(q * z), p, n)?;
    let quot = rho_rz(&(r / q), &(z / q), p, n)?;
    let mut acc = Acc::new();
    for g in [Gen::E0, Gen::E1, Gen::K0, Gen::K1] {
        let mid = coaction(&mid_rep, &pi, g, false)?;
        acc.window(&format!("iota intertwines {}", g.name()), &iota.compose(sub.get(g)?)?, &mid.compose(&iota)?)?;
        acc.window(&format!("tau intertwines {}", g.name()), &tau.compose(&mid)?, &quot.get(g)?.compose(&tau)?)?;
    }
    let v = w_c2(n);
    acc.window("tau iota = 0", &tau.compose(&iota)?, &FockOp::zero(&crate::fock::FockSpace::fock(n)))?;
    for c in 1..=n {
        let image = iota.apply_basis(c - 1);
        acc.truth(&format!("iota is injective into block {c}"), !image.is_empty(), || format!("iota(w_{}) = 0", c - 1));
        let onto = v.block_basis(c).iter().any(|&i| !tau.apply_basis(i).is_empty());
        acc.truth(&format!("tau is onto w_{c}"), onto, || format!("tau vanishes on block {c}"));
    }
    Ok(acc)
}

/// The fused K-operator `K(r, z)` from its reflection equation and its compatibility with the sequence:
/// `K(r,z)_1 L(r,z^2) K_Pi(z)_2 iota(r) = c1 iota(r) K(qr,qz)` and
/// `tau(r) K(r,z)_1 L(r,z^2) K_Pi(z)_2 = c2 K(r/q,z/q) tau(r)`.
pub fn fusion_k_suite(ctx: &Ctx) -> Result<Acc> {
    let p = &ctx.params;
    let n = ctx.n.min(FUSION_DIM);
    let (q, r, z) = (&p.q, &p.r, p.z());
    let zs = [p.spec("x")?.clone(), p.spec("w")?.clone()];
    let mut acc = Acc::new();

    let (k1, sol) = fusion_k(&Scalar::one(), z, &zs, p, n)?;
    acc.note("K(1,z) dim", sol.dim());
    acc.blocks("K(1, z) = K_rho(z)", &k1, &build_k(RepName::Rho, z, Boundary::Right, p, n)?, n)?;

    let (k, sol) = fusion_k(r, z, &zs, p, n)?;
    acc.note("K(r,z) dim", sol.dim());
    let (kup, _) = fusion_k(&(q * r), &(q * z), &zs, p, n)?;
    let (kdown, _) = fusion_k(&(r / q), &(z / q), &zs, p, n)?;
    let s = w_c2(n);
    let mid = FockOp::product(&[
        &k.embed(&s, &[0])?,
        &fusion_l(r, &(z * z), p, n)?,
        &build_k(RepName::Pi, z, Boundary::Right, p, n)?.embed(&s, &[1])?,
    ])?;
    let iota = build_fusion(FusionKind::Iota, r, p, n)?;
    let tau = build_fusion(FusionKind::Tau, r, p, n)?;
    let m = n - 1;
    if let Some(c1) = proportional(&mut acc, "K-sandwich maps the image of iota into itself", &mid.compose(&iota)?, &iota.compose(&kup)?, m) {
        acc.note("c1", c1);
    }
    if let Some(c2) = proportional(&mut acc, "K-sandwich descends through tau", &tau.compose(&mid)?, &kdown.compose(&tau)?, m) {
        acc.note("c2", c2);
    }
    Ok(acc)
}
