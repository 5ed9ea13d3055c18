//! Closed forms against solutions of the linear equations that characterize them.

use crate::error::Result;
use crate::exactq::Scalar;
use crate::fock::FockOp;
use crate::operators::{build_k, build_r, Boundary, RPair};
use crate::solvers::{solve_k_from_intertwining, solve_k_from_re, solve_r_rho_rhobar, solve_r_upsilon_phi, SolutionSet};
use crate::verify::suites::boundary::K_REPS;
use crate::verify::{Acc, Ctx};

/// Largest block compared against a solver; the dense elimination grows quickly past it.
pub const ORACLE_BLOCKS: usize = 6;

fn blocks(ctx: &Ctx) -> usize {
    ctx.m_max.min(ORACLE_BLOCKS)
}

/// Solve at a larger truncation, then keep blocks `0..=m` where every unknown is constrained.
fn compare(acc: &mut Acc, what: &str, sol: SolutionSet, want: &FockOp, m: usize) -> Result<()> {
    let sol = sol.restrict(m)?;
    acc.note(format!("{what} raw stage dims"), format!("{:?}", sol.stage_dims));
    acc.note(format!("{what} dim"), sol.dim());
    acc.truth(&format!("{what} solution space is one-dimensional"), sol.dim() == 1, || {
        format!("dimension {} on blocks 0..={m}", sol.dim())
    });
    if sol.dim() == 1 {
        acc.blocks(&format!("{what} matches the closed form"), &sol.normalized()?, want, m)?;
    }
    Ok(())
}

pub fn oracle_k(ctx: &Ctx) -> Result<Acc> {
    let p = &ctx.params;
    let m = blocks(ctx);
    let (t, top) = (m + 2, m + 1);
    let y = p.spec("y")?;
    let zs = [p.z().clone(), p.spec("x")?.clone()];
    let mut acc = Acc::new();
    for pi in K_REPS {
        let sol = solve_k_from_re(pi, y, &zs, p, t, top)?;
        compare(&mut acc, &format!("K_{pi} from reflection"), sol, &build_k(pi, y, Boundary::Right, p, t)?, m)?;
    }
    let z = p.z();
    let k = build_k(crate::reps::RepName::Upsilon, z, Boundary::Right, p, t)?;
    compare(&mut acc, "K_upsilon from intertwining", solve_k_from_intertwining(z, p, t, top)?, &k, m)?;
    // K(w_1) / K(w_0) = (1 - q^2 u^-2 xi^-1 z^2) / (z^2 - q^2 u^-2 xi^-1)
    let one = Scalar::one();
    let g = &(&p.p() / &(&p.u * &p.u)) / &p.xi;
    let z2 = z * z;
    let want = &(&one - &(&g * &z2)) / &(&z2 - &g);
    acc.scalars("K_upsilon ratio of the first two entries", &(&k.entry(1, 1) / &k.entry(0, 0)), &want);
    Ok(acc)
}

pub fn oracle_r(ctx: &Ctx) -> Result<Acc> {
    let p = &ctx.params;
    let m = blocks(ctx);
    let (t, top) = (m + 2, m + 1);
    let z = p.z();
    let mut acc = Acc::new();
    let want = build_r(RPair::UpsilonPhi, z, false, p, t)?;
    compare(&mut acc, "R_upsilon_phi", solve_r_upsilon_phi(z, p, t, top)?, &want, m)?;
    let z2s = [p.spec("z2")?.clone(), p.spec("w")?.clone()];
    let want = build_r(RPair::RhoRhoBar, z, false, p, t)?;
    compare(&mut acc, "R_rho_rhobar", solve_r_rho_rhobar(z, &z2s, p, t, top)?, &want, m)?;
    Ok(acc)
}
