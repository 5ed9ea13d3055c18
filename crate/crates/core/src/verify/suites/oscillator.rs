//! q-oscillator relations and commutators with deformed exponentials on `W ⊗ W`.

use crate::error::Result;
use crate::exactq::{q_pochhammer, q_pochhammer_inv, Scalar};
use crate::fock::{block_exact, qexp_blocks, FockOp, FockSpace, Generator};
use crate::verify::suites::{gen, random_table, rng_for};
use crate::verify::{Acc, Ctx};

pub fn relations(ctx: &Ctx) -> Result<Acc> {
    let q = &ctx.params.q;
    let n = ctx.n;
    let mut rng = rng_for(ctx, "oscillator-relations");
    let mut acc = Acc::new();
    for legs in [1usize, 2] {
        let s = FockSpace::fock_legs(n, legs);
        for leg in 0..legs {
            let tag = |what: &str| format!("{what} on leg {leg} of {legs}");
            let a = gen(Generator::A, leg, &s, q)?;
            let ad = gen(Generator::Adag, leg, &s, q)?;
            let abd = gen(Generator::AbarDag, leg, &s, q)?;
            let d = |f: &dyn Fn(i64) -> Result<Scalar>| -> Result<FockOp> {
                let vals = (0..=n as i64).map(f).collect::<Result<Vec<_>>>()?;
                gen(Generator::Diag(vals), leg, &s, q)
            };
            let one = Scalar::one();
            acc.window(&tag("a a† = 1 - q^{2(D+1)}"), &a.compose(&ad)?, &d(&|j| Ok(&one - &q.pow(2 * (j + 1))?))?)?;
            acc.window(&tag("a† a = 1 - q^{2D}"), &ad.compose(&a)?, &d(&|j| Ok(&one - &q.pow(2 * j)?))?)?;
            let f = random_table(&mut rng, n + 2);
            let fd = d(&|j| Ok(f[j as usize].clone()))?;
            let fd1 = d(&|j| Ok(f[j as usize + 1].clone()))?;
            acc.window(&tag("a f(D) = f(D+1) a"), &a.compose(&fd)?, &fd1.compose(&a)?)?;
            acc.window(&tag("f(D) a† = a† f(D+1)"), &fd.compose(&ad)?, &ad.compose(&fd1)?)?;
            let qd = d(&|j| Ok(-q.pow(-2 * j)?))?;
            acc.window(&tag("ā† = -q^{-2D} a†"), &abd, &qd.compose(&ad)?)?;
            let flipped = gen(Generator::Adag, leg, &s, &q.inv()?)?;
            acc.window(&tag("q -> 1/q exchanges a† and ā†"), &flipped, &abd)?;
        }
        if legs == 2 {
            let a1 = gen(Generator::A, 0, &s, q)?;
            let ad2 = gen(Generator::Adag, 1, &s, q)?;
            acc.window("a_1 a†_2 = a†_2 a_1", &a1.compose(&ad2)?, &ad2.compose(&a1)?)?;
        }
    }
    Ok(acc)
}

pub fn ladder(ctx: &Ctx) -> Result<Acc> {
    let q = &ctx.params.q;
    let p = ctx.params.p();
    let s = FockSpace::fock(ctx.n);
    let a = gen(Generator::A, 0, &s, q)?;
    let ad = gen(Generator::Adag, 0, &s, q)?;
    let abd = gen(Generator::AbarDag, 0, &s, q)?;
    let pd = FockOp::diagonal(&s, |d| p.pow(d[0] as i64))?;
    let mut acc = Acc::new();
    let mut ak = FockOp::identity(&s);
    let mut bk = FockOp::identity(&s);
    for k in 0..=4i64 {
        let ak1 = a.compose(&ak)?;
        let bk1 = abd.compose(&bk)?;
        let c = Scalar::one() - &p.pow(k + 1)?;
        let lhs = FockOp::commutator(&ak1, &ad)?;
        acc.window(&format!("[a^{}, a†] = (1-p^{}) p^D a^{k}", k + 1, k + 1), &lhs, &pd.compose(&ak)?.scale(&c))?;
        let lhs = FockOp::qcommutator(&bk1, &a, &p.pow(k + 1)?)?;
        acc.window(&format!("[ā†^{}, a]_(p^{}) = (1-p^{}) ā†^{k}", k + 1, k + 1, k + 1), &lhs, &bk.scale(&c))?;
        ak = ak1;
        bk = bk1;
    }
    Ok(acc)
}

/// `e_p(c x)` with `x = left ∘ right`, exact on every complete block.
pub(crate) fn exp_of(s: &FockSpace, ctx: &Ctx, c: &Scalar, build: &dyn Fn(&FockSpace) -> Result<FockOp>) -> Result<FockOp> {
    let p = ctx.params.p();
    block_exact(s, |t| qexp_blocks(&build(t)?.scale(c), &p))
}

/// `x ↦ a_1 ā†_2` and `x ↦ a†_1 a_2` as builders.
pub(crate) fn lowering_raising(t: &FockSpace, q: &Scalar) -> Result<FockOp> {
    gen(Generator::A, 0, t, q)?.compose(&gen(Generator::AbarDag, 1, t, q)?)
}

fn raising_lowering(t: &FockSpace, q: &Scalar) -> Result<FockOp> {
    gen(Generator::Adag, 0, t, q)?.compose(&gen(Generator::A, 1, t, q)?)
}

pub(crate) fn diag2(s: &FockSpace, f: impl Fn(i64, i64) -> Result<Scalar>) -> Result<FockOp> {
    FockOp::diagonal(s, |d| f(d[0] as i64, d[1] as i64))
}

pub fn exp_commutators(ctx: &Ctx) -> Result<Acc> {
    let q = ctx.params.q.clone();
    let p = ctx.params.p();
    let y = ctx.params.spec("x")?.clone();
    let s = FockSpace::fock_legs(ctx.n, 2);
    let mut rng = rng_for(ctx, "oscillator-exp-commutators");
    let e = exp_of(&s, ctx, &y, &|t| lowering_raising(t, &q))?;
    let a1 = gen(Generator::A, 0, &s, &q)?;
    let a2 = gen(Generator::A, 1, &s, &q)?;
    let ad1 = gen(Generator::Adag, 0, &s, &q)?;
    let abd2 = gen(Generator::AbarDag, 1, &s, &q)?;
    let f = random_table(&mut rng, 2 * ctx.n + 1);
    let fsum = diag2(&s, |j, k| Ok(f[(j + k) as usize].clone()))?;
    let pd1 = diag2(&s, |j, _| p.pow(j))?;
    let pmd1 = diag2(&s, |j, _| p.pow(-j))?;
    let zero = FockOp::zero(&s);
    let mut acc = Acc::new();
    acc.window("[E, f(D1+D2)] = 0", &FockOp::commutator(&e, &fsum)?, &zero)?;
    acc.window("[E, a_1] = 0", &FockOp::commutator(&e, &a1)?, &zero)?;
    acc.window("[E, ā†_2] = 0", &FockOp::commutator(&e, &abd2)?, &zero)?;
    let rhs = FockOp::product(&[&pd1, &abd2, &e])?.scale(&y);
    acc.window("[E, a†_1] = y p^{D1} ā†_2 E", &FockOp::commutator(&e, &ad1)?, &rhs)?;
    let lhs = FockOp::commutator(&e, &pmd1.compose(&a2)?)?;
    let rhs = FockOp::product(&[&e, &a1, &pmd1])?.scale(&y);
    acc.window("[E, p^{-D1} a_2] = y E a_1 p^{-D1}", &lhs, &rhs)?;
    Ok(acc)
}

pub fn exp_commutators_raising(ctx: &Ctx) -> Result<Acc> {
    let q = ctx.params.q.clone();
    let p = ctx.params.p();
    let y = ctx.params.spec("w")?.clone();
    let s = FockSpace::fock_legs(ctx.n, 2);
    let f = exp_of(&s, ctx, &y, &|t| raising_lowering(t, &q))?;
    let e = exp_of(&s, ctx, &y, &|t| lowering_raising(t, &q))?;
    let ad1 = gen(Generator::Adag, 0, &s, &q)?;
    let abd1 = gen(Generator::AbarDag, 0, &s, &q)?;
    let a2 = gen(Generator::A, 1, &s, &q)?;
    let abd2 = gen(Generator::AbarDag, 1, &s, &q)?;
    let pd2 = diag2(&s, |_, k| p.pow(-k - 1))?;
    let pd1 = diag2(&s, |j, _| p.pow(-j - 1))?;
    let mut acc = Acc::new();
    let rhs = FockOp::product(&[&f, &ad1, &pd2])?.scale(&y);
    acc.window("[ā†_2, e_p(y a†_1 a_2)] = y e_p(y a†_1 a_2) a†_1 p^{-D2-1}", &FockOp::commutator(&abd2, &f)?, &rhs)?;
    let lhs = FockOp::commutator(&abd1.compose(&a2)?, &e)?;
    let rhs = e.compose(&pd1)?.sub(&pd2.compose(&e)?)?.scale(&y);
    acc.window("[ā†_1 a_2, E] = y (E p^{-D1-1} - p^{-D2-1} E)", &lhs, &rhs)?;
    Ok(acc)
}

pub fn pochhammer_products(ctx: &Ctx) -> Result<Acc> {
    let q = ctx.params.q.clone();
    let p = ctx.params.p();
    let y = ctx.params.spec("x")?.clone();
    let s = FockSpace::fock_legs(ctx.n, 2);
    let m = ctx.m_max;
    let e1 = exp_of(&s, ctx, &p, &|t| lowering_raising(t, &q))?;
    let poch = diag2(&s, |j, _| q_pochhammer(&y, &p, j))?;
    // e_p(-a_1 ā†_2 p^{D1} y)
    let g = exp_of(&s, ctx, &-y.clone(), &|t| {
        lowering_raising(t, &q)?.compose(&FockOp::diagonal(t, |d| p.pow(d[0] as i64))?)
    })?;
    let mut acc = Acc::new();
    acc.blocks(
        "e_p(p a_1 ā†_2) (y;p)_{D1} = (y;p)_{D1} e_p(-a_1 ā†_2 p^{D1} y) e_p(p a_1 ā†_2)",
        &e1.compose(&poch)?,
        &FockOp::product(&[&poch, &g, &e1])?,
        m,
    )?;
    let q1 = diag2(&s, |j, _| q_pochhammer_inv(&(&p.pow(1 - j)? * &y), &p, j))?;
    let q2 = diag2(&s, |_, k| q_pochhammer_inv(&(&p.pow(1 - k)? * &y), &p, k))?;
    let h = exp_of(&s, ctx, &(&p * &y), &|t| {
        gen(Generator::AbarDag, 0, t, &q)?.compose(&gen(Generator::A, 1, t, &q)?)
    })?;
    acc.blocks(
        "e_p(p a_1 ā†_2) (p^{1-D1} y;p)_{D1}^-1 e_p(p y ā†_1 a_2) = e_p(p y ā†_1 a_2) (p^{1-D2} y;p)_{D2}^-1 e_p(p a_1 ā†_2)",
        &FockOp::product(&[&e1, &q1, &h])?,
        &FockOp::product(&[&h, &q2, &e1])?,
        m,
    )?;
    Ok(acc)
}
