//! Deformed Pochhammer symbols and exponentials of nilpotent matrices.

use crate::error::Result;
use crate::exactq::{q_pochhammer, qexp_big_nilpotent, qexp_nilpotent, Scalar};
use crate::linalg::Matrix;
use crate::verify::suites::{rng_for, small_rational};
use crate::verify::{Acc, Ctx};

/// Largest test matrix.
pub const MATRIX_DIM: usize = 8;

pub fn pochhammer(ctx: &Ctx) -> Result<Acc> {
    let p = &ctx.params;
    let mut acc = Acc::new();
    let xs = [p.spec("x")?.clone(), p.spec("w")?.clone(), p.xi.clone(), &p.q * p.z()];
    let bases = [p.p(), p.q.clone(), p.p().inv()?];
    for x in &xs {
        for b in &bases {
            let bi = b.inv()?;
            for n in 0..=6i64 {
                let neg = q_pochhammer(x, b, -n)?;
                let shifted = q_pochhammer(&(&b.pow(-n)? * x), b, n)?;
                acc.scalars(&format!("(x;p)_-n (p^-n x;p)_n = 1, n={n}"), &(&neg * &shifted), &Scalar::one());
                let flipped = q_pochhammer(&(x * &bi), &bi, n)?.inv()?;
                acc.scalars(&format!("(x;p)_-n = (x/p;1/p)_n^-1, n={n}"), &neg, &flipped);
                let reflected = (-x.clone()).pow(-n)? * b.pow(n * (n + 1) / 2)? * q_pochhammer(&(b / x), b, n)?.inv()?;
                acc.scalars(&format!("(x;p)_-n reflection form, n={n}"), &neg, &reflected);
                // direct product over m = -n..-1
                let mut direct = Scalar::one();
                for m in -n..0 {
                    direct *= &(Scalar::one() - &(x * &b.pow(m)?)).inv()?;
                }
                acc.scalars(&format!("(x;p)_-n direct product, n={n}"), &neg, &direct);
            }
        }
    }
    Ok(acc)
}

/// Strictly lower triangular matrix with random entries.
fn random_nilpotent(rng: &mut rand_chacha::ChaCha8Rng, d: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..i {
            m.set(i, j, small_rational(rng));
        }
    }
    m
}

pub fn exponential(ctx: &Ctx) -> Result<Acc> {
    let p = ctx.params.p();
    let pi = p.inv()?;
    let mut rng = rng_for(ctx, "qseries-exp");
    let mut acc = Acc::new();
    for d in 1..=MATRIX_DIM {
        let m = random_nilpotent(&mut rng, d);
        let id = Matrix::identity(d);
        let e = qexp_nilpotent(&m, &p)?;
        let lhs = qexp_nilpotent(&m.scale(&p), &p)?;
        acc.matrices(&format!("e_p(pM) = (1-M) e_p(M), dim {d}"), &lhs, &id.sub(&m)?.mul(&e)?);
        let inv = qexp_nilpotent(&m.scale(&pi), &pi)?;
        acc.matrices(&format!("e_p(M) e_(1/p)(M/p) = 1, dim {d}"), &e.mul(&inv)?, &id);
        let big = qexp_big_nilpotent(&m.scale(&-Scalar::one()), &p)?;
        acc.matrices(&format!("e_p(M) E_p(-M) = 1, dim {d}"), &e.mul(&big)?, &id);
    }
    Ok(acc)
}

/// `X = x S`, `Y = y S diag(c p^i)` with `S` the lower shift, so `YX = p XY`.
fn commuting_pair(d: usize, x: &Scalar, y: &Scalar, c: &Scalar, p: &Scalar) -> Result<(Matrix, Matrix)> {
    let mut s = Matrix::zeros(d, d);
    for i in 0..d.saturating_sub(1) {
        s.set(i + 1, i, Scalar::one());
    }
    let lam = (0..d).map(|i| Ok(c * &p.pow(i as i64)?)).collect::<Result<Vec<_>>>()?;
    Ok((s.scale(x), s.mul(&Matrix::diagonal(&lam))?.scale(y)))
}

pub fn product(ctx: &Ctx) -> Result<Acc> {
    let p = ctx.params.p();
    let mut rng = rng_for(ctx, "qseries-product");
    let mut acc = Acc::new();
    let e = |m: &Matrix| qexp_nilpotent(m, &p);
    for d in 1..=MATRIX_DIM {
        let (x, y, c) = (small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng));
        let (xm, ym) = commuting_pair(d, &x, &y, &c, &p)?;
        let id = Matrix::identity(d);
        acc.matrices(&format!("YX = p XY, dim {d}"), &ym.mul(&xm)?, &xm.mul(&ym)?.scale(&p));
        acc.matrices(&format!("e_p(X) e_p(Y) = e_p(X+Y), dim {d}"), &e(&xm)?.mul(&e(&ym)?)?, &e(&xm.add(&ym)?)?);
        let yx = e(&ym)?.mul(&e(&xm)?)?;
        let first = e(&xm.mul(&id.sub(&ym)?)?)?.mul(&e(&ym)?)?;
        acc.matrices(&format!("e_p(Y) e_p(X) = e_p(X(1-Y)) e_p(Y), dim {d}"), &yx, &first);
        let second = e(&xm)?.mul(&e(&xm.mul(&ym)?.scale(&-Scalar::one()))?)?.mul(&e(&ym)?)?;
        acc.matrices(&format!("e_p(Y) e_p(X) = e_p(X) e_p(-XY) e_p(Y), dim {d}"), &yx, &second);
        let third = e(&xm)?.mul(&e(&id.sub(&xm)?.mul(&ym)?)?)?;
        acc.matrices(&format!("e_p(Y) e_p(X) = e_p(X) e_p((1-X)Y), dim {d}"), &yx, &third);
    }
    Ok(acc)
}
