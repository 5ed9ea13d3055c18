//! Charge-preserving two-leg operators: R-operators and the intertwiner O.

use crate::error::Result;
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::{block_exact, make_generator, qexp_blocks, FockOp, FockSpace, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RPair {
    RhoRhoBar,
    UpsilonPhi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OVariant {
    O,
    /// legs swapped
    O21,
    Inverse,
}

fn gens(t: &FockSpace, q: &Scalar) -> Result<[FockOp; 5]> {
    Ok([
        make_generator(&Generator::A, 0, t, q)?,
        make_generator(&Generator::Adag, 0, t, q)?,
        make_generator(&Generator::A, 1, t, q)?,
        make_generator(&Generator::AbarDag, 1, t, q)?,
        FockOp::identity(t),
    ])
}

fn r_on(pair: RPair, z: &Scalar, params: &ParamPoint, t: &FockSpace) -> Result<FockOp> {
    let q = &params.q;
    let p = q * q;
    let [a1, ad1, a2, abd2, _] = gens(t, q)?;
    match pair {
        RPair::UpsilonPhi => {
            let x = ad1.compose(&a2)?.scale(z);
            let (u2, q) = (&params.u * &params.u, q.clone());
            // u^{2(j2-j1)} q^{(j1-j2) - 2 j1 (j2+1)}
            let d = FockOp::diagonal(t, |d| {
                let (j1, j2) = (d[0] as i64, d[1] as i64);
                Ok(u2.pow(j2 - j1)? * q.pow(j1 - j2 - 2 * j1 * (j2 + 1))?)
            })?;
            qexp_blocks(&x, &p)?.compose(&d)
        }
        RPair::RhoRhoBar => {
            let x = a1.compose(&abd2)?.scale(&(&q.pow(3)? * z));
            let y = ad1.compose(&a2)?.scale(&(&q.inv()? * z));
            let q = q.clone();
            let d = FockOp::diagonal(t, |d| q.pow(-2 * d[0] as i64 * (d[1] as i64 + 1)))?;
            FockOp::product(&[&qexp_blocks(&x, &p)?, &qexp_blocks(&y, &p)?, &d])
        }
    }
}

/// `R_{rho rhobar}(z) = e_{q^2}(q^3 z a_1 ā†_2) e_{q^2}(q^{-1} z a†_1 a_2) q^{-2 D_1 (D_2+1)}` and
/// `R_{upsilon phi}(z) = e_{q^2}(z a†_1 a_2) u^{2(D_2-D_1)} q^{(D_1-D_2) - 2 D_1 (D_2+1)}`, exact on all
/// charge blocks up to `n`. With `tilde` set, returns `R(q^2 z)^{-1}`.
pub fn build_r(pair: RPair, z: &Scalar, tilde: bool, params: &ParamPoint, n: usize) -> Result<FockOp> {
    let s = FockSpace::fock_legs(n, 2);
    if tilde {
        let z = &params.p() * z;
        return build_r(pair, &z, false, params, n)?.inverse_blocks();
    }
    block_exact(&s, |t| r_on(pair, z, params, t))
}

/// `O = e_{q^2}(q^2 a_1 ā†_2)^{-1} u^{D_1 - D_2}`, its leg swap, or its inverse.
pub fn build_o(variant: OVariant, params: &ParamPoint, n: usize) -> Result<FockOp> {
    let s = FockSpace::fock_legs(n, 2);
    let q = &params.q;
    let p = q * q;
    let u = params.u.clone();
    let inverse = variant == OVariant::Inverse;
    let op = block_exact(&s, |t| {
        let [a1, _, _, abd2, _] = gens(t, q)?;
        let e = qexp_blocks(&a1.compose(&abd2)?.scale(&p), &p)?;
        let sign = if inverse { -1 } else { 1 };
        let d = FockOp::diagonal(t, |d| u.pow(sign * (d[0] as i64 - d[1] as i64)))?;
        if inverse {
            d.compose(&e)
        } else {
            e.inverse_blocks()?.compose(&d)
        }
    })?;
    match variant {
        OVariant::O21 => op.flip_legs(),
        _ => Ok(op),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};

    #[test]
    fn documented_values() {
        let p = sample_params(12, &Admissibility::default()).unwrap();
        let q = &p.q;
        let z = p.z().clone();
        let s = FockSpace::fock_legs(5, 2);
        let (i00, i10, i01) = (s.index(&[0, 0]).unwrap(), s.index(&[1, 0]).unwrap(), s.index(&[0, 1]).unwrap());
        let r = build_r(RPair::RhoRhoBar, &z, false, &p, 5).unwrap();
        assert_eq!(r.apply_basis(i00), &[(i00, Scalar::one())]);
        let qm2 = q.pow(-2).unwrap();
        let mut want = vec![(i10, qm2.clone()), (i01, -(&(&qm2 * q) * &z))];
        want.sort_by_key(|x| x.0);
        assert_eq!(r.apply_basis(i10), want.as_slice());

        let o = build_o(OVariant::O, &p, 5).unwrap();
        let mut want = vec![(i10, p.u.clone()), (i01, p.u.clone())];
        want.sort_by_key(|x| x.0);
        assert_eq!(o.apply_basis(i10), want.as_slice());
        let oi = build_o(OVariant::Inverse, &p, 5).unwrap();
        assert!(o.compose(&oi).unwrap().agree_on_blocks(&FockOp::identity(&s), 5).unwrap().is_equal());
    }

    #[test]
    fn upsilon_phi_at_zero_is_diagonal() {
        let p = sample_params(13, &Admissibility::default()).unwrap();
        let r = build_r(RPair::UpsilonPhi, &Scalar::zero(), false, &p, 4).unwrap();
        let s = FockSpace::fock_legs(4, 2);
        let i = s.index(&[2, 1]).unwrap();
        let want = p.u.pow(-2).unwrap() * p.q.pow(1 - 8).unwrap();
        assert_eq!(r.apply_basis(i), &[(i, want)]);
    }
}
