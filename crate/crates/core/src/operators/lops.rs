//! L-operators on `W ⊗ C^2`.

use crate::error::{Error, Result};
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::{block_exact, diag_fn, make_generator, two_leg, FockOp, FockSpace, Generator, Leg};
use crate::reps::RepName;

/// Which member of an L-operator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Plus,
    /// legs swapped, acting on `C^2 ⊗ W`
    Minus,
    /// `L(q^2 z)^{-1}`
    Tilde,
}

/// `W ⊗ C^2`.
pub fn w_c2(n: usize) -> FockSpace {
    FockSpace::new(n, vec![Leg::Fock, Leg::Two])
}

/// `sum_{ij} x_ij ⊗ E_ij` on `W ⊗ C^2`, where `E_ij` sends `v_j` to `v_i` and `v_0 = v+`.
pub fn two_by_two(w: &FockSpace, entries: [[Option<FockOp>; 2]; 2]) -> Result<FockOp> {
    let c2 = FockSpace::two(w.n());
    let mut acc: Option<FockOp> = None;
    for (i, row) in entries.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let Some(x) = x else { continue };
            let mut m = [[Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()]];
            m[i][j] = Scalar::one();
            let term = x.tensor(&two_leg(&c2, 0, m)?)?;
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
    }
    acc.map_or_else(|| Ok(FockOp::zero(&w.tensor(&c2)?)), Ok)
}

fn plus(pi: RepName, z: &Scalar, params: &ParamPoint, w: &FockSpace) -> Result<FockOp> {
    let q = params.q.clone();
    let u2 = &params.u * &params.u;
    let z2 = z * z;
    let a = make_generator(&Generator::A, 0, w, &q)?;
    let ad = make_generator(&Generator::Adag, 0, w, &q)?;
    let abd = make_generator(&Generator::AbarDag, 0, w, &q)?;
    let qd = |c: i64, s: i64, pre: Scalar| {
        let q = q.clone();
        diag_fn(w, 0, move |j| Ok(&pre * &q.pow(c + s * j)?))
    };
    let one = Scalar::one();
    let e = match pi {
        RepName::Rho => [
            [qd(0, 1, one.clone())?, ad.compose(&qd(-1, -1, z.clone())?)?],
            [a.compose(&qd(1, 1, z.clone())?)?, qd(0, -1, one.clone())?.sub(&qd(2, 1, z2.clone())?)?],
        ],
        RepName::RhoBar => [
            [qd(1, 1, one.clone())?.sub(&qd(1, -1, z2.clone())?)?, abd.compose(&qd(0, -1, z.clone())?)?],
            [a.compose(&qd(0, 1, z.clone())?)?, qd(-1, -1, one.clone())?],
        ],
        RepName::Upsilon => {
            let (q1, u2c, ui2) = (q.clone(), u2.clone(), u2.inv()?);
            let f = diag_fn(w, 0, move |j| Ok(&q1 * &(&(&q1.pow(j)? * &ui2) - &(&q1.pow(-j)? * &u2c))))?;
            [
                [qd(0, 1, one.clone())?.sub(&qd(0, -1, &u2 * &z2)?)?, ad.compose(&qd(-2, -1, &u2 * z)?)?],
                [a.compose(&f)?.scale(z), qd(-1, -1, u2.clone())?.sub(&qd(1, 1, z2.clone())?)?],
            ]
        }
        RepName::Phi => [
            [qd(1, 1, one.clone())?, FockOp::zero(w)],
            [a.compose(&qd(1, 1, z.clone())?)?, qd(0, -1, u2.inv()?)?],
        ],
        other => return Err(Error::Config(format!("no L-operator for {other}"))),
    };
    let [[x00, x01], [x10, x11]] = e;
    two_by_two(w, [[Some(x00), Some(x01)], [Some(x10), Some(x11)]])?.charge_preserving()
}

/// `L_pi(z)` for `pi` in `{upsilon, phi, rho, rhobar}` with truncation `n`.
///
/// ```text
/// L_rho(z)    = [[q^D, a† q^{-D-1} z], [a q^{D+1} z, q^{-D} - q^{D+2} z^2]]
/// L_rhobar(z) = [[q^{D+1} - q^{1-D} z^2, ā† q^{-D} z], [a q^D z, q^{-D-1}]]
/// L_upsilon(z)= [[q^D - q^{-D} u^2 z^2, a† q^{-D-2} u^2 z], [a q(q^D u^{-2} - q^{-D} u^2) z, q^{-D-1} u^2 - q^{D+1} z^2]]
/// L_phi(z)    = [[q^{D+1}, 0], [a q^{D+1} z, q^{-D} u^{-2}]]
/// ```
pub fn build_l(pi: RepName, z: &Scalar, variant: Variant, params: &ParamPoint, n: usize) -> Result<FockOp> {
    let w = FockSpace::fock(n);
    match variant {
        Variant::Plus => plus(pi, z, params, &w),
        Variant::Minus => plus(pi, z, params, &w)?.flip_legs(),
        Variant::Tilde => {
            let z = &(&params.q * &params.q) * z;
            block_exact(&w_c2(n), |t| plus(pi, &z, params, &FockSpace::fock(t.n()))?.inverse_blocks())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};

    #[test]
    fn rho_on_vacuum() {
        let p = sample_params(3, &Admissibility::default()).unwrap();
        let q = &p.q;
        let z = p.z().clone();
        let l = build_l(RepName::Rho, &z, Variant::Plus, &p, 4).unwrap();
        let s = w_c2(4);
        let plus0 = s.index(&[0, 0]).unwrap();
        let minus0 = s.index(&[0, 1]).unwrap();
        assert_eq!(l.apply_basis(plus0), &[(plus0, Scalar::one())]);
        let plus1 = s.index(&[1, 0]).unwrap();
        let mut want = vec![
            (plus1, &(&q.inv().unwrap() * &z) * &(Scalar::one() - q * q)),
            (minus0, Scalar::one() - &(q * q) * &(&z * &z)),
        ];
        want.sort_by_key(|x| x.0);
        let got = l.apply_basis(minus0).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn tilde_inverts() {
        let p = sample_params(5, &Admissibility::default()).unwrap();
        let z = p.z().clone();
        let q2z = &(&p.q * &p.q) * &z;
        for pi in [RepName::Rho, RepName::RhoBar, RepName::Upsilon, RepName::Phi] {
            let t = build_l(pi, &z, Variant::Tilde, &p, 5).unwrap();
            let l = build_l(pi, &q2z, Variant::Plus, &p, 5).unwrap();
            let prod = t.compose(&l).unwrap();
            assert!(prod.agree_on_window(&FockOp::identity(&w_c2(5))).unwrap().is_equal(), "{pi}");
        }
    }
}
