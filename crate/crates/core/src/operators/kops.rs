//! Diagonal K-operators.

use crate::error::{Error, Result};
use crate::exactq::{q_pochhammer, q_pochhammer_inv, ParamPoint, Scalar};
use crate::fock::{diag_fn, two_leg, FockOp, FockSpace};
use crate::reps::RepName;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Right,
    Left,
}

/// Value of `K_pi(z)` on `w_j` (right boundary, fixes `w_0`).
pub fn right_entry(pi: RepName, z: &Scalar, params: &ParamPoint, j: i64) -> Result<Scalar> {
    let q = &params.q;
    let p = q * q;
    let xi = &params.xi;
    let xii = xi.inv()?;
    let ui2 = (&params.u * &params.u).inv()?;
    let z2 = z * z;
    let z2i = z2.inv()?;
    Ok(match pi {
        // (-q^{-j} xi)^j (q^2 xi^{-1} z^2; q^2)_j
        RepName::Rho => (-(&q.pow(-j)? * xi)).pow(j)? * q_pochhammer(&(&(&p * &xii) * &z2), &p, j)?,
        // (q z^2)^{-j} / (q^2 xi^{-1} z^{-2}; q^2)_j
        RepName::RhoBar => (q * &z2).pow(-j)? * q_pochhammer_inv(&(&(&p * &xii) * &z2i), &p, j)?,
        // z^{-2j} (q^2 u^{-2} xi^{-1} z^2; q^2)_j / (q^2 u^{-2} xi^{-1} z^{-2}; q^2)_j
        RepName::Upsilon => {
            let c = &(&p * &ui2) * &xii;
            z2.pow(-j)? * q_pochhammer(&(&c * &z2), &p, j)? * q_pochhammer_inv(&(&c * &z2i), &p, j)?
        }
        // (-u^{-2} q^{-j-1} xi)^j
        RepName::Phi => (-(&(&ui2 * &q.pow(-j - 1)?) * xi)).pow(j)?,
        other => return Err(Error::Config(format!("no diagonal K-operator for {other}"))),
    })
}

/// Value of the left operator `K~_pi(z)` on `w_j`.
pub fn left_entry(pi: RepName, z: &Scalar, params: &ParamPoint, j: i64) -> Result<Scalar> {
    let q = &params.q;
    let p = q * q;
    let xt = &params.xitilde;
    let u2 = &params.u * &params.u;
    let ui2 = u2.inv()?;
    let z2 = z * z;
    let z2i = z2.inv()?;
    let q4 = &p * &p;
    Ok(match pi {
        // (-q^j xt)^j / (q^4 xt z^2; q^2)_j
        RepName::Rho => (-(&q.pow(j)? * xt)).pow(j)? * q_pochhammer_inv(&(&(&q4 * xt) * &z2), &p, j)?,
        // (q^3 z^2)^j (xt z^{-2}; q^2)_j
        RepName::RhoBar => (&q.pow(3)? * &z2).pow(j)? * q_pochhammer(&(xt * &z2i), &p, j)?,
        // (q z)^{2j} (u^{-2} xt z^{-2}; q^2)_j / (q^4 u^{-2} xt z^2; q^2)_j
        RepName::Upsilon => {
            let c = &ui2 * xt;
            (q * z).pow(2 * j)? * q_pochhammer(&(&c * &z2i), &p, j)? * q_pochhammer_inv(&(&(&q4 * &c) * &z2), &p, j)?
        }
        // (-u^2 q^{j+1} xt)^j
        RepName::Phi => (-(&(&u2 * &q.pow(j + 1)?) * xt)).pow(j)?,
        other => return Err(Error::Config(format!("no diagonal K-operator for {other}"))),
    })
}

/// `K_pi(z)` or `K~_pi(z)`. For `Pi` this is the 2x2 diagonal matrix on `C^2`:
/// `diag(xi z^2 - 1, xi - z^2)` on the right, `diag(q^2 xt z^2 - 1, xt - q^2 z^2)` on the left.
pub fn build_k(pi: RepName, z: &Scalar, side: Boundary, params: &ParamPoint, n: usize) -> Result<FockOp> {
    if z.is_zero() {
        return Err(Error::Inadmissible("K-operator at z = 0".into()));
    }
    if pi == RepName::Pi {
        let z2 = z * z;
        let one = Scalar::one();
        let (a, b) = match side {
            Boundary::Right => (&(&params.xi * &z2) - &one, &params.xi - &z2),
            Boundary::Left => {
                let qz2 = &(&params.q * &params.q) * &z2;
                (&(&params.xitilde * &qz2) - &one, &params.xitilde - &qz2)
            }
        };
        return two_leg(&FockSpace::two(n), 0, [[a, Scalar::zero()], [Scalar::zero(), b]]);
    }
    let w = FockSpace::fock(n);
    match side {
        Boundary::Right => diag_fn(&w, 0, |j| right_entry(pi, z, params, j)),
        Boundary::Left => diag_fn(&w, 0, |j| left_entry(pi, z, params, j)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};

    #[test]
    fn documented_entries() {
        let p = sample_params(8, &Admissibility::default()).unwrap();
        let (q, xi, z) = (&p.q, &p.xi, p.z().clone());
        let k = build_k(RepName::Rho, &z, Boundary::Right, &p, 4).unwrap();
        assert_eq!(k.entry(0, 0), Scalar::one());
        let want = -(&(&q.inv().unwrap() * xi) * &(Scalar::one() - &(&(q * q) * &xi.inv().unwrap()) * &(&z * &z)));
        assert_eq!(k.entry(1, 1), want);
        let kphi = build_k(RepName::Phi, &z, Boundary::Right, &p, 4).unwrap();
        let u4 = p.u.pow(-4).unwrap();
        assert_eq!(kphi.entry(2, 2), &(&u4 * &q.pow(-6).unwrap()) * &(xi * xi));
    }

    #[test]
    fn left_is_inverse_of_shifted_right() {
        let p = sample_params(9, &Admissibility::default()).unwrap();
        let z = p.z().clone();
        let qz = &p.q * &z;
        let swapped = p.with("xi", p.xitilde.inv().unwrap()).unwrap();
        for pi in [RepName::Rho, RepName::RhoBar, RepName::Upsilon, RepName::Phi] {
            for j in 0..6 {
                let l = left_entry(pi, &z, &p, j).unwrap();
                let r = right_entry(pi, &qz, &swapped, j).unwrap();
                assert_eq!(&l * &r, Scalar::one(), "{pi} j={j}");
            }
        }
    }
}
