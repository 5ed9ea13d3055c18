//! Fusion maps between `W` and `W ⊗ C^2`.

use crate::error::{Error, Result};
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::{FockOp, FockSpace, Window};
use crate::operators::lops::w_c2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionKind {
    Iota,
    Tau,
}

/// `iota(r) = (q^{-D} a†, -q^{D+1} r)^T : W -> W ⊗ C^2` and
/// `tau(r) = (q^D, q^{-D} r^{-1} a†) : W ⊗ C^2 -> W`.
pub fn build_fusion(kind: FusionKind, r: &Scalar, params: &ParamPoint, n: usize) -> Result<FockOp> {
    if r.is_zero() {
        return Err(Error::Inadmissible("fusion map at r = 0".into()));
    }
    let q = &params.q;
    let w = FockSpace::fock(n);
    let v = w_c2(n);
    let ri = r.inv()?;
    // a† w_j = (1 - q^{2(j+1)}) w_{j+1}
    let adag = |j: usize| Scalar::one() - q.pow(2 * (j as i64 + 1)).expect("q is nonzero");
    let mut win = Window::exact(1);
    win.guard[0] = 1;
    win.raise[0] = Some(1);
    win.charge_raise = 1;
    match kind {
        FusionKind::Iota => {
            let cols = (0..=n)
                .map(|j| {
                    let mut c = vec![(v.index(&[j, 1]).expect("in range"), -(&q.pow(j as i64 + 1)? * r))];
                    if j < n {
                        let val = &q.pow(-(j as i64) - 1)? * &adag(j);
                        c.push((v.index(&[j + 1, 0]).expect("in range"), val));
                    }
                    Ok(c)
                })
                .collect::<Result<Vec<_>>>()?;
            FockOp::from_columns(w, v, cols, win)
        }
        FusionKind::Tau => {
            let cols = (0..v.dim())
                .map(|i| {
                    let d = v.digits(i);
                    let j = d[0];
                    if d[1] == 0 {
                        return Ok(vec![(j, q.pow(j as i64)?)]);
                    }
                    if j == n {
                        return Ok(vec![]);
                    }
                    Ok(vec![(j + 1, &(&q.pow(-(j as i64) - 1)? * &ri) * &adag(j))])
                })
                .collect::<Result<Vec<_>>>()?;
            win.charge_raise = 0;
            FockOp::from_columns(v, w, cols, win)
        }
    }
}
