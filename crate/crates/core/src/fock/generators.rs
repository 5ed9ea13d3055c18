//! The q-oscillator generators on one leg of a tensor space.

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::fock::op::FockOp;
use crate::fock::space::{FockSpace, Leg};
use crate::fock::window::Window;

/// Generator kinds. `Diag` carries its values on `w_0..w_N`.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// `a w_{j+1} = w_j`, `a w_0 = 0`
    A,
    /// `a† w_j = (1 - q^{2(j+1)}) w_{j+1}`
    Adag,
    /// `ā† = -q^{-2D} a†`, so `ā† w_j = (1 - q^{-2(j+1)}) w_{j+1}`
    AbarDag,
    Diag(Vec<Scalar>),
}

fn fock_slot(space: &FockSpace, leg: usize) -> Result<usize> {
    if leg >= space.num_legs() || space.legs()[leg] != Leg::Fock {
        return Err(Error::Shape(format!("leg {leg} of {space:?} is not a Fock leg")));
    }
    Ok(space.fock_positions().iter().position(|&p| p == leg).expect("fock leg"))
}

/// The generator acting on Fock leg `leg` of `space`, identity elsewhere.
pub fn make_generator(kind: &Generator, leg: usize, space: &FockSpace, q: &Scalar) -> Result<FockOp> {
    let slot = fock_slot(space, leg)?;
    let n = space.n();
    let q2 = q * q;
    let mut win = Window::exact(space.num_fock());
    // (digit shift, coefficient for input occupation j)
    let (shift, coeff): (i64, Box<dyn Fn(usize) -> Result<Scalar>>) = match kind {
        Generator::A => (-1, Box::new(|_| Ok(Scalar::one()))),
        Generator::Adag => {
            win.guard[slot] = 1;
            win.raise[slot] = Some(1);
            win.charge_raise = 1;
            let q2 = q2.clone();
            (1, Box::new(move |j| Ok(Scalar::one() - q2.pow(j as i64 + 1)?)))
        }
        Generator::AbarDag => {
            win.guard[slot] = 1;
            win.raise[slot] = Some(1);
            win.charge_raise = 1;
            let q2 = q2.clone();
            (1, Box::new(move |j| Ok(Scalar::one() - q2.pow(-(j as i64) - 1)?)))
        }
        Generator::Diag(values) => {
            if values.len() < n + 1 {
                return Err(Error::Shape(format!("diagonal table has {} values, need {}", values.len(), n + 1)));
            }
            let v = values.clone();
            (0, Box::new(move |j| Ok(v[j].clone())))
        }
    };
    let cols = (0..space.dim())
        .map(|i| {
            let mut d = space.digits(i);
            let j = d[leg];
            let target = j as i64 + shift;
            if target < 0 || target > n as i64 {
                return Ok(Vec::new());
            }
            let c = coeff(j)?;
            d[leg] = target as usize;
            Ok(vec![(space.index(&d).expect("in range"), c)])
        })
        .collect::<Result<Vec<_>>>()?;
    FockOp::from_columns(space.clone(), space.clone(), cols, win)
}

/// Diagonal operator `f(D)` on one Fock leg, with `f` evaluated on `0..=N`.
pub fn diag_fn(space: &FockSpace, leg: usize, f: impl Fn(i64) -> Result<Scalar>) -> Result<FockOp> {
    let values = (0..=space.n() as i64).map(f).collect::<Result<Vec<_>>>()?;
    make_generator(&Generator::Diag(values), leg, space, &Scalar::one())
}

/// A 2x2 matrix on a two-dimensional leg; entry `m[i][j]` sends `v_j` to `v_i` (`v_0 = v+`).
pub fn two_leg(space: &FockSpace, leg: usize, m: [[Scalar; 2]; 2]) -> Result<FockOp> {
    if leg >= space.num_legs() || space.legs()[leg] != Leg::Two {
        return Err(Error::Shape(format!("leg {leg} of {space:?} is not two-dimensional")));
    }
    let mut win = Window::exact(space.num_fock());
    if !m[1][0].is_zero() {
        win.charge_raise = 1;
    }
    let cols = (0..space.dim())
        .map(|i| {
            let d = space.digits(i);
            (0..2)
                .filter(|&r| !m[r][d[leg]].is_zero())
                .map(|r| {
                    let mut e = d.clone();
                    e[leg] = r;
                    (space.index(&e).expect("in range"), m[r][d[leg]].clone())
                })
                .collect()
        })
        .collect();
    FockOp::from_columns(space.clone(), space.clone(), cols, win)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::ratio(2, 3)
    }

    #[test]
    fn generator_actions_on_vacuum() {
        let s = FockSpace::fock(4);
        let q = q();
        let a = make_generator(&Generator::A, 0, &s, &q).unwrap();
        assert!(a.apply_basis(0).is_empty());
        let ad = make_generator(&Generator::Adag, 0, &s, &q).unwrap();
        assert_eq!(ad.apply_basis(0), &[(1, Scalar::one() - &q * &q)]);
        let ab = make_generator(&Generator::AbarDag, 0, &s, &q).unwrap();
        assert_eq!(ab.apply_basis(0), &[(1, Scalar::one() - (&q * &q).inv().unwrap())]);
    }

    #[test]
    fn metadata() {
        let s = FockSpace::fock(4);
        let q = q();
        let a = make_generator(&Generator::A, 0, &s, &q).unwrap();
        assert_eq!((a.window().raise[0], a.window().guard[0]), (Some(0), 0));
        let ad = make_generator(&Generator::Adag, 0, &s, &q).unwrap();
        assert_eq!((ad.window().raise[0], ad.window().guard[0]), (Some(1), 1));
    }

    #[test]
    fn abar_is_minus_q_power_times_adag() {
        let s = FockSpace::fock(5);
        let q = q();
        let ab = make_generator(&Generator::AbarDag, 0, &s, &q).unwrap();
        let ad = make_generator(&Generator::Adag, 0, &s, &q).unwrap();
        let d = diag_fn(&s, 0, |j| Ok(-(q.pow(-2 * j)?))).unwrap();
        assert!(d.compose(&ad).unwrap().agree_on_window(&ab).unwrap().is_equal());
    }
}
