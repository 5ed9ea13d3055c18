//! Charge-preserving operators built and transformed block by block.

use crate::error::{Error, Result};
use crate::exactq::{qexp_big_nilpotent, qexp_nilpotent, Scalar};
use crate::fock::op::FockOp;
use crate::fock::space::FockSpace;
use crate::fock::window::Window;

/// Builds a charge-preserving operator that is exact on every complete block of `space`.
///
/// `build` is evaluated on enlarged truncations until its exactness window covers
/// all inputs of charge at most `N`; those columns are then copied back.
pub fn block_exact(space: &FockSpace, build: impl Fn(&FockSpace) -> Result<FockOp>) -> Result<FockOp> {
    let n = space.n();
    for slack in 1..=8 {
        let big_space = space.with_truncation(n + slack);
        let big = build(&big_space)?;
        if big.domain() != &big_space || big.codomain() != &big_space {
            return Err(Error::Shape("block builder returned an operator on another space".into()));
        }
        if !big.is_block_preserving() {
            return Err(Error::NotBlockPreserving("block builder output".into()));
        }
        let inputs: Vec<usize> = (0..big_space.dim()).filter(|&i| big_space.charge(i) <= n).collect();
        if !inputs.iter().all(|&i| big.in_window(i)) {
            continue;
        }
        let mut cols = vec![Vec::new(); space.dim()];
        for i in inputs {
            let j = space.index(&big_space.digits(i)).expect("charge bounded by N");
            cols[j] = big
                .apply_basis(i)
                .iter()
                .map(|(r, v)| (space.index(&big_space.digits(*r)).expect("charge bounded by N"), v.clone()))
                .collect();
        }
        let mut win = Window::blockwise(space.num_fock());
        win.raise = big.window().raise.clone();
        return FockOp::from_columns(space.clone(), space.clone(), cols, win);
    }
    Err(Error::WindowTooSmall("block builder window never covered the complete blocks".into()))
}

/// `e_p(x)` blockwise for a charge-preserving, blockwise nilpotent `x`.
pub fn qexp_blocks(x: &FockOp, p: &Scalar) -> Result<FockOp> {
    x.map_blocks(|_, b| qexp_nilpotent(&b, p))
}

/// `E_p(x)` blockwise.
pub fn qexp_big_blocks(x: &FockOp, p: &Scalar) -> Result<FockOp> {
    x.map_blocks(|_, b| qexp_big_nilpotent(&b, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::generators::{make_generator, Generator};

    #[test]
    fn lowering_raising_pair_is_block_exact() {
        let q = Scalar::ratio(3, 2);
        let s = FockSpace::fock_legs(3, 2);
        let x = block_exact(&s, |t| {
            let a1 = make_generator(&Generator::A, 0, t, &q)?;
            let b2 = make_generator(&Generator::AbarDag, 1, t, &q)?;
            a1.compose(&b2)
        })
        .unwrap();
        assert!(x.covers_blocks(3));
        let blk = x.restrict_to_block(1).unwrap();
        // w1⊗w0 is basis position 1 of block 1; it maps to (1 - q^{-2}) w0⊗w1.
        assert_eq!(blk.get(0, 1), &(Scalar::one() - q.pow(-2).unwrap()));
        assert!(blk.get(1, 0).is_zero());
        for m in 0..=3 {
            assert_eq!(x.restrict_to_block(m).unwrap().nilpotency_index().map(|k| k <= m + 1), Some(true));
        }
    }
}
