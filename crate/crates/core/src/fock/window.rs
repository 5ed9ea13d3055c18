//! Exactness windows of truncated operators.
//!
//! A truncated operator agrees with the untruncated one on every input basis
//! vector whose Fock occupations satisfy `j_i + guard_i <= N` and, if a charge
//! guard is present, whose charge `c` satisfies `c + charge_guard <= N`.
//!
//! `raise[i]` bounds how far leg `i`'s occupation can grow (`None`: unbounded
//! except through the charge), `charge_raise` bounds the growth of the charge.
//! Operators assembled block by block from charge-preserving pieces carry a
//! charge guard of zero and unbounded per-leg raising.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub guard: Vec<u32>,
    pub raise: Vec<Option<u32>>,
    pub charge_guard: Option<u32>,
    pub charge_raise: u32,
}

impl Window {
    /// Exact everywhere, raises nothing.
    pub fn exact(fock_legs: usize) -> Self {
        Window { guard: vec![0; fock_legs], raise: vec![Some(0); fock_legs], charge_guard: None, charge_raise: 0 }
    }

    /// Exact on complete charge blocks and charge preserving.
    pub fn blockwise(fock_legs: usize) -> Self {
        Window { guard: vec![0; fock_legs], raise: vec![None; fock_legs], charge_guard: Some(0), charge_raise: 0 }
    }

    pub fn legs(&self) -> usize {
        self.guard.len()
    }

    pub fn contains(&self, n: usize, fock_digits: &[usize], charge: usize) -> bool {
        let n = n as i64;
        let legs_ok = fock_digits.iter().zip(&self.guard).all(|(&j, &g)| j as i64 + g as i64 <= n);
        let charge_ok = self.charge_guard.is_none_or(|g| charge as i64 + g as i64 <= n);
        legs_ok && charge_ok
    }

    /// Window of `a ∘ b` (apply `b` first).
    pub fn compose(a: &Window, b: &Window) -> Result<Window> {
        if a.legs() != b.legs() {
            return Err(Error::Shape("window leg counts differ".into()));
        }
        let mut guard = Vec::with_capacity(a.legs());
        let mut raise = Vec::with_capacity(a.legs());
        let mut charge_guard = b.charge_guard;
        if let Some(ga) = a.charge_guard {
            charge_guard = max_opt(charge_guard, Some(ga + b.charge_raise));
        }
        for i in 0..a.legs() {
            match b.raise[i] {
                // An `a` that is exact everywhere needs no headroom after `b`.
                Some(rb) if a.guard[i] > 0 => guard.push(b.guard[i].max(a.guard[i] + rb)),
                Some(_) => guard.push(b.guard[i]),
                None => {
                    guard.push(b.guard[i]);
                    if a.guard[i] > 0 {
                        // Occupation of leg i after b is bounded only by the charge.
                        charge_guard = max_opt(charge_guard, Some(a.guard[i] + b.charge_raise));
                    }
                }
            }
            raise.push(match (a.raise[i], b.raise[i]) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            });
        }
        Ok(Window { guard, raise, charge_guard, charge_raise: a.charge_raise + b.charge_raise })
    }

    /// Window of a sum or difference.
    pub fn join(a: &Window, b: &Window) -> Result<Window> {
        if a.legs() != b.legs() {
            return Err(Error::Shape("window leg counts differ".into()));
        }
        Ok(Window {
            guard: a.guard.iter().zip(&b.guard).map(|(x, y)| *x.max(y)).collect(),
            raise: a.raise.iter().zip(&b.raise).map(|(x, y)| match (x, y) {
                (Some(x), Some(y)) => Some(*x.max(y)),
                _ => None,
            }).collect(),
            charge_guard: max_opt(a.charge_guard, b.charge_guard),
            charge_raise: a.charge_raise.max(b.charge_raise),
        })
    }

    /// Window of `a ⊗ b` with `a`'s Fock legs first.
    pub fn tensor(a: &Window, b: &Window) -> Window {
        let mut guard = a.guard.clone();
        guard.extend_from_slice(&b.guard);
        let mut raise = a.raise.clone();
        raise.extend_from_slice(&b.raise);
        Window {
            guard,
            raise,
            charge_guard: max_opt(a.charge_guard, b.charge_guard),
            charge_raise: a.charge_raise + b.charge_raise,
        }
    }

    /// Reorder Fock legs: entry `k` of the result is entry `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Window {
        Window {
            guard: perm.iter().map(|&p| self.guard[p]).collect(),
            raise: perm.iter().map(|&p| self.raise[p]).collect(),
            charge_guard: self.charge_guard,
            charge_raise: self.charge_raise,
        }
    }
}

fn max_opt(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leg(g: u32, r: u32) -> Window {
        Window { guard: vec![g], raise: vec![Some(r)], charge_guard: None, charge_raise: r }
    }

    #[test]
    fn product_rule() {
        // a·a† : g = max(1, 0 + 1)
        let w = Window::compose(&leg(0, 0), &leg(1, 1)).unwrap();
        assert_eq!((w.guard[0], w.raise[0]), (1, Some(1)));
        // a†·a† : g = max(1, 1 + 1)
        let w = Window::compose(&leg(1, 1), &leg(1, 1)).unwrap();
        assert_eq!((w.guard[0], w.raise[0]), (2, Some(2)));
    }

    #[test]
    fn guard_after_blockwise_becomes_charge_guard() {
        let b = Window::blockwise(1);
        let w = Window::compose(&leg(1, 1), &b).unwrap();
        assert_eq!(w.charge_guard, Some(1));
        assert!(w.contains(5, &[4], 4));
        assert!(!w.contains(5, &[5], 5));
    }
}
