use std::fmt;

use crate::error::{Error, Result};

/// One tensor factor: a truncated Fock space `w_0..w_N` or a two-dimensional space `v+, v-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leg {
    Fock,
    Two,
}

/// Ordered tensor product of legs sharing one truncation `n`.
///
/// Basis vectors are digit tuples, leg 0 most significant. A Fock digit is the
/// occupation `j`, a two-dimensional digit is `0` for `v+` and `1` for `v-`.
/// The charge of a basis vector is the sum of its digits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FockSpace {
    n: usize,
    legs: Vec<Leg>,
}

impl FockSpace {
    pub fn new(n: usize, legs: Vec<Leg>) -> Self {
        FockSpace { n, legs }
    }

    /// `W`
    pub fn fock(n: usize) -> Self {
        FockSpace::new(n, vec![Leg::Fock])
    }

    /// `W^{⊗k}`
    pub fn fock_legs(n: usize, k: usize) -> Self {
        FockSpace::new(n, vec![Leg::Fock; k])
    }

    /// `C^2`
    pub fn two(n: usize) -> Self {
        FockSpace::new(n, vec![Leg::Two])
    }

    /// One-dimensional space with no legs.
    pub fn trivial(n: usize) -> Self {
        FockSpace::new(n, vec![])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    /// Positions of the Fock legs in leg order.
    pub fn fock_positions(&self) -> Vec<usize> {
        (0..self.legs.len()).filter(|&i| self.legs[i] == Leg::Fock).collect()
    }

    pub fn num_fock(&self) -> usize {
        self.legs.iter().filter(|l| **l == Leg::Fock).count()
    }

    pub fn with_truncation(&self, n: usize) -> Self {
        FockSpace { n, legs: self.legs.clone() }
    }

    pub fn tensor(&self, other: &FockSpace) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape(format!("truncations differ: {} vs {}", self.n, other.n)));
        }
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        Ok(FockSpace { n: self.n, legs })
    }

    pub fn leg_dim(&self, i: usize) -> usize {
        match self.legs[i] {
            Leg::Fock => self.n + 1,
            Leg::Two => 2,
        }
    }

    pub fn dim(&self) -> usize {
        (0..self.legs.len()).map(|i| self.leg_dim(i)).product()
    }

    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.legs.len()];
        for i in (0..self.legs.len()).rev() {
            let b = self.leg_dim(i);
            d[i] = idx % b;
            idx /= b;
        }
        d
    }

    /// Index of a digit tuple, or `None` if some digit is out of range.
    pub fn index(&self, digits: &[usize]) -> Option<usize> {
        if digits.len() != self.legs.len() {
            return None;
        }
        let mut idx = 0;
        for (i, &d) in digits.iter().enumerate() {
            let b = self.leg_dim(i);
            if d >= b {
                return None;
            }
            idx = idx * b + d;
        }
        Some(idx)
    }

    pub fn charge(&self, idx: usize) -> usize {
        self.digits(idx).iter().sum()
    }

    /// Occupation numbers of the Fock legs only.
    pub fn fock_digits(&self, idx: usize) -> Vec<usize> {
        let d = self.digits(idx);
        self.fock_positions().into_iter().map(|i| d[i]).collect()
    }

    /// Largest charge carried by any basis vector.
    pub fn max_charge(&self) -> usize {
        (0..self.legs.len()).map(|i| self.leg_dim(i) - 1).sum()
    }

    /// Whether every digit tuple of charge `m` fits in the truncation.
    pub fn block_complete(&self, m: usize) -> bool {
        let twos = self.legs.len() - self.num_fock();
        if self.num_fock() == 0 {
            m <= twos
        } else {
            m <= self.n
        }
    }

    /// Basis indices of charge `m`, in increasing order.
    pub fn block_basis(&self, m: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.charge(i) == m).collect()
    }

    /// The same legs in a new order: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_perm(perm, self.legs.len())?;
        Ok(FockSpace { n: self.n, legs: perm.iter().map(|&p| self.legs[p]).collect() })
    }

    /// Human-readable label of a basis vector, e.g. `w1⊗w0⊗v-`.
    pub fn label(&self, idx: usize) -> String {
        if self.legs.is_empty() {
            return "1".into();
        }
        let d = self.digits(idx);
        let parts: Vec<String> = self
            .legs
            .iter()
            .zip(&d)
            .map(|(l, &x)| match l {
                Leg::Fock => format!("w{x}"),
                Leg::Two => if x == 0 { "v+".into() } else { "v-".into() },
            })
            .collect();
        parts.join("⊗")
    }
}

pub(crate) fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Shape(format!("permutation of length {} for {n} legs", perm.len())));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Shape(format!("invalid leg permutation {perm:?}")));
        }
        seen[p] = true;
    }
    Ok(())
}

impl fmt::Debug for FockSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let legs: Vec<&str> = self.legs.iter().map(|l| if *l == Leg::Fock { "W" } else { "C2" }).collect();
        write!(f, "[{}; N={}]", legs.join("⊗"), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_round_trip() {
        let s = FockSpace::new(3, vec![Leg::Fock, Leg::Two, Leg::Fock]);
        assert_eq!(s.dim(), 32);
        for i in 0..s.dim() {
            assert_eq!(s.index(&s.digits(i)), Some(i));
        }
        assert_eq!(s.label(s.index(&[2, 1, 0]).unwrap()), "w2⊗v-⊗w0");
    }

    #[test]
    fn blocks() {
        let s = FockSpace::fock_legs(4, 2);
        assert_eq!(s.block_basis(1).len(), 2);
        assert!(s.block_complete(4));
        assert!(!s.block_complete(5));
    }
}
