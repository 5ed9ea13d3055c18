//! Dense exact matrices and exact null-space computation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("operand shapes differ".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Inverse by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a.get(col, col).inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, f: &Scalar) {
        for c in 0..self.cols {
            self.data[i * self.cols + c] *= f;
        }
    }

    /// row_i -= f * row_j
    fn axpy_row(&mut self, i: usize, j: usize, f: &Scalar) {
        for c in 0..self.cols {
            let t = f * self.get(j, c);
            self.data[i * self.cols + c] -= &t;
        }
    }

    /// Smallest k with M^k = 0, if it exists within `rows` steps.
    pub fn nilpotency_index(&self) -> Option<usize> {
        if !self.is_square() {
            return None;
        }
        let mut p = Matrix::identity(self.rows);
        for k in 0..=self.rows {
            if p.is_zero() {
                return Some(k);
            }
            p = p.mul(self).ok()?;
        }
        None
    }

    /// First entry (row, col) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Streaming fraction-free row echelon form for homogeneous linear systems.
///
/// Each incoming rational row is cleared of denominators and reduced against the
/// stored pivot rows with integer cross-multiplication; every stored row is kept
/// primitive (content divided out), so entries stay small.
#[derive(Clone, Debug)]
pub struct NullspaceSolver {
    unknowns: usize,
    // Pivot rows keyed by pivot column, stored as primitive integer vectors.
    pivots: Vec<Option<Vec<BigInt>>>,
    rank: usize,
}

impl NullspaceSolver {
    pub fn new(unknowns: usize) -> Self {
        NullspaceSolver { unknowns, pivots: vec![None; unknowns], rank: 0 }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_equation(&mut self, row: &[Scalar]) -> Result<()> {
        if row.len() != self.unknowns {
            return Err(Error::Shape(format!(
                "equation has {} coefficients, expected {}",
                row.len(),
                self.unknowns
            )));
        }
        let mut v = clear_denominators(row);
        loop {
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
                return Ok(());
            };
            match &self.pivots[lead] {
                Some(p) => {
                    // v <- p[lead] * v - v[lead] * p, then make primitive.
                    let a = p[lead].clone();
                    let b = v[lead].clone();
                    let g = a.gcd(&b);
                    let (a, b) = (&a / &g, &b / &g);
                    for (x, y) in v.iter_mut().zip(p.iter()) {
                        *x = &a * &*x - &b * y;
                    }
                    make_primitive(&mut v);
                }
                None => {
                    if v[lead].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.pivots[lead] = Some(v);
                    self.rank += 1;
                    return Ok(());
                }
            }
        }
    }

    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank
    }

    /// A basis of the solution space; the basis vector for free column `f` has a one at `f`.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.unknowns).filter(|&c| self.pivots[c].is_none()).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(); self.unknowns];
                x[f] = Scalar::one();
                for c in (0..self.unknowns).rev() {
                    let Some(p) = &self.pivots[c] else { continue };
                    let mut acc = Scalar::zero();
                    for k in c + 1..self.unknowns {
                        if !p[k].is_zero() && !x[k].is_zero() {
                            acc += &(Scalar::from_big(p[k].clone().into()) * &x[k]);
                        }
                    }
                    let piv = Scalar::from_big(p[c].clone().into());
                    x[c] = -(acc / piv);
                }
                x
            })
            .collect()
    }
}

fn clear_denominators(row: &[Scalar]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut v: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut v);
    v
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Basis of the null space of a list of equations, one row per equation.
pub fn nullspace(rows: &[Vec<Scalar>], unknowns: usize) -> Result<Vec<Vec<Scalar>>> {
    let mut s = NullspaceSolver::new(unknowns);
    for r in rows {
        s.add_equation(r)?;
    }
    Ok(s.basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![s(1, 2), s(3, 1)], vec![s(-2, 3), s(5, 7)]]).unwrap();
        let i = m.inverse().unwrap();
        assert_eq!(m.mul(&i).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn singular_detected() {
        let m = Matrix::from_rows(vec![vec![s(1, 1), s(2, 1)], vec![s(2, 1), s(4, 1)]]).unwrap();
        assert!(m.inverse().is_err());
    }

    #[test]
    fn nullspace_of_rank_one_system() {
        let rows = vec![vec![s(1, 2), s(1, 3), s(-1, 1)], vec![s(1, 1), s(2, 3), s(-2, 1)]];
        let b = nullspace(&rows, 3).unwrap();
        assert_eq!(b.len(), 2);
        for v in &b {
            for r in &rows {
                let dot: Scalar = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn nilpotency() {
        let mut m = Matrix::zeros(3, 3);
        m.set(0, 1, s(1, 1));
        m.set(1, 2, s(2, 1));
        assert_eq!(m.nilpotency_index(), Some(3));
        assert_eq!(Matrix::identity(2).nilpotency_index(), None);
    }
}
