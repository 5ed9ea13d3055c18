//! q-Pochhammer symbols and q-exponentials of nilpotent matrices.

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::linalg::Matrix;

/// `(x; p)_n` for any integer `n`.
///
/// For `n >= 0` this is `prod_{m=0}^{n-1} (1 - x p^m)`; for `n < 0` it is
/// `prod_{m=n}^{-1} (1 - x p^m)^{-1}`, which fails if one of those factors vanishes.
pub fn q_pochhammer(x: &Scalar, p: &Scalar, n: i64) -> Result<Scalar> {
    let one = Scalar::one();
    if n >= 0 {
        let mut acc = Scalar::one();
        let mut xp = x.clone();
        for _ in 0..n {
            acc *= &(&one - &xp);
            xp *= p;
        }
        return Ok(acc);
    }
    let pinv = p.inv()?;
    let mut acc = Scalar::one();
    let mut xp = x * &pinv;
    for m in (n..0).rev() {
        let f = &one - &xp;
        if f.is_zero() {
            return Err(Error::VanishingFactor { what: format!("({x}; {p})_{n}"), index: m });
        }
        acc *= &f;
        xp *= &pinv;
    }
    acc.inv()
}

/// Inverse of `(x; p)_n`, reporting which factor vanished when it does not exist.
pub fn q_pochhammer_inv(x: &Scalar, p: &Scalar, n: i64) -> Result<Scalar> {
    if n < 0 {
        // (x;p)_n^{-1} = prod_{m=n}^{-1}(1 - x p^m), never singular.
        let mut acc = Scalar::one();
        for m in n..0 {
            acc *= &(Scalar::one() - x * &p.pow(m)?);
        }
        return Ok(acc);
    }
    let mut acc = Scalar::one();
    let mut xp = x.clone();
    for m in 0..n {
        let f = Scalar::one() - &xp;
        if f.is_zero() {
            return Err(Error::VanishingFactor { what: format!("1/({x}; {p})_{n}"), index: m });
        }
        acc *= &f;
        xp *= p;
    }
    acc.inv()
}

/// Coefficients `1/(p;p)_k` for `k = 0..=kmax`.
fn exp_coefficients(p: &Scalar, kmax: usize) -> Result<Vec<Scalar>> {
    let mut out = Vec::with_capacity(kmax + 1);
    let mut den = Scalar::one();
    let mut pk = Scalar::one();
    out.push(Scalar::one());
    for k in 1..=kmax {
        pk *= p;
        let f = Scalar::one() - &pk;
        if f.is_zero() {
            return Err(Error::VanishingFactor { what: format!("({p}; {p})_{k}"), index: k as i64 - 1 });
        }
        den *= &f;
        out.push(den.inv()?);
    }
    Ok(out)
}

/// `e_p(x) = sum_k x^k / (p;p)_k` for a nilpotent matrix `x`.
pub fn qexp_nilpotent(x: &Matrix, p: &Scalar) -> Result<Matrix> {
    qexp_series(x, p, false)
}

/// `E_p(x) = sum_k p^{k(k-1)/2} x^k / (p;p)_k` for a nilpotent matrix `x`.
pub fn qexp_big_nilpotent(x: &Matrix, p: &Scalar) -> Result<Matrix> {
    qexp_series(x, p, true)
}

fn qexp_series(x: &Matrix, p: &Scalar, big: bool) -> Result<Matrix> {
    if !x.is_square() {
        return Err(Error::Shape("exponential of a non-square matrix".into()));
    }
    let n = x.rows();
    let coeffs = exp_coefficients(p, n)?;
    let mut acc = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        power = power.mul(x)?;
        if power.is_zero() {
            return Ok(acc);
        }
        let c = if big { c * &p.pow((k * (k - 1) / 2) as i64)? } else { c.clone() };
        acc = acc.add(&power.scale(&c))?;
    }
    if power.mul(x)?.is_zero() {
        Ok(acc)
    } else {
        Err(Error::NotNilpotent(format!("{n}x{n} argument has a nonzero power of order {}", n + 1)))
    }
}
