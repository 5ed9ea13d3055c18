use crate::error::{Error, Result};
use crate::fock::FockOp;
use crate::reps::{Gen, Rep};

/// `(A ⊗ B)(Δ(u))`, or `(A ⊗ B)(Δ^op(u))` when `opposite` is set, on `A.carrier ⊗ B.carrier`.
///
/// `Δ(e) = e⊗1 + k⊗e`, `Δ(f) = f⊗k^{-1} + 1⊗f`, `Δ(k) = k⊗k`; the opposite
/// coproduct swaps the tensor factors of each term.
pub fn coaction(a: &Rep, b: &Rep, u: Gen, opposite: bool) -> Result<FockOp> {
    if !a.has(u) || !b.has(u) {
        return Err(Error::Shape(format!("{} is not represented by both {} and {}", u.name(), a.name, b.name)));
    }
    let i = u.index();
    let ia = FockOp::identity(&a.carrier);
    let ib = FockOp::identity(&b.carrier);
    if u.is_k() {
        return a.get(u)?.tensor(b.get(u)?);
    }
    if u.is_e() {
        let (ea, eb) = (a.get(u)?, b.get(u)?);
        return if opposite {
            ia.tensor(eb)?.add(&ea.tensor(b.get(Gen::k(i))?)?)
        } else {
            ea.tensor(&ib)?.add(&a.get(Gen::k(i))?.tensor(eb)?)
        };
    }
    let (fa, fb) = (a.get(u)?, b.get(u)?);
    if opposite {
        a.k_inv(i)?.tensor(fb)?.add(&fa.tensor(&ib)?)
    } else {
        fa.tensor(&b.k_inv(i)?)?.add(&ia.tensor(fb)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility, Scalar};
    use crate::fock::{diag_fn, make_generator, FockSpace, Generator};
    use crate::reps::{build_rep, RepName};

    #[test]
    fn e1_on_rho_rhobar() {
        let p = sample_params(4, &Admissibility::default()).unwrap();
        let q = &p.q;
        let n = 4;
        let rho = build_rep(RepName::Rho, &p, n).unwrap();
        let rhob = build_rep(RepName::RhoBar, &p, n).unwrap();
        let got = coaction(&rho, &rhob, Gen::E1, false).unwrap();
        let s = FockSpace::fock_legs(n, 2);
        let c = (Scalar::one() - q * q).inv().unwrap();
        let a1 = make_generator(&Generator::A, 0, &s, q).unwrap();
        let a2 = make_generator(&Generator::A, 1, &s, q).unwrap();
        let k = diag_fn(&s, 0, |j| q.pow(-2 * j)).unwrap();
        let want = a1.scale(&(q * q * &c)).add(&k.compose(&a2).unwrap().scale(&c)).unwrap();
        assert!(got.agree_on_window(&want).unwrap().is_equal());

        let k1 = coaction(&rho, &rhob, Gen::K1, false).unwrap();
        let idx = s.index(&[2, 3]).unwrap();
        assert_eq!(k1.apply_basis(idx), &[(idx, q.pow(-4 - 8).unwrap())]);
    }

    #[test]
    fn trivial_is_one_by_one_identity() {
        let p = sample_params(4, &Admissibility::default()).unwrap();
        let t = build_rep(RepName::Trivial, &p, 3).unwrap();
        let k = coaction(&t, &t, Gen::K0, false).unwrap();
        assert_eq!(k.domain().dim(), 1);
        assert_eq!(k.apply_basis(0), &[(0, Scalar::one())]);
    }
}
