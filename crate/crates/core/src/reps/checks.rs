//! Exact self-checks of representation tables.

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::fock::{Agreement, FockOp, Witness};
use crate::reps::{grading_shift, Gen, Rep, Side};

#[derive(Clone, Debug, PartialEq)]
pub struct RelationFailure {
    pub relation: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationReport {
    pub checked: Vec<String>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: String, lhs: &FockOp, rhs: &FockOp) -> Result<()> {
        match lhs.agree_on_window(rhs)? {
            Agreement::Equal { .. } => {}
            Agreement::Differ(witness) => self.failures.push(RelationFailure { relation: name.clone(), witness }),
        }
        self.checked.push(name);
        Ok(())
    }
}

/// `[x, [x, [x, y]_{q^2}]_1]_{q^{-2}}`
fn serre(x: &FockOp, y: &FockOp, q: &Scalar) -> Result<FockOp> {
    let q2 = q * q;
    let inner = FockOp::qcommutator(x, y, &q2)?;
    let mid = FockOp::commutator(x, &inner)?;
    FockOp::qcommutator(x, &mid, &q2.inv()?)
}

/// Cubic q-Serre relations, Cartan conjugations, and for full tables the `[e_i, f_j]` relations.
pub fn check_serre(rep: &Rep) -> Result<RelationReport> {
    let q = &rep.q;
    let mut rep_out = RelationReport::default();
    let zero = FockOp::zero(&rep.carrier);
    let pow = |e: i64| q.pow(e);
    for i in 0..2 {
        let ki = rep.get(Gen::k(i))?;
        rep.k_inv(i)?; // invertibility
        for j in 0..2 {
            let a = if i == j { 2 } else { -2 };
            if rep.side != Side::Minus {
                let ej = rep.get(Gen::e(j))?;
                rep_out.record(
                    format!("k{i} e{j} = q^{a} e{j} k{i}"),
                    &ki.compose(ej)?,
                    &ej.compose(ki)?.scale(&pow(a)?),
                )?;
            }
            if rep.side != Side::Plus {
                let fj = rep.get(Gen::f(j))?;
                rep_out.record(
                    format!("k{i} f{j} = q^{} f{j} k{i}", -a),
                    &ki.compose(fj)?,
                    &fj.compose(ki)?.scale(&pow(-a)?),
                )?;
            }
        }
    }
    let (k0, k1) = (rep.get(Gen::K0)?, rep.get(Gen::K1)?);
    rep_out.record("k0 k1 = k1 k0".into(), &k0.compose(k1)?, &k1.compose(k0)?)?;
    for (i, j) in [(0, 1), (1, 0)] {
        if rep.side != Side::Minus {
            let s = serre(rep.get(Gen::e(i))?, rep.get(Gen::e(j))?, q)?;
            rep_out.record(format!("q-Serre e{i} e{j}"), &s, &zero)?;
        }
        if rep.side != Side::Plus {
            let s = serre(rep.get(Gen::f(i))?, rep.get(Gen::f(j))?, q)?;
            rep_out.record(format!("q-Serre f{i} f{j}"), &s, &zero)?;
        }
    }
    if rep.side == Side::Full {
        let den = (q - &q.inv()?).inv()?;
        for i in 0..2 {
            for j in 0..2 {
                let lhs = FockOp::commutator(rep.get(Gen::e(i))?, rep.get(Gen::f(j))?)?;
                let rhs = if i == j {
                    rep.get(Gen::k(i))?.sub(&rep.k_inv(i)?)?.scale(&den)
                } else {
                    zero.clone()
                };
                rep_out.record(format!("[e{i}, f{j}]"), &lhs, &rhs)?;
            }
        }
    }
    Ok(rep_out)
}

/// Level-zero weight structure: `k0 k1 = 1`, and `k1` acts on charge `m` by `q^{-2m}` times its vacuum value.
pub fn weight_check(rep: &Rep) -> Result<RelationReport> {
    let mut out = RelationReport::default();
    let (k0, k1) = (rep.get(Gen::K0)?, rep.get(Gen::K1)?);
    out.record("k0 k1 = 1".into(), &k0.compose(k1)?, &FockOp::identity(&rep.carrier))?;
    let s = &rep.carrier;
    let gamma0 = k1.entry(0, 0);
    let q = rep.q.clone();
    let graded = FockOp::diagonal(s, |d| Ok(&gamma0 * &q.pow(-2 * d.iter().sum::<usize>() as i64)?))?;
    out.record("k1 weights follow the charge".into(), k1, &graded)?;
    Ok(out)
}

/// Checks `pi^{s0,s1}_z = Ad(Z^{(s0-s1)D}) ∘ pi_{Z^{s0+s1}}` on every generator, `z = Z^2`,
/// where `D` is the charge of a basis vector.
pub fn general_grading_identity(rep: &Rep, s0: u32, s1: u32, zz: &Scalar) -> Result<RelationReport> {
    if s0 + s1 == 0 {
        return Err(Error::Config("s0 + s1 must be positive".into()));
    }
    if zz.is_zero() {
        return Err(Error::Inadmissible("Z = 0".into()));
    }
    let weights = weight_check(rep)?;
    if !weights.passed() {
        return Err(Error::Config(format!("{} is not graded by the charge", rep.name)));
    }
    let z = zz * zz;
    let c = s0 as i64 - s1 as i64;
    let s = rep.carrier.clone();
    let conj = FockOp::diagonal(&s, |d| zz.pow(c * d.iter().sum::<usize>() as i64))?;
    let conj_inv = FockOp::diagonal(&s, |d| zz.pow(-c * d.iter().sum::<usize>() as i64))?;
    let shifted = grading_shift(rep, &zz.pow((s0 + s1) as i64)?)?;
    let mut out = RelationReport::default();
    for (g, op) in rep.generators() {
        let si = if g.index() == 0 { s0 } else { s1 } as i64;
        let lhs = if g.is_e() {
            op.scale(&z.pow(si)?)
        } else if g.is_f() {
            op.scale(&z.pow(-si)?)
        } else {
            op.clone()
        };
        let rhs = FockOp::product(&[&conj, shifted.get(*g)?, &conj_inv])?;
        out.record(format!("graded {} with (s0, s1) = ({s0}, {s1})", g.name()), &lhs, &rhs)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};
    use crate::reps::{build_rep, psi_twist, tables_equal, RepName};

    #[test]
    fn all_named_tables_satisfy_relations() {
        let p = sample_params(21, &Admissibility::default()).unwrap();
        for name in RepName::NAMED {
            let rep = build_rep(name, &p, 7).unwrap();
            let r = check_serre(&rep).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures);
            let w = weight_check(&rep).unwrap();
            assert!(w.passed(), "{name}: {:?}", w.failures);
        }
    }

    #[test]
    fn minus_tables_are_twists() {
        let p = sample_params(22, &Admissibility::default()).unwrap();
        for (plus, minus) in [
            (RepName::Rho, RepName::RhoMinus),
            (RepName::RhoBar, RepName::RhoBarMinus),
            (RepName::Phi, RepName::PhiMinus),
            (RepName::Pi, RepName::Pi),
            (RepName::Upsilon, RepName::Upsilon),
        ] {
            let t = psi_twist(&build_rep(plus, &p, 5).unwrap(), minus).unwrap();
            assert_eq!(tables_equal(&t, &build_rep(minus, &p, 5).unwrap()).unwrap(), None, "{plus}");
        }
    }

    #[test]
    fn grading_identity() {
        let p = sample_params(23, &Admissibility::default()).unwrap();
        let zz = p.spec("Z").unwrap().clone();
        for name in RepName::NAMED {
            let rep = build_rep(name, &p, 6).unwrap();
            for (s0, s1) in [(0, 1), (1, 0), (1, 1), (2, 1)] {
                let r = general_grading_identity(&rep, s0, s1, &zz).unwrap();
                assert!(r.passed(), "{name} {s0} {s1}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn uniform_rescaling_of_e0_is_still_a_representation() {
        let p = sample_params(24, &Admissibility::default()).unwrap();
        let rho = build_rep(RepName::Rho, &p, 6).unwrap();
        let e0 = rho.get(Gen::E0).unwrap().scale(&Scalar::from_int(2));
        let scaled = rho.with_image(Gen::E0, e0).unwrap();
        assert!(check_serre(&scaled).unwrap().passed());
    }

    #[test]
    fn single_entry_corruption_is_detected() {
        let p = sample_params(25, &Admissibility::default()).unwrap();
        let rho = build_rep(RepName::Rho, &p, 6).unwrap();
        let e0 = rho.get(Gen::E0).unwrap();
        let s = rho.carrier.clone();
        let bump = FockOp::diagonal(&s, |d| Ok(if d[0] == 1 { Scalar::from_int(2) } else { Scalar::one() })).unwrap();
        let corrupted = rho.with_image(Gen::E0, e0.compose(&bump).unwrap()).unwrap();
        assert!(!check_serre(&corrupted).unwrap().passed());
    }
}
