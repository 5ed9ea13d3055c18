//! Representation tables of the Borel subalgebras on Fock and two-dimensional carriers.

mod checks;
mod coaction;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactq::{ParamPoint, Scalar};
use crate::fock::{diag_fn, dump, make_generator, two_leg, FockOp, FockSpace, Generator};

pub use checks::{check_serre, general_grading_identity, weight_check, RelationFailure, RelationReport};
pub use coaction::coaction;

/// Chevalley generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E0,
    E1,
    F0,
    F1,
    K0,
    K1,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::E0, Gen::E1, Gen::F0, Gen::F1, Gen::K0, Gen::K1];

    pub fn index(self) -> usize {
        match self {
            Gen::E0 | Gen::F0 | Gen::K0 => 0,
            Gen::E1 | Gen::F1 | Gen::K1 => 1,
        }
    }

    pub fn e(i: usize) -> Gen {
        if i == 0 { Gen::E0 } else { Gen::E1 }
    }

    pub fn f(i: usize) -> Gen {
        if i == 0 { Gen::F0 } else { Gen::F1 }
    }

    pub fn k(i: usize) -> Gen {
        if i == 0 { Gen::K0 } else { Gen::K1 }
    }

    pub fn is_e(self) -> bool {
        matches!(self, Gen::E0 | Gen::E1)
    }

    pub fn is_f(self) -> bool {
        matches!(self, Gen::F0 | Gen::F1)
    }

    pub fn is_k(self) -> bool {
        matches!(self, Gen::K0 | Gen::K1)
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::E0 => "e0",
            Gen::E1 => "e1",
            Gen::F0 => "f0",
            Gen::F1 => "f1",
            Gen::K0 => "k0",
            Gen::K1 => "k1",
        }
    }
}

/// Which generators a table carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
    Full,
}

impl Side {
    pub fn has(self, g: Gen) -> bool {
        match self {
            Side::Plus => !g.is_f(),
            Side::Minus => !g.is_e(),
            Side::Full => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepName {
    Upsilon,
    Phi,
    Rho,
    RhoBar,
    RhoMinus,
    RhoBarMinus,
    PhiMinus,
    Pi,
    RhoR,
    Trivial,
}

impl RepName {
    /// The nine named representations (the trivial one is a test fixture).
    pub const NAMED: [RepName; 9] = [
        RepName::Upsilon,
        RepName::Phi,
        RepName::Rho,
        RepName::RhoBar,
        RepName::RhoMinus,
        RepName::RhoBarMinus,
        RepName::PhiMinus,
        RepName::Pi,
        RepName::RhoR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RepName::Upsilon => "upsilon",
            RepName::Phi => "phi",
            RepName::Rho => "rho",
            RepName::RhoBar => "rhobar",
            RepName::RhoMinus => "rho_minus",
            RepName::RhoBarMinus => "rhobar_minus",
            RepName::PhiMinus => "phi_minus",
            RepName::Pi => "Pi",
            RepName::RhoR => "rho_r",
            RepName::Trivial => "trivial",
        }
    }

    pub fn side(self) -> Side {
        match self {
            RepName::Upsilon | RepName::Pi | RepName::Trivial => Side::Full,
            RepName::Phi | RepName::Rho | RepName::RhoBar | RepName::RhoR => Side::Plus,
            RepName::RhoMinus | RepName::RhoBarMinus | RepName::PhiMinus => Side::Minus,
        }
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RepName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RepName::NAMED
            .iter()
            .chain([RepName::Trivial].iter())
            .find(|r| r.as_str() == s)
            .copied()
            .ok_or_else(|| Error::Unknown(format!("representation {s:?}")))
    }
}

/// A generator table on a carrier space.
#[derive(Clone, Debug)]
pub struct Rep {
    pub name: RepName,
    pub side: Side,
    pub carrier: FockSpace,
    pub q: Scalar,
    table: BTreeMap<Gen, FockOp>,
    /// Accumulated grading shift, for display only.
    pub shift: Scalar,
}

impl Rep {
    pub fn get(&self, g: Gen) -> Result<&FockOp> {
        self.table
            .get(&g)
            .ok_or_else(|| Error::Shape(format!("{} has no image for {}", self.name, g.name())))
    }

    pub fn has(&self, g: Gen) -> bool {
        self.table.contains_key(&g)
    }

    /// Image of `k_i^{-1}`; the `k` images are diagonal.
    pub fn k_inv(&self, i: usize) -> Result<FockOp> {
        self.get(Gen::k(i))?.inverse_blocks_diag()
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Gen, &FockOp)> {
        self.table.iter()
    }

    pub fn from_table(name: RepName, side: Side, carrier: FockSpace, q: Scalar, table: BTreeMap<Gen, FockOp>) -> Result<Self> {
        for g in Gen::ALL {
            if side.has(g) != table.contains_key(&g) {
                return Err(Error::Shape(format!("table for {name} side {side:?} mismatched at {}", g.name())));
            }
        }
        Ok(Rep { name, side, carrier, q, table, shift: Scalar::one() })
    }

    /// Replace one image (used to build corrupted tables in tests).
    pub fn with_image(&self, g: Gen, op: FockOp) -> Result<Rep> {
        if !self.table.contains_key(&g) || op.domain() != &self.carrier {
            return Err(Error::Shape("replacement image".into()));
        }
        let mut r = self.clone();
        r.table.insert(g, op);
        Ok(r)
    }

    /// Serialized table: name, parameters, and one operator dump per generator.
    pub fn to_text(&self, params: &ParamPoint) -> Result<String> {
        let mut out = format!("rep {}\n", self.name);
        for (k, v) in params.to_map() {
            out.push_str(&format!("param {k} {v}\n"));
        }
        for (g, op) in &self.table {
            out.push_str(&format!("generator {}\n{}", g.name(), dump(op)?));
        }
        Ok(out)
    }
}

impl FockOp {
    /// Inverse of a diagonal operator.
    pub(crate) fn inverse_blocks_diag(&self) -> Result<FockOp> {
        let space = self.domain().clone();
        let mut vals = Vec::with_capacity(space.dim());
        for j in 0..space.dim() {
            let col = self.column(j);
            if col.len() != 1 || col[0].0 != j {
                return Err(Error::Shape("expected an invertible diagonal operator".into()));
            }
            vals.push(col[0].1.inv()?);
        }
        FockOp::diagonal(&space, |d| Ok(vals[space.index(d).expect("in range")].clone()))
            .map(|op| op.with_window(self.window().clone()).expect("same legs"))
    }
}

fn two(a: i64, b: i64, c: i64, d: i64) -> [[Scalar; 2]; 2] {
    [[Scalar::from_int(a), Scalar::from_int(b)], [Scalar::from_int(c), Scalar::from_int(d)]]
}

/// Exact generator table of a named representation.
///
/// Fock carriers are `W` with truncation `n`; `Pi` lives on `C^2`; `trivial` on a point.
pub fn build_rep(name: RepName, params: &ParamPoint, n: usize) -> Result<Rep> {
    let q = params.q.clone();
    let one = Scalar::one();
    let q2 = &q * &q;
    let c = (&one - &q2).inv()?; // 1/(1-q^2)
    let u2 = &params.u * &params.u;
    let side = name.side();
    let mut t = BTreeMap::new();
    if name == RepName::Pi {
        let s = FockSpace::two(n);
        let lower = two_leg(&s, 0, two(0, 0, 1, 0))?; // v+ -> v-
        let upper = two_leg(&s, 0, two(0, 1, 0, 0))?; // v- -> v+
        let qi = q.inv()?;
        t.insert(Gen::E0, lower.clone());
        t.insert(Gen::F1, lower);
        t.insert(Gen::E1, upper.clone());
        t.insert(Gen::F0, upper);
        t.insert(Gen::K0, two_leg(&s, 0, [[qi.clone(), Scalar::zero()], [Scalar::zero(), q.clone()]])?);
        t.insert(Gen::K1, two_leg(&s, 0, [[q.clone(), Scalar::zero()], [Scalar::zero(), qi]])?);
        return Rep::from_table(name, side, s, q, t);
    }
    if name == RepName::Trivial {
        let s = FockSpace::trivial(n);
        for g in Gen::ALL {
            let op = if g.is_k() { FockOp::identity(&s) } else { FockOp::zero(&s) };
            t.insert(g, op);
        }
        return Rep::from_table(name, side, s, q, t);
    }
    let s = FockSpace::fock(n);
    let a = make_generator(&Generator::A, 0, &s, &q)?;
    let ad = make_generator(&Generator::Adag, 0, &s, &q)?;
    let abd = make_generator(&Generator::AbarDag, 0, &s, &q)?;
    let zero = FockOp::zero(&s);
    // q^{c0 + 2 s j} * pre
    let qdiag = |pre: &Scalar, c0: i64, sgn: i64| {
        let pre = pre.clone();
        let q = q.clone();
        diag_fn(&s, 0, move |j| Ok(&pre * &q.pow(c0 + 2 * sgn * j)?))
    };
    let c_q2 = &c * &q2;
    match name {
        RepName::Upsilon => {
            let u_inv2 = u2.inv()?;
            let g = {
                let (u2, ui2, q) = (u2.clone(), u_inv2.clone(), q.clone());
                diag_fn(&s, 0, move |j| Ok(&ui2 - &(&u2 * &q.pow(-2 * j)?)))?
            };
            let e0 = ad.scale(&c);
            let e1 = a.compose(&g)?.scale(&c_q2);
            t.insert(Gen::E0, e0.clone());
            t.insert(Gen::F1, e0);
            t.insert(Gen::E1, e1.clone());
            t.insert(Gen::F0, e1);
            t.insert(Gen::K0, qdiag(&u_inv2, 1, 1)?);
            t.insert(Gen::K1, qdiag(&u2, -1, -1)?);
        }
        RepName::Phi | RepName::PhiMinus => {
            let low = a.scale(&(&c * &q));
            if name == RepName::Phi {
                t.insert(Gen::E0, zero);
                t.insert(Gen::E1, low);
            } else {
                t.insert(Gen::F0, low);
                t.insert(Gen::F1, zero);
            }
            t.insert(Gen::K0, qdiag(&u2, 1, 1)?);
            t.insert(Gen::K1, qdiag(&u2.inv()?, -1, -1)?);
        }
        RepName::Rho | RepName::RhoR => {
            t.insert(Gen::E0, ad.scale(&c));
            t.insert(Gen::E1, a.scale(&c_q2));
            let r = if name == RepName::RhoR { params.r.clone() } else { one.clone() };
            t.insert(Gen::K0, qdiag(&r, 0, 1)?);
            t.insert(Gen::K1, qdiag(&r.inv()?, 0, -1)?);
        }
        RepName::RhoMinus => {
            t.insert(Gen::F0, a.scale(&c_q2));
            t.insert(Gen::F1, ad.scale(&c));
            t.insert(Gen::K0, qdiag(&one, 0, 1)?);
            t.insert(Gen::K1, qdiag(&one, 0, -1)?);
        }
        RepName::RhoBar => {
            t.insert(Gen::E0, abd.scale(&c_q2));
            t.insert(Gen::E1, a.scale(&c));
            t.insert(Gen::K0, qdiag(&one, 2, 1)?);
            t.insert(Gen::K1, qdiag(&one, -2, -1)?);
        }
        RepName::RhoBarMinus => {
            t.insert(Gen::F0, a.scale(&c));
            t.insert(Gen::F1, abd.scale(&c_q2));
            t.insert(Gen::K0, qdiag(&one, 2, 1)?);
            t.insert(Gen::K1, qdiag(&one, -2, -1)?);
        }
        RepName::Pi | RepName::Trivial => unreachable!(),
    }
    Rep::from_table(name, side, s, q, t)
}

/// `pi_z`: e-images scaled by `z`, f-images by `1/z`.
pub fn grading_shift(rep: &Rep, z: &Scalar) -> Result<Rep> {
    let zi = z.inv().map_err(|_| Error::Inadmissible("zero grading parameter".into()))?;
    let mut out = rep.clone();
    for (g, op) in out.table.iter_mut() {
        if g.is_e() {
            *op = op.scale(z);
        } else if g.is_f() {
            *op = op.scale(&zi);
        }
    }
    out.shift = &rep.shift * z;
    Ok(out)
}

/// Table-level twist by the generator exchange `e_i -> f_{1-i}`, `f_i -> e_{1-i}`,
/// `k_i -> k_{1-i}^{-1}`: the twisted table sends `x` to `rep(twist(x))`.
pub fn psi_twist(rep: &Rep, name: RepName) -> Result<Rep> {
    let side = match rep.side {
        Side::Plus => Side::Minus,
        Side::Minus => Side::Plus,
        Side::Full => Side::Full,
    };
    let mut t = BTreeMap::new();
    for g in Gen::ALL {
        if !side.has(g) {
            continue;
        }
        let j = 1 - g.index();
        let img = if g.is_e() {
            rep.get(Gen::f(j))?.clone()
        } else if g.is_f() {
            rep.get(Gen::e(j))?.clone()
        } else {
            rep.k_inv(j)?
        };
        t.insert(g, img);
    }
    Rep::from_table(name, side, rep.carrier.clone(), rep.q.clone(), t)
}

/// Two tables are equal generator by generator.
pub fn tables_equal(a: &Rep, b: &Rep) -> Result<Option<String>> {
    for g in Gen::ALL {
        match (a.table.get(&g), b.table.get(&g)) {
            (None, None) => {}
            (Some(x), Some(y)) => {
                if x.domain() != y.domain() {
                    return Ok(Some(format!("{}: carriers differ", g.name())));
                }
                for j in 0..x.domain().dim() {
                    if x.column(j) != y.column(j) {
                        return Ok(Some(format!("{} differs on {}", g.name(), x.domain().label(j))));
                    }
                }
            }
            _ => return Ok(Some(format!("{} present in only one table", g.name()))),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{sample_params, Admissibility};

    fn params() -> ParamPoint {
        sample_params(11, &Admissibility::default()).unwrap()
    }

    #[test]
    fn table_entries() {
        let p = params();
        let q = &p.q;
        let q2 = q * q;
        let rho = build_rep(RepName::Rho, &p, 5).unwrap();
        let e1 = rho.get(Gen::E1).unwrap();
        assert_eq!(e1.apply_basis(1), &[(0, &q2 / &(Scalar::one() - &q2))]);
        let ups = build_rep(RepName::Upsilon, &p, 5).unwrap();
        let k1 = ups.get(Gen::K1).unwrap();
        for j in 0..=5i64 {
            let want = &p.u * &p.u * q.pow(-1 - 2 * j).unwrap();
            assert_eq!(k1.apply_basis(j as usize), &[(j as usize, want)]);
        }
        let phi = build_rep(RepName::Phi, &p, 5).unwrap();
        assert_eq!(phi.get(Gen::E0).unwrap().nnz(), 0);
    }

    #[test]
    fn grading_shift_composes() {
        let p = params();
        let rho = build_rep(RepName::Rho, &p, 4).unwrap();
        let (z, w) = (Scalar::ratio(5, 7), Scalar::ratio(-11, 3));
        let a = grading_shift(&grading_shift(&rho, &z).unwrap(), &w).unwrap();
        let b = grading_shift(&rho, &(&z * &w)).unwrap();
        assert_eq!(tables_equal(&a, &b).unwrap(), None);
        let same = grading_shift(&rho, &Scalar::one()).unwrap();
        assert_eq!(tables_equal(&same, &rho).unwrap(), None);
        let phim = build_rep(RepName::PhiMinus, &p, 4).unwrap();
        let sh = grading_shift(&phim, &z).unwrap();
        assert_eq!(sh.get(Gen::F0).unwrap(), &phim.get(Gen::F0).unwrap().scale(&z.inv().unwrap()));
    }

    #[test]
    fn names_parse() {
        for r in RepName::NAMED {
            assert_eq!(r.as_str().parse::<RepName>().unwrap(), r);
        }
        assert!("sigma".parse::<RepName>().is_err());
    }
}
