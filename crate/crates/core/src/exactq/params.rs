//! Parameter points and their deterministic, certified sampling.

use std::collections::{BTreeMap, HashSet};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactq::Scalar;

/// Names of the spectral values every sampled point carries.
///
/// `z` is the main spectral parameter, `y` the second one in reflection
/// equations, `z2` the auxiliary one in the defining equation of the
/// `rho`/`rhobar` R-operator, `Z` a square root used for grading identities,
/// `x` and `w` are free arguments for the q-series and oscillator identities.
pub const SPECTRAL_NAMES: [&str; 6] = ["z", "y", "z2", "Z", "x", "w"];

/// Names of the scalar (non-spectral) parameters.
pub const SCALAR_NAMES: [&str; 5] = ["q", "u", "xi", "xitilde", "r"];

/// One full assignment of the deformation, boundary and spectral parameters.
///
/// `u` stands for the square root of `q^mu`, so `q^mu = u^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, String>", into = "BTreeMap<String, String>")]
pub struct ParamPoint {
    pub q: Scalar,
    pub u: Scalar,
    pub xi: Scalar,
    pub xitilde: Scalar,
    pub r: Scalar,
    pub spectral: BTreeMap<String, Scalar>,
}

impl ParamPoint {
    pub fn spec(&self, name: &str) -> Result<&Scalar> {
        self.spectral.get(name).ok_or_else(|| Error::MissingParam(name.to_string()))
    }

    pub fn z(&self) -> &Scalar {
        &self.spectral["z"]
    }

    /// `p = q^2`.
    pub fn p(&self) -> Scalar {
        &self.q * &self.q
    }

    /// Flat key to value map, used for serialization.
    pub fn to_map(&self) -> BTreeMap<String, Scalar> {
        let mut m = self.spectral.clone();
        m.insert("q".into(), self.q.clone());
        m.insert("u".into(), self.u.clone());
        m.insert("xi".into(), self.xi.clone());
        m.insert("xitilde".into(), self.xitilde.clone());
        m.insert("r".into(), self.r.clone());
        m
    }

    pub fn from_map(m: &BTreeMap<String, Scalar>) -> Result<Self> {
        let get = |k: &str| m.get(k).cloned().ok_or_else(|| Error::MissingParam(k.to_string()));
        let spectral = m
            .iter()
            .filter(|(k, _)| !SCALAR_NAMES.contains(&k.as_str()))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Ok(ParamPoint {
            q: get("q")?,
            u: get("u")?,
            xi: get("xi")?,
            xitilde: get("xitilde")?,
            r: get("r")?,
            spectral,
        })
    }

    /// Replace one named value.
    pub fn with(&self, key: &str, v: Scalar) -> Result<Self> {
        let mut p = self.clone();
        match key {
            "q" => p.q = v,
            "u" => p.u = v,
            "xi" => p.xi = v,
            "xitilde" => p.xitilde = v,
            "r" => p.r = v,
            k if SPECTRAL_NAMES.contains(&k) => {
                p.spectral.insert(k.to_string(), v);
            }
            k => return Err(Error::Unknown(format!("parameter {k:?}"))),
        }
        Ok(p)
    }

    /// A 64-bit digest of the point, used to seed auxiliary randomness.
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for (k, v) in self.to_map() {
            for b in k.bytes().chain(v.to_string().bytes()) {
                h ^= b as u64;
                h = h.wrapping_mul(0x100_0000_01b3);
            }
        }
        h
    }
}

impl TryFrom<BTreeMap<String, String>> for ParamPoint {
    type Error = Error;
    fn try_from(m: BTreeMap<String, String>) -> Result<Self> {
        let parsed = m
            .into_iter()
            .map(|(k, v)| Ok((k, v.parse::<Scalar>()?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        ParamPoint::from_map(&parsed)
    }
}

impl From<ParamPoint> for BTreeMap<String, String> {
    fn from(p: ParamPoint) -> Self {
        p.to_map().into_iter().map(|(k, v)| (k, v.to_string())).collect()
    }
}

/// What `sample_params` must guarantee.
#[derive(Clone, Debug)]
pub struct Admissibility {
    /// Largest truncation the point will be used with.
    pub n_max: usize,
    /// Values fixed by the caller; everything else is sampled.
    pub overrides: BTreeMap<String, Scalar>,
    pub max_attempts: usize,
}

impl Default for Admissibility {
    fn default() -> Self {
        Admissibility { n_max: 16, overrides: BTreeMap::new(), max_attempts: 64 }
    }
}

impl Admissibility {
    pub fn with_n_max(n_max: usize) -> Self {
        Admissibility { n_max, ..Default::default() }
    }

    /// Exponent bound for the root-of-unity proxy.
    pub fn k_bound(&self) -> i64 {
        4 * (self.n_max as i64 + 4)
    }
}

// q draws its numerator and denominator from {1, 2, 3, 4} and every other value
// from {1, 5, 7, 11, 13}, so accidental identities q^k * c = 1 with k != 0 cannot occur.
fn random_rational(rng: &mut ChaCha8Rng, pool: &[i64]) -> Scalar {
    loop {
        let n = pool[rng.random_range(0..pool.len())];
        let d = pool[rng.random_range(0..pool.len())];
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let s = Scalar::ratio(sign * n, d);
        if !s.abs().is_one() {
            return s;
        }
    }
}

/// Deterministic-in-seed parameter point passing every certificate.
pub fn sample_params(seed: u64, adm: &Admissibility) -> Result<ParamPoint> {
    for k in adm.overrides.keys() {
        if !SCALAR_NAMES.contains(&k.as_str()) && !SPECTRAL_NAMES.contains(&k.as_str()) {
            return Err(Error::Unknown(format!("parameter {k:?}")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::new();
    for _ in 0..adm.max_attempts {
        let mut m = BTreeMap::new();
        for name in SCALAR_NAMES.iter().chain(SPECTRAL_NAMES.iter()) {
            let pool: &[i64] = if *name == "q" { &[1, 2, 3, 4] } else { &[1, 5, 7, 11, 13] };
            let v = random_rational(&mut rng, pool);
            m.insert(name.to_string(), adm.overrides.get(*name).cloned().unwrap_or(v));
        }
        let p = ParamPoint::from_map(&m)?;
        match certificate_violation(&p, adm) {
            None => return Ok(p),
            Some(v) => last = v,
        }
    }
    Err(Error::SamplerExhausted { attempts: adm.max_attempts, last })
}

/// The root-of-unity proxy: `q` is not `0`, `±1`, and `q^k != 1` for `k` up to the bound.
fn q_violation(q: &Scalar, adm: &Admissibility) -> Option<String> {
    let one = Scalar::one();
    if q.is_zero() || q.abs() == one {
        return Some(format!("q = {q} is excluded"));
    }
    let mut qk = one.clone();
    for k in 1..=adm.k_bound() {
        qk *= q;
        if qk == one {
            return Some(format!("q^{k} = 1"));
        }
    }
    None
}

/// Checks every admissibility certificate; returns a description of the first violation.
pub fn certificate_violation(p: &ParamPoint, adm: &Admissibility) -> Option<String> {
    if let Some(v) = q_violation(&p.q, adm) {
        return Some(v);
    }
    let one = Scalar::one();
    for (name, v) in p.to_map() {
        if v.is_zero() {
            return Some(format!("{name} = 0"));
        }
    }
    // Powers q^k for |k| <= 2 (n_max + 6); every guarded factor has the form 1 - q^k * c * t.
    let kmax = 2 * (adm.n_max as i64 + 6);
    let qpows: Vec<(i64, Scalar)> = (-kmax..=kmax).map(|k| (k, p.q.pow(k).expect("q nonzero"))).collect();
    let inv = |s: &Scalar| s.inv().expect("nonzero");
    let u2 = &p.u * &p.u;
    let mut coeffs = vec![one.clone(), u2.clone(), inv(&u2)];
    for c in [p.xi.clone(), p.xitilde.clone(), p.r.clone()] {
        for s in [c.clone(), inv(&c)] {
            coeffs.push(s.clone());
            coeffs.push(&s * &u2);
            coeffs.push(&s * &inv(&u2));
        }
    }
    let mut args: Vec<(String, Scalar)> = Vec::new();
    for (name, t) in &p.spectral {
        let t_inv = inv(t);
        args.push((name.clone(), t.clone()));
        args.push((format!("1/{name}"), t_inv.clone()));
        for (lbl, s) in [("u", p.u.clone()), ("1/u", inv(&p.u))] {
            args.push((format!("({name}*{lbl})^2"), t * t * &s * &s));
            args.push((format!("({name}*{lbl})^-2"), &t_inv * &t_inv * &inv(&s) * &inv(&s)));
        }
        args.push((format!("{name}^2"), t * t));
        args.push((format!("{name}^-2"), &t_inv * &t_inv));
    }
    // 1 - q^k c t = 0  <=>  q^k = 1/(c t)
    let mut forbidden: HashSet<Scalar> = HashSet::new();
    let mut label: BTreeMap<Scalar, String> = BTreeMap::new();
    for (an, a) in &args {
        for (ci, c) in coeffs.iter().enumerate() {
            let v = inv(&(a * c));
            label.entry(v.clone()).or_insert_with(|| format!("argument {an} with coefficient #{ci}"));
            forbidden.insert(v);
        }
    }
    for (k, qk) in &qpows {
        if forbidden.contains(qk) {
            return Some(format!("vanishing factor 1 - q^{k} * ({})", label[qk]));
        }
    }
    None
}
