//! Plain-text operator dumps.
//!
//! ```text
//! N L legs2 layout
//! window <guards> <raises> <charge guard> <charge raise>
//! out_index in_index value
//! ```
//! `layout` spells the leg order with `W` and `C`; `-` marks an absent value and
//! `*` an unbounded raise.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::fock::op::FockOp;
use crate::fock::space::{FockSpace, Leg};
use crate::fock::window::Window;

fn list<T>(xs: &[T], f: impl Fn(&T) -> String) -> String {
    if xs.is_empty() {
        "-".into()
    } else {
        xs.iter().map(f).collect::<Vec<_>>().join(",")
    }
}

/// Serialize an endomorphism.
pub fn dump(op: &FockOp) -> Result<String> {
    if op.domain() != op.codomain() {
        return Err(Error::Shape("only endomorphisms can be dumped".into()));
    }
    let s = op.domain();
    let layout: String = s.legs().iter().map(|l| if *l == Leg::Fock { 'W' } else { 'C' }).collect();
    let layout = if layout.is_empty() { "-".to_string() } else { layout };
    let w = op.window();
    let mut out = String::new();
    writeln!(out, "{} {} {} {}", s.n(), s.num_fock(), s.num_legs() - s.num_fock(), layout).ok();
    writeln!(
        out,
        "window {} {} {} {}",
        list(&w.guard, |g| g.to_string()),
        list(&w.raise, |r| r.map_or("*".into(), |x| x.to_string())),
        w.charge_guard.map_or("-".into(), |g| g.to_string()),
        w.charge_raise
    )
    .ok();
    for (r, c, v) in op.entries() {
        writeln!(out, "{r} {c} {v}").ok();
    }
    Ok(out)
}

/// Parse the output of [`dump`].
pub fn parse_dump(text: &str) -> Result<FockOp> {
    let bad = |m: &str| Error::Parse(format!("operator dump: {m}"));
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head: Vec<&str> = lines.next().ok_or_else(|| bad("empty"))?.split_whitespace().collect();
    if head.len() != 4 {
        return Err(bad("header needs N L legs2 layout"));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(s));
    let n = num(head[0])?;
    let legs: Vec<Leg> = if head[3] == "-" {
        vec![]
    } else {
        head[3]
            .chars()
            .map(|c| match c {
                'W' => Ok(Leg::Fock),
                'C' => Ok(Leg::Two),
                _ => Err(bad("layout")),
            })
            .collect::<Result<_>>()?
    };
    let space = FockSpace::new(n, legs);
    if space.num_fock() != num(head[1])? || space.num_legs() - space.num_fock() != num(head[2])? {
        return Err(bad("leg counts disagree with layout"));
    }
    let wl: Vec<&str> = lines.next().ok_or_else(|| bad("missing window"))?.split_whitespace().collect();
    if wl.len() != 5 || wl[0] != "window" {
        return Err(bad("window line"));
    }
    let split = |s: &str| -> Vec<String> {
        if s == "-" {
            vec![]
        } else {
            s.split(',').map(str::to_string).collect()
        }
    };
    let guard = split(wl[1]).iter().map(|g| g.parse::<u32>().map_err(|_| bad(g))).collect::<Result<Vec<_>>>()?;
    let raise = split(wl[2])
        .iter()
        .map(|r| if r == "*" { Ok(None) } else { r.parse::<u32>().map(Some).map_err(|_| bad(r)) })
        .collect::<Result<Vec<_>>>()?;
    let charge_guard = if wl[3] == "-" { None } else { Some(wl[3].parse::<u32>().map_err(|_| bad(wl[3]))?) };
    let charge_raise = wl[4].parse::<u32>().map_err(|_| bad(wl[4]))?;
    let win = Window { guard, raise, charge_guard, charge_raise };
    let mut cols = vec![Vec::new(); space.dim()];
    for l in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() != 3 {
            return Err(bad(l));
        }
        let (r, c) = (num(t[0])?, num(t[1])?);
        if c >= cols.len() {
            return Err(bad("column index out of range"));
        }
        cols[c].push((r, t[2].parse::<Scalar>()?));
    }
    FockOp::from_columns(space.clone(), space, cols, win)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::generators::{make_generator, Generator};

    #[test]
    fn round_trip() {
        let s = FockSpace::new(3, vec![Leg::Fock, Leg::Two, Leg::Fock]);
        let op = make_generator(&Generator::Adag, 2, &s, &Scalar::ratio(-2, 5)).unwrap();
        let text = dump(&op).unwrap();
        assert_eq!(parse_dump(&text).unwrap(), op);
    }
}
