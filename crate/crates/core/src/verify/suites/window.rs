//! Exactness windows are sound: a column certified at truncation `N` agrees with the same column at `N + 4`.

use rand::RngExt;

use crate::error::Result;
use crate::fock::{FockOp, FockSpace, Generator};
use crate::verify::suites::{gen, random_table, rng_for};
use crate::verify::{Acc, Ctx};

pub const WORDS: usize = 50;
pub const MAX_LEN: usize = 6;
const EXTRA: usize = 4;

#[derive(Clone, Debug)]
enum Letter {
    Gen(u8, usize),
    Diag(Vec<crate::exactq::Scalar>, usize),
    Swap,
}

fn build(word: &[Letter], n: usize, q: &crate::exactq::Scalar) -> Result<FockOp> {
    let s = FockSpace::fock_legs(n, 2);
    let mut op = FockOp::identity(&s);
    for l in word {
        let x = match l {
            Letter::Gen(0, leg) => gen(Generator::A, *leg, &s, q)?,
            Letter::Gen(1, leg) => gen(Generator::Adag, *leg, &s, q)?,
            Letter::Gen(_, leg) => gen(Generator::AbarDag, *leg, &s, q)?,
            Letter::Diag(t, leg) => gen(Generator::Diag(t[..=n].to_vec()), *leg, &s, q)?,
            Letter::Swap => FockOp::identity(&s).flip_legs()?,
        };
        op = x.compose(&op)?;
    }
    Ok(op)
}

pub fn soundness(ctx: &Ctx) -> Result<Acc> {
    let (n, q) = (ctx.n, &ctx.params.q);
    let mut rng = rng_for(ctx, "window-soundness");
    let small = FockSpace::fock_legs(n, 2);
    let big = FockSpace::fock_legs(n + EXTRA, 2);
    let mut acc = Acc::new();
    let mut certified = 0usize;
    for w in 0..WORDS {
        let len = rng.random_range(1..=MAX_LEN);
        let word: Vec<Letter> = (0..len)
            .map(|_| match rng.random_range(0..5u8) {
                k @ 0..=2 => Letter::Gen(k, rng.random_range(0..2)),
                3 => Letter::Diag(random_table(&mut rng, n + EXTRA + 1), rng.random_range(0..2)),
                _ => Letter::Swap,
            })
            .collect();
        let a = build(&word, n, q)?;
        let b = build(&word, n + EXTRA, q)?;
        let mut bad = None;
        for j in a.window_indices() {
            certified += 1;
            let d = small.digits(j);
            let jb = big.index(&d).expect("smaller truncation embeds");
            let lift: Vec<(usize, _)> =
                a.apply_basis(j).iter().map(|(i, c)| (big.index(&small.digits(*i)).expect("embeds"), c.clone())).collect();
            let mut lift = lift;
            lift.sort_by_key(|t| t.0);
            if lift != b.apply_basis(jb) {
                bad = Some((small.label(j), lift, b.apply_basis(jb).to_vec()));
                break;
            }
        }
        acc.truth(&format!("word {w} {word:?}"), bad.is_none(), || {
            let (col, x, y) = bad.clone().expect("failure recorded");
            format!("column {col}: {x:?} at N vs {y:?} at N+{EXTRA}")
        });
    }
    acc.vectors += certified;
    acc.note("certified columns", certified);
    Ok(acc)
}
