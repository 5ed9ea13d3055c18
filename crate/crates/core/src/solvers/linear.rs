//! Charge-graded solver for linear operator equations `sum_t c_t A_t X C_t = 0`.
//!
//! The unknown `X` is charge preserving, so it is a list of dense blocks. Blocks
//! are introduced one at a time: stage `m` adds the entries of block `m` to the
//! span of the stage `m-1` solutions and imposes every equation column whose
//! evaluation only touches blocks `<= m`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::fock::{FockOp, FockSpace};
use crate::linalg::{Matrix, NullspaceSolver};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ansatz {
    /// diagonal in the occupation basis
    Diagonal,
    /// arbitrary charge-preserving
    Block,
}

/// `coeff * left ∘ X ∘ right`, with `X` placed on some legs of `left`'s domain.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Scalar,
    pub left: FockOp,
    pub right: FockOp,
}

/// `sum of terms = 0`, with `X` acting on legs `positions` of the middle space.
#[derive(Clone, Debug)]
pub struct Equation {
    pub name: String,
    pub positions: Vec<usize>,
    pub terms: Vec<Term>,
}

impl Equation {
    /// `X ∘ a - b ∘ X`
    pub fn intertwining(name: impl Into<String>, positions: Vec<usize>, a: FockOp, b: FockOp) -> Equation {
        let mid = a.codomain().clone();
        Equation {
            name: name.into(),
            positions,
            terms: vec![
                Term { coeff: Scalar::one(), left: FockOp::identity(&mid), right: a },
                Term { coeff: -Scalar::one(), left: b, right: FockOp::identity(&mid) },
            ],
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearProblem {
    pub unknown: FockSpace,
    pub ansatz: Ansatz,
    pub equations: Vec<Equation>,
}

/// Basis of the solution space on blocks `0..=top`.
#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub unknown: FockSpace,
    pub basis: Vec<Vec<Matrix>>,
    /// solution dimension after each stage
    pub stage_dims: Vec<usize>,
    /// equation columns imposed
    pub columns: usize,
}

impl SolutionSet {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn top(&self) -> usize {
        self.stage_dims.len() - 1
    }

    /// Basis element `k` as an operator exact on blocks `0..=top`.
    pub fn operator(&self, k: usize) -> Result<FockOp> {
        FockOp::from_blocks(&self.unknown, &self.basis[k])
    }

    /// The unique solution scaled so that the first vacuum entry is one.
    pub fn normalized(&self) -> Result<FockOp> {
        if self.dim() != 1 {
            return Err(Error::SolutionDimension { what: "normalization".into(), dim: self.dim(), expected: 1 });
        }
        let anchor = self.basis[0][0].get(0, 0).clone();
        let inv = anchor.inv().map_err(|_| Error::Singular("solution vanishes on the vacuum".into()))?;
        Ok(self.operator(0)?.scale(&inv))
    }

    /// Restrict to blocks `0..=m`.
    pub fn truncate_blocks(&self, m: usize) -> Result<FockOp> {
        if self.dim() != 1 {
            return Err(Error::SolutionDimension { what: "truncation".into(), dim: self.dim(), expected: 1 });
        }
        let op = self.normalized()?;
        let blocks = (0..=m).map(|b| op.restrict_to_block(b)).collect::<Result<Vec<_>>>()?;
        FockOp::from_blocks(&self.unknown, &blocks)
    }
}

/// Position of every unknown-space basis vector inside its charge block.
struct BlockIndex {
    block: Vec<(usize, usize)>,
    bases: Vec<Vec<usize>>,
}

impl BlockIndex {
    fn new(s: &FockSpace) -> BlockIndex {
        let top = s.max_charge();
        let bases: Vec<Vec<usize>> = (0..=top).map(|m| s.block_basis(m)).collect();
        let mut block = vec![(0, 0); s.dim()];
        for (m, b) in bases.iter().enumerate() {
            for (k, &i) in b.iter().enumerate() {
                block[i] = (m, k);
            }
        }
        BlockIndex { block, bases }
    }
}

/// A candidate direction for `X`.
enum Direction<'a> {
    Blocks(&'a [Matrix]),
    /// single entry `(row, col)` of block `m`
    Entry(usize, usize, usize),
}

struct Ctx<'a> {
    unknown: &'a FockSpace,
    idx: &'a BlockIndex,
}

impl Ctx<'_> {
    /// Apply the embedded direction to a sparse vector on the middle space.
    fn apply(&self, dir: &Direction, mid: &FockSpace, positions: &[usize], v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in v {
            let mut d = mid.digits(*i);
            let xd: Vec<usize> = positions.iter().map(|&p| d[p]).collect();
            let x = self.unknown.index(&xd).expect("digits in range");
            let (m, k) = self.idx.block[x];
            let mut push = |row: usize, val: &Scalar| {
                let target = self.idx.bases[m][row];
                let td = self.unknown.digits(target);
                for (slot, &p) in positions.iter().enumerate() {
                    d[p] = td[slot];
                }
                let o = mid.index(&d).expect("digits in range");
                *acc.entry(o).or_insert_with(Scalar::zero) += &(val * c);
            };
            match dir {
                Direction::Blocks(b) => {
                    if m < b.len() {
                        for row in 0..b[m].rows() {
                            let val = b[m].get(row, k);
                            if !val.is_zero() {
                                push(row, val);
                            }
                        }
                    }
                }
                Direction::Entry(bm, row, col) => {
                    if *bm == m && *col == k {
                        push(*row, &Scalar::one());
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    fn x_charge(&self, mid: &FockSpace, positions: &[usize], i: usize) -> usize {
        let d = mid.digits(i);
        let xd: Vec<usize> = positions.iter().map(|&p| d[p]).collect();
        self.idx.block[self.unknown.index(&xd).expect("digits in range")].0
    }

    /// All middle-space vectors reachable from `i` by a charge-preserving `X`.
    fn orbit(&self, mid: &FockSpace, positions: &[usize], i: usize) -> Vec<usize> {
        let mut d = mid.digits(i);
        let m = self.x_charge(mid, positions, i);
        self.idx.bases[m]
            .iter()
            .map(|&t| {
                let td = self.unknown.digits(t);
                for (slot, &p) in positions.iter().enumerate() {
                    d[p] = td[slot];
                }
                mid.index(&d).expect("digits in range")
            })
            .collect()
    }
}

/// Column `j` of equation `e` is usable iff every factor is exact where it is evaluated.
/// Returns the highest unknown block it touches.
fn column_stage(ctx: &Ctx, e: &Equation, j: usize) -> Option<usize> {
    let mut need = None;
    for t in &e.terms {
        if !t.right.in_window(j) {
            return None;
        }
        let mid = t.right.codomain();
        for (i, _) in t.right.apply_basis(j) {
            let m = ctx.x_charge(mid, &e.positions, *i);
            if !ctx.unknown.block_complete(m) {
                return None;
            }
            if !ctx.orbit(mid, &e.positions, *i).into_iter().all(|o| t.left.in_window(o)) {
                return None;
            }
            need = Some(need.map_or(m, |n: usize| n.max(m)));
        }
    }
    need
}

fn residual(ctx: &Ctx, e: &Equation, j: usize, dir: &Direction) -> Vec<(usize, Scalar)> {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for t in &e.terms {
        let mid = t.right.codomain();
        let v = ctx.apply(dir, mid, &e.positions, t.right.apply_basis(j));
        for (o, val) in t.left.apply(&v) {
            *acc.entry(o).or_insert_with(Scalar::zero) += &(&val * &t.coeff);
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Solve on blocks `0..=top`.
pub fn solve(problem: &LinearProblem, top: usize) -> Result<SolutionSet> {
    let u = &problem.unknown;
    if !u.block_complete(top) {
        return Err(Error::WindowTooSmall(format!("block {top} is incomplete at N = {}", u.n())));
    }
    for e in &problem.equations {
        for t in &e.terms {
            if t.left.domain() != t.right.codomain() || t.left.codomain().n() != u.n() {
                return Err(Error::Shape(format!("equation {}: factor spaces disagree", e.name)));
            }
        }
    }
    let idx = BlockIndex::new(u);
    let ctx = Ctx { unknown: u, idx: &idx };
    // (equation, column) pairs grouped by stage
    let mut by_stage: Vec<Vec<(usize, usize)>> = vec![Vec::new(); top + 1];
    for (ei, e) in problem.equations.iter().enumerate() {
        let dim = e.terms[0].right.domain().dim();
        let stages = par::map_range(dim, |j| column_stage(&ctx, e, j));
        for (j, s) in stages.into_iter().enumerate() {
            if let Some(m) = s {
                if m <= top {
                    by_stage[m].push((ei, j));
                }
            }
        }
    }
    let mut basis: Vec<Vec<Matrix>> = vec![Vec::new()];
    let mut stage_dims = Vec::with_capacity(top + 1);
    let mut columns = 0;
    for (m, cols) in by_stage.iter().enumerate() {
        let size = idx.bases[m].len();
        let entries: Vec<(usize, usize)> = match problem.ansatz {
            Ansatz::Diagonal => (0..size).map(|k| (k, k)).collect(),
            Ansatz::Block => (0..size).flat_map(|r| (0..size).map(move |c| (r, c))).collect(),
        };
        let nprev = if m == 0 { 0 } else { basis.len() };
        let unknowns = nprev + entries.len();
        let rows = par::map(cols.clone(), |(ei, j)| {
            let e = &problem.equations[ei];
            let mut table: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
            let dirs = (0..nprev)
                .map(|k| Direction::Blocks(&basis[k]))
                .chain(entries.iter().map(|&(r, c)| Direction::Entry(m, r, c)));
            for (k, dir) in dirs.enumerate() {
                for (o, v) in residual(&ctx, e, j, &dir) {
                    table.entry(o).or_insert_with(|| vec![Scalar::zero(); unknowns])[k] = v;
                }
            }
            table.into_values().collect::<Vec<_>>()
        });
        let mut ns = NullspaceSolver::new(unknowns);
        for r in rows.into_iter().flatten() {
            ns.add_equation(&r)?;
        }
        columns += cols.len();
        let sol = ns.basis();
        let mut next = Vec::with_capacity(sol.len());
        for v in sol {
            let mut blocks: Vec<Matrix> = (0..m).map(|b| Matrix::zeros(idx.bases[b].len(), idx.bases[b].len())).collect();
            for k in 0..nprev {
                if !v[k].is_zero() {
                    for b in 0..m {
                        blocks[b] = blocks[b].add(&basis[k][b].scale(&v[k]))?;
                    }
                }
            }
            let mut blk = Matrix::zeros(size, size);
            for (slot, &(r, c)) in entries.iter().enumerate() {
                blk.set(r, c, v[nprev + slot].clone());
            }
            blocks.push(blk);
            next.push(blocks);
        }
        basis = next;
        stage_dims.push(basis.len());
    }
    Ok(SolutionSet { unknown: u.clone(), basis, stage_dims, columns })
}

/// Re-substitute an operator into every equation and report the first nonzero residual.
pub fn residual_check(problem: &LinearProblem, x: &FockOp, top: usize) -> Result<Option<String>> {
    let u = &problem.unknown;
    let blocks = (0..=top).map(|m| x.restrict_to_block(m)).collect::<Result<Vec<_>>>()?;
    let idx = BlockIndex::new(u);
    let ctx = Ctx { unknown: u, idx: &idx };
    for e in &problem.equations {
        let dim = e.terms[0].right.domain().dim();
        for j in 0..dim {
            if column_stage(&ctx, e, j).is_some_and(|m| m <= top) {
                let r = residual(&ctx, e, j, &Direction::Blocks(&blocks));
                if let Some((o, v)) = r.first() {
                    let dom = e.terms[0].right.domain();
                    let cod = e.terms[0].left.codomain();
                    return Ok(Some(format!("{}: input {} output {} residual {v}", e.name, dom.label(j), cod.label(*o))));
                }
            }
        }
    }
    Ok(None)
}

fn flatten(blocks: &[Matrix]) -> Vec<Scalar> {
    blocks
        .iter()
        .flat_map(|b| (0..b.rows()).flat_map(move |r| (0..b.cols()).map(move |c| b.get(r, c).clone())))
        .collect()
}

impl SolutionSet {
    /// The solution space projected to blocks `0..=m`, with a linearly independent basis.
    pub fn restrict(&self, m: usize) -> Result<SolutionSet> {
        if m > self.top() {
            return Err(Error::WindowTooSmall(format!("block {m} beyond solved range {}", self.top())));
        }
        // Row echelon over the rationals; keep elements that add rank.
        let mut pivots: Vec<(usize, Vec<Scalar>)> = Vec::new();
        let mut kept = Vec::new();
        for b in &self.basis {
            let blocks = b[..=m].to_vec();
            let mut v = flatten(&blocks);
            for (p, row) in &pivots {
                if !v[*p].is_zero() {
                    let f = v[*p].clone();
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &(&f * y);
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[p].inv()?;
                let row: Vec<Scalar> = v.iter().map(|x| x * &inv).collect();
                for (_, other) in pivots.iter_mut() {
                    if !other[p].is_zero() {
                        let f = other[p].clone();
                        for (x, y) in other.iter_mut().zip(&row) {
                            *x -= &(&f * y);
                        }
                    }
                }
                pivots.push((p, row));
                kept.push(blocks);
            }
        }
        Ok(SolutionSet {
            unknown: self.unknown.clone(),
            basis: kept,
            stage_dims: self.stage_dims[..=m].to_vec(),
            columns: self.columns,
        })
    }
}
