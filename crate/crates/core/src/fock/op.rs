use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactq::Scalar;
use crate::fock::space::{check_perm, FockSpace, Leg};
use crate::fock::window::Window;
use crate::linalg::Matrix;
use crate::par;

/// Sparse operator between two truncated spaces, stored column by column.
///
/// Domain and codomain share the truncation and the number of Fock legs, so the
/// per-leg window metadata refers to the same legs on both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct FockOp {
    dom: FockSpace,
    cod: FockSpace,
    cols: Vec<Vec<(usize, Scalar)>>,
    win: Window,
}

/// Result of an exact comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum Agreement {
    Equal { checked: usize },
    Differ(Witness),
}

impl Agreement {
    pub fn is_equal(&self) -> bool {
        matches!(self, Agreement::Equal { .. })
    }
}

/// First input basis vector on which two operators differ, with both images.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub input: String,
    pub charge: usize,
    pub lhs: Vec<(String, Scalar)>,
    pub rhs: Vec<(String, Scalar)>,
}

impl FockOp {
    pub fn from_columns(dom: FockSpace, cod: FockSpace, cols: Vec<Vec<(usize, Scalar)>>, win: Window) -> Result<Self> {
        if dom.n() != cod.n() || dom.num_fock() != cod.num_fock() {
            return Err(Error::Shape(format!("incompatible spaces {dom:?} -> {cod:?}")));
        }
        if cols.len() != dom.dim() || win.legs() != dom.num_fock() {
            return Err(Error::Shape("column count or window does not match the domain".into()));
        }
        let cols = cols
            .into_iter()
            .map(|c| {
                let mut m: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (r, v) in c {
                    *m.entry(r).or_insert_with(Scalar::zero) += &v;
                }
                m.into_iter().filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        if cols.iter().flatten().any(|(r, _)| *r >= cod.dim()) {
            return Err(Error::Shape("row index outside the codomain".into()));
        }
        Ok(FockOp { dom, cod, cols, win })
    }

    pub fn zero(space: &FockSpace) -> Self {
        FockOp {
            dom: space.clone(),
            cod: space.clone(),
            cols: vec![Vec::new(); space.dim()],
            win: Window::exact(space.num_fock()),
        }
    }

    pub fn identity(space: &FockSpace) -> Self {
        FockOp {
            dom: space.clone(),
            cod: space.clone(),
            cols: (0..space.dim()).map(|i| vec![(i, Scalar::one())]).collect(),
            win: Window::exact(space.num_fock()),
        }
    }

    /// Diagonal operator with the given value on each basis vector.
    pub fn diagonal(space: &FockSpace, f: impl Fn(&[usize]) -> Result<Scalar>) -> Result<Self> {
        let cols = (0..space.dim())
            .map(|i| Ok(vec![(i, f(&space.digits(i))?)]))
            .collect::<Result<Vec<_>>>()?;
        FockOp::from_columns(space.clone(), space.clone(), cols, Window::exact(space.num_fock()))
    }

    pub fn domain(&self) -> &FockSpace {
        &self.dom
    }

    pub fn codomain(&self) -> &FockSpace {
        &self.cod
    }

    pub fn space(&self) -> &FockSpace {
        &self.dom
    }

    pub fn window(&self) -> &Window {
        &self.win
    }

    pub fn with_window(mut self, win: Window) -> Result<Self> {
        if win.legs() != self.dom.num_fock() {
            return Err(Error::Shape("window leg count".into()));
        }
        self.win = win;
        Ok(self)
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Whether the input basis vector `idx` lies in the exactness window.
    pub fn in_window(&self, idx: usize) -> bool {
        self.win.contains(self.dom.n(), &self.dom.fock_digits(idx), self.dom.charge(idx))
    }

    pub fn window_indices(&self) -> Vec<usize> {
        (0..self.dom.dim()).filter(|&i| self.in_window(i)).collect()
    }

    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &FockOp) -> Result<FockOp> {
        if rhs.cod != self.dom {
            return Err(Error::Shape(format!("compose {:?} after {:?}", self.dom, rhs.cod)));
        }
        let win = Window::compose(&self.win, &rhs.win)?;
        let cols = par::map_range(rhs.cols.len(), |j| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, b) in &rhs.cols[j] {
                for (r, a) in &self.cols[*k] {
                    *acc.entry(*r).or_insert_with(Scalar::zero) += &(a * b);
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()
        });
        Ok(FockOp { dom: rhs.dom.clone(), cod: self.cod.clone(), cols, win })
    }

    /// Product of a list, leftmost applied last.
    pub fn product(ops: &[&FockOp]) -> Result<FockOp> {
        let (last, rest) = ops.split_last().ok_or_else(|| Error::Shape("empty product".into()))?;
        let mut acc = (*last).clone();
        for op in rest.iter().rev() {
            acc = op.compose(&acc)?;
        }
        Ok(acc)
    }

    fn combine(&self, other: &FockOp, sign: &Scalar) -> Result<FockOp> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Shape("sum of operators on different spaces".into()));
        }
        let win = Window::join(&self.win, &other.win)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Scalar> = a.iter().cloned().collect();
                for (r, v) in b {
                    *acc.entry(*r).or_insert_with(Scalar::zero) += &(v * sign);
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(FockOp { dom: self.dom.clone(), cod: self.cod.clone(), cols, win })
    }

    pub fn add(&self, other: &FockOp) -> Result<FockOp> {
        self.combine(other, &Scalar::one())
    }

    pub fn sub(&self, other: &FockOp) -> Result<FockOp> {
        self.combine(other, &-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> FockOp {
        let cols = if c.is_zero() {
            vec![Vec::new(); self.cols.len()]
        } else {
            self.cols.iter().map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect()).collect()
        };
        FockOp { dom: self.dom.clone(), cod: self.cod.clone(), cols, win: self.win.clone() }
    }

    /// `xy - c yx`
    pub fn qcommutator(x: &FockOp, y: &FockOp, c: &Scalar) -> Result<FockOp> {
        x.compose(y)?.sub(&y.compose(x)?.scale(c))
    }

    pub fn commutator(x: &FockOp, y: &FockOp) -> Result<FockOp> {
        FockOp::qcommutator(x, y, &Scalar::one())
    }

    /// `self ⊗ other`, legs of `self` first.
    pub fn tensor(&self, other: &FockOp) -> Result<FockOp> {
        let dom = self.dom.tensor(&other.dom)?;
        let cod = self.cod.tensor(&other.cod)?;
        let (d2, c2) = (other.dom.dim(), other.cod.dim());
        let mut cols = Vec::with_capacity(dom.dim());
        for a in &self.cols {
            for b in &other.cols {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (ra, va) in a {
                    for (rb, vb) in b {
                        col.push((ra * c2 + rb, va * vb));
                    }
                }
                col.sort_by_key(|(r, _)| *r);
                cols.push(col);
            }
        }
        debug_assert_eq!(cols.len(), self.dom.dim() * d2);
        Ok(FockOp { dom, cod, cols, win: Window::tensor(&self.win, &other.win) })
    }

    /// Reorder legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<FockOp> {
        check_perm(perm, self.dom.num_legs())?;
        if self.dom.legs() != self.cod.legs() {
            return Err(Error::Shape("leg permutation needs matching domain and codomain legs".into()));
        }
        let space = self.dom.permuted(perm)?;
        let map = |old: usize| -> usize {
            let d = self.dom.digits(old);
            let nd: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            space.index(&nd).expect("in range")
        };
        let mut cols = vec![Vec::new(); space.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            let mut c: Vec<(usize, Scalar)> = col.iter().map(|(r, v)| (map(*r), v.clone())).collect();
            c.sort_by_key(|(r, _)| *r);
            cols[map(j)] = c;
        }
        // Fock-leg order of the permuted space, expressed in old Fock-leg numbering.
        let old_fock = self.dom.fock_positions();
        let fock_perm: Vec<usize> = perm
            .iter()
            .filter(|&&p| self.dom.legs()[p] == Leg::Fock)
            .map(|p| old_fock.iter().position(|x| x == p).expect("fock leg"))
            .collect();
        Ok(FockOp { dom: space.clone(), cod: space, cols, win: self.win.permuted(&fock_perm) })
    }

    /// Swap the two legs of a two-leg operator.
    pub fn flip_legs(&self) -> Result<FockOp> {
        if self.dom.num_legs() != 2 {
            return Err(Error::Shape("flip_legs needs exactly two legs".into()));
        }
        self.permute_legs(&[1, 0])
    }

    /// Place `self` on legs `positions` of `target`, identity elsewhere.
    pub fn embed(&self, target: &FockSpace, positions: &[usize]) -> Result<FockOp> {
        if self.dom != self.cod {
            return Err(Error::Shape("embedding needs an endomorphism".into()));
        }
        let k = self.dom.num_legs();
        if positions.len() != k || target.n() != self.dom.n() {
            return Err(Error::Shape("embedding positions".into()));
        }
        for (i, &p) in positions.iter().enumerate() {
            if p >= target.num_legs() || target.legs()[p] != self.dom.legs()[i] {
                return Err(Error::Shape(format!("leg {i} cannot be placed at {p}")));
            }
        }
        let others: Vec<usize> = (0..target.num_legs()).filter(|p| !positions.contains(p)).collect();
        let rest = FockSpace::new(target.n(), others.iter().map(|&p| target.legs()[p]).collect());
        let big = self.tensor(&FockOp::identity(&rest))?;
        // Leg order of `big` is positions ++ others; invert to target order.
        let order: Vec<usize> = positions.iter().chain(&others).copied().collect();
        let mut perm = vec![0; order.len()];
        for (i, &p) in order.iter().enumerate() {
            perm[p] = i;
        }
        big.permute_legs(&perm)
    }

    /// Image of a basis vector as (row, value) pairs.
    pub fn apply_basis(&self, idx: usize) -> &[(usize, Scalar)] {
        &self.cols[idx]
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, x) in v {
            for (r, a) in &self.cols[*j] {
                *acc.entry(*r).or_insert_with(Scalar::zero) += &(a * x);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Whether every nonzero entry maps a basis vector to one of the same charge.
    pub fn is_block_preserving(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.iter().all(|(r, _)| self.cod.charge(*r) == self.dom.charge(j)))
    }

    /// Record that the operator preserves the charge, which lets compositions keep wider windows.
    pub fn charge_preserving(mut self) -> Result<FockOp> {
        if !self.is_block_preserving() {
            return Err(Error::NotBlockPreserving(format!("operator on {:?}", self.dom)));
        }
        self.win.charge_raise = 0;
        Ok(self)
    }

    /// Whether the window covers every complete block up to charge `m`.
    pub fn covers_blocks(&self, m: usize) -> bool {
        (0..=m).all(|c| self.dom.block_complete(c) && self.dom.block_basis(c).iter().all(|&i| self.in_window(i)))
    }

    /// Exact dense restriction to the charge-`m` block.
    pub fn restrict_to_block(&self, m: usize) -> Result<Matrix> {
        if self.dom != self.cod || !self.is_block_preserving() {
            return Err(Error::NotBlockPreserving(format!("operator on {:?}", self.dom)));
        }
        if !self.dom.block_complete(m) {
            return Err(Error::WindowTooSmall(format!("block {m} is incomplete at N = {}", self.dom.n())));
        }
        let basis = self.dom.block_basis(m);
        if let Some(&bad) = basis.iter().find(|&&i| !self.in_window(i)) {
            return Err(Error::WindowTooSmall(format!(
                "block {m} basis vector {} is outside the exactness window",
                self.dom.label(bad)
            )));
        }
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut mat = Matrix::zeros(basis.len(), basis.len());
        for (k, &j) in basis.iter().enumerate() {
            for (r, v) in &self.cols[j] {
                mat.set(pos[r], k, v.clone());
            }
        }
        Ok(mat)
    }

    /// Assemble a charge-preserving operator from dense blocks `0..blocks.len()`.
    ///
    /// Inputs of charge beyond the last block are mapped to zero; the result
    /// carries the blockwise window, so it only claims exactness on the given blocks.
    pub fn from_blocks(space: &FockSpace, blocks: &[Matrix]) -> Result<FockOp> {
        let mut cols = vec![Vec::new(); space.dim()];
        for (m, b) in blocks.iter().enumerate() {
            let basis = space.block_basis(m);
            if b.rows() != basis.len() || b.cols() != basis.len() {
                return Err(Error::Shape(format!("block {m} has wrong size")));
            }
            for (k, &j) in basis.iter().enumerate() {
                cols[j] = (0..basis.len())
                    .filter(|&i| !b.get(i, k).is_zero())
                    .map(|i| (basis[i], b.get(i, k).clone()))
                    .collect();
            }
        }
        let mut win = Window::blockwise(space.num_fock());
        // Blocks beyond the supplied ones are not exact.
        let last = blocks.len() as i64 - 1;
        let guard = space.n() as i64 - last;
        win.charge_guard = Some(guard.max(0) as u32);
        FockOp::from_columns(space.clone(), space.clone(), cols, win)
    }

    /// Highest block index covered by a blockwise window, i.e. complete blocks in the window.
    pub fn max_exact_block(&self) -> Option<usize> {
        (0..=self.dom.max_charge()).take_while(|&m| self.covers_blocks(m)).last()
    }

    /// Apply `f` to every exact block and reassemble.
    pub fn map_blocks(&self, f: impl Fn(usize, Matrix) -> Result<Matrix> + Sync + Send) -> Result<FockOp> {
        let top = self
            .max_exact_block()
            .ok_or_else(|| Error::WindowTooSmall("no exact block".into()))?;
        let blocks = par::map_range(top + 1, |m| self.restrict_to_block(m).and_then(|b| f(m, b)));
        let blocks = blocks.into_iter().collect::<Result<Vec<_>>>()?;
        let mut out = FockOp::from_blocks(&self.dom, &blocks)?;
        out.win.raise = self.win.raise.clone();
        Ok(out)
    }

    /// Blockwise inverse of a charge-preserving operator.
    pub fn inverse_blocks(&self) -> Result<FockOp> {
        self.map_blocks(|m, b| {
            b.inverse().map_err(|e| Error::Singular(format!("block {m}: {e}")))
        })
    }

    /// Exact comparison on the intersection of the two exactness windows.
    pub fn agree_on_window(&self, other: &FockOp) -> Result<Agreement> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Shape("comparison of operators on different spaces".into()));
        }
        let idx: Vec<usize> = (0..self.dom.dim()).filter(|&i| self.in_window(i) && other.in_window(i)).collect();
        if idx.is_empty() {
            return Err(Error::WindowTooSmall("empty intersection of exactness windows".into()));
        }
        for &i in &idx {
            if self.cols[i] != other.cols[i] {
                return Ok(Agreement::Differ(self.witness(other, i)));
            }
        }
        Ok(Agreement::Equal { checked: idx.len() })
    }

    /// Exact comparison restricted to inputs of charge at most `m_max` (both windows must cover them).
    pub fn agree_on_blocks(&self, other: &FockOp, m_max: usize) -> Result<Agreement> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Shape("comparison of operators on different spaces".into()));
        }
        for m in 0..=m_max {
            for i in self.dom.block_basis(m) {
                if !self.in_window(i) || !other.in_window(i) {
                    return Err(Error::WindowTooSmall(format!(
                        "block {m} vector {} outside the exactness window",
                        self.dom.label(i)
                    )));
                }
            }
        }
        let checked = (0..=m_max).map(|m| self.dom.block_basis(m)).collect::<Vec<_>>();
        let first_bad = par::map(checked.clone(), |basis| basis.into_iter().find(|&i| self.cols[i] != other.cols[i]));
        match first_bad.into_iter().flatten().next() {
            Some(i) => Ok(Agreement::Differ(self.witness(other, i))),
            None => Ok(Agreement::Equal { checked: checked.iter().map(Vec::len).sum() }),
        }
    }

    fn witness(&self, other: &FockOp, i: usize) -> Witness {
        let show = |op: &FockOp| {
            op.cols[i].iter().map(|(r, v)| (op.cod.label(*r), v.clone())).collect::<Vec<_>>()
        };
        Witness { input: self.dom.label(i), charge: self.dom.charge(i), lhs: show(self), rhs: show(other) }
    }

    /// Keep only the columns selected by `keep`; others become zero.
    pub fn select_columns(&self, keep: impl Fn(usize) -> bool) -> FockOp {
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, c)| if keep(j) { c.clone() } else { Vec::new() })
            .collect();
        FockOp { dom: self.dom.clone(), cod: self.cod.clone(), cols, win: self.win.clone() }
    }

    /// The operator `self ⊗ id` restricted to a new truncation by copying entries
    /// whose input and output both fit; used to compare truncations.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(r, v)| (*r, j, v)))
    }
}
