//! Explicit value tables for arbitrary functions `f: Lⁿ → L`.

use std::fmt;

use crate::chain::{self, Chain, ChainTuple, Elem, Mask, MAX_SUBSET_ARITY};
use crate::error::{Error, Result};
use crate::grid::Grid;

/// Upper bound on `mⁿ` for materialized tables.
pub const MAX_TABLE_LEN: usize = 1 << 24;

pub(crate) fn table_len(m: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroArity);
    }
    let mut len: usize = 1;
    for _ in 0..n {
        len = len.checked_mul(m).filter(|&l| l <= MAX_TABLE_LEN).ok_or(Error::TooLarge { m, n })?;
    }
    Ok(len)
}

fn check_values(chain: Chain, values: &[Elem]) -> Result<()> {
    values.iter().try_for_each(|&v| chain.check(v).map(|_| ()))
}

/// A function `Lⁿ → L` stored as its full value table, indexed
/// lexicographically with the last coordinate varying fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscreteFunction {
    chain: Chain,
    arity: usize,
    table: Vec<Elem>,
}

impl DiscreteFunction {
    pub fn new(chain: Chain, arity: usize, table: Vec<Elem>) -> Result<Self> {
        let expected = table_len(chain.size(), arity)?;
        if table.len() != expected {
            return Err(Error::TableLength { expected, found: table.len() });
        }
        check_values(chain, &table)?;
        Ok(DiscreteFunction { chain, arity, table })
    }

    pub(crate) fn from_table_unchecked(chain: Chain, arity: usize, table: Vec<Elem>) -> Self {
        debug_assert_eq!(table.len(), chain.size().pow(arity as u32));
        DiscreteFunction { chain, arity, table }
    }

    /// Tabulates `op` over `Lⁿ`.
    pub fn from_fn(chain: Chain, arity: usize, op: impl Fn(&[Elem]) -> Elem) -> Result<Self> {
        let len = table_len(chain.size(), arity)?;
        let grid = Grid::new(chain.size(), arity);
        let table: Vec<Elem> = (0..len).map(|idx| op(grid.coords(idx))).collect();
        check_values(chain, &table)?;
        Ok(DiscreteFunction { chain, arity, table })
    }

    pub fn constant(chain: Chain, arity: usize, c: Elem) -> Result<Self> {
        chain.check(c)?;
        let len = table_len(chain.size(), arity)?;
        Ok(DiscreteFunction { chain, arity, table: vec![c; len] })
    }

    /// `x ↦ x_k` (0-based `k`).
    pub fn projection(chain: Chain, arity: usize, k: usize) -> Result<Self> {
        if k >= arity {
            return Err(Error::CoordinateOutOfRange { index: k, arity });
        }
        Self::from_fn(chain, arity, |x| x[k])
    }

    pub fn lattice_join(chain: Chain, arity: usize) -> Result<Self> {
        Self::from_fn(chain, arity, |x| x.iter().copied().fold(chain.bottom(), chain::join))
    }

    pub fn lattice_meet(chain: Chain, arity: usize) -> Result<Self> {
        Self::from_fn(chain, arity, |x| x.iter().copied().fold(chain.top(), chain::meet))
    }

    /// Ternary median.
    pub fn median3(chain: Chain) -> Result<Self> {
        Self::from_fn(chain, 3, |x| chain::median(x[0], x[1], x[2]))
    }

    /// Truncated sum `min(x_1 + ... + x_n, top)`; nondecreasing but not quasi-polynomial.
    pub fn bounded_sum(chain: Chain, arity: usize) -> Result<Self> {
        let top = chain.top() as usize;
        Self::from_fn(chain, arity, |x| x.iter().map(|&a| a as usize).sum::<usize>().min(top) as Elem)
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub(crate) fn grid(&self) -> Grid {
        Grid::new(self.chain.size(), self.arity)
    }

    pub fn index_of(&self, x: &[Elem]) -> usize {
        let m = self.chain.size();
        x.iter().fold(0, |idx, &a| idx * m + a as usize)
    }

    pub fn point(&self, idx: usize) -> ChainTuple {
        let m = self.chain.size();
        let mut comps = vec![0; self.arity];
        let mut rem = idx;
        for slot in comps.iter_mut().rev() {
            *slot = (rem % m) as Elem;
            rem /= m;
        }
        ChainTuple::from_parts(self.chain, comps)
    }

    /// Unchecked lookup; `x` must have the function's arity and chain.
    #[inline]
    pub fn at(&self, x: &[Elem]) -> Elem {
        debug_assert_eq!(x.len(), self.arity);
        self.table[self.index_of(x)]
    }

    #[inline]
    pub(crate) fn at_index(&self, idx: usize) -> Elem {
        self.table[idx]
    }

    pub fn eval(&self, x: &ChainTuple) -> Result<Elem> {
        self.chain.ensure_same(x.chain())?;
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: x.arity() });
        }
        Ok(self.at(x.components()))
    }

    /// `f(0⃗)`
    pub fn at_bottom(&self) -> Elem {
        self.table[0]
    }

    /// `f(1⃗)`
    pub fn at_top(&self) -> Elem {
        self.table[self.table.len() - 1]
    }

    /// Diagonal section `δ_f(c) = f(c, ..., c)`.
    pub fn diagonal(&self) -> UnaryMap {
        let m = self.chain.size();
        let step: usize = (0..self.arity).map(|i| m.pow(i as u32)).sum();
        let values = (0..m).map(|c| self.table[c * step]).collect();
        UnaryMap { chain: self.chain, values }
    }

    /// Values on the vertex cube, `I ↦ f(e_I)`.
    pub fn vertex_restriction(&self) -> Result<VertexFunction> {
        if self.arity > MAX_SUBSET_ARITY {
            return Err(Error::TooLarge { m: 2, n: self.arity });
        }
        let top = self.chain.top() as usize;
        let m = self.chain.size();
        let values = (0..1usize << self.arity)
            .map(|mask| {
                let idx = (0..self.arity).fold(0, |idx, i| {
                    idx * m + if mask >> i & 1 == 1 { top } else { 0 }
                });
                self.table[idx]
            })
            .collect();
        Ok(VertexFunction { chain: self.chain, arity: self.arity, values })
    }

    /// First covering pair `a ⋖ b` with `f(a) > f(b)`, scanning `a` with the
    /// first coordinate fastest and raising coordinates in ascending order.
    pub fn monotonicity_violation(&self) -> Option<(ChainTuple, ChainTuple)> {
        let grid = self.grid();
        self.monotonicity_violation_in(&grid)
            .map(|(a, b)| (self.point(a), self.point(b)))
    }

    pub(crate) fn monotonicity_violation_in(&self, grid: &Grid) -> Option<(usize, usize)> {
        let top = self.chain.top();
        for &a in &grid.scan {
            let x = grid.coords(a);
            for (k, &xk) in x.iter().enumerate().take(self.arity) {
                if xk < top {
                    let b = a + grid.stride(k);
                    if self.table[a] > self.table[b] {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    /// Sorted distinct values taken by `f`.
    pub fn range(&self) -> Vec<Elem> {
        let mut seen = vec![false; self.chain.size()];
        for &v in &self.table {
            seen[v as usize] = true;
        }
        self.chain.elements().filter(|&a| seen[a as usize]).collect()
    }

    /// Bounds of the convex hull of the range.
    pub fn range_hull(&self) -> (Elem, Elem) {
        let lo = *self.table.iter().min().expect("tables are nonempty");
        let hi = *self.table.iter().max().expect("tables are nonempty");
        (lo, hi)
    }

    /// `⟨c⟩_f = med(f(0⃗), c, f(1⃗))`.
    pub fn clamp_elem(&self, c: Elem) -> Result<Elem> {
        self.chain.check(c)?;
        Ok(self.clamp_unchecked(c))
    }

    #[inline]
    pub(crate) fn clamp_unchecked(&self, c: Elem) -> Elem {
        chain::median(self.at_bottom(), c, self.at_top())
    }

    /// Componentwise clamp of a tuple of any length.
    pub fn clamp_tuple(&self, x: &ChainTuple) -> Result<ChainTuple> {
        self.chain.ensure_same(x.chain())?;
        let comps = x.components().iter().map(|&a| self.clamp_unchecked(a)).collect();
        Ok(ChainTuple::from_parts(self.chain, comps))
    }

    /// `⟨g⟩_f`: the values of `g` clamped into `f`'s boundary interval.
    pub fn clamp_function(&self, g: &DiscreteFunction) -> Result<DiscreteFunction> {
        self.chain.ensure_same(g.chain)?;
        let table = g.table.iter().map(|&v| self.clamp_unchecked(v)).collect();
        Ok(DiscreteFunction { chain: g.chain, arity: g.arity, table })
    }

    /// `⟨φ⟩_f`
    pub fn clamp_map(&self, phi: &UnaryMap) -> Result<UnaryMap> {
        self.chain.ensure_same(phi.chain)?;
        let values = phi.values.iter().map(|&v| self.clamp_unchecked(v)).collect();
        Ok(UnaryMap { chain: phi.chain, values })
    }

    /// `x ↦ p(φ(x_1), ..., φ(x_n))`
    pub fn compose_unary(&self, phi: &UnaryMap) -> Result<DiscreteFunction> {
        self.chain.ensure_same(phi.chain)?;
        let grid = self.grid();
        let table = (0..self.table.len())
            .map(|idx| self.table[grid.map_index(idx, |a| phi.values[a as usize])])
            .collect();
        Ok(DiscreteFunction { chain: self.chain, arity: self.arity, table })
    }

    /// True iff `p ∘ φ` equals `self` pointwise, without building the table.
    pub(crate) fn is_composite_of(&self, grid: &Grid, p: &DiscreteFunction, phi: &[Elem]) -> bool {
        (0..self.table.len())
            .all(|idx| p.table[grid.map_index(idx, |a| phi[a as usize])] == self.table[idx])
    }

    /// Order dual `f^d(x) = top − f(top − x)`; an involution.
    pub fn dualize(&self) -> DiscreteFunction {
        // negating every coordinate maps lexicographic index i to len-1-i
        let top = self.chain.top();
        let table = self.table.iter().rev().map(|&v| top - v).collect();
        DiscreteFunction { chain: self.chain, arity: self.arity, table }
    }
}

impl fmt::Display for DiscreteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[m={} n={}:", self.chain.size(), self.arity)?;
        for v in &self.table {
            write!(f, " {v}")?;
        }
        f.write_str("]")
    }
}

/// A unary map `L → L`, used for `φ` and for diagonal sections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryMap {
    chain: Chain,
    values: Vec<Elem>,
}

impl UnaryMap {
    pub fn new(chain: Chain, values: Vec<Elem>) -> Result<Self> {
        if values.len() != chain.size() {
            return Err(Error::TableLength { expected: chain.size(), found: values.len() });
        }
        check_values(chain, &values)?;
        Ok(UnaryMap { chain, values })
    }

    pub fn identity(chain: Chain) -> Self {
        UnaryMap { chain, values: chain.elements().collect() }
    }

    pub fn constant(chain: Chain, c: Elem) -> Result<Self> {
        chain.check(c)?;
        Ok(UnaryMap { chain, values: vec![c; chain.size()] })
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn apply(&self, a: Elem) -> Result<Elem> {
        self.chain.check(a)?;
        Ok(self.values[a as usize])
    }

    #[inline]
    pub(crate) fn at(&self, a: Elem) -> Elem {
        self.values[a as usize]
    }

    /// First `a` with `φ(a) > φ(a + 1)`, reported as `(a, a + 1)`.
    pub fn monotonicity_violation(&self) -> Option<(Elem, Elem)> {
        self.values
            .windows(2)
            .position(|w| w[0] > w[1])
            .map(|a| (a as Elem, a as Elem + 1))
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    /// `self ∘ inner`, i.e. `a ↦ self(inner(a))`.
    pub fn compose(&self, inner: &UnaryMap) -> Result<UnaryMap> {
        self.chain.ensure_same(inner.chain)?;
        let values = inner.values.iter().map(|&a| self.values[a as usize]).collect();
        Ok(UnaryMap { chain: self.chain, values })
    }

    pub fn dual(&self) -> UnaryMap {
        let top = self.chain.top();
        let values = self.values.iter().rev().map(|&v| top - v).collect();
        UnaryMap { chain: self.chain, values }
    }

    /// The map viewed as a unary `DiscreteFunction`.
    pub fn as_function(&self) -> DiscreteFunction {
        DiscreteFunction { chain: self.chain, arity: 1, table: self.values.clone() }
    }

    /// Every nondecreasing map on `chain`, in lexicographic order of value lists.
    pub fn all_nondecreasing(chain: Chain) -> Vec<UnaryMap> {
        fn extend(chain: Chain, prefix: &mut Vec<Elem>, out: &mut Vec<UnaryMap>) {
            if prefix.len() == chain.size() {
                out.push(UnaryMap { chain, values: prefix.clone() });
                return;
            }
            let lo = prefix.last().copied().unwrap_or(0);
            for v in lo..=chain.top() {
                prefix.push(v);
                extend(chain, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(chain, &mut Vec::with_capacity(chain.size()), &mut out);
        out
    }
}

impl fmt::Display for UnaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        chain::write_tuple(f, &self.values)
    }
}

/// Restriction of a function to the vertex cube `{bottom, top}ⁿ`, indexed by
/// subset bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFunction {
    chain: Chain,
    arity: usize,
    values: Vec<Elem>,
}

impl VertexFunction {
    pub fn new(chain: Chain, arity: usize, values: Vec<Elem>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if arity > MAX_SUBSET_ARITY {
            return Err(Error::TooLarge { m: 2, n: arity });
        }
        if values.len() != 1 << arity {
            return Err(Error::TableLength { expected: 1 << arity, found: values.len() });
        }
        check_values(chain, &values)?;
        Ok(VertexFunction { chain, arity, values })
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn get(&self, mask: Mask) -> Elem {
        self.values[mask]
    }

    /// First covering pair `I ⊂ J = I ∪ {i}` with `g(I) > g(J)`.
    pub fn isotone_violation(&self) -> Option<(Mask, Mask)> {
        isotone_violation(&self.values, self.arity)
    }

    pub fn is_isotone(&self) -> bool {
        self.isotone_violation().is_none()
    }
}

pub(crate) fn isotone_violation(values: &[Elem], arity: usize) -> Option<(Mask, Mask)> {
    for lower in 0..values.len() {
        for i in 0..arity {
            let upper = lower | 1 << i;
            if upper != lower && values[lower] > values[upper] {
                return Some((lower, upper));
            }
        }
    }
    None
}
