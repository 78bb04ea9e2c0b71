//! Finite bounded chains `L = {0, ..., m-1}` and tuples over them.
//!
//! Elements are dense ranks: `0` is the bottom, `m - 1` the top, meet is
//! `min` and join is `max`. Every finite chain is order-isomorphic to one of
//! these, so nothing else is needed in the core.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a finite chain, identified with its rank.
pub type Elem = u8;

/// A subset of `[n]` encoded as a bitmask (bit `i` set iff coordinate `i` is in the set).
pub type Mask = usize;

pub const MAX_CHAIN_SIZE: usize = 256;

/// Largest arity for which subset-indexed objects are materialized.
pub const MAX_SUBSET_ARITY: usize = 20;

#[inline]
pub fn meet(a: Elem, b: Elem) -> Elem {
    a.min(b)
}

#[inline]
pub fn join(a: Elem, b: Elem) -> Elem {
    a.max(b)
}

/// Ternary median `(a ∨ b) ∧ (b ∨ c) ∧ (c ∨ a)`.
#[inline]
pub fn median(a: Elem, b: Elem, c: Elem) -> Elem {
    meet(meet(join(a, b), join(b, c)), join(c, a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    size: u16,
}

impl Chain {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::ChainTooSmall(size));
        }
        if size > MAX_CHAIN_SIZE {
            return Err(Error::ChainTooLarge(size));
        }
        Ok(Chain { size: size as u16 })
    }

    pub fn size(self) -> usize {
        self.size as usize
    }

    pub fn bottom(self) -> Elem {
        0
    }

    pub fn top(self) -> Elem {
        (self.size - 1) as Elem
    }

    pub fn contains(self, a: Elem) -> bool {
        (a as usize) < self.size()
    }

    pub fn check(self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ValueOutOfRange { value: a as usize, size: self.size() })
        }
    }

    /// Converts a raw integer into an element, rejecting values outside the chain.
    pub fn elem(self, value: usize) -> Result<Elem> {
        if value < self.size() {
            Ok(value as Elem)
        } else {
            Err(Error::ValueOutOfRange { value, size: self.size() })
        }
    }

    pub fn elements(self) -> impl DoubleEndedIterator<Item = Elem> + Clone {
        (0..self.size).map(|a| a as Elem)
    }

    /// Order reversal `a ↦ top − a`.
    pub fn neg(self, a: Elem) -> Elem {
        self.top() - a
    }

    pub fn med3(self, a: Elem, b: Elem, c: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        self.check(c)?;
        Ok(median(a, b, c))
    }

    pub(crate) fn ensure_same(self, other: Chain) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ChainMismatch { expected: self.size(), found: other.size() })
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.size)
    }
}

/// A point of `Lⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainTuple {
    chain: Chain,
    comps: Vec<Elem>,
}

impl ChainTuple {
    pub fn new(chain: Chain, comps: Vec<Elem>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::ZeroArity);
        }
        for &a in &comps {
            chain.check(a)?;
        }
        Ok(ChainTuple { chain, comps })
    }

    pub(crate) fn from_parts(chain: Chain, comps: Vec<Elem>) -> Self {
        debug_assert!(!comps.is_empty() && comps.iter().all(|&a| chain.contains(a)));
        ChainTuple { chain, comps }
    }

    pub fn constant(chain: Chain, arity: usize, c: Elem) -> Result<Self> {
        chain.check(c)?;
        ChainTuple::new(chain, vec![c; arity])
    }

    pub fn bottom(chain: Chain, arity: usize) -> Result<Self> {
        ChainTuple::constant(chain, arity, chain.bottom())
    }

    pub fn top(chain: Chain, arity: usize) -> Result<Self> {
        ChainTuple::constant(chain, arity, chain.top())
    }

    /// The characteristic vertex `e_I`: top on `I`, bottom elsewhere.
    pub fn vertex(chain: Chain, arity: usize, mask: Mask) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(ChainTuple { chain, comps: vertex_components(chain, arity, mask) })
    }

    pub fn chain(&self) -> Chain {
        self.chain
    }

    pub fn arity(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Elem] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Elem> {
        self.comps
    }

    pub fn get(&self, i: usize) -> Elem {
        self.comps[i]
    }

    fn ensure_compatible(&self, other: &ChainTuple) -> Result<()> {
        self.chain.ensure_same(other.chain)?;
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: other.arity() });
        }
        Ok(())
    }

    fn zip_with(&self, other: &ChainTuple, op: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        self.ensure_compatible(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(&a, &b)| op(a, b)).collect();
        Ok(ChainTuple { chain: self.chain, comps })
    }

    fn map(&self, op: impl Fn(Elem) -> Elem) -> Self {
        ChainTuple { chain: self.chain, comps: self.comps.iter().map(|&a| op(a)).collect() }
    }

    pub fn meet(&self, other: &ChainTuple) -> Result<Self> {
        self.zip_with(other, meet)
    }

    pub fn join(&self, other: &ChainTuple) -> Result<Self> {
        self.zip_with(other, join)
    }

    /// `x ∧ c`
    pub fn cut_meet(&self, c: Elem) -> Result<Self> {
        self.chain.check(c)?;
        Ok(self.map(|a| meet(a, c)))
    }

    /// `x ∨ c`
    pub fn cut_join(&self, c: Elem) -> Result<Self> {
        self.chain.check(c)?;
        Ok(self.map(|a| join(a, c)))
    }

    /// `[x]_c`: components at or below `c` drop to bottom.
    pub fn upper_part(&self, c: Elem) -> Result<Self> {
        self.chain.check(c)?;
        let bottom = self.chain.bottom();
        Ok(self.map(|a| if a <= c { bottom } else { a }))
    }

    /// `[x]^c`: components at or above `c` rise to top.
    pub fn lower_part(&self, c: Elem) -> Result<Self> {
        self.chain.check(c)?;
        let top = self.chain.top();
        Ok(self.map(|a| if a >= c { top } else { a }))
    }

    /// `x_k^c`: coordinate `k` replaced by `c`.
    pub fn pin(&self, k: usize, c: Elem) -> Result<Self> {
        self.chain.check(c)?;
        if k >= self.arity() {
            return Err(Error::CoordinateOutOfRange { index: k, arity: self.arity() });
        }
        let mut comps = self.comps.clone();
        comps[k] = c;
        Ok(ChainTuple { chain: self.chain, comps })
    }

    pub fn is_below(&self, other: &ChainTuple) -> Result<bool> {
        self.ensure_compatible(other)?;
        Ok(self.comps.iter().zip(&other.comps).all(|(a, b)| a <= b))
    }

    pub fn is_comonotonic(&self, other: &ChainTuple) -> Result<bool> {
        self.ensure_compatible(other)?;
        Ok(comonotonic(&self.comps, &other.comps))
    }

    pub fn sorting_permutation(&self) -> Permutation {
        Permutation { images: sorting_order(&self.comps) }
    }

    /// Componentwise order reversal; an involution.
    pub fn dual(&self) -> Self {
        let chain = self.chain;
        self.map(|a| chain.neg(a))
    }
}

impl fmt::Display for ChainTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.comps)
    }
}

pub(crate) fn write_tuple(f: &mut impl fmt::Write, comps: &[Elem]) -> fmt::Result {
    f.write_char('(')?;
    for (i, a) in comps.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{a}")?;
    }
    f.write_char(')')
}

pub(crate) fn tuple_string(comps: &[Elem]) -> String {
    let mut s = String::new();
    write_tuple(&mut s, comps).expect("writing to a String");
    s
}

pub(crate) fn vertex_components(chain: Chain, arity: usize, mask: Mask) -> Vec<Elem> {
    (0..arity)
        .map(|i| if mask >> i & 1 == 1 { chain.top() } else { chain.bottom() })
        .collect()
}

/// Two tuples share a standard simplex iff no pair of coordinates is ordered
/// strictly one way in `x` and strictly the other way in `y`.
pub(crate) fn comonotonic(x: &[Elem], y: &[Elem]) -> bool {
    let n = x.len();
    for i in 0..n {
        for j in 0..n {
            if x[i] < x[j] && y[i] > y[j] {
                return false;
            }
        }
    }
    true
}

/// Stable ascending order of coordinates (ties by index).
pub(crate) fn sorting_order(x: &[Elem]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by_key(|&i| x[i]);
    order
}

/// A bijection of `{0, ..., n-1}`; `images[i]` is `σ(i+1) - 1` in 1-based notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(n));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// All permutations of `{0, ..., n-1}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `x_{σ(1)} ≤ ... ≤ x_{σ(n)}`, i.e. `x` lies in the simplex of `σ`.
    pub fn sorts(&self, x: &[Elem]) -> bool {
        self.images.windows(2).all(|w| x[w[0]] <= x[w[1]])
    }

    /// `S↑(i) = {σ(i), ..., σ(n-1)}` (0-based); `upper_set(n)` is empty.
    pub fn upper_set(&self, i: usize) -> Mask {
        self.images[i.min(self.arity())..].iter().fold(0, |m, &k| m | 1 << k)
    }

    /// `S↓(i) = {σ(0), ..., σ(i-1)}` (0-based); `lower_set(0)` is empty.
    pub fn lower_set(&self, i: usize) -> Mask {
        self.images[..i.min(self.arity())].iter().fold(0, |m, &k| m | 1 << k)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "({})", one.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(m: usize) -> Chain {
        Chain::new(m).unwrap()
    }

    fn t(m: usize, comps: &[Elem]) -> ChainTuple {
        ChainTuple::new(l(m), comps.to_vec()).unwrap()
    }

    fn all_tuples(m: usize, n: usize) -> Vec<ChainTuple> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<Elem>| {
                    (0..m as Elem).map(move |a| {
                        let mut q = p.clone();
                        q.push(a);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|c| t(m, &c)).collect()
    }

    #[test]
    fn rejects_degenerate_chains() {
        assert_eq!(Chain::new(1), Err(Error::ChainTooSmall(1)));
        assert_eq!(Chain::new(0), Err(Error::ChainTooSmall(0)));
        assert!(Chain::new(257).is_err());
        assert_eq!(Chain::new(256).unwrap().top(), 255);
    }

    #[test]
    fn distributive_laws_hold_on_small_chains() {
        for m in 2..=5 {
            let c = l(m);
            for a in c.elements() {
                for b in c.elements() {
                    for d in c.elements() {
                        assert_eq!(meet(a, join(b, d)), join(meet(a, b), meet(a, d)));
                        assert_eq!(join(a, meet(b, d)), meet(join(a, b), join(a, d)));
                    }
                    assert_eq!(meet(a, join(a, b)), a);
                    assert_eq!(join(a, meet(a, b)), a);
                }
            }
        }
    }

    #[test]
    fn componentwise_meet_and_join() {
        let x = t(3, &[2, 0]);
        let y = t(3, &[1, 1]);
        assert_eq!(x.meet(&y).unwrap(), t(3, &[1, 0]));
        assert_eq!(x.join(&y).unwrap(), t(3, &[2, 1]));
        for z in all_tuples(3, 2) {
            assert_eq!(z.meet(&z).unwrap(), z);
        }
        assert!(matches!(x.meet(&t(3, &[1, 1, 1])), Err(Error::ArityMismatch { .. })));
        assert!(matches!(x.meet(&t(4, &[1, 1])), Err(Error::ChainMismatch { .. })));
    }

    #[test]
    fn med3_examples() {
        let c = l(3);
        assert_eq!(c.med3(0, 1, 2).unwrap(), 1);
        assert_eq!(c.med3(2, 2, 0).unwrap(), 2);
        assert_eq!(c.med3(2, 0, 1).unwrap(), 1);
        assert!(c.med3(3, 0, 1).is_err());
    }

    #[test]
    fn cuts_and_parts() {
        let x = t(3, &[2, 0, 1]);
        assert_eq!(x.cut_meet(1).unwrap(), t(3, &[1, 0, 1]));
        assert_eq!(x.cut_join(1).unwrap(), t(3, &[2, 1, 1]));
        assert_eq!(x.cut_meet(2).unwrap(), x);
        assert_eq!(x.upper_part(1).unwrap(), t(3, &[2, 0, 0]));
        assert_eq!(x.lower_part(1).unwrap(), t(3, &[2, 0, 2]));
        assert_eq!(x.upper_part(2).unwrap(), t(3, &[0, 0, 0]));
    }

    #[test]
    fn horizontal_decompositions_reassemble() {
        for m in 2..=4 {
            for n in 1..=3 {
                for x in all_tuples(m, n) {
                    for c in l(m).elements() {
                        let up = x.cut_meet(c).unwrap().join(&x.upper_part(c).unwrap()).unwrap();
                        assert_eq!(up, x);
                        let down = x.cut_join(c).unwrap().meet(&x.lower_part(c).unwrap()).unwrap();
                        assert_eq!(down, x);
                        let a = x.cut_join(c).unwrap();
                        let b = x.lower_part(c).unwrap();
                        assert!(a.is_comonotonic(&b).unwrap());
                    }
                }
            }
        }
    }

    fn comonotonic_by_search(x: &ChainTuple, y: &ChainTuple) -> bool {
        Permutation::all(x.arity())
            .iter()
            .any(|s| s.sorts(x.components()) && s.sorts(y.components()))
    }

    #[test]
    fn comonotonic_examples() {
        assert!(t(3, &[0, 1, 2]).is_comonotonic(&t(3, &[1, 1, 2])).unwrap());
        assert!(!t(3, &[0, 2]).is_comonotonic(&t(3, &[2, 0])).unwrap());
        let x = t(3, &[1, 1]);
        let y = t(3, &[2, 0]);
        assert!(x.is_comonotonic(&y).unwrap());
        // σ = (2,1) in 1-based notation sorts both
        let s = Permutation::new(vec![1, 0]).unwrap();
        assert!(s.sorts(x.components()) && s.sorts(y.components()));
    }

    #[test]
    fn inversion_test_matches_permutation_search() {
        for (m, n) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
            let all = all_tuples(m, n);
            for x in &all {
                for y in &all {
                    assert_eq!(
                        x.is_comonotonic(y).unwrap(),
                        comonotonic_by_search(x, y),
                        "{x} {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn comonotonicity_is_reflexive_symmetric_not_transitive() {
        let all = all_tuples(3, 2);
        let mut witness = None;
        for x in &all {
            assert!(x.is_comonotonic(x).unwrap());
            assert!(x.dual().is_comonotonic(&x.dual()).unwrap());
            for y in &all {
                let xy = x.is_comonotonic(y).unwrap();
                assert_eq!(xy, y.is_comonotonic(x).unwrap());
                assert_eq!(xy, x.dual().is_comonotonic(&y.dual()).unwrap());
                if !xy || witness.is_some() {
                    continue;
                }
                for z in &all {
                    if y.is_comonotonic(z).unwrap() && !x.is_comonotonic(z).unwrap() {
                        witness = Some((x.clone(), y.clone(), z.clone()));
                        break;
                    }
                }
            }
        }
        let (x, y, z) = witness.expect("comonotonicity is not transitive");
        // constant tuples are comonotonic with everything
        assert_eq!((x, y, z), (t(3, &[0, 1]), t(3, &[0, 0]), t(3, &[1, 0])));
    }

    #[test]
    fn sorting_permutation_is_stable() {
        assert_eq!(t(3, &[2, 0, 1]).sorting_permutation().one_based(), vec![2, 3, 1]);
        assert_eq!(t(3, &[1, 1]).sorting_permutation(), Permutation::identity(2));
        assert_eq!(t(3, &[0, 1, 1, 2]).sorting_permutation(), Permutation::identity(4));
        for x in all_tuples(3, 3) {
            assert!(x.sorting_permutation().sorts(x.components()));
        }
    }

    #[test]
    fn simplex_subsets() {
        let s = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(s.upper_set(0), 0b111);
        assert_eq!(s.upper_set(1), 0b101);
        assert_eq!(s.upper_set(2), 0b001);
        assert_eq!(s.upper_set(3), 0);
        assert_eq!(s.lower_set(0), 0);
        assert_eq!(s.lower_set(1), 0b010);
        assert_eq!(s.lower_set(3), 0b111);
        assert_eq!(Permutation::all(3).len(), 6);
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn dual_tuple() {
        let x = t(3, &[2, 0, 1]);
        assert_eq!(x.dual(), t(3, &[0, 2, 1]));
        assert_eq!(x.dual().dual(), x);
        assert_eq!(ChainTuple::bottom(l(3), 2).unwrap().dual(), ChainTuple::top(l(3), 2).unwrap());
    }

    #[test]
    fn vertices_and_pins() {
        assert_eq!(ChainTuple::vertex(l(3), 3, 0b101).unwrap(), t(3, &[2, 0, 2]));
        assert_eq!(t(3, &[1, 1]).pin(0, 2).unwrap(), t(3, &[2, 1]));
        assert!(t(3, &[1, 1]).pin(2, 0).is_err());
        assert!(ChainTuple::new(l(3), vec![3]).is_err());
        assert!(ChainTuple::new(l(3), vec![]).is_err());
    }
}
