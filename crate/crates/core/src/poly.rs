//! Lattice polynomial functions over a chain.
//!
//! A polynomial function is fixed by a set function `α: 2^[n] → L` through
//! its disjunctive normal form
//!
//! ```text
//! p(x) = ⋁_I ( α(I) ∧ ⋀_{i∈I} x_i )          (empty meet = top)
//! ```
//!
//! or dually by `β` through the conjunctive normal form. Among all `α`
//! representing `p`, exactly one is isotone: `α_p(I) = p(e_I)`. This module
//! has the four evaluators (DNF, CNF, simplex, median recursion), recognition,
//! extension from the vertex cube, and the Sugeno-integral helpers.

use std::fmt;

use crate::chain::{self, Chain, ChainTuple, Elem, Mask, MAX_SUBSET_ARITY};
use crate::error::{Error, Result};
use crate::func::{self, DiscreteFunction, VertexFunction};
use crate::grid::Grid;

/// A map `2^[n] → L` indexed by subset bitmask; holds DNF/CNF coefficients
/// and capacities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFunction {
    chain: Chain,
    arity: usize,
    values: Vec<Elem>,
}

impl SetFunction {
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
        for &v in &values {
            chain.check(v)?;
        }
        Ok(SetFunction { chain, arity, values })
    }

    pub fn from_fn(chain: Chain, arity: usize, op: impl Fn(Mask) -> Elem) -> Result<Self> {
        if arity > MAX_SUBSET_ARITY {
            return Err(Error::TooLarge { m: 2, n: arity });
        }
        Self::new(chain, arity, (0..1usize << arity).map(op).collect())
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

    pub fn full_mask(&self) -> Mask {
        (1 << self.arity) - 1
    }

    pub fn isotone_violation(&self) -> Option<(Mask, Mask)> {
        func::isotone_violation(&self.values, self.arity)
    }

    pub fn is_isotone(&self) -> bool {
        self.isotone_violation().is_none()
    }

    /// First covering pair `I ⊂ J` with `β(I) < β(J)`.
    pub fn antitone_violation(&self) -> Option<(Mask, Mask)> {
        for lower in 0..self.values.len() {
            for i in 0..self.arity {
                let upper = lower | 1 << i;
                if upper != lower && self.values[lower] < self.values[upper] {
                    return Some((lower, upper));
                }
            }
        }
        None
    }

    pub fn is_antitone(&self) -> bool {
        self.antitone_violation().is_none()
    }

    /// Reads a vertex restriction as DNF coefficients.
    pub fn from_vertices(g: &VertexFunction) -> Self {
        SetFunction { chain: g.chain(), arity: g.arity(), values: g.values().to_vec() }
    }

    /// Every isotone set function on `arity` variables, in lexicographic order
    /// of value lists (mask 0 most significant).
    pub fn all_isotone(chain: Chain, arity: usize) -> Result<Vec<SetFunction>> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if arity > 6 {
            return Err(Error::TooLarge { m: 2, n: arity });
        }
        fn extend(chain: Chain, arity: usize, prefix: &mut Vec<Elem>, out: &mut Vec<SetFunction>) {
            let mask = prefix.len();
            if mask == 1 << arity {
                out.push(SetFunction { chain, arity, values: prefix.clone() });
                return;
            }
            let lo = (0..arity)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| prefix[mask & !(1 << i)])
                .max()
                .unwrap_or(0);
            for v in lo..=chain.top() {
                prefix.push(v);
                extend(chain, arity, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(chain, arity, &mut Vec::new(), &mut out);
        Ok(out)
    }

    fn ensure_point(&self, x: &ChainTuple) -> Result<()> {
        self.chain.ensure_same(x.chain())?;
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: x.arity() });
        }
        Ok(())
    }
}

impl fmt::Display for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        chain::write_tuple(f, &self.values)
    }
}

/// An isotone set function with `μ(∅) = bottom` and `μ([n]) = top`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Capacity(SetFunction);

impl Capacity {
    pub fn new(mu: SetFunction) -> Result<Self> {
        if mu.get(0) != mu.chain.bottom() {
            return Err(Error::NotCapacity("value at the empty set is not bottom".into()));
        }
        if mu.get(mu.full_mask()) != mu.chain.top() {
            return Err(Error::NotCapacity("value at the full set is not top".into()));
        }
        if let Some((i, j)) = mu.isotone_violation() {
            return Err(Error::NotCapacity(format!("μ({i:#b}) > μ({j:#b})")));
        }
        Ok(Capacity(mu))
    }

    pub fn set_function(&self) -> &SetFunction {
        &self.0
    }

    pub fn into_set_function(self) -> SetFunction {
        self.0
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// DNF value at a raw point.
pub(crate) fn dnf_at(alpha: &[Elem], top: Elem, x: &[Elem]) -> Elem {
    let mut meets = vec![top; alpha.len()];
    let mut acc = alpha[0];
    for mask in 1..alpha.len() {
        let low = mask.trailing_zeros() as usize;
        meets[mask] = chain::meet(meets[mask & (mask - 1)], x[low]);
        acc = chain::join(acc, chain::meet(alpha[mask], meets[mask]));
    }
    acc
}

/// CNF value at a raw point.
pub(crate) fn cnf_at(beta: &[Elem], x: &[Elem]) -> Elem {
    let mut joins = vec![0 as Elem; beta.len()];
    let mut acc = beta[0];
    for mask in 1..beta.len() {
        let low = mask.trailing_zeros() as usize;
        joins[mask] = chain::join(joins[mask & (mask - 1)], x[low]);
        acc = chain::meet(acc, chain::join(beta[mask], joins[mask]));
    }
    acc
}

/// `⋁_I (α(I) ∧ ⋀_{i∈I} x_i)`
pub fn dnf_eval(alpha: &SetFunction, x: &ChainTuple) -> Result<Elem> {
    alpha.ensure_point(x)?;
    Ok(dnf_at(&alpha.values, alpha.chain.top(), x.components()))
}

/// `⋀_I (β(I) ∨ ⋁_{i∈I} x_i)`
pub fn cnf_eval(beta: &SetFunction, x: &ChainTuple) -> Result<Elem> {
    beta.ensure_point(x)?;
    Ok(cnf_at(&beta.values, x.components()))
}

/// Full table of the DNF of `α`.
pub fn dnf_table(alpha: &SetFunction) -> Result<DiscreteFunction> {
    let top = alpha.chain.top();
    DiscreteFunction::from_fn(alpha.chain, alpha.arity, |x| dnf_at(&alpha.values, top, x))
}

/// Full table of the CNF of `β`.
pub fn cnf_table(beta: &SetFunction) -> Result<DiscreteFunction> {
    DiscreteFunction::from_fn(beta.chain, beta.arity, |x| cnf_at(&beta.values, x))
}

/// `α_f(I) = f(e_I)`
pub fn canonical_alpha(f: &DiscreteFunction) -> Result<SetFunction> {
    Ok(SetFunction::from_vertices(&f.vertex_restriction()?))
}

/// `β_f(I) = f(e_{[n]∖I})`
pub fn canonical_beta(f: &DiscreteFunction) -> Result<SetFunction> {
    let alpha = canonical_alpha(f)?;
    let full = alpha.full_mask();
    let values = (0..=full).map(|mask| alpha.values[full ^ mask]).collect();
    Ok(SetFunction { chain: alpha.chain, arity: alpha.arity, values })
}

/// The unique polynomial function agreeing with `g` on the vertex cube.
pub fn extend_from_vertices(g: &VertexFunction) -> Result<DiscreteFunction> {
    if let Some((lower, upper)) = g.isotone_violation() {
        return Err(Error::NotIsotone { lower, upper });
    }
    dnf_table(&SetFunction::from_vertices(g))
}

/// Simplex form `⋁_{i=1}^{n+1} (α(S↑_σ(i)) ∧ x_{σ(i)})` with `x_{σ(n+1)} = top`,
/// where `σ` is the stable sorting permutation of `x`. Needs isotone `α`.
pub fn simplex_eval(alpha: &SetFunction, x: &ChainTuple) -> Result<Elem> {
    alpha.ensure_point(x)?;
    if let Some((lower, upper)) = alpha.isotone_violation() {
        return Err(Error::NotIsotone { lower, upper });
    }
    let sigma = x.sorting_permutation();
    let n = alpha.arity;
    let top = alpha.chain.top();
    Ok((0..=n)
        .map(|i| {
            let xi = if i < n { x.get(sigma.images()[i]) } else { top };
            chain::meet(alpha.get(sigma.upper_set(i)), xi)
        })
        .fold(alpha.chain.bottom(), chain::join))
}

/// Simplex form of the CNF, `⋀_{i=0}^{n} (β(S↓_σ(i)) ∨ x_{σ(i)})` with
/// `x_{σ(0)} = bottom`. Needs antitone `β`.
pub fn simplex_cnf_eval(beta: &SetFunction, x: &ChainTuple) -> Result<Elem> {
    beta.ensure_point(x)?;
    if let Some((lower, upper)) = beta.antitone_violation() {
        return Err(Error::NotAntitone { lower, upper });
    }
    let sigma = x.sorting_permutation();
    let n = beta.arity;
    Ok((0..=n)
        .map(|i| {
            let xi = if i == 0 { beta.chain.bottom() } else { x.get(sigma.images()[i - 1]) };
            chain::join(beta.get(sigma.lower_set(i)), xi)
        })
        .fold(beta.chain.top(), chain::meet))
}

/// Median recursion `f(x) = med(f(x_k^0), x_k, f(x_k^1))` on `k = 1, ..., n`,
/// bottoming out on the vertex cube. Equals `f` exactly when `f` is polynomial.
pub fn median_eval(f: &DiscreteFunction, x: &ChainTuple) -> Result<Elem> {
    f.eval(x)?;
    let mut point = x.components().to_vec();
    Ok(median_rec(f, &mut point, 0))
}

fn median_rec(f: &DiscreteFunction, point: &mut [Elem], k: usize) -> Elem {
    if k == point.len() {
        return f.at(point);
    }
    let xk = point[k];
    point[k] = f.chain().bottom();
    let low = median_rec(f, point, k + 1);
    point[k] = f.chain().top();
    let high = median_rec(f, point, k + 1);
    point[k] = xk;
    chain::median(low, xk, high)
}

/// Outcome of polynomial recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolynomialCheck {
    /// `f` equals the DNF of its canonical coefficients.
    Polynomial(SetFunction),
    /// First point where the DNF of `α_f` departs from `f`.
    NotPolynomial { witness: ChainTuple, dnf_value: Elem, actual: Elem },
}

impl PolynomialCheck {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, PolynomialCheck::Polynomial(_))
    }
}

/// Tests `f = DNF(α_f)` pointwise, scanning with the first coordinate fastest.
pub fn is_polynomial(f: &DiscreteFunction) -> Result<PolynomialCheck> {
    let grid = f.grid();
    let alpha = canonical_alpha(f)?;
    Ok(match polynomial_mismatch(f, &alpha, &grid) {
        None => PolynomialCheck::Polynomial(alpha),
        Some((idx, dnf_value)) => PolynomialCheck::NotPolynomial {
            witness: f.point(idx),
            dnf_value,
            actual: f.at_index(idx),
        },
    })
}

pub(crate) fn polynomial_mismatch(
    f: &DiscreteFunction,
    alpha: &SetFunction,
    grid: &Grid,
) -> Option<(usize, Elem)> {
    let top = f.chain().top();
    grid.scan.iter().find_map(|&idx| {
        let v = dnf_at(&alpha.values, top, grid.coords(idx));
        (v != f.at_index(idx)).then_some((idx, v))
    })
}

pub(crate) fn is_polynomial_in(f: &DiscreteFunction, grid: &Grid) -> bool {
    match canonical_alpha(f) {
        Ok(alpha) => polynomial_mismatch(f, &alpha, grid).is_none(),
        Err(_) => false,
    }
}

/// The Sugeno integral of `μ`, i.e. the DNF with coefficients `μ`.
pub fn sugeno_from_capacity(mu: &Capacity) -> DiscreteFunction {
    dnf_table(&mu.0).expect("capacity arity is bounded")
}

/// A capacity `μ` whose Sugeno integral `q` satisfies `⟨q⟩_p = p`.
///
/// `μ` keeps `α_p` on proper nonempty subsets and pins the empty and full
/// sets to bottom and top. Since `α_p` is isotone this stays isotone. The
/// identity is checked on every point before returning.
pub fn sugeno_normalize(p: &DiscreteFunction) -> Result<Capacity> {
    let alpha = match is_polynomial(p)? {
        PolynomialCheck::Polynomial(alpha) => alpha,
        PolynomialCheck::NotPolynomial { witness, .. } => {
            return Err(Error::NotPolynomial { witness: witness.into_components() })
        }
    };
    let full = alpha.full_mask();
    let chain = alpha.chain;
    let mu = SetFunction::from_fn(chain, alpha.arity, |mask| {
        if mask == 0 {
            chain.bottom()
        } else if mask == full {
            chain.top()
        } else {
            alpha.values[mask]
        }
    })?;
    let mu = Capacity::new(mu)?;
    let q = sugeno_from_capacity(&mu);
    if let Some(idx) = (0..p.len()).find(|&i| p.clamp_unchecked(q.at_index(i)) != p.at_index(i)) {
        return Err(Error::ConstructionFailed(format!(
            "⟨q⟩_p differs from p at {}",
            p.point(idx)
        )));
    }
    Ok(mu)
}

/// Both sides of the homogeneity identities for a polynomial `p`:
/// `p(x ∨ c) = p(x) ∨ ⟨c⟩_p` and `p(x ∧ c) = p(x) ∧ ⟨c⟩_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomogeneityShift {
    pub join_lhs: Elem,
    pub join_rhs: Elem,
    pub meet_lhs: Elem,
    pub meet_rhs: Elem,
}

impl HomogeneityShift {
    pub fn holds(&self) -> bool {
        self.join_lhs == self.join_rhs && self.meet_lhs == self.meet_rhs
    }
}

pub fn homogeneity_shift(p: &DiscreteFunction, x: &ChainTuple, c: Elem) -> Result<HomogeneityShift> {
    if let PolynomialCheck::NotPolynomial { witness, .. } = is_polynomial(p)? {
        return Err(Error::NotPolynomial { witness: witness.into_components() });
    }
    let px = p.eval(x)?;
    let clamped = p.clamp_elem(c)?;
    Ok(HomogeneityShift {
        join_lhs: p.eval(&x.cut_join(c)?)?,
        join_rhs: chain::join(px, clamped),
        meet_lhs: p.eval(&x.cut_meet(c)?)?,
        meet_rhs: chain::meet(px, clamped),
    })
}

/// `v_0 ∨ ⋁_i (v_i ∧ x_i)`; `weights = [v_0, v_1, ..., v_n]`.
pub fn weighted_maximum(chain: Chain, weights: &[Elem]) -> Result<DiscreteFunction> {
    let (&v0, v) = weights.split_first().ok_or(Error::ZeroArity)?;
    for &w in weights {
        chain.check(w)?;
    }
    DiscreteFunction::from_fn(chain, v.len(), |x| {
        x.iter().zip(v).fold(v0, |acc, (&xi, &vi)| chain::join(acc, chain::meet(vi, xi)))
    })
}

/// `w_0 ∧ ⋀_i (w_i ∨ x_i)`; `weights = [w_0, w_1, ..., w_n]`.
pub fn weighted_minimum(chain: Chain, weights: &[Elem]) -> Result<DiscreteFunction> {
    let (&w0, w) = weights.split_first().ok_or(Error::ZeroArity)?;
    for &v in weights {
        chain.check(v)?;
    }
    DiscreteFunction::from_fn(chain, w.len(), |x| {
        x.iter().zip(w).fold(w0, |acc, (&xi, &wi)| chain::meet(acc, chain::join(wi, xi)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(m: usize) -> Chain {
        Chain::new(m).unwrap()
    }

    fn sf(m: usize, n: usize, v: &[Elem]) -> SetFunction {
        SetFunction::new(l(m), n, v.to_vec()).unwrap()
    }

    fn tup(m: usize, c: &[Elem]) -> ChainTuple {
        ChainTuple::new(l(m), c.to_vec()).unwrap()
    }

    /// α for the ternary median on a 3-chain: pairs and the full set map to top.
    fn alpha_med() -> SetFunction {
        sf(3, 3, &[0, 0, 0, 2, 0, 2, 2, 2])
    }

    #[test]
    fn dnf_examples() {
        assert_eq!(dnf_eval(&alpha_med(), &tup(3, &[0, 1, 2])).unwrap(), 1);
        let zero = sf(3, 2, &[0, 0, 0, 0]);
        let c = sf(3, 2, &[1, 0, 0, 0]);
        for x in [[0, 0], [2, 1], [2, 2]] {
            assert_eq!(dnf_eval(&zero, &tup(3, &x)).unwrap(), 0);
            assert_eq!(dnf_eval(&c, &tup(3, &x)).unwrap(), 1);
        }
        assert!(dnf_eval(&zero, &tup(3, &[0])).is_err());
    }

    #[test]
    fn cnf_examples() {
        let med = DiscreteFunction::median3(l(3)).unwrap();
        let beta = canonical_beta(&med).unwrap();
        assert_eq!(beta.values(), &[2, 2, 2, 0, 2, 0, 0, 0]);
        assert_eq!(cnf_eval(&beta, &tup(3, &[0, 0, 2])).unwrap(), 0);
        assert_eq!(cnf_eval(&beta, &tup(3, &[0, 1, 2])).unwrap(), 1);
        let top = sf(3, 2, &[2, 2, 2, 2]);
        assert_eq!(cnf_eval(&top, &tup(3, &[0, 0])).unwrap(), 2);
    }

    #[test]
    fn canonical_alpha_examples() {
        // x1 ∨ (x1 ∧ x2) has the same canonical coefficients as x1
        let c = l(2);
        let f = DiscreteFunction::from_fn(c, 2, |x| chain::join(x[0], chain::meet(x[0], x[1]))).unwrap();
        assert_eq!(canonical_alpha(&f).unwrap().values(), &[0, 1, 0, 1]);
        assert_eq!(
            canonical_alpha(&f).unwrap(),
            canonical_alpha(&DiscreteFunction::projection(c, 2, 0).unwrap()).unwrap()
        );
        let join = DiscreteFunction::lattice_join(c, 2).unwrap();
        assert_eq!(canonical_alpha(&join).unwrap().values(), &[0, 1, 1, 1]);
        let med = DiscreteFunction::median3(c).unwrap();
        let a = canonical_alpha(&med).unwrap();
        for mask in [0b011, 0b101, 0b110] {
            assert_eq!(a.get(mask), 1);
        }
    }

    #[test]
    fn extension_examples() {
        let c = l(2);
        let g = VertexFunction::new(c, 2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(extend_from_vertices(&g).unwrap().table(), &[0, 0, 1, 1]);
        let bad = VertexFunction::new(c, 2, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(extend_from_vertices(&bad), Err(Error::NotIsotone { lower: 0b01, upper: 0b11 }));
        let k = VertexFunction::new(l(3), 2, vec![1; 4]).unwrap();
        assert_eq!(extend_from_vertices(&k).unwrap(), DiscreteFunction::constant(l(3), 2, 1).unwrap());
    }

    #[test]
    fn simplex_examples() {
        let a = alpha_med();
        assert_eq!(simplex_eval(&a, &tup(3, &[0, 1, 2])).unwrap(), 1);
        let proj = canonical_alpha(&DiscreteFunction::projection(l(3), 2, 0).unwrap()).unwrap();
        assert_eq!(simplex_eval(&proj, &tup(3, &[2, 0])).unwrap(), 2);
        assert_eq!(dnf_eval(&proj, &tup(3, &[2, 0])).unwrap(), 2);
        let k = sf(3, 2, &[1, 1, 1, 1]);
        assert_eq!(simplex_eval(&k, &tup(3, &[2, 0])).unwrap(), 1);
        assert!(matches!(
            simplex_eval(&sf(3, 2, &[0, 2, 0, 1]), &tup(3, &[0, 0])),
            Err(Error::NotIsotone { .. })
        ));
        assert!(matches!(
            simplex_cnf_eval(&sf(3, 2, &[0, 2, 0, 1]), &tup(3, &[0, 0])),
            Err(Error::NotAntitone { .. })
        ));
    }

    #[test]
    fn median_recursion_examples() {
        let c = l(3);
        let join = DiscreteFunction::lattice_join(c, 2).unwrap();
        assert_eq!(median_eval(&join, &tup(3, &[1, 2])).unwrap(), 2);
        let med = DiscreteFunction::median3(l(2)).unwrap();
        for idx in 0..med.len() {
            let x = med.point(idx);
            assert_eq!(median_eval(&med, &x).unwrap(), med.eval(&x).unwrap());
        }
        let bsum = DiscreteFunction::bounded_sum(c, 2).unwrap();
        assert_eq!(median_eval(&bsum, &tup(3, &[1, 0])).unwrap(), 1);
        // but the recursion departs from the table somewhere
        let (idx, _) = (0..bsum.len())
            .map(|i| (i, median_eval(&bsum, &bsum.point(i)).unwrap()))
            .find(|&(i, v)| v != bsum.at_index(i))
            .unwrap();
        assert_eq!(bsum.point(idx), tup(3, &[1, 1]));
    }

    #[test]
    fn polynomial_recognition() {
        let c = l(3);
        assert!(is_polynomial(&DiscreteFunction::lattice_join(c, 2).unwrap()).unwrap().is_polynomial());
        assert!(is_polynomial(&DiscreteFunction::constant(c, 2, 1).unwrap()).unwrap().is_polynomial());
        let bsum = DiscreteFunction::bounded_sum(c, 2).unwrap();
        // α_f = (0,2,2,2), whose DNF is the join; first disagreement is at (1,1)
        assert_eq!(canonical_alpha(&bsum).unwrap().values(), &[0, 2, 2, 2]);
        assert_eq!(
            is_polynomial(&bsum).unwrap(),
            PolynomialCheck::NotPolynomial { witness: tup(3, &[1, 1]), dnf_value: 1, actual: 2 }
        );
    }

    #[test]
    fn capacities_and_sugeno() {
        let c = l(3);
        let mu = |v: &[Elem]| Capacity::new(sf(3, 2, v)).unwrap();
        assert_eq!(sugeno_from_capacity(&mu(&[0, 2, 2, 2])), DiscreteFunction::lattice_join(c, 2).unwrap());
        assert_eq!(sugeno_from_capacity(&mu(&[0, 0, 0, 2])), DiscreteFunction::lattice_meet(c, 2).unwrap());
        let q = sugeno_from_capacity(&mu(&[0, 1, 1, 2]));
        assert_eq!(q.at(&[0, 2]), 1);
        assert_eq!(q, DiscreteFunction::from_fn(c, 2, |x| chain::median(x[0], x[1], 1)).unwrap());
        assert!(Capacity::new(sf(3, 2, &[1, 2, 2, 2])).is_err());
        assert!(Capacity::new(sf(3, 2, &[0, 2, 2, 1])).is_err());
        assert!(Capacity::new(sf(3, 2, &[0, 2, 0, 1])).is_err());
    }

    fn assert_normalizes(p: &DiscreteFunction) -> Capacity {
        let mu = sugeno_normalize(p).unwrap();
        let q = sugeno_from_capacity(&mu);
        assert_eq!(p.clamp_function(&q).unwrap(), *p);
        for a in p.chain().elements() {
            assert_eq!(q.at(&vec![a; p.arity()]), a, "q is idempotent");
        }
        mu
    }

    #[test]
    fn sugeno_normalization_examples() {
        let c = l(3);
        let one = DiscreteFunction::constant(c, 2, 1).unwrap();
        assert_eq!(assert_normalizes(&one).set_function().values(), &[0, 1, 1, 2]);
        // the join also works as q for the constant 1
        let join = DiscreteFunction::lattice_join(c, 2).unwrap();
        assert_eq!(one.clamp_function(&join).unwrap(), one);
        assert_eq!(assert_normalizes(&join).set_function().values(), &[0, 2, 2, 2]);
        let p = DiscreteFunction::from_fn(c, 2, |x| chain::median(1, x[0], 2)).unwrap();
        assert_eq!(canonical_alpha(&p).unwrap().values(), &[1, 2, 1, 2]);
        assert_eq!(assert_normalizes(&p).set_function().values(), &[0, 2, 1, 2]);
        let bsum = DiscreteFunction::bounded_sum(c, 2).unwrap();
        assert!(matches!(sugeno_normalize(&bsum), Err(Error::NotPolynomial { .. })));
    }

    #[test]
    fn homogeneity_shift_examples() {
        let c = l(3);
        let id = DiscreteFunction::projection(c, 1, 0).unwrap();
        for x in c.elements() {
            for k in c.elements() {
                let s = homogeneity_shift(&id, &tup(3, &[x]), k).unwrap();
                assert_eq!((s.join_lhs, s.join_rhs), (x.max(k), x.max(k)));
            }
        }
        let k = DiscreteFunction::constant(c, 2, 1).unwrap();
        let s = homogeneity_shift(&k, &tup(3, &[2, 0]), 2).unwrap();
        assert_eq!((s.join_lhs, s.join_rhs, s.meet_lhs, s.meet_rhs), (1, 1, 1, 1));
        let bsum = DiscreteFunction::bounded_sum(c, 2).unwrap();
        assert!(homogeneity_shift(&bsum, &tup(3, &[0, 0]), 1).is_err());
    }

    #[test]
    fn isotone_set_functions_are_enumerated() {
        // direct filter over all m^(2^n) set functions
        for (m, n) in [(2usize, 2usize), (3, 2), (2, 3), (3, 1)] {
            let len = 1usize << n;
            let brute = (0..m.pow(len as u32))
                .filter(|code| {
                    let v: Vec<Elem> = (0..len).map(|i| (code / m.pow(i as u32) % m) as Elem).collect();
                    (0..len).all(|i| (0..len).all(|j| i & j != i || v[i] <= v[j]))
                })
                .count();
            assert_eq!(SetFunction::all_isotone(l(m), n).unwrap().len(), brute);
        }
    }

    #[test]
    fn weighted_forms() {
        let c = l(3);
        let f = weighted_maximum(c, &[0, 1, 2]).unwrap();
        assert_eq!(f.at(&[2, 0]), 1);
        assert_eq!(f.at(&[0, 2]), 2);
        assert_eq!(weighted_maximum(c, &[0, 2, 2]).unwrap(), DiscreteFunction::lattice_join(c, 2).unwrap());
        assert_eq!(weighted_minimum(c, &[2, 0, 0]).unwrap(), DiscreteFunction::lattice_meet(c, 2).unwrap());
        assert!(weighted_maximum(c, &[]).is_err());
    }
}
