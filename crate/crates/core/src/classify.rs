//! Recognition and factorization of quasi-polynomial functions `f = p ∘ φ`.
//!
//! Recognition rebuilds `p_f ∘ δ_f` and compares tables. The special
//! subclasses (Sugeno, term, weighted) are built from explicit formulas and
//! then checked pointwise; the axiom deciders are only consulted to explain
//! a failed construction.

use std::fmt;

use crate::axioms::{AxiomChecker, AxiomId, AxiomResult};
use crate::chain::{self, tuple_string, Elem, Mask};
use crate::error::{Error, Result};
use crate::func::{DiscreteFunction, UnaryMap};
use crate::grid::Grid;
use crate::poly::{
    self, canonical_alpha, dnf_table, extend_from_vertices, is_polynomial, weighted_maximum,
    weighted_minimum, Capacity, PolynomialCheck, SetFunction,
};

/// Why `f` is not quasi-polynomial: the first of the three recognition
/// stages that failed, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refusal {
    /// `δ_f(lower) > δ_f(upper)` with `upper = lower + 1`.
    DiagonalDecreasing { lower: Elem, upper: Elem, values: (Elem, Elem) },
    /// `f(e_lower) > f(e_upper)` for `lower ⊂ upper`.
    VerticesNotIsotone { arity: usize, lower: Mask, upper: Mask, values: (Elem, Elem) },
    /// `p_f(δ_f(x)) ≠ f(x)`.
    Mismatch { x: Vec<Elem>, recomposed: Elem, actual: Elem },
}

fn mask_string(mask: Mask, arity: usize) -> String {
    let items: Vec<String> = (0..arity).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::DiagonalDecreasing { lower, upper, values } => write!(
                f,
                "δ_f decreasing: δ_f({lower})={} > δ_f({upper})={}",
                values.0, values.1
            ),
            Refusal::VerticesNotIsotone { arity, lower, upper, values } => write!(
                f,
                "vertices not isotone: f(e_{})={} > f(e_{})={}",
                mask_string(*lower, *arity),
                values.0,
                mask_string(*upper, *arity),
                values.1
            ),
            Refusal::Mismatch { x, recomposed, actual } => {
                write!(f, "witness x={}: p_f∘δ_f={recomposed}, f={actual}", tuple_string(x))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorKind {
    General,
    /// `p` is the Sugeno integral of the capacity.
    Sugeno(Capacity),
    /// `p` is a term function (no constants).
    Term,
    /// `p(x) = v_0 ∨ ⋁_i (v_i ∧ x_i)` with weights `[v_0, ..., v_n]`.
    WeightedMax(Vec<Elem>),
    /// `p(x) = w_0 ∧ ⋀_i (w_i ∨ x_i)` with weights `[w_0, ..., w_n]`.
    WeightedMin(Vec<Elem>),
}

/// A decomposition `f = p ∘ φ` with `p` polynomial and `φ` nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factorization {
    pub p: DiscreteFunction,
    pub phi: UnaryMap,
    pub kind: FactorKind,
}

impl Factorization {
    pub fn recompose(&self) -> DiscreteFunction {
        self.p.compose_unary(&self.phi).expect("factors share a chain")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha = canonical_alpha(&self.p).map_err(|_| fmt::Error)?;
        match &self.kind {
            FactorKind::General => write!(f, "p: α={alpha}, φ={}", self.phi),
            FactorKind::Sugeno(mu) => write!(f, "Sugeno integral μ={mu}, φ={}", self.phi),
            FactorKind::Term => write!(f, "term α={alpha}, φ={}", self.phi),
            FactorKind::WeightedMax(v) => {
                write!(f, "weighted max v0={}, v={}, φ={}", v[0], tuple_string(&v[1..]), self.phi)
            }
            FactorKind::WeightedMin(w) => {
                write!(f, "weighted min w0={}, w={}, φ={}", w[0], tuple_string(&w[1..]), self.phi)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiCheck {
    Quasi(Factorization),
    NotQuasi(Refusal),
}

impl QuasiCheck {
    pub fn is_quasi_polynomial(&self) -> bool {
        matches!(self, QuasiCheck::Quasi(_))
    }
}

/// `p_f`, the polynomial extension of `f` restricted to the vertex cube.
pub fn canonical_polynomial(f: &DiscreteFunction) -> Result<DiscreteFunction> {
    extend_from_vertices(&f.vertex_restriction()?)
}

/// Decides whether `f = p_f ∘ δ_f`, returning that factorization or the
/// first failing stage.
pub fn quasi_polynomial(f: &DiscreteFunction) -> Result<QuasiCheck> {
    quasi_polynomial_in(f, &f.grid())
}

pub fn is_quasi_polynomial(f: &DiscreteFunction) -> Result<bool> {
    Ok(quasi_polynomial(f)?.is_quasi_polynomial())
}

pub(crate) fn quasi_polynomial_in(f: &DiscreteFunction, grid: &Grid) -> Result<QuasiCheck> {
    let delta = f.diagonal();
    if let Some((lower, upper)) = delta.monotonicity_violation() {
        let values = (delta.at(lower), delta.at(upper));
        return Ok(QuasiCheck::NotQuasi(Refusal::DiagonalDecreasing { lower, upper, values }));
    }
    let vertices = f.vertex_restriction()?;
    if let Some((lower, upper)) = vertices.isotone_violation() {
        let values = (vertices.get(lower), vertices.get(upper));
        return Ok(QuasiCheck::NotQuasi(Refusal::VerticesNotIsotone {
            arity: f.arity(),
            lower,
            upper,
            values,
        }));
    }
    let p = extend_from_vertices(&vertices)?;
    let d = delta.values();
    let mismatch = grid.scan.iter().find_map(|&idx| {
        let v = p.at_index(grid.map_index(idx, |a| d[a as usize]));
        (v != f.at_index(idx)).then_some((idx, v))
    });
    Ok(match mismatch {
        Some((idx, recomposed)) => QuasiCheck::NotQuasi(Refusal::Mismatch {
            x: grid.coords(idx).to_vec(),
            recomposed,
            actual: f.at_index(idx),
        }),
        None => QuasiCheck::Quasi(Factorization { p, phi: delta, kind: FactorKind::General }),
    })
}

fn require_quasi(f: &DiscreteFunction) -> Result<Factorization> {
    match quasi_polynomial(f)? {
        QuasiCheck::Quasi(fac) => Ok(fac),
        QuasiCheck::NotQuasi(r) => Err(Error::NotQuasiPolynomial(r)),
    }
}

/// Membership in the characterization set: `p_f = ⟨p⟩_f` and `δ_f = ⟨φ⟩_p`.
pub fn in_characterization_set(
    f: &DiscreteFunction,
    p_f: &DiscreteFunction,
    p: &DiscreteFunction,
    phi: &UnaryMap,
) -> Result<bool> {
    Ok(f.clamp_function(p)? == *p_f && p.clamp_map(phi)? == f.diagonal())
}

/// Every pair `(p, φ)` with `p` polynomial, `φ` nondecreasing and `p ∘ φ = f`,
/// sorted. The brute-force set is checked against the characterization set
/// before returning.
pub fn factorizations(f: &DiscreteFunction) -> Result<Vec<Factorization>> {
    let canonical = require_quasi(f)?;
    let chain = f.chain();
    let grid = f.grid();
    let polys: Vec<DiscreteFunction> = SetFunction::all_isotone(chain, f.arity())?
        .iter()
        .map(dnf_table)
        .collect::<Result<_>>()?;
    let phis = UnaryMap::all_nondecreasing(chain);
    let mut found = Vec::new();
    for p in &polys {
        for phi in &phis {
            let composes = f.is_composite_of(&grid, p, phi.values());
            let characterized = in_characterization_set(f, &canonical.p, p, phi)?;
            if composes != characterized {
                return Err(Error::ConstructionFailed(format!(
                    "p with α={} and φ={phi}: p∘φ=f is {composes} but the characterization gives {characterized}",
                    canonical_alpha(p)?
                )));
            }
            if composes {
                found.push(Factorization { p: p.clone(), phi: phi.clone(), kind: FactorKind::General });
            }
        }
    }
    if !found.contains(&canonical) {
        return Err(Error::ConstructionFailed("(p_f, δ_f) missing from the factorization set".into()));
    }
    found.sort();
    Ok(found)
}

fn verified(f: &DiscreteFunction, fac: Factorization) -> Result<Factorization> {
    if fac.recompose() == *f {
        Ok(fac)
    } else {
        Err(Error::ConstructionFailed(format!("{fac} does not recompose to f")))
    }
}

/// `f = q ∘ φ'` with `q` a Sugeno integral: `q` integrates the normalized
/// capacity of `p_f` and `φ' = ⟨δ_f⟩_{p_f}`.
pub fn as_quasi_sugeno(f: &DiscreteFunction) -> Result<Factorization> {
    let canonical = require_quasi(f)?;
    let mu = poly::sugeno_normalize(&canonical.p)?;
    let q = poly::sugeno_from_capacity(&mu);
    let phi = canonical.p.clamp_map(&canonical.phi)?;
    verified(f, Factorization { p: q, phi, kind: FactorKind::Sugeno(mu) })
}

/// Turns a failed construction into a refusal when `axiom` fails, or into a
/// construction alarm when it holds.
fn refuse_or_alarm(f: &DiscreteFunction, axiom: AxiomId, what: &str) -> Error {
    let result = AxiomChecker::new(f).check(&axiom).expect("axiom without level set");
    if result.holds() {
        Error::ConstructionFailed(format!("{what} failed although {axiom} holds"))
    } else {
        Error::Refused(Box::new(result))
    }
}

/// `f = t ∘ δ_f` with `t` a term function, built from the subsets `I` with
/// `f(e_I) = f(1⃗)`. A constant `f` gets `t = x_1` and a constant `φ`.
pub fn as_quasi_term(f: &DiscreteFunction) -> Result<Factorization> {
    let canonical = require_quasi(f)?;
    let chain = f.chain();
    let (lo, hi) = (f.at_bottom(), f.at_top());
    let fac = if lo == hi {
        Factorization {
            p: DiscreteFunction::projection(chain, f.arity(), 0)?,
            phi: UnaryMap::constant(chain, lo)?,
            kind: FactorKind::Term,
        }
    } else {
        let vertices = f.vertex_restriction()?;
        let alpha = SetFunction::from_fn(chain, f.arity(), |mask| {
            // the join over selected I of ⋀_{i∈I} x_i has canonical coefficient
            // top exactly on supersets of a selected I
            let selected = (0..=mask).any(|i| i & mask == i && vertices.get(i) == hi);
            if selected { chain.top() } else { chain.bottom() }
        })?;
        Factorization { p: dnf_table(&alpha)?, phi: canonical.phi, kind: FactorKind::Term }
    };
    if fac.recompose() == *f {
        Ok(fac)
    } else {
        Err(refuse_or_alarm(f, AxiomId::QuasiConservative, "quasi-term construction"))
    }
}

/// `v_0 = δ_f(bottom)`, `v_i = f(e_{i})`, `φ = δ_f`.
pub fn as_quasi_weighted_max(f: &DiscreteFunction) -> Result<Factorization> {
    let canonical = require_quasi(f)?;
    let vertices = f.vertex_restriction()?;
    let mut weights = vec![canonical.phi.at(f.chain().bottom())];
    weights.extend((0..f.arity()).map(|i| vertices.get(1 << i)));
    let p = weighted_maximum(f.chain(), &weights)?;
    let fac = Factorization { p, phi: canonical.phi, kind: FactorKind::WeightedMax(weights) };
    if fac.recompose() == *f {
        Ok(fac)
    } else {
        Err(refuse_or_alarm(f, AxiomId::Maxitive, "quasi-weighted-maximum construction"))
    }
}

/// `w_0 = δ_f(top)`, `w_i = f(e_{[n]∖{i}})`, `φ = δ_f`.
pub fn as_quasi_weighted_min(f: &DiscreteFunction) -> Result<Factorization> {
    let canonical = require_quasi(f)?;
    let vertices = f.vertex_restriction()?;
    let full = (1usize << f.arity()) - 1;
    let mut weights = vec![canonical.phi.at(f.chain().top())];
    weights.extend((0..f.arity()).map(|i| vertices.get(full ^ 1 << i)));
    let p = weighted_minimum(f.chain(), &weights)?;
    let fac = Factorization { p, phi: canonical.phi, kind: FactorKind::WeightedMin(weights) };
    if fac.recompose() == *f {
        Ok(fac)
    } else {
        Err(refuse_or_alarm(f, AxiomId::Minitive, "quasi-weighted-minimum construction"))
    }
}

fn slot_decomposition(
    f: &DiscreteFunction,
    base: Elem,
    combine: fn(Elem, Elem) -> Elem,
    axiom: AxiomId,
) -> Result<Vec<UnaryMap>> {
    let chain = f.chain();
    let grid = f.grid();
    let n = f.arity();
    let base_idx = grid.diagonal_index(base);
    let slots: Vec<UnaryMap> = (0..n)
        .map(|i| {
            let values = chain.elements().map(|a| f.at_index(grid.pin_index(base_idx, i, a))).collect();
            UnaryMap::new(chain, values)
        })
        .collect::<Result<_>>()?;
    let reassembles = (0..grid.len).all(|idx| {
        let x = grid.coords(idx);
        let v = (1..n).fold(slots[0].at(x[0]), |acc, i| combine(acc, slots[i].at(x[i])));
        v == f.at_index(idx)
    });
    if reassembles && slots.iter().all(UnaryMap::is_nondecreasing) {
        Ok(slots)
    } else {
        Err(refuse_or_alarm(f, axiom, "slot decomposition"))
    }
}

/// `f(x) = ⋁_i f_i(x_i)` with `f_i(a) = f(0⃗ with slot i set to a)`.
pub fn maxitive_decomposition(f: &DiscreteFunction) -> Result<Vec<UnaryMap>> {
    slot_decomposition(f, f.chain().bottom(), chain::join, AxiomId::Maxitive)
}

/// `f(x) = ⋀_i f_i(x_i)` with `f_i(a) = f(1⃗ with slot i set to a)`.
pub fn minitive_decomposition(f: &DiscreteFunction) -> Result<Vec<UnaryMap>> {
    slot_decomposition(f, f.chain().top(), chain::meet, AxiomId::Minitive)
}

/// Membership flags with the canonical factorization or the refusal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub polynomial: PolynomialCheck,
    pub quasi: QuasiCheck,
    pub sugeno: Option<Factorization>,
    pub term: Option<Factorization>,
    pub weighted_max: Option<Factorization>,
    pub weighted_min: Option<Factorization>,
    /// Why the subclass constructions were refused, by axiom.
    pub refusals: Vec<AxiomResult>,
}

impl ClassReport {
    pub fn is_polynomial(&self) -> bool {
        self.polynomial.is_polynomial()
    }

    pub fn is_quasi_polynomial(&self) -> bool {
        self.quasi.is_quasi_polynomial()
    }

    pub fn is_quasi_sugeno(&self) -> bool {
        self.sugeno.is_some()
    }

    pub fn is_quasi_term(&self) -> bool {
        self.term.is_some()
    }

    pub fn is_quasi_weighted_max(&self) -> bool {
        self.weighted_max.is_some()
    }

    pub fn is_quasi_weighted_min(&self) -> bool {
        self.weighted_min.is_some()
    }
}

/// Construction alarms propagate as errors; refusals become `None`.
fn optional(r: Result<Factorization>, refusals: &mut Vec<AxiomResult>) -> Result<Option<Factorization>> {
    match r {
        Ok(fac) => Ok(Some(fac)),
        Err(Error::Refused(why)) => {
            refusals.push(*why);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn classify(f: &DiscreteFunction) -> Result<ClassReport> {
    let polynomial = is_polynomial(f)?;
    let quasi = quasi_polynomial(f)?;
    let mut refusals = Vec::new();
    let (sugeno, term, weighted_max, weighted_min) = if quasi.is_quasi_polynomial() {
        (
            Some(as_quasi_sugeno(f)?),
            optional(as_quasi_term(f), &mut refusals)?,
            optional(as_quasi_weighted_max(f), &mut refusals)?,
            optional(as_quasi_weighted_min(f), &mut refusals)?,
        )
    } else {
        (None, None, None, None)
    };
    Ok(ClassReport { polynomial, quasi, sugeno, term, weighted_max, weighted_min, refusals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check, replay, Witness};
    use crate::chain::Chain;

    fn l(m: usize) -> Chain {
        Chain::new(m).unwrap()
    }

    fn map(m: usize, v: &[Elem]) -> UnaryMap {
        UnaryMap::new(l(m), v.to_vec()).unwrap()
    }

    fn squashed_join() -> DiscreteFunction {
        let join = DiscreteFunction::lattice_join(l(3), 2).unwrap();
        join.compose_unary(&map(3, &[0, 0, 2])).unwrap()
    }

    #[test]
    fn canonical_polynomial_examples() {
        let join = DiscreteFunction::lattice_join(l(3), 2).unwrap();
        assert_eq!(canonical_polynomial(&squashed_join()).unwrap(), join);
        let bsum = DiscreteFunction::bounded_sum(l(3), 2).unwrap();
        assert_eq!(canonical_polynomial(&bsum).unwrap(), join);
        let xor = DiscreteFunction::new(l(2), 2, vec![0, 1, 1, 0]).unwrap();
        assert!(matches!(canonical_polynomial(&xor), Err(Error::NotIsotone { .. })));
    }

    #[test]
    fn recognition_examples() {
        let join = DiscreteFunction::lattice_join(l(3), 2).unwrap();
        match quasi_polynomial(&squashed_join()).unwrap() {
            QuasiCheck::Quasi(fac) => {
                assert_eq!(fac.p, join);
                assert_eq!(fac.phi, map(3, &[0, 0, 2]));
            }
            other => panic!("{other:?}"),
        }
        let bsum = DiscreteFunction::bounded_sum(l(3), 2).unwrap();
        let refusal = match quasi_polynomial(&bsum).unwrap() {
            QuasiCheck::NotQuasi(r) => r,
            other => panic!("{other:?}"),
        };
        assert_eq!(refusal, Refusal::Mismatch { x: vec![1, 0], recomposed: 2, actual: 1 });
        assert_eq!(refusal.to_string(), "witness x=(1,0): p_f∘δ_f=2, f=1");
    }

    #[test]
    fn refusal_stages() {
        let decreasing = DiscreteFunction::new(l(2), 1, vec![1, 0]).unwrap();
        assert!(matches!(
            quasi_polynomial(&decreasing).unwrap(),
            QuasiCheck::NotQuasi(Refusal::DiagonalDecreasing { lower: 0, upper: 1, .. })
        ));
        let f = DiscreteFunction::new(l(2), 2, vec![0, 1, 0, 1]).unwrap();
        assert!(quasi_polynomial(&f).unwrap().is_quasi_polynomial());
        // nondecreasing diagonal, but f(0,0)=1 > f(2,0)=0
        let g = DiscreteFunction::new(l(3), 2, vec![1, 0, 0, 0, 1, 0, 0, 0, 2]).unwrap();
        match quasi_polynomial(&g).unwrap() {
            QuasiCheck::NotQuasi(r @ Refusal::VerticesNotIsotone { .. }) => {
                assert_eq!(r.to_string(), "vertices not isotone: f(e_{})=1 > f(e_{1})=0");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn polynomials_factor_through_their_diagonal() {
        for alpha in SetFunction::all_isotone(l(3), 2).unwrap() {
            let p = dnf_table(&alpha).unwrap();
            match quasi_polynomial(&p).unwrap() {
                QuasiCheck::Quasi(fac) => {
                    assert_eq!(fac.p, p);
                    assert_eq!(fac.phi, p.clamp_map(&UnaryMap::identity(l(3))).unwrap());
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn factorization_set_of_constant_zero() {
        let zero = DiscreteFunction::constant(l(2), 2, 0).unwrap();
        let facs = factorizations(&zero).unwrap();
        let phis = UnaryMap::all_nondecreasing(l(2));
        for phi in &phis {
            assert!(facs.iter().any(|f| f.p == zero && f.phi == *phi));
        }
        let join = DiscreteFunction::lattice_join(l(2), 2).unwrap();
        let meet = DiscreteFunction::lattice_meet(l(2), 2).unwrap();
        for p in [&join, &meet] {
            assert!(facs.iter().any(|f| f.p == *p && f.phi == map(2, &[0, 0])));
        }
    }

    #[test]
    fn factorization_count_of_join_matches_double_loop() {
        let join = DiscreteFunction::lattice_join(l(2), 2).unwrap();
        let facs = factorizations(&join).unwrap();
        assert!(facs.iter().any(|f| f.p == join && f.phi == UnaryMap::identity(l(2))));
        let mut count = 0;
        for a in 0..2u8 {
            for b in a..2 {
                for c in b..2 {
                    for d in a..2 {
                        if d > c || b > c {
                            continue;
                        }
                        let alpha = SetFunction::new(l(2), 2, vec![a, b, d, c]).unwrap();
                        let p = dnf_table(&alpha).unwrap();
                        for phi in [[0u8, 0], [0, 1], [1, 1]] {
                            if p.compose_unary(&map(2, &phi)).unwrap() == join {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(facs.len(), count);
    }

    #[test]
    fn factorizations_refuse_non_quasi_polynomials() {
        let bsum = DiscreteFunction::bounded_sum(l(3), 2).unwrap();
        assert!(matches!(factorizations(&bsum), Err(Error::NotQuasiPolynomial(_))));
    }

    #[test]
    fn sugeno_examples() {
        let join = DiscreteFunction::lattice_join(l(3), 2).unwrap();
        let fac = as_quasi_sugeno(&squashed_join()).unwrap();
        assert_eq!((fac.p.clone(), fac.phi.clone()), (join.clone(), map(3, &[0, 0, 2])));
        let one = DiscreteFunction::constant(l(3), 2, 1).unwrap();
        let fac = as_quasi_sugeno(&one).unwrap();
        assert_eq!(fac.phi, map(3, &[1, 1, 1]));
        assert_eq!(fac.recompose(), one);
        // the listed alternative q = join also works
        assert_eq!(join.compose_unary(&map(3, &[1, 1, 1])).unwrap(), one);
        let med = poly::sugeno_from_capacity(&Capacity::new(SetFunction::new(l(3), 2, vec![0, 1, 1, 2]).unwrap()).unwrap());
        let fac = as_quasi_sugeno(&med).unwrap();
        assert_eq!((fac.p, fac.phi), (med, UnaryMap::identity(l(3))));
    }

    #[test]
    fn term_examples() {
        let fac = as_quasi_term(&squashed_join()).unwrap();
        assert_eq!(fac.p, DiscreteFunction::lattice_join(l(3), 2).unwrap());
        assert_eq!(fac.phi, map(3, &[0, 0, 2]));
        let proj = DiscreteFunction::projection(l(3), 2, 0).unwrap();
        let fac = as_quasi_term(&proj).unwrap();
        assert_eq!((fac.p, fac.phi), (proj, UnaryMap::identity(l(3))));

        let mu = Capacity::new(SetFunction::new(l(3), 2, vec![0, 1, 1, 2]).unwrap()).unwrap();
        let sug = poly::sugeno_from_capacity(&mu);
        match as_quasi_term(&sug) {
            Err(Error::Refused(r)) => {
                assert_eq!(r.axiom, AxiomId::QuasiConservative);
                let listed = Witness::Point { x: vec![0, 2] };
                assert!(replay(&sug, &AxiomId::QuasiConservative, &listed).unwrap());
                assert!(replay(&sug, &r.axiom, r.witness.as_ref().unwrap()).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constant_gets_projection_term() {
        let c = DiscreteFunction::constant(l(3), 2, 2).unwrap();
        let fac = as_quasi_term(&c).unwrap();
        assert_eq!(fac.p, DiscreteFunction::projection(l(3), 2, 0).unwrap());
        assert_eq!(fac.phi, map(3, &[2, 2, 2]));
    }

    #[test]
    fn weighted_examples() {
        let fac = as_quasi_weighted_max(&squashed_join()).unwrap();
        assert_eq!(fac.kind, FactorKind::WeightedMax(vec![0, 2, 2]));
        assert_eq!(fac.phi, map(3, &[0, 0, 2]));

        let meet = DiscreteFunction::lattice_meet(l(3), 2).unwrap();
        match as_quasi_weighted_max(&meet) {
            Err(Error::Refused(r)) => {
                assert_eq!(r.axiom, AxiomId::Maxitive);
                let listed = Witness::Pair { x: vec![2, 0], y: vec![0, 2] };
                assert!(replay(&meet, &AxiomId::Maxitive, &listed).unwrap());
            }
            other => panic!("{other:?}"),
        }
        let fac = as_quasi_weighted_min(&meet).unwrap();
        assert_eq!(fac.kind, FactorKind::WeightedMin(vec![2, 0, 0]));

        let c = DiscreteFunction::constant(l(3), 2, 1).unwrap();
        let fac = as_quasi_weighted_max(&c).unwrap();
        assert_eq!(fac.kind, FactorKind::WeightedMax(vec![1, 1, 1]));
    }

    #[test]
    fn slot_decompositions() {
        let join = DiscreteFunction::lattice_join(l(3), 2).unwrap();
        let slots = maxitive_decomposition(&join).unwrap();
        assert_eq!(slots, vec![UnaryMap::identity(l(3)); 2]);
        let wmax = weighted_maximum(l(3), &[0, 1, 2]).unwrap();
        let slots = maxitive_decomposition(&wmax).unwrap();
        assert_eq!(slots, vec![map(3, &[0, 1, 1]), map(3, &[0, 1, 2])]);
        let meet = DiscreteFunction::lattice_meet(l(3), 2).unwrap();
        assert!(matches!(maxitive_decomposition(&meet), Err(Error::Refused(_))));
        assert_eq!(minitive_decomposition(&meet).unwrap(), vec![UnaryMap::identity(l(3)); 2]);
    }

    #[test]
    fn report_flags() {
        let bsum = DiscreteFunction::bounded_sum(l(3), 2).unwrap();
        let r = classify(&bsum).unwrap();
        assert!(!r.is_polynomial() && !r.is_quasi_polynomial() && !r.is_quasi_sugeno());
        let r = classify(&squashed_join()).unwrap();
        assert!(!r.is_polynomial());
        assert!(r.is_quasi_polynomial() && r.is_quasi_sugeno() && r.is_quasi_term() && r.is_quasi_weighted_max());
        assert!(!r.is_quasi_weighted_min());
        assert_eq!(r.refusals.len(), 1);
        assert!(!check(&squashed_join(), &AxiomId::Minitive).unwrap().holds());
    }
}
