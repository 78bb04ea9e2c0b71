//! Function universes and the theorem-verification harness.
//!
//! Each theorem is evaluated on every function of a universe by comparing
//! the two sides of its equivalence (or the premise and conclusion of an
//! implication), each side computed by the deciders in [`crate::axioms`],
//! [`crate::poly`] and [`crate::classify`] or by direct search over the
//! relevant candidate functions. The report keeps the counterexample of least
//! universe index, so results do not depend on the number of workers.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::axioms::{AxiomChecker, AxiomId};
use crate::chain::{self, tuple_string, Chain, Elem, Permutation};
use crate::classify::{self, QuasiCheck};
use crate::error::{Error, Result};
use crate::func::{self, DiscreteFunction, UnaryMap};
use crate::grid::Grid;
use crate::poly::{self, SetFunction};
use crate::rng::{self, Constraint};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    ExhaustiveNondecreasing,
    Sample,
    SampleNondecreasing,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::ExhaustiveNondecreasing => "exhaustive-nondecreasing",
            Mode::Sample => "sample",
            Mode::SampleNondecreasing => "sample-nondecreasing",
        }
    }

    fn is_exhaustive(self) -> bool {
        matches!(self, Mode::Exhaustive | Mode::ExhaustiveNondecreasing)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Mode::Exhaustive, Mode::ExhaustiveNondecreasing, Mode::Sample, Mode::SampleNondecreasing]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "mode", name: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    pub m: usize,
    pub n: usize,
    pub mode: Mode,
    /// Used by the sample modes only.
    pub samples: u64,
    pub seed: u64,
    /// Upper bound on the number of tables an exhaustive mode may visit.
    pub budget: u64,
}

impl Universe {
    pub fn exhaustive(m: usize, n: usize) -> Self {
        Universe { m, n, mode: Mode::Exhaustive, samples: 0, seed: 0, budget: DEFAULT_BUDGET }
    }

    pub fn exhaustive_nondecreasing(m: usize, n: usize) -> Self {
        Universe { mode: Mode::ExhaustiveNondecreasing, ..Self::exhaustive(m, n) }
    }

    pub fn sample(m: usize, n: usize, samples: u64, seed: u64) -> Self {
        Universe { m, n, mode: Mode::Sample, samples, seed, budget: DEFAULT_BUDGET }
    }

    pub fn sample_nondecreasing(m: usize, n: usize, samples: u64, seed: u64) -> Self {
        Universe { mode: Mode::SampleNondecreasing, ..Self::sample(m, n, samples, seed) }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        Universe { budget, ..self }
    }

    /// Number of indices to visit: all tables, or the sample count.
    pub fn size(&self) -> Result<u64> {
        Chain::new(self.m)?;
        let len = func::table_len(self.m, self.n)?;
        if self.mode.is_exhaustive() {
            let tables = (self.m as u128).checked_pow(len as u32).filter(|&t| t <= self.budget as u128);
            match tables {
                Some(t) => Ok(t as u64),
                None => Err(Error::BudgetExceeded {
                    tables: format!("{}^{}", self.m, len),
                    budget: self.budget,
                }),
            }
        } else if self.samples == 0 {
            Err(Error::EmptySample)
        } else {
            Ok(self.samples)
        }
    }

    /// The function at `index`, or `None` when an exhaustive-nondecreasing
    /// universe skips that table.
    pub fn function(&self, index: u64) -> Result<Option<DiscreteFunction>> {
        let chain = Chain::new(self.m)?;
        match self.mode {
            Mode::Exhaustive | Mode::ExhaustiveNondecreasing => {
                let len = func::table_len(self.m, self.n)?;
                let mut table = vec![0 as Elem; len];
                let mut rem = index;
                for slot in table.iter_mut().rev() {
                    *slot = (rem % self.m as u64) as Elem;
                    rem /= self.m as u64;
                }
                let f = DiscreteFunction::new(chain, self.n, table)?;
                Ok((self.mode == Mode::Exhaustive || f.is_nondecreasing()).then_some(f))
            }
            Mode::Sample | Mode::SampleNondecreasing => {
                let constraint =
                    if self.mode == Mode::Sample { Constraint::Any } else { Constraint::Nondecreasing };
                rng::random_function(self.m, self.n, rng::sample_seed(self.seed, index), constraint).map(Some)
            }
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} mode={}", self.m, self.n, self.mode)?;
        if !self.mode.is_exhaustive() {
            write!(f, " samples={} seed={}", self.samples, self.seed)?;
        }
        Ok(())
    }
}

/// Every function of the universe, in index order. Exhaustive modes list
/// tables lexicographically (first entry most significant).
pub fn enumerate_functions(u: &Universe) -> Result<impl Iterator<Item = DiscreteFunction> + '_> {
    let size = u.size()?;
    Ok((0..size).filter_map(move |i| u.function(i).expect("universe validated")))
}

macro_rules! theorems {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId { $($variant,)* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(TheoremId::$variant => $name,)* }
            }
        }
    };
}

theorems! {
    HorMax => "T-HORMAX",
    DnfSimplex => "L-DNFSIMPLEX",
    HorMin => "T-HORMIN",
    HorMaxMin => "C-HORMAXMIN",
    ComHor => "L-COMHOR",
    ComMax => "T-COMMAX",
    ComMin => "T-COMMIN",
    QuasiPol => "T-QUASIPOL",
    Hom => "L-HOM",
    Fact => "P-FACT",
    QuasiSugeno => "C-QSUGENO",
    QuasiHomHor => "L-QHOM-HOR",
    QuasiHom => "T-QHOM",
    QuasiMedian => "T-QMED",
    QuasiTerm => "T-QTERM",
    MaxDecomposition => "P-MAXDEC",
    QuasiWeightedMax => "T-QWMAX",
    QuasiWeightedMin => "T-QWMIN",
    BooleanHorizontal => "R-BOOLHOR",
    PolynomialChar => "R-POLYCHAR",
}

impl TheoremId {
    pub fn statement(self) -> &'static str {
        use TheoremId::*;
        match self {
            HorMax => "HOR_MAX ∧ P1 ⇔ P2 ∧ f(x) = ⋁_I f(e_I ∧ ⋀_{i∈I} x_i)",
            DnfSimplex => "under P1: f(x) = ⋁_I f(e_I ∧ ⋀_{i∈I} x_i) ⇔ the simplex form holds for every sorting permutation",
            HorMin => "HOR_MIN ∧ D1 ⇔ D2 ∧ f(x) = ⋀_I f(e_{[n]∖I} ∨ ⋁_{i∈I} x_i)",
            HorMaxMin => "HOR_MAX ∧ P1 ⇔ f = ⋁_I φ_I(⋀_{i∈I} x_i) with nondecreasing φ_I(x) = f(e_I ∧ x), and dually",
            ComHor => "COM_MAX ⇔ HOR_MAX ∧ P1 and COM_MIN ⇔ HOR_MIN ∧ D1",
            ComMax => "COM_MAX ⇔ P2 ∧ f(x) = ⋁_I f(e_I ∧ ⋀_{i∈I} x_i)",
            ComMin => "COM_MIN ⇔ D2 ∧ f(x) = ⋀_I f(e_{[n]∖I} ∨ ⋁_{i∈I} x_i)",
            QuasiPol => "the five assertions on horizontal/comonotonic max/min-itivity and f = p∘φ agree",
            Hom => "a polynomial p has p(x ∨ c) = p(x) ∨ ⟨c⟩_p and p(x ∧ c) = p(x) ∧ ⟨c⟩_p",
            Fact => "for quasi-polynomial f: {(p,φ): p∘φ = f} = {(p,φ): p_f = ⟨p⟩_f ∧ δ_f = ⟨φ⟩_p} ∋ (p_f, δ_f)",
            QuasiSugeno => "quasi-polynomial ⇔ quasi-Sugeno integral",
            QuasiHomHor => "under NONDECREASING ∧ QUASI_MIN_HOM: QUASI_MAX_HOM ⇔ HOR_MAX, and dually",
            QuasiHom => "quasi-polynomial ⇔ NONDECREASING ∧ QUASI_MAX_HOM ∧ QUASI_MIN_HOM",
            QuasiMedian => "quasi-polynomial ⇔ δ_f nondecreasing ∧ QUASI_MEDIAN_DECOMP",
            QuasiTerm => "for quasi-polynomial f: quasi-term ⇔ QUASI_CONSERVATIVE",
            MaxDecomposition => "MAXITIVE ⇔ f = ⋁_i f_i(x_i) with nondecreasing f_i, and dually",
            QuasiWeightedMax => "for quasi-polynomial f: quasi-weighted maximum ⇔ MAXITIVE",
            QuasiWeightedMin => "for quasi-polynomial f: quasi-weighted minimum ⇔ MINITIVE",
            BooleanHorizontal => "for m = 2: f(0⃗) ≤ f ⇒ HOR_MAX and f ≤ f(1⃗) ⇒ HOR_MIN",
            PolynomialChar => "polynomial ⇔ RANGE_IDEMPOTENT ∧ NONDECREASING ∧ HOR_MAX ∧ HOR_MIN ⇔ RANGE_IDEMPOTENT ∧ COM_MAX ∧ COM_MIN",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName { kind: "theorem", name: s.to_string() })
    }
}

/// Result of one theorem on one function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The premise does not apply.
    Vacuous,
    Agrees,
    Disagrees(String),
}

/// Candidate functions shared by every evaluation in a universe.
pub struct Context {
    chain: Chain,
    grid: Grid,
    permutations: Vec<Permutation>,
    phis: Vec<UnaryMap>,
    polys: Vec<DiscreteFunction>,
    sugenos: Vec<DiscreteFunction>,
    terms: Vec<DiscreteFunction>,
    weighted_max: Vec<DiscreteFunction>,
    weighted_min: Vec<DiscreteFunction>,
}

impl Context {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let chain = Chain::new(m)?;
        func::table_len(m, n)?;
        let (bottom, top) = (chain.bottom(), chain.top());
        let alphas = SetFunction::all_isotone(chain, n)?;
        let full = (1usize << n) - 1;
        let tables = |keep: &dyn Fn(&SetFunction) -> bool| -> Result<Vec<DiscreteFunction>> {
            alphas.iter().filter(|a| keep(a)).map(poly::dnf_table).collect()
        };
        let polys = tables(&|_| true)?;
        let sugenos = tables(&|a| a.get(0) == bottom && a.get(full) == top)?;
        let terms = tables(&|a| {
            a.get(0) == bottom && a.get(full) == top && a.values().iter().all(|&v| v == bottom || v == top)
        })?;
        let weights = all_tuples(m, n + 1);
        let mut weighted_max: Vec<DiscreteFunction> =
            weights.iter().map(|w| poly::weighted_maximum(chain, w)).collect::<Result<_>>()?;
        let mut weighted_min: Vec<DiscreteFunction> =
            weights.iter().map(|w| poly::weighted_minimum(chain, w)).collect::<Result<_>>()?;
        weighted_max.sort();
        weighted_max.dedup();
        weighted_min.sort();
        weighted_min.dedup();
        Ok(Context {
            chain,
            grid: Grid::new(m, n),
            permutations: Permutation::all(n),
            phis: UnaryMap::all_nondecreasing(chain),
            polys,
            sugenos,
            terms,
            weighted_max,
            weighted_min,
        })
    }

    fn factors_through(&self, f: &DiscreteFunction, candidates: &[DiscreteFunction]) -> bool {
        candidates
            .iter()
            .any(|p| self.phis.iter().any(|phi| f.is_composite_of(&self.grid, p, phi.values())))
    }

    /// `⋁_I f(e_I ∧ ⋀_{i∈I} x_i)` at every point.
    fn max_form_holds(&self, f: &DiscreteFunction) -> bool {
        let g = &self.grid;
        let top = self.chain.top();
        (0..g.len).all(|idx| {
            let x = g.coords(idx);
            let v = (0..1usize << g.n)
                .map(|mask| {
                    let c = (0..g.n).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).min().unwrap_or(top);
                    f.at_index(g.vertex_cut_index(mask, c))
                })
                .max()
                .unwrap_or(0);
            v == f.at_index(idx)
        })
    }

    /// `⋀_I f(e_{[n]∖I} ∨ ⋁_{i∈I} x_i)` at every point.
    fn min_form_holds(&self, f: &DiscreteFunction) -> bool {
        let g = &self.grid;
        let full = (1usize << g.n) - 1;
        (0..g.len).all(|idx| {
            let x = g.coords(idx);
            let v = (0..=full)
                .map(|mask| {
                    let c = (0..g.n).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).max().unwrap_or(0);
                    f.at_index(g.vertex_lift_index(full ^ mask, c))
                })
                .min()
                .unwrap_or(0);
            v == f.at_index(idx)
        })
    }

    /// `f(x) = ⋁_{i=1}^{n+1} f(e_{S↑(i)} ∧ x_{σ(i)})` for every `σ` and every
    /// `x` sorted by `σ`.
    fn simplex_form_holds(&self, f: &DiscreteFunction) -> bool {
        let g = &self.grid;
        let bottom_value = f.at_index(0);
        self.permutations.iter().all(|sigma| {
            (0..g.len).all(|idx| {
                let x = g.coords(idx);
                if !sigma.sorts(x) {
                    return true;
                }
                let v = (0..g.n)
                    .map(|i| f.at_index(g.vertex_cut_index(sigma.upper_set(i), x[sigma.images()[i]])))
                    .fold(bottom_value, chain::join);
                v == f.at_index(idx)
            })
        })
    }

    fn slots_hold(&self, f: &DiscreteFunction, base: Elem, combine: fn(Elem, Elem) -> Elem) -> bool {
        let g = &self.grid;
        let base_idx = g.diagonal_index(base);
        let slots: Vec<Vec<Elem>> = (0..g.n)
            .map(|i| self.chain.elements().map(|a| f.at_index(g.pin_index(base_idx, i, a))).collect())
            .collect();
        let monotone = slots.iter().all(|s| s.windows(2).all(|w| w[0] <= w[1]));
        monotone
            && (0..g.len).all(|idx| {
                let x = g.coords(idx);
                let v = (1..g.n).fold(slots[0][x[0] as usize], |acc, i| combine(acc, slots[i][x[i] as usize]));
                v == f.at_index(idx)
            })
    }

    fn homogeneity_holds(&self, p: &DiscreteFunction) -> bool {
        let g = &self.grid;
        (0..g.len).all(|idx| {
            self.chain.elements().all(|c| {
                let px = p.at_index(idx);
                let clamped = p.clamp_unchecked(c);
                p.at_index(g.map_index(idx, |a| chain::join(a, c))) == chain::join(px, clamped)
                    && p.at_index(g.map_index(idx, |a| chain::meet(a, c))) == chain::meet(px, clamped)
            })
        })
    }

    fn quasi(&self, f: &DiscreteFunction) -> Result<bool> {
        Ok(classify::quasi_polynomial_in(f, &self.grid)?.is_quasi_polynomial())
    }

    /// Evaluates `theorem` on `f`; `f` must match the context's shape.
    pub fn evaluate(&self, theorem: TheoremId, f: &DiscreteFunction) -> Result<Outcome> {
        if f.chain() != self.chain || f.arity() != self.grid.n {
            return Err(Error::ArityMismatch { expected: self.grid.n, found: f.arity() });
        }
        let ax = AxiomChecker::with_grid(f, &self.grid);
        let holds = |a: AxiomId| ax.holds(&a).expect("axioms without level sets");
        use AxiomId as A;
        use TheoremId::*;
        let iff = |pairs: &[(&str, bool, bool)]| -> Outcome {
            match pairs.iter().find(|(_, l, r)| l != r) {
                Some((what, l, r)) => Outcome::Disagrees(format!("{what}: left side {l}, right side {r}")),
                None => Outcome::Agrees,
            }
        };
        let outcome = match theorem {
            HorMax => iff(&[(
                "horizontal maxitivity",
                holds(A::HorMax) && holds(A::P1),
                holds(A::P2) && self.max_form_holds(f),
            )]),
            HorMin => iff(&[(
                "horizontal minitivity",
                holds(A::HorMin) && holds(A::D1),
                holds(A::D2) && self.min_form_holds(f),
            )]),
            DnfSimplex => {
                if !holds(A::P1) {
                    Outcome::Vacuous
                } else {
                    iff(&[("simplex form", self.max_form_holds(f), self.simplex_form_holds(f))])
                }
            }
            HorMaxMin => {
                let g = &self.grid;
                let full = (1usize << g.n) - 1;
                let cut_maps_monotone = (0..=full).all(|mask| {
                    self.chain.elements().skip(1).all(|c| {
                        f.at_index(g.vertex_cut_index(mask, c - 1)) <= f.at_index(g.vertex_cut_index(mask, c))
                    })
                });
                let lift_maps_monotone = (0..=full).all(|mask| {
                    self.chain.elements().skip(1).all(|c| {
                        f.at_index(g.vertex_lift_index(mask, c - 1)) <= f.at_index(g.vertex_lift_index(mask, c))
                    })
                });
                iff(&[
                    (
                        "join form",
                        holds(A::HorMax) && holds(A::P1),
                        cut_maps_monotone && self.max_form_holds(f),
                    ),
                    (
                        "meet form",
                        holds(A::HorMin) && holds(A::D1),
                        lift_maps_monotone && self.min_form_holds(f),
                    ),
                ])
            }
            ComHor => iff(&[
                ("COM_MAX", holds(A::ComMax), holds(A::HorMax) && holds(A::P1)),
                ("COM_MIN", holds(A::ComMin), holds(A::HorMin) && holds(A::D1)),
            ]),
            ComMax => iff(&[("COM_MAX", holds(A::ComMax), holds(A::P2) && self.max_form_holds(f))]),
            ComMin => iff(&[("COM_MIN", holds(A::ComMin), holds(A::D2) && self.min_form_holds(f))]),
            QuasiPol => {
                let (hmax, hmin, cmax, cmin) = (holds(A::HorMax), holds(A::HorMin), holds(A::ComMax), holds(A::ComMin));
                let assertions = [
                    hmax && hmin && (holds(A::P1) || holds(A::D1)),
                    cmax && cmin,
                    hmax && cmin,
                    cmax && hmin,
                    self.quasi(f)?,
                    self.factors_through(f, &self.polys),
                ];
                if assertions.iter().all(|&a| a == assertions[0]) {
                    Outcome::Agrees
                } else {
                    Outcome::Disagrees(format!(
                        "assertions (i)-(v) and search give {}",
                        assertions.map(|a| if a { "T" } else { "F" }).join("")
                    ))
                }
            }
            Hom => {
                if !poly::is_polynomial_in(f, &self.grid) {
                    Outcome::Vacuous
                } else {
                    iff(&[("homogeneity shift", true, self.homogeneity_holds(f))])
                }
            }
            Fact => match classify::quasi_polynomial_in(f, &self.grid)? {
                QuasiCheck::NotQuasi(_) => {
                    iff(&[("factorization exists", false, self.factors_through(f, &self.polys))])
                }
                QuasiCheck::Quasi(canonical) => {
                    let mut detail = None;
                    let mut contains_canonical = false;
                    'outer: for p in &self.polys {
                        for phi in &self.phis {
                            let composes = f.is_composite_of(&self.grid, p, phi.values());
                            let characterized = classify::in_characterization_set(f, &canonical.p, p, phi)?;
                            if composes != characterized {
                                detail = Some(format!(
                                    "p with α={}, φ={phi}: p∘φ=f is {composes}, characterization gives {characterized}",
                                    poly::canonical_alpha(p)?
                                ));
                                break 'outer;
                            }
                            contains_canonical |= composes && *p == canonical.p && *phi == canonical.phi;
                        }
                    }
                    match detail {
                        Some(d) => Outcome::Disagrees(d),
                        None if !contains_canonical => Outcome::Disagrees("(p_f, δ_f) is not a factorization".into()),
                        None => Outcome::Agrees,
                    }
                }
            },
            QuasiSugeno => {
                let quasi = self.quasi(f)?;
                let constructed = match classify::as_quasi_sugeno(f) {
                    Ok(_) => true,
                    Err(Error::NotQuasiPolynomial(_)) => false,
                    Err(e) => return Ok(Outcome::Disagrees(e.to_string())),
                };
                iff(&[
                    ("Sugeno search", quasi, self.factors_through(f, &self.sugenos)),
                    ("Sugeno construction", quasi, constructed),
                ])
            }
            QuasiHomHor => {
                let nd = holds(A::Nondecreasing);
                let (qmax, qmin) = (holds(A::QuasiMaxHom), holds(A::QuasiMinHom));
                let mut pairs = Vec::new();
                if nd && qmin {
                    pairs.push(("QUASI_MAX_HOM vs HOR_MAX", qmax, holds(A::HorMax)));
                }
                if nd && qmax {
                    pairs.push(("QUASI_MIN_HOM vs HOR_MIN", qmin, holds(A::HorMin)));
                }
                if pairs.is_empty() {
                    Outcome::Vacuous
                } else {
                    iff(&pairs)
                }
            }
            QuasiHom => iff(&[(
                "quasi-homogeneity",
                self.quasi(f)?,
                holds(A::Nondecreasing) && holds(A::QuasiMaxHom) && holds(A::QuasiMinHom),
            )]),
            QuasiMedian => iff(&[(
                "quasi-median decomposition",
                self.quasi(f)?,
                f.diagonal().is_nondecreasing() && holds(A::QuasiMedianDecomp),
            )]),
            QuasiTerm => {
                if !self.quasi(f)? {
                    Outcome::Vacuous
                } else {
                    let qc = holds(A::QuasiConservative);
                    let constructed = match classify::as_quasi_term(f) {
                        Ok(_) => true,
                        Err(Error::Refused(_)) => false,
                        Err(e) => return Ok(Outcome::Disagrees(e.to_string())),
                    };
                    iff(&[
                        ("term search", self.factors_through(f, &self.terms), qc),
                        ("term construction", constructed, qc),
                    ])
                }
            }
            MaxDecomposition => iff(&[
                ("maxitive", holds(A::Maxitive), self.slots_hold(f, self.chain.bottom(), chain::join)),
                ("minitive", holds(A::Minitive), self.slots_hold(f, self.chain.top(), chain::meet)),
            ]),
            QuasiWeightedMax | QuasiWeightedMin => {
                if !self.quasi(f)? {
                    Outcome::Vacuous
                } else {
                    let (axiom, candidates, construction) = if theorem == QuasiWeightedMax {
                        (A::Maxitive, &self.weighted_max, classify::as_quasi_weighted_max(f))
                    } else {
                        (A::Minitive, &self.weighted_min, classify::as_quasi_weighted_min(f))
                    };
                    let constructed = match construction {
                        Ok(_) => true,
                        Err(Error::Refused(_)) => false,
                        Err(e) => return Ok(Outcome::Disagrees(e.to_string())),
                    };
                    let axiom_holds = holds(axiom);
                    iff(&[
                        ("weighted search", self.factors_through(f, candidates), axiom_holds),
                        ("weighted construction", constructed, axiom_holds),
                    ])
                }
            }
            BooleanHorizontal => {
                if self.chain.size() != 2 {
                    return Err(Error::NotApplicable {
                        theorem: theorem.name().into(),
                        requirement: "chains of size 2".into(),
                    });
                }
                let (lo, hi) = (f.at_bottom(), f.at_top());
                let above_bottom = f.table().iter().all(|&v| lo <= v);
                let below_top = f.table().iter().all(|&v| v <= hi);
                if !above_bottom && !below_top {
                    Outcome::Vacuous
                } else if above_bottom && !holds(A::HorMax) {
                    Outcome::Disagrees("f(0⃗) ≤ f but not HOR_MAX".into())
                } else if below_top && !holds(A::HorMin) {
                    Outcome::Disagrees("f ≤ f(1⃗) but not HOR_MIN".into())
                } else {
                    Outcome::Agrees
                }
            }
            PolynomialChar => {
                let polynomial = poly::is_polynomial_in(f, &self.grid);
                let ri = holds(A::RangeIdempotent);
                iff(&[
                    (
                        "horizontal characterization",
                        polynomial,
                        ri && holds(A::Nondecreasing) && holds(A::HorMax) && holds(A::HorMin),
                    ),
                    ("comonotonic characterization", polynomial, ri && holds(A::ComMax) && holds(A::ComMin)),
                ])
            }
        };
        Ok(outcome)
    }
}

fn all_tuples(m: usize, len: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| (0..m as Elem).map(move |a| [t.clone(), vec![a]].concat()))
            .collect();
    }
    out
}

/// Evaluates one theorem on one function with a fresh context.
pub fn evaluate(theorem: TheoremId, f: &DiscreteFunction) -> Result<Outcome> {
    Context::new(f.chain().size(), f.arity())?.evaluate(theorem, f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub function: DiscreteFunction,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub universe: Universe,
    pub functions_checked: u64,
    /// Functions on which the premise applied.
    pub applicable: u64,
    pub counterexample: Option<Counterexample>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// One line: `holds (N functions)` or the counterexample.
    pub fn summary(&self) -> String {
        match &self.counterexample {
            None => format!("holds ({} functions)", self.functions_checked),
            Some(c) => format!(
                "fails ({} functions): counterexample #{} table={} ({})",
                self.functions_checked,
                c.index,
                tuple_string(c.function.table()),
                c.detail
            ),
        }
    }

    /// One tab-separated record.
    pub fn porcelain(&self) -> String {
        let u = &self.universe;
        let witness = match &self.counterexample {
            None => "-".to_string(),
            Some(c) => {
                let table: Vec<String> = c.function.table().iter().map(|v| v.to_string()).collect();
                format!("{}:{}\tdetail={}", c.index, table.join(","), c.detail)
            }
        };
        format!(
            "theorem={}\tm={}\tn={}\tmode={}\tseed={}\tsamples={}\tchecked={}\tapplicable={}\tholds={}\twitness={}",
            self.theorem,
            u.m,
            u.n,
            u.mode,
            u.seed,
            if u.mode.is_exhaustive() { 0 } else { u.samples },
            self.functions_checked,
            self.applicable,
            self.holds(),
            witness
        )
    }
}

/// Header line of the porcelain format.
pub const PORCELAIN_HEADER: &str = "qp-porcelain 1";

#[derive(Default)]
struct Tally {
    checked: u64,
    applicable: u64,
    first: Option<(u64, DiscreteFunction, String)>,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        let first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        Tally { checked: self.checked + other.checked, applicable: self.applicable + other.applicable, first }
    }
}

/// Runs on the global rayon pool.
pub fn verify(theorem: TheoremId, u: &Universe) -> Result<VerificationReport> {
    let start = Instant::now();
    let size = u.size()?;
    if theorem == TheoremId::BooleanHorizontal && u.m != 2 {
        return Err(Error::NotApplicable { theorem: theorem.name().into(), requirement: "chains of size 2".into() });
    }
    let ctx = Context::new(u.m, u.n)?;
    let tally = (0..size)
        .into_par_iter()
        .map(|i| -> Result<Tally> {
            let Some(f) = u.function(i)? else {
                return Ok(Tally::default());
            };
            let outcome = ctx.evaluate(theorem, &f)?;
            Ok(match outcome {
                Outcome::Vacuous => Tally { checked: 1, ..Tally::default() },
                Outcome::Agrees => Tally { checked: 1, applicable: 1, first: None },
                Outcome::Disagrees(d) => Tally { checked: 1, applicable: 1, first: Some((i, f, d)) },
            })
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(VerificationReport {
        theorem,
        universe: u.clone(),
        functions_checked: tally.checked,
        applicable: tally.applicable,
        counterexample: tally.first.map(|(index, function, detail)| Counterexample { index, function, detail }),
        wall_time: start.elapsed(),
    })
}

/// Like [`verify`], on a dedicated pool of `jobs` workers.
pub fn verify_with_jobs(theorem: TheoremId, u: &Universe, jobs: usize) -> Result<VerificationReport> {
    with_pool(jobs, || verify(theorem, u))
}

fn with_pool<T: Send>(jobs: usize, op: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(op)
}

/// Class sizes over an exhaustive universe: every axiom of
/// [`AxiomId::all`], then the polynomial and quasi-polynomial classes.
pub fn count_classes(u: &Universe) -> Result<Vec<(String, u64)>> {
    if !u.mode.is_exhaustive() {
        return Err(Error::NotApplicable { theorem: "count".into(), requirement: "exhaustive universes".into() });
    }
    let size = u.size()?;
    let grid = Grid::new(u.m, u.n);
    let axioms = AxiomId::all();
    let mut names: Vec<String> = axioms.iter().map(|a| a.to_string()).collect();
    names.extend(
        ["polynomial", "quasi_polynomial", "quasi_sugeno", "quasi_term", "quasi_weighted_max", "quasi_weighted_min"]
            .map(String::from),
    );
    names.push("functions".into());
    let width = names.len();
    let counts = (0..size)
        .into_par_iter()
        .map(|i| -> Result<Vec<u64>> {
            let mut row = vec![0u64; width];
            let Some(f) = u.function(i)? else {
                return Ok(row);
            };
            let checker = AxiomChecker::with_grid(&f, &grid);
            for (slot, a) in row.iter_mut().zip(&axioms) {
                *slot = checker.holds(a)? as u64;
            }
            let report = classify::classify(&f)?;
            let classes = [
                report.is_polynomial(),
                report.is_quasi_polynomial(),
                report.is_quasi_sugeno(),
                report.is_quasi_term(),
                report.is_quasi_weighted_max(),
                report.is_quasi_weighted_min(),
            ];
            for (k, c) in classes.into_iter().enumerate() {
                row[axioms.len() + k] = c as u64;
            }
            row[width - 1] = 1;
            Ok(row)
        })
        .try_reduce(|| vec![0u64; width], |a, b| Ok(a.iter().zip(&b).map(|(x, y)| x + y).collect()))?;
    Ok(names.into_iter().zip(counts).collect())
}

pub fn count_classes_with_jobs(u: &Universe, jobs: usize) -> Result<Vec<(String, u64)>> {
    with_pool(jobs, || count_classes(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes() {
        assert_eq!(enumerate_functions(&Universe::exhaustive(2, 1)).unwrap().count(), 4);
        assert_eq!(Universe::exhaustive(3, 2).size().unwrap(), 19683);
        assert_eq!(enumerate_functions(&Universe::exhaustive_nondecreasing(3, 1)).unwrap().count(), 10);
        assert_eq!(
            Universe::exhaustive(3, 3).size(),
            Err(Error::BudgetExceeded { tables: "3^27".into(), budget: DEFAULT_BUDGET })
        );
        assert_eq!(Universe::sample(3, 2, 0, 1).size(), Err(Error::EmptySample));
    }

    #[test]
    fn exhaustive_order_is_lexicographic() {
        let u = Universe::exhaustive(2, 1);
        let tables: Vec<Vec<Elem>> = enumerate_functions(&u).unwrap().map(|f| f.table().to_vec()).collect();
        assert_eq!(tables, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn exhaustive_tables_are_distinct() {
        let mut all: Vec<DiscreteFunction> = enumerate_functions(&Universe::exhaustive(2, 2)).unwrap().collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn nondecreasing_universe_is_closed_under_duality() {
        let u = Universe::exhaustive_nondecreasing(3, 2);
        let all: Vec<DiscreteFunction> = enumerate_functions(&u).unwrap().collect();
        for f in &all {
            assert!(all.contains(&f.dualize()));
        }
    }

    #[test]
    fn names_round_trip() {
        for &t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!(TheoremId::ALL.len(), 20);
        assert!("T-NOPE".parse::<TheoremId>().is_err());
        assert_eq!("sample-nondecreasing".parse::<Mode>().unwrap(), Mode::SampleNondecreasing);
    }

    #[test]
    fn boolean_check_rejects_larger_chains() {
        let u = Universe::exhaustive(3, 1);
        assert!(matches!(verify(TheoremId::BooleanHorizontal, &u), Err(Error::NotApplicable { .. })));
    }

    #[test]
    fn quasi_median_at_boolean_pairs() {
        let r = verify(TheoremId::QuasiMedian, &Universe::exhaustive(2, 2)).unwrap();
        assert!(r.holds());
        assert_eq!(r.functions_checked, 16);
        assert_eq!(r.summary(), "holds (16 functions)");
    }

    #[test]
    fn reports_do_not_depend_on_worker_count() {
        let u = Universe::exhaustive(2, 2);
        let a = verify_with_jobs(TheoremId::QuasiPol, &u, 1).unwrap();
        let b = verify_with_jobs(TheoremId::QuasiPol, &u, 4).unwrap();
        assert_eq!(a.porcelain(), b.porcelain());
    }

    #[test]
    fn merge_keeps_least_index() {
        let f = |v: Elem| DiscreteFunction::constant(Chain::new(2).unwrap(), 1, v).unwrap();
        let a = Tally { checked: 2, applicable: 1, first: Some((7, f(0), "a".into())) };
        let b = Tally { checked: 3, applicable: 3, first: Some((4, f(1), "b".into())) };
        let merged = a.merge(b);
        assert_eq!((merged.checked, merged.applicable), (5, 4));
        assert_eq!(merged.first.unwrap().0, 4);
    }
}
