//! Brute-force deciders, with counterexample witnesses, for the functional
//! equations and monotonicity conditions studied on `f: Lⁿ → L`.
//!
//! Every checker scans its full quantifier domain. Points are visited with the
//! first coordinate varying fastest, levels and coordinates in ascending
//! order, so the reported witness is the first failure in that order. A
//! witness can always be replayed with [`replay`].

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::chain::{self, comonotonic, tuple_string, Chain, Elem, Mask};
use crate::error::{Error, Result};
use crate::func::DiscreteFunction;
use crate::grid::Grid;

/// The level set `S` of S-max/min homogeneity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LevelSet {
    /// The convex hull of the range of the checked function.
    RangeHull,
    Explicit(Vec<Elem>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AxiomId {
    /// `a ≤ b ⇒ f(a) ≤ f(b)`
    Nondecreasing,
    /// `f(c, ..., c) = c` for all `c`
    Idempotent,
    /// `f(c, ..., c) = c` for `c` in the convex hull of the range
    RangeIdempotent,
    /// `f(x) = f(x ∧ c) ∨ f([x]_c)`
    HorMax,
    /// `f(x) = f(x ∨ c) ∧ f([x]^c)`
    HorMin,
    /// `f(e ∧ c) ≤ f(e' ∧ c)` for vertices `e ≤ e'`
    P1,
    /// `f(e ∨ c) ≤ f(e' ∨ c)` for vertices `e ≤ e'`
    D1,
    /// `f(e ∧ c) ≤ f(e ∧ c')` for `c ≤ c'`
    P2,
    /// `f(e ∨ c) ≤ f(e ∨ c')` for `c ≤ c'`
    D2,
    /// `f(x ∨ x') = f(x) ∨ f(x')` for comonotonic `x, x'`
    ComMax,
    /// `f(x ∧ x') = f(x) ∧ f(x')` for comonotonic `x, x'`
    ComMin,
    Maxitive,
    Minitive,
    /// `f(x ∨ c) = f(x) ∨ c` for `c ∈ S`
    SMaxHom(LevelSet),
    /// `f(x ∧ c) = f(x) ∧ c` for `c ∈ S`
    SMinHom(LevelSet),
    /// `f(x ∨ c) = f(x) ∨ δ_f(c)`
    QuasiMaxHom,
    /// `f(x ∧ c) = f(x) ∧ δ_f(c)`
    QuasiMinHom,
    /// `f(x) = med(f(x_k^0), x_k, f(x_k^1))`
    MedianDecomp,
    /// `f(x) = med(f(x_k^0), δ_f(x_k), f(x_k^1))`
    QuasiMedianDecomp,
    /// `f(x) ∈ {x_1, ..., x_n}`
    Conservative,
    /// `f(x) ∈ {δ_f(x_1), ..., δ_f(x_n)}`
    QuasiConservative,
}

impl AxiomId {
    /// Every axiom, S-homogeneity taken over the range hull. This is the
    /// order used by [`check_all`].
    pub fn all() -> Vec<AxiomId> {
        use AxiomId::*;
        vec![
            Nondecreasing,
            Idempotent,
            RangeIdempotent,
            HorMax,
            HorMin,
            P1,
            D1,
            P2,
            D2,
            ComMax,
            ComMin,
            Maxitive,
            Minitive,
            SMaxHom(LevelSet::RangeHull),
            SMinHom(LevelSet::RangeHull),
            QuasiMaxHom,
            QuasiMinHom,
            MedianDecomp,
            QuasiMedianDecomp,
            Conservative,
            QuasiConservative,
        ]
    }

    pub fn name(&self) -> &'static str {
        use AxiomId::*;
        match self {
            Nondecreasing => "NONDECREASING",
            Idempotent => "IDEMPOTENT",
            RangeIdempotent => "RANGE_IDEMPOTENT",
            HorMax => "HOR_MAX",
            HorMin => "HOR_MIN",
            P1 => "P1",
            D1 => "D1",
            P2 => "P2",
            D2 => "D2",
            ComMax => "COM_MAX",
            ComMin => "COM_MIN",
            Maxitive => "MAXITIVE",
            Minitive => "MINITIVE",
            SMaxHom(_) => "S_MAX_HOM",
            SMinHom(_) => "S_MIN_HOM",
            QuasiMaxHom => "QUASI_MAX_HOM",
            QuasiMinHom => "QUASI_MIN_HOM",
            MedianDecomp => "MEDIAN_DECOMP",
            QuasiMedianDecomp => "QUASI_MEDIAN_DECOMP",
            Conservative => "CONSERVATIVE",
            QuasiConservative => "QUASI_CONSERVATIVE",
        }
    }

    /// The axiom that `f^d` satisfies exactly when `f` satisfies `self`.
    pub fn dual(&self, chain: Chain) -> AxiomId {
        use AxiomId::*;
        let flip = |s: &LevelSet| match s {
            LevelSet::RangeHull => LevelSet::RangeHull,
            LevelSet::Explicit(v) => {
                let mut d: Vec<Elem> = v.iter().map(|&c| chain.neg(c)).collect();
                d.sort_unstable();
                LevelSet::Explicit(d)
            }
        };
        match self {
            HorMax => HorMin,
            HorMin => HorMax,
            P1 => D1,
            D1 => P1,
            P2 => D2,
            D2 => P2,
            ComMax => ComMin,
            ComMin => ComMax,
            Maxitive => Minitive,
            Minitive => Maxitive,
            SMaxHom(s) => SMinHom(flip(s)),
            SMinHom(s) => SMaxHom(flip(s)),
            QuasiMaxHom => QuasiMinHom,
            QuasiMinHom => QuasiMaxHom,
            other => other.clone(),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if let AxiomId::SMaxHom(LevelSet::Explicit(s)) | AxiomId::SMinHom(LevelSet::Explicit(s)) = self {
            let parts: Vec<String> = s.iter().map(|c| c.to_string()).collect();
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    /// Accepts the names of [`AxiomId::name`]; S-homogeneity takes an optional
    /// `:c1,c2,...` suffix (default: range hull).
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName { kind: "axiom", name: s.to_string() };
        let (head, levels) = match s.split_once(':') {
            Some((h, rest)) => {
                let parsed: std::result::Result<Vec<Elem>, _> = if rest.is_empty() {
                    Ok(Vec::new())
                } else {
                    rest.split(',').map(|t| t.trim().parse::<Elem>()).collect()
                };
                (h, Some(parsed.map_err(|_| unknown())?))
            }
            None => (s, None),
        };
        let level_set = || match &levels {
            Some(v) => LevelSet::Explicit(v.clone()),
            None => LevelSet::RangeHull,
        };
        let id = match head.to_ascii_uppercase().replace('-', "_").as_str() {
            "S_MAX_HOM" => AxiomId::SMaxHom(level_set()),
            "S_MIN_HOM" => AxiomId::SMinHom(level_set()),
            name => {
                if levels.is_some() {
                    return Err(unknown());
                }
                AxiomId::all().into_iter().find(|a| a.name() == name).ok_or_else(unknown)?
            }
        };
        Ok(id)
    }
}

/// A concrete instance of an axiom's quantifier at which it fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Level { c: Elem },
    Point { x: Vec<Elem> },
    /// For monotonicity `x ≤ y`; otherwise the two arguments.
    Pair { x: Vec<Elem>, y: Vec<Elem> },
    Cut { x: Vec<Elem>, c: Elem },
    /// Vertices `e_lower ≤ e_upper` cut at `c`.
    Vertices { lower: Mask, upper: Mask, c: Elem },
    /// Vertex `e_vertex` cut at levels `low ≤ high`.
    Levels { vertex: Mask, low: Elem, high: Elem },
    Coordinate { x: Vec<Elem>, k: usize },
}

impl Witness {
    /// The corresponding violation for `f^d` and the dual axiom.
    pub fn dual(&self, chain: Chain, arity: usize) -> Witness {
        let neg = |x: &[Elem]| x.iter().map(|&a| chain.neg(a)).collect::<Vec<_>>();
        let full = (1usize << arity) - 1;
        match self {
            Witness::Level { c } => Witness::Level { c: chain.neg(*c) },
            Witness::Point { x } => Witness::Point { x: neg(x) },
            Witness::Pair { x, y } => Witness::Pair { x: neg(y), y: neg(x) },
            Witness::Cut { x, c } => Witness::Cut { x: neg(x), c: chain.neg(*c) },
            Witness::Vertices { lower, upper, c } => Witness::Vertices {
                lower: full ^ upper,
                upper: full ^ lower,
                c: chain.neg(*c),
            },
            Witness::Levels { vertex, low, high } => Witness::Levels {
                vertex: full ^ vertex,
                low: chain.neg(*high),
                high: chain.neg(*low),
            },
            Witness::Coordinate { x, k } => Witness::Coordinate { x: neg(x), k: *k },
        }
    }
}

fn mask_string(mask: Mask, arity: usize) -> String {
    let items: Vec<String> = (0..arity).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Level { c } => write!(f, "c={c}"),
            Witness::Point { x } => write!(f, "x={}", tuple_string(x)),
            Witness::Pair { x, y } => write!(f, "x={}, x'={}", tuple_string(x), tuple_string(y)),
            Witness::Cut { x, c } => write!(f, "x={}, c={c}", tuple_string(x)),
            // arity is not known here; print raw masks
            Witness::Vertices { lower, upper, c } => write!(f, "I={lower:#b}, J={upper:#b}, c={c}"),
            Witness::Levels { vertex, low, high } => write!(f, "I={vertex:#b}, c={low}, c'={high}"),
            Witness::Coordinate { x, k } => write!(f, "x={}, k={}", tuple_string(x), k + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    /// Present exactly when the axiom fails.
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    /// One-line account of the failure with the values involved.
    pub fn describe(&self, f: &DiscreteFunction) -> String {
        match &self.witness {
            None => "holds".to_string(),
            Some(w) => format!("fails ({})", violation_detail(f, &self.axiom, w)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Instance {
    Level(Elem),
    Point(usize),
    Pair(usize, usize),
    Cut(usize, Elem),
    Vertices(Mask, Mask, Elem),
    Levels(Mask, Elem, Elem),
    Coordinate(usize, usize),
}

/// Evaluation context reused across axioms for one function.
pub struct AxiomChecker<'a> {
    f: &'a DiscreteFunction,
    grid: Cow<'a, Grid>,
    diag: Vec<Elem>,
    hull: (Elem, Elem),
}

impl<'a> AxiomChecker<'a> {
    pub fn new(f: &'a DiscreteFunction) -> Self {
        Self::build(f, Cow::Owned(f.grid()))
    }

    pub(crate) fn with_grid(f: &'a DiscreteFunction, grid: &'a Grid) -> Self {
        Self::build(f, Cow::Borrowed(grid))
    }

    fn build(f: &'a DiscreteFunction, grid: Cow<'a, Grid>) -> Self {
        let diag = f.diagonal().values().to_vec();
        AxiomChecker { f, grid, diag, hull: f.range_hull() }
    }

    fn levels(&self, s: &LevelSet) -> Result<Vec<Elem>> {
        match s {
            LevelSet::RangeHull => Ok((self.hull.0..=self.hull.1).collect()),
            LevelSet::Explicit(v) => {
                for &c in v {
                    if !self.f.chain().contains(c) {
                        return Err(Error::InvalidLevelSet { value: c as usize, size: self.f.chain().size() });
                    }
                }
                Ok(v.clone())
            }
        }
    }

    pub fn check(&self, axiom: &AxiomId) -> Result<AxiomResult> {
        let levels = match axiom {
            AxiomId::SMaxHom(s) | AxiomId::SMinHom(s) => self.levels(s)?,
            _ => Vec::new(),
        };
        let failure = self.first_failure(axiom, &levels);
        Ok(AxiomResult { axiom: axiom.clone(), witness: failure.map(|i| self.witness(i)) })
    }

    /// Decision only, without materializing the witness.
    pub fn holds(&self, axiom: &AxiomId) -> Result<bool> {
        Ok(self.check(axiom)?.holds())
    }

    fn first_failure(&self, axiom: &AxiomId, levels: &[Elem]) -> Option<Instance> {
        use AxiomId::*;
        let g = &*self.grid;
        let chain = self.f.chain();
        let n = g.n;
        let masks = 1usize << n;
        let ok = |i: &Instance| self.instance_holds(axiom, *i);
        let points = || g.scan.iter().copied();
        let pairs = || points().flat_map(move |a| points().map(move |b| Instance::Pair(a, b)));
        let cuts = || points().flat_map(move |x| chain.elements().map(move |c| Instance::Cut(x, c)));
        match axiom {
            Nondecreasing => self
                .f
                .monotonicity_violation_in(g)
                .map(|(a, b)| Instance::Pair(a, b)),
            Idempotent => chain.elements().map(Instance::Level).find(|i| !ok(i)),
            RangeIdempotent => (self.hull.0..=self.hull.1).map(Instance::Level).find(|i| !ok(i)),
            HorMax | HorMin | QuasiMaxHom | QuasiMinHom => cuts().find(|i| !ok(i)),
            SMaxHom(_) | SMinHom(_) => points()
                .flat_map(|x| levels.iter().map(move |&c| Instance::Cut(x, c)))
                .find(|i| !ok(i)),
            P1 | D1 => (0..masks)
                .flat_map(|lo| (0..masks).filter(move |hi| lo & hi == lo).map(move |hi| (lo, hi)))
                .flat_map(|(lo, hi)| chain.elements().map(move |c| Instance::Vertices(lo, hi, c)))
                .find(|i| !ok(i)),
            P2 | D2 => (0..masks)
                .flat_map(|e| {
                    chain.elements().flat_map(move |c| (c..=chain.top()).map(move |d| Instance::Levels(e, c, d)))
                })
                .find(|i| !ok(i)),
            ComMax | ComMin | Maxitive | Minitive => pairs().find(|i| !ok(i)),
            MedianDecomp | QuasiMedianDecomp => points()
                .flat_map(|x| (0..n).map(move |k| Instance::Coordinate(x, k)))
                .find(|i| !ok(i)),
            Conservative | QuasiConservative => points().map(Instance::Point).find(|i| !ok(i)),
        }
    }

    fn instance_holds(&self, axiom: &AxiomId, inst: Instance) -> bool {
        use AxiomId::*;
        let g = &*self.grid;
        let f = |idx: usize| self.f.at_index(idx);
        let top = self.f.chain().top();
        let d = |c: Elem| self.diag[c as usize];
        match (axiom, inst) {
            (Nondecreasing, Instance::Pair(a, b)) => f(a) <= f(b),
            (Idempotent | RangeIdempotent, Instance::Level(c)) => f(g.diagonal_index(c)) == c,
            (HorMax, Instance::Cut(x, c)) => {
                let low = g.map_index(x, |a| chain::meet(a, c));
                let high = g.map_index(x, |a| if a <= c { 0 } else { a });
                f(x) == chain::join(f(low), f(high))
            }
            (HorMin, Instance::Cut(x, c)) => {
                let high = g.map_index(x, |a| chain::join(a, c));
                let low = g.map_index(x, |a| if a >= c { top } else { a });
                f(x) == chain::meet(f(high), f(low))
            }
            (P1, Instance::Vertices(lo, hi, c)) => f(g.vertex_cut_index(lo, c)) <= f(g.vertex_cut_index(hi, c)),
            (D1, Instance::Vertices(lo, hi, c)) => f(g.vertex_lift_index(lo, c)) <= f(g.vertex_lift_index(hi, c)),
            (P2, Instance::Levels(e, c, c2)) => f(g.vertex_cut_index(e, c)) <= f(g.vertex_cut_index(e, c2)),
            (D2, Instance::Levels(e, c, c2)) => f(g.vertex_lift_index(e, c)) <= f(g.vertex_lift_index(e, c2)),
            (ComMax, Instance::Pair(a, b)) => {
                !comonotonic(g.coords(a), g.coords(b)) || f(g.zip_index(a, b, chain::join)) == chain::join(f(a), f(b))
            }
            (ComMin, Instance::Pair(a, b)) => {
                !comonotonic(g.coords(a), g.coords(b)) || f(g.zip_index(a, b, chain::meet)) == chain::meet(f(a), f(b))
            }
            (Maxitive, Instance::Pair(a, b)) => f(g.zip_index(a, b, chain::join)) == chain::join(f(a), f(b)),
            (Minitive, Instance::Pair(a, b)) => f(g.zip_index(a, b, chain::meet)) == chain::meet(f(a), f(b)),
            (SMaxHom(_), Instance::Cut(x, c)) => f(g.map_index(x, |a| chain::join(a, c))) == chain::join(f(x), c),
            (SMinHom(_), Instance::Cut(x, c)) => f(g.map_index(x, |a| chain::meet(a, c))) == chain::meet(f(x), c),
            (QuasiMaxHom, Instance::Cut(x, c)) => {
                f(g.map_index(x, |a| chain::join(a, c))) == chain::join(f(x), d(c))
            }
            (QuasiMinHom, Instance::Cut(x, c)) => {
                f(g.map_index(x, |a| chain::meet(a, c))) == chain::meet(f(x), d(c))
            }
            (MedianDecomp, Instance::Coordinate(x, k)) => {
                let xk = g.coords(x)[k];
                f(x) == chain::median(f(g.pin_index(x, k, 0)), xk, f(g.pin_index(x, k, top)))
            }
            (QuasiMedianDecomp, Instance::Coordinate(x, k)) => {
                let xk = d(g.coords(x)[k]);
                f(x) == chain::median(f(g.pin_index(x, k, 0)), xk, f(g.pin_index(x, k, top)))
            }
            (Conservative, Instance::Point(x)) => g.coords(x).contains(&f(x)),
            (QuasiConservative, Instance::Point(x)) => g.coords(x).iter().any(|&a| d(a) == f(x)),
            _ => true,
        }
    }

    fn witness(&self, inst: Instance) -> Witness {
        let g = &*self.grid;
        let p = |idx: usize| g.coords(idx).to_vec();
        match inst {
            Instance::Level(c) => Witness::Level { c },
            Instance::Point(x) => Witness::Point { x: p(x) },
            Instance::Pair(a, b) => Witness::Pair { x: p(a), y: p(b) },
            Instance::Cut(x, c) => Witness::Cut { x: p(x), c },
            Instance::Vertices(lower, upper, c) => Witness::Vertices { lower, upper, c },
            Instance::Levels(vertex, low, high) => Witness::Levels { vertex, low, high },
            Instance::Coordinate(x, k) => Witness::Coordinate { x: p(x), k },
        }
    }

    fn instance(&self, axiom: &AxiomId, w: &Witness) -> Result<Option<Instance>> {
        let g = &*self.grid;
        let chain = self.f.chain();
        let masks = 1usize << g.n;
        let point = |x: &[Elem]| -> Result<usize> {
            if x.len() != g.n {
                return Err(Error::ArityMismatch { expected: g.n, found: x.len() });
            }
            for &a in x {
                chain.check(a)?;
            }
            Ok(g.index(x))
        };
        let mask = |m: Mask| -> Result<Mask> {
            if m < masks {
                Ok(m)
            } else {
                Err(Error::CoordinateOutOfRange { index: m, arity: g.n })
            }
        };
        use AxiomId::*;
        let inst = match (axiom, w) {
            (Idempotent, Witness::Level { c }) => Instance::Level(chain.check(*c)?),
            (RangeIdempotent, Witness::Level { c }) => {
                if *c < self.hull.0 || *c > self.hull.1 {
                    return Ok(None);
                }
                Instance::Level(*c)
            }
            (Conservative | QuasiConservative, Witness::Point { x }) => Instance::Point(point(x)?),
            (Nondecreasing, Witness::Pair { x, y }) => {
                if !x.iter().zip(y).all(|(a, b)| a <= b) {
                    return Ok(None);
                }
                Instance::Pair(point(x)?, point(y)?)
            }
            (ComMax | ComMin | Maxitive | Minitive, Witness::Pair { x, y }) => Instance::Pair(point(x)?, point(y)?),
            (HorMax | HorMin | QuasiMaxHom | QuasiMinHom, Witness::Cut { x, c }) => {
                Instance::Cut(point(x)?, chain.check(*c)?)
            }
            (SMaxHom(s) | SMinHom(s), Witness::Cut { x, c }) => {
                if !self.levels(s)?.contains(c) {
                    return Ok(None);
                }
                Instance::Cut(point(x)?, *c)
            }
            (P1 | D1, Witness::Vertices { lower, upper, c }) => {
                if lower & upper != *lower {
                    return Ok(None);
                }
                Instance::Vertices(mask(*lower)?, mask(*upper)?, chain.check(*c)?)
            }
            (P2 | D2, Witness::Levels { vertex, low, high }) => {
                if low > high {
                    return Ok(None);
                }
                Instance::Levels(mask(*vertex)?, chain.check(*low)?, chain.check(*high)?)
            }
            (MedianDecomp | QuasiMedianDecomp, Witness::Coordinate { x, k }) => {
                if *k >= g.n {
                    return Err(Error::CoordinateOutOfRange { index: *k, arity: g.n });
                }
                Instance::Coordinate(point(x)?, *k)
            }
            _ => return Ok(None),
        };
        Ok(Some(inst))
    }
}

pub fn check(f: &DiscreteFunction, axiom: &AxiomId) -> Result<AxiomResult> {
    AxiomChecker::new(f).check(axiom)
}

/// One result per entry of [`AxiomId::all`], in that order.
pub fn check_all(f: &DiscreteFunction) -> Vec<AxiomResult> {
    let checker = AxiomChecker::new(f);
    AxiomId::all()
        .iter()
        .map(|a| checker.check(a).expect("range-hull level sets are always valid"))
        .collect()
}

/// True iff `witness` is a genuine violation of `axiom` by `f`. Witnesses of
/// the wrong shape, or outside the axiom's quantifier domain, are not
/// violations; malformed tuples are errors.
pub fn replay(f: &DiscreteFunction, axiom: &AxiomId, witness: &Witness) -> Result<bool> {
    let checker = AxiomChecker::new(f);
    Ok(match checker.instance(axiom, witness)? {
        Some(inst) => !checker.instance_holds(axiom, inst),
        None => false,
    })
}

fn violation_detail(f: &DiscreteFunction, axiom: &AxiomId, w: &Witness) -> String {
    use AxiomId::*;
    let at = |x: &[Elem]| f.at(x);
    let map = |x: &[Elem], op: &dyn Fn(Elem) -> Elem| x.iter().map(|&a| op(a)).collect::<Vec<_>>();
    let d = f.diagonal();
    let top = f.chain().top();
    let arity = f.arity();
    match (axiom, w) {
        (Nondecreasing, Witness::Pair { x, y }) => {
            format!("{w}: f(x)={} > f(x')={}", at(x), at(y))
        }
        (Idempotent | RangeIdempotent, Witness::Level { c }) => {
            format!("{w}: f(c,…,c)={} ≠ {c}", at(&vec![*c; arity]))
        }
        (HorMax, Witness::Cut { x, c }) => {
            let low = map(x, &|a| a.min(*c));
            let high = map(x, &|a| if a <= *c { 0 } else { a });
            format!("{w}: f(x)={} ≠ f(x∧c)∨f([x]_c)={}", at(x), at(&low).max(at(&high)))
        }
        (HorMin, Witness::Cut { x, c }) => {
            let high = map(x, &|a| a.max(*c));
            let low = map(x, &|a| if a >= *c { top } else { a });
            format!("{w}: f(x)={} ≠ f(x∨c)∧f([x]^c)={}", at(x), at(&high).min(at(&low)))
        }
        (P1 | D1, Witness::Vertices { lower, upper, c }) => {
            let v = |m: Mask| {
                let e = crate::chain::vertex_components(f.chain(), arity, m);
                if *axiom == P1 { map(&e, &|a| a.min(*c)) } else { map(&e, &|a| a.max(*c)) }
            };
            format!(
                "I={}, J={}, c={c}: {} > {}",
                mask_string(*lower, arity),
                mask_string(*upper, arity),
                at(&v(*lower)),
                at(&v(*upper))
            )
        }
        (P2 | D2, Witness::Levels { vertex, low, high }) => {
            let e = crate::chain::vertex_components(f.chain(), arity, *vertex);
            let v = |c: Elem| if *axiom == P2 { map(&e, &|a| a.min(c)) } else { map(&e, &|a| a.max(c)) };
            format!(
                "I={}, c={low}, c'={high}: {} > {}",
                mask_string(*vertex, arity),
                at(&v(*low)),
                at(&v(*high))
            )
        }
        (ComMax | Maxitive, Witness::Pair { x, y }) => {
            let j: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| a.max(b)).collect();
            format!("{w}: f(x∨x')={} ≠ f(x)∨f(x')={}", at(&j), at(x).max(at(y)))
        }
        (ComMin | Minitive, Witness::Pair { x, y }) => {
            let j: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| a.min(b)).collect();
            format!("{w}: f(x∧x')={} ≠ f(x)∧f(x')={}", at(&j), at(x).min(at(y)))
        }
        (SMaxHom(_), Witness::Cut { x, c }) => {
            format!("{w}: f(x∨c)={} ≠ f(x)∨c={}", at(&map(x, &|a| a.max(*c))), at(x).max(*c))
        }
        (SMinHom(_), Witness::Cut { x, c }) => {
            format!("{w}: f(x∧c)={} ≠ f(x)∧c={}", at(&map(x, &|a| a.min(*c))), at(x).min(*c))
        }
        (QuasiMaxHom, Witness::Cut { x, c }) => format!(
            "{w}: f(x∨c)={} ≠ f(x)∨δ_f(c)={}",
            at(&map(x, &|a| a.max(*c))),
            at(x).max(d.at(*c))
        ),
        (QuasiMinHom, Witness::Cut { x, c }) => format!(
            "{w}: f(x∧c)={} ≠ f(x)∧δ_f(c)={}",
            at(&map(x, &|a| a.min(*c))),
            at(x).min(d.at(*c))
        ),
        (MedianDecomp | QuasiMedianDecomp, Witness::Coordinate { x, k }) => {
            let mut lo = x.clone();
            lo[*k] = 0;
            let mut hi = x.clone();
            hi[*k] = top;
            let mid = if *axiom == MedianDecomp { x[*k] } else { d.at(x[*k]) };
            format!("{w}: f(x)={} ≠ med(...)={}", at(x), chain::median(at(&lo), mid, at(&hi)))
        }
        (Conservative | QuasiConservative, Witness::Point { x }) => format!("{w}: f(x)={}", at(x)),
        _ => w.to_string(),
    }
}
