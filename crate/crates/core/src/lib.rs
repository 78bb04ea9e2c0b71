//! Lattice polynomial and quasi-polynomial functions over finite chains.
//!
//! Functions `f: Lⁿ → L` on the chain `L = {0, ..., m-1}` are stored as full
//! value tables. On top of the tables sit the normal-form evaluators
//! ([`poly`]), brute-force deciders for the functional equations ([`axioms`]),
//! recognition and factorization `f = p ∘ φ` ([`classify`]) and a harness
//! that checks the characterization theorems over whole universes of small
//! functions ([`verify`]).

pub mod axioms;
pub mod chain;
pub mod classify;
pub mod cli;
pub mod error;
pub mod func;
mod grid;
pub mod io;
pub mod poly;
pub mod rng;
pub mod verify;

pub use axioms::{AxiomId, AxiomResult, LevelSet, Witness};
pub use chain::{Chain, ChainTuple, Elem, Mask, Permutation};
pub use classify::{ClassReport, FactorKind, Factorization, QuasiCheck, Refusal};
pub use error::{Error, Result};
pub use func::{DiscreteFunction, UnaryMap, VertexFunction};
pub use poly::{Capacity, PolynomialCheck, SetFunction};
pub use verify::{Mode, TheoremId, Universe, VerificationReport};
