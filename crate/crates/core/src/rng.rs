//! Seeded generators for random tables.
//!
//! The stream is SplitMix64. A value below `k` is drawn as `next_u64() % k`.
//! Sample `i` of a corpus with master seed `s` uses the `i`-th output of the
//! stream seeded with `s` as its own seed, so any sample can be regenerated
//! on its own.
//!
//! Tables are filled in index order (last coordinate fastest). Nondecreasing
//! tables are drawn by rejection when `m = 2, n ≤ 3`; otherwise each entry is
//! a uniform draw raised to the maximum of its lower covers. The second method
//! is not uniform over nondecreasing tables.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::chain::{Chain, Elem};
use crate::error::Result;
use crate::func::{self, DiscreteFunction, UnaryMap};
use crate::grid::Grid;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    Any,
    Nondecreasing,
}

/// Seed of sample `index` in the corpus with master seed `seed`.
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    let mut rng = SplitMix64::seed_from_u64(seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)));
    rng.next_u64()
}

fn below(rng: &mut SplitMix64, k: usize) -> Elem {
    (rng.next_u64() % k as u64) as Elem
}

pub fn random_function(m: usize, n: usize, seed: u64, constraint: Constraint) -> Result<DiscreteFunction> {
    let chain = Chain::new(m)?;
    let len = func::table_len(m, n)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let table = match constraint {
        Constraint::Any => (0..len).map(|_| below(&mut rng, m)).collect(),
        Constraint::Nondecreasing if m == 2 && n <= 3 => loop {
            let table: Vec<Elem> = (0..len).map(|_| below(&mut rng, m)).collect();
            let f = DiscreteFunction::from_table_unchecked(chain, n, table);
            if f.is_nondecreasing() {
                return Ok(f);
            }
        },
        Constraint::Nondecreasing => {
            let grid = Grid::new(m, n);
            let mut table = vec![0 as Elem; len];
            for idx in 0..len {
                let x = grid.coords(idx);
                let lb = (0..n).filter(|&k| x[k] > 0).map(|k| table[idx - grid.stride(k)]).max().unwrap_or(0);
                table[idx] = lb.max(below(&mut rng, m));
            }
            table
        }
    };
    Ok(DiscreteFunction::from_table_unchecked(chain, n, table))
}

/// `p ∘ φ` with `p` polynomial on a random isotone vertex function and `φ`
/// a random nondecreasing map.
pub fn random_quasi_polynomial(m: usize, n: usize, seed: u64) -> Result<DiscreteFunction> {
    let chain = Chain::new(m)?;
    func::table_len(m, n)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut alpha = vec![0 as Elem; 1 << n];
    for mask in 0..alpha.len() {
        let lb = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| alpha[mask ^ 1 << i]).max().unwrap_or(0);
        alpha[mask] = lb.max(below(&mut rng, m));
    }
    let mut phi = vec![0 as Elem; m];
    for a in 0..m {
        let lb = if a == 0 { 0 } else { phi[a - 1] };
        phi[a] = lb.max(below(&mut rng, m));
    }
    let alpha = crate::poly::SetFunction::new(chain, n, alpha)?;
    let p = crate::poly::dnf_table(&alpha)?;
    p.compose_unary(&UnaryMap::new(chain, phi)?)
}
