//! Precomputed coordinates of `Lⁿ` for the brute-force scans.
//!
//! Table index order is lexicographic with the last coordinate fastest.
//! Witness scans use `scan`, the reflected order with the first coordinate
//! fastest, so reported counterexamples are stable across platforms.

use crate::chain::{Elem, Mask};

#[derive(Debug, Clone)]
pub(crate) struct Grid {
    pub m: usize,
    pub n: usize,
    pub len: usize,
    coords: Vec<Elem>,
    strides: Vec<usize>,
    pub scan: Vec<usize>,
}

impl Grid {
    /// Caller guarantees `m^n` fits (checked by `DiscreteFunction` construction).
    pub fn new(m: usize, n: usize) -> Self {
        let len = m.pow(n as u32);
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * m;
        }
        let mut coords = vec![0 as Elem; len * n];
        for idx in 0..len {
            let mut rem = idx;
            for i in (0..n).rev() {
                coords[idx * n + i] = (rem % m) as Elem;
                rem /= m;
            }
        }
        let scan = (0..len)
            .map(|c| {
                let mut rem = c;
                let mut idx = 0;
                for &stride in &strides {
                    idx += (rem % m) * stride;
                    rem /= m;
                }
                idx
            })
            .collect();
        Grid { m, n, len, coords, strides, scan }
    }

    #[inline]
    pub fn coords(&self, idx: usize) -> &[Elem] {
        &self.coords[idx * self.n..(idx + 1) * self.n]
    }

    #[inline]
    pub fn stride(&self, k: usize) -> usize {
        self.strides[k]
    }

    #[inline]
    pub fn index(&self, x: &[Elem]) -> usize {
        x.iter().zip(&self.strides).map(|(&a, s)| a as usize * s).sum()
    }

    #[inline]
    pub fn map_index(&self, idx: usize, op: impl Fn(Elem) -> Elem) -> usize {
        self.coords(idx).iter().zip(&self.strides).map(|(&a, s)| op(a) as usize * s).sum()
    }

    #[inline]
    pub fn zip_index(&self, a: usize, b: usize, op: impl Fn(Elem, Elem) -> Elem) -> usize {
        let (x, y) = (self.coords(a), self.coords(b));
        (0..self.n).map(|i| op(x[i], y[i]) as usize * self.strides[i]).sum()
    }

    /// Index of the constant tuple `(c, ..., c)`.
    #[inline]
    pub fn diagonal_index(&self, c: Elem) -> usize {
        c as usize * self.strides.iter().sum::<usize>()
    }

    /// Index of `e_I ∧ c` (which equals `e_I` with top replaced by `c`).
    #[inline]
    pub fn vertex_cut_index(&self, mask: Mask, c: Elem) -> usize {
        (0..self.n).filter(|&i| mask >> i & 1 == 1).map(|i| c as usize * self.strides[i]).sum()
    }

    /// Index of `e_I ∨ c`.
    #[inline]
    pub fn vertex_lift_index(&self, mask: Mask, c: Elem) -> usize {
        let top = self.m - 1;
        (0..self.n)
            .map(|i| if mask >> i & 1 == 1 { top } else { c as usize } * self.strides[i])
            .sum()
    }

    /// Index of `x` with coordinate `k` replaced by `c`.
    #[inline]
    pub fn pin_index(&self, idx: usize, k: usize, c: Elem) -> usize {
        let old = self.coords(idx)[k] as usize;
        idx - old * self.strides[k] + c as usize * self.strides[k]
    }
}
