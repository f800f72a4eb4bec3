//! Periodic grids: sampling points and signed wavenumbers per axis.

use crate::error::{Error, Result};
use std::sync::Arc;

#[derive(Debug)]
struct GridInner {
    d: usize,
    n: Vec<usize>,
    len: Vec<f64>,
    /// Signed wavenumbers xi_k = 2 pi k / L in FFT index order, per axis.
    xi: Vec<Vec<f64>>,
    /// Centered physical coordinates -L/2 + j h, per axis.
    x: Vec<Vec<f64>>,
}

/// A periodic sampling grid on [-L/2, L/2)^d. Cheap to clone (shared).
#[derive(Debug, Clone)]
pub struct Grid(Arc<GridInner>);

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.d == other.0.d && self.0.n == other.0.n && self.0.len == other.0.len)
    }
}

/// Builds a grid with wavenumbers xi = 2 pi k / L; the Nyquist frequency is
/// stored once (at FFT index N/2) with positive sign.
pub fn make_grid(d: usize, len: &[f64], n: &[usize]) -> Result<Grid> {
    if d != 1 && d != 2 {
        return Err(Error::Config(format!("dimension must be 1 or 2, got {d}")));
    }
    if len.len() != d || n.len() != d {
        return Err(Error::Config(format!(
            "expected {d} side lengths and sample counts, got {} and {}",
            len.len(),
            n.len()
        )));
    }
    for (&l, &ni) in len.iter().zip(n) {
        if !(l > 0.0) || !l.is_finite() {
            return Err(Error::Config(format!("side length must be positive, got {l}")));
        }
        if ni < 32 || !ni.is_power_of_two() {
            return Err(Error::Config(format!(
                "sample count must be a power of two >= 32, got {ni}"
            )));
        }
    }
    let mut xi = Vec::with_capacity(d);
    let mut x = Vec::with_capacity(d);
    for axis in 0..d {
        let ni = n[axis];
        let li = len[axis];
        let dxi = 2.0 * std::f64::consts::PI / li;
        let h = li / ni as f64;
        xi.push(
            (0..ni)
                .map(|k| {
                    let signed = if k <= ni / 2 { k as i64 } else { k as i64 - ni as i64 };
                    dxi * signed as f64
                })
                .collect(),
        );
        x.push((0..ni).map(|j| -li / 2.0 + j as f64 * h).collect());
    }
    Ok(Grid(Arc::new(GridInner {
        d,
        n: n.to_vec(),
        len: len.to_vec(),
        xi,
        x,
    })))
}

impl Grid {
    pub fn dim(&self) -> usize {
        self.0.d
    }

    pub fn n(&self) -> &[usize] {
        &self.0.n
    }

    pub fn len(&self) -> &[f64] {
        &self.0.len
    }

    /// Total number of sample points.
    pub fn total(&self) -> usize {
        self.0.n.iter().product()
    }

    /// Grid spacing per axis.
    pub fn h(&self, axis: usize) -> f64 {
        self.0.len[axis] / self.0.n[axis] as f64
    }

    /// Volume element h_0 * ... * h_{d-1}.
    pub fn cell_volume(&self) -> f64 {
        (0..self.0.d).map(|a| self.h(a)).product()
    }

    /// Signed wavenumbers along one axis, FFT index order.
    pub fn xi(&self, axis: usize) -> &[f64] {
        &self.0.xi[axis]
    }

    /// Centered physical coordinates along one axis.
    pub fn x(&self, axis: usize) -> &[f64] {
        &self.0.x[axis]
    }

    /// Largest resolved |xi| along any axis.
    pub fn xi_max(&self) -> f64 {
        self.0
            .xi
            .iter()
            .flat_map(|v| v.iter().map(|x| x.abs()))
            .fold(0.0, f64::max)
    }

    /// Decomposes a flat row-major index into per-axis indices.
    #[inline]
    pub fn unravel(&self, flat: usize) -> [usize; 2] {
        match self.0.d {
            1 => [flat, 0],
            _ => [flat / self.0.n[1], flat % self.0.n[1]],
        }
    }

    /// Physical coordinates of a flat index (second entry 0 in 1d).
    #[inline]
    pub fn coord(&self, flat: usize) -> [f64; 2] {
        let idx = self.unravel(flat);
        match self.0.d {
            1 => [self.0.x[0][idx[0]], 0.0],
            _ => [self.0.x[0][idx[0]], self.0.x[1][idx[1]]],
        }
    }

    /// Wavenumber vector at a flat spectral index (second entry 0 in 1d).
    #[inline]
    pub fn xi_at(&self, flat: usize) -> [f64; 2] {
        let idx = self.unravel(flat);
        match self.0.d {
            1 => [self.0.xi[0][idx[0]], 0.0],
            _ => [self.0.xi[0][idx[0]], self.0.xi[1][idx[1]]],
        }
    }

    /// True if the flat spectral index sits on the Nyquist plane of `axis`.
    #[inline]
    pub fn is_nyquist(&self, flat: usize, axis: usize) -> bool {
        self.unravel(flat)[axis] == self.0.n[axis] / 2
    }

    /// Same lengths, each axis refined by `factor` (power of two).
    pub fn refined(&self, factor: usize) -> Result<Grid> {
        let n: Vec<usize> = self.0.n.iter().map(|&ni| ni * factor).collect();
        make_grid(self.0.d, &self.0.len, &n)
    }
}
