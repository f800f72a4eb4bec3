//! Thin wrapper around rustfft: unnormalized multi-axis transforms on
//! row-major complex buffers, with per-thread plan caching.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

thread_local! {
    static PLANS: RefCell<(FftPlanner<f64>, HashMap<(usize, bool), Arc<dyn Fft<f64>>>)> =
        RefCell::new((FftPlanner::new(), HashMap::new()));
}

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|cell| {
        let (planner, cache) = &mut *cell.borrow_mut();
        cache
            .entry((len, inverse))
            .or_insert_with(|| {
                if inverse {
                    planner.plan_fft_inverse(len)
                } else {
                    planner.plan_fft_forward(len)
                }
            })
            .clone()
    })
}

/// In-place unnormalized FFT along every axis of a row-major buffer.
/// `dims` has one or two entries; `data.len()` must equal their product.
pub fn fft_nd(data: &mut [Complex64], dims: &[usize], inverse: bool) {
    match dims {
        [n] => {
            debug_assert_eq!(data.len(), *n);
            plan(*n, inverse).process(data);
        }
        [n0, n1] => {
            debug_assert_eq!(data.len(), n0 * n1);
            let row_fft = plan(*n1, inverse);
            for row in data.chunks_exact_mut(*n1) {
                row_fft.process(row);
            }
            let col_fft = plan(*n0, inverse);
            let mut scratch = vec![Complex64::default(); *n0];
            for j in 0..*n1 {
                for i in 0..*n0 {
                    scratch[i] = data[i * n1 + j];
                }
                col_fft.process(&mut scratch);
                for i in 0..*n0 {
                    data[i * n1 + j] = scratch[i];
                }
            }
        }
        _ => panic!("fft_nd supports 1 or 2 axes, got {}", dims.len()),
    }
}

/// Evaluates the chirp sums U_j = sum_{k=0}^{K-1} a_k e^{i theta j k} for
/// j = 0..j_count-1 by Bluestein's reduction to a linear convolution.
/// Phases are reduced mod 2 pi before exponentiation so large j*k products
/// do not lose precision.
pub fn chirp_eval(a: &[Complex64], theta: f64, j_count: usize) -> Vec<Complex64> {
    use std::f64::consts::TAU;
    let k_count = a.len();
    if k_count == 0 || j_count == 0 {
        return vec![Complex64::default(); j_count];
    }
    let m = (j_count + k_count - 1).next_power_of_two();
    let nmax = j_count.max(k_count);
    // c_n = e^{i theta n^2 / 2}
    let chirp: Vec<Complex64> = (0..nmax)
        .map(|n| {
            let phase = (theta * (n as f64) * (n as f64) / 2.0).rem_euclid(TAU);
            Complex64::new(phase.cos(), phase.sin())
        })
        .collect();
    let mut b = vec![Complex64::default(); m];
    for k in 0..k_count {
        b[k] = a[k] * chirp[k];
    }
    let mut d = vec![Complex64::default(); m];
    for l in 0..j_count {
        d[l] = chirp[l].conj();
    }
    for l in 1..k_count {
        d[m - l] = chirp[l].conj();
    }
    fft_nd(&mut b, &[m], false);
    fft_nd(&mut d, &[m], false);
    for (x, y) in b.iter_mut().zip(&d) {
        *x *= y;
    }
    fft_nd(&mut b, &[m], true);
    let scale = 1.0 / m as f64;
    (0..j_count).map(|j| b[j] * chirp[j] * scale).collect()
}
