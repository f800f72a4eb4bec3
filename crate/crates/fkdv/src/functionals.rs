//! Conserved quantities, action and Weinstein functionals, and the integral
//! identities used as solver oracles.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::params::ModelParams;
use serde::Serialize;

/// The three conserved quantities of a state.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConservedTriple {
    pub mass: f64,
    pub energy: f64,
    pub l1: f64,
}

/// M[u] = (1/2) int u^2 by the periodic Riemann sum.
pub fn mass(u: &Field) -> f64 {
    0.5 * u.inner(u)
}

/// E[u] = (1/2) ||D^{alpha/2} u||^2 - 1/(m(m+1)) int u^{m+1}, with the
/// nonlinear term integrated alias-free.
pub fn energy(u: &Field, p: &ModelParams) -> f64 {
    let kinetic = 0.5 * u.riesz_seminorm_sq(p.alpha);
    let m = p.m as f64;
    kinetic - u.integral_of_power(p.m + 1) / (m * (m + 1.0))
}

/// The d-dimensional time-invariant integral of u.
pub fn l1_invariant(u: &Field) -> f64 {
    u.integral()
}

/// Action W[u] = E[u] + M[u].
pub fn action(u: &Field, p: &ModelParams) -> f64 {
    energy(u, p) + mass(u)
}

pub fn conserved(u: &Field, p: &ModelParams) -> ConservedTriple {
    ConservedTriple {
        mass: mass(u),
        energy: energy(u, p),
        l1: l1_invariant(u),
    }
}

/// Ratio functional whose minimizers are the ground states:
///
/// ```text
///     W(u) = ||D^{alpha/2} u||^{d(m-1)/alpha} ||u||^{(m+1) - d(m-1)/alpha}
///            / int u^{m+1}.
/// ```
///
/// Invariant under amplitude scaling and under dilations of u.
pub fn weinstein(u: &Field, p: &ModelParams) -> Result<f64> {
    let denom = u.integral_of_power(p.m + 1);
    let l2 = u.l2_norm();
    if l2 == 0.0 {
        return Err(Error::Domain("Weinstein functional of the zero field".into()));
    }
    if denom <= 1e-14 * l2.powi(p.m as i32 + 1) {
        return Err(Error::Domain(
            "vanishing nonlinear integral in the Weinstein quotient".into(),
        ));
    }
    let d = p.d as f64;
    let m = p.m as f64;
    let theta = d * (m - 1.0) / p.alpha;
    let grad = u.riesz_seminorm_sq(p.alpha).sqrt();
    Ok(grad.powf(theta) * l2.powf(m + 1.0 - theta) / denom)
}

/// Closed-form sharp constant of the interpolation inequality in terms of a
/// speed-c ground state profile:
///
/// ```text
///     C = m alpha (m+1) c^{(2 alpha - d(m-1))/(2 alpha)}
///         / [ d^{d(m-1)/(2 alpha)} (m-1)^{d(m-1)/(2 alpha)}
///             (2d - (d-alpha)(m+1))^{(2 alpha - d(m-1))/(2 alpha)} ]
///         * ||Q_c||^{-(m-1)}.
/// ```
pub fn sharp_gn_constant(p: &ModelParams, q_c: &Field) -> f64 {
    let d = p.d as f64;
    let m = p.m as f64;
    let a = p.alpha;
    let e1 = d * (m - 1.0) / (2.0 * a);
    let e2 = (2.0 * a - d * (m - 1.0)) / (2.0 * a);
    let denom = p.pohozaev_denominator();
    let num = m * a * (m + 1.0) * p.c.powf(e2);
    let den = d.powf(e1) * (m - 1.0).powf(e1) * denom.powf(e2);
    num / den / q_c.l2_norm().powf(m - 1.0)
}

/// Relative residuals of the three integral identities a speed-c profile must
/// satisfy:
///
///   r1: ||D^{alpha/2} Q||^2        vs  d c (m-1) / denom * ||Q||^2
///   r2: int Q^{m+1}                vs  alpha c m (m+1) / denom * ||Q||^2
///   r3: E[Q]                       vs  s_c * c (m-1) / denom * ||Q||^2
///
/// with denom = 2d - (d-alpha)(m+1). r3 is normalized by the positive scale
/// c (m-1)/denom ||Q||^2 so the critical case (E = 0) stays meaningful.
pub fn pohozaev_residuals(p: &ModelParams, q: &Field) -> Result<(f64, f64, f64)> {
    let denom = p.pohozaev_denominator();
    if denom.abs() < 1e-12 {
        return Err(Error::Domain(
            "energy-critical boundary: 2d - (d-alpha)(m+1) = 0".into(),
        ));
    }
    let d = p.d as f64;
    let m = p.m as f64;
    let l2sq = q.inner(q);
    let grad_sq = q.riesz_seminorm_sq(p.alpha);
    let nonlin = q.integral_of_power(p.m + 1);
    let e = energy(q, p);

    let rhs1 = d * p.c * (m - 1.0) / denom * l2sq;
    let rhs2 = p.alpha * p.c * m * (m + 1.0) / denom * l2sq;
    let scale3 = p.c * (m - 1.0) / denom * l2sq;
    let rhs3 = p.s_c() * scale3;

    Ok((
        (grad_sq - rhs1).abs() / rhs1,
        (nonlin - rhs2).abs() / rhs2,
        (e - rhs3).abs() / scale3,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::Field;
    use std::f64::consts::PI;

    fn kdv_profile(l: f64, n: usize) -> Field {
        let g = make_grid(1, &[l], &[n]).unwrap();
        Field::from_fn(g, |x| {
            let c = (x[0] / 2.0).cosh();
            3.0 / (c * c)
        })
        .unwrap()
    }

    fn bo_profile(l: f64, n: usize) -> Field {
        let g = make_grid(1, &[l], &[n]).unwrap();
        Field::from_fn(g, |x| 4.0 / (1.0 + x[0] * x[0])).unwrap()
    }

    #[test]
    fn zero_field_functionals() {
        let g = make_grid(1, &[50.0], &[64]).unwrap();
        let p = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        let z = Field::zeros(g);
        assert_eq!(mass(&z), 0.0);
        assert_eq!(energy(&z, &p), 0.0);
        assert_eq!(l1_invariant(&z), 0.0);
        assert_eq!(action(&z, &p), 0.0);
    }

    #[test]
    fn kdv_profile_oracles() {
        // Q = 3 sech^2(x/2): int Q^2 = 24, int Q = 12, int Q^3 = 57.6,
        // ||Q'||^2 = 4.8, E = -7.2, W = 4.8
        let q = kdv_profile(80.0, 2048);
        let p = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        assert!((mass(&q) - 12.0).abs() < 1e-8);
        assert!((l1_invariant(&q) - 12.0).abs() < 1e-8);
        assert!((q.riesz_seminorm_sq(2.0) - 4.8).abs() < 1e-8);
        assert!((q.integral_of_power(3) - 57.6).abs() < 1e-8);
        assert!((energy(&q, &p) - (-7.2)).abs() < 1e-8);
        assert!((action(&q, &p) - 4.8).abs() < 1e-8);
    }

    #[test]
    fn bo_profile_oracles() {
        // Q = 4/(1+x^2): int Q^2 = 8 pi, int Q^3 = 24 pi, E = -2 pi, W = 2 pi
        let q = bo_profile(800.0, 16384);
        let p = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        assert!((mass(&q) - 4.0 * PI).abs() < 1e-4);
        assert!((energy(&q, &p) - (-2.0 * PI)).abs() < 2e-3);
        assert!((action(&q, &p) - 2.0 * PI).abs() < 2e-3);
        // l1: int 4/(1+x^2) = 4 pi with O(1/L) truncation tail
        assert!((l1_invariant(&q) - 4.0 * PI).abs() < 2e-2);
    }

    #[test]
    fn odd_mode_l1_vanishes() {
        let l = 50.0;
        let g = make_grid(1, &[l], &[128]).unwrap();
        let u = Field::from_fn(g, |x| (2.0 * PI * x[0] / l).sin()).unwrap();
        assert!(l1_invariant(&u).abs() < 1e-12);
    }

    #[test]
    fn weinstein_amplitude_invariance() {
        let q = kdv_profile(80.0, 1024);
        let p = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        let w1 = weinstein(&q, &p).unwrap();
        let w2 = weinstein(&q.scale(2.0), &p).unwrap();
        assert!((w1 - w2).abs() < 1e-10 * w1);
    }

    #[test]
    fn weinstein_vanishing_denominator_rejected() {
        let l = 50.0;
        let g = make_grid(1, &[l], &[128]).unwrap();
        let p = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        // odd u with even m+1 integrand power parity: int u^3 = 0
        let u = Field::from_fn(g, |x| (2.0 * PI * x[0] / l).sin()).unwrap();
        assert!(weinstein(&u, &p).is_err());
    }

    #[test]
    fn sharp_constant_cross_checks_weinstein() {
        let pk = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        let qk = kdv_profile(80.0, 2048);
        let c_gn = sharp_gn_constant(&pk, &qk);
        let w = weinstein(&qk, &pk).unwrap();
        assert!(
            (c_gn - 1.0 / w).abs() < 1e-4 * c_gn,
            "KdV: C = {c_gn}, 1/W = {}",
            1.0 / w
        );

        let pb = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        let qb = bo_profile(800.0, 16384);
        let c_gn = sharp_gn_constant(&pb, &qb);
        let w = weinstein(&qb, &pb).unwrap();
        assert!(
            (c_gn - 1.0 / w).abs() < 1e-3 * c_gn,
            "BO: C = {c_gn}, 1/W = {}",
            1.0 / w
        );
    }

    #[test]
    fn pohozaev_closed_forms() {
        let pk = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        let qk = kdv_profile(80.0, 2048);
        let (r1, r2, r3) = pohozaev_residuals(&pk, &qk).unwrap();
        assert!(r1 < 1e-6, "kdv r1 = {r1}");
        assert!(r2 < 1e-6, "kdv r2 = {r2}");
        assert!(r3 < 1e-6, "kdv r3 = {r3}");

        let pb = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        let qb = bo_profile(800.0, 16384);
        let (r1, r2, r3) = pohozaev_residuals(&pb, &qb).unwrap();
        assert!(r1 < 1e-3, "bo r1 = {r1} (algebraic-tail truncation)");
        assert!(r2 < 1e-3, "bo r2 = {r2}");
        assert!(r3 < 1e-3, "bo r3 = {r3}");
    }

    #[test]
    fn invariance_under_translation() {
        let q = kdv_profile(80.0, 1024);
        let p = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        let t = q.translate(&[7.3, 0.0]);
        assert!((mass(&q) - mass(&t)).abs() < 1e-10 * mass(&q));
        assert!((energy(&q, &p) - energy(&t, &p)).abs() < 1e-10 * energy(&q, &p).abs());
        assert!((l1_invariant(&q) - l1_invariant(&t)).abs() < 1e-10 * l1_invariant(&q));
    }

    #[test]
    fn mass_scaling_law() {
        // u_lam(x) = lam^{alpha/(m-1)} u(lam x) on the rescaled grid:
        // M[u_lam] = lam^{2 alpha/(m-1) - d} M[u]
        let (alpha, m) = (1.3, 3u32);
        let lam: f64 = 1.8;
        let l = 60.0;
        let n = 512;
        let g = make_grid(1, &[l], &[n]).unwrap();
        let u = Field::from_fn(g, |x| (-(x[0] / 5.0).powi(2)).exp()).unwrap();
        let gs = make_grid(1, &[l / lam], &[n]).unwrap();
        let e = alpha / (m as f64 - 1.0);
        let us = Field::from_fn(gs, |x| lam.powf(e) * (-(lam * x[0] / 5.0).powi(2)).exp()).unwrap();
        let expect = lam.powf(2.0 * e - 1.0) * mass(&u);
        assert!((mass(&us) - expect).abs() < 1e-6 * expect);
    }

    #[test]
    fn weinstein_dilation_invariance() {
        // W(beta Q(gamma .)) independent of beta and gamma
        let p = ModelParams::new(1, 2.0, 2, 1.0).unwrap();
        let l = 80.0;
        let n = 2048;
        let q = kdv_profile(l, n);
        let w0 = weinstein(&q, &p).unwrap();
        let gamma: f64 = 1.7;
        let gq = make_grid(1, &[l / gamma], &[n]).unwrap();
        let qg = Field::from_fn(gq, |x| {
            let y = gamma * x[0] / 2.0;
            1.4 * 3.0 / (y.cosh() * y.cosh())
        })
        .unwrap();
        let w1 = weinstein(&qg, &p).unwrap();
        assert!((w0 - w1).abs() < 1e-8 * w0, "w0 = {w0}, w1 = {w1}");
    }

    #[test]
    fn energy_critical_boundary_flagged() {
        // d = 1, alpha = 0.5, m+1 = 4/(1-0.5) -> m = 3 sits on 2d = (d-a)(m+1)
        let p = ModelParams {
            d: 1,
            alpha: 0.5,
            m: 3,
            c: 1.0,
        };
        let g = make_grid(1, &[50.0], &[64]).unwrap();
        let q = Field::from_fn(g, |x| (-(x[0] / 3.0).powi(2)).exp()).unwrap();
        assert!(pohozaev_residuals(&p, &q).is_err());
    }
}
