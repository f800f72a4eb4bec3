//! Model parameters and criticality classification.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The tuple (d, alpha, m, c) fixing dimension, dispersion order,
/// nonlinearity power, and wave speed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub d: usize,
    pub alpha: f64,
    pub m: u32,
    pub c: f64,
}

/// Stability class of the equation at the given parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criticality {
    Subcritical,
    Critical,
    Supercritical,
    EnergyCritical,
}

/// Critical index, admissible-power ceiling, and class label.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub s_c: f64,
    /// `None` encodes m_* = +infinity (alpha >= d).
    pub m_star: Option<f64>,
    pub class: Criticality,
}

/// Admissible-power ceiling: (d+alpha)/(d-alpha) when alpha < d, else unbounded.
pub fn m_star(d: usize, alpha: f64) -> Option<f64> {
    let d = d as f64;
    if alpha < d {
        Some((d + alpha) / (d - alpha))
    } else {
        None
    }
}

/// Critical Sobolev index d/2 - alpha/(m-1).
pub fn critical_index(d: usize, alpha: f64, m: u32) -> f64 {
    d as f64 / 2.0 - alpha / (m as f64 - 1.0)
}

impl ModelParams {
    pub fn new(d: usize, alpha: f64, m: u32, c: f64) -> Result<Self> {
        let p = ModelParams { d, alpha, m, c };
        p.validate()?;
        Ok(p)
    }

    /// Checks every invariant; collects all violations into one message.
    ///
    /// alpha = 2 is admitted as the local-dispersion boundary case: the
    /// classical gKdV profiles it produces serve as closed-form oracles.
    pub fn validate(&self) -> Result<()> {
        let mut errs = Vec::new();
        if self.d != 1 && self.d != 2 {
            errs.push(format!("d must be 1 or 2, got {}", self.d));
        }
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            errs.push(format!("alpha must satisfy 0 < alpha < 2, got {}", self.alpha));
        }
        if self.m < 2 {
            errs.push(format!("m must be an integer >= 2, got {}", self.m));
        }
        if !(self.c > 0.0) {
            errs.push(format!("c must be positive, got {}", self.c));
        }
        if let Some(ms) = m_star(self.d, self.alpha) {
            if (self.m as f64) >= ms {
                errs.push(format!(
                    "m = {} must lie below m_* = {:.6} for (d, alpha) = ({}, {})",
                    self.m, ms, self.d, self.alpha
                ));
            }
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(errs.join("; ")))
        }
    }

    pub fn s_c(&self) -> f64 {
        critical_index(self.d, self.alpha, self.m)
    }

    /// Class boundary in m: the power 2*alpha/d + 1.
    pub fn critical_power(&self) -> f64 {
        2.0 * self.alpha / self.d as f64 + 1.0
    }

    pub fn criticality(&self) -> CriticalityReport {
        let s_c = self.s_c();
        let m = self.m as f64;
        let d = self.d as f64;
        let energy_critical = self.alpha < d && (m - (d + self.alpha) / (d - self.alpha)).abs() < 1e-12;
        let class = if energy_critical {
            Criticality::EnergyCritical
        } else if (m - self.critical_power()).abs() < 1e-12 {
            Criticality::Critical
        } else if m < self.critical_power() {
            Criticality::Subcritical
        } else {
            Criticality::Supercritical
        };
        CriticalityReport {
            s_c,
            m_star: m_star(self.d, self.alpha),
            class,
        }
    }

    /// Denominator 2d - (d - alpha)(m + 1) shared by the Pohozaev identities.
    /// Vanishes exactly on the energy-critical boundary.
    pub fn pohozaev_denominator(&self) -> f64 {
        let d = self.d as f64;
        2.0 * d - (d - self.alpha) * (self.m as f64 + 1.0)
    }
}

/// Criticality classification as a standalone operation.
pub fn criticality(p: &ModelParams) -> CriticalityReport {
    p.criticality()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcritical_bo() {
        let p = ModelParams::new(1, 1.0, 2, 1.0).unwrap();
        let r = p.criticality();
        assert!((r.s_c - (-0.5)).abs() < 1e-15);
        assert_eq!(r.class, Criticality::Subcritical);
    }

    #[test]
    fn supercritical_with_unbounded_m_star() {
        let p = ModelParams::new(1, 1.0, 4, 1.0).unwrap();
        let r = p.criticality();
        assert!((r.s_c - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(r.class, Criticality::Supercritical);
        assert!(r.m_star.is_none(), "alpha >= d means m_* is unbounded");
    }

    #[test]
    fn m_star_first_branch() {
        assert!((m_star(1, 0.6).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_m_at_or_above_m_star() {
        // (d, alpha) = (2, 1): m_* = 3, so m = 3 is rejected
        assert!(ModelParams::new(2, 1.0, 3, 1.0).is_err());
        assert!(ModelParams::new(2, 1.0, 2, 1.0).is_ok());
    }

    #[test]
    fn rejects_alpha_out_of_range() {
        assert!(ModelParams::new(1, 2.5, 2, 1.0).is_err());
        assert!(ModelParams::new(1, 0.0, 2, 1.0).is_err());
        // the boundary alpha = 2 stays available for closed-form oracles
        assert!(ModelParams::new(1, 2.0, 2, 1.0).is_ok());
    }

    #[test]
    fn critical_case_detected() {
        let p = ModelParams::new(1, 1.0, 3, 1.0).unwrap();
        assert_eq!(p.criticality().class, Criticality::Critical);
        assert!(p.s_c().abs() < 1e-15);
    }
}
