//! Derivative-free search over equatorial angle profiles.
//!
//! A profile seeds a coefficient tensor `M_ijk = cos(phi_A_i+phi_B_j+phi_C_k)`
//! whose coordinates coincide with the GHZ correlation point of the same
//! angles, so `sum M^2` is an achievable quantum value. The miner minimizes
//! the classical-per-quantum ratio `local_bound(M) / sum M^2` with a simplex
//! downhill method; the facet step turns the result into a tight inequality.

use crate::error::Result;
use crate::polytope::local_bound_real;
use crate::quantum::ghz_point;
use crate::scenario::Scenario;
use crate::tensor::{AngleProfile, RealTensor};

/// Search parameters for one mining run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub scenario: Scenario,
    pub trials: usize,
    pub seed: u64,
    pub reflection: f64,
    pub expansion: f64,
    pub contraction: f64,
    pub shrink: f64,
    /// Simplex value-spread termination threshold.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Initial-simplex perturbation per coordinate, in radians.
    pub initial_step: f64,
}

impl SearchConfig {
    pub fn new(scenario: Scenario) -> Self {
        Self {
            scenario,
            trials: 100,
            seed: 0,
            reflection: 1.0,
            expansion: 2.0,
            contraction: 0.5,
            shrink: 0.5,
            tolerance: 1e-8,
            max_iterations: 2000,
            initial_step: 0.3,
        }
    }
}

/// Coefficient tensor seeded from an angle profile,
/// `M_ijk = cos(phi_A_i + phi_B_j + phi_C_k)`; numerically identical to the
/// GHZ correlation point of the same profile.
pub fn seed_tensor(s: Scenario, profile: &AngleProfile) -> Result<RealTensor> {
    let p = ghz_point(s, profile)?;
    RealTensor::new(s, p.values().to_vec())
}

/// Sentinel below which the seeded tensor counts as numerically zero.
const ZERO_NORM: f64 = 1e-12;

/// Classical-per-quantum ratio of the seeded tensor:
/// `local_bound(M) / sum M^2`, `+inf` when the denominator vanishes.
pub fn objective(s: Scenario, profile: &AngleProfile) -> Result<f64> {
    let m = seed_tensor(s, profile)?;
    let denom = m.norm_sq();
    if denom < ZERO_NORM {
        return Ok(f64::INFINITY);
    }
    let (bound, _) = local_bound_real(&m)?;
    Ok(bound / denom)
}

/// Simplex-downhill minimization of [`objective`] over the flattened angle
/// vector, starting from `init`. Deterministic: identical inputs give
/// bit-identical outputs. The returned value never exceeds the value at
/// `init`.
pub fn nelder_mead(
    s: Scenario,
    config: &SearchConfig,
    init: &AngleProfile,
) -> Result<(AngleProfile, f64)> {
    init.matches(s)?;
    let n = s.total_settings();
    let eval = |x: &[f64]| -> Result<f64> {
        objective(s, &AngleProfile::from_flat(s, x)?)
    };

    let x0 = init.to_flat();
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    pts.push(x0.clone());
    for i in 0..n {
        let mut p = x0.clone();
        p[i] += config.initial_step;
        pts.push(p);
    }
    let mut vals: Vec<f64> = Vec::with_capacity(n + 1);
    for p in &pts {
        vals.push(eval(p)?);
    }

    for _ in 0..config.max_iterations {
        // order best..worst; stable sort keeps ties deterministic
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        let pts_s: Vec<Vec<f64>> = order.iter().map(|&i| pts[i].clone()).collect();
        let vals_s: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
        pts = pts_s;
        vals = vals_s;

        if vals[n] - vals[0] < config.tolerance {
            break;
        }

        let mut centroid = vec![0.0; n];
        for p in &pts[..n] {
            for (c, x) in centroid.iter_mut().zip(p) {
                *c += x;
            }
        }
        for c in centroid.iter_mut() {
            *c /= n as f64;
        }

        let blend = |from: &[f64], to: &[f64], w: f64| -> Vec<f64> {
            from.iter().zip(to).map(|(a, b)| a + w * (b - a)).collect()
        };

        // reflection of the worst point through the centroid
        let xr = blend(&centroid, &pts[n], -config.reflection);
        let fr = eval(&xr)?;
        if fr < vals[0] {
            let xe = blend(&centroid, &xr, config.expansion);
            let fe = eval(&xe)?;
            if fe < fr {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if fr < vals[n - 1] {
            pts[n] = xr;
            vals[n] = fr;
        } else {
            let (xc, fc) = if fr < vals[n] {
                let xc = blend(&centroid, &xr, config.contraction);
                let fc = eval(&xc)?;
                (xc, fc)
            } else {
                let xc = blend(&centroid, &pts[n], config.contraction);
                let fc = eval(&xc)?;
                (xc, fc)
            };
            if fc < vals[n].min(fr) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                // shrink toward the best vertex
                for i in 1..=n {
                    let p = blend(&pts[0], &pts[i], config.shrink);
                    vals[i] = eval(&p)?;
                    pts[i] = p;
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..=n {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    Ok((AngleProfile::from_flat(s, &pts[best])?, vals[best]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::f64::consts::FRAC_PI_2;

    fn s222() -> Scenario {
        Scenario::new(2, 2, 2).unwrap()
    }

    fn mermin_angles() -> AngleProfile {
        AngleProfile::identical(vec![0.0, FRAC_PI_2]).unwrap()
    }

    #[test]
    fn seed_tensor_all_zero_angles_is_all_ones() {
        let t = seed_tensor(s222(), &AngleProfile::identical(vec![0.0, 0.0]).unwrap()).unwrap();
        assert!(t.coeffs().iter().all(|&c| (c - 1.0).abs() < 1e-15));
    }

    #[test]
    fn seed_tensor_equals_ghz_point() {
        let s = Scenario::new(3, 2, 4).unwrap();
        let profile = AngleProfile::new(
            vec![0.2, 1.1, 2.7],
            vec![0.4, 5.9],
            vec![1.0, 2.0, 3.0, 4.0],
        )
        .unwrap();
        let t = seed_tensor(s, &profile).unwrap();
        let p = crate::quantum::ghz_point(s, &profile).unwrap();
        assert_eq!(t.coeffs(), p.values());
    }

    #[test]
    fn seed_tensor_mermin_angles_matches_mermin_pattern() {
        let t = seed_tensor(s222(), &mermin_angles()).unwrap();
        let mermin = catalog::mermin_tensor();
        for (got, want) in t.coeffs().iter().zip(mermin.coeffs()) {
            assert!((got - *want as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn objective_at_mermin_angles_is_half() {
        let v = objective(s222(), &mermin_angles()).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
    }

    #[test]
    fn objective_at_zero_angles_is_one() {
        let v = objective(s222(), &AngleProfile::identical(vec![0.0, 0.0]).unwrap()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nelder_mead_never_worsens_the_start() {
        let cfg = SearchConfig::new(s222());
        let (_, value) = nelder_mead(s222(), &cfg, &mermin_angles()).unwrap();
        assert!(value <= 0.5 + 1e-12);
    }

    #[test]
    fn nelder_mead_is_deterministic() {
        let s = Scenario::new(3, 3, 3).unwrap();
        let cfg = SearchConfig::new(s);
        let init = AngleProfile::identical(vec![0.3, 1.9, 4.4]).unwrap();
        let (p1, v1) = nelder_mead(s, &cfg, &init).unwrap();
        let (p2, v2) = nelder_mead(s, &cfg, &init).unwrap();
        assert_eq!(v1, v2);
        assert_eq!(p1.to_flat(), p2.to_flat());
    }

    #[test]
    fn objective_invariant_under_opposite_party_shifts() {
        let s = Scenario::new(3, 3, 3).unwrap();
        let base = AngleProfile::identical(vec![0.3, 1.9, 4.4]).unwrap();
        let delta = 1.234;
        let shifted = AngleProfile::new(
            base.party(0).iter().map(|a| a + delta).collect(),
            base.party(1).iter().map(|a| a - delta).collect(),
            base.party(2).to_vec(),
        )
        .unwrap();
        let v1 = objective(s, &base).unwrap();
        let v2 = objective(s, &shifted).unwrap();
        assert!((v1 - v2).abs() < 1e-12);
    }
}
