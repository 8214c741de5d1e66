//! Stieltjes densities of the branches and the integral representation
//!
//! `G_k(z) = ∫_{I_k} d_k(t) / (t − z) dt − k`,  `d_k(t) = Im g_k(t + i0) / π`.
//!
//! Each half of `I_k ∖ {0}` with endpoint `e` is split at `e/2`. The inner half
//! is integrated in `u` with `t = e·e^{−u}` (the density grows like `log(1/|t|)`
//! at the origin), the outer half in `σ` with `t = e ∓ σ²` (the density
//! vanishes like `√s` at the endpoint). The same quadrature evaluated with
//! `z` exactly at an endpoint stays finite and gives the endpoint sum rules.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::branches::{boundary_extension, extended_inverse, inverse_branch, BranchInterval, Side};
use crate::error::{Error, Result};
use crate::kernel::{c, integrate_generic, ComplexValue, QuadratureConfig};
use crate::output::fmt17;

/// Below this fraction of `|I_k|` from an endpoint the density follows `C√s`.
const MODEL_FRACTION: f64 = 1e-9;
/// Upper limit of `u` in `t = e·e^{−u}`.
const LOG_CUTOFF: f64 = 40.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GridScheme {
    Uniform,
    EndpointRefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoint {
    Left,
    Right,
}

/// Sampled density on `I_k ∖ {0}`; immutable once built.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityTable {
    pub k: i32,
    pub nodes: Vec<(f64, f64)>,
    pub scheme: GridScheme,
}

impl DensityTable {
    /// Strict-monotonicity violations: `d` must increase on `t < 0` and
    /// decrease on `t > 0`.
    pub fn monotone_violations(&self) -> usize {
        self.nodes
            .windows(2)
            .filter(|w| {
                let ((t0, d0), (t1, d1)) = (w[0], w[1]);
                if t1 < 0.0 {
                    d1 <= d0
                } else if t0 > 0.0 {
                    d1 >= d0
                } else {
                    false
                }
            })
            .count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,d\n");
        for &(t, d) in &self.nodes {
            out.push_str(&fmt17(t));
            out.push(',');
            out.push_str(&fmt17(d));
            out.push('\n');
        }
        out
    }
}

/// Pick data `a z + b + c/(−z) + ∫ …` of `g_k`.
///
/// `a` and `c` are the fitted values projected onto `[0, ∞)`; the signed fits
/// are kept in `a_fit` and `c_fit`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PickParameters {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub a_fit: f64,
    pub c_fit: f64,
}

fn interval_for(k: i32) -> Result<BranchInterval> {
    if k < 0 {
        return Err(Error::InvalidParameter(format!("densities need k >= 0, got {k}")));
    }
    BranchInterval::new(k)
}

fn density_direct(k: i32, t: f64) -> Result<f64> {
    let side = if t > 0.0 { Side::Plus } else { Side::Minus };
    Ok((boundary_extension(k, side, t)?.im / PI).max(0.0))
}

fn density_in(interval: &BranchInterval, t: f64) -> Result<f64> {
    if !(t > interval.lo && t < interval.hi) || t == 0.0 {
        return Err(Error::domain(format!(
            "t = {t} not inside I_{} = ({}, {}) minus 0",
            interval.k, interval.lo, interval.hi
        )));
    }
    let e = if t > 0.0 { interval.hi } else { interval.lo };
    let s = (e - t).abs();
    let s_ref = MODEL_FRACTION * interval.width();
    if s < s_ref {
        let t_ref = e - e.signum() * s_ref;
        Ok(density_direct(interval.k, t_ref)? * (s / s_ref).sqrt())
    } else {
        density_direct(interval.k, t)
    }
}

/// `d_k(t) = Im g_k(t + i0)/π` for `t` inside `I_k ∖ {0}`.
pub fn density(k: i32, t: f64) -> Result<f64> {
    density_in(&interval_for(k)?, t)
}

fn side_nodes(e: f64, m: usize, scheme: GridScheme) -> Vec<f64> {
    match scheme {
        GridScheme::Uniform => (0..m).map(|j| e * (j as f64 + 0.5) / m as f64).collect(),
        GridScheme::EndpointRefined => {
            let outer = m / 2;
            let inner = m - outer;
            let mut v: Vec<f64> = (0..outer)
                .map(|j| {
                    let q = (j as f64 + 0.5) / outer as f64;
                    e - 0.5 * e * q * q
                })
                .collect();
            v.extend((0..inner).map(|j| {
                let q = (j as f64 + 0.5) / inner as f64;
                0.5 * e * 10f64.powf(-6.0 * q)
            }));
            v
        }
    }
}

/// Density sampled on `n_nodes` points, half on each side of `0`.
pub fn density_table(k: i32, n_nodes: usize, scheme: GridScheme) -> Result<DensityTable> {
    if n_nodes < 16 {
        return Err(Error::InvalidParameter(format!("n_nodes must be >= 16, got {n_nodes}")));
    }
    let interval = interval_for(k)?;
    let left = n_nodes / 2;
    let mut ts = side_nodes(interval.lo, left, scheme);
    ts.extend(side_nodes(interval.hi, n_nodes - left, scheme));
    ts.sort_by(f64::total_cmp);
    let nodes = ts
        .par_iter()
        .map(|&t| density_in(&interval, t).map(|d| (t, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DensityTable { k, nodes, scheme })
}

/// `∫_{I_k} d_k(t) φ(t) dt` split into the four substituted pieces.
fn integrate_density<F>(interval: &BranchInterval, cfg: &QuadratureConfig, phi: F) -> Result<ComplexValue>
where
    F: Fn(f64) -> ComplexValue,
{
    cfg.validate()?;
    let mut total = c(0.0, 0.0);
    for e in [interval.lo, interval.hi] {
        let sgn = e.signum();
        let inner = integrate_generic(
            |u: f64| {
                let w = e.abs() * (-u).exp();
                let t = sgn * w;
                Ok(phi(t) * (density_in(interval, t)? * w))
            },
            std::f64::consts::LN_2,
            LOG_CUTOFF,
            cfg.abs_tol,
            cfg.max_subdivisions,
        )?;
        let outer = integrate_generic(
            |s: f64| {
                let t = e - sgn * s * s;
                Ok(phi(t) * (density_in(interval, t)? * 2.0 * s))
            },
            0.0,
            (0.5 * e.abs()).sqrt(),
            cfg.abs_tol,
            cfg.max_subdivisions,
        )?;
        total += inner + outer;
    }
    Ok(total)
}

/// `∫ d_k(t)/(t − z) dt − k` for `z ∉ I_k`.
///
/// The endpoint substitutions are fixed; `cfg.endpoint_substitution` is ignored.
pub fn stieltjes_eval(k: i32, z: ComplexValue, cfg: &QuadratureConfig) -> Result<ComplexValue> {
    let interval = interval_for(k)?;
    if z.im == 0.0 && interval.contains(z.re) {
        return Err(Error::domain(format!("z = {} lies on I_{k}", z.re)));
    }
    Ok(integrate_density(&interval, cfg, |t| (c(t, 0.0) - z).inv())? - k as f64)
}

/// The representation evaluated at an endpoint of `I_k`: `x_k` on the left,
/// `x_{k+1}` on the right.
pub fn endpoint_identity(k: i32, which: Endpoint, cfg: &QuadratureConfig) -> Result<f64> {
    let interval = interval_for(k)?;
    let e = match which {
        Endpoint::Left => interval.lo,
        Endpoint::Right => interval.hi,
    };
    let v = integrate_density(&interval, cfg, |t| c(1.0 / (t - e), 0.0))?;
    Ok(v.re - k as f64)
}

/// Least-squares slope of `log d_k` against `log s` over `s ∈ [10⁻⁶, 10⁻³]·|I_k|`.
pub fn endpoint_exponent(k: i32, which: Endpoint) -> Result<f64> {
    let interval = interval_for(k)?;
    let (e, dir) = match which {
        Endpoint::Left => (interval.lo, 1.0),
        Endpoint::Right => (interval.hi, -1.0),
    };
    let width = interval.width();
    let pts: Vec<(f64, f64)> = (0..16)
        .map(|j| {
            let s = width * 10f64.powf(-6.0 + 3.0 * j as f64 / 15.0);
            density_direct(k, e + dir * s).map(|d| (s, d))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(_, d)| d > 1e-13)
        .map(|(s, d)| (s.ln(), d.ln()))
        .collect();
    if pts.len() < 4 {
        return Err(Error::Unresolvable(format!(
            "only {} resolvable density values near the endpoint",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Solves the 3×3 normal equations by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn solve3(mut m: [[f64; 4]; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        m.swap(col, piv);
        if m[col][col] == 0.0 {
            return None;
        }
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for j in col..4 {
                m[row][j] -= f * m[col][j];
            }
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let s: f64 = (row + 1..3).map(|j| m[row][j] * x[j]).sum();
        x[row] = (m[row][3] - s) / m[row][row];
    }
    Some(x)
}

/// Fit of `q(y) ≈ c + y(α log(1/y) + β)` with residuals weighted by `1/y`,
/// i.e. `Im g(iy) ≈ c/y + α log(1/y) + β`; returns `c`.
pub(crate) fn extrapolate_point_mass(samples: &[(f64, f64)]) -> Result<f64> {
    let mut m = [[0.0; 4]; 3];
    for &(y, q) in samples {
        let basis = [1.0 / y, -y.ln(), 1.0];
        let q = q / y;
        for r in 0..3 {
            for col in 0..3 {
                m[r][col] += basis[r] * basis[col];
            }
            m[r][3] += basis[r] * q;
        }
    }
    let coef = solve3(m).ok_or_else(|| Error::Unresolvable("singular point-mass fit".into()))?;
    Ok(coef[0])
}

/// Linear coefficient, constant term and point mass of `g_k`.
///
/// `a` is the difference quotient of `G_k` between `10⁶` and `2·10⁶`, `b` the
/// Richardson limit of `G_k(x)` from the same two points. `c` comes
/// from [`extrapolate_point_mass`] on `y = 2^{−j}`, `j = 4..20`.
pub fn pick_parameters(k: i32) -> Result<PickParameters> {
    interval_for(k)?;
    let x = 1e6;
    let g1 = extended_inverse(k, c(x, 0.0))?.re;
    let g2 = extended_inverse(k, c(2.0 * x, 0.0))?.re;
    let a_fit = (g2 - g1) / x;
    let b = 2.0 * g2 - g1;

    let samples = (4..=20)
        .map(|j| {
            let y = 2f64.powi(-j);
            inverse_branch(k, c(0.0, y)).map(|z| (y, y * z.im))
        })
        .collect::<Result<Vec<_>>>()?;
    let c_fit = extrapolate_point_mass(&samples)?;
    Ok(PickParameters { a: a_fit.max(0.0), b, c: c_fit.max(0.0), a_fit, c_fit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{cached_critical_point, gamma};

    #[test]
    fn density_examples() {
        let i1 = BranchInterval::new(1).unwrap();
        let mid = density(1, i1.hi / 2.0).unwrap();
        assert!(mid > 0.0);
        let h = boundary_extension(1, Side::Plus, i1.hi / 2.0).unwrap();
        assert!((gamma(h).unwrap() - c(i1.hi / 2.0, 0.0)).norm() < 1e-9);

        let near_end = density(1, i1.hi * (1.0 - 1e-6)).unwrap();
        assert!(near_end < 0.01 * mid);
        let a = density(1, 1e-3).unwrap();
        let b = density(1, 1e-6).unwrap();
        assert!(b > a && a > mid);

        assert!(density(1, 0.0).is_err());
        assert!(density(1, i1.hi * 1.01).is_err());
        assert!(density(-1, 0.5).is_err());
    }

    #[test]
    fn model_region_is_continuous() {
        let i = BranchInterval::new(2).unwrap();
        let s_ref = MODEL_FRACTION * i.width();
        let inside = density(2, i.hi - 0.999 * s_ref).unwrap();
        let outside = density(2, i.hi - 1.001 * s_ref).unwrap();
        assert!((inside / outside - 1.0).abs() < 2e-3);
    }

    #[test]
    fn tables() {
        let t = density_table(1, 64, GridScheme::EndpointRefined).unwrap();
        assert_eq!(t.nodes.len(), 64);
        assert!(t.nodes.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(t.monotone_violations(), 0);
        let t2 = density_table(2, 64, GridScheme::Uniform).unwrap();
        assert!(t2.nodes.iter().all(|&(_, d)| d >= 0.0));
        assert!(density_table(1, 8, GridScheme::Uniform).is_err());
        let csv = t.to_csv();
        assert!(csv.starts_with("t,d\n"));
        assert_eq!(csv.lines().count(), 65);
    }

    #[test]
    fn representation_examples() {
        let cfg = QuadratureConfig::with_tol(1e-9);
        for (k, z) in [(1, c(10.0, 0.0)), (1, c(0.0, 1.0)), (2, c(-5.0, 0.0))] {
            let rep = stieltjes_eval(k, z, &cfg).unwrap();
            let direct = extended_inverse(k, z).unwrap();
            assert!((rep - direct).norm() < 1e-6, "k={k} z={z}: {rep} vs {direct}");
        }
        assert!(stieltjes_eval(1, c(0.5, 0.0), &cfg).is_err());
    }

    #[test]
    fn representation_is_conjugate_symmetric() {
        let cfg = QuadratureConfig::with_tol(1e-9);
        let z = c(1.0, 0.7);
        let a = stieltjes_eval(3, z, &cfg).unwrap();
        let b = stieltjes_eval(3, z.conj(), &cfg).unwrap();
        assert!((a - b.conj()).norm() < 1e-12);
    }

    #[test]
    fn endpoint_sum_rules() {
        let cfg = QuadratureConfig::with_tol(1e-9);
        let x1 = cached_critical_point(1).unwrap().abscissa;
        let x2 = cached_critical_point(2).unwrap().abscissa;
        assert!((endpoint_identity(1, Endpoint::Left, &cfg).unwrap() - x1).abs() < 1e-4);
        assert!((endpoint_identity(1, Endpoint::Right, &cfg).unwrap() - x2).abs() < 1e-4);
    }

    #[test]
    fn exponent_is_one_half() {
        for which in [Endpoint::Left, Endpoint::Right] {
            let p = endpoint_exponent(1, which).unwrap();
            assert!((p - 0.5).abs() < 0.05, "{which:?}: {p}");
        }
    }

    #[test]
    fn pick_parameters_k1() {
        let p = pick_parameters(1).unwrap();
        assert!(p.a_fit.abs() < 1e-6);
        assert!((p.b + 1.0).abs() < 1e-3);
        assert!(p.c_fit.abs() < 1e-4);
        assert!(p.a >= 0.0 && p.c >= 0.0);
    }

    #[test]
    fn solve3_small_system() {
        let x = solve3([[2.0, 1.0, 0.0, 3.0], [1.0, 3.0, 1.0, 5.0], [0.0, 1.0, 4.0, 5.0]]).unwrap();
        for (xi, e) in x.iter().zip([1.0, 1.0, 1.0]) {
            assert!((xi - e).abs() < 1e-14);
        }
    }
}
