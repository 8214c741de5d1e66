//! Inverse branches of `Γ`.
//!
//! For `k ≥ −1` the branch `g_k(w) = (log Γ)⁻¹(log w − i(k+1)π)` maps `ℂ₊` onto
//! the part `𝒟_k` of `ℂ₊` where `−(k+1)π < arg Γ < −kπ`. It is computed by
//! continuation of `(log Γ)⁻¹` along a straight segment in the `log Γ`-plane,
//! starting from an anchor inside `𝒟_k`: the integer `n ≥ 2` for the
//! principal branch, the point `−k + 10⁻³ i` next to the pole `−k` otherwise.
//! Both endpoints of the segment lie in the horizontal strip
//! `−(k+1)π ≤ Im ≤ −kπ`, which is convex and free of slits in its interior.

mod sine;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{cached_critical_point, gamma_real, log_gamma, log_gamma_and_psi, psi};
use crate::kernel::{bisect, c, expand_upper_bracket, path_continuation, principal_log, ComplexValue, NewtonConfig};

pub use sine::{comb_sin_inverse, joukowski_inverse, log_sin_product, lp_sin_inverse, lp_sin_inverse_real};

/// Largest branch index exposed.
pub const K_MAX: i32 = 8;

/// Offset of the anchor above the pole `−k`.
const ANCHOR_OFFSET: f64 = 1e-3;
/// Allowed overshoot of `Im log Γ` outside the branch window during Newton.
const WINDOW_SLACK: f64 = 0.3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BranchIndex(i32);

impl BranchIndex {
    pub fn new(k: i32) -> Result<Self> {
        if !(-1..=K_MAX).contains(&k) {
            return Err(Error::InvalidParameter(format!(
                "branch index {k} outside -1..={K_MAX}"
            )));
        }
        Ok(BranchIndex(k))
    }

    pub fn get(self) -> i32 {
        self.0
    }

    /// `(−1)^{k+1}`
    pub fn sign(self) -> f64 {
        if (self.0 + 1) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

/// The interval `I_k` carrying the Pick measure of `g_k`, `k ≥ 0`.
///
/// Both parities reduce to `[−|Γ(x_k)|, |Γ(x_{k+1})|]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BranchInterval {
    pub k: i32,
    pub lo: f64,
    pub hi: f64,
}

impl BranchInterval {
    pub fn new(k: i32) -> Result<Self> {
        let k = BranchIndex::new(k)?.get();
        if k < 0 {
            return Err(Error::InvalidParameter("I_k is defined for k >= 0".into()));
        }
        let a = cached_critical_point(k as u32)?;
        let b = cached_critical_point(k as u32 + 1)?;
        Ok(BranchInterval { k, lo: -a.gamma_xk.abs(), hi: b.gamma_xk.abs() })
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && t <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// The comb `𝒱 = ℂ ∖ ⋃_k [log|Γ(x_k)|, ∞) × {−ikπ}`, truncated to the first levels.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CombDomain {
    /// `(height, slit_start)` pairs.
    pub slit_levels: Vec<(f64, f64)>,
}

impl CombDomain {
    pub fn gamma(levels: u32) -> Result<Self> {
        let slit_levels = (0..levels)
            .map(|k| {
                cached_critical_point(k).map(|cp| (-(k as f64) * PI, cp.gamma_xk.abs().ln()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CombDomain { slit_levels })
    }

    pub fn contains(&self, w: ComplexValue) -> bool {
        !self
            .slit_levels
            .iter()
            .any(|&(h, start)| (w.im - h).abs() <= 1e-15 * (1.0 + h.abs()) && w.re >= start)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

fn log_gamma_fd(z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    log_gamma_and_psi(z)
}

fn anchor(k: i32, modulus: f64) -> Result<(ComplexValue, ComplexValue)> {
    if k < 0 {
        let mut n = 2.0;
        let mut g = 1.0;
        while g < modulus && n < 170.0 {
            g *= n;
            n += 1.0;
        }
        let z0 = c(n, 0.0);
        Ok((log_gamma(z0)?, z0))
    } else {
        let z0 = c(-(k as f64), ANCHOR_OFFSET);
        Ok((log_gamma(z0)?, z0))
    }
}

fn window(k: i32) -> (f64, f64) {
    let kf = k as f64;
    (-(kf + 1.0) * PI, -kf * PI)
}

/// Solves `log Γ(z) = ζ` for `z` in the closure of `𝒟_k`.
pub(crate) fn solve_log_gamma(k: i32, zeta: ComplexValue) -> Result<ComplexValue> {
    let (lo, hi) = window(k);
    let guard = move |z: ComplexValue, f: ComplexValue| {
        let upper = z.im > 0.0 || (k < 0 && z.im == 0.0 && z.re > 0.0);
        upper && f.im > lo - WINDOW_SLACK && f.im < hi + WINDOW_SLACK
    };
    let known = anchor(k, zeta.re.exp())?;
    path_continuation(log_gamma_fd, known, zeta, &[], &NewtonConfig::default(), guard)
}

/// Whether `z ∈ ℂ₊` lies in `𝒟_k`.
pub fn in_branch_domain(k: i32, z: ComplexValue) -> Result<bool> {
    BranchIndex::new(k)?;
    if !(z.im > 0.0) {
        return Err(Error::domain("in_branch_domain requires Im z > 0"));
    }
    let a = log_gamma(z)?.im;
    let (lo, hi) = window(k);
    Ok(a > lo && a < hi)
}

/// `g_k(w)` for `w ∈ ℂ₊`; satisfies `Γ(g_k(w)) = (−1)^{k+1} w`.
pub fn inverse_branch(k: i32, w: ComplexValue) -> Result<ComplexValue> {
    BranchIndex::new(k)?;
    if !(w.im > 0.0) {
        return Err(Error::domain("inverse_branch requires Im w > 0"));
    }
    let zeta = principal_log(w)? - c(0.0, (k as f64 + 1.0) * PI);
    let z = solve_log_gamma(k, zeta)?;
    let (lo, hi) = window(k);
    let a = log_gamma(z)?.im;
    if !(z.im > 0.0 && a > lo - 1e-9 && a < hi + 1e-9) {
        return Err(Error::GuardViolation);
    }
    Ok(z)
}

/// `ln|Γ(x)|`, `+∞` at the poles.
fn ln_abs_gamma(x: f64) -> f64 {
    gamma_real(x).map(|g| g.abs().ln()).unwrap_or(f64::INFINITY)
}

/// Refines a real root of `ln|Γ(x)| = level` with Newton steps on `ψ`.
fn polish_real(mut x: f64, level: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..3 {
        let r = ln_abs_gamma(x) - level;
        let d = match psi(c(x, 0.0)) {
            Ok(p) => p.re,
            Err(_) => break,
        };
        let xn = x - r / d;
        if xn > lo.min(hi) && xn < lo.max(hi) && (ln_abs_gamma(xn) - level).abs() < r.abs() {
            x = xn;
        } else {
            break;
        }
    }
    x
}

/// `G_k(x)` for real `x ∉ I_k`.
fn real_branch(k: i32, x: f64) -> Result<f64> {
    let a = cached_critical_point(k as u32)?.abscissa;
    let b = cached_critical_point(k as u32 + 1)?.abscissa;
    let pole = -(k as f64);
    let level = x.abs().ln();
    let f = |y: f64| ln_abs_gamma(y) - level;
    // x > 0 lies on (x_{k+1}, −k), x < 0 on (−k, x_k).
    let (lo, hi) = if x > 0.0 { (b, pole) } else { (pole, a) };
    let root = bisect(f, lo, hi, 1e-17)?;
    Ok(polish_real(root, level, lo, hi))
}

/// The extension `G_k` of `g_k` to `ℂ ∖ I_k`, `k ≥ 0`.
pub fn extended_inverse(k: i32, w: ComplexValue) -> Result<ComplexValue> {
    let interval = BranchInterval::new(k)?;
    if w.im > 0.0 {
        inverse_branch(k, w)
    } else if w.im < 0.0 {
        Ok(inverse_branch(k, w.conj())?.conj())
    } else if interval.contains(w.re) {
        Err(Error::domain(format!("w = {} lies on the cut I_{k}", w.re)))
    } else {
        Ok(c(real_branch(k, w.re)?, 0.0))
    }
}

/// The principal inverse `g_{−1}` on `ℂ ∖ (−∞, Γ(x₀)]`.
pub fn principal_inverse(w: ComplexValue) -> Result<ComplexValue> {
    let cp = cached_critical_point(0)?;
    if w.im > 0.0 {
        inverse_branch(-1, w)
    } else if w.im < 0.0 {
        Ok(inverse_branch(-1, w.conj())?.conj())
    } else if w.re <= cp.gamma_xk {
        Err(Error::domain(format!("w = {} lies on the cut (-inf, Γ(x0)]", w.re)))
    } else {
        let level = w.re.ln();
        let f = |y: f64| ln_abs_gamma(y) - level;
        let hi = expand_upper_bracket(f, cp.abscissa, cp.abscissa + 1.0, 1.0, 64)?;
        let root = bisect(f, cp.abscissa, hi, 1e-17)?;
        Ok(c(polish_real(root, level, cp.abscissa, hi), 0.0))
    }
}

/// `e_k(w) = G_k(−w)` for even `k ≥ 0`; inverts `Γ` itself on `(x_{k+1}, −k) ∪ (−k, x_k)`.
pub fn even_inverse(k: i32, w: ComplexValue) -> Result<ComplexValue> {
    if k < 0 || k % 2 != 0 {
        return Err(Error::InvalidParameter(format!("even_inverse needs even k >= 0, got {k}")));
    }
    extended_inverse(k, -w)
}

/// Boundary values `g_k(t + i0)` through `h_k^+` (for `t > 0`) or `h_k^−` (for `t < 0`).
pub fn boundary_extension(k: i32, side: Side, t: f64) -> Result<ComplexValue> {
    let interval = BranchInterval::new(k)?;
    let kf = k as f64;
    let zeta = match side {
        Side::Plus if t > 0.0 && t < interval.hi => c(t.ln(), -(kf + 1.0) * PI),
        Side::Minus if t < 0.0 && t > interval.lo => c((-t).ln(), -kf * PI),
        _ => {
            return Err(Error::domain(format!(
                "t = {t} outside the {side:?} side of I_{k} = [{}, {}]",
                interval.lo, interval.hi
            )))
        }
    };
    solve_log_gamma(k, zeta)
}
