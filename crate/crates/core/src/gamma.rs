//! `Γ`, `log Γ`, `ψ`, `ψ′`, the Binet remainder and the critical points of `Γ`.
//!
//! `log_gamma` is the analytic continuation of the real `log Γ` to the cut
//! plane `ℂ∖(−∞, 0]`. It is *not* the principal logarithm of `Γ(z)`: along a
//! horizontal line in the upper half plane its imaginary part runs through
//! the whole real line. It is evaluated by the Stirling series for
//! `Re z ≥ 10` and by the upward recurrence
//! `log Γ(z) = log Γ(z + n) − Σ log(z + j)` with principal logarithms
//! otherwise; since every `z + j` stays in the cut plane the recurrence
//! reproduces the Weierstraß-product continuation.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{bisect, c, principal_log, ComplexValue};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;
/// `log √(2π)`.
pub const LOG_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GammaConstants {
    pub euler_gamma: f64,
    pub log_sqrt_two_pi: f64,
}

impl GammaConstants {
    pub const VALUES: GammaConstants = GammaConstants {
        euler_gamma: EULER_GAMMA,
        log_sqrt_two_pi: LOG_SQRT_2PI,
    };
}

/// `B_{2j}` for `j = 1..=8`.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const ASYMPTOTIC_RE: f64 = 10.0;

fn check_cut(z: ComplexValue) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("non-finite argument"));
    }
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::domain(format!("log_gamma on the cut at {}", z.re)));
    }
    Ok(())
}

fn check_pole(z: ComplexValue) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("non-finite argument"));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole(z.re));
    }
    Ok(())
}

fn shift_count(z: ComplexValue) -> usize {
    if z.re >= ASYMPTOTIC_RE {
        0
    } else {
        (ASYMPTOTIC_RE - z.re).ceil() as usize
    }
}

fn stirling_log_gamma(z: ComplexValue) -> ComplexValue {
    let lz = z.ln();
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut corr = c(0.0, 0.0);
    for (j, b) in BERNOULLI.iter().enumerate() {
        let n = 2.0 * (j as f64 + 1.0);
        corr += pow * (b / (n * (n - 1.0)));
        pow *= inv2;
    }
    (z - 0.5) * lz - z + LOG_SQRT_2PI + corr
}

/// `log Γ(z)` on `ℂ∖(−∞, 0]`.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_cut(z)?;
    let n = shift_count(z);
    let mut acc = c(0.0, 0.0);
    for j in 0..n {
        acc += principal_log(z + j as f64)?;
    }
    Ok(stirling_log_gamma(z + n as f64) - acc)
}

/// `log Γ(z)` together with `ψ(z)`, sharing the recurrence.
pub fn log_gamma_and_psi(z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    check_cut(z)?;
    let n = shift_count(z);
    let mut acc = c(0.0, 0.0);
    let mut inv_sum = c(0.0, 0.0);
    for j in 0..n {
        let w = z + j as f64;
        acc += principal_log(w)?;
        inv_sum += w.inv();
    }
    let zs = z + n as f64;
    Ok((stirling_log_gamma(zs) - acc, psi_asymptotic(zs) - inv_sum))
}

/// `Γ(z)`; `exp(log Γ)` for `Re z > 0`, recurrence from the right half plane otherwise.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    if z.re > 0.0 {
        return Ok(log_gamma(z)?.exp());
    }
    let n = (1.0 - z.re).ceil() as usize;
    let mut denom = c(1.0, 0.0);
    for j in 0..n {
        denom *= z + j as f64;
    }
    Ok(log_gamma(z + n as f64)?.exp() / denom)
}

/// `Γ(x)` for real `x` that is not a pole.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma(c(x, 0.0))?.re)
}

fn psi_asymptotic(z: ComplexValue) -> ComplexValue {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv2;
    let mut s = z.ln() - inv * 0.5;
    for (j, b) in BERNOULLI.iter().enumerate() {
        s -= pow * (b / (2.0 * (j as f64 + 1.0)));
        pow *= inv2;
    }
    s
}

fn psi_prime_asymptotic(z: ComplexValue) -> ComplexValue {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut s = inv + inv2 * 0.5;
    for b in BERNOULLI.iter() {
        s += pow * *b;
        pow *= inv2;
    }
    s
}

/// Digamma `ψ = Γ′/Γ`.
pub fn psi(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    let n = shift_count(z);
    let mut acc = c(0.0, 0.0);
    for j in 0..n {
        acc += (z + j as f64).inv();
    }
    Ok(psi_asymptotic(z + n as f64) - acc)
}

/// Trigamma `ψ′ = (log Γ)″`.
pub fn psi_prime(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    let n = shift_count(z);
    let mut acc = c(0.0, 0.0);
    for j in 0..n {
        let w = (z + j as f64).inv();
        acc += w * w;
    }
    Ok(psi_prime_asymptotic(z + n as f64) + acc)
}

/// Binet remainder `μ(w) = log Γ(w) − log√(2π) − (w − ½) log w + w`, for `Re w > 0`.
pub fn binet_mu(w: ComplexValue) -> Result<ComplexValue> {
    if !(w.re > 0.0) {
        return Err(Error::domain("binet_mu requires Re w > 0"));
    }
    Ok(log_gamma(w)? - LOG_SQRT_2PI - (w - 0.5) * principal_log(w)? + w)
}

/// A critical point `x_k` of `Γ` with its extremal value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub index: u32,
    pub abscissa: f64,
    pub gamma_xk: f64,
}

/// The unique zero of `ψ` in `(−k, −k + 1)` for `k ≥ 1`, or on `(1, 2)` for `k = 0`.
pub fn critical_point(k: u32) -> Result<CriticalPoint> {
    let (lo, hi) = if k == 0 {
        (1.0, 2.0)
    } else {
        let kf = k as f64;
        (-kf + 1e-9, -kf + 1.0 - 1e-9)
    };
    let psi_re = |x: f64| psi(c(x, 0.0)).map(|v| v.re).unwrap_or(f64::NAN);
    let mut x = bisect(psi_re, lo, hi, 1e-16)?;
    // Newton polish with ψ′; keep only improving steps.
    for _ in 0..3 {
        let p = psi_re(x);
        let dp = psi_prime(c(x, 0.0))?.re;
        let xn = x - p / dp;
        if xn > lo && xn < hi && psi_re(xn).abs() < p.abs() {
            x = xn;
        } else {
            break;
        }
    }
    Ok(CriticalPoint { index: k, abscissa: x, gamma_xk: gamma_real(x)? })
}

const CACHE_LEN: usize = 24;

/// Write-once cache of critical points for `k < 24`.
pub fn cached_critical_point(k: u32) -> Result<CriticalPoint> {
    static CACHE: [OnceLock<CriticalPoint>; CACHE_LEN] = [const { OnceLock::new() }; CACHE_LEN];
    if (k as usize) < CACHE_LEN {
        if let Some(cp) = CACHE[k as usize].get() {
            return Ok(*cp);
        }
        let cp = critical_point(k)?;
        Ok(*CACHE[k as usize].get_or_init(|| cp))
    } else {
        critical_point(k)
    }
}

/// `arg Γ(z)` as the continuous branch `Im log Γ(z)`.
pub fn arg_gamma(z: ComplexValue) -> Result<f64> {
    Ok(log_gamma(z)?.im)
}
