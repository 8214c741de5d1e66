//! Comb inversion applied to `sin` on the half strip `|Re z| < π/2, Im z > 0`,
//! checked against the closed form `i log J⁻¹(z) + π/2`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::kernel::{c, path_continuation, power_tail, principal_log, ComplexValue, NewtonConfig};

const MIN_TERMS: usize = 1024;
const TAIL_ORDER: usize = 12;

/// `(log sin z, cot z)` from the Weierstrass product, principal logs term by term.
pub fn log_sin_product(z: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    let a = z / PI;
    let n = MIN_TERMS.max((20.0 * a.norm()).ceil() as usize);
    let mut f = principal_log(z)?;
    let mut d = z.inv();
    for k in 1..=n {
        let kf = k as f64;
        let x = a / kf;
        f += principal_log(c(1.0, 0.0) - x)? + principal_log(c(1.0, 0.0) + x)?;
        d += 2.0 * z / (z * z - (kf * PI) * (kf * PI));
    }
    // Σ_{k>n} log(1 − a²/k²) = −Σ_j a^{2j}/j · Σ_{k>n} k^{−2j}
    let a2 = a * a;
    let mut p = a2;
    for j in 1..=TAIL_ORDER {
        let h = power_tail(2.0 * j as f64, n);
        f -= p / j as f64 * h;
        d -= 2.0 * p / a / PI * h;
        p *= a2;
    }
    Ok((f, d))
}

/// The root of `w² − 2zw + 1` with `|w| > 1`, or `Im w ≥ 0` when both have unit modulus.
pub fn joukowski_inverse(z: ComplexValue) -> ComplexValue {
    let s = (z * z - 1.0).sqrt();
    let (p, m) = (z + s, z - s);
    let (np, nm) = (p.norm(), m.norm());
    if (np - nm).abs() <= 1e-14 * np.max(1.0) {
        if p.im >= m.im {
            p
        } else {
            m
        }
    } else if np > nm {
        p
    } else {
        m
    }
}

/// `arcsin` on `ℂ₊` from `i log J⁻¹(z) + π/2`; lands in the half strip.
pub fn lp_sin_inverse(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.im > 0.0) {
        return Err(Error::domain("lp_sin_inverse requires Im z > 0"));
    }
    Ok(c(0.0, 1.0) * principal_log(joukowski_inverse(z))? + FRAC_PI_2)
}

/// Boundary limit of [`lp_sin_inverse`] on `[−1, 1]`.
pub fn lp_sin_inverse_real(x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("lp_sin_inverse_real requires |x| <= 1, got {x}")));
    }
    Ok((c(0.0, 1.0) * principal_log(joukowski_inverse(c(x, 0.0)))? + FRAC_PI_2).re)
}

/// `sin⁻¹(w)` on `ℂ₊` by continuation of `(log sin)⁻¹` from `z = 1`.
pub fn comb_sin_inverse(w: ComplexValue) -> Result<ComplexValue> {
    if !(w.im > 0.0) {
        return Err(Error::domain("comb_sin_inverse requires Im w > 0"));
    }
    let z0 = c(1.0, 0.0);
    let known = (log_sin_product(z0)?.0, z0);
    let guard = |z: ComplexValue, f: ComplexValue| {
        z.im >= 0.0 && z.re.abs() < FRAC_PI_2 + 0.3 && f.im > -0.3 && f.im < PI + 0.3
    };
    path_continuation(log_sin_product, known, principal_log(w)?, &[], &NewtonConfig::default(), guard)
}
