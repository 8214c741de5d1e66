//! Barnes `G` and the double gamma function `Γ₂(z) = (2π)^{z/2}/G(z)`.
//!
//! Moving `log Γ(z)` into the product for `G(z+1)` gives `G` the class form
//! with `r = 1`, `a = −(1+γ)/2 − π²/12`, `b = γ + log(2π)/2 − 1/2` and zeros
//! `−k` of multiplicity `k + 1`. `1/Γ₂` differs only in `b = γ − 1/2`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::{ClassGFunction, ClassGMember, LambdaRule, Truncation};
use crate::error::{Error, Result};
use crate::gamma::{gamma, EULER_GAMMA, LOG_SQRT_2PI};
use crate::kernel::{c, ComplexValue};

const A: f64 = -(1.0 + EULER_GAMMA) / 2.0 - PI * PI / 12.0;

pub(crate) fn barnes_function() -> ClassGFunction {
    ClassGFunction {
        r: 1,
        a: A,
        b: EULER_GAMMA + LOG_SQRT_2PI - 0.5,
        lambda: LambdaRule::barnes(),
        truncation: Truncation::default(),
    }
}

pub(crate) fn inv_gamma2_function() -> ClassGFunction {
    ClassGFunction { b: EULER_GAMMA - 0.5, ..barnes_function() }
}

pub(crate) fn barnes_member() -> ClassGMember {
    static M: OnceLock<ClassGMember> = OnceLock::new();
    *M.get_or_init(|| ClassGMember::new(barnes_function()).expect("Barnes G lies in class G"))
}

pub(crate) fn inv_gamma2_member() -> ClassGMember {
    static M: OnceLock<ClassGMember> = OnceLock::new();
    *M.get_or_init(|| ClassGMember::new(inv_gamma2_function()).expect("1/Γ₂ lies in class G"))
}

impl ClassGFunction {
    pub fn barnes_g() -> Self {
        barnes_function()
    }

    pub fn inv_gamma2() -> Self {
        inv_gamma2_function()
    }
}

impl ClassGMember {
    /// Barnes `G`, classified once per process.
    pub fn barnes_g() -> Self {
        barnes_member()
    }

    /// `1/Γ₂`, classified once per process.
    pub fn inv_gamma2() -> Self {
        inv_gamma2_member()
    }
}

/// Barnes `G`; on the negative axis through `G(z) = G(z+1)/Γ(z)`.
pub fn barnes_g(z: ComplexValue) -> Result<ComplexValue> {
    if z.im != 0.0 || z.re > 0.0 {
        return barnes_function().f(z);
    }
    if z.re == z.re.round() {
        return Ok(c(0.0, 0.0));
    }
    let mut shift = z;
    let mut denom = c(1.0, 0.0);
    while shift.re <= 0.0 {
        denom *= gamma(shift)?;
        shift += 1.0;
    }
    Ok(barnes_function().f(shift)? / denom)
}

/// `Γ₂(z) = (2π)^{z/2} / G(z)`.
pub fn gamma2(z: ComplexValue) -> Result<ComplexValue> {
    let g = barnes_g(z)?;
    if g.norm() == 0.0 {
        return Err(Error::Pole(z.re));
    }
    Ok((z * LOG_SQRT_2PI).exp() / g)
}

/// The inverse of the decreasing map `Γ₂ : (β₂, ∞) → (0, Γ₂(β₂))`.
pub fn gamma2_inverse(w: f64) -> Result<f64> {
    let m = inv_gamma2_member();
    let top = 1.0 / m.f_beta;
    if !(w > 0.0 && w < top) {
        return Err(Error::domain(format!("gamma2_inverse needs 0 < w < {top}, got {w}")));
    }
    m.real_inverse(1.0 / w)
}
