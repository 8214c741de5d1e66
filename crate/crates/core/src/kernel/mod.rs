//! Shared numerical machinery.

mod newton;
mod quadrature;
mod roots;
mod series;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use newton::{newton_solve, path_continuation, NewtonConfig};
pub(crate) use quadrature::integrate_generic;
pub use quadrature::{
    adaptive_integrate, adaptive_integrate_complex, EndpointSubstitution, QuadratureConfig,
};
pub use roots::{bisect, expand_upper_bracket};
pub use series::{log1p_minus_quadratic, power_tail};

/// The universal scalar.
pub type ComplexValue = Complex64;

/// Principal logarithm with `Im ∈ (−π, π]`.
///
/// A negative real argument carrying a negative-zero imaginary part is still
/// mapped onto the upper edge of the cut.
pub fn principal_log(z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("logarithm of zero"));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("logarithm of a non-finite value"));
    }
    let arg = if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    };
    Ok(ComplexValue::new(z.re.hypot(z.im).ln(), arg))
}

/// `x + iy` shorthand.
#[inline]
pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

pub(crate) fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
