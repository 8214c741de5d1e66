use crate::error::{Error, Result};

/// Bisection on a sign change of `f` over `[lo, hi]`.
///
/// Stops when the bracket is below `xtol · max(1, |x|)` or after 200 halvings.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(Error::NoBracket(format!(
            "f({lo}) = {flo}, f({hi}) = {fhi}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() <= xtol * mid.abs().max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Grows `hi` geometrically away from `lo` until `f(hi)` has the sign `sign`.
pub fn expand_upper_bracket<F>(f: F, lo: f64, mut hi: f64, sign: f64, max_steps: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    for _ in 0..max_steps {
        let v = f(hi);
        if v.signum() == sign.signum() && v != 0.0 {
            return Ok(hi);
        }
        hi = lo + 2.0 * (hi - lo);
    }
    Err(Error::NoBracket(format!("bracket expansion from {lo} exhausted")))
}
