use crate::error::{Error, Result};

use super::{is_finite, ComplexValue};

/// Maximum number of step halvings per Newton iteration.
const MAX_SHRINKS: usize = 8;
/// Relative step size treated as converged when the residual cannot drop further.
const STEP_FLOOR: f64 = 4.0 * f64::EPSILON;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonConfig {
    pub max_iter: usize,
    /// Residual tolerance, scaled by `max(1, |target|)`.
    pub residual_tol: f64,
    /// Damping factor applied to a rejected step, in `(0, 1)`.
    pub step_shrink: f64,
    /// Budget of accepted plus rejected sub-segments in [`path_continuation`].
    pub max_path_segments: usize,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        NewtonConfig {
            max_iter: 50,
            residual_tol: 1e-12,
            step_shrink: 0.5,
            max_path_segments: 4096,
        }
    }
}

impl NewtonConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.residual_tol > 0.0) {
            return Err(Error::InvalidParameter("residual_tol must be positive".into()));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidParameter("max_iter must be at least 1".into()));
        }
        if !(self.step_shrink > 0.0 && self.step_shrink < 1.0) {
            return Err(Error::InvalidParameter("step_shrink must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// Damped Newton iteration for `f(z) = target`.
///
/// `f` returns the pair `(f(z), f′(z))`; evaluation failures are treated like
/// guard violations and cause the step to be shrunk. `guard` receives the
/// iterate together with its function value. The full step is halved up to
/// eight times whenever the residual does not decrease or the guard rejects
/// the candidate. A step smaller than a few ulps of the iterate ends the
/// iteration successfully even if the residual tolerance is not met.
pub fn newton_solve<F, G>(
    f: F,
    seed: ComplexValue,
    target: ComplexValue,
    cfg: &NewtonConfig,
    guard: G,
) -> Result<ComplexValue>
where
    F: Fn(ComplexValue) -> Result<(ComplexValue, ComplexValue)>,
    G: Fn(ComplexValue, ComplexValue) -> bool,
{
    cfg.validate()?;
    let tol = cfg.residual_tol * target.norm().max(1.0);

    let (mut fz, mut dfz) = f(seed).map_err(|_| Error::GuardViolation)?;
    if !guard(seed, fz) {
        return Err(Error::GuardViolation);
    }
    let mut z = seed;
    let mut residual = (fz - target).norm();

    for _ in 0..cfg.max_iter {
        if residual <= tol {
            return Ok(z);
        }
        let step = -(fz - target) / dfz;
        if !is_finite(step) {
            return Err(Error::NonConvergence { iterations: 0, residual });
        }
        if step.norm() <= STEP_FLOOR * z.norm() {
            // The correction is below the spacing of doubles around z.
            return Ok(z);
        }
        let mut scale = 1.0;
        let mut accepted = false;
        let mut guard_hit = false;
        for _ in 0..=MAX_SHRINKS {
            let cand = z + step * scale;
            if let Ok((fc, dfc)) = f(cand) {
                if is_finite(fc) && guard(cand, fc) {
                    let r = (fc - target).norm();
                    if r < residual || r <= tol {
                        z = cand;
                        fz = fc;
                        dfz = dfc;
                        residual = r;
                        accepted = true;
                        break;
                    }
                } else {
                    guard_hit = true;
                }
            } else {
                guard_hit = true;
            }
            scale *= cfg.step_shrink;
        }
        if !accepted {
            if residual <= tol {
                return Ok(z);
            }
            return Err(if guard_hit {
                Error::GuardViolation
            } else {
                Error::NonConvergence { iterations: cfg.max_iter, residual }
            });
        }
    }
    if residual <= tol {
        Ok(z)
    } else {
        Err(Error::NonConvergence { iterations: cfg.max_iter, residual })
    }
}

/// Follows the solution of `f(z) = w` along a piecewise-linear path in the
/// `w`-plane, from the known pair `(w₀, z₀)` through `waypoints` to `target`.
///
/// Each sub-segment is solved by [`newton_solve`] seeded with the previous
/// solution. A failed sub-segment is halved; a successful one lets the next
/// attempt double its length. The total number of attempts is bounded by
/// `cfg.max_path_segments`.
pub fn path_continuation<F, G>(
    f: F,
    known: (ComplexValue, ComplexValue),
    target: ComplexValue,
    waypoints: &[ComplexValue],
    cfg: &NewtonConfig,
    guard: G,
) -> Result<ComplexValue>
where
    F: Fn(ComplexValue) -> Result<(ComplexValue, ComplexValue)>,
    G: Fn(ComplexValue, ComplexValue) -> bool,
{
    cfg.validate()?;
    let (w0, mut z) = known;
    let mut nodes = Vec::with_capacity(waypoints.len() + 2);
    nodes.push(w0);
    nodes.extend_from_slice(waypoints);
    nodes.push(target);

    let total = nodes.len() - 1;
    let mut attempts = 0usize;
    for (seg, pair) in nodes.windows(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let mut s = 0.0f64;
        let mut h = 1.0f64;
        while s < 1.0 {
            let h_eff = h.min(1.0 - s);
            let s_next = if h_eff >= 1.0 - s { 1.0 } else { s + h_eff };
            let w = a + (b - a) * s_next;
            attempts += 1;
            if attempts > cfg.max_path_segments {
                return Err(Error::ContinuationBreakdown {
                    segments: attempts - 1,
                    progress: (seg as f64 + s) / total as f64,
                });
            }
            match newton_solve(&f, z, w, cfg, &guard) {
                Ok(zn) => {
                    z = zn;
                    s = s_next;
                    h = (2.0 * h_eff).min(1.0);
                }
                Err(_) => {
                    h = h_eff * 0.5;
                    if h < 1e-12 {
                        return Err(Error::ContinuationBreakdown {
                            segments: attempts,
                            progress: (seg as f64 + s) / total as f64,
                        });
                    }
                }
            }
        }
    }
    Ok(z)
}
