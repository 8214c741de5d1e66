//! Entire functions of genus 2
//!
//! `f(z) = z^r e^{az² + bz} ∏ (1 + z/λ_k) e^{−z/λ_k + z²/(2λ_k²)}`
//!
//! with a rank-2 zero sequence `λ_k`. Sequences are given by [`LambdaRule`]:
//! the values `s·k^e`, each repeated `p·k + q` times. Grouping repeated zeros,
//! `log f = r log z + az² + bz + Σ_k (pk + q) L(z/λ_k)` with
//! `L(x) = log(1 + x) − x + x²/2`. The first `N` groups are summed directly;
//! the rest through the power series of `L`, whose coefficients are tails
//! `Σ_{k>N} k^{−σ}` of zeta sums.

mod barnes;

use std::f64::consts::PI;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kernel::{
    bisect, c, expand_upper_bracket, integrate_generic, log1p_minus_quadratic, path_continuation,
    power_tail, principal_log, ComplexValue, NewtonConfig, QuadratureConfig,
};
use crate::output::json_real;
use crate::pickrep::extrapolate_point_mass;

pub use barnes::{barnes_g, gamma2, gamma2_inverse};

/// `λ_k = scale·k^exponent` with multiplicity `mult_linear·k + mult_const`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LambdaRule {
    pub scale: f64,
    pub exponent: f64,
    pub mult_linear: u32,
    pub mult_const: u32,
}

impl LambdaRule {
    /// `λ = k` with multiplicity `k + 1`: the zeros of Barnes `G` and of `1/Γ₂`.
    pub const fn barnes() -> Self {
        LambdaRule { scale: 1.0, exponent: 1.0, mult_linear: 1, mult_const: 1 }
    }

    /// Checks positivity, monotonicity and rank 2 in closed form.
    ///
    /// With `p > 0` the group sums behave like `Σ k^{1−σe}`, otherwise like
    /// `Σ k^{−σe}`; rank 2 asks for divergence at `σ = 2` and convergence at `σ = 3`.
    pub fn validate(&self) -> Result<()> {
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::InvalidParameter("lambda scale must be positive".into()));
        }
        if !(self.exponent > 0.0 && self.exponent.is_finite()) {
            return Err(Error::InvalidParameter("lambda exponent must be positive".into()));
        }
        if self.mult_linear == 0 && self.mult_const == 0 {
            return Err(Error::InvalidParameter("multiplicity vanishes identically".into()));
        }
        let e = self.exponent;
        let rank2 = if self.mult_linear > 0 {
            e > 2.0 / 3.0 && e <= 1.0
        } else {
            e > 1.0 / 3.0 && e <= 0.5
        };
        if !rank2 {
            return Err(Error::InvalidParameter(format!("{} is not of rank 2", self.description())));
        }
        Ok(())
    }

    pub fn description(&self) -> String {
        format!(
            "lambda_k = {}*k^{} with multiplicity {}*k+{}",
            self.scale, self.exponent, self.mult_linear, self.mult_const
        )
    }

    fn value(&self, k: usize) -> f64 {
        self.scale * (k as f64).powf(self.exponent)
    }

    fn multiplicity(&self, k: usize) -> f64 {
        (self.mult_linear as u64 * k as u64 + self.mult_const as u64) as f64
    }
}

/// Number of directly summed groups and order of the tail series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub n_terms: usize,
    pub tail_order: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation { n_terms: 128, tail_order: 16 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassGFunction {
    pub r: u32,
    pub a: f64,
    pub b: f64,
    pub lambda: LambdaRule,
    pub truncation: Truncation,
}

/// Values of `log f`, `(log f)′`, `(log f)″` at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDerivatives {
    pub value: ComplexValue,
    pub first: ComplexValue,
    pub second: ComplexValue,
}

impl ClassGFunction {
    pub fn new(r: u32, a: f64, b: f64, lambda: LambdaRule, truncation: Truncation) -> Result<Self> {
        lambda.validate()?;
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidParameter("a and b must be finite".into()));
        }
        if truncation.n_terms < 1 || truncation.tail_order < 3 {
            return Err(Error::InvalidParameter("need n_terms >= 1 and tail_order >= 3".into()));
        }
        Ok(ClassGFunction { r, a, b, lambda, truncation })
    }

    fn n_eff(&self, z: ComplexValue) -> usize {
        let need = (20.0 * z.norm() / self.lambda.scale).powf(1.0 / self.lambda.exponent).ceil();
        self.truncation.n_terms.max(need as usize)
    }

    /// `log f`, `(log f)′` and `(log f)″` on `ℂ ∖ (−∞, 0]`.
    pub fn log_derivatives(&self, z: ComplexValue) -> Result<LogDerivatives> {
        if z.im == 0.0 && z.re <= 0.0 {
            return Err(Error::domain(format!("log f is cut along (-inf, 0], got z = {}", z.re)));
        }
        let one = c(1.0, 0.0);
        let r = self.r as f64;
        let mut value = principal_log(z)? * r + z * z * self.a + z * self.b;
        let mut first = r / z + z * (2.0 * self.a) + self.b;
        let mut second = -r / (z * z) + 2.0 * self.a;
        let n = self.n_eff(z);
        for k in 1..=n {
            let lam = self.lambda.value(k);
            let m = self.lambda.multiplicity(k);
            let x = z / lam;
            let inv = (one + x).inv();
            value += log1p_minus_quadratic(x) * m;
            first += x * x * inv * (m / lam);
            second += x * (2.0 + x) * inv * inv * (m / (lam * lam));
        }
        // Σ_{k>n} (pk+q) L(z/(s k^e)) = Σ_j (−1)^{j+1} (z/s)^j / j · [p H(ej−1) + q H(ej)]
        let s = self.lambda.scale;
        let e = self.lambda.exponent;
        let (p, q) = (self.lambda.mult_linear as f64, self.lambda.mult_const as f64);
        let y = z / s;
        let mut yj2 = y; // y^{j−2}
        for j in 3..=self.truncation.tail_order {
            let jf = j as f64;
            let mut coef = 0.0;
            if p > 0.0 {
                coef += p * power_tail(e * jf - 1.0, n);
            }
            if q > 0.0 {
                coef += q * power_tail(e * jf, n);
            }
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            let yj1 = yj2 * y;
            value += yj1 * y * (sign * coef / jf);
            first += yj1 * (sign * coef / s);
            second += yj2 * (sign * coef * (jf - 1.0) / (s * s));
            yj2 = yj1;
        }
        Ok(LogDerivatives { value, first, second })
    }

    pub fn logf(&self, z: ComplexValue) -> Result<ComplexValue> {
        Ok(self.log_derivatives(z)?.value)
    }

    pub fn logf_prime(&self, z: ComplexValue) -> Result<ComplexValue> {
        Ok(self.log_derivatives(z)?.first)
    }

    pub fn logf_second(&self, z: ComplexValue) -> Result<ComplexValue> {
        Ok(self.log_derivatives(z)?.second)
    }

    /// `f(z) = exp(log f(z))`.
    pub fn f(&self, z: ComplexValue) -> Result<ComplexValue> {
        Ok(self.logf(z)?.exp())
    }

    fn second_real(&self, x: f64) -> f64 {
        self.logf_second(c(x, 0.0)).map(|v| v.re).unwrap_or(f64::NAN)
    }

    fn first_real(&self, x: f64) -> f64 {
        self.logf_prime(c(x, 0.0)).map(|v| v.re).unwrap_or(f64::NAN)
    }

    /// The zero `u > 0` of `(log f)″`; negative before, positive after.
    pub fn inflection_u(&self) -> Result<f64> {
        if self.r == 0 {
            return Err(Error::InvalidParameter("inflection point needs r > 0".into()));
        }
        let mut lo = 1.0;
        let mut steps = 0;
        while self.second_real(lo) >= 0.0 {
            lo *= 0.5;
            steps += 1;
            if steps > 200 {
                return Err(Error::NoBracket("(log f)'' is not negative near 0".into()));
            }
        }
        let hi = expand_upper_bracket(|x| self.second_real(x), lo, 2.0 * lo, 1.0, 200)?;
        bisect(|x| self.second_real(x), lo, hi, 1e-16)
    }

    /// Inflection point, class-𝒢 membership and, for members, the minimum `β`.
    pub fn classify(&self) -> Result<ClassGDerived> {
        let u = self.inflection_u()?;
        if !(self.first_real(u) < 0.0) {
            return Ok(ClassGDerived { u, beta: None, f_beta: None, in_class_g: false });
        }
        let hi = expand_upper_bracket(|x| self.first_real(x), u, u + 1.0, 1.0, 200)?;
        let mut beta = bisect(|x| self.first_real(x), u, hi, 1e-16)?;
        let d = self.log_derivatives(c(beta, 0.0))?;
        let step = d.first.re / d.second.re;
        if (beta - step) > u && self.first_real(beta - step).abs() < d.first.re.abs() {
            beta -= step;
        }
        let f_beta = self.logf(c(beta, 0.0))?.re.exp();
        Ok(ClassGDerived { u, beta: Some(beta), f_beta: Some(f_beta), in_class_g: true })
    }

    /// `{r, a, b, lambda_rule, u, beta, f_beta, in_class_g}`.
    pub fn derived_json(&self, d: &ClassGDerived) -> Value {
        json!({
            "r": self.r,
            "a": json_real(self.a),
            "b": json_real(self.b),
            "lambda_rule": self.lambda.description(),
            "u": json_real(d.u),
            "beta": d.beta.map(json_real).unwrap_or(Value::Null),
            "f_beta": d.f_beta.map(json_real).unwrap_or(Value::Null),
            "in_class_g": d.in_class_g,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassGDerived {
    pub u: f64,
    pub beta: Option<f64>,
    pub f_beta: Option<f64>,
    pub in_class_g: bool,
}

/// A classified member of 𝒢 with its minimum `β` and `f(β)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassGMember {
    pub function: ClassGFunction,
    pub u: f64,
    pub beta: f64,
    pub f_beta: f64,
    /// `f⁻¹(2f(β))`, the start of every continuation path.
    #[serde(skip)]
    anchor: f64,
}

/// Upper limit of `u` in the exponential substitutions of the density integral.
const LOG_CUTOFF: f64 = 40.0;
/// Below `MODEL_FRACTION·f(β)` the density follows `C/√t`.
const MODEL_FRACTION: f64 = 1e-10;

impl ClassGMember {
    pub fn new(function: ClassGFunction) -> Result<Self> {
        let d = function.classify()?;
        match (d.in_class_g, d.beta, d.f_beta) {
            (true, Some(beta), Some(f_beta)) => {
                let mut m = ClassGMember { function, u: d.u, beta, f_beta, anchor: beta };
                m.anchor = m.real_inverse(2.0 * f_beta)?;
                Ok(m)
            }
            _ => Err(Error::InvalidParameter("function is not in class G".into())),
        }
    }

    pub fn derived(&self) -> ClassGDerived {
        ClassGDerived { u: self.u, beta: Some(self.beta), f_beta: Some(self.f_beta), in_class_g: true }
    }

    /// The increasing real inverse `(f(β), ∞) → (β, ∞)`.
    fn real_inverse(&self, w: f64) -> Result<f64> {
        if !(w > self.f_beta) {
            return Err(Error::domain(format!("w = {w} not above f(beta) = {}", self.f_beta)));
        }
        let level = w.ln();
        let g = |x: f64| self.function.logf(c(x, 0.0)).map(|v| v.re - level).unwrap_or(f64::NAN);
        let hi = expand_upper_bracket(g, self.beta, self.beta + 1.0, 1.0, 200)?;
        let mut x = bisect(g, self.beta, hi, 1e-17)?;
        let d = self.function.log_derivatives(c(x, 0.0))?;
        if d.first.re > 0.0 {
            let xn = x - (d.value.re - level) / d.first.re;
            if xn > self.beta && g(xn).abs() < g(x).abs() {
                x = xn;
            }
        }
        Ok(x)
    }

    /// Solves `log f(z) = ζ` in `{Re z > u} ∩ closure(ℂ₊)` for `0 ≤ Im ζ ≤ π`.
    fn solve_log(&self, zeta: ComplexValue) -> Result<ComplexValue> {
        let start = c((2.0 * self.f_beta).ln(), 0.0);
        let u = self.u;
        let guard = move |z: ComplexValue, f: ComplexValue| {
            z.im >= 0.0 && z.re > u && f.im > -0.3 && f.im < PI + 0.3
        };
        // Far targets are first approached along the real axis, where f⁻¹ is
        // real; a real target left of log f(β) is reached through the strip.
        let waypoints: Vec<ComplexValue> = if zeta.re > start.re {
            vec![c(zeta.re, 0.0)]
        } else if zeta.im == 0.0 {
            vec![(start + zeta) * 0.5 + c(0.0, PI / 2.0)]
        } else {
            Vec::new()
        };
        let fd = |z: ComplexValue| self.function.log_derivatives(z).map(|d| (d.value, d.first));
        path_continuation(fd, (start, c(self.anchor, 0.0)), zeta, &waypoints, &NewtonConfig::default(), guard)
    }

    /// The univalent Pick inverse on `ℂ ∖ (−∞, f(β)]`.
    pub fn inverse_f(&self, w: ComplexValue) -> Result<ComplexValue> {
        if w.im > 0.0 {
            self.solve_log(principal_log(w)?)
        } else if w.im < 0.0 {
            Ok(self.solve_log(principal_log(w.conj())?)?.conj())
        } else {
            Ok(c(self.real_inverse(w.re)?, 0.0))
        }
    }

    /// `(f⁻¹(w) − β)²`.
    pub fn quadrant_pick_square(&self, w: ComplexValue) -> Result<ComplexValue> {
        let z = self.inverse_f(w)? - self.beta;
        Ok(z * z)
    }

    /// `log f(β + iy)`.
    pub fn boundary_curve(&self, y: f64) -> Result<ComplexValue> {
        if !(y > 0.0) {
            return Err(Error::domain("boundary_curve needs y > 0"));
        }
        self.function.logf(c(self.beta, y))
    }

    /// `w = f(β) − t` is passed separately so that it stays exact next to `f(β)`.
    fn density_direct(&self, t: f64, w: f64) -> Result<f64> {
        let zeta = if w > 0.0 { c(w.ln(), 0.0) } else { c((-w).ln(), PI) };
        Ok((self.solve_log(zeta)?.im / (PI * t)).max(0.0))
    }

    /// Density of the Stieltjes measure of `(f⁻¹(w) − β)/(w − f(β))`:
    /// `Im f⁻¹(f(β) − t + i0) / (π t)`.
    pub fn genus2_density(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) || t == self.f_beta || !t.is_finite() {
            return Err(Error::domain(format!("density needs t > 0, t != f(beta); got {t}")));
        }
        self.density_split(t, self.f_beta - t)
    }

    fn density_split(&self, t: f64, w: f64) -> Result<f64> {
        if w == 0.0 {
            return Err(Error::domain("density is not defined at t = f(beta)"));
        }
        let t_ref = MODEL_FRACTION * self.f_beta;
        if t < t_ref {
            Ok(self.density_direct(t_ref, self.f_beta - t_ref)? * (t_ref / t).sqrt())
        } else {
            self.density_direct(t, w)
        }
    }

    /// `β + (w − f(β)) ∫₀^∞ d(t)/(t + w − f(β)) dt`, without a point-mass term.
    pub fn genus2_stieltjes_eval(&self, w: ComplexValue, cfg: &QuadratureConfig) -> Result<ComplexValue> {
        cfg.validate()?;
        if w.im == 0.0 && w.re <= self.f_beta {
            return Err(Error::domain(format!("w = {} lies on the cut", w.re)));
        }
        let fb = self.f_beta;
        let x = w - fb;
        let kernel = |t: f64| (c(t, 0.0) + x).inv();
        let tol = cfg.abs_tol;
        let budget = cfg.max_subdivisions;
        // (0, fβ/2] with t = σ²
        let p1 = integrate_generic(
            |s: f64| {
                let t = s * s;
                Ok(kernel(t) * (self.genus2_density(t)? * 2.0 * s))
            },
            0.0,
            (0.5 * fb).sqrt(),
            tol,
            budget,
        )?;
        // [fβ/2, fβ) with t = fβ − (fβ/2)e^{−u}
        let p2 = integrate_generic(
            |u: f64| {
                let h = 0.5 * fb * (-u).exp();
                let t = fb - h;
                Ok(kernel(t) * (self.density_split(t, h)? * h))
            },
            0.0,
            LOG_CUTOFF,
            tol,
            budget,
        )?;
        // (fβ, 2fβ] with t = fβ + fβ e^{−u}
        let p3 = integrate_generic(
            |u: f64| {
                let h = fb * (-u).exp();
                let t = fb + h;
                Ok(kernel(t) * (self.density_split(t, -h)? * h))
            },
            0.0,
            LOG_CUTOFF,
            tol,
            budget,
        )?;
        // [2fβ, ∞) with t = 2fβ e^{u}
        let p4 = integrate_generic(
            |u: f64| {
                let t = 2.0 * fb * u.exp();
                Ok(kernel(t) * (self.genus2_density(t)? * t))
            },
            0.0,
            LOG_CUTOFF,
            tol,
            budget,
        )?;
        Ok(x * (p1 + p2 + p3 + p4) + self.beta)
    }

    /// Extrapolated `lim_{y→0⁺} y·Im f⁻¹(iy)`.
    pub fn genus2_point_mass(&self) -> Result<f64> {
        let samples = (4..=20)
            .map(|j| {
                let y = 2f64.powi(-j);
                self.inverse_f(c(0.0, y)).map(|z| (y, y * z.im))
            })
            .collect::<Result<Vec<_>>>()?;
        extrapolate_point_mass(&samples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus2::barnes::{barnes_function, barnes_member, inv_gamma2_member};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_two_gate() {
        assert!(LambdaRule::barnes().validate().is_ok());
        let inv_gamma = LambdaRule { scale: 1.0, exponent: 1.0, mult_linear: 0, mult_const: 1 };
        assert!(inv_gamma.validate().is_err());
        let two_thirds = LambdaRule { scale: 1.0, exponent: 2.0 / 3.0, mult_linear: 0, mult_const: 1 };
        assert!(ClassGFunction::new(1, 0.1, 0.0, two_thirds, Truncation::default()).is_err());
        let sqrt_rule = LambdaRule { scale: 1.0, exponent: 0.5, mult_linear: 0, mult_const: 1 };
        assert!(sqrt_rule.validate().is_ok());
        let r = LambdaRule { scale: 0.0, ..LambdaRule::barnes() };
        assert!(r.validate().is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let f = barnes_function();
        for z in [c(1.3, 0.4), c(3.0, 2.0), c(0.2, -1.5), c(-2.5, 0.7)] {
            let d = f.log_derivatives(z).unwrap();
            let h = 1e-5;
            let fd1 = (f.logf(z + h).unwrap() - f.logf(z - h).unwrap()) / (2.0 * h);
            let fd2 = (f.logf_prime(z + h).unwrap() - f.logf_prime(z - h).unwrap()) / (2.0 * h);
            assert!((fd1 - d.first).norm() < 1e-7 * d.first.norm().max(1.0), "{z}");
            assert!((fd2 - d.second).norm() < 1e-7 * d.second.norm().max(1.0), "{z}");
        }
    }

    #[test]
    fn truncation_is_converged() {
        let f = barnes_function();
        let big = ClassGFunction {
            truncation: Truncation { n_terms: 20000, tail_order: 16 },
            ..f
        };
        for z in [c(2.5, 0.0), c(4.0, 3.0), c(10.0, 1.0)] {
            let a = f.logf(z).unwrap();
            let b = big.logf(z).unwrap();
            assert!((a - b).norm() < 1e-11 * a.norm().max(1.0), "{z}: {a} vs {b}");
        }
    }

    #[test]
    fn logf_examples() {
        let f = barnes_function();
        assert!(f.logf(c(1.0, 0.0)).unwrap().norm() < 1e-13);
        assert!((f.logf(c(4.0, 0.0)).unwrap() - c(2f64.ln(), 0.0)).norm() < 1e-12);
        assert!(f.logf(c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn inflection_and_classification() {
        for m in [barnes_member(), inv_gamma2_member()] {
            let f = m.function;
            assert!(m.u > 0.0 && m.u < m.beta);
            assert!(f.logf_second(c(m.u, 0.0)).unwrap().re.abs() < 1e-12);
            assert!(f.logf_second(c(0.5 * m.u, 0.0)).unwrap().re < 0.0);
            assert!(f.logf_second(c(2.0 * m.u, 0.0)).unwrap().re > 0.0);
            assert!(f.logf_prime(c(m.beta, 0.0)).unwrap().re.abs() < 1e-12);
            assert!(f.logf_second(c(m.beta, 0.0)).unwrap().re > 0.0);
        }
        // Reference values from an independent 30-digit evaluation of G.
        let g = barnes_member();
        assert!((g.beta - 2.557_663_932_789_019).abs() < 1e-9);
        assert!((g.f_beta - 0.946_845_605_269_706_1).abs() < 1e-10);
        let h = inv_gamma2_member();
        assert!((h.beta - 3.748_064_524_147_672_6).abs() < 1e-9);
        assert!((h.f_beta - 0.048_998_984_062_747_03).abs() < 1e-11);
    }

    #[test]
    fn scaling_moves_inflection() {
        let f = barnes_function();
        let cst = 2.0;
        let scaled = ClassGFunction {
            a: f.a * cst * cst,
            b: f.b * cst,
            lambda: LambdaRule { scale: f.lambda.scale / cst, ..f.lambda },
            ..f
        };
        let (u, us) = (f.inflection_u().unwrap(), scaled.inflection_u().unwrap());
        assert!((us - u / cst).abs() < 1e-10);
    }

    #[test]
    fn membership_flips_with_b() {
        let base = barnes_function();
        let mut prev = true;
        let mut flipped = false;
        for j in 0..12 {
            let f = ClassGFunction { b: base.b + 0.5 * j as f64, ..base };
            let d = f.classify().unwrap();
            // Raising b only shifts (log f)′ up, so membership can only be lost.
            assert!(prev || !d.in_class_g);
            flipped |= prev && !d.in_class_g;
            prev = d.in_class_g;
        }
        assert!(flipped && !prev);
        let r0 = ClassGFunction { r: 0, ..base };
        assert!(r0.inflection_u().is_err());
    }

    #[test]
    fn derived_json_fields() {
        let m = barnes_member();
        let v = m.function.derived_json(&m.derived());
        for key in ["r", "a", "b", "lambda_rule", "u", "beta", "f_beta", "in_class_g"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn log_derivative_maps_right_half_into_upper_plane() {
        let m = barnes_member();
        for i in 0..10 {
            for j in 1..10 {
                let z = c(m.u + 0.01 + 0.7 * i as f64, 0.5 * j as f64);
                assert!(m.function.logf_prime(z).unwrap().im > 0.0, "{z}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let g = barnes_member();
        assert!((g.inverse_f(c(12.0, 0.0)).unwrap() - c(5.0, 0.0)).norm() < 1e-10);
        assert!((g.inverse_f(c(2.0, 0.0)).unwrap() - c(4.0, 0.0)).norm() < 1e-10);
        let w = c(1.0, 1.0);
        let z = g.inverse_f(w).unwrap();
        assert!(z.im > 0.0 && z.re > g.beta);
        assert!((g.function.f(z).unwrap() - w).norm() < 1e-10 * w.norm());
        assert!(g.inverse_f(c(0.5, 0.0)).is_err());
    }

    #[test]
    fn inverse_is_pick_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in [barnes_member(), inv_gamma2_member()] {
            for _ in 0..20 {
                let r = 10f64.powf(rng.gen_range(-2.0..2.0));
                let th = rng.gen_range(0.01..PI - 0.01);
                let w = c(r * th.cos(), r * th.sin());
                let z = m.inverse_f(w).unwrap();
                assert!(z.im > 0.0 && z.re > m.beta, "w={w} z={z}");
                assert!((m.function.f(z).unwrap() - w).norm() < 1e-10 * r.max(1.0));
            }
        }
    }

    #[test]
    fn inverse_of_inverse() {
        for m in [barnes_member(), inv_gamma2_member()] {
            for dx in [0.5, 1.0, 5.0] {
                let x = m.beta + dx;
                let w = m.function.f(c(x, 0.0)).unwrap();
                assert!((m.inverse_f(w).unwrap().re - x).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn quadrant_square() {
        let g = barnes_member();
        let s = g.quadrant_pick_square(c(3.0, 0.0)).unwrap();
        assert!(s.re > 0.0 && s.im == 0.0);
        assert!(g.quadrant_pick_square(c(0.2, 1.0)).unwrap().im > 0.0);
        assert!(g.quadrant_pick_square(c(g.f_beta * (1.0 + 1e-12), 0.0)).unwrap().norm() < 1e-4);
    }

    #[test]
    fn boundary_curve_decreases() {
        let g = barnes_member();
        let lf = g.function.logf(c(g.beta, 0.0)).unwrap();
        assert!((g.boundary_curve(1e-8).unwrap() - lf).norm() < 1e-10);
        assert!(g.boundary_curve(1.0).unwrap().im < 0.0);
        let mut prev = g.boundary_curve(0.01).unwrap();
        for j in 1..50 {
            let y = 0.01 * 5000f64.powf(j as f64 / 49.0);
            let cur = g.boundary_curve(y).unwrap();
            assert!(cur.re < prev.re && cur.im < prev.im, "y={y}");
            prev = cur;
        }
    }

    #[test]
    fn density_is_positive() {
        let g = barnes_member();
        for j in 1..40 {
            let t = 0.5 * j as f64;
            if (t - g.f_beta).abs() < 1e-9 {
                continue;
            }
            assert!(g.genus2_density(t).unwrap() > 0.0, "t={t}");
        }
        assert!(g.genus2_density(-1.0).is_err());
        assert!(g.genus2_density(g.f_beta).is_err());
    }

    #[test]
    fn representation_reproduces_factorial_anchor() {
        let g = barnes_member();
        let v = g.genus2_stieltjes_eval(c(12.0, 0.0), &QuadratureConfig::with_tol(1e-9)).unwrap();
        assert!((v - c(5.0, 0.0)).norm() < 1e-4, "{v}");
    }

    #[test]
    fn point_mass_is_small() {
        let g = barnes_member();
        assert!(g.genus2_point_mass().unwrap().abs() < 1e-4);
    }
}
