//! Power-series helpers shared by the product-defined functions.

use super::ComplexValue;

/// `Σ_{k>n} k^{−s}` by Euler–Maclaurin summation, for `s > 1` and `n ≥ 1`.
pub fn power_tail(s: f64, n: usize) -> f64 {
    debug_assert!(s > 1.0 && n >= 1);
    let nf = n as f64;
    let p = nf.powf(-s);
    // ∫_n^∞ x^{-s} dx − f(n)/2 − Σ B_{2j}/(2j)! f^{(2j−1)}(n)
    let mut sum = nf * p / (s - 1.0) - 0.5 * p;
    sum += s * p / nf / 12.0;
    let s3 = s * (s + 1.0) * (s + 2.0);
    sum -= s3 * p / nf.powi(3) / 720.0;
    let s5 = s3 * (s + 3.0) * (s + 4.0);
    sum += s5 * p / nf.powi(5) / 30240.0;
    let s7 = s5 * (s + 5.0) * (s + 6.0);
    sum -= s7 * p / nf.powi(7) / 1209600.0;
    sum
}

/// `log(1 + x) − x + x²/2`, evaluated by its series for small `|x|` so that
/// the cubic leading term is not lost to cancellation.
pub fn log1p_minus_quadratic(x: ComplexValue) -> ComplexValue {
    let r = x.norm();
    if r < 0.25 {
        // Σ_{j≥3} (−1)^{j+1} x^j / j
        let mut term = x * x * x;
        let mut sum = ComplexValue::new(0.0, 0.0);
        let mut j = 3;
        loop {
            let contrib = term / j as f64;
            if j % 2 == 1 {
                sum += contrib;
            } else {
                sum -= contrib;
            }
            if contrib.norm() <= 1e-18 * sum.norm() || j > 60 {
                break;
            }
            term *= x;
            j += 1;
        }
        sum
    } else {
        (ComplexValue::new(1.0, 0.0) + x).ln() - x + x * x * 0.5
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_matches_zeta() {
        // ζ(2) = π²/6, ζ(3) = 1.2020569031595942
        // The first omitted correction is about 8e-13 at n = 10.
        for (n, tol) in [(10usize, 2e-12), (100, 1e-14), (1000, 1e-14)] {
            let head2: f64 = (1..=n).map(|k| 1.0 / (k as f64).powi(2)).sum();
            let head3: f64 = (1..=n).map(|k| 1.0 / (k as f64).powi(3)).sum();
            let z2 = std::f64::consts::PI.powi(2) / 6.0;
            let e2 = (head2 + power_tail(2.0, n) - z2).abs();
            let e3 = (head3 + power_tail(3.0, n) - 1.2020569031595942).abs();
            assert!(e2 < tol && e3 < tol, "n={n}: {e2:e} {e3:e}");
        }
    }

    #[test]
    fn log1p_branches_agree() {
        for &(re, im) in &[(0.2, 0.1), (-0.2, 0.15), (0.0, 0.24)] {
            let x = ComplexValue::new(re, im);
            let direct = (ComplexValue::new(1.0, 0.0) + x).ln() - x + x * x * 0.5;
            assert!((log1p_minus_quadratic(x) - direct).norm() < 1e-15);
        }
    }
}
