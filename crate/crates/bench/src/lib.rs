//! Shared fixtures for the criterion benches.

use gammainv::kernel::{c, ComplexValue};

/// Fixed upper-half-plane sample points of moderate modulus.
pub fn sample_points() -> Vec<ComplexValue> {
    (0..16)
        .map(|j| {
            let t = j as f64 / 16.0;
            c(-4.0 + 8.0 * t, 0.2 + 3.0 * t * t)
        })
        .collect()
}
