use std::collections::BinaryHeap;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

use super::ComplexValue;

/// Kronrod abscissae of the 21-point rule (positive half, centre last).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208746216566,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

/// Weights of the embedded 10-point Gauss rule (abscissae `XGK[1], XGK[3], …`).
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Upper limit of the `u`-range for the logarithmic substitution `t = a + (b−a)e^{−u}`.
const LOG_SUBSTITUTION_CUTOFF: f64 = 50.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointSubstitution {
    None,
    /// `t = a + s²`, for `√(t − a)`-type behaviour at the left endpoint.
    Sqrt,
    /// `t = a + (b − a)e^{−u}`, for logarithmic singularities at the left endpoint.
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub endpoint_substitution: EndpointSubstitution,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-9,
            max_subdivisions: 2000,
            endpoint_substitution: EndpointSubstitution::None,
        }
    }
}

impl QuadratureConfig {
    pub fn with_tol(abs_tol: f64) -> Self {
        QuadratureConfig { abs_tol, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidParameter("abs_tol must be positive".into()));
        }
        Ok(())
    }
}

pub(crate) trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for ComplexValue {
    fn zero() -> Self {
        ComplexValue::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<T: QuadValue, F: FnMut(f64) -> Result<T>>(f: &mut F, a: f64, b: f64) -> Result<Panel<T>> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut kron = fc * WGK[10];
    let mut gauss = T::zero();
    let mut abs_sum = fc.magnitude() * WGK[10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        let s = f1 + f2;
        kron = kron + s * WGK[j];
        abs_sum += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + s * WG[j / 2];
        }
    }
    let value = kron * half;
    let mut error = ((kron - gauss) * half).magnitude();
    let floor = 50.0 * f64::EPSILON * abs_sum * half.abs();
    if error < floor {
        error = floor;
    }
    Ok(Panel { a, b, value, error })
}

/// Globally adaptive 21-point Gauss–Kronrod integration over a finite interval.
pub(crate) fn integrate_generic<T, F>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_subdivisions: usize,
) -> Result<T>
where
    T: QuadValue,
    F: FnMut(f64) -> Result<T>,
{
    if a == b {
        return Ok(T::zero());
    }
    let first = gk21(&mut f, a, b)?;
    let mut total = first.value;
    let mut err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut count = 1usize;
    while err > abs_tol.max(4.0 * f64::EPSILON * total.magnitude()) {
        if count >= max_subdivisions {
            return Err(Error::QuadratureBudget { subdivisions: count, error: err });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            // Interval cannot be split further in double precision.
            return Err(Error::QuadratureBudget { subdivisions: count, error: err });
        }
        let left = gk21(&mut f, worst.a, mid)?;
        let right = gk21(&mut f, mid, worst.b)?;
        total = total - worst.value + left.value + right.value;
        err = err - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        count += 1;
        if count.is_multiple_of(64) {
            // Re-sum to avoid drift from repeated subtraction.
            total = heap.iter().fold(T::zero(), |acc, p| acc + p.value);
            err = heap.iter().map(|p| p.error).sum();
        }
    }
    Ok(heap.iter().fold(T::zero(), |acc, p| acc + p.value))
}

fn substituted<T, F>(g: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<T>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    cfg.validate()?;
    match cfg.endpoint_substitution {
        EndpointSubstitution::None => {
            integrate_generic(|t| Ok(g(t)), a, b, cfg.abs_tol, cfg.max_subdivisions)
        }
        EndpointSubstitution::Sqrt => {
            let len = b - a;
            let smax = len.abs().sqrt();
            let sign = len.signum();
            integrate_generic(
                |s| Ok(g(a + sign * s * s) * (2.0 * s * sign)),
                0.0,
                smax,
                cfg.abs_tol,
                cfg.max_subdivisions,
            )
        }
        EndpointSubstitution::Log => {
            let len = b - a;
            integrate_generic(
                |u| {
                    let e = (-u).exp();
                    Ok(g(a + len * e) * (len * e))
                },
                0.0,
                LOG_SUBSTITUTION_CUTOFF,
                cfg.abs_tol,
                cfg.max_subdivisions,
            )
        }
    }
}

/// `∫ₐᵇ g(t) dt` with an optional singularity-removing substitution at `a`.
pub fn adaptive_integrate<F: Fn(f64) -> f64>(g: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    substituted(g, a, b, cfg)
}

/// Complex-valued counterpart of [`adaptive_integrate`].
pub fn adaptive_integrate_complex<F: Fn(f64) -> ComplexValue>(
    g: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<ComplexValue> {
    substituted(g, a, b, cfg)
}
