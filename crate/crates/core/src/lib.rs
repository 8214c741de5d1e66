//! Branch inverses of Euler's Gamma function realised as Pick functions.
//!
//! The crate builds every inverse branch `g_k` of `Γ` by continuation of
//! `(log Γ)⁻¹` through the comb domain `log Γ(ℂ₊)`, evaluates the Stieltjes
//! densities of those branches, reconstructs the branches from their integral
//! representations, and carries the same machinery over to entire functions of
//! genus 2 (Barnes' `G` and the double gamma function `Γ₂`).
//!
//! Modules:
//!
//! * [`kernel`] – complex helpers, damped Newton with path continuation,
//!   bracketing root finder, adaptive Gauss–Kronrod quadrature.
//! * [`gamma`] – `Γ`, `log Γ`, `ψ`, `ψ′`, the Binet remainder and critical points.
//! * [`branches`] – the branch inverses `g_k`, `G_k`, `e_k` and the sine oracle.
//! * [`pickrep`] – densities, integral representations and Pick parameters.
//! * [`genus2`] – the genus-2 class, Barnes `G`, `Γ₂` and their inverses.
//! * [`output`] – deterministic CSV/JSON number formatting.

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod branches;
pub mod error;
pub mod gamma;
pub mod genus2;
pub mod kernel;
pub mod output;
pub mod pickrep;

pub use branches::{
    boundary_extension, even_inverse, extended_inverse, in_branch_domain, inverse_branch,
    principal_inverse, BranchIndex, BranchInterval, CombDomain, Side,
};
pub use error::{Error, Result};
pub use gamma::{CriticalPoint, GammaConstants};
pub use genus2::{ClassGDerived, ClassGFunction, ClassGMember, LambdaRule, Truncation};
pub use kernel::{
    ComplexValue, EndpointSubstitution, NewtonConfig, QuadratureConfig,
};
pub use pickrep::{DensityTable, Endpoint, GridScheme, PickParameters};
