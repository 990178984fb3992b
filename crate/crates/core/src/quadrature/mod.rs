//! Numerical integration for the three integrand classes the moment
//! computations meet:
//!
//! * smooth integrands on a finite interval: globally adaptive 10/21-point
//!   Gauss-Kronrod ([`integrate_finite`], [`integrate_finite_partitioned`]);
//! * integrable `(x-a)^{-1/2}`, `(b-x)^{-1/2}` endpoint singularities, as at
//!   classical turning points: tanh-sinh ([`integrate_singular_endpoints`]);
//! * exponentially decaying tails on `[a, ∞)`: truncation search followed by
//!   subdivision ([`integrate_semi_infinite`], [`integrate_real_line`]).
//!
//! Non-converged results are returned with `converged == false`; callers
//! decide whether the error estimate is acceptable for their purpose.

mod gauss_kronrod;
mod semi_infinite;
mod tanh_sinh;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use gauss_kronrod::{integrate_finite, integrate_finite_partitioned};
pub use semi_infinite::{
    integrate_real_line, integrate_real_line_with_panels, integrate_semi_infinite, integrate_semi_infinite_with_panels,
    truncation_point,
};
pub use tanh_sinh::{integrate_singular_endpoints, integrate_singular_endpoints_by_node};

/// Integration algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureMethod {
    AdaptiveSubdivision,
    DoubleExponential,
    MappedSemiInfinite,
}

impl QuadratureMethod {
    pub const ALL: [QuadratureMethod; 3] = [
        QuadratureMethod::AdaptiveSubdivision,
        QuadratureMethod::DoubleExponential,
        QuadratureMethod::MappedSemiInfinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuadratureMethod::AdaptiveSubdivision => "adaptive-subdivision",
            QuadratureMethod::DoubleExponential => "double-exponential",
            QuadratureMethod::MappedSemiInfinite => "mapped-semi-infinite",
        }
    }
}

impl fmt::Display for QuadratureMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuadratureMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QuadratureMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown quadrature method '{s}'")))
    }
}

/// Tolerances and budgets shared by all integrators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub method: QuadratureMethod,
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Bisections beyond the initial partition (Gauss-Kronrod), or step
    /// halvings (tanh-sinh, capped at [`MAX_DE_LEVELS`]).
    pub max_subdivisions: usize,
    /// Integrand magnitude below which a semi-infinite tail is dropped.
    pub tail_cutoff: f64,
}

/// Hard cap on tanh-sinh refinement levels.
pub const MAX_DE_LEVELS: usize = 14;

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            method: QuadratureMethod::AdaptiveSubdivision,
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 60,
            tail_cutoff: 1e-16,
        }
    }
}

impl QuadratureSpec {
    pub fn with_method(self, method: QuadratureMethod) -> Self {
        QuadratureSpec { method, ..self }
    }

    pub fn with_tolerances(self, abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec {
            abs_tol,
            rel_tol,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite_nonneg = |v: f64| v.is_finite() && v >= 0.0;
        if !finite_nonneg(self.abs_tol) || !finite_nonneg(self.rel_tol) {
            return Err(Error::Domain("quadrature tolerances must be finite and >= 0".into()));
        }
        if self.abs_tol + self.rel_tol <= 0.0 {
            return Err(Error::Domain("abs_tol + rel_tol must be positive".into()));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        if !(self.tail_cutoff > 0.0) {
            return Err(Error::Domain("tail_cutoff must be positive".into()));
        }
        Ok(())
    }

    /// The error target for an integral of magnitude `value`.
    pub fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Outcome of an integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl IntegralResult {
    /// The value, or a [`Error::Quadrature`] if the estimate exceeds `tolerance`.
    pub fn require(&self, what: &'static str, tolerance: f64) -> Result<f64> {
        if self.error_estimate <= tolerance {
            Ok(self.value)
        } else {
            Err(Error::Quadrature {
                what,
                estimate: self.error_estimate,
                tolerance,
            })
        }
    }
}

/// An abscissa together with its exact distances to the interval ends.
///
/// Integrands that diverge at an endpoint should be written in terms of
/// `from_lower`/`from_upper`: near `b = 1` the abscissa itself cannot
/// resolve distances below one ulp, the distances can.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub from_lower: f64,
    pub from_upper: f64,
}

/// Integration domain for the method-dispatching [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite(f64, f64),
    SemiInfinite(f64),
}

/// Integrates with the algorithm named by `spec.method`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, domain: Domain, spec: &QuadratureSpec) -> Result<IntegralResult> {
    match (spec.method, domain) {
        (QuadratureMethod::AdaptiveSubdivision, Domain::Finite(a, b)) => integrate_finite(f, a, b, spec),
        (QuadratureMethod::DoubleExponential, Domain::Finite(a, b)) => {
            integrate_singular_endpoints(f, a, b, spec)
        }
        (_, Domain::SemiInfinite(a)) => integrate_semi_infinite(f, a, spec),
        (QuadratureMethod::MappedSemiInfinite, Domain::Finite(..)) => Err(Error::Domain(
            "mapped-semi-infinite integrates [a, ∞) only".into(),
        )),
    }
}

pub(crate) fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("interval ends must be finite, got [{a}, {b}]")));
    }
    if !(a < b) {
        return Err(Error::Domain(format!("interval needs a < b, got [{a}, {b}]")));
    }
    Ok(())
}
