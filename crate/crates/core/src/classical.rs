//! Fixed-energy (microcanonical) classical ensembles.
//!
//! Integrating `δ(p²/2m + V(x) - E)` over momentum leaves the position
//! density `P(x) = 𝒩 / sqrt(E - V(x))` on the classical region, with the two
//! momentum branches `p = ±sqrt(2m(E - V))` equally weighted. Any phase-space
//! average reduces to `½ ∫ P(x) [F(x, -p) + F(x, p)] dx`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moments::{MomentMethod, Realm, ScaledMoments};
use crate::quadrature::{integrate_singular_endpoints_by_node, IntegralResult, Node, QuadratureSpec};
use crate::system::PotentialModel;

/// Moment integrals are accepted when their estimate is within this factor
/// of the quadrature target.
const ACCEPT_FACTOR: f64 = 10.0;

/// An ensemble of particles of one energy in one potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalEnsemble {
    pub model: PotentialModel,
    pub energy: f64,
    /// `A`: turning point (oscillator, bouncer) or half width (well).
    pub turning_point: f64,
    pub lower: f64,
    pub upper: f64,
    /// `𝒩`, fixed numerically by `∫ P = 1`.
    pub normalization: f64,
}

impl ClassicalEnsemble {
    pub fn new(model: PotentialModel, energy: f64, spec: &QuadratureSpec) -> Result<Self> {
        if !(energy.is_finite() && energy > 0.0) {
            return Err(Error::Domain(format!("ensemble energy must be positive, got {energy}")));
        }
        let sys = model.system();
        let (lower, upper) = sys.classical_region(energy);
        let inverse_speed = integrate_singular_endpoints_by_node(
            |node| 1.0 / sys.kinetic_at_node(energy, &node).sqrt(),
            lower,
            upper,
            spec,
        )?;
        let total = accept(inverse_speed, "classical normalization", spec)?;
        Ok(ClassicalEnsemble {
            model,
            energy,
            turning_point: sys.scale_length(energy),
            lower,
            upper,
            normalization: 1.0 / total,
        })
    }

    /// Energy 1 in the model's units; the scaled moments do not depend on it.
    pub fn with_unit_energy(model: PotentialModel, spec: &QuadratureSpec) -> Result<Self> {
        Self::new(model, 1.0, spec)
    }
}

fn accept(result: IntegralResult, what: &'static str, spec: &QuadratureSpec) -> Result<f64> {
    result.require(what, ACCEPT_FACTOR * spec.target(result.value))
}

/// Pointwise classical density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointDensity {
    pub value: f64,
    /// Set at a turning point, where the density is `+∞` but integrable.
    pub singular: bool,
}

/// `P(x) = 𝒩 / sqrt(E - V(x))` inside the classical region, `0` outside.
pub fn classical_density(ens: &ClassicalEnsemble, x: f64) -> PointDensity {
    if !(x >= ens.lower && x <= ens.upper) {
        return PointDensity {
            value: 0.0,
            singular: false,
        };
    }
    let kinetic = ens.model.system().kinetic_at(ens.energy, x);
    if kinetic <= 0.0 {
        PointDensity {
            value: f64::INFINITY,
            singular: true,
        }
    } else {
        PointDensity {
            value: ens.normalization / kinetic.sqrt(),
            singular: false,
        }
    }
}

/// Scaled moments of the ensemble by tanh-sinh quadrature over the classical
/// region, averaging both momentum branches.
pub fn classical_moments_quadrature(ens: &ClassicalEnsemble, spec: &QuadratureSpec) -> Result<ScaledMoments> {
    let sys = ens.model.system();
    let energy = ens.energy;
    let a = ens.turning_point;
    let p_scale = (2.0 * sys.mass() * energy).sqrt();

    let average = |what: &'static str, g: &dyn Fn(&Node, f64, f64) -> f64| -> Result<f64> {
        let r = integrate_singular_endpoints_by_node(
            |node| {
                let kinetic = sys.kinetic_at_node(energy, &node);
                let density = ens.normalization / kinetic.sqrt();
                let p = (2.0 * sys.mass() * kinetic).sqrt();
                density * g(&node, p, kinetic)
            },
            ens.lower,
            ens.upper,
            spec,
        )?;
        accept(r, what, spec)
    };

    let mean_x = average("classical <X>", &|n, _, _| n.x / a)?;
    let mean_x2 = average("classical <X^2>", &|n, _, _| (n.x / a).powi(2))?;
    let mean_p = average("classical <P>", &|_, p, _| 0.5 * ((-p) + p) / p_scale)?;
    let mean_p2 = average("classical <P^2>", &|_, _, kinetic| kinetic / energy)?;

    Ok(ScaledMoments::from_raw(
        mean_x,
        mean_x2,
        mean_p,
        mean_p2,
        Realm::Classical,
        MomentMethod::Quadrature,
    ))
}

/// Exact classical moments; they do not depend on the energy or the
/// physical parameters.
pub fn classical_moments_closed_form(model: &PotentialModel) -> ScaledMoments {
    let [x, x2, p, p2] = model.system().classical_closed_form();
    ScaledMoments::from_raw(x, x2, p, p2, Realm::Classical, MomentMethod::ClosedForm)
}
