//! Stationary states and the moments of the scaled operators
//! `X̂ = x̂/A_n`, `P̂ = p̂/sqrt(2m E_n)`.
//!
//! Momentum moments are taken in the position representation with analytic
//! derivatives: Hermite recurrences for the oscillator, `ψ'' = -k²ψ` in the
//! well and `Ai'' = z Ai` for the bouncer.

use serde::Serialize;

use crate::classical::{classical_density, ClassicalEnsemble};
use crate::error::{Error, Result};
use crate::moments::{MomentMethod, Realm, ScaledMoments};
use crate::quadrature::{integrate_semi_infinite, QuadratureSpec};
use crate::specfun::ai_and_prime;
use crate::system::PotentialModel;

/// Accepted magnitude of `∫ψψ'` (the imaginary part `⟨P̂⟩` would have).
pub const RAW_MOMENTUM_LIMIT: f64 = 1e-12;

/// One energy level of a system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenLevel {
    pub model: PotentialModel,
    pub n: u32,
    pub energy: f64,
    /// `A_n`, the classical turning point at `E_n` (half width for the well).
    pub turning_point: f64,
    /// Bouncer only: `E'_n = E_n / (m g l_g) = -a_n`.
    pub scaled_energy: Option<f64>,
    /// Bouncer only: `l_g`.
    pub grav_length: Option<f64>,
    /// Bouncer only: `Ai'(a_n)`.
    pub airy_slope: Option<f64>,
}

/// Level `n` of `model`. Oscillator levels start at 0, the others at 1.
pub fn eigen_level(model: &PotentialModel, n: u32) -> Result<EigenLevel> {
    let sys = model.system();
    if n < sys.lowest_level() {
        return Err(Error::Domain(format!(
            "{} levels start at n = {}, got {n}",
            sys.name(),
            sys.lowest_level()
        )));
    }
    let d = sys.level_data(n)?;
    Ok(EigenLevel {
        model: *model,
        n,
        energy: d.energy,
        turning_point: d.turning_point,
        scaled_energy: d.scaled_energy,
        grav_length: d.grav_length,
        airy_slope: d.airy_slope,
    })
}

/// Normalized real stationary state `ψ_n(x)`; zero outside hard walls.
pub fn wavefunction(level: &EigenLevel, x: f64) -> f64 {
    level.model.system().wavefunction(level, x)
}

/// Scaled moments by quadrature.
///
/// `⟨P̂⟩ = -i·c·∫ψψ'` for real `ψ`, so its real part is zero and the raw
/// integral must vanish (it is a boundary term `½ψ²`); a larger value means
/// a broken integrand and is reported as an error.
pub fn quantum_moments_quadrature(level: &EigenLevel, spec: &QuadratureSpec) -> Result<ScaledMoments> {
    let ints = level.model.system().state_integrals(level, spec)?;
    let limit = RAW_MOMENTUM_LIMIT.max(10.0 * ints.error_estimate);
    if !(ints.raw_momentum.abs() <= limit) {
        return Err(Error::Numeric(format!(
            "∫ψψ' = {:e} for {} n = {}: <P> would not be real",
            ints.raw_momentum,
            level.model.name(),
            level.n
        )));
    }
    for v in [ints.mean_x, ints.mean_x2, ints.mean_p2] {
        if !v.is_finite() {
            return Err(Error::Numeric(format!("non-finite moment for {} n = {}", level.model.name(), level.n)));
        }
    }
    Ok(ScaledMoments::from_raw(
        ints.mean_x,
        ints.mean_x2,
        0.0,
        ints.mean_p2,
        Realm::Quantum,
        MomentMethod::Quadrature,
    ))
}

/// `∫|ψ_n|²` by quadrature, using the same normalization as [`wavefunction`].
pub fn wavefunction_norm(level: &EigenLevel, spec: &QuadratureSpec) -> Result<f64> {
    Ok(level.model.system().state_integrals(level, spec)?.norm)
}

/// `∫ψψ'` by quadrature.
pub fn raw_momentum_integral(level: &EigenLevel, spec: &QuadratureSpec) -> Result<f64> {
    Ok(level.model.system().state_integrals(level, spec)?.raw_momentum)
}

/// Exact moments: `(0, ½, 0, ½)` oscillator, `(0, 1/3 - 2/(nπ)², 0, 1)`
/// well, `(2/3, 8/15, 0, 1/3)` bouncer.
pub fn quantum_moments_closed_form(level: &EigenLevel) -> ScaledMoments {
    let [x, x2, p, p2] = level.model.system().quantum_closed_form(level);
    ScaledMoments::from_raw(x, x2, p, p2, Realm::Quantum, MomentMethod::ClosedForm)
}

/// Robertson lower bound `¼|⟨[X̂, P̂]⟩|²` on the variance product:
/// `1/(4(2n+1)²)`, `1/(nπ)²`, `1/(4E'_n³)`.
pub fn commutator_bound(level: &EigenLevel) -> f64 {
    level.model.system().commutator_bound(level)
}

/// A bouncer eigenstate `ψ_n(z') = N_n Ai(z')` with `N_n` from quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BouncerState {
    pub level: EigenLevel,
    pub normalization: f64,
}

impl BouncerState {
    pub fn new(level: EigenLevel, spec: &QuadratureSpec) -> Result<Self> {
        let e = level
            .scaled_energy
            .ok_or_else(|| Error::Domain(format!("{} levels are not Airy states", level.model.name())))?;
        let r = integrate_semi_infinite(|z| ai_and_prime(z).0.powi(2), -e, spec)?;
        let total = r.require("bouncer normalization", 10.0 * spec.target(r.value))?;
        Ok(BouncerState {
            level,
            normalization: 1.0 / total.sqrt(),
        })
    }

    /// `1/|Ai'(-E'_n)|`, the closed-form value of `N_n`.
    pub fn identity_normalization(&self) -> f64 {
        let e = self.level.scaled_energy.expect("constructed from an Airy level");
        1.0 / ai_and_prime(-e).1.abs()
    }

    /// `ψ_n` in the shifted variable `z' = z/l_g - E'_n`.
    pub fn value_at_shifted(&self, z_shifted: f64) -> f64 {
        let e = self.level.scaled_energy.expect("constructed from an Airy level");
        if z_shifted < -e {
            0.0
        } else {
            self.normalization * ai_and_prime(z_shifted).0
        }
    }
}

/// One row of a density comparison grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityPoint {
    pub x_scaled: f64,
    /// `A_n |ψ_n(A_n X)|²`, the quantum density per unit `X`.
    pub p_qm: f64,
    /// Classical density per unit `X` at energy `E_n`.
    pub p_cl: f64,
    /// The classical value was replaced at a turning-point singularity.
    pub clipped: bool,
}

/// Quantum and classical position densities on a uniform grid over the
/// scaled classical region.
///
/// At a turning point the classical density diverges; it is replaced by the
/// nearest finite grid value (or `+∞` when the grid has none) and flagged.
pub fn density_grid(level: &EigenLevel, points: usize, spec: &QuadratureSpec) -> Result<Vec<DensityPoint>> {
    if points < 2 {
        return Err(Error::Domain(format!("a density grid needs at least 2 points, got {points}")));
    }
    let sys = level.model.system();
    let ens = ClassicalEnsemble::new(level.model, level.energy, spec)?;
    let (lo, hi) = sys.scaled_range();
    let a_qm = level.turning_point;
    let a_cl = ens.turning_point;
    let step = (hi - lo) / (points - 1) as f64;

    let mut grid: Vec<DensityPoint> = (0..points)
        .map(|i| {
            let x_scaled = if i == points - 1 { hi } else { lo + i as f64 * step };
            let psi = wavefunction(level, a_qm * x_scaled);
            let cl = classical_density(&ens, a_cl * x_scaled);
            DensityPoint {
                x_scaled,
                p_qm: a_qm * psi * psi,
                p_cl: a_cl * cl.value,
                clipped: cl.singular,
            }
        })
        .collect();

    let finite: Vec<(usize, f64)> = grid
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.clipped)
        .map(|(i, p)| (i, p.p_cl))
        .collect();
    for i in 0..grid.len() {
        if grid[i].clipped {
            grid[i].p_cl = finite
                .iter()
                .min_by_key(|(j, _)| j.abs_diff(i))
                .map(|&(_, v)| v)
                .unwrap_or(f64::INFINITY);
        }
    }
    Ok(grid)
}
