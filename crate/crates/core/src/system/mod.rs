//! The three bound systems behind one strategy trait, and the registry that
//! selects them by name.
//!
//! Everything system-specific lives in a [`BoundSystem`] implementation:
//! the potential and its classical region, the eigen spectrum, wavefunctions
//! and their moment integrals, commutator bounds and exact orbits. The
//! generic operations in [`classical`](crate::classical),
//! [`quantum`](crate::quantum) and [`trajectory`](crate::trajectory) only
//! talk to the trait.

mod bouncer;
mod harmonic;
mod well;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub use bouncer::BouncingBall;
pub use harmonic::HarmonicOscillator;
pub use well::InfiniteWell;

use crate::error::{Error, Result};
use crate::quadrature::{Node, QuadratureSpec};
use crate::quantum::EigenLevel;

/// Raw integrals of a stationary state, already divided by the scale
/// factors of `X̂` and `P̂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateIntegrals {
    /// `∫|ψ|²`, which must be 1.
    pub norm: f64,
    pub mean_x: f64,
    pub mean_x2: f64,
    /// `∫ψψ'`, the would-be imaginary part of `⟨P̂⟩` before scaling.
    pub raw_momentum: f64,
    pub mean_p2: f64,
    /// Largest quadrature error estimate among the integrals.
    pub error_estimate: f64,
}

/// Quantities fixed by the quantum number alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelData {
    pub energy: f64,
    pub turning_point: f64,
    pub scaled_energy: Option<f64>,
    pub grav_length: Option<f64>,
    pub airy_slope: Option<f64>,
}

/// A one-dimensional bound system, classical and quantum.
pub trait BoundSystem: fmt::Debug + Send + Sync {
    /// Registry name.
    fn name(&self) -> &'static str;
    fn mass(&self) -> f64;
    fn hbar(&self) -> f64;

    /// `V(x)`; `+∞` behind hard walls.
    fn potential(&self, x: f64) -> f64;

    /// `[lower, upper]` of classically allowed motion at `energy`.
    fn classical_region(&self, energy: f64) -> (f64, f64);

    /// The length `A` that scales position: the turning point (oscillator,
    /// bouncer) or the half width (well).
    fn scale_length(&self, energy: f64) -> f64;

    /// `E - V(x)` at a quadrature node of the classical region, computed from
    /// the node's endpoint distances.
    fn kinetic_at_node(&self, energy: f64, node: &Node) -> f64;

    /// `E - V(x)` at an arbitrary point; negative (or `-∞`) when forbidden.
    fn kinetic_at(&self, energy: f64, x: f64) -> f64;

    /// Exact classical `(⟨X⟩, ⟨X²⟩, ⟨P⟩, ⟨P²⟩)`.
    fn classical_closed_form(&self) -> [f64; 4];

    /// Smallest valid quantum number.
    fn lowest_level(&self) -> u32;

    fn level_data(&self, n: u32) -> Result<LevelData>;

    /// Normalized stationary state in physical position.
    fn wavefunction(&self, level: &EigenLevel, x: f64) -> f64;

    fn state_integrals(&self, level: &EigenLevel, spec: &QuadratureSpec) -> Result<StateIntegrals>;

    /// Exact quantum `(⟨X̂⟩, ⟨X̂²⟩, ⟨P̂⟩, ⟨P̂²⟩)`.
    fn quantum_closed_form(&self, level: &EigenLevel) -> [f64; 4];

    /// `¼|⟨[X̂, P̂]⟩|²`.
    fn commutator_bound(&self, level: &EigenLevel) -> f64;

    /// Scaled classical region: `[-1, 1]` or `[0, 1]`.
    fn scaled_range(&self) -> (f64, f64);

    /// Period of the classical orbit at `energy`.
    fn period(&self, energy: f64) -> f64;

    /// `(x(t), p(t))` on the exact orbit.
    fn phase_point(&self, energy: f64, t: f64) -> (f64, f64);
}

/// One of the three systems with its physical parameters and `ħ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "system", rename_all = "kebab-case")]
pub enum PotentialModel {
    HarmonicOscillator(HarmonicOscillator),
    InfiniteWell(InfiniteWell),
    BouncingBall(BouncingBall),
}

impl PotentialModel {
    pub fn harmonic_oscillator(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        check_positive(&[("mass", mass), ("omega", omega), ("hbar", hbar)])?;
        Ok(PotentialModel::HarmonicOscillator(HarmonicOscillator { mass, omega, hbar }))
    }

    pub fn infinite_well(mass: f64, width: f64, hbar: f64) -> Result<Self> {
        check_positive(&[("mass", mass), ("width", width), ("hbar", hbar)])?;
        Ok(PotentialModel::InfiniteWell(InfiniteWell { mass, width, hbar }))
    }

    pub fn bouncing_ball(mass: f64, gravity: f64, hbar: f64) -> Result<Self> {
        check_positive(&[("mass", mass), ("gravity", gravity), ("hbar", hbar)])?;
        Ok(PotentialModel::BouncingBall(BouncingBall { mass, gravity, hbar }))
    }

    pub fn system(&self) -> &dyn BoundSystem {
        match self {
            PotentialModel::HarmonicOscillator(s) => s,
            PotentialModel::InfiniteWell(s) => s,
            PotentialModel::BouncingBall(s) => s,
        }
    }

    pub fn name(&self) -> &'static str {
        self.system().name()
    }
}

fn check_positive(params: &[(&str, f64)]) -> Result<()> {
    for &(name, v) in params {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::Domain(format!("{name} must be finite and positive, got {v}")));
        }
    }
    Ok(())
}

/// Named physical parameters for [`SystemEntry::build`]; missing keys
/// default to 1.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SystemParams(BTreeMap<String, f64>);

impl SystemParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, value: f64) -> Self {
        self.0.insert(key.to_string(), value);
        self
    }

    pub fn get(&self, key: &str) -> f64 {
        self.0.get(key).copied().unwrap_or(1.0)
    }

    fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

/// A registered system.
pub struct SystemEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    /// Parameter names accepted by `build` besides `hbar`.
    pub parameters: &'static [&'static str],
    constructor: fn(&SystemParams) -> Result<PotentialModel>,
}

impl SystemEntry {
    pub fn build(&self, params: &SystemParams) -> Result<PotentialModel> {
        if let Some(bad) = params
            .keys()
            .find(|k| *k != "hbar" && !self.parameters.contains(k))
        {
            return Err(Error::Domain(format!("system '{}' has no parameter '{bad}'", self.name)));
        }
        (self.constructor)(params)
    }

    /// The model with every parameter set to 1.
    pub fn default_model(&self) -> PotentialModel {
        self.build(&SystemParams::new())
            .expect("unit parameters are always valid")
    }

    fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.contains(&name)
    }
}

impl fmt::Debug for SystemEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SystemEntry").field("name", &self.name).finish()
    }
}

static REGISTRY: [SystemEntry; 3] = [
    SystemEntry {
        name: "ho",
        aliases: &["harmonic-oscillator", "oscillator"],
        summary: "harmonic oscillator V = m ω² x² / 2",
        parameters: &["mass", "omega"],
        constructor: |p| PotentialModel::harmonic_oscillator(p.get("mass"), p.get("omega"), p.get("hbar")),
    },
    SystemEntry {
        name: "well",
        aliases: &["infinite-well", "box"],
        summary: "infinite square well of width L centred on 0",
        parameters: &["mass", "width"],
        constructor: |p| PotentialModel::infinite_well(p.get("mass"), p.get("width"), p.get("hbar")),
    },
    SystemEntry {
        name: "bouncer",
        aliases: &["bouncing-ball", "bb"],
        summary: "particle above a hard floor in uniform gravity, V = m g z",
        parameters: &["mass", "gravity"],
        constructor: |p| PotentialModel::bouncing_ball(p.get("mass"), p.get("gravity"), p.get("hbar")),
    },
];

/// All registered systems, in display order.
pub fn registry() -> &'static [SystemEntry] {
    &REGISTRY
}

/// Looks a system up by name or alias.
pub fn lookup(name: &str) -> Option<&'static SystemEntry> {
    REGISTRY.iter().find(|e| e.matches(name))
}
