use std::f64::consts::PI;

use serde::Serialize;

use super::{BoundSystem, LevelData, StateIntegrals};
use crate::error::Result;
use crate::quadrature::{integrate_real_line_with_panels, Node, QuadratureSpec};
use crate::quantum::EigenLevel;
use crate::specfun::hermite_functions;

/// `V(x) = m ω² x² / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HarmonicOscillator {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl HarmonicOscillator {
    fn stiffness(&self) -> f64 {
        0.5 * self.mass * self.omega * self.omega
    }

    /// `√(mω/ħ)`, the inverse oscillator length.
    fn inverse_length(&self) -> f64 {
        (self.mass * self.omega / self.hbar).sqrt()
    }
}

impl BoundSystem for HarmonicOscillator {
    fn name(&self) -> &'static str {
        "ho"
    }

    fn mass(&self) -> f64 {
        self.mass
    }

    fn hbar(&self) -> f64 {
        self.hbar
    }

    fn potential(&self, x: f64) -> f64 {
        self.stiffness() * x * x
    }

    fn classical_region(&self, energy: f64) -> (f64, f64) {
        let a = self.scale_length(energy);
        (-a, a)
    }

    fn scale_length(&self, energy: f64) -> f64 {
        (energy / self.stiffness()).sqrt()
    }

    fn kinetic_at_node(&self, _energy: f64, node: &Node) -> f64 {
        // E - V = k (A - x)(A + x)
        self.stiffness() * node.from_lower * node.from_upper
    }

    fn kinetic_at(&self, energy: f64, x: f64) -> f64 {
        let a = self.scale_length(energy);
        self.stiffness() * (a - x) * (a + x)
    }

    fn classical_closed_form(&self) -> [f64; 4] {
        [0.0, 0.5, 0.0, 0.5]
    }

    fn lowest_level(&self) -> u32 {
        0
    }

    fn level_data(&self, n: u32) -> Result<LevelData> {
        let level = 2.0 * n as f64 + 1.0;
        Ok(LevelData {
            energy: 0.5 * level * self.hbar * self.omega,
            turning_point: (level * self.hbar / (self.mass * self.omega)).sqrt(),
            scaled_energy: None,
            grav_length: None,
            airy_slope: None,
        })
    }

    fn wavefunction(&self, level: &EigenLevel, x: f64) -> f64 {
        let k = self.inverse_length();
        k.sqrt() * hermite_functions(level.n, k * x).0
    }

    fn state_integrals(&self, level: &EigenLevel, spec: &QuadratureSpec) -> Result<StateIntegrals> {
        // Work in y = x √(mω/ħ); then X̂ = y/√(2n+1) and P̂ = -i d/dy /√(2n+1).
        let n = level.n;
        let scale = 2.0 * n as f64 + 1.0;
        // About one initial panel per node of φ_n on the half line.
        let panels = n as usize + 16;
        let integrate = |f: &dyn Fn(f64) -> f64| integrate_real_line_with_panels(f, panels, spec);

        let density = |y: f64| hermite_functions(n, y).0.powi(2);
        // φ'_k = √(2k) φ_{k-1} - y φ_k, applied twice for φ''_n.
        let derivatives = |y: f64| {
            let (p0, p1, p2) = hermite_functions(n, y);
            let a = (2.0 * n as f64).sqrt();
            let b = (2.0 * n.saturating_sub(1) as f64).sqrt();
            let d0 = a * p1 - y * p0;
            let d1 = b * p2 - y * p1;
            (p0, d0, a * d1 - p0 - y * d0)
        };

        let norm = integrate(&density)?;
        let first = integrate(&|y| y * density(y))?;
        let second = integrate(&|y| y * y * density(y))?;
        let raw_p = integrate(&|y| {
            let (phi, dphi, _) = derivatives(y);
            phi * dphi
        })?;
        let kinetic = integrate(&|y| {
            let (phi, _, d2phi) = derivatives(y);
            phi * d2phi
        })?;

        Ok(StateIntegrals {
            norm: norm.value,
            mean_x: first.value / scale.sqrt(),
            mean_x2: second.value / scale,
            raw_momentum: raw_p.value,
            mean_p2: -kinetic.value / scale,
            error_estimate: [norm, first, second, raw_p, kinetic]
                .iter()
                .map(|r| r.error_estimate)
                .fold(0.0, f64::max),
        })
    }

    fn quantum_closed_form(&self, _level: &EigenLevel) -> [f64; 4] {
        [0.0, 0.5, 0.0, 0.5]
    }

    fn commutator_bound(&self, level: &EigenLevel) -> f64 {
        let s = 2.0 * level.n as f64 + 1.0;
        1.0 / (4.0 * s * s)
    }

    fn scaled_range(&self) -> (f64, f64) {
        (-1.0, 1.0)
    }

    fn period(&self, _energy: f64) -> f64 {
        2.0 * PI / self.omega
    }

    fn phase_point(&self, energy: f64, t: f64) -> (f64, f64) {
        let a = self.scale_length(energy);
        let (s, c) = (self.omega * t).sin_cos();
        (a * s, self.mass * self.omega * a * c)
    }
}
