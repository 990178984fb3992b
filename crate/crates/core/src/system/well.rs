use std::f64::consts::PI;

use serde::Serialize;

use super::{BoundSystem, LevelData, StateIntegrals};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_finite_partitioned, Node, QuadratureSpec};
use crate::quantum::EigenLevel;

/// Infinite square well on `[-L/2, L/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InfiniteWell {
    pub mass: f64,
    pub width: f64,
    pub hbar: f64,
}

impl InfiniteWell {
    fn half_width(&self) -> f64 {
        0.5 * self.width
    }

    fn inside(&self, x: f64) -> bool {
        x.abs() <= self.half_width()
    }

    fn speed(&self, energy: f64) -> f64 {
        (2.0 * energy / self.mass).sqrt()
    }

    /// Stationary state and its first derivative. Odd `n` are cosines (even
    /// parity), even `n` sines.
    fn state(&self, n: u32, x: f64) -> (f64, f64) {
        let k = n as f64 * PI / self.width;
        let amp = (2.0 / self.width).sqrt();
        let (s, c) = (k * x).sin_cos();
        if n % 2 == 1 {
            (amp * c, -amp * k * s)
        } else {
            (amp * s, amp * k * c)
        }
    }
}

impl BoundSystem for InfiniteWell {
    fn name(&self) -> &'static str {
        "well"
    }

    fn mass(&self) -> f64 {
        self.mass
    }

    fn hbar(&self) -> f64 {
        self.hbar
    }

    fn potential(&self, x: f64) -> f64 {
        if self.inside(x) {
            0.0
        } else {
            f64::INFINITY
        }
    }

    fn classical_region(&self, _energy: f64) -> (f64, f64) {
        (-self.half_width(), self.half_width())
    }

    fn scale_length(&self, _energy: f64) -> f64 {
        self.half_width()
    }

    fn kinetic_at_node(&self, energy: f64, _node: &Node) -> f64 {
        energy
    }

    fn kinetic_at(&self, energy: f64, x: f64) -> f64 {
        if self.inside(x) {
            energy
        } else {
            f64::NEG_INFINITY
        }
    }

    fn classical_closed_form(&self) -> [f64; 4] {
        [0.0, 1.0 / 3.0, 0.0, 1.0]
    }

    fn lowest_level(&self) -> u32 {
        1
    }

    fn level_data(&self, n: u32) -> Result<LevelData> {
        if n < 1 {
            return Err(Error::Domain("well levels start at n = 1".into()));
        }
        let k = n as f64 * PI * self.hbar / self.width;
        Ok(LevelData {
            energy: k * k / (2.0 * self.mass),
            turning_point: self.half_width(),
            scaled_energy: None,
            grav_length: None,
            airy_slope: None,
        })
    }

    fn wavefunction(&self, level: &EigenLevel, x: f64) -> f64 {
        if self.inside(x) {
            self.state(level.n, x).0
        } else {
            0.0
        }
    }

    fn state_integrals(&self, level: &EigenLevel, spec: &QuadratureSpec) -> Result<StateIntegrals> {
        let n = level.n;
        let half = self.half_width();
        let k = n as f64 * PI / self.width;
        // One panel per half wave: the nodes sit at -L/2 + jL/n.
        let breaks: Vec<f64> = (0..=n)
            .map(|j| -half + j as f64 * self.width / n as f64)
            .collect();

        let run = |g: &dyn Fn(f64) -> f64| integrate_finite_partitioned(g, &breaks, spec);
        let norm = run(&|x| self.state(n, x).0.powi(2))?;
        let first = run(&|x| x * self.state(n, x).0.powi(2))?;
        let second = run(&|x| x * x * self.state(n, x).0.powi(2))?;
        let raw_p = run(&|x| {
            let (psi, dpsi) = self.state(n, x);
            psi * dpsi
        })?;
        // ψ'' = -k² ψ
        let kinetic = run(&|x| {
            let psi = self.state(n, x).0;
            psi * (-k * k * psi)
        })?;

        Ok(StateIntegrals {
            norm: norm.value,
            mean_x: first.value / half,
            mean_x2: second.value / (half * half),
            raw_momentum: raw_p.value,
            mean_p2: -kinetic.value / (k * k),
            error_estimate: [norm, first, second, raw_p, kinetic]
                .iter()
                .map(|r| r.error_estimate)
                .fold(0.0, f64::max),
        })
    }

    fn quantum_closed_form(&self, level: &EigenLevel) -> [f64; 4] {
        let npi = level.n as f64 * PI;
        [0.0, 1.0 / 3.0 - 2.0 / (npi * npi), 0.0, 1.0]
    }

    fn commutator_bound(&self, level: &EigenLevel) -> f64 {
        let npi = level.n as f64 * PI;
        1.0 / (npi * npi)
    }

    fn scaled_range(&self) -> (f64, f64) {
        (-1.0, 1.0)
    }

    fn period(&self, energy: f64) -> f64 {
        2.0 * self.width / self.speed(energy)
    }

    /// Starts at the centre moving right; reflects elastically at the walls.
    fn phase_point(&self, energy: f64, t: f64) -> (f64, f64) {
        let v = self.speed(energy);
        let l = self.width;
        let travelled = (v * t).rem_euclid(2.0 * l);
        let p = self.mass * v;
        if travelled <= 0.5 * l {
            (travelled, p)
        } else if travelled <= 1.5 * l {
            (l - travelled, -p)
        } else {
            (travelled - 2.0 * l, p)
        }
    }
}
