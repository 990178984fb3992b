use serde::Serialize;

use super::{BoundSystem, LevelData, StateIntegrals};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, Node, QuadratureSpec};
use crate::quantum::EigenLevel;
use crate::specfun::{ai_and_prime, airy_zero};

/// Particle above a hard floor at `z = 0` in uniform gravity `g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BouncingBall {
    pub mass: f64,
    pub gravity: f64,
    pub hbar: f64,
}

impl BouncingBall {
    /// `l_g = (ħ² / (2 m² g))^{1/3}`.
    pub fn gravitational_length(&self) -> f64 {
        (self.hbar * self.hbar / (2.0 * self.mass * self.mass * self.gravity)).cbrt()
    }

    fn weight(&self) -> f64 {
        self.mass * self.gravity
    }

    fn launch_speed(&self, energy: f64) -> f64 {
        (2.0 * energy / self.mass).sqrt()
    }

    fn scaled(level: &EigenLevel) -> (f64, f64) {
        let e = level
            .scaled_energy
            .expect("bouncer levels always carry a scaled energy");
        let slope = level.airy_slope.expect("bouncer levels always carry Ai'(a_n)");
        (e, slope)
    }
}

impl BoundSystem for BouncingBall {
    fn name(&self) -> &'static str {
        "bouncer"
    }

    fn mass(&self) -> f64 {
        self.mass
    }

    fn hbar(&self) -> f64 {
        self.hbar
    }

    fn potential(&self, z: f64) -> f64 {
        if z < 0.0 {
            f64::INFINITY
        } else {
            self.weight() * z
        }
    }

    fn classical_region(&self, energy: f64) -> (f64, f64) {
        (0.0, self.scale_length(energy))
    }

    fn scale_length(&self, energy: f64) -> f64 {
        energy / self.weight()
    }

    fn kinetic_at_node(&self, _energy: f64, node: &Node) -> f64 {
        // E - m g z = m g (A - z)
        self.weight() * node.from_upper
    }

    fn kinetic_at(&self, energy: f64, z: f64) -> f64 {
        if z < 0.0 {
            f64::NEG_INFINITY
        } else {
            self.weight() * (self.scale_length(energy) - z)
        }
    }

    fn classical_closed_form(&self) -> [f64; 4] {
        [2.0 / 3.0, 8.0 / 15.0, 0.0, 1.0 / 3.0]
    }

    fn lowest_level(&self) -> u32 {
        1
    }

    fn level_data(&self, n: u32) -> Result<LevelData> {
        if n < 1 {
            return Err(Error::Domain("bouncer levels start at n = 1".into()));
        }
        let zero = airy_zero(n)?;
        let lg = self.gravitational_length();
        let scaled = zero.scaled_energy;
        Ok(LevelData {
            energy: self.weight() * lg * scaled,
            turning_point: lg * scaled,
            scaled_energy: Some(scaled),
            grav_length: Some(lg),
            airy_slope: Some(zero.ai_prime),
        })
    }

    /// `ψ(z) = Ai(z/l_g - E'_n) / (|Ai'(-E'_n)| √l_g)`; zero on and below the floor.
    fn wavefunction(&self, level: &EigenLevel, z: f64) -> f64 {
        if z <= 0.0 {
            return 0.0;
        }
        let (e, slope) = Self::scaled(level);
        let lg = self.gravitational_length();
        let (ai, _) = ai_and_prime(z / lg - e);
        ai / (slope.abs() * lg.sqrt())
    }

    fn state_integrals(&self, level: &EigenLevel, spec: &QuadratureSpec) -> Result<StateIntegrals> {
        // Everything in z' = z/l_g - E'_n on [-E'_n, ∞): Ẑ = (z' + E'_n)/E'_n,
        // P̂ = -i ∂_{z'} / √E'_n and Ai'' = z' Ai.
        let (e, slope) = Self::scaled(level);
        let start = -e;
        let ai2 = |zp: f64| ai_and_prime(zp).0.powi(2);

        let norm_int = integrate_semi_infinite(ai2, start, spec)?;
        let first = integrate_semi_infinite(|zp| ai2(zp) * (zp - start), start, spec)?;
        let second = integrate_semi_infinite(|zp| ai2(zp) * (zp - start).powi(2), start, spec)?;
        let raw_p = integrate_semi_infinite(
            |zp| {
                let (ai, aip) = ai_and_prime(zp);
                ai * aip
            },
            start,
            spec,
        )?;
        let kinetic = integrate_semi_infinite(|zp| zp * ai2(zp), start, spec)?;

        let n2 = 1.0 / norm_int.value;
        Ok(StateIntegrals {
            // ∫|ψ|² for ψ normalized by 1/|Ai'(a_n)|, as in `wavefunction`.
            norm: norm_int.value / (slope * slope),
            mean_x: n2 * first.value / e,
            mean_x2: n2 * second.value / (e * e),
            raw_momentum: n2 * raw_p.value,
            mean_p2: -n2 * kinetic.value / e,
            error_estimate: [norm_int, first, second, raw_p, kinetic]
                .iter()
                .map(|r| r.error_estimate)
                .fold(0.0, f64::max),
        })
    }

    fn quantum_closed_form(&self, _level: &EigenLevel) -> [f64; 4] {
        [2.0 / 3.0, 8.0 / 15.0, 0.0, 1.0 / 3.0]
    }

    fn commutator_bound(&self, level: &EigenLevel) -> f64 {
        let (e, _) = Self::scaled(level);
        1.0 / (4.0 * e * e * e)
    }

    fn scaled_range(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    fn period(&self, energy: f64) -> f64 {
        2.0 * self.launch_speed(energy) / self.gravity
    }

    /// Leaves the floor at `t = 0` with the full launch speed.
    fn phase_point(&self, energy: f64, t: f64) -> (f64, f64) {
        let v0 = self.launch_speed(energy);
        let tau = t.rem_euclid(self.period(energy));
        let z = v0 * tau - 0.5 * self.gravity * tau * tau;
        (z.max(0.0), self.mass * (v0 - self.gravity * tau))
    }
}
