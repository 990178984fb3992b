//! Time averages over one period of an exact classical orbit.
//!
//! Nothing here touches the ensemble density, so agreement with
//! [`classical_moments_quadrature`](crate::classical::classical_moments_quadrature)
//! is an independent check of the density, its normalization and the scaling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moments::{MomentMethod, Realm, ScaledMoments};
use crate::system::PotentialModel;

/// Samples per parallel work unit. Fixed so the reduction order, and hence
/// every bit of the result, does not depend on the thread count.
const CHUNK: usize = 1 << 14;

/// One periodic orbit at a fixed energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Trajectory {
    pub model: PotentialModel,
    pub energy: f64,
    pub period: f64,
    /// `A` at this energy.
    pub scale: f64,
}

impl Trajectory {
    /// `(x(t), p(t))`.
    pub fn state(&self, t: f64) -> (f64, f64) {
        self.model.system().phase_point(self.energy, t)
    }

    pub fn position(&self, t: f64) -> f64 {
        self.state(t).0
    }

    pub fn momentum(&self, t: f64) -> f64 {
        self.state(t).1
    }

    /// `|p²/2m + V(x) - E| / E` at time `t`.
    pub fn relative_energy_error(&self, t: f64) -> f64 {
        let sys = self.model.system();
        let (x, p) = self.state(t);
        let h = p * p / (2.0 * sys.mass()) + sys.potential(x);
        ((h - self.energy) / self.energy).abs()
    }

    /// `(X(t), P(t))`.
    fn scaled_state(&self, t: f64) -> (f64, f64) {
        let (x, p) = self.state(t);
        let p_scale = (2.0 * self.model.system().mass() * self.energy).sqrt();
        (x / self.scale, p / p_scale)
    }
}

pub fn build_trajectory(model: &PotentialModel, energy: f64) -> Result<Trajectory> {
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::Domain(format!("trajectory energy must be positive, got {energy}")));
    }
    let sys = model.system();
    Ok(Trajectory {
        model: *model,
        energy,
        period: sys.period(energy),
        scale: sys.scale_length(energy),
    })
}

/// Where in one period the sample times fall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SampleRule {
    /// `t_k = k T / N`.
    UniformTime,
    /// `t_k = (k + ½) T / N`.
    Midpoint,
    /// Independent uniform times from a seeded stream.
    Random { seed: u64 },
}

/// Time-averaged scaled moments over `samples` times in one period.
pub fn trajectory_moments(traj: &Trajectory, samples: usize, rule: SampleRule) -> Result<ScaledMoments> {
    if samples < 2 {
        return Err(Error::Domain(format!("need at least 2 samples, got {samples}")));
    }
    let dt = traj.period / samples as f64;
    let chunks = samples.div_ceil(CHUNK);

    let partial: Vec<[f64; 4]> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(samples);
            // One independent stream per chunk keeps random mode reproducible
            // under any scheduling.
            let mut rng = match rule {
                SampleRule::Random { seed } => {
                    let mut r = ChaCha8Rng::seed_from_u64(seed);
                    r.set_stream(c as u64);
                    Some(r)
                }
                _ => None,
            };
            let mut acc = [0.0; 4];
            for k in start..end {
                let t = match (rule, rng.as_mut()) {
                    (SampleRule::UniformTime, _) => k as f64 * dt,
                    (SampleRule::Midpoint, _) => (k as f64 + 0.5) * dt,
                    (SampleRule::Random { .. }, Some(r)) => r.gen::<f64>() * traj.period,
                    (SampleRule::Random { .. }, None) => unreachable!(),
                };
                let (x, p) = traj.scaled_state(t);
                acc[0] += x;
                acc[1] += x * x;
                acc[2] += p;
                acc[3] += p * p;
            }
            acc
        })
        .collect();

    let mut total = [0.0; 4];
    for acc in &partial {
        for (t, a) in total.iter_mut().zip(acc) {
            *t += a;
        }
    }
    let n = samples as f64;
    Ok(ScaledMoments::from_raw(
        total[0] / n,
        total[1] / n,
        total[2] / n,
        total[3] / n,
        Realm::Classical,
        MomentMethod::Trajectory,
    ))
}
