//! Moments of scaled position and momentum for fixed-energy classical
//! ensembles and quantum stationary states of three one-dimensional bound
//! systems: the harmonic oscillator, the infinite square well and the
//! quantum bouncer (a particle above a hard floor in uniform gravity).
//!
//! With `X = x/A` and `P = p/sqrt(2mE)`, where `A` is the classical turning
//! point at the energy of the state, the first and second moments of both
//! realms coincide, so the variance products agree: `1/4` for the
//! oscillator, `1/3` for the well (quantum side in the large-`n` limit) and
//! `4/135` for the bouncer.
//!
//! Module map:
//!
//! * [`specfun`]: Hermite polynomials, `ln Γ`, Airy `Ai`/`Ai'` and the zeros of `Ai`.
//! * [`quadrature`]: adaptive Gauss-Kronrod, tanh-sinh and semi-infinite integration.
//! * [`system`]: the [`BoundSystem`](system::BoundSystem) strategy trait, its three
//!   implementations and the by-name registry.
//! * [`classical`]: microcanonical position density and ensemble moments.
//! * [`quantum`]: eigen levels, wavefunctions, moments, commutator bounds, density grids.
//! * [`trajectory`]: time averages over exact single-particle orbits.

pub mod classical;
pub mod error;
pub mod moments;
pub mod quadrature;
pub mod quantum;
pub mod specfun;
pub mod system;
pub mod trajectory;

pub use error::{Error, Result};
pub use moments::{MomentMethod, Realm, ScaledMoments};
pub use quadrature::{IntegralResult, QuadratureMethod, QuadratureSpec};
pub use system::{BoundSystem, PotentialModel};
