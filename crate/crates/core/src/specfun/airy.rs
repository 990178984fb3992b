//! Airy function `Ai` and its derivative on the real line, plus the zeros of `Ai`.
//!
//! Two regimes:
//!
//! * `|z| <= SERIES_LIMIT`: the Maclaurin series `Ai = c1 f(z) - c2 g(z)`.
//!   For positive `z` the two series grow like `e^{ζ}` while `Ai` decays like
//!   `e^{-ζ}`, so the subtraction loses roughly `2ζ/ln 10` digits. The sums are
//!   carried in double-double arithmetic, which leaves more than 16 digits
//!   after the cancellation across the whole regime.
//! * `|z| > SERIES_LIMIT`: the Poincaré asymptotic expansions in
//!   `ζ = (2/3)|z|^{3/2}`, summed up to the smallest term. Their optimal
//!   truncation error is about `e^{-2ζ}`, below `1e-16` once `|z| >= 9`.
//!
//! The oscillatory phase `ζ - π/4` is formed and reduced modulo `2π` in
//! double-double so that zeros far out on the negative axis keep their
//! absolute accuracy.

#![allow(clippy::excessive_precision)]

use serde::Serialize;

use super::dd::Dd;
use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 9.0;

/// `Ai(0) = 3^{-2/3} / Γ(2/3)` as a double-double.
const AI_0: Dd = Dd::new(0.3550280538878172, 2.05233632436212e-17);
/// `-Ai'(0) = 3^{-1/3} / Γ(1/3)` as a double-double.
const MINUS_AI_PRIME_0: Dd = Dd::new(0.2588194037928068, -2.522243111610832e-17);
const TWO_PI: Dd = Dd::new(6.283185307179586, 2.4492935982947064e-16);
const QUARTER_PI: Dd = Dd::new(0.7853981633974483, 3.061616997868383e-17);

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_286_9;

/// Which evaluation regime produced an [`AiryValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AiryBranch {
    PowerSeries,
    NegativeAsymptotic,
    PositiveAsymptotic,
}

/// `Ai(z)` and `Ai'(z)` at a real argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AiryValue {
    pub z: f64,
    pub ai: f64,
    pub ai_prime: f64,
    pub branch: AiryBranch,
}

/// The `n`-th zero `a_n < 0` of `Ai`. The bouncer's scaled energy is `-a_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AiryZero {
    pub index: u32,
    pub value: f64,
    pub scaled_energy: f64,
    /// `Ai'(a_n)`, from the final Newton evaluation.
    pub ai_prime: f64,
}

/// Evaluates `Ai(z)` and `Ai'(z)`.
///
/// For large positive `z` where `Ai` underflows the value is `0` with
/// [`AiryBranch::PositiveAsymptotic`].
pub fn airy_ai(z: f64) -> Result<AiryValue> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("Airy argument must be finite, got {z}")));
    }
    let (ai, ai_prime, branch) = if z.abs() <= SERIES_LIMIT {
        let (ai, aip) = maclaurin(z);
        (ai, aip, AiryBranch::PowerSeries)
    } else if z > 0.0 {
        let (ai, aip) = asymptotic_positive(z);
        (ai, aip, AiryBranch::PositiveAsymptotic)
    } else {
        let (ai, aip) = asymptotic_negative(-z);
        (ai, aip, AiryBranch::NegativeAsymptotic)
    };
    Ok(AiryValue {
        z,
        ai,
        ai_prime,
        branch,
    })
}

/// Infallible evaluation for callers that already guarantee a finite argument.
pub(crate) fn ai_and_prime(z: f64) -> (f64, f64) {
    debug_assert!(z.is_finite());
    if z.abs() <= SERIES_LIMIT {
        maclaurin(z)
    } else if z > 0.0 {
        asymptotic_positive(z)
    } else {
        asymptotic_negative(-z)
    }
}

fn maclaurin(z: f64) -> (f64, f64) {
    let zd = Dd::from_f64(z);
    let z3 = zd * zd * zd;

    // f = Σ 1·4·7…(3k-2) z^{3k}/(3k)!,   g = Σ 2·5·8…(3k-1) z^{3k+1}/(3k+1)!
    let mut tf = Dd::from_f64(1.0);
    let mut tg = zd;
    // f' and g' term by term: f' starts at z²/2, g' at 1.
    let mut tfp = (zd * zd).div_f64(2.0);
    let mut tgp = Dd::from_f64(1.0);

    let mut f = tf;
    let mut g = tg;
    let mut fp = tfp;
    let mut gp = tgp;

    let mut k = 0.0_f64;
    loop {
        tf = (tf * z3).div_f64((3.0 * k + 2.0) * (3.0 * k + 3.0));
        tg = (tg * z3).div_f64((3.0 * k + 3.0) * (3.0 * k + 4.0));
        tfp = (tfp * z3).div_f64((3.0 * k + 3.0) * (3.0 * k + 5.0));
        tgp = (tgp * z3).div_f64((3.0 * k + 1.0) * (3.0 * k + 3.0));
        f = f + tf;
        g = g + tg;
        fp = fp + tfp;
        gp = gp + tgp;
        k += 1.0;

        let biggest = tf.hi.abs().max(tg.hi.abs()).max(tfp.hi.abs()).max(tgp.hi.abs());
        let scale = f.hi.abs().max(g.hi.abs()).max(fp.hi.abs()).max(gp.hi.abs()).max(1.0);
        if biggest < 1e-34 * scale || k > 200.0 {
            break;
        }
    }

    let ai = AI_0 * f - MINUS_AI_PRIME_0 * g;
    let aip = AI_0 * fp - MINUS_AI_PRIME_0 * gp;
    (ai.to_f64(), aip.to_f64())
}

/// Coefficients `u_k` and `v_k` of the Airy asymptotic expansions.
fn uv_coefficients(count: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = Vec::with_capacity(count);
    let mut v = Vec::with_capacity(count);
    u.push(1.0);
    v.push(1.0);
    for k in 1..count {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

const ASYMPTOTIC_TERMS: usize = 80;

/// Sums `Σ sign^k c[k] w^k` for the index set `first, first+step, …`, stopping
/// at the smallest term (at least 8 terms).
fn truncated_sum(c: &[f64], first: usize, step: usize, inv_zeta: f64, alternate: bool) -> f64 {
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut sign = 1.0;
    let mut power = inv_zeta.powi(first as i32);
    let stride = inv_zeta.powi(step as i32);
    for (taken, k) in (first..c.len()).step_by(step).enumerate() {
        let term = c[k] * power;
        if taken >= 8 && term.abs() >= prev {
            break;
        }
        sum += sign * term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        prev = term.abs();
        power *= stride;
        if alternate {
            sign = -sign;
        }
    }
    sum
}

fn asymptotic_positive(z: f64) -> (f64, f64) {
    let sz = z.sqrt();
    let zeta = 2.0 / 3.0 * z * sz;
    let decay = (-zeta).exp();
    if decay == 0.0 {
        return (0.0, 0.0);
    }
    let (u, v) = uv_coefficients(ASYMPTOTIC_TERMS);
    let inv = 1.0 / zeta;
    let su = truncated_sum(&u, 0, 1, inv, true);
    let sv = truncated_sum(&v, 0, 1, inv, true);
    let quarter = sz.sqrt();
    let ai = decay * FRAC_1_SQRT_PI / (2.0 * quarter) * su;
    let aip = -decay * FRAC_1_SQRT_PI * quarter / 2.0 * sv;
    (ai, aip)
}

/// `Ai(-x)` and `Ai'(-x)` for large positive `x`.
fn asymptotic_negative(x: f64) -> (f64, f64) {
    let sx = Dd::sqrt_f64(x);
    let zeta_dd = (sx.mul_f64(x)).mul_f64(2.0).div_f64(3.0);
    let phase = reduce_mod_two_pi(zeta_dd - QUARTER_PI);
    let zeta = zeta_dd.to_f64();
    let (sin, cos) = phase.sin_cos();

    let (u, v) = uv_coefficients(ASYMPTOTIC_TERMS);
    let inv = 1.0 / zeta;
    let u_even = truncated_sum(&u, 0, 2, inv, true);
    let u_odd = truncated_sum(&u, 1, 2, inv, true);
    let v_even = truncated_sum(&v, 0, 2, inv, true);
    let v_odd = truncated_sum(&v, 1, 2, inv, true);

    let quarter = sx.to_f64().sqrt();
    let ai = FRAC_1_SQRT_PI / quarter * (cos * u_even + sin * u_odd);
    let aip = FRAC_1_SQRT_PI * quarter * (sin * v_even - cos * v_odd);
    (ai, aip)
}

fn reduce_mod_two_pi(theta: Dd) -> f64 {
    let turns = (theta.hi / TWO_PI.hi).round();
    (theta - TWO_PI.mul_f64(turns)).to_f64()
}

/// Maximum Newton iterations for [`airy_zero`].
pub const AIRY_ZERO_MAX_ITERATIONS: usize = 50;

/// The `n`-th zero of `Ai` by Newton iteration from the asymptotic seed
/// `a_n ≈ -[3π(4n-1)/8]^{2/3}`.
pub fn airy_zero(n: u32) -> Result<AiryZero> {
    airy_zero_with_limit(n, AIRY_ZERO_MAX_ITERATIONS)
}

/// [`airy_zero`] with an explicit iteration cap.
pub fn airy_zero_with_limit(n: u32, max_iterations: usize) -> Result<AiryZero> {
    if n == 0 {
        return Err(Error::Domain("Airy zeros are indexed from 1".into()));
    }
    let t = 3.0 * std::f64::consts::PI * (4.0 * n as f64 - 1.0) / 8.0;
    let mut z = -t.powf(2.0 / 3.0);
    for _ in 0..max_iterations {
        let (ai, aip) = ai_and_prime(z);
        let step = ai / aip;
        z -= step;
        if ai.abs() < 1e-13 && step.abs() < 1e-13 {
            let (_, slope) = ai_and_prime(z);
            return Ok(AiryZero {
                index: n,
                value: z,
                scaled_energy: -z,
                ai_prime: slope,
            });
        }
    }
    Err(Error::NoConvergence {
        what: "Airy zero Newton iteration",
        iterations: max_iterations,
        last_iterate: z,
    })
}
