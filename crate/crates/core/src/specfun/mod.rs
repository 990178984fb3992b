//! Special functions: physicists' Hermite polynomials, `ln Γ`, and the Airy
//! function `Ai` with its derivative and zeros.

mod airy;
mod dd;

pub use airy::{
    airy_ai, airy_zero, airy_zero_with_limit, AiryBranch, AiryValue, AiryZero,
    AIRY_ZERO_MAX_ITERATIONS,
};
pub(crate) use airy::ai_and_prime;

use crate::error::{Error, Result};

/// Physicists' Hermite polynomial `H_n(y)` by the three-term recurrence
/// `H_{k+1} = 2y H_k - 2k H_{k-1}`.
pub fn hermite(n: u32, y: f64) -> Result<f64> {
    check_finite(y)?;
    Ok(hermite_pair(n, y).0)
}

/// `H'_n(y) = 2n H_{n-1}(y)`, with `H'_0 = 0`.
pub fn hermite_prime(n: u32, y: f64) -> Result<f64> {
    check_finite(y)?;
    Ok(2.0 * n as f64 * hermite_pair(n, y).1)
}

fn check_finite(y: f64) -> Result<()> {
    if y.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("Hermite argument must be finite, got {y}")))
    }
}

/// `(H_n(y), H_{n-1}(y))`, with `H_{-1} = 0`.
fn hermite_pair(n: u32, y: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Hermite functions `(φ_n, φ_{n-1}, φ_{n-2})` at `y`, zero-padded for small
/// `n`, where `φ_n(y) = H_n(y) e^{-y²/2} / √(2ⁿ n! √π)`.
///
/// Uses the normalized recurrence
/// `φ_{k+1} = √(2/(k+1)) y φ_k - √(k/(k+1)) φ_{k-1}`, started from 1 with
/// the Gaussian factor applied at the end through a running log scale, so
/// nothing overflows or underflows early even for `n` in the thousands.
pub fn hermite_functions(n: u32, y: f64) -> (f64, f64, f64) {
    const BIG: f64 = 1e150;
    let mut older = 0.0;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut log_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * y * cur - (kf / (kf + 1.0)).sqrt() * prev;
        older = prev;
        prev = cur;
        cur = next;
        if cur.abs() > BIG {
            cur /= BIG;
            prev /= BIG;
            older /= BIG;
            log_scale += BIG.ln();
        }
    }
    let g = (log_scale - 0.5 * y * y - 0.25 * std::f64::consts::PI.ln()).exp();
    (cur * g, prev * g, older * g)
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for `x > 0` (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma needs a finite positive argument, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the series in its accurate range.
        let pi = std::f64::consts::PI;
        return Ok((pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x)?);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln())
}
