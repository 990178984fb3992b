use super::{integrate_finite_partitioned, IntegralResult, QuadratureSpec};
use crate::error::{Error, Result};

const FIRST_OFFSET: f64 = 10.0;
const OFFSET_CEILING: f64 = 1e4;
/// Equal panels laid over `[a, T]` before adaptive bisection starts.
const INITIAL_PANELS: usize = 16;

/// Finds the truncation point `T > a` for a rapidly decaying integrand.
///
/// Offsets `10, 20, 40, …` from `a` are tried until `|f|` is below
/// `tail_cutoff` at `T` and at two nearby probes, and the tail bound
/// `max|f|·(T - a)` is below `abs_tol / 10`.
pub fn truncation_point<F: Fn(f64) -> f64>(f: &F, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    let mut offset = FIRST_OFFSET;
    while offset <= OFFSET_CEILING {
        let t = a + offset;
        // Probing a few points guards against landing on a node of f.
        let probe = [t, t - 0.013 * offset, t - 0.031 * offset]
            .iter()
            .map(|&x| f(x).abs())
            .fold(0.0_f64, f64::max);
        if probe.is_nan() {
            return Err(Error::Numeric(format!("integrand is NaN near x = {t}")));
        }
        if probe < spec.tail_cutoff && probe * offset < spec.abs_tol / 10.0 {
            return Ok(t);
        }
        offset *= 2.0;
    }
    Err(Error::Numeric(format!(
        "integrand has not decayed below {:e} within {OFFSET_CEILING} of x = {a}",
        spec.tail_cutoff
    )))
}

/// `∫_a^∞ f` for integrands that decay faster than any power.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, a: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    integrate_semi_infinite_with_panels(f, a, INITIAL_PANELS, spec)
}

/// As [`integrate_semi_infinite`] with at least `panels` equal initial panels,
/// for integrands with many oscillations before they decay.
pub fn integrate_semi_infinite_with_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    panels: usize,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    spec.validate()?;
    if !a.is_finite() {
        return Err(Error::Domain(format!("lower limit must be finite, got {a}")));
    }
    let t = truncation_point(&f, a, spec)?;
    let panels = panels.max(INITIAL_PANELS);
    let width = (t - a) / panels as f64;
    let mut breaks: Vec<f64> = (0..panels).map(|i| a + i as f64 * width).collect();
    breaks.push(t);
    integrate_finite_partitioned(f, &breaks, spec)
}

/// `∫_{-∞}^{∞} f`, folded onto `[0, ∞)` as `f(y) + f(-y)`.
///
/// Odd integrands therefore cancel sample by sample.
pub fn integrate_real_line<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<IntegralResult> {
    integrate_real_line_with_panels(f, INITIAL_PANELS, spec)
}

/// [`integrate_real_line`] with at least `panels` initial panels on the half line.
pub fn integrate_real_line_with_panels<F: Fn(f64) -> f64>(
    f: F,
    panels: usize,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    integrate_semi_infinite_with_panels(|y| f(y) + f(-y), 0.0, panels, spec)
}
