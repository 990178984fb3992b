use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{check_interval, IntegralResult, QuadratureSpec};
use crate::error::{Error, Result};

// 21-point Kronrod abscissae (non-negative half) and weights; the odd
// entries are the 10-point Gauss abscissae.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_949_714,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let pair = if x == 0.0 {
            sample(f, center)?
        } else {
            let dx = half * x;
            sample(f, center - dx)? + sample(f, center + dx)?
        };
        kronrod += w * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    Ok(Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    })
}

fn sample<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::Numeric(format!("integrand is not finite at x = {x}: {y}")))
    }
}

/// Globally adaptive Gauss-Kronrod (10/21) on `[a, b]`.
///
/// The interval with the largest `|K21 - G10|` is bisected until the summed
/// estimate meets `max(abs_tol, rel_tol·|value|)` or `max_subdivisions`
/// bisections have been spent.
pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    integrate_finite_partitioned(f, &[a, b], spec)
}

/// [`integrate_finite`] starting from the partition given by the strictly
/// increasing `breaks` (first and last entries are the interval ends).
///
/// Useful when the integrand's nodes are known, e.g. for highly oscillatory
/// stationary states.
pub fn integrate_finite_partitioned<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    spec.validate()?;
    if breaks.len() < 2 {
        return Err(Error::Domain("a partition needs at least two points".into()));
    }
    for w in breaks.windows(2) {
        check_interval(w[0], w[1])?;
    }

    let mut heap = BinaryHeap::with_capacity(breaks.len() + spec.max_subdivisions);
    let mut evaluations = 0;
    for w in breaks.windows(2) {
        heap.push(kronrod21(&f, w[0], w[1])?);
        evaluations += 21;
    }

    let totals = |heap: &BinaryHeap<Panel>| {
        // Sum in a fixed order so the result does not depend on heap layout.
        let mut panels: Vec<&Panel> = heap.iter().collect();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        panels
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
    };

    let (mut value, mut error) = totals(&heap);
    let mut splits = 0;
    while error > spec.target(value) && splits < spec.max_subdivisions {
        let worst = heap.pop().expect("partition is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Interval can no longer be split in floating point.
            heap.push(worst);
            break;
        }
        heap.push(kronrod21(&f, worst.a, mid)?);
        heap.push(kronrod21(&f, mid, worst.b)?);
        evaluations += 42;
        splits += 1;
        (value, error) = totals(&heap);
    }

    Ok(IntegralResult {
        value,
        error_estimate: error,
        evaluations,
        converged: error <= spec.target(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = WGK[..10].iter().sum::<f64>() * 2.0 + WGK[10];
        let g: f64 = WG.iter().sum::<f64>() * 2.0;
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn single_panel_is_exact_for_degree_31() {
        // ∫_{-1}^{1} x^30 = 2/31
        let p = kronrod21(&|x: f64| x.powi(30), -1.0, 1.0).unwrap();
        assert!((p.value - 2.0 / 31.0).abs() < 1e-15);
        // Gauss-10 is exact up to degree 19
        let p = kronrod21(&|x: f64| x.powi(18), -1.0, 1.0).unwrap();
        assert!(p.error < 1e-15);
    }

    #[test]
    fn linear_integrand() {
        let r = integrate_finite(|x| x, 0.0, 1.0, &spec()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-15);
        assert!(r.converged);
    }

    #[test]
    fn cosine_squared_half_period() {
        let r = integrate_finite(|x| (PI * x).cos().powi(2), -0.5, 0.5, &spec()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn well_ground_state_second_moment() {
        // L = 1: 1/12 - 1/(2π²)
        let r = integrate_finite(|x| x * x * 2.0 * (PI * x).cos().powi(2), -0.5, 0.5, &spec()).unwrap();
        let expected = 1.0 / 12.0 - 1.0 / (2.0 * PI * PI);
        assert!((r.value - expected).abs() < 1e-14, "{}", r.value);
        assert!((expected - 0.032_673).abs() < 1e-6);
    }

    #[test]
    fn exhausted_budget_reports_non_convergence() {
        let tight = QuadratureSpec {
            max_subdivisions: 1,
            ..spec()
        };
        let r = integrate_finite(|x| (50.0 * x).sin().powi(2), 0.0, 10.0, &tight).unwrap();
        assert!(!r.converged);
        assert!(r.error_estimate > 0.0);
    }

    #[test]
    fn non_finite_sample_is_an_error() {
        let r = integrate_finite(|x| 1.0 / (x - 0.5), 0.0, 1.0, &spec());
        // The centre node lands on the pole.
        assert!(matches!(r, Err(Error::Numeric(_))));
    }

    #[test]
    fn bad_intervals_are_domain_errors() {
        assert!(integrate_finite(|x| x, 1.0, 0.0, &spec()).is_err());
        assert!(integrate_finite_partitioned(|x| x, &[0.0], &spec()).is_err());
        assert!(integrate_finite_partitioned(|x| x, &[0.0, 0.5, 0.5, 1.0], &spec()).is_err());
    }

    #[test]
    fn partition_matches_single_interval() {
        let f = |x: f64| (3.0 * x).sin() * x.exp();
        let whole = integrate_finite(f, 0.0, 2.0, &spec()).unwrap();
        let split = integrate_finite_partitioned(f, &[0.0, 0.3, 1.1, 2.0], &spec()).unwrap();
        assert!((whole.value - split.value).abs() < 1e-13);
    }
}
