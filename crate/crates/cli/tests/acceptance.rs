//! Acceptance run: one line per criterion, `PASS`, `FAIL` or `DEVIATION`.
//!
//! A deviation is a criterion whose literal wording cannot be met for a
//! reason outside the code (a reference value printed with too few digits);
//! the line says why. The process exits nonzero only on `FAIL`.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ucr_core::classical::{classical_moments_closed_form, classical_moments_quadrature, ClassicalEnsemble};
use ucr_core::quadrature::{integrate_real_line, integrate_singular_endpoints, integrate_singular_endpoints_by_node, Node};
use ucr_core::quantum::{commutator_bound, eigen_level, quantum_moments_quadrature, BouncerState};
use ucr_core::specfun::{airy_ai, airy_zero};
use ucr_core::system::{lookup, SystemParams};
use ucr_core::trajectory::{build_trajectory, trajectory_moments, SampleRule};
use ucr_core::{PotentialModel, QuadratureSpec, ScaledMoments};

type Check = Result<Verdict, String>;

enum Verdict {
    Pass(String),
    Fail(String),
    Deviation(String),
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn model(name: &str, a: f64, b: f64, hbar: f64) -> PotentialModel {
    let entry = lookup(name).expect("registered");
    let params = SystemParams::new()
        .set(entry.parameters[0], a)
        .set(entry.parameters[1], b)
        .set("hbar", hbar);
    entry.build(&params).expect("positive parameters")
}

fn default_model(name: &str) -> PotentialModel {
    lookup(name).expect("registered").default_model()
}

/// Log-uniform over four decades around 1.
fn draw(rng: &mut ChaCha8Rng) -> f64 {
    10f64.powf(rng.gen_range(-2.0..2.0))
}

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn quantum(m: &PotentialModel, n: u32) -> Result<ScaledMoments, String> {
    let level = eigen_level(m, n).map_err(err)?;
    quantum_moments_quadrature(&level, &spec()).map_err(err)
}

fn classical(m: &PotentialModel, energy: f64) -> Result<ScaledMoments, String> {
    let ens = ClassicalEnsemble::new(*m, energy, &spec()).map_err(err)?;
    classical_moments_quadrature(&ens, &spec()).map_err(err)
}

fn dev4(m: &ScaledMoments, want: [f64; 4]) -> f64 {
    [m.mean_x, m.mean_x2, m.mean_p, m.mean_p2]
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn c1_oscillator_parity() -> Check {
    let exact = [0.0, 0.5, 0.0, 0.5];
    let ho = default_model("ho");
    let mut worst: f64 = 0.0;
    for n in [0, 1, 2, 5, 10, 20] {
        let q = quantum(&ho, n)?;
        worst = worst.max(dev4(&q, exact)).max((q.product - 0.25).abs());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let m = model("ho", draw(&mut rng), draw(&mut rng), 1.0);
        let c = classical(&m, draw(&mut rng))?;
        worst = worst.max(dev4(&c, exact)).max((c.product - 0.25).abs());
    }
    Ok(verdict(worst < 1e-9, format!("max deviation {worst:.2e} (tol 1e-9)")))
}

fn c2_ground_state_saturation() -> Check {
    let level = eigen_level(&default_model("ho"), 0).map_err(err)?;
    let product = quantum_moments_quadrature(&level, &spec()).map_err(err)?.product;
    let bound = commutator_bound(&level);
    let ok = (product - 0.25).abs() < 1e-12 && (bound - 0.25).abs() < 1e-12;
    Ok(verdict(ok, format!("product {product:.15}, bound {bound:.15}")))
}

fn c3_well_formula() -> Check {
    let well = default_model("well");
    let mut worst: f64 = 0.0;
    for n in 1..=50u32 {
        let q = quantum(&well, n)?;
        let x2 = 1.0 / 3.0 - 2.0 / (n as f64 * PI).powi(2);
        worst = worst.max((q.mean_x2 - x2).abs()).max((q.mean_p2 - 1.0).abs());
    }
    Ok(verdict(worst < 1e-10, format!("n = 1..50, max deviation {worst:.2e} (tol 1e-10)")))
}

fn c4_well_large_n() -> Check {
    let q = quantum(&default_model("well"), 1000)?;
    let gap = (q.product - 1.0 / 3.0).abs();
    Ok(verdict(gap < 2.1e-7, format!("n = 1000, |product - 1/3| = {gap:.4e} (limit 2.1e-7)")))
}

fn c5_well_classical() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let m = model("well", draw(&mut rng), draw(&mut rng), 1.0);
        worst = worst.max((classical(&m, draw(&mut rng))?.product - 1.0 / 3.0).abs());
    }
    Ok(verdict(worst < 1e-10, format!("10 draws, max |product - 1/3| = {worst:.2e}")))
}

fn c6_airy_zeros() -> Check {
    let table = [2.3381, 4.0879, 5.5205, 6.7867, 7.9441];
    let mut misses = Vec::new();
    let mut truncated = true;
    for (i, want) in table.iter().enumerate() {
        let e = airy_zero(i as u32 + 1).map_err(err)?.scaled_energy;
        if (e - want).abs() >= 5e-5 {
            misses.push(format!("E'_{} = {e:.6} vs {want}", i + 1));
            // A four-decimal truncation of the computed value reproduces the entry.
            truncated &= ((e * 1e4).floor() / 1e4 - want).abs() < 1e-9;
        }
    }
    let mut residual: f64 = 0.0;
    for n in 1..=50 {
        let z = airy_zero(n).map_err(err)?;
        residual = residual.max(airy_ai(z.value).map_err(err)?.ai.abs());
    }
    if residual >= 1e-12 {
        return Ok(Verdict::Fail(format!("max |Ai(a_n)| = {residual:.2e} for n <= 50")));
    }
    Ok(match (misses.is_empty(), truncated) {
        (true, _) => Verdict::Pass(format!("five zeros within 5e-5, max |Ai(a_n)| = {residual:.1e}")),
        (false, true) => Verdict::Deviation(format!(
            "{}; the table truncates to four decimals (the entry matches the truncated value), \
             max |Ai(a_n)| = {residual:.1e}",
            misses.join(", ")
        )),
        (false, false) => Verdict::Fail(misses.join(", ")),
    })
}

const BOUNCER: [f64; 4] = [2.0 / 3.0, 8.0 / 15.0, 0.0, 1.0 / 3.0];

fn c7_bouncer_classical() -> Check {
    let m = default_model("bouncer");
    let c = classical(&m, 1.0)?;
    let closed = classical_moments_closed_form(&m);
    let worst = dev4(&c, BOUNCER)
        .max((c.product - 4.0 / 135.0).abs())
        .max(dev4(&closed, BOUNCER))
        .max((closed.product - 4.0 / 135.0).abs());
    Ok(verdict(worst < 1e-9, format!("max deviation {worst:.2e} (tol 1e-9)")))
}

fn c8_bouncer_quantum() -> Check {
    let m = default_model("bouncer");
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        let q = quantum(&m, n)?;
        worst = worst.max(dev4(&q, BOUNCER)).max((q.product - 4.0 / 135.0).abs());
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(verdict(
        worst < 1e-6 && secs < 10.0,
        format!("n = 1..5, max deviation {worst:.2e}, {secs:.2} s"),
    ))
}

fn c9_bouncer_normalization() -> Check {
    let m = default_model("bouncer");
    let mut worst: f64 = 0.0;
    for n in 1..=10 {
        let state = BouncerState::new(eigen_level(&m, n).map_err(err)?, &spec()).map_err(err)?;
        worst = worst.max((state.normalization / state.identity_normalization() - 1.0).abs());
    }
    Ok(verdict(worst < 1e-8, format!("n = 1..10, max |N |Ai'| - 1| = {worst:.2e}")))
}

fn c10_robertson() -> Check {
    let mut worst = f64::INFINITY;
    let mut count = 0;
    let cases: [(&str, Vec<u32>); 3] = [
        ("ho", (0..=20).collect()),
        ("well", (1..=50).chain([1000]).collect()),
        ("bouncer", (1..=10).collect()),
    ];
    for (name, levels) in cases {
        let m = default_model(name);
        for n in levels {
            let level = eigen_level(&m, n).map_err(err)?;
            let q = quantum_moments_quadrature(&level, &spec()).map_err(err)?;
            worst = worst.min(q.product - commutator_bound(&level));
            count += 1;
        }
    }
    let b1 = commutator_bound(&eigen_level(&default_model("bouncer"), 1).map_err(err)?);
    let approx = 1.0 / (4.0 * 2.3381f64.powi(3));
    let ok = worst >= -1e-12 && b1 < 4.0 / 135.0 && (b1 - approx).abs() < 1e-4;
    Ok(verdict(
        ok,
        format!("{count} levels, min(product - bound) = {worst:.3e}; bouncer n = 1 bound {b1:.6e} < 4/135"),
    ))
}

fn c11_oracle_equivalence() -> Check {
    let mut worst: f64 = 0.0;
    for name in ["ho", "well", "bouncer"] {
        let m = default_model(name);
        let energy = eigen_level(&m, m.system().lowest_level()).map_err(err)?.energy;
        let t = trajectory_moments(&build_trajectory(&m, energy).map_err(err)?, 1_000_000, SampleRule::Midpoint)
            .map_err(err)?;
        worst = worst.max(t.max_abs_deviation(&classical(&m, energy)?));
    }
    Ok(verdict(worst < 1e-4, format!("1e6 midpoint samples, max deviation {worst:.2e}")))
}

fn c12_scale_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for name in ["ho", "well", "bouncer"] {
        let reference = default_model(name);
        let lowest = reference.system().lowest_level();
        for _ in 0..50 {
            let m = model(name, draw(&mut rng), draw(&mut rng), draw(&mut rng));
            let n = lowest + rng.gen_range(0..4);
            let level = eigen_level(&m, n).map_err(err)?;
            let ref_level = eigen_level(&reference, n).map_err(err)?;
            let pairs = [
                (quantum(&m, n)?, quantum(&reference, n)?),
                (classical(&m, level.energy)?, classical(&reference, ref_level.energy)?),
            ];
            for (a, b) in pairs {
                worst = worst.max(a.max_abs_deviation(&b)).max((a.product - b.product).abs());
            }
        }
    }
    Ok(verdict(worst < 1e-9, format!("150 parameter sets, max change {worst:.2e}")))
}

fn c13_quadrature() -> Check {
    let s = spec();
    let root = integrate_singular_endpoints(|x| 1.0 / x.sqrt(), 0.0, 1.0, &s).map_err(err)?.value - 2.0;
    let arcsine = integrate_singular_endpoints_by_node(|n: Node| 1.0 / (n.from_lower * n.from_upper).sqrt(), -1.0, 1.0, &s)
        .map_err(err)?
        .value
        - PI;
    let gauss = integrate_real_line(|x| x * x * (-x * x).exp(), &s).map_err(err)?.value - PI.sqrt() / 2.0;
    let worst = root.abs().max(arcsine.abs()).max(gauss.abs());
    Ok(verdict(
        worst < 1e-10,
        format!("errors {:.1e}, {:.1e}, {:.1e}", root.abs(), arcsine.abs(), gauss.abs()),
    ))
}

fn ucr(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ucr"))
        .args(args)
        .env_remove("UCR_CONFIG")
        .output()
        .expect("binary runs")
}

fn golden_matches(file: &str, args: &[&str]) -> Result<bool, String> {
    let out = ucr(args);
    if out.status.code() != Some(0) {
        return Ok(false);
    }
    let got = String::from_utf8(out.stdout).map_err(err)?;
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file);
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (g, w): (Vec<&str>, Vec<&str>) = (got.lines().collect(), want.lines().collect());
    if g.len() != w.len() || g[0] != w[0] {
        return Ok(false);
    }
    Ok(g.iter().zip(&w).skip(1).all(|(gl, wl)| {
        let (gc, wc): (Vec<&str>, Vec<&str>) = (gl.split(',').collect(), wl.split(',').collect());
        gc.len() == wc.len()
            && gc.iter().zip(&wc).all(|(a, b)| {
                a == b
                    || matches!((a.parse::<f64>(), b.parse::<f64>()),
                        (Ok(x), Ok(y)) if (x - y).abs() <= 1e-10 * (1.0 + y.abs()))
            })
    }))
}

fn c14_cli_contract() -> Check {
    let goldens: [(&str, &[&str]); 5] = [
        ("compare_ho.csv", &["compare", "--system", "ho", "--n", "0,1,5,20"]),
        ("compare_bouncer.csv", &["compare", "--system", "bouncer", "--n", "1..5"]),
        ("compare_well.csv", &["compare", "--system", "well", "--n", "1,2,10"]),
        ("density_well.csv", &["density", "--system", "well", "--n", "5", "--points", "11"]),
        ("airy_zeros.csv", &["airy-zeros", "--count", "10"]),
    ];
    let mut failures = Vec::new();
    for (file, args) in goldens {
        if !golden_matches(file, args)? {
            failures.push(file.to_string());
        }
    }
    let matrix: [(&[&str], i32); 10] = [
        (&["compare", "--system", "ho", "--n", "0,1"], 0),
        (&["airy-zeros", "--count", "3"], 0),
        (&["verify", "--system", "bouncer", "--samples", "100000"], 0),
        (&["compare", "--system", "ho", "--n", "1", "--out", "/nonexistent-dir/r.csv"], 1),
        (&["compare", "--system", "well", "--param", "hbar=1e-200"], 1),
        (&["compare", "--system", "bouncer", "--n", "1", "--tol", "1e-30"], 2),
        (&["verify", "--system", "bouncer", "--samples", "10", "--tol", "1e-6"], 2),
        (&[], 64),
        (&["compare", "--system", "double-well"], 64),
        (&["compare", "--system", "well", "--n", "0"], 64),
    ];
    for (args, want) in matrix {
        let got = ucr(args).status.code();
        if got != Some(want) {
            failures.push(format!("{args:?} exited {got:?}, want {want}"));
        }
    }
    Ok(if failures.is_empty() {
        Verdict::Pass("5 golden files, 10 exit-code cases".into())
    } else {
        Verdict::Fail(failures.join("; "))
    })
}

fn main() {
    let criteria: [(&str, fn() -> Check); 14] = [
        ("oscillator parity", c1_oscillator_parity),
        ("oscillator ground-state saturation", c2_ground_state_saturation),
        ("well finite-n formula", c3_well_formula),
        ("well large-n limit", c4_well_large_n),
        ("well classical product", c5_well_classical),
        ("Airy zeros", c6_airy_zeros),
        ("bouncer classical", c7_bouncer_classical),
        ("bouncer quantum", c8_bouncer_quantum),
        ("bouncer normalization identity", c9_bouncer_normalization),
        ("Robertson bounds", c10_robertson),
        ("trajectory oracle equivalence", c11_oracle_equivalence),
        ("scale invariance", c12_scale_invariance),
        ("quadrature unit suite", c13_quadrature),
        ("CLI contract", c14_cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match check() {
            Ok(Verdict::Pass(d)) => ("PASS", d),
            Ok(Verdict::Deviation(d)) => ("DEVIATION", d),
            Ok(Verdict::Fail(d)) => ("FAIL", d),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        failed += usize::from(tag == "FAIL");
        println!("{tag:<9} {:>2} {name}: {detail} [{:.2} s]", i + 1, start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
