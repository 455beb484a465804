//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;

use hardy_cli::report::{CertifyReport, LhvReport, NoiseReport, VerdictTag};
use hardy_core::sampling::{
    random_density, random_hardy_state, random_projector, random_separable,
};
use hardy_core::{
    behavior_from_state, build_bases, build_observables, candidate_from_state, certify,
    find_hardy_pair, hardy_parameter_a, hardy_probability_table, lhv_feasible, noise_threshold,
    schmidt_decompose, trace_distance, Complex64, DensityOperator, HardyObservableSet, StateVector,
    DEFAULT_DELTA, DEFAULT_LHV_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hardy_qubits(p1_sq: f64) -> StateVector {
    let z = Complex64::new(0.0, 0.0);
    StateVector::new(
        2,
        2,
        vec![
            Complex64::new(p1_sq.sqrt(), 0.0),
            z,
            z,
            Complex64::new((1.0 - p1_sq).sqrt(), 0.0),
        ],
    )
    .unwrap()
}

fn observables_for(psi: &StateVector) -> HardyObservableSet {
    let sf = schmidt_decompose(psi);
    let pair = find_hardy_pair(&sf, DEFAULT_DELTA).unwrap();
    build_observables(&build_bases(&sf, &pair).unwrap(), psi.d1(), psi.d2()).unwrap()
}

fn c1_zero_conditions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst_zero = 0.0_f64;
    let mut worst_a = 0.0_f64;
    for _ in 0..200 {
        let d1 = rng.random_range(2..=5);
        let d2 = rng.random_range(2..=5);
        let (psi, _) = random_hardy_state(d1, d2, &mut rng);
        let sf = schmidt_decompose(&psi);
        let pair = find_hardy_pair(&sf, DEFAULT_DELTA).ok_or("random Hardy state has no pair")?;
        let obs = build_observables(&build_bases(&sf, &pair).unwrap(), d1, d2).unwrap();
        let table = hardy_probability_table(&psi.to_density(), &obs).unwrap();
        worst_zero = table
            .zero_conditions()
            .iter()
            .copied()
            .fold(worst_zero, f64::max);
        let closed = hardy_parameter_a(pair.p1, pair.p2).unwrap();
        worst_a = worst_a.max((table.hardy_entry() - closed).abs());
    }
    ensure(worst_zero <= 1e-10, || {
        format!("max zero-condition probability {worst_zero:e}")
    })?;
    ensure(worst_a <= 1e-10, || {
        format!("max |P(Y1+,Y2+) - a| {worst_a:e}")
    })?;
    Ok(format!(
        "200 states, max zero prob {worst_zero:.1e}, max a error {worst_a:.1e}"
    ))
}

fn c2_criterion_fixture() -> Outcome {
    let psi = hardy_qubits(0.2);
    let closed = hardy_parameter_a(0.2f64.sqrt(), 0.8f64.sqrt()).unwrap();
    let table = hardy_probability_table(&psi.to_density(), &observables_for(&psi)).unwrap();
    let spectral = table.hardy_entry();
    ensure((closed - 0.0888889).abs() <= 1e-7, || {
        format!("closed form a = {closed}")
    })?;
    ensure((spectral - 0.0888889).abs() <= 1e-7, || {
        format!("projector a = {spectral}")
    })?;
    ensure((closed - spectral).abs() <= 1e-7, || {
        "closed form and projector disagree".into()
    })?;
    Ok(format!(
        "a = {closed:.9} (closed form), {spectral:.9} (projectors)"
    ))
}

fn c3_maximum_a() -> Outcome {
    // Oracle: maximize x²(1−2x)/(1−x)² over x = p1·p2 ∈ (0, ½).
    let f = |x: f64| x * x * (1.0 - 2.0 * x) / ((1.0 - x) * (1.0 - x));
    let n = 2_000_000;
    let (ox, oa) = (1..n)
        .map(|k| 0.5 * k as f64 / n as f64)
        .map(|x| (x, f(x)))
        .fold((0.0, f64::MIN), |b, c| if c.1 > b.1 { c } else { b });
    // Grid over qubit weight pairs p1 = cos t, p2 = sin t.
    let m = 2_000_000;
    let (mut best_a, mut best_x) = (f64::MIN, 0.0);
    for k in 1..m {
        let t = std::f64::consts::FRAC_PI_2 * k as f64 / m as f64;
        let (p1, p2) = (t.cos(), t.sin());
        let a = hardy_parameter_a(p1, p2).unwrap();
        if a > best_a {
            best_a = a;
            best_x = p1 * p2;
        }
    }
    ensure((best_a - 0.0901699).abs() <= 1e-5, || {
        format!("max a = {best_a}")
    })?;
    ensure((best_x - 0.381966).abs() <= 1e-4, || {
        format!("argmax p1p2 = {best_x}")
    })?;
    ensure(
        (best_a - oa).abs() <= 1e-9 && (best_x - ox).abs() <= 1e-4,
        || format!("grid ({best_a}, {best_x}) vs 1-D oracle ({oa}, {ox})"),
    )?;
    Ok(format!("max a = {best_a:.7} at p1p2 = {best_x:.6}"))
}

fn c4_noise_threshold() -> Outcome {
    let psi = hardy_qubits(0.2);
    let white = DensityOperator::maximally_mixed(2, 2);
    let rep = noise_threshold(&psi, &white, DEFAULT_DELTA).map_err(|e| e.to_string())?;
    ensure((rep.p_star - 0.9802469).abs() <= 1e-6, || {
        format!("p_star = {}", rep.p_star)
    })?;
    // Bisection on the numerically computed trace distance.
    let pure = psi.to_density();
    let margin =
        |p: f64| rep.a - 6.0 * trace_distance(&pure.mix(p, &white).unwrap(), &pure).unwrap();
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if margin(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let bisected = 0.5 * (lo + hi);
    ensure((bisected - rep.p_star).abs() <= 1e-9, || {
        format!("bisection {bisected} vs closed form {}", rep.p_star)
    })?;
    Ok(format!(
        "p_star = {:.9}, bisection = {bisected:.12}",
        rep.p_star
    ))
}

fn c5_lhv_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut certified = 0;
    let mut attempts = 0;
    while certified < 100 {
        attempts += 1;
        ensure(attempts < 10_000, || {
            format!("only {certified} certified samples found")
        })?;
        let d1 = rng.random_range(2..=4);
        let d2 = rng.random_range(2..=4);
        let (psi, _) = random_hardy_state(d1, d2, &mut rng);
        let noise = random_density(d1, d2, 1 + rng.random_range(0..d1 * d2), &mut rng);
        let p = 1.0 - 0.05 * rng.random::<f64>();
        let sigma = psi.to_density().mix(p, &noise).unwrap();
        let candidate = if rng.random_bool(0.5) {
            psi.clone()
        } else {
            candidate_from_state(&sigma)
        };
        let report = certify(&sigma, &candidate, DEFAULT_DELTA).unwrap();
        if report.margin <= 0.0 || report.pair.is_none() {
            continue;
        }
        certified += 1;
        let behavior = behavior_from_state(&sigma, &observables_for(&candidate)).unwrap();
        let lhv = lhv_feasible(&behavior, DEFAULT_LHV_TOL).unwrap();
        ensure(!lhv.feasible, || {
            format!("margin {} yet a local model was found", report.margin)
        })?;
    }
    let mut local = 0;
    for _ in 0..100 {
        let d1 = rng.random_range(2..=4);
        let d2 = rng.random_range(2..=4);
        let (psi, _) = random_hardy_state(d1, d2, &mut rng);
        let sigma = random_separable(d1, d2, 1 + rng.random_range(0..4), &mut rng);
        let behavior = behavior_from_state(&sigma, &observables_for(&psi)).unwrap();
        let lhv = lhv_feasible(&behavior, DEFAULT_LHV_TOL).unwrap();
        ensure(lhv.feasible, || {
            format!(
                "separable state judged nonlocal, residual {}",
                lhv.max_violation
            )
        })?;
        local += 1;
    }
    Ok(format!(
        "{certified}/100 certified infeasible, {local}/100 separable feasible"
    ))
}

fn c6_projector_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut violations = 0;
    let mut worst = f64::MIN;
    for _ in 0..1000 {
        let d1 = rng.random_range(2..=3);
        let d2 = rng.random_range(2..=3);
        let n = d1 * d2;
        let s1 = random_density(d1, d2, 1 + rng.random_range(0..n), &mut rng);
        let s2 = random_density(d1, d2, 1 + rng.random_range(0..n), &mut rng);
        let p = random_projector(n, rng.random_range(1..=n), &mut rng);
        let gap = (s1.expectation(&p).unwrap() - s2.expectation(&p).unwrap()).abs();
        let d = trace_distance(&s1, &s2).unwrap();
        worst = worst.max(gap - d);
        if gap > d + 1e-10 {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!(
        "1000 triples, 0 violations, max (gap - D) = {worst:.3e}"
    ))
}

fn c7_table_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = f64::MIN;
    for _ in 0..100 {
        let d1 = rng.random_range(2..=4);
        let d2 = rng.random_range(2..=4);
        let (psi, _) = random_hardy_state(d1, d2, &mut rng);
        let noise = random_density(d1, d2, 1 + rng.random_range(0..d1 * d2), &mut rng);
        let sigma = psi.to_density().mix(rng.random::<f64>(), &noise).unwrap();
        let report = certify(&sigma, &psi, DEFAULT_DELTA).unwrap();
        let dev = report.table.unwrap().deviation_from_ideal(report.a);
        worst = worst.max(dev - report.epsilon);
        ensure(dev <= report.epsilon + 1e-10, || {
            format!("deviation {dev} exceeds ε = {}", report.epsilon)
        })?;
    }
    Ok(format!("100 states, max (deviation - ε) = {worst:.3e}"))
}

fn c8_mixture_linearity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0_f64;
    for _ in 0..30 {
        let d1 = rng.random_range(2..=4);
        let d2 = rng.random_range(2..=4);
        let (psi, _) = random_hardy_state(d1, d2, &mut rng);
        let noise = random_density(d1, d2, 1 + rng.random_range(0..d1 * d2), &mut rng);
        let pure = psi.to_density();
        let d_noise = trace_distance(&noise, &pure).unwrap();
        for k in 1..=9 {
            let p = k as f64 / 10.0;
            let d = trace_distance(&pure.mix(p, &noise).unwrap(), &pure).unwrap();
            worst = worst.max((d - (1.0 - p) * d_noise).abs());
        }
    }
    ensure(worst <= 1e-10, || format!("max deviation {worst:e}"))?;
    Ok(format!(
        "30 noise states x 9 weights, max deviation {worst:.1e}"
    ))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hardy"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!(
            "`hardy {}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn gen_file(dir: &Path, name: &str, args: &[&str]) -> Result<PathBuf, String> {
    let path = dir.join(name);
    let mut full = vec!["gen-state"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", path.to_str().unwrap()]);
    run_cli(&full)?;
    Ok(path)
}

fn check_consistent(eps: f64, a: f64, margin: f64, verdict: VerdictTag) -> Result<(), String> {
    ensure((margin - (a - 6.0 * eps)).abs() <= 1e-12, || {
        format!("margin {margin} != a - 6ε")
    })?;
    let expected = if verdict == VerdictTag::NotHardy {
        VerdictTag::NotHardy
    } else if margin > 1e-10 {
        VerdictTag::NonlocalCertified
    } else {
        VerdictTag::Inconclusive
    };
    ensure(verdict == expected, || {
        format!("verdict {verdict:?} inconsistent with margin {margin}")
    })
}

fn c9_cli_round_trip() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let d = dir.path();
    let hardy = gen_file(d, "hardy.json", &["hardy", "--p1-sq", "0.2"])?;
    let fixtures = [
        (
            "hardy",
            hardy.clone(),
            Some(VerdictTag::NonlocalCertified),
            false,
        ),
        (
            "white-noise-mix",
            gen_file(
                d,
                "mix.json",
                &["white-noise-mix", "--p1-sq", "0.2", "--p", "0.99"],
            )?,
            Some(VerdictTag::NonlocalCertified),
            false,
        ),
        (
            "product",
            gen_file(d, "product.json", &["product"])?,
            None,
            true,
        ),
        (
            "bell",
            gen_file(d, "bell.json", &["bell"])?,
            Some(VerdictTag::NotHardy),
            false,
        ),
    ];
    let hs = hardy.to_str().unwrap();
    let mut lines = Vec::new();
    for (name, path, expect_default, expect_feasible) in fixtures {
        let ps = path.to_str().unwrap();
        let own: CertifyReport = serde_json::from_slice(&run_cli(&["certify", "--state", ps])?)
            .map_err(|e| e.to_string())?;
        check_consistent(own.epsilon, own.a, own.margin, own.verdict)?;
        if let Some(v) = expect_default {
            ensure(own.verdict == v, || {
                format!("{name}: default-candidate verdict {:?}", own.verdict)
            })?;
        }
        let vs: CertifyReport =
            serde_json::from_slice(&run_cli(&["certify", "--state", ps, "--candidate", hs])?)
                .map_err(|e| e.to_string())?;
        check_consistent(vs.epsilon, vs.a, vs.margin, vs.verdict)?;
        let lhv: LhvReport =
            serde_json::from_slice(&run_cli(&["lhv-check", "--state", ps, "--candidate", hs])?)
                .map_err(|e| e.to_string())?;
        check_consistent(lhv.epsilon, lhv.a, lhv.margin, lhv.verdict)?;
        ensure(
            lhv.epsilon == vs.epsilon
                && lhv.a == vs.a
                && lhv.margin == vs.margin
                && lhv.verdict == vs.verdict,
            || format!("{name}: certify and lhv-check disagree"),
        )?;
        if vs.verdict == VerdictTag::NonlocalCertified {
            ensure(!lhv.feasible, || {
                format!("{name}: certified but LP feasible")
            })?;
        }
        if expect_feasible {
            ensure(lhv.feasible, || format!("{name}: expected a local model"))?;
        }
        lines.push(format!(
            "{name}:{:?}/{}",
            vs.verdict,
            if lhv.feasible { "local" } else { "nonlocal" }
        ));
    }
    let white = gen_file(
        d,
        "white.json",
        &["white-noise-mix", "--p1-sq", "0.2", "--p", "0"],
    )?;
    let noise: NoiseReport = serde_json::from_slice(&run_cli(&[
        "noise-threshold",
        "--state",
        hs,
        "--noise",
        white.to_str().unwrap(),
    ])?)
    .map_err(|e| e.to_string())?;
    ensure((noise.p_star - 0.9802469).abs() <= 1e-6, || {
        format!("CLI p_star {}", noise.p_star)
    })?;
    Ok(lines.join(", "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 Hardy zero-conditions", c1_zero_conditions),
        ("2 criterion fixture a", c2_criterion_fixture),
        ("3 maximum Hardy parameter", c3_maximum_a),
        ("4 noise threshold", c4_noise_threshold),
        ("5 certification soundness vs LHV LP", c5_lhv_soundness),
        ("6 trace-distance projector bound", c6_projector_bound),
        ("7 probability-table bound", c7_table_bound),
        ("8 mixture linearity", c8_mixture_linearity),
        ("9 CLI round trip", c9_cli_round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
