//! Acceptance criteria 1-11, each evaluated at its stated tolerance and
//! reported as one PASS/FAIL line.
//!

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;
use std::time::{Duration, Instant};

use korder::criteria::counterexample_check;
use korder::extremal::{big_M, critical_theta, m_numerator, q_value, F_lhs, QValue};
use korder::family::{h_alpha, h_alpha_on_circle, h_alpha_series, k_alpha, kustner_inf};
use korder::grid::PolarGrid;
use korder::herglotz::sweep::{
    starlike_sweep, subordination_sweep, DEFAULT_PAIRS, DEFAULT_POINTS, DEFAULT_TRIALS,
    SUBORDINATION_TOL,
};
use korder::herglotz::{AnalyticMap, AtomicMeasure, GeneratedFunction};
use korder::verify::{
    brute_force_m, convexity_grid_min, convexity_min_near_minus_one, rho, starlike_grid,
    v_half_samples, SWEEP_ALPHAS,
};
use korder::{Complex, Order};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn ord(a: f64) -> Order {
    Order::new(a).unwrap()
}

fn in_half_open(x: f64, lo: f64, hi: f64) -> bool {
    lo <= x && x < hi
}

fn c1_rho() -> Outcome {
    let r = rho();
    outcome(
        in_half_open(r, 0.743491, 0.743492),
        format!("rho = {r:.10}"),
    )
}

fn c2_f_signs() -> Outcome {
    let o = ord(0.6);
    let a = F_lhs(&o, 0.11).unwrap();
    let b = F_lhs(&o, 0.114).unwrap();
    let pass = in_half_open(a, 0.0050, 0.0051) && b > -0.0011 && b <= -0.0010;
    outcome(pass, format!("F(0.11) = {a:.6}, F(0.114) = {b:.6}"))
}

fn c3_theta_bracket() -> Outcome {
    let t = critical_theta(&ord(0.6)).unwrap();
    outcome(t > 0.11 && t < 0.114, format!("theta_3/5 = {t:.12}"))
}

fn c4_m_bound() -> Outcome {
    let o = ord(0.6);
    let m = big_M(&o).unwrap();
    let five_g = 5.0 * m_numerator(&o, 0.114).unwrap();
    let brute = brute_force_m(&o, 100_000).unwrap();
    let pass = m < five_g
        && in_half_open(five_g, 0.743487, 0.743488)
        && m < rho()
        && brute <= m + 1e-12
        && brute >= m - 1e-9;
    outcome(
        pass,
        format!("M = {m:.10}, 5G(0.114) = {five_g:.10}, brute force = {brute:.10}"),
    )
}

fn c5_m_half() -> Outcome {
    let sup = v_half_samples()
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let pass = (sup - FRAC_PI_2).abs() <= 1e-4 && sup <= FRAC_PI_2 + 1e-12;
    outcome(pass, format!("sup v_half = {sup:.12}"))
}

/// Minimum of `Re[e^{it} w]` over `10^5` boundary angles of `D_alpha` and
/// their mirror images, geometric near 0 and uniform elsewhere.
fn brute_force_q(o: &Order, t: f64) -> f64 {
    let geometric = (0..20_000).map(|i| 1e-8 * 1e7f64.powf(i as f64 / 20_000.0));
    let uniform = (1..=80_000).map(|i| 0.1 + (PI - 0.1) * i as f64 / 80_000.0);
    let rot = Complex::from_polar(1.0, t);
    let mut min = f64::INFINITY;
    if o.is_bounded() {
        min = (rot * h_alpha_on_circle(o, 0.0).unwrap()).re;
    }
    for theta in geometric.chain(uniform) {
        let w = h_alpha_on_circle(o, theta).unwrap();
        min = min.min((rot * w).re).min((rot * w.conj()).re);
    }
    min
}

fn c6_q_table() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let exact = [
        (0.5, FRAC_PI_2, -FRAC_PI_2),
        (0.0, 0.0, 0.5),
        (0.75, PI, -2.0),
    ];
    for (a, t, want) in exact {
        let got = q_value(&ord(a), t).unwrap().value;
        let ok = matches!(got, QValue::Finite(v) if (v - want).abs() <= 1e-15);
        pass &= ok;
        notes.push(format!("Q_{a}({t:.4}) = {got:?}"));
    }
    let unbounded = q_value(&ord(0.3), 0.5 * PI).unwrap().value;
    pass &= unbounded == QValue::NegInfinity;
    notes.push(format!("Q_0.3(pi/2) = {unbounded:?}"));
    for (a, t) in [(0.3, 0.2), (0.5, 1.0), (0.75, 0.5)] {
        let o = ord(a);
        let q = q_value(&o, t).unwrap().value.finite().unwrap();
        let brute = brute_force_q(&o, t);
        let ok = (q - brute).abs() <= 1e-6;
        pass &= ok;
        notes.push(format!("Q_{a}({t}) = {q:.9} vs {brute:.9}"));
    }
    outcome(pass, notes.join("; "))
}

/// `h_alpha` convex on a `720 x 36` grid, and the minimum near `z = -1`
/// within `1e-5` of the infimum at `r = 0.9999`.
///
/// The second clause cannot hold: `Re(1 + z h''/h')` is smooth at `-1` and the
/// circle of radius `r` stays `1 - r` away from it, so the minimum exceeds the
/// infimum by a first-order term `s (1 - r)` with `s` between 0.2 and 0.5.
/// The criterion is evaluated as stated and reported as failed; the
/// assertions below instead require the gap to scale linearly in `1 - r` and
/// to fall under the tolerance once `1 - r <= 1e-5`.
fn c7_convexity() -> Outcome {
    let grid = PolarGrid::new(36, 720, 0.999);
    let mut convex = true;
    let mut literal = true;
    let mut worst_grid = f64::INFINITY;
    let mut worst_gap: f64 = 0.0;
    for i in 1..=19 {
        let o = ord(0.05 * i as f64);
        let inf = kustner_inf(&o).unwrap();
        let min = convexity_grid_min(&o, &grid).unwrap();
        convex &= min > 0.0 && min >= inf - 1e-12;
        worst_grid = worst_grid.min(min);
        let gaps: Vec<f64> = [1e-4, 1e-5, 1e-6]
            .iter()
            .map(|d| convexity_min_near_minus_one(&o, 1.0 - d).unwrap() - inf)
            .collect();
        worst_gap = worst_gap.max(gaps[0]);
        literal &= gaps[0].abs() <= 1e-5;
        let slope = gaps[0] / 1e-4;
        assert!(
            gaps.iter().all(|&g| g > -1e-9),
            "alpha {}: {gaps:?}",
            o.alpha()
        );
        assert!(
            (gaps[1] / 1e-5 - slope).abs() < 1e-2 * slope,
            "gap not first order at alpha {}: {gaps:?}",
            o.alpha()
        );
        assert!(
            gaps[1] <= 1e-5 && gaps[2] <= 1e-5,
            "alpha {}: {gaps:?}",
            o.alpha()
        );
    }
    assert!(convex, "h_alpha failed the grid convexity test");
    outcome(
        convex && literal,
        format!(
            "grid min {worst_grid:.6} > 0; max gap at r = 0.9999 is {worst_gap:.2e} (tolerance 1e-5, unattainable: first-order in 1 - r)"
        ),
    )
}

fn c8_subordination() -> Outcome {
    let mut total = 0;
    for (i, &a) in SWEEP_ALPHAS.iter().enumerate() {
        let r = subordination_sweep(
            &ord(a),
            1000 + i as u64,
            DEFAULT_TRIALS,
            DEFAULT_POINTS,
            SUBORDINATION_TOL,
        )
        .unwrap();
        assert_eq!(r.trials, 200);
        total += r.violation_count;
    }
    outcome(
        total == 0,
        format!("{total} violations in 9 x 200 x 100 points"),
    )
}

fn c9_starlike() -> Outcome {
    let r = starlike_sweep(&ord(0.6), 2000, DEFAULT_PAIRS, &starlike_grid()).unwrap();
    assert_eq!(r.pairs.len(), 100);
    let pass = r.pairs.iter().all(|p| p.min_re_star >= -1e-9);
    outcome(
        pass,
        format!("min Re[z h'/h] = {:.6} over 100 pairs", r.min_overall),
    )
}

fn c10_counterexample() -> Outcome {
    let r = counterexample_check();
    let root = 0.3f64.sqrt();
    let roots_ok = (r.unit_derivative_points[0] - Complex::new(0.0, root)).norm() <= 1e-12
        && (r.unit_derivative_points[1] - Complex::new(0.0, -root)).norm() <= 1e-12;
    let pass = r.fixed_point_residual <= 1e-15
        && roots_ok
        && (r.alexander.sum - 0.59).abs() <= 1e-12
        && (r.derivative_at_fixed_point - Complex::new(1.01, 0.0)).norm() <= 1e-12;
    outcome(
        pass,
        format!(
            "residual {:.1e}, sum {}, f'(i/sqrt 2) = {}",
            r.fixed_point_residual, r.alexander.sum, r.derivative_at_fixed_point
        ),
    )
}

/// `2F1(beta, 1; 2; z) = sum (beta)_n / (n + 1)! z^n`, summed until the terms
/// stop mattering.
fn hypergeometric(beta: f64, z: Complex) -> Complex {
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..5000 {
        term *= z * ((beta + n as f64) / (n as f64 + 2.0));
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

fn c11_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst_series: f64 = 0.0;
    let mut worst_atom: f64 = 0.0;
    for a in [0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 0.99] {
        let o = ord(a);
        for _ in 0..100 {
            let z = Complex::from_polar(
                0.9 * rng.random::<f64>().sqrt(),
                2.0 * PI * rng.random::<f64>(),
            );
            let closed = h_alpha(&o, z).unwrap();
            let series = h_alpha_series(&o, z, 500).unwrap();
            let oracle = hypergeometric(o.beta(), z);
            let rel = ((closed - series).norm() / closed.norm())
                .max((closed - oracle).norm() / closed.norm());
            worst_series = worst_series.max(rel);
        }
        let f = GeneratedFunction::new(o, AtomicMeasure::point_mass(0.0));
        for _ in 0..100 {
            let z = Complex::from_polar(
                0.99 * rng.random::<f64>().sqrt(),
                2.0 * PI * rng.random::<f64>(),
            );
            let k = k_alpha(&o, z).unwrap();
            let err = (f.value(z) - k).norm() / k.norm().max(1.0);
            worst_atom = worst_atom.max(err);
        }
    }
    outcome(
        worst_series <= 1e-10 && worst_atom <= 1e-10,
        format!("series rel err {worst_series:.1e}, single atom err {worst_atom:.1e}"),
    )
}

/// Criteria whose statement cannot be met as written; they are reported as
/// failed and checked against the analysis in their own function instead.
type Criterion = (&'static str, fn() -> Outcome, Duration);

const UNATTAINABLE: [usize; 1] = [7];

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("rho value", c1_rho, Duration::from_millis(100)),
        ("F signs", c2_f_signs, Duration::from_millis(100)),
        (
            "critical angle bracket",
            c3_theta_bracket,
            Duration::from_millis(100),
        ),
        ("M(3/5) bound", c4_m_bound, Duration::from_secs(1)),
        ("M(1/2) = pi/2", c5_m_half, Duration::from_secs(1)),
        ("Q table", c6_q_table, Duration::from_secs(10)),
        (
            "convexity of h_alpha",
            c7_convexity,
            Duration::from_secs(10),
        ),
        (
            "subordination sweep",
            c8_subordination,
            Duration::from_secs(60),
        ),
        ("starlike average", c9_starlike, Duration::from_secs(60)),
        (
            "counterexample",
            c10_counterexample,
            Duration::from_millis(100),
        ),
        ("oracle agreement", c11_oracles, Duration::from_secs(10)),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        let over = if elapsed > *budget {
            ", over budget"
        } else {
            ""
        };
        // written to the raw stream so the table shows without --nocapture
        let _ = writeln!(
            std::io::stderr(),
            "criterion {n:>2} {verdict} {name} [{:.3} s, budget {} s{over}]: {}",
            elapsed.as_secs_f64(),
            budget.as_secs_f64(),
            out.detail
        );
        if !out.pass && !UNATTAINABLE.contains(&n) {
            unexpected.push(n);
        }
        if out.pass && UNATTAINABLE.contains(&n) {
            panic!("criterion {n} passed but is listed as unattainable");
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
