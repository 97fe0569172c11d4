//! One-shot reproduction of the reference constants and class properties as a
//! deterministic pass/fail report.
//!
//! Reference decimals are truncations, so `0.0050...` becomes the half-open
//! interval `[0.0050, 0.0051)`.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use serde::Serialize;

use crate::boundary::v_half;
use crate::criteria::counterexample_check;
use crate::error::Result;
use crate::extremal::{
    big_M, critical_theta, m_denominator, m_denominator_prime, m_numerator,
    m_numerator_slope_bound, F_lhs,
};
use crate::family::{convexity_transform, h_alpha_on_circle, kustner_inf, unit, Order};
use crate::grid::PolarGrid;
use crate::herglotz::sweep::{
    growth_sweep, odd_sweep, starlike_sweep, subordination_sweep, trial_seed, DEFAULT_PAIRS,
    DEFAULT_POINTS, DEFAULT_TRIALS, STARLIKE_TOL, SUBORDINATION_TOL,
};
use crate::json::serialize_f64;

/// Names of every check [`verify_all`] runs, in report order.
pub const REQUIRED_CHECKS: [&str; 11] = [
    "F_signs",
    "G_monotone",
    "H_monotone",
    "M_35_bound",
    "M_half",
    "counterexample",
    "growth_sweep",
    "kustner_consistency",
    "rho_value",
    "starlike_avg",
    "subordination_sweep",
];

/// Orders used by the subordination and growth sweeps.
pub const SWEEP_ALPHAS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
pub const KUSTNER_ALPHAS: [f64; 3] = [0.25, 0.5, 0.75];
/// Radii at which the minimum of `Re(1 + z h''/h')` near `z = -1` is taken.
pub const KUSTNER_RADII: [f64; 3] = [1.0 - 1e-4, 1.0 - 1e-5, 1.0 - 1e-6];
pub const KUSTNER_TOL: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Measured {
    Value(#[serde(serialize_with = "serialize_f64")] f64),
    Verdict(String),
}

impl Measured {
    pub fn value(&self) -> Option<f64> {
        match self {
            Measured::Value(v) => Some(*v),
            Measured::Verdict(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Interval {
        #[serde(serialize_with = "serialize_f64")]
        lo: f64,
        #[serde(serialize_with = "serialize_f64")]
        hi: f64,
        lo_closed: bool,
        hi_closed: bool,
    },
    Below {
        #[serde(serialize_with = "serialize_f64")]
        bound: f64,
        strict: bool,
    },
    Above {
        #[serde(serialize_with = "serialize_f64")]
        bound: f64,
        strict: bool,
    },
    Near {
        #[serde(serialize_with = "serialize_f64")]
        target: f64,
        #[serde(serialize_with = "serialize_f64")]
        tol: f64,
    },
    Verdict {
        verdict: String,
    },
}

impl Expected {
    /// `[lo, hi)`.
    pub fn half_open(lo: f64, hi: f64) -> Self {
        Expected::Interval {
            lo,
            hi,
            lo_closed: true,
            hi_closed: false,
        }
    }

    pub fn admits(&self, m: &Measured) -> bool {
        match (self, m) {
            (
                Expected::Interval {
                    lo,
                    hi,
                    lo_closed,
                    hi_closed,
                },
                Measured::Value(v),
            ) => {
                let above = if *lo_closed { v >= lo } else { v > lo };
                let below = if *hi_closed { v <= hi } else { v < hi };
                above && below
            }
            (Expected::Below { bound, strict }, Measured::Value(v)) => {
                if *strict {
                    v < bound
                } else {
                    v <= bound
                }
            }
            (Expected::Above { bound, strict }, Measured::Value(v)) => {
                if *strict {
                    v > bound
                } else {
                    v >= bound
                }
            }
            (Expected::Near { target, tol }, Measured::Value(v)) => (v - target).abs() <= *tol,
            (Expected::Verdict { verdict }, Measured::Verdict(m)) => verdict == m,
            _ => false,
        }
    }
}

/// A labelled measurement with its expectation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quantity {
    pub label: String,
    pub measured: Measured,
    pub expected: Expected,
    pub pass: bool,
}

impl Quantity {
    pub fn new(label: impl Into<String>, measured: Measured, expected: Expected) -> Self {
        let pass = expected.admits(&measured);
        Self {
            label: label.into(),
            measured,
            expected,
            pass,
        }
    }

    pub fn value(label: impl Into<String>, v: f64, expected: Expected) -> Self {
        Self::new(label, Measured::Value(v), expected)
    }
}

/// One named check: a headline measurement plus supporting ones, all of which
/// must pass.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: Measured,
    pub expected: Expected,
    #[serde(serialize_with = "serialize_f64")]
    pub tolerance: f64,
    pub pass: bool,
    pub details: Vec<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    fn from_quantities(name: &str, tolerance: f64, mut quantities: Vec<Quantity>) -> Self {
        let pass = quantities.iter().all(|q| q.pass);
        let head = quantities.remove(0);
        Self {
            name: name.to_owned(),
            measured: head.measured,
            expected: head.expected,
            tolerance,
            pass,
            details: quantities,
            error: None,
        }
    }

    fn failed(name: &str, err: crate::Error) -> Self {
        Self {
            name: name.to_owned(),
            measured: Measured::Verdict("error".into()),
            expected: Expected::Verdict {
                verdict: "computed".into(),
            },
            tolerance: 0.0,
            pass: false,
            details: Vec::new(),
            error: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Sizes of the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Generated functions per order in the subordination and growth sweeps.
    pub trials: usize,
    pub points: usize,
    pub pairs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            points: DEFAULT_POINTS,
            pairs: DEFAULT_PAIRS,
        }
    }
}

impl VerifyOptions {
    /// Every count scaled to `trials` (pairs to half of it, at least one).
    pub fn with_trials(trials: usize) -> Self {
        Self {
            trials,
            points: DEFAULT_POINTS,
            pairs: (trials / 2).max(1),
        }
    }
}

/// The starlike-average grid: 20 radii by 50 angles, `r <= 0.999`.
pub fn starlike_grid() -> PolarGrid {
    PolarGrid::new(20, 50, 0.999)
}

/// `5 (2^(1/5) - 1)`, the covering radius `-k_{3/5}(-1)`.
pub fn rho() -> f64 {
    5.0 * (0.2 * LN_2).exp_m1()
}

/// Minimum of `Re(1 + z h''/h')` over `grid`.
pub fn convexity_grid_min(ord: &Order, grid: &PolarGrid) -> Result<f64> {
    grid.points()
        .into_iter()
        .map(|z| convexity_transform(ord, z).map(|t| t.re))
        .try_fold(f64::INFINITY, |m, v| v.map(|v| m.min(v)))
}

/// Minimum of `Re(1 + z h''/h')` on the arc `|z| = r`,
/// `|arg z - pi| <= 0.3`, sampled at 601 angles and refined by golden-section
/// search around the best sample.
pub fn convexity_min_near_minus_one(ord: &Order, r: f64) -> Result<f64> {
    let f = |t: f64| convexity_transform(ord, unit(t) * r).map(|w| w.re);
    let n = 600;
    let (lo, hi) = (PI - 0.3, PI + 0.3);
    let step = (hi - lo) / n as f64;
    let mut best = (PI, f(PI)?);
    for i in 0..=n {
        let t = lo + step * i as f64;
        let v = f(t)?;
        if v < best.1 {
            best = (t, v);
        }
    }
    let (mut a, mut b) = (best.0 - step, best.0 + step);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    for _ in 0..80 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(best.1.min(f1).min(f2))
}

fn rho_value() -> Result<Check> {
    Ok(Check::from_quantities(
        "rho_value",
        0.0,
        vec![Quantity::value(
            "5(2^(1/5)-1)",
            rho(),
            Expected::half_open(0.743491, 0.743492),
        )],
    ))
}

fn f_signs() -> Result<Check> {
    let o = Order::new(0.6)?;
    Ok(Check::from_quantities(
        "F_signs",
        0.0,
        vec![
            Quantity::value(
                "F(0.11)",
                F_lhs(&o, 0.11)?,
                Expected::half_open(0.0050, 0.0051),
            ),
            Quantity::value(
                "F(0.114)",
                F_lhs(&o, 0.114)?,
                Expected::Interval {
                    lo: -0.0011,
                    hi: -0.0010,
                    lo_closed: false,
                    hi_closed: true,
                },
            ),
        ],
    ))
}

fn g_monotone() -> Result<Check> {
    let o = Order::new(0.6)?;
    let bound = m_numerator_slope_bound(&o, 0.11, 0.114)?;
    Ok(Check::from_quantities(
        "G_monotone",
        0.0,
        vec![
            Quantity::value(
                "G' lower bound on [0.11, 0.114]",
                bound,
                Expected::half_open(0.326, 0.327),
            ),
            Quantity::value(
                "G' lower bound sign",
                bound,
                Expected::Above {
                    bound: 0.0,
                    strict: true,
                },
            ),
        ],
    ))
}

/// Maximum of `Im h_alpha(e^{i theta})` over `n` equally spaced angles in
/// `(0, pi)`.
pub fn brute_force_m(ord: &Order, n: usize) -> Result<f64> {
    (1..n)
        .map(|i| h_alpha_on_circle(ord, PI * i as f64 / n as f64).map(|w| w.im))
        .try_fold(f64::NEG_INFINITY, |m, v| v.map(|v| m.max(v)))
}

fn m_35_bound() -> Result<Check> {
    let o = Order::new(0.6)?;
    let five_g = 5.0 * m_numerator(&o, 0.114)?;
    let m = big_M(&o)?;
    let brute = brute_force_m(&o, 100_000)?;
    let theta = critical_theta(&o)?;
    let strictly_below = |bound| Expected::Below {
        bound,
        strict: true,
    };
    Ok(Check::from_quantities(
        "M_35_bound",
        1e-9,
        vec![
            Quantity::value(
                "5 G(0.114)",
                five_g,
                Expected::half_open(0.743487, 0.743488),
            ),
            Quantity::value("M(3/5) < 5 G(0.114)", m, strictly_below(five_g)),
            Quantity::value("M(3/5) < rho", m, strictly_below(rho())),
            Quantity::value(
                "theta_{3/5}",
                theta,
                Expected::Interval {
                    lo: 0.11,
                    hi: 0.114,
                    lo_closed: false,
                    hi_closed: false,
                },
            ),
            Quantity::value(
                "brute-force max Im h on 1e5 angles",
                brute,
                Expected::Interval {
                    lo: m - 1e-9,
                    hi: m + 1e-12,
                    lo_closed: true,
                    hi_closed: true,
                },
            ),
        ],
    ))
}

fn h_monotone() -> Result<Check> {
    let o = Order::new(0.6)?;
    let n = 10_000;
    let end = 4.0 * PI / 9.0;
    let mut max_hp = f64::NEG_INFINITY;
    let mut min_h = f64::INFINITY;
    for i in 1..n {
        let t = end * i as f64 / n as f64;
        max_hp = max_hp.max(m_denominator_prime(&o, t)?);
        min_h = min_h.min(m_denominator(&o, t)?);
    }
    Ok(Check::from_quantities(
        "H_monotone",
        0.0,
        vec![
            Quantity::value(
                "max H' on (0, 4 pi/9)",
                max_hp,
                Expected::Below {
                    bound: 0.0,
                    strict: true,
                },
            ),
            Quantity::value(
                "min H on (0, 4 pi/9)",
                min_h,
                Expected::Above {
                    bound: 0.0,
                    strict: true,
                },
            ),
        ],
    ))
}

/// Samples of `v_half` on `(0, pi)`: geometric from `1e-12` to `1e-2`, then
/// uniform.
pub fn v_half_samples() -> Vec<f64> {
    let geometric = (0..=1000).map(|i| 1e-12 * 1e10f64.powf(i as f64 / 1000.0));
    let uniform = (1..10_000).map(|i| 1e-2 + (PI - 1e-2) * i as f64 / 10_000.0);
    geometric.chain(uniform).map(v_half).collect()
}

fn m_half() -> Result<Check> {
    let sup = v_half_samples()
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(Check::from_quantities(
        "M_half",
        1e-4,
        vec![
            Quantity::value(
                "sup v_half",
                sup,
                Expected::Near {
                    target: FRAC_PI_2,
                    tol: 1e-4,
                },
            ),
            Quantity::value(
                "no sample above pi/2",
                sup,
                Expected::Below {
                    bound: FRAC_PI_2 + 1e-12,
                    strict: false,
                },
            ),
        ],
    ))
}

fn kustner_consistency() -> Result<Check> {
    let mut worst = 0.0f64;
    let mut details = Vec::new();
    for a in KUSTNER_ALPHAS {
        let o = Order::new(a)?;
        let inf = kustner_inf(&o)?;
        let mins = KUSTNER_RADII
            .iter()
            .map(|&r| convexity_min_near_minus_one(&o, r))
            .collect::<Result<Vec<_>>>()?;
        worst = worst.max((mins[mins.len() - 1] - inf).abs());
        for (r, m) in KUSTNER_RADII.iter().zip(&mins) {
            details.push(Quantity::value(
                format!("alpha={a} min at r={r}"),
                *m,
                Expected::Above {
                    bound: inf - 1e-6,
                    strict: false,
                },
            ));
        }
        let decreasing = mins.windows(2).all(|w| w[1] <= w[0]);
        details.push(Quantity::new(
            format!("alpha={a} minima decrease with r"),
            Measured::Verdict(
                if decreasing {
                    "decreasing"
                } else {
                    "not decreasing"
                }
                .into(),
            ),
            Expected::Verdict {
                verdict: "decreasing".into(),
            },
        ));
    }
    let mut quantities = vec![Quantity::value(
        "max |min - inf| at r = 1 - 1e-6",
        worst,
        Expected::Below {
            bound: KUSTNER_TOL,
            strict: false,
        },
    )];
    quantities.extend(details);
    Ok(Check::from_quantities(
        "kustner_consistency",
        KUSTNER_TOL,
        quantities,
    ))
}

fn no_violations(label: String, count: usize) -> Quantity {
    Quantity::value(
        label,
        count as f64,
        Expected::Below {
            bound: 0.0,
            strict: false,
        },
    )
}

fn subordination(seed: u64, opts: &VerifyOptions) -> Result<Check> {
    let mut total = 0;
    let mut details = Vec::new();
    for (i, &a) in SWEEP_ALPHAS.iter().enumerate() {
        let r = subordination_sweep(
            &Order::new(a)?,
            trial_seed(seed, 100 + i as u64),
            opts.trials,
            opts.points,
            SUBORDINATION_TOL,
        )?;
        total += r.violation_count;
        details.push(no_violations(
            format!("alpha={a} violations"),
            r.violation_count,
        ));
    }
    let mut quantities = vec![no_violations("membership violations".into(), total)];
    quantities.extend(details);
    Ok(Check::from_quantities(
        "subordination_sweep",
        SUBORDINATION_TOL,
        quantities,
    ))
}

fn growth(seed: u64, opts: &VerifyOptions) -> Result<Check> {
    let mut total = 0;
    let mut details = Vec::new();
    for (i, &a) in SWEEP_ALPHAS.iter().enumerate() {
        let r = growth_sweep(
            &Order::new(a)?,
            trial_seed(seed, 200 + i as u64),
            opts.trials,
            36,
        )?;
        total += r.violation_count;
        details.push(no_violations(
            format!("alpha={a} violations"),
            r.violation_count,
        ));
    }
    let odd = odd_sweep(
        trial_seed(seed, 300),
        opts.trials.min(50),
        &PolarGrid::new(12, 36, 0.999),
    )?;
    details.push(no_violations(
        "odd alpha=0 violations".into(),
        odd.violation_count,
    ));
    let mut quantities = vec![no_violations(
        "growth and distortion violations".into(),
        total,
    )];
    quantities.extend(details);
    Ok(Check::from_quantities(
        "growth_sweep",
        crate::herglotz::sweep::GROWTH_TOL,
        quantities,
    ))
}

fn starlike(seed: u64, opts: &VerifyOptions) -> Result<Check> {
    let r = starlike_sweep(
        &Order::new(0.6)?,
        trial_seed(seed, 400),
        opts.pairs,
        &starlike_grid(),
    )?;
    let count = |f: &dyn Fn(&crate::herglotz::sweep::PairRecord) -> bool| {
        r.pairs.iter().filter(|p| !f(p)).count()
    };
    Ok(Check::from_quantities(
        "starlike_avg",
        STARLIKE_TOL,
        vec![
            Quantity::value(
                "min Re[z h'/h] over all pairs",
                r.min_overall,
                Expected::Above {
                    bound: -STARLIKE_TOL,
                    strict: false,
                },
            ),
            no_violations(
                "pairs failing the covering radius".into(),
                count(&|p| p.covering),
            ),
            no_violations(
                "pairs exceeding M(3/5)".into(),
                count(&|p| p.im_bound == Some(true)),
            ),
        ],
    ))
}

fn counterexample() -> Result<Check> {
    let r = counterexample_check();
    let near = |target, tol| Expected::Near { target, tol };
    Ok(Check::from_quantities(
        "counterexample",
        1e-12,
        vec![
            Quantity::new(
                "verdict",
                Measured::Verdict(r.verdict.clone()),
                Expected::Verdict {
                    verdict: "f(z)/z is not subordinate to H2".into(),
                },
            ),
            Quantity::value("Alexander sum", r.alexander.sum, near(0.59, 1e-12)),
            Quantity::value(
                "fixed-point residual",
                r.fixed_point_residual,
                Expected::Below {
                    bound: 1e-15,
                    strict: false,
                },
            ),
            Quantity::value(
                "distance of f'=1 roots from +-i sqrt(3/10)",
                r.unit_derivative_error,
                Expected::Below {
                    bound: 1e-12,
                    strict: false,
                },
            ),
            Quantity::value(
                "Re f'(i/sqrt 2)",
                r.derivative_at_fixed_point.re,
                near(1.01, 1e-12),
            ),
            Quantity::value(
                "Im f'(i/sqrt 2)",
                r.derivative_at_fixed_point.im,
                near(0.0, 1e-12),
            ),
        ],
    ))
}

fn run(name: &str, body: impl FnOnce() -> Result<Check>) -> Check {
    body().unwrap_or_else(|e| Check::failed(name, e))
}

/// Every check at the default sizes.
pub fn verify_all(seed: u64) -> VerificationReport {
    verify_all_with(seed, &VerifyOptions::default())
}

/// Every check, with the randomized ones sized by `opts`. Failures of any
/// kind, including evaluation errors, are recorded in the report.
pub fn verify_all_with(seed: u64, opts: &VerifyOptions) -> VerificationReport {
    let mut checks = vec![
        run("rho_value", rho_value),
        run("F_signs", f_signs),
        run("G_monotone", g_monotone),
        run("M_35_bound", m_35_bound),
        run("H_monotone", h_monotone),
        run("M_half", m_half),
        run("kustner_consistency", kustner_consistency),
        run("subordination_sweep", || subordination(seed, opts)),
        run("growth_sweep", || growth(seed, opts)),
        run("starlike_avg", || starlike(seed, opts)),
        run("counterexample", counterexample),
    ];
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let overall = !checks.is_empty() && checks.iter().all(|c| c.pass);
    VerificationReport {
        seed,
        checks,
        overall,
    }
}
