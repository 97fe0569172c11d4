//! Seeded randomized sweeps over generated members of `K(alpha)`.
//!
//! Trial `i` of a sweep with base seed `s` uses the seed produced by a ChaCha8
//! stream keyed by `s` at stream index `i`, so every trial is a pure function
//! of `(s, i)`. Trials run through rayon and are collected in index order,
//! which makes parallel and sequential runs byte-identical.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    covering_radius_check, im_ratio_bound_sampled, min_re_star_sampled, random_measure,
    sample_grid, AnalyticMap, AtomicMeasure, GeneratedFunction,
};
use crate::boundary::{contains, Membership};
use crate::error::Result;
use crate::extremal::big_M;
use crate::family::{h_alpha, k_alpha, Order};
use crate::grid::PolarGrid;
use crate::json::{serialize_complex, serialize_f64, serialize_opt_f64};
use crate::Complex;

pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_POINTS: usize = 100;
pub const DEFAULT_PAIRS: usize = 100;
/// Radial band used when testing `f(z)/z` against `D_alpha`.
pub const SUBORDINATION_TOL: f64 = 1e-6;
pub const GROWTH_TOL: f64 = 1e-9;
/// Starlikeness passes when `min Re[z h'/h] >= -STARLIKE_TOL`.
pub const STARLIKE_TOL: f64 = 1e-9;
pub const GROWTH_RADII: [f64; 3] = [0.5, 0.9, 0.99];
/// Largest `|z|` drawn in the subordination sweep.
pub const SUBORDINATION_RADIUS: f64 = 0.99;
/// Atoms per generated measure are drawn from `1..=MAX_ATOMS`.
pub const MAX_ATOMS: u64 = 4;

/// Seed of trial `index` under `base`.
pub fn trial_seed(base: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(index);
    rng.next_u64()
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// The generated function used by a trial: `1..=4` atoms (doubled if `odd`).
pub fn generated_for_trial(ord: &Order, seed: u64, odd: bool) -> Result<GeneratedFunction> {
    let m = 1 + (trial_rng(seed, 1).next_u64() % MAX_ATOMS) as usize;
    Ok(GeneratedFunction::new(*ord, random_measure(seed, m, odd)?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub invariant: String,
    #[serde(serialize_with = "serialize_complex")]
    pub z: Complex,
    #[serde(serialize_with = "serialize_f64")]
    pub value: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub limit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub seed: u64,
    pub measure: AtomicMeasure,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub sweep: String,
    #[serde(serialize_with = "serialize_f64")]
    pub alpha: f64,
    pub base_seed: u64,
    pub trials: usize,
    pub violation_count: usize,
    pub records: Vec<TrialRecord>,
}

impl TrialReport {
    fn assemble(sweep: &str, ord: &Order, base_seed: u64, records: Vec<TrialRecord>) -> Self {
        Self {
            sweep: sweep.to_owned(),
            alpha: ord.alpha(),
            base_seed,
            trials: records.len(),
            violation_count: records.iter().map(|r| r.violations.len()).sum(),
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

fn run_trials<F>(trials: usize, body: F) -> Result<Vec<TrialRecord>>
where
    F: Fn(usize) -> Result<TrialRecord> + Sync + Send,
{
    (0..trials).into_par_iter().map(body).collect()
}

/// `f(z)/z` must lie in `D_alpha` for every member of the class.
///
/// Each trial draws a generated function and `points` values of `z` with
/// `0 < |z| <= 0.99` (radius `0.99 (1 - U)^(1/4)`, weighted toward the
/// circle) and records every `z` for which the membership oracle answers
/// [`Membership::Outside`] at tolerance `tol` ([`SUBORDINATION_TOL`] by
/// default).
pub fn subordination_sweep(
    ord: &Order,
    base_seed: u64,
    trials: usize,
    points: usize,
    tol: f64,
) -> Result<TrialReport> {
    let records = run_trials(trials, |index| {
        let seed = trial_seed(base_seed, index as u64);
        let f = generated_for_trial(ord, seed, false)?;
        let mut rng = trial_rng(seed, 2);
        let mut violations = Vec::new();
        for _ in 0..points {
            let r = SUBORDINATION_RADIUS * (1.0 - rng.random::<f64>()).powf(0.25);
            let z = Complex::from_polar(r, 2.0 * PI * rng.random::<f64>());
            let w = f.f_value(z) / z;
            if contains(ord, w, tol)? == Membership::Outside {
                violations.push(Violation {
                    invariant: "subordination".into(),
                    z,
                    value: (w - 1.0).norm(),
                    limit: f64::NAN,
                });
            }
        }
        Ok(TrialRecord {
            index,
            seed,
            measure: f.measure().clone(),
            violations,
        })
    })?;
    Ok(TrialReport::assemble(
        "subordination",
        ord,
        base_seed,
        records,
    ))
}

/// Growth and distortion bounds on the circles `|z| = r`, `r` in
/// [`GROWTH_RADII`]:
/// `h_alpha(-r) <= Re f(z)/z <= h_alpha(r)` and
/// `-k_alpha(-r) <= |f(z)| <= k_alpha(r)`.
pub fn growth_sweep(
    ord: &Order,
    base_seed: u64,
    trials: usize,
    n_angles: usize,
) -> Result<TrialReport> {
    let bounds: Vec<[f64; 4]> = GROWTH_RADII
        .iter()
        .map(|&r| {
            let plus = Complex::new(r, 0.0);
            Ok([
                h_alpha(ord, -plus)?.re,
                h_alpha(ord, plus)?.re,
                -k_alpha(ord, -plus)?.re,
                k_alpha(ord, plus)?.re,
            ])
        })
        .collect::<Result<_>>()?;
    let records = run_trials(trials, |index| {
        let seed = trial_seed(base_seed, index as u64);
        let f = generated_for_trial(ord, seed, false)?;
        let mut violations = Vec::new();
        for j in 0..n_angles {
            let theta = 2.0 * PI * j as f64 / n_angles as f64;
            let ray = f.values_on_ray(theta, &GROWTH_RADII);
            for ((&r, v), b) in GROWTH_RADII.iter().zip(ray).zip(&bounds) {
                let z = Complex::from_polar(r, theta);
                let re = (v / z).re;
                let modulus = v.norm();
                let rtol = GROWTH_TOL * b[3].max(1.0);
                let mut push = |invariant: &str, value: f64, limit: f64| {
                    violations.push(Violation {
                        invariant: invariant.into(),
                        z,
                        value,
                        limit,
                    })
                };
                if re < b[0] - GROWTH_TOL {
                    push("growth-lower", re, b[0]);
                }
                if re > b[1] + GROWTH_TOL {
                    push("growth-upper", re, b[1]);
                }
                if modulus < b[2] - rtol {
                    push("robertson-lower", modulus, b[2]);
                }
                if modulus > b[3] + rtol {
                    push("robertson-upper", modulus, b[3]);
                }
            }
        }
        Ok(TrialRecord {
            index,
            seed,
            measure: f.measure().clone(),
            violations,
        })
    })?;
    Ok(TrialReport::assemble("growth", ord, base_seed, records))
}

/// Odd generated functions at `alpha = 0`: `f(-z) = -f(z)` to `1e-10`, and
/// `|Im f(z)/z| < pi/4` (they have `f''(0) = 0`).
pub fn odd_sweep(base_seed: u64, trials: usize, grid: &PolarGrid) -> Result<TrialReport> {
    let ord = Order::new(0.0)?;
    let records = run_trials(trials, |index| {
        let seed = trial_seed(base_seed, index as u64);
        let f = generated_for_trial(&ord, seed, true)?;
        let sampled = sample_grid(&f, grid);
        let mut violations = Vec::new();
        let half = grid.n_angles / 2;
        for (k, (&z, &v)) in sampled.points.iter().zip(&sampled.values).enumerate() {
            let im = (v / z).im.abs();
            if im >= FRAC_PI_4 + 1e-9 {
                violations.push(Violation {
                    invariant: "im-ratio-pi-over-4".into(),
                    z,
                    value: im,
                    limit: FRAC_PI_4,
                });
            }
            if grid.n_angles.is_multiple_of(2) {
                // the point at angle + pi sits half a turn later on the grid
                let (a, r) = (k / grid.n_radii, k % grid.n_radii);
                let opposite = ((a + half) % grid.n_angles) * grid.n_radii + r;
                let sum = (v + sampled.values[opposite]).norm();
                if sum > 1e-10 * v.norm().max(1.0) {
                    violations.push(Violation {
                        invariant: "oddness".into(),
                        z,
                        value: sum,
                        limit: 1e-10,
                    });
                }
            }
        }
        Ok(TrialRecord {
            index,
            seed,
            measure: f.measure().clone(),
            violations,
        })
    })?;
    Ok(TrialReport::assemble("odd", &ord, base_seed, records))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairRecord {
    pub index: usize,
    pub seeds: [u64; 2],
    pub measures: [AtomicMeasure; 2],
    /// `min Re[z h'/h]` for `h = (f + g)/2` over the grid.
    #[serde(serialize_with = "serialize_f64")]
    pub min_re_star: f64,
    /// Both `f(D)` and `g(D)` cover the disk of radius `-k_alpha(-1)` (scaled check).
    pub covering: bool,
    /// `|Im f/z|`, `|Im g/z|` stay below `M(alpha)`; absent for `alpha < 1/2`.
    pub im_bound: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarlikeReport {
    #[serde(serialize_with = "serialize_f64")]
    pub alpha: f64,
    pub base_seed: u64,
    #[serde(serialize_with = "serialize_f64")]
    pub rho: f64,
    #[serde(serialize_with = "serialize_opt_f64")]
    pub m_bound: Option<f64>,
    #[serde(serialize_with = "serialize_f64")]
    pub min_overall: f64,
    pub all_starlike: bool,
    pub pairs: Vec<PairRecord>,
}

/// `(f + g)/2` for random pairs `f, g` in `K(alpha)`: the minimum of
/// `Re[z h'/h]` on the grid, together with the two hypotheses used to prove
/// starlikeness (covering radius `-k_alpha(-1)` and `|Im f/z| < M(alpha)`).
pub fn starlike_sweep(
    ord: &Order,
    base_seed: u64,
    pairs: usize,
    grid: &PolarGrid,
) -> Result<StarlikeReport> {
    let rho = -k_alpha(ord, Complex::new(-1.0, 0.0))?.re;
    let m_bound = if ord.alpha() >= 0.5 {
        Some(big_M(ord)?)
    } else {
        None
    };
    let records: Vec<PairRecord> = (0..pairs)
        .into_par_iter()
        .map(|index| {
            let seeds = [
                trial_seed(base_seed, 2 * index as u64),
                trial_seed(base_seed, 2 * index as u64 + 1),
            ];
            let f = generated_for_trial(ord, seeds[0], false)?;
            let g = generated_for_trial(ord, seeds[1], false)?;
            let fs = sample_grid(&f, grid);
            let gs = sample_grid(&g, grid);
            let min_re_star = min_re_star_sampled(&[&fs, &gs], &[0.5, 0.5])?;
            let covering = covering_radius_check(&f, rho, grid.n_angles).pass
                && covering_radius_check(&g, rho, grid.n_angles).pass;
            let im_bound = m_bound.map(|m| {
                im_ratio_bound_sampled(&fs, m).pass && im_ratio_bound_sampled(&gs, m).pass
            });
            Ok(PairRecord {
                index,
                seeds,
                measures: [f.measure().clone(), g.measure().clone()],
                min_re_star,
                covering,
                im_bound,
            })
        })
        .collect::<Result<_>>()?;
    let min_overall = records
        .iter()
        .map(|r| r.min_re_star)
        .fold(f64::INFINITY, f64::min);
    Ok(StarlikeReport {
        alpha: ord.alpha(),
        base_seed,
        rho,
        m_bound,
        min_overall,
        all_starlike: records.iter().all(|r| r.min_re_star >= -STARLIKE_TOL),
        pairs: records,
    })
}
