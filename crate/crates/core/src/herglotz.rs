//! Random members of `K(alpha)` built from atomic Herglotz data.
//!
//! A probability measure `sum lambda_j delta_{t_j}` on the circle gives
//!
//! `1 + z f''/f' = sum lambda_j (1 + (1 - 2 alpha) z e^{-i t_j}) / (1 - z e^{-i t_j})`,
//!
//! whose real part exceeds `alpha`; integrating once,
//! `f'(z) = prod_j (1 - z e^{-i t_j})^(-beta lambda_j)` in closed form. Only
//! `f` itself needs quadrature.

pub mod sweep;

use std::f64::consts::PI;
use std::sync::OnceLock;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cmath::log1p;
use crate::error::{domain, Error, Result};
use crate::family::{k_alpha, k_alpha_prime, Order};
use crate::grid::PolarGrid;
use crate::json::{serialize_complex, serialize_f64, serialize_opt_f64};
use crate::Complex;

/// Gauss-Legendre nodes per integration segment.
pub const QUADRATURE_NODES: usize = 64;
/// Longest integration segment.
pub const MAX_SEGMENT: f64 = 0.1;

fn gauss_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = std::num::NonZeroUsize::new(QUADRATURE_NODES).expect("non-zero");
        gauss_quad::legendre::GaussLegendre::new(n)
            .as_node_weight_pairs()
            .to_vec()
    })
}

/// A function analytic on the disk with `f(0) = 0`, `f'(0) = 1`, exposing
/// what the grid estimates need.
pub trait AnalyticMap {
    fn value(&self, z: Complex) -> Complex;
    fn derivative(&self, z: Complex) -> Complex;
    /// `f''(z) / f'(z)`.
    fn log_derivative(&self, z: Complex) -> Complex;

    /// Values at `r e^{i angle}` for each `r` in `radii`.
    fn values_on_ray(&self, angle: f64, radii: &[f64]) -> Vec<Complex> {
        radii
            .iter()
            .map(|&r| self.value(Complex::from_polar(r, angle)))
            .collect()
    }
}

/// `k_alpha` itself, through its closed forms.
#[derive(Debug, Clone, Copy)]
pub struct ExtremalFunction(pub Order);

impl AnalyticMap for ExtremalFunction {
    fn value(&self, z: Complex) -> Complex {
        k_alpha(&self.0, z).expect("k_alpha on the open disk")
    }

    fn derivative(&self, z: Complex) -> Complex {
        k_alpha_prime(&self.0, z).expect("k_alpha' on the open disk")
    }

    fn log_derivative(&self, z: Complex) -> Complex {
        self.0.beta() / (1.0 - z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Atom {
    #[serde(serialize_with = "serialize_f64")]
    pub angle: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub weight: f64,
}

/// A finite probability measure on the circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
    odd: bool,
}

fn same_angle(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(2.0 * PI);
    d < 1e-12 || 2.0 * PI - d < 1e-12
}

impl AtomicMeasure {
    /// Validates positivity, total mass 1 (to `1e-12`), distinct angles in
    /// `[0, 2 pi)`, and, when `odd` is set, invariance under `t -> t + pi`
    /// with equal weights.
    pub fn new(atoms: Vec<Atom>, odd: bool) -> Result<Self> {
        if atoms.is_empty() {
            return Err(domain("a measure needs at least one atom"));
        }
        for a in &atoms {
            if !(a.weight > 0.0) || !a.weight.is_finite() {
                return Err(domain(format!("atom weight {} is not positive", a.weight)));
            }
            if !(0.0..2.0 * PI).contains(&a.angle) {
                return Err(domain(format!("atom angle {} outside [0, 2 pi)", a.angle)));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(domain(format!("atom weights sum to {total}, not 1")));
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[i + 1..].iter().any(|b| same_angle(a.angle, b.angle)) {
                return Err(domain(format!("repeated atom angle {}", a.angle)));
            }
        }
        if odd {
            for a in &atoms {
                let partner = atoms.iter().find(|b| same_angle(b.angle, a.angle + PI));
                match partner {
                    Some(b) if (b.weight - a.weight).abs() <= 1e-15 => {}
                    _ => {
                        return Err(domain(format!(
                            "atom at {} has no equal-weight partner at angle + pi",
                            a.angle
                        )))
                    }
                }
            }
        }
        Ok(Self { atoms, odd })
    }

    /// The unit mass at `angle`; generates a rotation of `k_alpha`.
    pub fn point_mass(angle: f64) -> Self {
        Self::new(
            vec![Atom {
                angle: angle.rem_euclid(2.0 * PI),
                weight: 1.0,
            }],
            false,
        )
        .expect("a unit point mass is valid")
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }
}

/// `m` atoms with uniform angles and weights from normalized exponential
/// draws (uniform on the simplex). With `odd`, each atom is split into two
/// half-weight atoms at `t` and `t + pi`, giving `2m` atoms and an odd `f`.
/// Deterministic in `seed`.
pub fn random_measure(seed: u64, m: usize, odd: bool) -> Result<AtomicMeasure> {
    if m == 0 {
        return Err(domain("random_measure needs m >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let angles: Vec<f64> = (0..m).map(|_| rng.random::<f64>() * 2.0 * PI).collect();
    let draws: Vec<f64> = (0..m)
        .map(|_| (-(1.0 - rng.random::<f64>()).ln()).max(f64::MIN_POSITIVE))
        .collect();
    let total: f64 = draws.iter().sum();
    let mut atoms = Vec::with_capacity(if odd { 2 * m } else { m });
    for (&t, &d) in angles.iter().zip(&draws) {
        let w = d / total;
        if odd {
            atoms.push(Atom {
                angle: t,
                weight: 0.5 * w,
            });
            atoms.push(Atom {
                angle: (t + PI).rem_euclid(2.0 * PI),
                weight: 0.5 * w,
            });
        } else {
            atoms.push(Atom {
                angle: t,
                weight: w,
            });
        }
    }
    AtomicMeasure::new(atoms, odd)
}

/// A member of `K(alpha)` determined by an atomic measure.
#[derive(Debug, Clone)]
pub struct GeneratedFunction {
    order: Order,
    measure: AtomicMeasure,
    /// `e^{-i t_j}`
    rotations: Vec<Complex>,
    /// `beta lambda_j`
    exponents: Vec<f64>,
}

impl GeneratedFunction {
    pub fn new(order: Order, measure: AtomicMeasure) -> Self {
        let rotations = measure
            .atoms
            .iter()
            .map(|a| Complex::from_polar(1.0, -a.angle))
            .collect();
        let exponents = measure
            .atoms
            .iter()
            .map(|a| order.beta() * a.weight)
            .collect();
        Self {
            order,
            measure,
            rotations,
            exponents,
        }
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn measure(&self) -> &AtomicMeasure {
        &self.measure
    }

    /// `f'(z) = prod_j (1 - z e^{-i t_j})^(-beta lambda_j)`.
    pub fn f_prime(&self, z: Complex) -> Complex {
        let log: Complex = self
            .rotations
            .iter()
            .zip(&self.exponents)
            .map(|(&u, &e)| log1p(-z * u) * e)
            .sum();
        (-log).exp()
    }

    /// `f(z)`, by Gauss-Legendre quadrature of `f'` along `[0, z]`.
    pub fn f_value(&self, z: Complex) -> Complex {
        self.integrate(Complex::new(0.0, 0.0), z)
    }

    fn distance_to_singularity(&self, p: Complex) -> f64 {
        self.rotations
            .iter()
            .map(|u| (p - u.conj()).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// `int_a^b f'(zeta) d zeta` along the segment, split into pieces no
    /// longer than [`MAX_SEGMENT`] and no longer than half the distance from
    /// their start to the nearest singularity `e^{i t_j}`.
    fn integrate(&self, a: Complex, b: Complex) -> Complex {
        let rule = gauss_rule();
        let mut acc = Complex::new(0.0, 0.0);
        let mut p = a;
        loop {
            let remaining = (b - p).norm();
            if remaining == 0.0 {
                break;
            }
            let step = MAX_SEGMENT.min(0.5 * self.distance_to_singularity(p));
            let q = if step >= remaining {
                b
            } else {
                p + (b - p) * (step / remaining)
            };
            let mid = 0.5 * (p + q);
            let half = 0.5 * (q - p);
            let mut seg = Complex::new(0.0, 0.0);
            for &(x, w) in rule {
                seg += self.f_prime(mid + half * x) * w;
            }
            acc += seg * half;
            if q == b {
                break;
            }
            p = q;
        }
        acc
    }
}

impl AnalyticMap for GeneratedFunction {
    fn value(&self, z: Complex) -> Complex {
        self.f_value(z)
    }

    fn derivative(&self, z: Complex) -> Complex {
        self.f_prime(z)
    }

    fn log_derivative(&self, z: Complex) -> Complex {
        self.rotations
            .iter()
            .zip(&self.exponents)
            .map(|(&u, &e)| u * e / (1.0 - z * u))
            .sum()
    }

    /// Integrates outward once, accumulating between consecutive radii.
    fn values_on_ray(&self, angle: f64, radii: &[f64]) -> Vec<Complex> {
        let mut order: Vec<usize> = (0..radii.len()).collect();
        order.sort_by(|&i, &j| radii[i].total_cmp(&radii[j]));
        let mut out = vec![Complex::new(0.0, 0.0); radii.len()];
        let mut prev = Complex::new(0.0, 0.0);
        let mut acc = Complex::new(0.0, 0.0);
        for i in order {
            let z = Complex::from_polar(radii[i], angle);
            acc += self.integrate(prev, z);
            out[i] = acc;
            prev = z;
        }
        out
    }
}

/// Values and derivatives of a map on every point of a polar grid, laid out
/// angle-major like [`PolarGrid::points`].
#[derive(Debug, Clone)]
pub struct GridValues {
    pub points: Vec<Complex>,
    pub values: Vec<Complex>,
    pub derivatives: Vec<Complex>,
}

pub fn sample_grid<F: AnalyticMap + ?Sized>(f: &F, grid: &PolarGrid) -> GridValues {
    let radii = grid.radii();
    let mut points = Vec::with_capacity(grid.len());
    let mut values = Vec::with_capacity(grid.len());
    let mut derivatives = Vec::with_capacity(grid.len());
    for angle in grid.angles() {
        let ray = f.values_on_ray(angle, &radii);
        for (&r, v) in radii.iter().zip(ray) {
            let z = Complex::from_polar(r, angle);
            points.push(z);
            values.push(v);
            derivatives.push(f.derivative(z));
        }
    }
    GridValues {
        points,
        values,
        derivatives,
    }
}

/// Minimum of `Re(1 + z f''/f')` over the grid; for a member of `K(alpha)` it
/// is at least `alpha` up to rounding.
pub fn convex_order_estimate<F: AnalyticMap + ?Sized>(f: &F, grid: &PolarGrid) -> f64 {
    grid.points()
        .into_iter()
        .map(|z| (1.0 + z * f.log_derivative(z)).re)
        .fold(f64::INFINITY, f64::min)
}

fn check_weights(n: usize, weights: &[f64]) -> Result<()> {
    if n == 0 || weights.len() != n {
        return Err(domain(format!(
            "need one weight per function, got {} for {n}",
            weights.len()
        )));
    }
    if weights.iter().any(|&w| !(w > 0.0)) {
        return Err(domain("weights must be positive"));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(domain(format!("weights sum to {total}, not 1")));
    }
    Ok(())
}

/// Minimum of `Re[z h'(z) / h(z)]` over precomputed grids for the convex
/// combination `h = sum w_i f_i`.
pub fn min_re_star_sampled(samples: &[&GridValues], weights: &[f64]) -> Result<f64> {
    check_weights(samples.len(), weights)?;
    let n = samples[0].points.len();
    if samples.iter().any(|s| s.points.len() != n) {
        return Err(domain("grid samples of different sizes"));
    }
    let mut min = f64::INFINITY;
    for k in 0..n {
        let z = samples[0].points[k];
        let mut h = Complex::new(0.0, 0.0);
        let mut hp = Complex::new(0.0, 0.0);
        for (s, &w) in samples.iter().zip(weights) {
            h += s.values[k] * w;
            hp += s.derivatives[k] * w;
        }
        if h.norm() == 0.0 {
            return Err(Error::Evaluation(format!(
                "convex combination vanishes at z = {z}"
            )));
        }
        min = min.min((z * hp / h).re);
    }
    Ok(min)
}

/// Minimum over the grid of `Re[z h'(z)/h(z)]` for `h = sum w_i f_i`;
/// positive values certify starlikeness on the sampled radii.
pub fn min_re_star<F: AnalyticMap>(fs: &[F], weights: &[f64], grid: &PolarGrid) -> Result<f64> {
    check_weights(fs.len(), weights)?;
    let sampled: Vec<GridValues> = fs.iter().map(|f| sample_grid(f, grid)).collect();
    let refs: Vec<&GridValues> = sampled.iter().collect();
    min_re_star_sampled(&refs, weights)
}

/// Radii at which the scaled covering property is checked.
pub const COVERING_RADII: [f64; 3] = [0.9, 0.99, 0.999];
const COVERING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoveringWitness {
    #[serde(serialize_with = "serialize_f64")]
    pub r: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub theta: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub modulus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoveringVerdict {
    pub pass: bool,
    /// Smallest `|f(r e^{i theta})| / (rho r)` seen.
    #[serde(serialize_with = "serialize_f64")]
    pub min_ratio: f64,
    /// The point attaining `min_ratio` when the check fails.
    pub witness: Option<CoveringWitness>,
}

/// Checks `|f(r e^{i theta})| >= rho r` on `n_angles` directions for each of
/// [`COVERING_RADII`], i.e. that `f(D_r)` covers the disk of radius `rho r`.
pub fn covering_radius_check<F: AnalyticMap + ?Sized>(
    f: &F,
    rho: f64,
    n_angles: usize,
) -> CoveringVerdict {
    let mut worst = (
        f64::INFINITY,
        CoveringWitness {
            r: 0.0,
            theta: 0.0,
            modulus: 0.0,
        },
    );
    for j in 0..n_angles {
        let theta = 2.0 * PI * j as f64 / n_angles as f64;
        let ray = f.values_on_ray(theta, &COVERING_RADII);
        for (&r, v) in COVERING_RADII.iter().zip(ray) {
            let ratio = v.norm() / (rho * r);
            if ratio < worst.0 {
                worst = (
                    ratio,
                    CoveringWitness {
                        r,
                        theta,
                        modulus: v.norm(),
                    },
                );
            }
        }
    }
    let pass = worst.0 >= 1.0 - COVERING_TOL;
    CoveringVerdict {
        pass,
        min_ratio: worst.0,
        witness: if pass { None } else { Some(worst.1) },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioVerdict {
    pub pass: bool,
    #[serde(serialize_with = "serialize_f64")]
    pub max_abs_im: f64,
    #[serde(serialize_with = "serialize_complex")]
    pub at: Complex,
    #[serde(serialize_with = "serialize_opt_f64")]
    pub bound: Option<f64>,
}

/// `max |Im f(z)/z|` over sampled grid values, compared with `bound`.
pub fn im_ratio_bound_sampled(samples: &GridValues, bound: f64) -> RatioVerdict {
    let mut max = (0.0, Complex::new(0.0, 0.0));
    for (z, v) in samples.points.iter().zip(&samples.values) {
        let m = (v / z).im.abs();
        if m > max.0 {
            max = (m, *z);
        }
    }
    RatioVerdict {
        pass: max.0 <= bound,
        max_abs_im: max.0,
        at: max.1,
        bound: Some(bound),
    }
}

/// Checks `|Im f(z)/z| <= bound` on the grid.
pub fn im_ratio_bound_check<F: AnalyticMap + ?Sized>(
    f: &F,
    bound: f64,
    grid: &PolarGrid,
) -> RatioVerdict {
    im_ratio_bound_sampled(&sample_grid(f, grid), bound)
}
