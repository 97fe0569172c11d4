//! Coefficient criteria and the special functions `q_gamma`, `H1`, `H2`,
//! plus the check showing that a convex odd polynomial escapes `H2`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::Serialize;

use crate::cmath::log1p;
use crate::error::{domain, Result};
use crate::grid::PolarGrid;
use crate::herglotz::AnalyticMap;
use crate::json::{serialize_complex, serialize_f64};
use crate::Complex;

/// `z + a_2 z^2 + ... + a_n z^n`, stored as `[a_1, a_2, ..., a_n]` with
/// `a_1 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialFunction {
    coeffs: Vec<Complex>,
}

impl PolynomialFunction {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        match coeffs.first() {
            Some(a1) if *a1 == Complex::new(1.0, 0.0) => {}
            _ => return Err(domain("the coefficient of z must be exactly 1")),
        }
        if coeffs
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(domain("coefficients must be finite"));
        }
        Ok(Self { coeffs })
    }

    /// `z + z^3/100 + z^5/50`.
    pub fn counterexample() -> Self {
        let c = |x: f64| Complex::new(x, 0.0);
        Self {
            coeffs: vec![c(1.0), c(0.0), c(0.01), c(0.0), c(0.02)],
        }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// `a_n`, zero beyond the degree.
    pub fn coefficient(&self, n: usize) -> Complex {
        if n == 0 {
            return Complex::new(0.0, 0.0);
        }
        self.coeffs.get(n - 1).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    fn horner(&self, z: Complex, order: usize) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for n in (1..=self.coeffs.len()).rev() {
            if n < order {
                break;
            }
            let falling = (0..order).map(|k| (n - k) as f64).product::<f64>();
            let power = (n - order) as i32;
            acc += self.coeffs[n - 1] * falling * z.powi(power);
        }
        acc
    }
}

impl AnalyticMap for PolynomialFunction {
    fn value(&self, z: Complex) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for a in self.coeffs.iter().rev() {
            acc = (acc + a) * z;
        }
        acc
    }

    fn derivative(&self, z: Complex) -> Complex {
        self.horner(z, 1)
    }

    fn log_derivative(&self, z: Complex) -> Complex {
        self.horner(z, 2) / self.horner(z, 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlexanderVerdict {
    #[serde(serialize_with = "serialize_f64")]
    pub sum: f64,
    pub convex: bool,
}

/// Alexander's sufficient condition for convexity: `sum_{n>=2} n^2 |a_n| <= 1`.
///
/// The sum starts at `n = 2`; including `a_1 = 1` would make the criterion
/// impossible to meet.
pub fn alexander_sum(p: &PolynomialFunction) -> AlexanderVerdict {
    let sum: f64 = (2..=p.degree())
        .map(|n| (n * n) as f64 * p.coefficient(n).norm())
        .sum();
    AlexanderVerdict {
        sum,
        convex: sum <= 1.0,
    }
}

fn check_gamma(gamma: Complex) -> Result<()> {
    if gamma.re < 0.0 || !gamma.re.is_finite() || !gamma.im.is_finite() {
        return Err(domain(format!("q_gamma needs Re gamma >= 0, got {gamma}")));
    }
    Ok(())
}

/// Coefficient of `z^j` in `q_gamma`: `(gamma + 1) / (gamma + j)`.
pub fn q_gamma_coefficient(gamma: Complex, j: usize) -> Result<Complex> {
    check_gamma(gamma)?;
    if j == 0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    Ok((gamma + 1.0) / (gamma + j as f64))
}

/// Largest `|z|` accepted by the truncated `q_gamma` series.
pub const Q_GAMMA_RADIUS: f64 = 0.99;

fn q_gamma_terms(gamma: Complex, z: Complex, n_terms: usize) -> Result<[Complex; 3]> {
    check_gamma(gamma)?;
    if z.norm() > Q_GAMMA_RADIUS * (1.0 + 1e-12) {
        return Err(domain(format!("q_gamma series needs |z| <= 0.99, got {z}")));
    }
    let zero = Complex::new(0.0, 0.0);
    let (mut q, mut dq, mut d2q) = (zero, zero, zero);
    // z^{j-2}, z^{j-1}, z^j
    let mut pow = [zero, Complex::new(1.0, 0.0), z];
    for j in 1..=n_terms {
        let a = (gamma + 1.0) / (gamma + j as f64);
        let jf = j as f64;
        q += a * pow[2];
        dq += a * jf * pow[1];
        if j >= 2 {
            d2q += a * jf * (jf - 1.0) * pow[0];
        }
        pow = [pow[1], pow[2], pow[2] * z];
    }
    Ok([q, dq, d2q])
}

/// `q_gamma(z) = sum_{j>=1} (gamma + 1)/(gamma + j) z^j`, truncated after
/// `n_terms` terms.
pub fn q_gamma(gamma: Complex, z: Complex, n_terms: usize) -> Result<Complex> {
    Ok(q_gamma_terms(gamma, z, n_terms)?[0])
}

/// Minimum of `Re(1 + z q''/q')` over `grid` (radius at most 0.99); the
/// function is convex for `Re gamma >= 0`, so the estimate stays above zero
/// up to truncation.
pub fn q_gamma_convexity_min(gamma: Complex, grid: &PolarGrid, n_terms: usize) -> Result<f64> {
    let mut min = f64::INFINITY;
    for z in grid.points() {
        let [_, dq, d2q] = q_gamma_terms(gamma, z, n_terms)?;
        min = min.min((1.0 + z * d2q / dq).re);
    }
    Ok(min)
}

const SMALL: f64 = 1e-3;

fn atanh_over(w: Complex) -> Complex {
    0.5 * (log1p(w) - log1p(-w)) / w
}

/// Coefficient of `z^n` in `H1`: `1 / (2n + 1)`.
pub fn h1_coefficient(n: usize) -> f64 {
    1.0 / (2 * n + 1) as f64
}

fn odd_reciprocal_series(w: Complex) -> Complex {
    let mut sum = Complex::new(0.0, 0.0);
    let mut pow = Complex::new(1.0, 0.0);
    for n in 0..8 {
        sum += pow * h1_coefficient(n);
        pow *= w;
    }
    sum
}

/// `H1(z) = log((1 + sqrt z)/(1 - sqrt z)) / (2 sqrt z)`, even in `sqrt z`
/// so the branch of the root is immaterial.
pub fn h1(z: Complex) -> Complex {
    if z.norm() < SMALL {
        odd_reciprocal_series(z)
    } else {
        atanh_over(z.sqrt())
    }
}

/// `H2(z) = log((1 + z)/(1 - z)) / (2z) = H1(z^2)`.
pub fn h2(z: Complex) -> Complex {
    if z.norm() < SMALL {
        odd_reciprocal_series(z * z)
    } else {
        atanh_over(z)
    }
}

/// Findings for `f(z) = z + z^3/100 + z^5/50`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub alexander: AlexanderVerdict,
    /// Non-zero solutions of `f(z) = z`.
    #[serde(serialize_with = "serialize_pair")]
    pub fixed_points: [Complex; 2],
    #[serde(serialize_with = "serialize_f64")]
    pub fixed_point_residual: f64,
    /// Non-zero solutions of `f'(z) = 1`.
    #[serde(serialize_with = "serialize_pair")]
    pub unit_derivative_points: [Complex; 2],
    #[serde(serialize_with = "serialize_f64")]
    pub unit_derivative_error: f64,
    #[serde(serialize_with = "serialize_complex")]
    pub derivative_at_fixed_point: Complex,
    pub fixed_point_is_critical: bool,
    pub verdict: String,
    pub pass: bool,
}

fn serialize_pair<S: serde::Serializer>(
    zs: &[Complex; 2],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    for z in zs {
        seq.serialize_element(&crate::json::complex(*z))?;
    }
    seq.end()
}

/// For an odd quintic `z + a3 z^3 + a5 z^5`, the two roots `+-sqrt(w)` of
/// `p w + q w^2 = 0` with `w = z^2 != 0`.
fn nonzero_square_roots(p: Complex, q: Complex) -> [Complex; 2] {
    let root = (-p / q).sqrt();
    [root, -root]
}

/// The fixed points `+-i/sqrt 2` and the points `+-i sqrt(3/10)` where `f' = 1`
/// are distinct, and `f'(i/sqrt 2) = 1.01`. If `f(z)/z` were subordinate to
/// `H2`, univalence of `H1` would force `f' = 1` at every non-zero fixed
/// point, so the polynomial, convex by Alexander's test, is a counterexample.
pub fn counterexample_check() -> CounterexampleReport {
    let f = PolynomialFunction::counterexample();
    let alexander = alexander_sum(&f);
    let (a3, a5) = (f.coefficient(3), f.coefficient(5));

    // f(z) - z = z^3 (a3 + a5 z^2); the closed form of the root is i/sqrt 2
    let fixed_points = [
        Complex::new(0.0, FRAC_1_SQRT_2),
        Complex::new(0.0, -FRAC_1_SQRT_2),
    ];
    let solved = nonzero_square_roots(a3, a5);
    let fixed_point_residual = fixed_points
        .iter()
        .map(|&z| (f.value(z) - z).norm())
        .chain(
            solved
                .iter()
                .zip(&fixed_points)
                .map(|(s, z)| (s - z).norm()),
        )
        .fold(0.0, f64::max);

    // f'(z) - 1 = z^2 (3 a3 + 5 a5 z^2)
    let unit_derivative_points = nonzero_square_roots(3.0 * a3, 5.0 * a5);
    let expected = 0.3f64.sqrt();
    let unit_derivative_error = unit_derivative_points
        .iter()
        .zip([expected, -expected])
        .map(|(z, y)| (z - Complex::new(0.0, y)).norm())
        .fold(0.0, f64::max);

    let derivative_at_fixed_point = f.derivative(fixed_points[0]);
    let fixed_point_is_critical = (derivative_at_fixed_point - 1.0).norm() <= 1e-12;
    let pass = alexander.convex
        && (alexander.sum - 0.59).abs() <= 1e-12
        && fixed_point_residual <= 1e-15
        && unit_derivative_error <= 1e-12
        && (derivative_at_fixed_point - 1.01).norm() <= 1e-12
        && !fixed_point_is_critical;
    let verdict = if pass {
        "f(z)/z is not subordinate to H2"
    } else {
        "inconclusive"
    };
    CounterexampleReport {
        alexander,
        fixed_points,
        fixed_point_residual,
        unit_derivative_points,
        unit_derivative_error,
        derivative_at_fixed_point,
        fixed_point_is_critical,
        verdict: verdict.to_owned(),
        pass,
    }
}
