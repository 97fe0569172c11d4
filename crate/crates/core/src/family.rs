//! The extremal function `k_alpha`, its quotient `h_alpha = k_alpha(z)/z`,
//! their derivatives, and the series machinery behind the convexity of
//! `h_alpha`.
//!
//! All powers and logarithms of `1 - z` use the principal branch, which is
//! analytic on the closed disk minus `z = 1` because `Re(1 - z) >= 0` there.
//! The expressions that divide by `1 - beta` are rewritten through
//! `expm1(d L)/d` with `L = log(1 - z)` and `d = beta - 1`, so every routine
//! is continuous across `alpha = 1/2` without a branch switch.

use crate::cmath::{expm1_ratio, log1p};
use crate::error::{domain, Error, Result};
use crate::Complex;

/// Radius below which `h_alpha` is summed from its Taylor series.
const H_SERIES_RADIUS: f64 = 1e-3;
/// Taylor terms used for `h_alpha` inside [`H_SERIES_RADIUS`].
const H_SERIES_TERMS: usize = 20;
/// Radius below which the `/z^2` forms (`h'`, convexity transform) use series.
const QUOTIENT_SERIES_RADIUS: f64 = 0.25;
/// Largest `|z|` accepted by [`h_alpha_series`].
pub const SERIES_MAX_RADIUS: f64 = 0.95;

/// The order `alpha` of the class, with its derived parameters.
///
/// `beta = 2 - 2 alpha` is the exponent in `k'(z) = (1 - z)^(-beta)`,
/// `gamma = 2 alpha - 1` the exponent of the closed form of `k`, and
/// `c = alpha - 1/2 = gamma / 2` the parameter of the critical-angle equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    alpha: f64,
    beta: f64,
    gamma: f64,
    c: f64,
}

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..1.0).contains(&alpha) {
            return Err(domain(format!("order alpha = {alpha} must lie in [0, 1)")));
        }
        Ok(Self {
            alpha,
            beta: 2.0 - 2.0 * alpha,
            gamma: 2.0 * alpha - 1.0,
            c: alpha - 0.5,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `k_alpha` is bounded on the disk exactly when `alpha > 1/2`.
    pub fn is_bounded(&self) -> bool {
        self.alpha > 0.5
    }
}

fn validate(z: Complex) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(domain("non-finite argument"));
    }
    if z.norm() > 1.0 + 1e-12 {
        return Err(domain(format!(
            "|z| = {} exceeds the closed unit disk",
            z.norm()
        )));
    }
    Ok(())
}

fn is_one(z: Complex) -> bool {
    z.re == 1.0 && z.im == 0.0
}

fn singular_at_one(what: &str) -> Error {
    Error::Singular(format!("{what} is singular at z = 1"))
}

/// `log(1 - z)` for a validated `z != 1`.
fn log_one_minus(z: Complex) -> Complex {
    log1p(-z)
}

pub(crate) fn k_from_log(ord: &Order, l: Complex) -> Complex {
    // (1 - (1 - z)^gamma) / gamma, and -log(1 - z) at gamma = 0
    -expm1_ratio(ord.gamma, l)
}

pub(crate) fn h_from_log(ord: &Order, z: Complex, l: Complex) -> Complex {
    if z.norm() < H_SERIES_RADIUS {
        taylor_h(ord, z, H_SERIES_TERMS)
    } else {
        k_from_log(ord, l) / z
    }
}

pub(crate) fn h_prime_from_log(ord: &Order, z: Complex, l: Complex) -> Complex {
    if z.norm() < QUOTIENT_SERIES_RADIUS {
        return taylor_h_prime(ord, z);
    }
    let d = ord.beta - 1.0;
    // ((1 - beta z)(1 - z)^-beta - 1) / ((1 - beta) z^2)
    //   = (expm1(-d L)/(-d) + z (1 - z)^-beta) / z^2
    (expm1_ratio(-d, l) + z * (-l * ord.beta).exp()) / (z * z)
}

pub(crate) fn convexity_from_log(ord: &Order, z: Complex, l: Complex) -> Complex {
    let s = if z.norm() < QUOTIENT_SERIES_RADIUS {
        b_series(ord, z)
    } else {
        // S(z) = sum b_n z^n = -2 ((1-z)^beta - 1 + beta z) / (beta (1-beta) z^2)
        let d = ord.beta - 1.0;
        (((1.0 - z) * expm1_ratio(d, l) + z) * 2.0) / (z * z * ord.beta)
    };
    // 1 + omega = (1 - z) S and T = (1 - omega)/(1 + omega) = 2/(1 + omega) - 1
    Complex::new(2.0, 0.0) / ((1.0 - z) * s) - 1.0
}

/// Taylor coefficients of `h_alpha`: `c_n = (beta)_n / (n + 1)!`.
fn h_coefficients(ord: &Order) -> impl Iterator<Item = f64> + '_ {
    let mut c = 1.0;
    let mut n = 0usize;
    std::iter::from_fn(move || {
        let out = c;
        n += 1;
        c *= (ord.beta + (n - 1) as f64) / (n + 1) as f64;
        Some(out)
    })
}

fn taylor_h(ord: &Order, z: Complex, terms: usize) -> Complex {
    let coeffs: Vec<f64> = h_coefficients(ord).take(terms).collect();
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn taylor_h_prime(ord: &Order, z: Complex) -> Complex {
    let mut sum = Complex::new(0.0, 0.0);
    let mut zpow = Complex::new(1.0, 0.0);
    for (n, c) in h_coefficients(ord).enumerate().skip(1).take(120) {
        let term = zpow * (n as f64 * c);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
        zpow *= z;
    }
    sum
}

fn b_series(ord: &Order, z: Complex) -> Complex {
    let mut sum = Complex::new(1.0, 0.0);
    let mut b = 1.0;
    let mut zpow = Complex::new(1.0, 0.0);
    for n in 1..120 {
        b *= (n as f64 + 1.0 - ord.beta) / (n as f64 + 2.0);
        zpow *= z;
        let term = zpow * b;
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// `k_alpha(z)`, normalized by `k(0) = 0`, `k'(0) = 1`.
///
/// At `z = 1` the function is finite only for `alpha > 1/2`, where it equals
/// `1 / (2 alpha - 1)`.
pub fn k_alpha(ord: &Order, z: Complex) -> Result<Complex> {
    validate(z)?;
    if is_one(z) {
        return if ord.is_bounded() {
            Ok(Complex::new(1.0 / ord.gamma, 0.0))
        } else {
            Err(singular_at_one("k_alpha"))
        };
    }
    Ok(k_from_log(ord, log_one_minus(z)))
}

/// `k_alpha'(z) = (1 - z)^(-beta)`.
pub fn k_alpha_prime(ord: &Order, z: Complex) -> Result<Complex> {
    validate(z)?;
    if is_one(z) {
        return Err(singular_at_one("k_alpha'"));
    }
    Ok((-log_one_minus(z) * ord.beta).exp())
}

/// `h_alpha(z) = k_alpha(z) / z = 2F1(beta, 1; 2; z)`, with `h_alpha(0) = 1`.
pub fn h_alpha(ord: &Order, z: Complex) -> Result<Complex> {
    validate(z)?;
    if is_one(z) {
        return k_alpha(ord, z);
    }
    Ok(h_from_log(ord, z, log_one_minus(z)))
}

/// `h_alpha'(z)`; equals `beta / 2` at the origin.
pub fn h_alpha_prime(ord: &Order, z: Complex) -> Result<Complex> {
    validate(z)?;
    if is_one(z) {
        return Err(singular_at_one("h_alpha'"));
    }
    Ok(h_prime_from_log(ord, z, log_one_minus(z)))
}

/// Partial sum `sum_{n < n_terms} (beta)_n / (n + 1)! z^n` of the
/// hypergeometric series. Kept independent of the closed forms so it can
/// serve as their oracle.
pub fn h_alpha_series(ord: &Order, z: Complex, n_terms: usize) -> Result<Complex> {
    validate(z)?;
    if z.norm() > SERIES_MAX_RADIUS {
        return Err(Error::Convergence(z.norm()));
    }
    let mut sum = Complex::new(0.0, 0.0);
    let mut zpow = Complex::new(1.0, 0.0);
    for c in h_coefficients(ord).take(n_terms) {
        sum += zpow * c;
        zpow *= z;
    }
    Ok(sum)
}

/// `b_n = (2 - beta)_n / (3)_n` by the recurrence
/// `b_n = b_{n-1} (n + 1 - beta) / (n + 2)`.
pub fn b_seq(ord: &Order, n: usize) -> f64 {
    (1..=n).fold(1.0, |b, k| {
        b * (k as f64 + 1.0 - ord.beta) / (k as f64 + 2.0)
    })
}

/// Partial sum of `omega(z) = sum_{n >= 1} (b_n - b_{n-1}) z^n`, the
/// bounding function in `1 + z h''/h' = (1 - omega)/(1 + omega)`.
pub fn omega_partial(ord: &Order, z: Complex, n_terms: usize) -> Complex {
    let mut sum = Complex::new(0.0, 0.0);
    let mut prev = 1.0;
    let mut zpow = Complex::new(1.0, 0.0);
    for n in 1..=n_terms {
        let b = prev * (n as f64 + 1.0 - ord.beta) / (n as f64 + 2.0);
        zpow *= z;
        sum += zpow * (b - prev);
        prev = b;
    }
    sum
}

/// `1 + z h_alpha''(z) / h_alpha'(z)`; equals 1 at the origin.
pub fn convexity_transform(ord: &Order, z: Complex) -> Result<Complex> {
    validate(z)?;
    if is_one(z) {
        return Err(singular_at_one("1 + z h''/h'"));
    }
    Ok(convexity_from_log(ord, z, log_one_minus(z)))
}

/// The infimum of `Re(1 + z h''/h')` over the disk, attained in the limit
/// `z -> -1`:
///
/// `(2^(beta+1) - 2 - beta - beta^2) / (2 (1 + beta - 2^beta))`.
///
/// Near `beta = 1` numerator and denominator both vanish; there the ratio of
/// their fourth-order expansions in `beta - 1` is used.
pub fn kustner_inf(ord: &Order) -> Result<f64> {
    if ord.alpha <= 0.0 {
        return Err(domain(
            "the infimum formula needs alpha > 0; h_0 maps onto a half-plane",
        ));
    }
    let beta = ord.beta;
    let x = beta - 1.0;
    if x.abs() < 1e-3 {
        let l = std::f64::consts::LN_2;
        // 4 (e^{x l} - 1) - 3x - x^2 and 2x - 4 (e^{x l} - 1), both divided by x
        let mut num = 0.0;
        let mut den = 0.0;
        let mut coeff = 4.0 * l; // 4 l^{j+1} / (j+1)!
        let mut xp = 1.0;
        for j in 0..5 {
            let extra = match j {
                0 => -3.0,
                1 => -1.0,
                _ => 0.0,
            };
            num += (coeff + extra) * xp;
            den += if j == 0 { 2.0 - coeff } else { -coeff } * xp;
            coeff *= l / (j + 2) as f64;
            xp *= x;
        }
        return Ok(num / den);
    }
    let p = beta.exp2();
    Ok((2.0 * p - 2.0 - beta - beta * beta) / (2.0 * (1.0 + beta - p)))
}

/// The elementary lower bounds for [`kustner_inf`]: `(4 alpha - 1)/5` for
/// `alpha >= 1/2` and `alpha / (3 - alpha)` below.
pub fn kustner_lower_bound(ord: &Order) -> f64 {
    if ord.alpha >= 0.5 {
        (4.0 * ord.alpha - 1.0) / 5.0
    } else {
        ord.alpha / (3.0 - ord.alpha)
    }
}

/// `e^{i theta}`, exactly `-1` at `theta = pi`.
pub(crate) fn unit(theta: f64) -> Complex {
    if theta == std::f64::consts::PI {
        Complex::new(-1.0, 0.0)
    } else {
        Complex::from_polar(1.0, theta)
    }
}

/// `h_alpha(e^{i theta})` for `0 < theta < 2 pi`, or `theta = 0` when
/// `alpha > 1/2`.
pub fn h_alpha_on_circle(ord: &Order, theta: f64) -> Result<Complex> {
    if theta == 0.0 {
        return h_alpha(ord, Complex::new(1.0, 0.0));
    }
    if !(theta > 0.0 && theta < 2.0 * std::f64::consts::PI) {
        return Err(domain(format!("boundary angle {theta} outside (0, 2 pi)")));
    }
    Ok(h_from_log(
        ord,
        unit(theta),
        crate::cmath::log_one_minus_unit(theta),
    ))
}

/// `h_alpha'(e^{i theta})` for `0 < theta < 2 pi`.
pub fn h_alpha_prime_on_circle(ord: &Order, theta: f64) -> Result<Complex> {
    if !(theta > 0.0 && theta < 2.0 * std::f64::consts::PI) {
        return Err(domain(format!("boundary angle {theta} outside (0, 2 pi)")));
    }
    Ok(h_prime_from_log(
        ord,
        unit(theta),
        crate::cmath::log_one_minus_unit(theta),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, LN_2};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn ord(a: f64) -> Order {
        Order::new(a).unwrap()
    }

    #[test]
    fn order_validation_and_derived_fields() {
        assert!(Order::new(1.0).is_err());
        assert!(Order::new(-0.1).is_err());
        assert!(Order::new(f64::NAN).is_err());
        let o = ord(0.3);
        assert!((o.beta() - 1.4).abs() < 1e-15);
        assert!((o.gamma() + 0.4).abs() < 1e-15);
        assert!((o.c() + 0.2).abs() < 1e-15);
    }

    #[test]
    fn k_alpha_examples() {
        assert!((k_alpha(&ord(0.0), c(0.5, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((k_alpha(&ord(0.75), c(0.75, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        let z = c(1.0 - 1.0 / E, 0.0);
        assert!((k_alpha(&ord(0.5), z).unwrap() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn k_alpha_at_one() {
        assert!(matches!(
            k_alpha(&ord(0.5), c(1.0, 0.0)),
            Err(Error::Singular(_))
        ));
        assert!(matches!(
            k_alpha(&ord(0.2), c(1.0, 0.0)),
            Err(Error::Singular(_))
        ));
        let v = k_alpha(&ord(0.75), c(1.0, 0.0)).unwrap();
        assert!((v - 2.0).norm() < 1e-15);
        assert!(k_alpha(&ord(0.3), c(1.1, 0.0)).is_err());
    }

    #[test]
    fn k_alpha_continuous_across_half() {
        let z = c(0.4, 0.7);
        let mid = k_alpha(&ord(0.5), z).unwrap();
        for eps in [1e-6, 1e-9, 1e-12] {
            let lo = k_alpha(&ord(0.5 - eps), z).unwrap();
            let hi = k_alpha(&ord(0.5 + eps), z).unwrap();
            assert!((lo - mid).norm() < 10.0 * eps);
            assert!((hi - mid).norm() < 10.0 * eps);
        }
    }

    #[test]
    fn k_prime_examples() {
        assert!((k_alpha_prime(&ord(0.0), c(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((k_alpha_prime(&ord(0.5), c(0.5, 0.0)).unwrap() - 2.0).norm() < 1e-15);
        let v = k_alpha_prime(&ord(0.75), c(-1.0, 0.0)).unwrap();
        assert!((v - 0.5f64.sqrt()).norm() < 1e-15);
        assert!(k_alpha_prime(&ord(0.75), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn h_alpha_examples() {
        for a in [0.0, 0.3, 0.5, 0.9] {
            assert_eq!(h_alpha(&ord(a), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        }
        let v = h_alpha(&ord(0.5), c(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0 * LN_2).abs() < 1e-15);
        let v = h_alpha(&ord(0.0), c(0.5, 0.0)).unwrap();
        assert!((v - 2.0).norm() < 1e-15);
    }

    #[test]
    fn h_alpha_zero_is_one_for_h0() {
        // h_0(z) = 1/(1 - z), not 1/(1 + z)
        let v = h_alpha(&ord(0.0), c(-0.5, 0.0)).unwrap();
        assert!((v.re - 1.0 / 1.5).abs() < 1e-15);
    }

    #[test]
    fn h_prime_examples() {
        assert!((h_alpha_prime(&ord(0.0), c(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((h_alpha_prime(&ord(0.5), c(0.0, 0.0)).unwrap() - 0.5).norm() < 1e-15);
        for x in [0.1, 0.3, 0.6, 0.9] {
            let v = h_alpha_prime(&ord(0.75), c(x, 0.0)).unwrap();
            assert!(v.re > 0.0 && v.im.abs() < 1e-15);
        }
        // h_0' = (1 - z)^-2 away from the series region
        let z = c(0.5, 0.3);
        let want = (1.0 - z).powi(-2);
        assert!((h_alpha_prime(&ord(0.0), z).unwrap() - want).norm() < 1e-13);
    }

    #[test]
    fn h_prime_matches_finite_difference() {
        for a in [0.1, 0.5, 0.5 + 1e-10, 0.8] {
            let o = ord(a);
            for z in [c(0.26, 0.1), c(-0.6, 0.5), c(0.2, -0.1), c(0.0, 0.9)] {
                let step = 1e-5;
                let fd = (h_alpha(&o, z + step).unwrap() - h_alpha(&o, z - step).unwrap())
                    / (2.0 * step);
                let got = h_alpha_prime(&o, z).unwrap();
                assert!((fd - got).norm() < 1e-8 * (1.0 + got.norm()), "a={a} z={z}");
            }
        }
    }

    #[test]
    fn h_prime_continuous_at_series_switch() {
        // the two probes are 2e-12 apart, so values differ by about 2e-12 |h''|
        let o = ord(0.35);
        let inner = h_alpha_prime(&o, c(0.25 - 1e-12, 0.0)).unwrap();
        let outer = h_alpha_prime(&o, c(0.25 + 1e-12, 0.0)).unwrap();
        assert!((inner - outer).norm() < 1e-11);
        let inner = convexity_transform(&o, c(0.0, 0.25 - 1e-12)).unwrap();
        let outer = convexity_transform(&o, c(0.0, 0.25 + 1e-12)).unwrap();
        assert!((inner - outer).norm() < 1e-11);
    }

    #[test]
    fn series_examples() {
        let o = ord(0.42);
        assert_eq!(h_alpha_series(&o, c(0.0, 0.0), 7).unwrap(), c(1.0, 0.0));
        let v = h_alpha_series(&ord(0.5), c(0.5, 0.0), 200).unwrap();
        assert!((v.re - 2.0 * LN_2).abs() < 1e-10);
        let v = h_alpha_series(&ord(0.0), c(0.9, 0.0), 500).unwrap();
        assert!((v.re - 10.0).abs() < 1e-8);
        assert!(matches!(
            h_alpha_series(&o, c(0.96, 0.0), 100),
            Err(Error::Convergence(_))
        ));
    }

    #[test]
    fn b_seq_examples() {
        assert_eq!(b_seq(&ord(0.3), 0), 1.0);
        assert!((b_seq(&ord(0.5), 1) - 1.0 / 3.0).abs() < 1e-16);
        assert!((b_seq(&ord(0.5), 2) - 1.0 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_partial(&ord(0.4), c(0.0, 0.0), 50), c(0.0, 0.0));
        let o = ord(0.5);
        let n = 100_000;
        let w = omega_partial(&o, c(1.0, 0.0), n);
        assert!(w.norm() <= 1.0 - b_seq(&o, n) + 1e-12);
        assert!(w.norm() < 1.0);
        // (1 - T)/(1 + T) recovers omega from the closed-form transform
        let o = ord(0.3);
        let z = c(0.0, 0.5);
        let t = convexity_transform(&o, z).unwrap();
        let w = omega_partial(&o, z, 500);
        assert!(((1.0 - t) / (1.0 + t) - w).norm() < 1e-12);
    }

    #[test]
    fn convexity_transform_examples() {
        for a in [0.0, 0.2, 0.5, 0.7] {
            let v = convexity_transform(&ord(a), c(0.0, 0.0)).unwrap();
            assert!((v - 1.0).norm() < 1e-15);
        }
        let o = ord(0.5);
        let v = convexity_transform(&o, c(-0.99, 0.0)).unwrap();
        let inf = (4.0 * LN_2 - 3.0) / (2.0 - 4.0 * LN_2);
        assert!(v.re >= 0.2 && v.re >= inf && v.re - inf < 1e-2);
        assert!(convexity_transform(&ord(0.3), c(0.0, 0.8)).unwrap().re > 0.0);
        // h_0 has 1 + z h''/h' = (1 + z)/(1 - z)
        let z = c(0.3, -0.6);
        let v = convexity_transform(&ord(0.0), z).unwrap();
        assert!((v - (1.0 + z) / (1.0 - z)).norm() < 1e-14);
    }

    #[test]
    fn convexity_transform_matches_eq_h_form() {
        // -1 - beta(1-beta) z^2 / (((1-z)^beta - 1 + beta z)(1 - z)), evaluated
        // directly where it does not cancel badly
        for a in [0.1, 0.3, 0.8] {
            let o = ord(a);
            let b = o.beta();
            for z in [c(0.6, 0.3), c(-0.7, 0.1), c(0.1, -0.9)] {
                let direct = -1.0
                    - (z * z * (b * (1.0 - b))) / (((1.0 - z).powf(b) - 1.0 + z * b) * (1.0 - z));
                let got = convexity_transform(&o, z).unwrap();
                assert!((direct - got).norm() < 1e-12, "a={a} z={z}");
            }
        }
    }

    #[test]
    fn kustner_examples() {
        let v = kustner_inf(&ord(0.75)).unwrap();
        assert!((v - 0.457_106_781_186_549_2).abs() < 1e-12);
        assert!(v >= kustner_lower_bound(&ord(0.75)));
        let v = kustner_inf(&ord(0.25)).unwrap();
        assert!((v - 0.141_805_812_445_611_5).abs() < 1e-12);
        assert!(v >= 0.25 / 2.75);
        let v = kustner_inf(&ord(0.5)).unwrap();
        let limit = (4.0 * LN_2 - 3.0) / (2.0 - 4.0 * LN_2);
        assert!((v - limit).abs() < 1e-15);
        assert!(v >= 0.2);
        assert!(kustner_inf(&ord(0.0)).is_err());
    }

    #[test]
    fn kustner_series_branch_is_continuous() {
        for eps in [2e-3, 1.0001e-3, 0.9999e-3, 1e-5] {
            for sign in [-1.0, 1.0] {
                let o = ord(0.5 + sign * eps / 2.0);
                let b = o.beta();
                let p = b.exp2();
                let direct = (2.0 * p - 2.0 - b - b * b) / (2.0 * (1.0 + b - p));
                let got = kustner_inf(&o).unwrap();
                assert!((direct - got).abs() < 1e-9, "eps={eps} sign={sign}");
            }
        }
    }

    #[test]
    fn kustner_equals_transform_at_minus_one() {
        for a in [0.05, 0.3, 0.6, 0.95] {
            let o = ord(a);
            let t = convexity_transform(&o, c(-1.0, 0.0)).unwrap();
            assert!((t.re - kustner_inf(&o).unwrap()).abs() < 1e-13);
        }
    }

    #[test]
    fn circle_evaluation_matches_generic() {
        let o = ord(0.37);
        for t in [0.2, 1.0, 2.0, 3.0, 5.0] {
            let z = Complex::from_polar(1.0, t);
            let a = h_alpha_on_circle(&o, t).unwrap();
            let b = h_alpha(&o, z).unwrap();
            assert!((a - b).norm() < 1e-12);
            let a = h_alpha_prime_on_circle(&o, t).unwrap();
            let b = h_alpha_prime(&o, z).unwrap();
            assert!((a - b).norm() < 1e-11);
        }
    }
}
