//! Extremal values over the class: the critical angle of the upper boundary,
//! the sharp bound `M(alpha)` on `|Im f(z)/z|`, the inverse of the turning
//! angle, and `Q_alpha(t) = inf Re[e^{it} f(z)/z]`.
//!
//! Every root is found by bisection on a monotone or sign-changing function.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::boundary::phi;
use crate::error::{domain, Error, Result};
use crate::family::{h_alpha_on_circle, Order};
use crate::json::{serialize_f64, serialize_opt_f64};

fn require_upper(ord: &Order) -> Result<f64> {
    let c = ord.c();
    if !(c > 0.0 && c < 0.5) {
        return Err(domain(format!(
            "needs 1/2 < alpha < 1, got alpha = {}",
            ord.alpha()
        )));
    }
    Ok(c)
}

fn require_open_angle(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < PI) {
        return Err(domain(format!("angle {theta} outside (0, pi)")));
    }
    Ok(())
}

/// Left-hand side of the critical-angle equation
///
/// `[c cot(theta/2) + (1 - c) cot(A)] (2 sin(theta/2))^(2c) sin(A) - cos(theta)`
/// with `A = c pi + (1 - c) theta`. The products `cot(A) sin(A)` are taken as
/// `cos(A)`, which removes the pole of the cotangent.
#[allow(non_snake_case)]
pub fn F_lhs(ord: &Order, theta: f64) -> Result<f64> {
    let c = require_upper(ord)?;
    require_open_angle(theta)?;
    Ok(f_lhs_unchecked(c, theta))
}

fn f_lhs_unchecked(c: f64, theta: f64) -> f64 {
    let half = 0.5 * theta;
    let a = c * PI + (1.0 - c) * theta;
    let p = (2.0 * half.sin()).powf(2.0 * c);
    (c * a.sin() / half.tan() + (1.0 - c) * a.cos()) * p - theta.cos()
}

/// `H(theta) = c cot(theta/2) + (1 - c) cot(c pi + (1 - c) theta)`, the
/// bracketed denominator in the closed form of `M(alpha)`.
pub fn m_denominator(ord: &Order, theta: f64) -> Result<f64> {
    let c = require_upper(ord)?;
    require_open_angle(theta)?;
    let a = c * PI + (1.0 - c) * theta;
    Ok(c / (0.5 * theta).tan() + (1.0 - c) / a.tan())
}

/// `H'(theta) = -c / (2 sin^2(theta/2)) - (1 - c)^2 / sin^2(c pi + (1 - c) theta)`.
pub fn m_denominator_prime(ord: &Order, theta: f64) -> Result<f64> {
    let c = require_upper(ord)?;
    require_open_angle(theta)?;
    let s = (0.5 * theta).sin();
    let sa = (c * PI + (1.0 - c) * theta).sin();
    Ok(-c / (2.0 * s * s) - (1.0 - c) * (1.0 - c) / (sa * sa))
}

/// `G(theta) = cos(theta) / H(theta) - sin(theta)`, so that
/// `M(alpha) = G(theta_alpha) / (2c)`.
pub fn m_numerator(ord: &Order, theta: f64) -> Result<f64> {
    Ok(theta.cos() / m_denominator(ord, theta)? - theta.sin())
}

/// Lower bound for `G'` on `[theta0, theta1]` obtained from the monotonicity
/// of `H` and `-H'` there:
///
/// `-sin(theta1)/H(theta1) - H'(theta1) cos(theta1) / H(theta0)^2 - cos(theta0)`.
pub fn m_numerator_slope_bound(ord: &Order, theta0: f64, theta1: f64) -> Result<f64> {
    let h0 = m_denominator(ord, theta0)?;
    let h1 = m_denominator(ord, theta1)?;
    let hp1 = m_denominator_prime(ord, theta1)?;
    Ok(-theta1.sin() / h1 - hp1 * theta1.cos() / (h0 * h0) - theta0.cos())
}

const CRITICAL_SCAN: usize = 2000;
const CRITICAL_EDGE: f64 = 1e-8;

/// The angle `theta_alpha` in `(0, pi)` where the upper boundary of a bounded
/// `D_alpha` reaches its highest point: the unique root of [`F_lhs`].
///
/// The interval `(1e-8, pi - 1e-8)` is scanned for sign changes; anything
/// other than exactly one is reported as [`Error::SolverFailure`]. The root is
/// then bisected until the bracket is at most `1e-12` wide (in practice to
/// adjacent floats).
pub fn critical_theta(ord: &Order) -> Result<f64> {
    let c = require_upper(ord)?;
    let lo_edge = CRITICAL_EDGE;
    let hi_edge = PI - CRITICAL_EDGE;
    let mut bracket = None;
    let mut changes = 0;
    let mut prev_t = lo_edge;
    let mut prev_f = f_lhs_unchecked(c, prev_t);
    for i in 1..=CRITICAL_SCAN {
        // denser near 0, where the root sits for alpha close to 1/2
        let s = i as f64 / CRITICAL_SCAN as f64;
        let t = lo_edge + (hi_edge - lo_edge) * s * s;
        let f = f_lhs_unchecked(c, t);
        if (prev_f > 0.0) != (f > 0.0) {
            changes += 1;
            bracket = Some((prev_t, t, prev_f > 0.0));
        }
        prev_t = t;
        prev_f = f;
    }
    let (mut lo, mut hi, lo_positive) = match (changes, bracket) {
        (1, Some(b)) => b,
        _ => {
            return Err(Error::SolverFailure(format!(
                "expected one sign change of the critical-angle equation, found {changes}"
            )))
        }
    };
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f_lhs_unchecked(c, mid) > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `M(alpha) = sup Im h_alpha` over the disk, for `1/2 <= alpha < 1`.
///
/// At `alpha = 1/2` this is the supremum `pi/2`, approached as
/// `theta -> 0+` and not attained.
#[allow(non_snake_case)]
pub fn big_M(ord: &Order) -> Result<f64> {
    let a = ord.alpha();
    if a == 0.5 {
        return Ok(FRAC_PI_2);
    }
    if a < 0.5 {
        return Err(domain(format!("M(alpha) needs alpha >= 1/2, got {a}")));
    }
    let theta = critical_theta(ord)?;
    Ok(m_numerator(ord, theta)? / (2.0 * ord.c()))
}

/// `theta` in `(0, pi]` with `phi_alpha(theta) = y`, for
/// `y` in `((1 - alpha) pi + 1e-9, pi]`.
pub fn phi_inverse(ord: &Order, y: f64) -> Result<f64> {
    let a = ord.alpha();
    if !(a > 0.0) {
        return Err(domain("phi is constant for alpha = 0"));
    }
    let floor = (1.0 - a) * PI;
    if !(y > floor + 1e-9 && y <= PI) {
        return Err(domain(format!(
            "phi_alpha takes values in ({floor}, pi], got {y}"
        )));
    }
    phi_inverse_unchecked(ord, y)
}

fn phi_inverse_unchecked(ord: &Order, y: f64) -> Result<f64> {
    if y >= PI {
        return Ok(PI);
    }
    let (mut lo, mut hi) = (0.0f64, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if phi(ord, mid)? < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QCase {
    InteriorCritical,
    Borderline,
    ClosedForm,
    UnboundedBelow,
}

/// A value of `Q_alpha(t)`: finite, or the tagged sentinel for `-infinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QValue {
    Finite(f64),
    NegInfinity,
}

impl QValue {
    pub fn finite(&self) -> Option<f64> {
        match *self {
            QValue::Finite(v) => Some(v),
            QValue::NegInfinity => None,
        }
    }
}

impl Serialize for QValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            QValue::Finite(v) => serialize_f64(v, s),
            QValue::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QResult {
    #[serde(serialize_with = "serialize_f64")]
    pub alpha: f64,
    /// `t` reduced to `[0, pi]`.
    #[serde(serialize_with = "serialize_f64")]
    pub t: f64,
    pub value: QValue,
    #[serde(rename = "case")]
    pub case_tag: QCase,
    #[serde(serialize_with = "serialize_opt_f64")]
    pub theta0: Option<f64>,
}

/// Reduce `t` to `[0, pi]` using `Q(-t) = Q(t)` and `2 pi` periodicity.
pub fn reduce_angle(t: f64) -> f64 {
    let r = t.rem_euclid(2.0 * PI);
    if r > PI {
        2.0 * PI - r
    } else {
        r
    }
}

/// Angles within this distance of `alpha pi` take the borderline branch.
const BORDERLINE_TOL: f64 = 1e-12;

/// `Q_alpha(t) = inf over f in K(alpha), z in D of Re[e^{it} f(z)/z]`.
///
/// With `theta0 = phi_alpha^{-1}(pi - t)`:
///
/// * `alpha = 0`: `1/2` at `t = 0`, `-inf` otherwise;
/// * `0 < alpha <= 1/2`: `Re[e^{i(t - theta0)} k(e^{i theta0})]` for
///   `t < alpha pi`, the asymptote value `cos(alpha pi)/(2 alpha - 1)`
///   (`-pi/2` at `alpha = 1/2`) at `t = alpha pi`, `-inf` beyond;
/// * `1/2 < alpha < 1`: the interior-critical value for `t < alpha pi` and
///   `cos(t)/(2 alpha - 1)` on `[alpha pi, pi]`.
pub fn q_value(ord: &Order, t: f64) -> Result<QResult> {
    if !t.is_finite() {
        return Err(domain("Q_alpha(t) needs a finite t"));
    }
    let t = reduce_angle(t);
    let a = ord.alpha();
    let result = |value, case_tag, theta0| QResult {
        alpha: a,
        t,
        value,
        case_tag,
        theta0,
    };
    if a == 0.0 {
        return Ok(if t == 0.0 {
            result(QValue::Finite(0.5), QCase::ClosedForm, None)
        } else {
            result(QValue::NegInfinity, QCase::UnboundedBelow, None)
        });
    }
    let edge = a * PI;
    if t < edge - BORDERLINE_TOL || (t < edge && ord.is_bounded()) {
        let theta0 = phi_inverse_unchecked(ord, PI - t)?;
        let w = h_alpha_on_circle(ord, theta0)?;
        let value = t.cos() * w.re - t.sin() * w.im;
        return Ok(result(
            QValue::Finite(value),
            QCase::InteriorCritical,
            Some(theta0),
        ));
    }
    if ord.is_bounded() {
        let value = t.cos() / ord.gamma();
        return Ok(result(QValue::Finite(value), QCase::ClosedForm, None));
    }
    if t <= edge + BORDERLINE_TOL {
        let value = if a == 0.5 {
            -FRAC_PI_2
        } else {
            edge.cos() / ord.gamma()
        };
        return Ok(result(QValue::Finite(value), QCase::Borderline, None));
    }
    Ok(result(QValue::NegInfinity, QCase::UnboundedBelow, None))
}
