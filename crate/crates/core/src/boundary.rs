//! Geometry of the image domain `D_alpha = h_alpha(D)`.
//!
//! The boundary is the curve `theta -> h_alpha(e^{i theta}) = u + iv`; by the
//! real symmetry of `h_alpha` only `0 < theta <= pi` (the upper half) is
//! needed. For `alpha <= 1/2` the curve escapes to infinity as `theta -> 0+`,
//! for `alpha > 1/2` it closes up at `h_alpha(1) = 1/(2 alpha - 1)`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::cmath::arg_upper;
use crate::error::{domain, Error, Result};
use crate::family::{h_alpha_on_circle, h_alpha_prime_on_circle, Order};
use crate::json::{serialize_complex, serialize_f64};
use crate::Complex;

/// Smallest boundary angle searched by [`contains`] when the domain is
/// unbounded; beyond it the asymptotic sector decides.
pub const MEMBERSHIP_THETA_MIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundarySample {
    #[serde(serialize_with = "serialize_f64")]
    pub theta: f64,
    /// `h_alpha(e^{i theta})`.
    #[serde(serialize_with = "serialize_complex")]
    pub point: Complex,
    /// Turning angle `phi_alpha(theta)` of the tangent (minus `pi/2`).
    #[serde(serialize_with = "serialize_f64")]
    pub turning: f64,
}

/// The line `v = slope (u - anchor)` approached by the upper boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoteSpec {
    #[serde(serialize_with = "serialize_f64")]
    pub slope: f64,
    #[serde(serialize_with = "serialize_f64")]
    pub anchor: f64,
}

impl AsymptoteSpec {
    /// Signed distance of `w` from the sector `|v| < slope (u - anchor)`;
    /// negative inside.
    pub fn signed_distance(&self, w: Complex) -> f64 {
        (w.im.abs() - self.slope * (w.re - self.anchor)) / self.slope.hypot(1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Inside,
    Outside,
    BoundaryBand,
}

fn turning_limit_at_zero(ord: &Order) -> f64 {
    (1.0 - ord.alpha()) * PI
}

/// A point of the boundary curve together with its turning angle.
///
/// Accepts `0 < theta < 2 pi`; `theta = 0` is allowed only for bounded
/// domains (`alpha > 1/2`), where it gives the rightmost point `h_alpha(1)`.
pub fn boundary_point(ord: &Order, theta: f64) -> Result<BoundarySample> {
    if theta == 0.0 {
        if !ord.is_bounded() {
            return Err(Error::Singular(format!(
                "boundary point at theta = 0 is at infinity for alpha = {}",
                ord.alpha()
            )));
        }
        return Ok(BoundarySample {
            theta,
            point: h_alpha_on_circle(ord, 0.0)?,
            turning: turning_limit_at_zero(ord),
        });
    }
    let point = h_alpha_on_circle(ord, theta)?;
    let hp = h_alpha_prime_on_circle(ord, theta)?;
    Ok(BoundarySample {
        theta,
        point,
        turning: theta + hp.arg(),
    })
}

/// The explicit real parametrization `(u_gamma(theta), v_gamma(theta))`,
/// valid for `gamma = 2 alpha - 1 != 0`.
pub fn explicit_uv(ord: &Order, theta: f64) -> Result<(f64, f64)> {
    let g = ord.gamma();
    if g == 0.0 {
        return Err(domain("explicit boundary formulas need alpha != 1/2"));
    }
    let p = (2.0 * (0.5 * theta).sin()).powf(g);
    let arg = -theta + 0.5 * (theta - PI) * g;
    let u = -(p * arg.cos() - theta.cos()) / g;
    let v = -(p * arg.sin() + theta.sin()) / g;
    Ok((u, v))
}

/// Imaginary part of the boundary of `D_{1/2}`:
/// `(pi - theta)/2 cos theta + sin theta log(2 sin(theta/2))`.
pub fn v_half(theta: f64) -> f64 {
    0.5 * (PI - theta) * theta.cos() + theta.sin() * (2.0 * (0.5 * theta).sin()).ln()
}

/// `phi_alpha(theta) = theta + arg h_alpha'(e^{i theta})`, an increasing
/// homeomorphism of `(0, pi]` onto `((1 - alpha) pi, pi]`.
pub fn phi(ord: &Order, theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(domain(format!("phi needs theta in (0, pi], got {theta}")));
    }
    Ok(theta + h_alpha_prime_on_circle(ord, theta)?.arg())
}

pub fn asymptote(ord: &Order) -> Result<AsymptoteSpec> {
    let a = ord.alpha();
    if !(a > 0.0 && a < 0.5) {
        return Err(domain(format!(
            "asymptotes exist only for 0 < alpha < 1/2, got {a}"
        )));
    }
    Ok(AsymptoteSpec {
        slope: 1.0 / (PI * a).tan(),
        anchor: 1.0 / ord.gamma(),
    })
}

/// Argument of `h_alpha(e^{i theta}) - 1` seen from the interior point 1.
fn arg_about_one(ord: &Order, theta: f64) -> Result<f64> {
    Ok(arg_upper(h_alpha_on_circle(ord, theta)? - 1.0))
}

/// Signed distance of `w` from the region beyond the truncated boundary
/// search, for unbounded domains. Negative inside.
fn sector_distance(ord: &Order, w: Complex) -> f64 {
    let a = ord.alpha();
    if a == 0.0 {
        0.5 - w.re
    } else if a == 0.5 {
        w.im.abs() - FRAC_PI_2
    } else {
        asymptote(ord)
            .expect("0 < alpha < 1/2 here")
            .signed_distance(w)
    }
}

fn classify(gap: f64, tol: f64) -> Membership {
    if gap.abs() < tol {
        Membership::BoundaryBand
    } else if gap < 0.0 {
        Membership::Inside
    } else {
        Membership::Outside
    }
}

/// Decide whether `w` lies in `D_alpha`.
///
/// `D_alpha` is convex and contains `1 = h_alpha(0)`, so it is starlike about
/// 1 and its boundary is a graph over the argument about 1. The boundary
/// angle `theta` in that direction is found by bisection (the argument is
/// increasing in `theta`), and `|w - 1|` is compared with the boundary radius.
/// Points within `tol` of the boundary radially are reported as
/// [`Membership::BoundaryBand`].
pub fn contains(ord: &Order, w: Complex, tol: f64) -> Result<Membership> {
    if !w.re.is_finite() || !w.im.is_finite() {
        return Err(domain("membership of a non-finite point"));
    }
    if !(tol > 0.0) {
        return Err(domain("membership tolerance must be positive"));
    }
    let w = if w.im < 0.0 { w.conj() } else { w };
    let offset = w - 1.0;
    if offset.norm() == 0.0 {
        return Ok(Membership::Inside);
    }
    let target = arg_upper(offset);

    let bounded = ord.is_bounded();
    let mut lo = if bounded { 0.0 } else { MEMBERSHIP_THETA_MIN };
    let mut hi = PI;
    if target <= arg_about_one(ord, lo)? {
        if !bounded {
            return Ok(classify(sector_distance(ord, w), tol));
        }
        hi = lo;
    } else if target < PI {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if arg_about_one(ord, mid)? < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    } else {
        lo = PI;
    }
    let theta = 0.5 * (lo + hi);
    let radius = (h_alpha_on_circle(ord, theta)? - 1.0).norm();
    Ok(classify(offset.norm() - radius, tol))
}

/// `n` boundary samples with angles spaced geometrically from `theta_min`
/// to `pi`. For bounded domains `theta_min = 0` is allowed; the first sample
/// is then `h_alpha(1)` and the rest start at `1e-6`.
pub fn sample_boundary(ord: &Order, n: usize, theta_min: f64) -> Result<Vec<BoundarySample>> {
    if n < 2 {
        return Err(domain("sample_boundary needs n >= 2"));
    }
    let closed_start = theta_min == 0.0;
    if closed_start {
        if !ord.is_bounded() {
            return Err(domain("theta_min = 0 is allowed only for alpha > 1/2"));
        }
    } else if !(theta_min > 0.0 && theta_min < FRAC_PI_2) {
        return Err(domain(format!("theta_min = {theta_min} outside (0, pi/2)")));
    }
    let (start, count) = if closed_start {
        (1e-6, n - 1)
    } else {
        (theta_min, n)
    };
    let mut thetas = Vec::with_capacity(n);
    if closed_start {
        thetas.push(0.0);
    }
    let ratio = PI / start;
    for i in 0..count {
        let theta = if i + 1 == count {
            PI
        } else {
            start * ratio.powf(i as f64 / (count - 1) as f64)
        };
        thetas.push(theta);
    }
    thetas.into_iter().map(|t| boundary_point(ord, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{h_alpha, k_alpha};

    fn ord(a: f64) -> Order {
        Order::new(a).unwrap()
    }

    #[test]
    fn boundary_point_at_pi_is_real() {
        for a in [0.0, 0.2, 0.5, 0.8] {
            let o = ord(a);
            let s = boundary_point(&o, PI).unwrap();
            let want = -k_alpha(&o, Complex::new(-1.0, 0.0)).unwrap();
            assert!((s.point - want).norm() < 1e-15);
            assert_eq!(s.point.im, 0.0);
        }
    }

    #[test]
    fn boundary_point_half_at_quarter_turn() {
        let s = boundary_point(&ord(0.5), FRAC_PI_2).unwrap();
        assert!((s.point.im - 2f64.sqrt().ln()).abs() < 1e-15);
    }

    #[test]
    fn slope_of_escape_for_quarter() {
        let s = boundary_point(&ord(0.25), 1e-10).unwrap();
        assert!((s.point.im / s.point.re - 1.0).abs() < 1e-3);
    }

    #[test]
    fn boundary_point_zero_angle() {
        assert!(matches!(
            boundary_point(&ord(0.4), 0.0),
            Err(Error::Singular(_))
        ));
        let s = boundary_point(&ord(0.75), 0.0).unwrap();
        assert!((s.point - 2.0).norm() < 1e-15);
    }

    #[test]
    fn conjugate_symmetry_of_boundary() {
        let o = ord(0.35);
        for t in [0.1, 1.0, 2.9] {
            let a = boundary_point(&o, t).unwrap().point;
            let b = boundary_point(&o, 2.0 * PI - t).unwrap().point;
            assert!((a - b.conj()).norm() < 1e-13);
        }
    }

    #[test]
    fn explicit_formulas_agree_with_complex_evaluation() {
        for a in [0.0, 0.1, 0.3, 0.45, 0.55, 0.7, 0.95] {
            let o = ord(a);
            for j in 1..=720 {
                let t = PI * j as f64 / 720.0;
                let (u, v) = explicit_uv(&o, t).unwrap();
                let p = boundary_point(&o, t).unwrap().point;
                let scale = 1.0 + p.norm();
                assert!((p.re - u).abs() < 1e-10 * scale, "a={a} t={t}");
                assert!((p.im - v).abs() < 1e-10 * scale, "a={a} t={t}");
            }
        }
        assert!(explicit_uv(&ord(0.5), 1.0).is_err());
    }

    #[test]
    fn v_half_examples() {
        assert!(v_half(PI).abs() < 1e-15);
        assert!((v_half(1e-12) - FRAC_PI_2).abs() < 1e-10);
        assert!((v_half(FRAC_PI_2) - 0.346_573_590_279_972_65).abs() < 1e-15);
        let o = ord(0.5);
        for j in 1..720 {
            let t = PI * j as f64 / 720.0;
            assert!((v_half(t) - boundary_point(&o, t).unwrap().point.im).abs() < 1e-12);
        }
    }

    #[test]
    fn phi_examples() {
        assert!((phi(&ord(0.3), PI).unwrap() - PI).abs() < 1e-12);
        assert!((phi(&ord(0.5), 1e-9).unwrap() - FRAC_PI_2).abs() < 1e-6);
        let o = ord(0.7);
        assert!(phi(&o, 0.4).unwrap() < phi(&o, 0.41).unwrap());
        assert!(phi(&o, 0.0).is_err());
        assert!(phi(&o, 3.5).is_err());
    }

    #[test]
    fn asymptote_examples() {
        let s = asymptote(&ord(0.25)).unwrap();
        assert!((s.slope - 1.0).abs() < 1e-15);
        assert!((s.anchor + 2.0).abs() < 1e-15);
        assert!(asymptote(&ord(0.5 - 1e-9)).unwrap().slope < 1e-8);
        assert!(asymptote(&ord(0.5)).is_err());
        assert!(asymptote(&ord(0.0)).is_err());
        let o = ord(0.3);
        let s = asymptote(&o).unwrap();
        let dev = |t: f64| {
            let p = boundary_point(&o, t).unwrap().point;
            (p.im - s.slope * (p.re - s.anchor)).abs()
        };
        assert!(dev(1e-2) > dev(1e-4) && dev(1e-4) > dev(1e-6));
        assert!(dev(1e-6) < 1e-2);
    }

    #[test]
    fn contains_examples() {
        for a in [0.0, 0.3, 0.5, 0.9] {
            assert_eq!(
                contains(&ord(a), Complex::new(1.0, 0.0), 1e-9).unwrap(),
                Membership::Inside
            );
        }
        assert_eq!(
            contains(&ord(0.5), Complex::new(0.5, 0.0), 1e-9).unwrap(),
            Membership::Outside
        );
        let o = ord(0.6);
        let w = h_alpha(&o, Complex::new(0.9, 0.0)).unwrap();
        assert_eq!(contains(&o, w, 1e-9).unwrap(), Membership::Inside);
    }

    #[test]
    fn contains_half_plane_for_order_zero() {
        let o = ord(0.0);
        for (w, want) in [
            (Complex::new(0.6, 50.0), Membership::Inside),
            (Complex::new(0.4, 50.0), Membership::Outside),
            (Complex::new(0.6, -3e7), Membership::Inside),
            (Complex::new(0.45, -0.2), Membership::Outside),
            (Complex::new(0.5, 1.0), Membership::BoundaryBand),
        ] {
            assert_eq!(contains(&o, w, 1e-6).unwrap(), want, "w = {w}");
        }
    }

    #[test]
    fn contains_rejects_bad_input() {
        let o = ord(0.4);
        assert!(contains(&o, Complex::new(f64::NAN, 0.0), 1e-6).is_err());
        assert!(contains(&o, Complex::new(2.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn pushing_boundary_outward_leaves_domain() {
        for a in [0.1, 0.4, 0.5, 0.6, 0.9] {
            let o = ord(a);
            for s in sample_boundary(&o, 60, 1e-3).unwrap() {
                let dir = (s.point - 1.0) / (s.point - 1.0).norm();
                let out = s.point + dir * 1e-3;
                let inn = s.point - dir * 1e-3;
                assert_eq!(
                    contains(&o, out, 1e-6).unwrap(),
                    Membership::Outside,
                    "a={a}"
                );
                assert_eq!(
                    contains(&o, inn, 1e-6).unwrap(),
                    Membership::Inside,
                    "a={a}"
                );
                assert_eq!(
                    contains(&o, s.point, 1e-6).unwrap(),
                    Membership::BoundaryBand
                );
            }
        }
    }

    #[test]
    fn sample_boundary_examples() {
        let s = sample_boundary(&ord(0.6), 3, 0.1).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s[0].theta < s[1].theta && s[1].theta < s[2].theta);
        let s = sample_boundary(&ord(0.5), 100, 1e-3).unwrap();
        assert!(s.iter().all(|b| b.point.im <= FRAC_PI_2));
        let o = ord(0.25);
        let asy = asymptote(&o).unwrap();
        for b in sample_boundary(&o, 100, 1e-3).unwrap() {
            assert!(b.point.im.abs() < asy.slope * (b.point.re - asy.anchor));
        }
        let s = sample_boundary(&ord(0.8), 5, 0.0).unwrap();
        assert_eq!(s[0].theta, 0.0);
        assert_eq!(s[4].theta, PI);
        assert!(sample_boundary(&ord(0.4), 5, 0.0).is_err());
        assert!(sample_boundary(&ord(0.4), 1, 0.1).is_err());
        assert!(sample_boundary(&ord(0.4), 5, 2.0).is_err());
    }
}
