//! Complex helpers that keep relative accuracy where the textbook formulas
//! cancel: `expm1`, `log1p`, and the divided difference `expm1(d*w)/d`.

use crate::Complex;

/// `exp(w) - 1` without cancellation for small `|w|`.
pub fn expm1(w: Complex) -> Complex {
    if w.norm() < 0.5 {
        let mut term = w;
        let mut sum = w;
        for n in 2..40 {
            term = term * w / n as f64;
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        w.exp() - 1.0
    }
}

/// Principal `log(1 + w)` with full relative accuracy near `w = 0`.
pub fn log1p(w: Complex) -> Complex {
    let x = w.re;
    let y = w.im;
    // |1 + w|^2 - 1 = 2x + x^2 + y^2
    let re = 0.5 * (2.0 * x + x * x + y * y).ln_1p();
    let im = y.atan2(1.0 + x);
    Complex::new(re, im)
}

/// `expm1(d * w) / d`, continued by its limit `w` at `d = 0`.
pub fn expm1_ratio(d: f64, w: Complex) -> Complex {
    if d == 0.0 {
        w
    } else {
        expm1(w * d) / d
    }
}

/// `log(1 - e^{i theta})` on the principal branch for `0 < theta < 2 pi`.
///
/// Uses `1 - e^{i t} = 2 sin(t/2) e^{i (t - pi)/2}`, which is exact in the
/// argument and keeps the modulus accurate as `t -> 0`.
pub fn log_one_minus_unit(theta: f64) -> Complex {
    Complex::new(
        (2.0 * (0.5 * theta).sin()).ln(),
        0.5 * (theta - std::f64::consts::PI),
    )
}

/// Principal argument mapped into `(-pi/2, 3 pi/2]`, so that points just
/// below the negative real axis keep an argument close to `pi`.
pub fn arg_upper(w: Complex) -> f64 {
    let a = w.im.atan2(w.re);
    if a <= -std::f64::consts::FRAC_PI_2 {
        a + 2.0 * std::f64::consts::PI
    } else {
        a
    }
}
