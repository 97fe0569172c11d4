//! Numerics for convex functions of order `alpha` on the unit disk.
//!
//! The crate evaluates the extremal function `k_alpha(z)` and its quotient
//! `h_alpha(z) = k_alpha(z)/z = 2F1(2 - 2 alpha, 1; 2; z)`, traces the
//! boundary of the convex image domain `D_alpha = h_alpha(D)`, solves the
//! extremal problems `M(alpha)` and `Q_alpha(t)`, and generates random members
//! of the class from atomic Herglotz data so that the subordination and
//! starlikeness results can be exercised numerically.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`family`] | `Order`, `k_alpha`, `h_alpha`, derivatives, series, `b_n`, `omega`, infimum formula |
//! | [`boundary`] | boundary curve `u + iv`, turning angle `phi`, asymptotes, membership oracle |
//! | [`extremal`] | critical angle, `M(alpha)`, `phi` inverse, `Q_alpha(t)` |
//! | [`herglotz`] | atomic measures, generated functions, grid estimates, seeded sweeps |
//! | [`criteria`] | Alexander sum, Ruscheweyh `q_gamma`, `H1`/`H2`, the odd quintic example |
//! | [`verify`] | named numeric checks aggregated into a deterministic report |
//! | [`cli`] | command-line front end |

pub mod boundary;
pub mod cli;
pub mod cmath;
pub mod criteria;
pub mod error;
pub mod extremal;
pub mod family;
pub mod grid;
pub mod herglotz;
pub mod json;
pub mod verify;

pub use error::{Error, Result};
pub use family::Order;

/// Complex numbers used throughout the crate.
pub type Complex = num_complex::Complex64;
