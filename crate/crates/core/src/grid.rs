use serde::Serialize;

use crate::Complex;

/// A polar grid `r_i e^{i phi_j}` excluding the origin.
///
/// Radii are spaced geometrically in `1 - r`, from `1 - (1 - r_max)^(1/n)` up
/// to `r_max`, so the grid is densest next to the circle where extremal
/// behaviour lives. Angles are `2 pi j / n_angles`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarGrid {
    pub n_radii: usize,
    pub n_angles: usize,
    pub r_max: f64,
}

impl Default for PolarGrid {
    fn default() -> Self {
        Self {
            n_radii: 36,
            n_angles: 72,
            r_max: 0.999,
        }
    }
}

impl PolarGrid {
    pub fn new(n_radii: usize, n_angles: usize, r_max: f64) -> Self {
        assert!(
            n_radii > 0 && n_angles > 0,
            "grid needs at least one radius and angle"
        );
        assert!(r_max > 0.0 && r_max < 1.0, "grid radius must lie in (0, 1)");
        Self {
            n_radii,
            n_angles,
            r_max,
        }
    }

    pub fn radii(&self) -> Vec<f64> {
        let gap = 1.0 - self.r_max;
        (1..=self.n_radii)
            .map(|i| {
                if i == self.n_radii {
                    self.r_max
                } else {
                    1.0 - gap.powf(i as f64 / self.n_radii as f64)
                }
            })
            .collect()
    }

    pub fn angles(&self) -> Vec<f64> {
        (0..self.n_angles)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / self.n_angles as f64)
            .collect()
    }

    pub fn points(&self) -> Vec<Complex> {
        let radii = self.radii();
        self.angles()
            .into_iter()
            .flat_map(|a| radii.iter().map(move |&r| Complex::from_polar(r, a)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.n_radii * self.n_angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
