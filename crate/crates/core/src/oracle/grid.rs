use crate::error::{Error, Result};

/// Uniform radial grid `r_i = r_min + i·h`, `i = 0..n_points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_points: usize,
}

impl RadialGrid {
    pub const MIN_POINTS: usize = 16;
    pub const DEFAULT_POINTS: usize = 2000;

    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        let grid = RadialGrid { r_min, r_max, n_points };
        grid.validate()?;
        Ok(grid)
    }

    /// `[1e-6, 40/α]` with 2000 points.
    pub fn default_for(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Domain(format!("alpha must be positive and finite (got {alpha})")));
        }
        RadialGrid::new(1e-6, 40.0 / alpha, Self::DEFAULT_POINTS)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_min.is_finite()) {
            return Err(Error::Domain(format!("grid.r_min must be positive (got {})", self.r_min)));
        }
        if !(self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(Error::Domain(format!(
                "grid.r_max must exceed r_min (got r_min = {}, r_max = {})",
                self.r_min, self.r_max
            )));
        }
        if self.n_points < Self::MIN_POINTS {
            return Err(Error::Domain(format!(
                "grid.n_points must be at least {} (got {})",
                Self::MIN_POINTS,
                self.n_points
            )));
        }
        Ok(())
    }

    pub fn h(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    pub fn r(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + i as f64 * self.h()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.r(i)).collect()
    }
}
