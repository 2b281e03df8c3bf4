use super::complex::{principal_sqrt, ComplexScalar};
use crate::error::{Error, Result};

/// Roots of `c2·z² + c1·z + c0 = 0` with their absolute residuals.
///
/// For a genuine quadratic `roots[0]` is the `+` root `(−c1 + √D)/(2c2)` and
/// `roots[1]` the `−` root, with `√D` principal. A linear equation yields a
/// single root.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSolution {
    pub roots: Vec<ComplexScalar>,
    pub residuals: Vec<f64>,
}

/// Cancellation-free quadratic solve: the larger-magnitude root comes from
/// the full formula, its companion from `c0 / q`.
pub fn solve_quadratic(
    c2: ComplexScalar,
    c1: ComplexScalar,
    c0: ComplexScalar,
) -> Result<QuadraticSolution> {
    let zero = ComplexScalar::new(0.0, 0.0);
    let roots = if c2 == zero {
        if c1 == zero {
            return Err(Error::NoSolution);
        }
        vec![-c0 / c1]
    } else {
        let sqrt_disc = principal_sqrt(c1 * c1 - 4.0 * c2 * c0);
        // pick the sign that adds magnitudes in c1 ± √D
        let aligned = (c1.conj() * sqrt_disc).re >= 0.0;
        let q = if aligned {
            -(c1 + sqrt_disc) * 0.5
        } else {
            -(c1 - sqrt_disc) * 0.5
        };
        if q == zero {
            vec![zero, zero]
        } else if aligned {
            // q / c2 is the minus root
            vec![c0 / q, q / c2]
        } else {
            vec![q / c2, c0 / q]
        }
    };
    let residuals = roots
        .iter()
        .map(|&z| (c2 * z * z + c1 * z + c0).norm())
        .collect();
    Ok(QuadraticSolution { roots, residuals })
}

/// Residual scaled by the largest term magnitude (floored at 1).
pub fn scaled_residual(c2: ComplexScalar, c1: ComplexScalar, c0: ComplexScalar, z: ComplexScalar) -> f64 {
    let (t2, t1) = (c2 * z * z, c1 * z);
    let scale = t2.norm().max(t1.norm()).max(c0.norm()).max(1.0);
    (t2 + t1 + c0).norm() / scale
}
