//! Numerical ground truth for the radial equation.
//!
//! Two independent real-arithmetic eigensolvers work on an arbitrary sampled
//! potential: a finite-difference discretization diagonalized by Sturm
//! bisection ([`fd_spectrum`]) and Numerov shooting with node counting
//! ([`numerov_spectrum`]). [`compare_levels`] tabulates closed-form levels
//! against either, and [`approximation_study`] measures what replacing the
//! exact centrifugal barrier by its `cosech²` form does to the spectrum.

mod compare;
mod fd;
mod grid;
mod numerov;
mod study;
pub mod tridiag;

pub use compare::{compare_levels, ComparisonReport, ComparisonRow, ComparisonSummary, Matching};
pub use fd::{fd_hamiltonian, fd_spectrum, fd_spectrum_effective};
pub use grid::RadialGrid;
pub use numerov::{numerov_spectrum, numerov_spectrum_effective};
pub use study::{approximation_study, approximation_sweep, StudyLevel, StudyReport};
pub use tridiag::SymTridiagonal;

use crate::potential::{centrifugal_factor, PhysicalConstants, PotentialParams};

/// Which solver produced a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    FiniteDifference,
    Numerov,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::FiniteDifference => "finite_difference",
            Method::Numerov => "numerov",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericLevel {
    pub index: usize,
    pub energy: f64,
    /// Interior sign changes of the returned wavefunction.
    pub node_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpectrum {
    pub method: Method,
    pub l: u32,
    pub grid: RadialGrid,
    pub levels: Vec<NumericLevel>,
    /// `u(r)` on every grid point, `∫u² dr = 1` by the trapezoid rule.
    pub wavefunctions: Vec<Vec<f64>>,
    pub notes: Vec<String>,
}

impl NumericSpectrum {
    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Behaviour of the effective potential as `r → 0⁺`, dominated by the
/// inverse-square pieces `(bV₁ − cV₂)/(α²r²)` and the centrifugal barrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OriginBehaviour {
    /// No inverse-square term.
    Regular,
    Repulsive { strength: f64 },
    /// Attractive but above the `−1/4` threshold: self-adjoint, solvable.
    AttractiveSubcritical { strength: f64 },
    /// Below `−1/4` (in units of `ħ²/2m`): the spectrum is unbounded below and
    /// grid results depend on `r_min`.
    FallToCenter { strength: f64 },
}

impl OriginBehaviour {
    pub fn is_reliable(self) -> bool {
        !matches!(self, OriginBehaviour::FallToCenter { .. })
    }

    pub fn note(self) -> Option<String> {
        match self {
            OriginBehaviour::FallToCenter { strength } => Some(format!(
                "unreliable: inverse-square coefficient {strength:.6} (units of hbar^2/2m) is below the fall-to-center threshold -1/4; levels depend on r_min"
            )),
            OriginBehaviour::AttractiveSubcritical { strength } => Some(format!(
                "attractive inverse-square coefficient {strength:.6} (units of hbar^2/2m) is above -1/4; regular boundary condition used"
            )),
            _ => None,
        }
    }
}

/// Classifies the small-`r` singularity of `V + ħ²l(l+1)/(2mr²)`.
pub fn origin_behaviour(params: &PotentialParams, consts: &PhysicalConstants, l: u32) -> OriginBehaviour {
    let kinetic = consts.kinetic_scale();
    let strength = params.inverse_square_strength() / (params.alpha * params.alpha * kinetic) + centrifugal_factor(l);
    if strength == 0.0 {
        OriginBehaviour::Regular
    } else if strength > 0.0 {
        OriginBehaviour::Repulsive { strength }
    } else if strength >= -0.25 {
        OriginBehaviour::AttractiveSubcritical { strength }
    } else {
        OriginBehaviour::FallToCenter { strength }
    }
}

/// Marks which levels lie strictly below `asymptote`.
pub fn bound_flags(spectrum: &NumericSpectrum, asymptote: f64) -> Vec<bool> {
    spectrum.levels.iter().map(|l| l.energy < asymptote).collect()
}

/// Trapezoid `∫f² dr` on a uniform grid.
pub(crate) fn trapezoid_norm2(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let inner: f64 = values.iter().map(|v| v * v).sum();
    h * (inner - 0.5 * (values[0] * values[0] + values[n - 1] * values[n - 1]))
}

/// Sign changes, ignoring samples below `1e-10·max|u|`.
pub(crate) fn count_nodes(values: &[f64]) -> usize {
    let peak = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = 1e-10 * peak;
    let mut last = 0.0_f64;
    let mut nodes = 0;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            nodes += 1;
        }
        last = v;
    }
    nodes
}

/// Scales to unit trapezoid norm with the first significant lobe positive.
pub(crate) fn normalize_samples(values: &mut [f64], h: f64) {
    let norm = trapezoid_norm2(values, h).sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return;
    }
    let peak = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let sign = values.iter().find(|v| v.abs() > 1e-3 * peak).map_or(1.0, |v| v.signum());
    let scale = sign / norm;
    values.iter_mut().for_each(|v| *v *= scale);
}
