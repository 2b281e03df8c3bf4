//! Closed-form bound-state pipeline for the generalized inverted hyperbolic
//! potential.
//!
//! After `R = e^{−βr/2}F`, `1/r² ≈ α²cosech²(αr)` and `s = coth(αr)`, the
//! radial equation becomes a hypergeometric-type equation with
//! `σ = 1 + s²`, `τ̄ = β + 2s`, `σ̄ = −ε² + β²s + γ²s²`. Energies come from
//! the quadratic in `ε²` that the reduction produces; wavefunctions from the
//! weight function, the `φ` factor and a Jacobi polynomial in `i·coth(αr)`.
//!
//! The formulas are implemented as published. Where the published algebra
//! is inconsistent the alternatives are exposed side by side ([`EpsGrouping`],
//! [`ConstantTermForm`], [`printed`]) so the discrepancy can be measured
//! instead of hidden. Every square root is the principal one.

mod params;
pub mod printed;
mod spectrum;
mod wavefunction;

pub use params::{
    aux_quantities, dimensionless_params, dimensionless_params_with, energy_from_eps2,
    AuxQuantities, DimensionlessParams, EpsGrouping,
};
pub use spectrum::{
    energy_levels, energy_levels_with, paper_triple, quantization_coefficients,
    quantization_cross_check, quantization_residual, ConstantTermForm, EnergyLevel,
    QuantizationCheck, QuantizationCoefficients, RootBranch,
};
pub use wavefunction::{
    ode_residual, radial_wavefunction, unnormalized_wavefunction, wavefunction_parts,
    OdeSamples, RadialWavefunction, NORMALIZATION_WINDOW,
};
