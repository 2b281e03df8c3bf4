use crate::potential::{centrifugal_factor, PhysicalConstants, PotentialParams};
use crate::special::{principal_sqrt, ComplexScalar};

/// How the constant `d` enters `ε²`.
///
/// The change of variables yields `ε² = −(2m/ħ²α²)[E + (β/2)² + cV2 −
/// α²l(l+1) − d]`; the closed-form energy expression instead subtracts `d`
/// after inverting, which corresponds to `+d` inside the bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsGrouping {
    #[default]
    OdeBracket,
    SpectrumInversion,
}

impl EpsGrouping {
    fn d_sign(self) -> f64 {
        match self {
            EpsGrouping::OdeBracket => -1.0,
            EpsGrouping::SpectrumInversion => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    pub eps2: ComplexScalar,
    pub beta2: ComplexScalar,
    pub gamma2: ComplexScalar,
    /// Ansatz decay rate, `principal_sqrt(beta2)`. The same symbol serves
    /// as the dimensionless constant and as the rate in `e^{−βr/2}`.
    pub beta: ComplexScalar,
}

impl DimensionlessParams {
    pub fn gamma(&self) -> ComplexScalar {
        principal_sqrt(self.gamma2)
    }
}

/// `2m/(ħ²α²)`.
pub(crate) fn scale_factor(params: &PotentialParams, consts: &PhysicalConstants) -> f64 {
    2.0 * consts.mass / (consts.hbar * consts.hbar * params.alpha * params.alpha)
}

/// `(β², γ²)`, independent of the energy.
pub(crate) fn beta2_gamma2(params: &PotentialParams, consts: &PhysicalConstants, l: u32) -> (f64, f64) {
    let f = scale_factor(params, consts);
    let a2 = params.alpha * params.alpha;
    let beta2 = f * params.a * params.v0;
    let gamma2 = f * (params.c * params.v2 - params.b * params.v1 - a2 * centrifugal_factor(l));
    (beta2, gamma2)
}

pub fn dimensionless_params(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    energy: ComplexScalar,
    l: u32,
) -> DimensionlessParams {
    dimensionless_params_with(params, consts, energy, l, EpsGrouping::OdeBracket)
}

pub fn dimensionless_params_with(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    energy: ComplexScalar,
    l: u32,
    grouping: EpsGrouping,
) -> DimensionlessParams {
    let f = scale_factor(params, consts);
    let (beta2, gamma2) = beta2_gamma2(params, consts, l);
    let a2 = params.alpha * params.alpha;
    let bracket = energy + beta2 / 4.0 + params.c * params.v2 - a2 * centrifugal_factor(l)
        + grouping.d_sign() * params.d;
    DimensionlessParams {
        eps2: -bracket * f,
        beta2: beta2.into(),
        gamma2: gamma2.into(),
        beta: principal_sqrt(beta2.into()),
    }
}

/// Inverse of the `ε²` definition: the energy belonging to a given `ε²`.
pub fn energy_from_eps2(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    l: u32,
    eps2: ComplexScalar,
    grouping: EpsGrouping,
) -> ComplexScalar {
    let f = scale_factor(params, consts);
    let (beta2, _) = beta2_gamma2(params, consts, l);
    let a2 = params.alpha * params.alpha;
    -eps2 / f - beta2 / 4.0 - params.c * params.v2 + a2 * centrifugal_factor(l)
        - grouping.d_sign() * params.d
}

/// Auxiliary constants of the spectrum and the wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxQuantities {
    /// `√(ε⁴ + ε²β²/2) + γ²`
    pub u: ComplexScalar,
    /// `iβ·√(γ² + 5β²/2)`
    pub v: ComplexScalar,
    /// `(2m/ħ²α²)[aV0/2 − cV2 + bV1 + α²l(l+1) + ħ²α²n(n+1)/2m]`
    pub sigma_big: ComplexScalar,
    /// `i(2m/ħ²α²)·√(aV0 + cV2 − bV1 − α²l(l+1))`
    pub v_aux: ComplexScalar,
    /// `2 − √(u+v)`
    pub mu: ComplexScalar,
    /// `√(u−v)`
    pub nu: ComplexScalar,
    /// Jacobi shift `A = μ + iν`; the polynomial is `P_n^{(2+A, 2−A)}`.
    pub a_param: ComplexScalar,
    /// `B = (ν + β)/(2i)`
    pub b_param: ComplexScalar,
}

/// `(u, v)` from the dimensionless triple.
pub(crate) fn u_and_v(dp: &DimensionlessParams) -> (ComplexScalar, ComplexScalar) {
    let (eps2, beta2, gamma2) = (dp.eps2, dp.beta2, dp.gamma2);
    // ε²√(1 + β²/2ε²) rewritten so that ε² = 0 is regular
    let u = principal_sqrt(eps2 * eps2 + eps2 * beta2 / 2.0) + gamma2;
    let v = ComplexScalar::i() * dp.beta * principal_sqrt(gamma2 + beta2 * 2.5);
    (u, v)
}

pub fn aux_quantities(
    dp: &DimensionlessParams,
    params: &PotentialParams,
    consts: &PhysicalConstants,
    n: u32,
    l: u32,
) -> AuxQuantities {
    let i = ComplexScalar::i();
    let (u, v) = u_and_v(dp);
    let f = scale_factor(params, consts);
    let a2 = params.alpha * params.alpha;
    let cf = centrifugal_factor(l);
    let nf = n as f64;
    let sigma_big = f
        * (params.a * params.v0 / 2.0 - params.c * params.v2
            + params.b * params.v1
            + a2 * cf
            + consts.kinetic_scale() * a2 * nf * (nf + 1.0));
    let v_aux = i
        * f
        * principal_sqrt(
            (params.a * params.v0 + params.c * params.v2 - params.b * params.v1 - a2 * cf).into(),
        );
    let mu = 2.0 - principal_sqrt(u + v);
    let nu = principal_sqrt(u - v);
    AuxQuantities {
        u,
        v,
        sigma_big: sigma_big.into(),
        v_aux,
        mu,
        nu,
        a_param: mu + i * nu,
        b_param: (nu + dp.beta) / (2.0 * i),
    }
}
