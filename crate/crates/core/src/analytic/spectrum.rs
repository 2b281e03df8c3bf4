use super::params::{
    aux_quantities, beta2_gamma2, dimensionless_params, energy_from_eps2, DimensionlessParams,
    EpsGrouping,
};
use super::wavefunction::{ode_residual_of, unnormalized_wavefunction, OdeSamples};
use crate::error::{Error, Result};
use crate::nu::{enumerate_branches, lambda_n_of, NuProblem, NuSolution, Poly};
use crate::potential::{PhysicalConstants, PotentialParams};
use crate::special::{principal_sqrt, scaled_residual, solve_quadratic, ComplexScalar};

/// Which root of the quantization quadratic a level comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    PlusRoot,
    MinusRoot,
}

impl RootBranch {
    pub fn label(self) -> &'static str {
        match self {
            RootBranch::PlusRoot => "plus",
            RootBranch::MinusRoot => "minus",
        }
    }
}

/// Form of the constant coefficient of the quantization quadratic.
///
/// `AsPrinted` carries the `−((n+1)/2)·√(v + iv)` term of the quadratic;
/// `WithVaux` uses `−((n+1)/2)·√v + i·V` with `V` the auxiliary constant
/// defined alongside `Σ`, as in the solved closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstantTermForm {
    #[default]
    AsPrinted,
    WithVaux,
}

/// `C2·(ε²)² + C1·ε² + C0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizationCoefficients {
    pub c2: ComplexScalar,
    pub c1: ComplexScalar,
    pub c0: ComplexScalar,
}

/// Builds the quadratic in `ε²`. The coefficients depend on `n`, `l` and the
/// potential but not on the energy.
pub fn quantization_coefficients(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    n: u32,
    l: u32,
    form: ConstantTermForm,
) -> Result<QuantizationCoefficients> {
    let i = ComplexScalar::i();
    let (beta2, gamma2) = beta2_gamma2(params, consts, l);
    let (beta2, gamma2) = (ComplexScalar::from(beta2), ComplexScalar::from(gamma2));
    let beta = principal_sqrt(beta2);
    let gamma = principal_sqrt(gamma2);
    if beta.norm() == 0.0 {
        return Err(Error::Singular { denominator: "beta" });
    }
    if gamma.norm() == 0.0 {
        return Err(Error::Singular { denominator: "gamma" });
    }
    let v = i * beta * principal_sqrt(gamma2 + beta2 * 2.5);
    if v.norm() == 0.0 {
        return Err(Error::Singular { denominator: "v" });
    }
    // ε² only enters u, which the coefficients do not use
    let dp = DimensionlessParams { eps2: 0.0.into(), beta2, gamma2, beta };
    let aux = aux_quantities(&dp, params, consts, n, l);
    let np1 = n as f64 + 1.0;
    let r8 = 8.0 * std::f64::consts::SQRT_2;
    let c2 = np1 / (r8 * beta * gamma) + i * (gamma / (r8 * beta) - 1.0 / (2.0 * v));
    let c1 = -(1.0 + i * beta2 / 4.0 * (1.0 + 1.0 / v));
    let root_term = match form {
        ConstantTermForm::AsPrinted => -(np1 / 2.0) * principal_sqrt(v + i * v),
        ConstantTermForm::WithVaux => -(np1 / 2.0) * principal_sqrt(v) + i * aux.v_aux,
    };
    let c0 = -(aux.sigma_big + root_term
        + beta * gamma / (2.0 * std::f64::consts::SQRT_2) * (np1 + i * gamma2)
        - i * gamma2 * gamma2 / 2.0);
    Ok(QuantizationCoefficients { c2, c1, c0 })
}

/// One closed-form level.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub l: u32,
    pub branch: RootBranch,
    /// Complex energy; `Re` is reported as the physical level.
    pub energy: ComplexScalar,
    /// Root `ε²` of the quantization quadratic.
    pub eps2: ComplexScalar,
    /// Energy with `d` grouped as in the closed-form inversion.
    pub energy_alt_grouping: ComplexScalar,
    /// Scaled back-substitution residual of the quadratic.
    pub residual_quantization: f64,
    /// Scaled residual of the working ODE, `None` when it could not be
    /// evaluated (see `residual_ode_note`).
    pub residual_ode: Option<f64>,
    pub residual_ode_note: Option<String>,
    pub imag_magnitude: f64,
}

impl EnergyLevel {
    pub fn physical_energy(&self) -> f64 {
        self.energy.re
    }
}

/// Both branches of the closed-form spectrum for `(n, l)`, plus first.
pub fn energy_levels(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    n: u32,
    l: u32,
) -> Result<[EnergyLevel; 2]> {
    energy_levels_with(params, consts, n, l, ConstantTermForm::AsPrinted)
}

pub fn energy_levels_with(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    n: u32,
    l: u32,
    form: ConstantTermForm,
) -> Result<[EnergyLevel; 2]> {
    params.validate()?;
    consts.validate()?;
    let q = quantization_coefficients(params, consts, n, l, form)?;
    let sol = solve_quadratic(q.c2, q.c1, q.c0)?;
    let level = |eps2: ComplexScalar, branch: RootBranch| {
        let energy = energy_from_eps2(params, consts, l, eps2, EpsGrouping::OdeBracket);
        let mut level = EnergyLevel {
            n,
            l,
            branch,
            energy,
            eps2,
            energy_alt_grouping: energy_from_eps2(params, consts, l, eps2, EpsGrouping::SpectrumInversion),
            residual_quantization: scaled_residual(q.c2, q.c1, q.c0, eps2),
            residual_ode: None,
            residual_ode_note: None,
            imag_magnitude: energy.im.abs(),
        };
        let ode = unnormalized_wavefunction(params, consts, &level).and_then(|wf| {
            ode_residual_of(&wf, params, consts, &OdeSamples::default_for(params.alpha))
        });
        match ode {
            Ok(r) => level.residual_ode = Some(r),
            Err(e) => level.residual_ode_note = Some(e.to_string()),
        }
        level
    };
    Ok([
        level(sol.roots[0], RootBranch::PlusRoot),
        level(sol.roots[1], RootBranch::MinusRoot),
    ])
}

/// `σ = 1 + s²`, `τ̄ = β + 2s`, `σ̄ = −ε² + β²s + γ²s²`.
pub fn paper_triple(dp: &DimensionlessParams) -> NuProblem {
    let one = ComplexScalar::new(1.0, 0.0);
    NuProblem {
        sigma: Poly::new(one, 0.0.into(), one),
        sigma_bar: Poly::new(-dp.eps2, dp.beta2, dp.gamma2),
        tau_bar: Poly::linear(dp.beta, 2.0.into()),
    }
}

/// `|λ − λ_n|` with both sides from the generic engine.
pub fn quantization_residual(problem: &NuProblem, sol: &NuSolution, n: u32) -> f64 {
    (sol.lambda - lambda_n_of(problem, &sol.tau, n)).norm()
}

/// The quantization condition re-evaluated through the generic engine at a
/// level's `ε²`.
///
/// When no branch has `Re(τ') < 0` the branch with the smallest `Re(τ')`
/// is used and `admissible_branches` is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizationCheck {
    pub lambda: ComplexScalar,
    pub lambda_n: ComplexScalar,
    pub residual: f64,
    pub tau_prime: ComplexScalar,
    pub admissible_branches: usize,
}

pub fn quantization_cross_check(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    level: &EnergyLevel,
) -> Result<QuantizationCheck> {
    let dp = dimensionless_params(params, consts, level.energy, level.l);
    let problem = paper_triple(&dp);
    let branches = enumerate_branches(&problem)?;
    let admissible = branches.iter().filter(|b| b.tau_prime().re < 0.0).count();
    let sol = branches
        .iter()
        .min_by(|x, y| x.tau_prime().re.total_cmp(&y.tau_prime().re))
        .expect("at least one k candidate yields two branches");
    Ok(QuantizationCheck {
        lambda: sol.lambda,
        lambda_n: lambda_n_of(&problem, &sol.tau, level.n),
        residual: quantization_residual(&problem, sol, level.n),
        tau_prime: sol.tau_prime(),
        admissible_branches: admissible,
    })
}
