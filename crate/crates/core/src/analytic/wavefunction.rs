use super::params::{aux_quantities, dimensionless_params, AuxQuantities};
use super::spectrum::{EnergyLevel, RootBranch};
use crate::error::{DivergenceEnd, Error, Result};
use crate::potential::{centrifugal_factor, PhysicalConstants, PotentialParams};
use crate::special::{hyperbolic_pair, jacobi, principal_pow, principal_sqrt, ComplexScalar, JacobiSpec};

/// Normalization quadrature runs over `[lo/α, hi/α]`.
pub const NORMALIZATION_WINDOW: (f64, f64) = (1e-6, 40.0);
const NORMALIZATION_TOL: f64 = 1e-8;
/// Integrand density allowed at either end of the window, relative to the
/// integral, before the wavefunction is declared non-normalizable there.
const END_DENSITY_LIMIT: f64 = 1e-6;

/// Weight function `ρ(s)` and the factor `φ(s)` at a complex point `s`.
pub fn wavefunction_parts(aux: &AuxQuantities, s: ComplexScalar) -> Result<(ComplexScalar, ComplexScalar)> {
    let i = ComplexScalar::i();
    let (up, down) = (1.0 + i * s, 1.0 - i * s);
    if up.norm() == 0.0 || down.norm() == 0.0 {
        return Err(Error::Pole(format!("{s}")));
    }
    let one_plus_s2 = 1.0 + s * s;
    let rho = principal_pow(up / down, aux.mu + i * aux.nu) / (one_plus_s2 * one_plus_s2);
    let phi = principal_pow(up, (aux.mu + aux.b_param) / 2.0)
        * principal_pow(down, (aux.mu - aux.b_param) / 2.0);
    Ok((rho, phi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum PolynomialFactor {
    Unit,
    Jacobi { a: ComplexScalar, b: ComplexScalar },
}

/// Closed-form radial wavefunction
///
/// ```text
/// R(r) = N·(1 + i·coth αr)^{(μ+B)/2}·(1 − i·coth αr)^{(μ−B)/2}
///          ·P_n^{(2+A, 2−A)}(i·coth αr)·e^{−βr/2}
/// ```
///
/// The trailing `e^{−βr/2}` is the ansatz factor `R = e^{−βr/2}F`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction {
    pub n: u32,
    pub l: u32,
    pub branch: RootBranch,
    pub energy: ComplexScalar,
    pub aux: AuxQuantities,
    pub norm_constant: ComplexScalar,
    alpha: f64,
    beta: ComplexScalar,
    poly: PolynomialFactor,
}

impl RadialWavefunction {
    /// True unless `n = 0`, where the polynomial factor is identically 1 and
    /// no recurrence is evaluated.
    pub fn uses_jacobi(&self) -> bool {
        matches!(self.poly, PolynomialFactor::Jacobi { .. })
    }

    /// `F(r) = R(r)·e^{βr/2}`.
    pub fn f_value(&self, r: f64) -> ComplexScalar {
        let coth = match hyperbolic_pair(self.alpha * r) {
            Ok(h) => h.coth,
            Err(_) => return ComplexScalar::new(f64::NAN, f64::NAN),
        };
        let x = ComplexScalar::new(0.0, coth);
        let aux = &self.aux;
        let pre = principal_pow(1.0 + x, (aux.mu + aux.b_param) / 2.0)
            * principal_pow(1.0 - x, (aux.mu - aux.b_param) / 2.0);
        let poly = match self.poly {
            PolynomialFactor::Unit => ComplexScalar::new(1.0, 0.0),
            PolynomialFactor::Jacobi { a, b } => jacobi(&JacobiSpec { n: self.n as usize, a, b, x })
                .expect("degeneracy checked at construction"),
        };
        self.norm_constant * pre * poly
    }

    /// `R(r)`; NaN for `r <= 0`.
    pub fn value(&self, r: f64) -> ComplexScalar {
        self.f_value(r) * (-self.beta * r / 2.0).exp()
    }

    /// `Ψ = R/r`.
    pub fn psi(&self, r: f64) -> ComplexScalar {
        self.value(r) / r
    }

    /// `∫|R|² dr` over the normalization window.
    pub fn normalization_integral(&self) -> Result<f64> {
        let (lo, hi) = NORMALIZATION_WINDOW;
        let (t0, t1) = ((lo / self.alpha).ln(), (hi / self.alpha).ln());
        let density = |t: f64| {
            let r = t.exp();
            self.value(r).norm_sqr() * r
        };
        let (g0, g1) = (density(t0), density(t1));
        if !g0.is_finite() {
            return Err(Error::NonNormalizable { end: DivergenceEnd::Origin });
        }
        if !g1.is_finite() {
            return Err(Error::NonNormalizable { end: DivergenceEnd::Infinity });
        }
        let integral = trapezoid_doubling(&density, t0, t1, g0, g1)?;
        if g0 > END_DENSITY_LIMIT * integral || integral == 0.0 {
            return Err(Error::NonNormalizable { end: DivergenceEnd::Origin });
        }
        if g1 > END_DENSITY_LIMIT * integral {
            return Err(Error::NonNormalizable { end: DivergenceEnd::Infinity });
        }
        Ok(integral)
    }

    /// Rescales `N` so that `∫|R|² dr = 1`; returns the integral found
    /// before rescaling.
    pub fn normalize(&mut self) -> Result<f64> {
        let integral = self.normalization_integral()?;
        self.norm_constant /= integral.sqrt();
        Ok(integral)
    }
}

/// Trapezoid rule in `t = ln r`, halving the step until successive
/// estimates agree to the normalization tolerance.
fn trapezoid_doubling(g: &dyn Fn(f64) -> f64, t0: f64, t1: f64, g0: f64, g1: f64) -> Result<f64> {
    const MAX_INTERVALS: usize = 1 << 20;
    let mut n = 64usize;
    let mut h = (t1 - t0) / n as f64;
    let mut sum = 0.5 * (g0 + g1);
    for i in 1..n {
        sum += g(t0 + h * i as f64);
    }
    let mut estimate = h * sum;
    while n < MAX_INTERVALS {
        h *= 0.5;
        for j in 0..n {
            let t = t0 + h * (2 * j + 1) as f64;
            let v = g(t);
            if !v.is_finite() {
                let end = if t < 0.5 * (t0 + t1) { DivergenceEnd::Origin } else { DivergenceEnd::Infinity };
                return Err(Error::NonNormalizable { end });
            }
            sum += v;
        }
        n *= 2;
        let refined = h * sum;
        if (refined - estimate).abs() <= NORMALIZATION_TOL * refined.abs() {
            return Ok(refined);
        }
        estimate = refined;
    }
    Err(Error::Convergence { iterations: MAX_INTERVALS })
}

/// Wavefunction with `N = 1`.
pub fn unnormalized_wavefunction(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    level: &EnergyLevel,
) -> Result<RadialWavefunction> {
    let dp = dimensionless_params(params, consts, level.energy, level.l);
    let aux = aux_quantities(&dp, params, consts, level.n, level.l);
    let poly = if level.n == 0 {
        PolynomialFactor::Unit
    } else {
        let (a, b) = (2.0 + aux.a_param, 2.0 - aux.a_param);
        // surfaces degenerate parameters once; they do not depend on x
        jacobi(&JacobiSpec { n: level.n as usize, a, b, x: 0.0.into() })?;
        PolynomialFactor::Jacobi { a, b }
    };
    Ok(RadialWavefunction {
        n: level.n,
        l: level.l,
        branch: level.branch,
        energy: level.energy,
        aux,
        norm_constant: ComplexScalar::new(1.0, 0.0),
        alpha: params.alpha,
        beta: dp.beta,
        poly,
    })
}

/// Normalized closed-form wavefunction for a level from
/// [`energy_levels`](super::energy_levels).
pub fn radial_wavefunction(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    level: &EnergyLevel,
) -> Result<RadialWavefunction> {
    let mut wf = unnormalized_wavefunction(params, consts, level)?;
    wf.normalize()?;
    Ok(wf)
}

/// Sample centers and finite-difference step for [`ode_residual`].
#[derive(Debug, Clone, PartialEq)]
pub struct OdeSamples {
    pub centers: Vec<f64>,
    pub step: f64,
    /// Largest acceptable truncation estimate relative to the residual scale.
    pub tolerance: f64,
}

impl OdeSamples {
    /// 40 centers on `[0.5/α, 10/α]`, step `1e−3/α`.
    pub fn default_for(alpha: f64) -> Self {
        let (lo, hi) = (0.5 / alpha, 10.0 / alpha);
        OdeSamples {
            centers: (0..40).map(|i| lo + (hi - lo) * i as f64 / 39.0).collect(),
            step: 1e-3 / alpha,
            tolerance: 1e-2,
        }
    }
}

/// Scaled residual of the working ODE
///
/// ```text
/// F'' − βF' + (2m/ħ²)[E + aV0·coth − bV1·coth² + cV2·cosech²
///                     − α²l(l+1)·cosech² − d + (β/2)²]·F
/// ```
///
/// with central differences. The maximum over centers is divided by the
/// largest individual term magnitude, so the result does not depend on the
/// normalization of `f`.
pub fn ode_residual(
    f: impl Fn(f64) -> ComplexScalar,
    params: &PotentialParams,
    consts: &PhysicalConstants,
    energy: ComplexScalar,
    l: u32,
    samples: &OdeSamples,
) -> Result<f64> {
    let h = samples.step;
    let beta2 = ComplexScalar::from(2.0 * consts.mass * params.a * params.v0
        / (consts.hbar * consts.hbar * params.alpha * params.alpha));
    let beta = principal_sqrt(beta2);
    let k2 = 2.0 * consts.mass / (consts.hbar * consts.hbar);
    let a2 = params.alpha * params.alpha;
    let cf = centrifugal_factor(l);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    let mut truncation = 0.0f64;
    for &r in &samples.centers {
        if !(r - 2.0 * h > 0.0) {
            return Err(Error::Domain(format!("ODE sample at r = {r} reaches r <= 0 with step {h}")));
        }
        let hp = hyperbolic_pair(params.alpha * r)?;
        let q = k2
            * (energy + params.a * params.v0 * hp.coth - params.b * params.v1 * hp.coth * hp.coth
                + params.c * params.v2 * hp.cosech2
                - a2 * cf * hp.cosech2
                - params.d
                + beta2 / 4.0);
        let (fm2, fm1, f0, fp1, fp2) = (f(r - 2.0 * h), f(r - h), f(r), f(r + h), f(r + 2.0 * h));
        let d2 = (fp1 - 2.0 * f0 + fm1) / (h * h);
        let d2_coarse = (fp2 - 2.0 * f0 + fm2) / (4.0 * h * h);
        let d1 = (fp1 - fm1) / (2.0 * h);
        let terms = [d2, beta * d1, q * f0];
        if terms.iter().any(|t| !t.re.is_finite() || !t.im.is_finite()) {
            return Err(Error::Overflow { term: "ODE residual", r });
        }
        worst = worst.max((terms[0] - terms[1] + terms[2]).norm());
        scale = terms.iter().fold(scale, |m, t| m.max(t.norm()));
        truncation = truncation.max((d2 - d2_coarse).norm() / 3.0);
    }
    if scale == 0.0 {
        return Ok(0.0);
    }
    let estimate = truncation / scale;
    if estimate > samples.tolerance {
        return Err(Error::Resolution { estimate, tolerance: samples.tolerance });
    }
    Ok(worst / scale)
}

pub(crate) fn ode_residual_of(
    wf: &RadialWavefunction,
    params: &PotentialParams,
    consts: &PhysicalConstants,
    samples: &OdeSamples,
) -> Result<f64> {
    ode_residual(|r| wf.f_value(r), params, consts, wf.energy, wf.l, samples)
}
