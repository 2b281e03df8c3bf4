//! The intermediate results of the reduction as they are printed in closed
//! form, next to what the generic engine computes for the same triple.
//!
//! Nothing here feeds the spectrum. It exists to measure how far the
//! printed intermediate formulas are from the mechanical reduction.

use super::params::{u_and_v, DimensionlessParams};
use super::spectrum::paper_triple;
use crate::error::Result;
use crate::nu::{k_candidates, lambda_n_of, pi_tau_select, radicand_coeffs, Poly};
use crate::special::{principal_sqrt, ComplexScalar};

#[derive(Debug, Clone, PartialEq)]
pub struct PrintedForms {
    pub n: u32,
    pub u: ComplexScalar,
    pub v: ComplexScalar,
    /// Mechanical radicand times 4 at the first mechanical `k`.
    pub radicand_mechanical_x4: Poly,
    /// `(4k−4γ²)s² − 4β²s + β² + 4ε² + 4k` at the same `k`.
    pub radicand_printed_x4: Poly,
    pub radicand_delta: f64,
    pub k_mechanical: Vec<ComplexScalar>,
    /// `γ² − ε² − (β/2)² ± √(u² − v²)`, plus first.
    pub k_printed: [ComplexScalar; 2],
    /// Largest distance from a printed `k` to the nearest mechanical one.
    pub k_delta: f64,
    pub tau_mechanical: Option<Poly>,
    /// `(2 − √(u+v))s + √(u−v)`
    pub tau_printed: Poly,
    pub tau_delta: Option<f64>,
    pub lambda_mechanical: Option<ComplexScalar>,
    pub lambda_n_mechanical: Option<ComplexScalar>,
    /// `γ² − ε² − (β/2)² − √(u²−v²) − √(u+v)/2`
    pub lambda_printed_minus: ComplexScalar,
    /// Same with `+√(u²−v²)`, the sign of the selected `k`.
    pub lambda_printed_plus: ComplexScalar,
    /// `λ_n` from the printed τ: `n√(u+v) − n(n+1)`.
    pub lambda_n_printed_tau: ComplexScalar,
    /// `u√(u+v) − u(u+1)`, the printed `λ_n` with `u` in place of `n`.
    pub lambda_n_printed_u: ComplexScalar,
    pub lambda_n_u_for_n_delta: f64,
    pub residual_printed_minus: f64,
    pub residual_printed_plus: f64,
    /// `(β/2)² − γ² − n(n+1)`, the Σ defined beside the quadratic.
    pub sigma_inline: ComplexScalar,
}

fn max_coeff_delta(a: &Poly, b: &Poly) -> f64 {
    (*a - *b).magnitude()
}

pub fn evaluate(dp: &DimensionlessParams, n: u32) -> Result<PrintedForms> {
    let problem = paper_triple(dp);
    let (u, v) = u_and_v(dp);
    let (eps2, beta2, gamma2) = (dp.eps2, dp.beta2, dp.gamma2);
    let nf = n as f64;

    let ks = k_candidates(&problem)?;
    let k0 = ks[0].k;
    let radicand_mechanical_x4 = radicand_coeffs(&problem, k0).scale(4.0.into());
    let radicand_printed_x4 = Poly::new(beta2 + 4.0 * eps2 + 4.0 * k0, -4.0 * beta2, 4.0 * k0 - 4.0 * gamma2);

    let root_uv = principal_sqrt(u * u - v * v);
    let k_base = gamma2 - eps2 - beta2 / 4.0;
    let k_printed = [k_base + root_uv, k_base - root_uv];
    let k_mechanical: Vec<ComplexScalar> = ks.iter().map(|c| c.k).collect();
    let k_delta = k_printed
        .iter()
        .map(|kp| k_mechanical.iter().map(|km| (kp - km).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);

    let sqrt_upv = principal_sqrt(u + v);
    let tau_printed = Poly::linear(principal_sqrt(u - v), 2.0 - sqrt_upv);
    let selection = pi_tau_select(&problem).ok();
    let chosen = selection.as_ref().map(|s| *s.solution());

    let lambda_printed_minus = k_base - root_uv - sqrt_upv / 2.0;
    let lambda_printed_plus = k_base + root_uv - sqrt_upv / 2.0;
    let lambda_n_printed_tau = lambda_n_of(&problem, &tau_printed, n);
    let lambda_n_printed_u = u * sqrt_upv - u * (u + 1.0);

    Ok(PrintedForms {
        n,
        u,
        v,
        radicand_delta: max_coeff_delta(&radicand_mechanical_x4, &radicand_printed_x4),
        radicand_mechanical_x4,
        radicand_printed_x4,
        k_mechanical,
        k_printed,
        k_delta,
        tau_mechanical: chosen.map(|s| s.tau),
        tau_delta: chosen.map(|s| max_coeff_delta(&s.tau, &tau_printed)),
        tau_printed,
        lambda_mechanical: chosen.map(|s| s.lambda),
        lambda_n_mechanical: chosen.map(|s| lambda_n_of(&problem, &s.tau, n)),
        lambda_printed_minus,
        lambda_printed_plus,
        lambda_n_printed_tau,
        lambda_n_printed_u,
        lambda_n_u_for_n_delta: (lambda_n_printed_u - lambda_n_printed_tau).norm(),
        residual_printed_minus: (lambda_printed_minus - lambda_n_printed_tau).norm(),
        residual_printed_plus: (lambda_printed_plus - lambda_n_printed_tau).norm(),
        sigma_inline: beta2 / 4.0 - gamma2 - nf * (nf + 1.0),
    })
}
