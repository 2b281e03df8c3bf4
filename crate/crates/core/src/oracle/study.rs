use super::{fd_spectrum_effective, RadialGrid};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::potential::{centrifugal_factor, eval_potential, PhysicalConstants, PotentialParams};
use crate::special::hyperbolic_pair;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyLevel {
    pub index: usize,
    /// Level with the exact `1/r²` barrier.
    pub exact: f64,
    /// Level with the `α²cosech²(αr)` barrier.
    pub approx: f64,
    /// `approx − exact`.
    pub shift: f64,
    /// `|shift| / |exact|`.
    pub rel_shift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyReport {
    pub alpha: f64,
    pub l: u32,
    pub grid: RadialGrid,
    pub levels: Vec<StudyLevel>,
}

impl StudyReport {
    pub fn max_abs_shift(&self) -> f64 {
        self.levels.iter().map(|l| l.shift.abs()).fold(0.0, f64::max)
    }

    pub fn max_rel_shift(&self) -> f64 {
        self.levels.iter().map(|l| l.rel_shift).fold(0.0, f64::max)
    }
}

fn sampled_potential(params: &PotentialParams) -> impl Fn(f64) -> f64 + Sync + '_ {
    move |r| eval_potential(params, r).unwrap_or(f64::NAN)
}

/// Solves the finite-difference problem with the exact barrier and with its
/// `cosech²` replacement and reports the level shifts.
pub fn approximation_study(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    l: u32,
    grid: &RadialGrid,
    n_states: usize,
    exec: Execution,
) -> Result<StudyReport> {
    if l == 0 {
        return Err(Error::Precondition("approximation study needs l >= 1 (the barrier vanishes at l = 0)".into()));
    }
    params.validate()?;
    let barrier = consts.kinetic_scale() * centrifugal_factor(l);
    let alpha = params.alpha;
    let v = sampled_potential(params);
    let exact = fd_spectrum_effective(|r| v(r) + barrier / (r * r), l, consts, grid, n_states, exec)?;
    let approx = fd_spectrum_effective(
        |r| match hyperbolic_pair(alpha * r) {
            Ok(h) => v(r) + barrier * alpha * alpha * h.cosech2,
            Err(_) => f64::NAN,
        },
        l,
        consts,
        grid,
        n_states,
        exec,
    )?;
    let levels = exact
        .levels
        .iter()
        .zip(&approx.levels)
        .map(|(e, a)| {
            let shift = a.energy - e.energy;
            StudyLevel { index: e.index, exact: e.energy, approx: a.energy, shift, rel_shift: shift.abs() / e.energy.abs() }
        })
        .collect();
    Ok(StudyReport { alpha, l, grid: *grid, levels })
}

/// [`approximation_study`] at each `alpha`, with `grid_for(alpha)` supplying
/// the grid. Independent α run concurrently; each solve is sequential.
pub fn approximation_sweep<G>(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    l: u32,
    alphas: &[f64],
    n_states: usize,
    grid_for: G,
    exec: Execution,
) -> Result<Vec<StudyReport>>
where
    G: Fn(f64) -> Result<RadialGrid> + Sync,
{
    exec.map(alphas, |&alpha| {
        let p = params.with_alpha(alpha);
        approximation_study(&p, consts, l, &grid_for(alpha)?, n_states, Execution::Sequential)
    })
    .into_iter()
    .collect()
}
