use super::{count_nodes, normalize_samples, Method, NumericLevel, NumericSpectrum, RadialGrid, SymTridiagonal};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::potential::{centrifugal_factor, PhysicalConstants};

/// `V(r) + ħ²l(l+1)/(2mr²)` as a closure.
pub(crate) fn with_barrier<'a, V>(potential: &'a V, l: u32, consts: &PhysicalConstants) -> impl Fn(f64) -> f64 + Sync + 'a
where
    V: Fn(f64) -> f64 + Sync,
{
    let barrier = consts.kinetic_scale() * centrifugal_factor(l);
    move |r| potential(r) + barrier / (r * r)
}

/// Samples `veff` on the interior points, rejecting non-finite values.
pub(crate) fn sample_interior<F: Fn(f64) -> f64>(veff: &F, grid: &RadialGrid) -> Result<Vec<f64>> {
    (1..grid.n_points - 1)
        .map(|i| {
            let r = grid.r(i);
            let v = veff(r);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Sampling { r })
            }
        })
        .collect()
}

fn tridiagonal(veff: &[f64], consts: &PhysicalConstants, grid: &RadialGrid) -> SymTridiagonal {
    let h = grid.h();
    let t = consts.kinetic_scale() / (h * h);
    let diag = veff.iter().map(|v| 2.0 * t + v).collect();
    SymTridiagonal::new(diag, vec![-t; veff.len() - 1])
}

/// Three-point discretization of `−(ħ²/2m)u″ + V_eff u` on the interior
/// points with Dirichlet ends.
pub fn fd_hamiltonian<V>(potential: V, l: u32, consts: &PhysicalConstants, grid: &RadialGrid) -> Result<SymTridiagonal>
where
    V: Fn(f64) -> f64 + Sync,
{
    consts.validate()?;
    grid.validate()?;
    let veff = with_barrier(&potential, l, consts);
    Ok(tridiagonal(&sample_interior(&veff, grid)?, consts, grid))
}

/// Lowest `n_states` levels of `V(r)` plus the exact centrifugal barrier.
pub fn fd_spectrum<V>(
    potential: V,
    l: u32,
    consts: &PhysicalConstants,
    grid: &RadialGrid,
    n_states: usize,
    exec: Execution,
) -> Result<NumericSpectrum>
where
    V: Fn(f64) -> f64 + Sync,
{
    let veff = with_barrier(&potential, l, consts);
    fd_spectrum_effective(veff, l, consts, grid, n_states, exec)
}

/// As [`fd_spectrum`], but `veff` already contains any barrier term; `l` is
/// only recorded.
pub fn fd_spectrum_effective<F>(
    veff: F,
    l: u32,
    consts: &PhysicalConstants,
    grid: &RadialGrid,
    n_states: usize,
    exec: Execution,
) -> Result<NumericSpectrum>
where
    F: Fn(f64) -> f64 + Sync,
{
    consts.validate()?;
    grid.validate()?;
    if n_states * 4 >= grid.n_points {
        return Err(Error::Precondition(format!(
            "n_states ({n_states}) must be below n_points/4 ({})",
            grid.n_points / 4
        )));
    }
    let matrix = tridiagonal(&sample_interior(&veff, grid)?, consts, grid);
    let h = grid.h();
    let solved: Vec<Result<(f64, Vec<f64>)>> = exec.map_range(n_states, |k| {
        let e = matrix.eigenvalue(k)?;
        let interior = matrix.inverse_iteration(e);
        let mut u = Vec::with_capacity(grid.n_points);
        u.push(0.0);
        u.extend(interior);
        u.push(0.0);
        normalize_samples(&mut u, h);
        Ok((e, u))
    });
    let mut levels = Vec::with_capacity(n_states);
    let mut wavefunctions = Vec::with_capacity(n_states);
    for (index, item) in solved.into_iter().enumerate() {
        let (energy, u) = item?;
        levels.push(NumericLevel { index, energy, node_count: count_nodes(&u) });
        wavefunctions.push(u);
    }
    Ok(NumericSpectrum {
        method: Method::FiniteDifference,
        l,
        grid: *grid,
        levels,
        wavefunctions,
        notes: Vec::new(),
    })
}
