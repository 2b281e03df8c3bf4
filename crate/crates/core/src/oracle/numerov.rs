use super::fd::with_barrier;
use super::{count_nodes, normalize_samples, Method, NumericLevel, NumericSpectrum, RadialGrid};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::oracle::tridiag::MAX_BISECTION_ITERATIONS;
use crate::potential::PhysicalConstants;

const RESCALE_ABOVE: f64 = 1e100;
/// Largest `h²g/12` for which a Numerov step is taken; closer to the origin a
/// strong barrier makes the recurrence unstable and `u` is set to zero.
const STEP_LIMIT: f64 = 0.25;

/// Lowest `n_states` levels inside `window` for `V(r)` plus the exact
/// centrifugal barrier.
pub fn numerov_spectrum<V>(
    potential: V,
    l: u32,
    consts: &PhysicalConstants,
    grid: &RadialGrid,
    window: (f64, f64),
    n_states: usize,
    exec: Execution,
) -> Result<NumericSpectrum>
where
    V: Fn(f64) -> f64 + Sync,
{
    let veff = with_barrier(&potential, l, consts);
    numerov_spectrum_effective(veff, l, consts, grid, window, n_states, exec)
}

/// As [`numerov_spectrum`] with the barrier already inside `veff`.
pub fn numerov_spectrum_effective<F>(
    veff: F,
    l: u32,
    consts: &PhysicalConstants,
    grid: &RadialGrid,
    window: (f64, f64),
    n_states: usize,
    exec: Execution,
) -> Result<NumericSpectrum>
where
    F: Fn(f64) -> f64 + Sync,
{
    consts.validate()?;
    grid.validate()?;
    let (e_lo, e_hi) = window;
    if !(e_lo < e_hi && e_lo.is_finite() && e_hi.is_finite()) {
        return Err(Error::Domain(format!("energy window must satisfy E_lo < E_hi (got [{e_lo}, {e_hi}])")));
    }
    let shooter = Shooter::new(&veff, consts, grid, e_lo)?;
    let mut notes = Vec::new();
    if shooter.start > 1 {
        notes.push(format!(
            "integration starts at r = {:.6e}: the barrier inside is too steep for the grid spacing",
            grid.r(shooter.start - 1)
        ));
    }
    let c_lo = shooter.count(e_lo)?;
    let c_hi = shooter.count(e_hi)?;
    let wanted = (c_hi.saturating_sub(c_lo)).min(n_states);
    if wanted == 0 {
        notes.push(format!("no level in the searched window [{e_lo}, {e_hi}]"));
    }
    let solved: Vec<Result<(f64, Vec<f64>)>> = exec.map_range(wanted, |j| {
        let k = c_lo + j;
        let e = shooter.bisect(k, e_lo, e_hi)?;
        Ok((e, shooter.wavefunction(e)?))
    });
    let mut levels = Vec::with_capacity(wanted);
    let mut wavefunctions = Vec::with_capacity(wanted);
    for (j, item) in solved.into_iter().enumerate() {
        let (energy, u) = item?;
        levels.push(NumericLevel { index: c_lo + j, energy, node_count: count_nodes(&u) });
        wavefunctions.push(u);
    }
    Ok(NumericSpectrum { method: Method::Numerov, l, grid: *grid, levels, wavefunctions, notes })
}

struct Shooter<'g> {
    grid: &'g RadialGrid,
    /// `(2m/ħ²)·V_eff(r_i)` on points `0..n` (index 0 unused).
    g0: Vec<f64>,
    inv_kinetic: f64,
    h2_12: f64,
    start: usize,
}

impl<'g> Shooter<'g> {
    fn new<F: Fn(f64) -> f64>(veff: &F, consts: &PhysicalConstants, grid: &'g RadialGrid, e_lo: f64) -> Result<Self> {
        let inv_kinetic = 1.0 / consts.kinetic_scale();
        let mut g0 = vec![0.0; grid.n_points];
        for (i, g) in g0.iter_mut().enumerate().skip(1) {
            let r = grid.r(i);
            let v = veff(r);
            if !v.is_finite() {
                return Err(Error::Sampling { r });
            }
            *g = v * inv_kinetic;
        }
        let h = grid.h();
        let h2_12 = h * h / 12.0;
        let g_lo = e_lo * inv_kinetic;
        let start = (1..grid.n_points - 2)
            .find(|&i| h2_12 * (g0[i] - g_lo) < STEP_LIMIT)
            .ok_or_else(|| Error::Precondition("barrier too steep for the grid spacing everywhere".into()))?;
        Ok(Shooter { grid, g0, inv_kinetic, h2_12, start })
    }

    fn w(&self, i: usize, e: f64) -> f64 {
        1.0 - self.h2_12 * (self.g0[i] - e)
    }

    /// Sign changes of the outward solution on `(r_min, r_max]`.
    fn count(&self, energy: f64) -> Result<usize> {
        let e = energy * self.inv_kinetic;
        let n = self.grid.n_points;
        let (mut u_prev, mut u) = (0.0_f64, self.grid.h());
        let mut w_prev = 0.0;
        let mut w_cur = self.w(self.start, e);
        let mut nodes = 0;
        for i in self.start..n - 1 {
            let w_next = self.w(i + 1, e);
            let mut u_next = ((12.0 - 10.0 * w_cur) * u - w_prev * u_prev) / w_next;
            if u_next.abs() > RESCALE_ABOVE {
                u_next /= RESCALE_ABOVE;
                u /= RESCALE_ABOVE;
            }
            if !u_next.is_finite() {
                return Err(Error::Overflow { term: "numerov", r: self.grid.r(i + 1) });
            }
            if u_next != 0.0 && (u_next < 0.0) != (u < 0.0) && u != 0.0 {
                nodes += 1;
            }
            if u_next != 0.0 {
                u_prev = u;
                u = u_next;
            } else {
                // exact zero: keep the previous sign for the next comparison
                u_prev = u;
                u = u_next.copysign(u);
            }
            w_prev = w_cur;
            w_cur = w_next;
        }
        Ok(nodes)
    }

    fn bisect(&self, k: usize, lo: f64, hi: f64) -> Result<f64> {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..MAX_BISECTION_ITERATIONS {
            let mid = 0.5 * (a + b);
            if b - a <= 1e-10 * mid.abs().max(1.0) {
                return Ok(mid);
            }
            if self.count(mid)? <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        Err(Error::Convergence { iterations: MAX_BISECTION_ITERATIONS })
    }

    /// Outward and inward solutions matched at the outer turning point.
    fn wavefunction(&self, energy: f64) -> Result<Vec<f64>> {
        let e = energy * self.inv_kinetic;
        let n = self.grid.n_points;
        let w: Vec<f64> = (0..n).map(|i| if i == 0 { 0.0 } else { self.w(i, e) }).collect();

        let allowed = (self.start + 1..n - 2).rev().find(|&i| self.g0[i] < e);
        let m = allowed.unwrap_or(n / 2).clamp(self.start + 1, n - 3);

        let mut out = vec![0.0; n];
        out[self.start] = self.grid.h();
        for i in self.start..m {
            let prev = if i == self.start { 0.0 } else { w[i - 1] * out[i - 1] };
            out[i + 1] = ((12.0 - 10.0 * w[i]) * out[i] - prev) / w[i + 1];
            if out[i + 1].abs() > RESCALE_ABOVE {
                out[..=i + 1].iter_mut().for_each(|v| *v /= RESCALE_ABOVE);
            }
        }

        let mut inw = vec![0.0; n];
        inw[n - 2] = 1.0;
        for i in (m + 1..n - 1).rev() {
            inw[i - 1] = ((12.0 - 10.0 * w[i]) * inw[i] - w[i + 1] * inw[i + 1]) / w[i - 1];
            if inw[i - 1].abs() > RESCALE_ABOVE {
                inw[i - 1..].iter_mut().for_each(|v| *v /= RESCALE_ABOVE);
            }
        }
        if inw[m] == 0.0 || !inw[m].is_finite() || !out[m].is_finite() {
            return Err(Error::Overflow { term: "numerov", r: self.grid.r(m) });
        }
        let scale = out[m] / inw[m];
        let mut u = out;
        for i in m + 1..n {
            u[i] = inw[i] * scale;
        }
        normalize_samples(&mut u, self.grid.h());
        Ok(u)
    }
}
