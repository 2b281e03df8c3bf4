//! Symmetric tridiagonal eigenproblems by Sturm-sequence bisection and
//! inverse iteration.

use crate::error::{Error, Result};

pub const MAX_BISECTION_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    /// Off-diagonal, `len = diag.len() − 1`.
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1), "off-diagonal length");
        SymTridiagonal { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (negative LDLᵀ pivots).
    pub fn sturm_count(&self, x: f64) -> usize {
        let n = self.diag.len();
        if n == 0 {
            return 0;
        }
        let guard = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..n {
            if i > 0 {
                let q_safe = if q.abs() < guard { guard.copysign(q) } else { q };
                q = (self.diag[i] - x) - self.off[i - 1] * self.off[i - 1] / q_safe;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        let (lo, hi) = self.gershgorin();
        let pad = 1e-12 * lo.abs().max(hi.abs()).max(1.0);
        let (mut a, mut b) = (lo - pad, hi + pad);
        for _ in 0..MAX_BISECTION_ITERATIONS {
            let mid = 0.5 * (a + b);
            if b - a <= 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(f64::MIN_POSITIVE) || mid <= a || mid >= b {
                return Ok(mid);
            }
            if self.sturm_count(mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        Err(Error::Convergence { iterations: MAX_BISECTION_ITERATIONS })
    }

    /// Eigenvector for an accurate eigenvalue estimate, unit Euclidean norm.
    pub fn inverse_iteration(&self, lambda: f64) -> Vec<f64> {
        let n = self.diag.len();
        let lu = TridiagLu::factor(self, lambda);
        let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.25 * ((i as f64) * 0.7).sin()).collect();
        for _ in 0..3 {
            lu.solve(&mut x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !(norm > 0.0 && norm.is_finite()) {
                break;
            }
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }
}

/// LU factorization of `T − shift·I` with partial pivoting.
struct TridiagLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagLu {
    fn factor(t: &SymTridiagonal, shift: f64) -> Self {
        let n = t.diag.len();
        let mut dl = t.off.clone();
        let mut du = t.off.clone();
        let mut d: Vec<f64> = t.diag.iter().map(|v| v - shift).collect();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] != 0.0 {
                    let fact = dl[i] / d[i];
                    dl[i] = fact;
                    d[i + 1] -= fact * du[i];
                }
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        let scale = t.gershgorin().1.abs().max(1.0);
        for v in d.iter_mut() {
            if v.abs() < f64::EPSILON * scale {
                *v = (f64::EPSILON * scale).copysign(*v);
            }
        }
        TridiagLu { dl, d, du, du2, swapped }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        if n == 0 {
            return;
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}
