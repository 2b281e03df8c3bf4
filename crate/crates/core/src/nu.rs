//! Generic Nikiforov–Uvarov machinery.
//!
//! A hypergeometric-type equation
//! `ψ'' + (τ̄/σ)ψ' + (σ̄/σ²)ψ = 0` with `deg σ, deg σ̄ ≤ 2` and `deg τ̄ ≤ 1`
//! is reduced by `π(s) = (σ'−τ̄)/2 ± √(((σ'−τ̄)/2)² − σ̄ + kσ)`, where `k`
//! makes the radicand a perfect square. Then `τ = τ̄ + 2π`, `λ = k + π'` and
//! the quantization condition is `λ = λ_n = −nτ' − n(n−1)σ''/2`.
//!
//! Everything here works with complex coefficients; the physical branch is
//! the one with `Re(τ') < 0`.

use crate::error::{Error, Result};
use crate::special::{principal_sqrt, solve_quadratic, ComplexScalar};

/// Polynomial `c0 + c1·s + c2·s²`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Poly {
    pub c0: ComplexScalar,
    pub c1: ComplexScalar,
    pub c2: ComplexScalar,
}

impl Poly {
    pub fn new(c0: ComplexScalar, c1: ComplexScalar, c2: ComplexScalar) -> Self {
        Poly { c0, c1, c2 }
    }

    pub fn linear(c0: ComplexScalar, c1: ComplexScalar) -> Self {
        Poly { c0, c1, c2: ComplexScalar::new(0.0, 0.0) }
    }

    pub fn real(c0: f64, c1: f64, c2: f64) -> Self {
        Poly::new(c0.into(), c1.into(), c2.into())
    }

    pub fn eval(&self, s: ComplexScalar) -> ComplexScalar {
        self.c0 + s * (self.c1 + s * self.c2)
    }

    pub fn derivative(&self) -> Poly {
        Poly::linear(self.c1, self.c2 * 2.0)
    }

    pub fn is_zero(&self) -> bool {
        let z = ComplexScalar::new(0.0, 0.0);
        self.c0 == z && self.c1 == z && self.c2 == z
    }

    pub fn scale(&self, f: ComplexScalar) -> Poly {
        Poly::new(self.c0 * f, self.c1 * f, self.c2 * f)
    }

    /// Largest coefficient modulus.
    pub fn magnitude(&self) -> f64 {
        self.c0.norm().max(self.c1.norm()).max(self.c2.norm())
    }

    /// `c1² − 4·c2·c0`.
    pub fn discriminant(&self) -> ComplexScalar {
        self.c1 * self.c1 - 4.0 * self.c2 * self.c0
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        Poly::new(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl std::ops::Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        Poly::new(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2)
    }
}

/// The polynomial triple of a hypergeometric-type equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuProblem {
    pub sigma: Poly,
    pub sigma_bar: Poly,
    pub tau_bar: Poly,
}

impl NuProblem {
    pub fn new(sigma: Poly, sigma_bar: Poly, tau_bar: Poly) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::Structural("sigma is identically zero".into()));
        }
        if tau_bar.c2 != ComplexScalar::new(0.0, 0.0) {
            return Err(Error::Structural("tau_bar must have degree <= 1".into()));
        }
        Ok(NuProblem { sigma, sigma_bar, tau_bar })
    }

    /// `(σ' − τ̄)/2`.
    pub fn half_shift(&self) -> Poly {
        (self.sigma.derivative() - self.tau_bar).scale(0.5.into())
    }
}

/// `((σ'−τ̄)/2)² − σ̄ + kσ`.
pub fn radicand_coeffs(problem: &NuProblem, k: ComplexScalar) -> Poly {
    let p = problem.half_shift();
    let square = Poly::new(p.c0 * p.c0, 2.0 * p.c0 * p.c1, p.c1 * p.c1);
    square - problem.sigma_bar + problem.sigma.scale(k)
}

/// Which root of the zero-discriminant condition a `k` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KBranch {
    PlusSqrtK,
    MinusSqrtK,
}

/// Sign in front of the radicand's square root in π.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiSign {
    PlusPi,
    MinusPi,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KCandidate {
    pub k: ComplexScalar,
    pub branch: KBranch,
    /// `|disc(radicand)|` divided by the squared radicand magnitude.
    pub discriminant_residual: f64,
}

/// All `k` that make the radicand the square of a polynomial.
///
/// The radicand is `R(s; k) = (a0 + a1k)s² + (b0 + b1k)s + (c0 + c1k)`, so
/// `disc R = 0` is itself a quadratic in `k`. If `R` is linear in `s` for
/// every `k`, the `s` coefficient must vanish instead.
pub fn k_candidates(problem: &NuProblem) -> Result<Vec<KCandidate>> {
    let base = radicand_coeffs(problem, 0.0.into());
    let slope = problem.sigma;
    let zero = ComplexScalar::new(0.0, 0.0);
    let roots: Vec<(ComplexScalar, KBranch)> = if base.c2 == zero && slope.c2 == zero {
        if slope.c1 == zero {
            return Err(Error::Structural(
                "radicand is linear in s and its slope does not depend on k".into(),
            ));
        }
        vec![(-base.c1 / slope.c1, KBranch::PlusSqrtK)]
    } else {
        let (a0, a1) = (base.c2, slope.c2);
        let (b0, b1) = (base.c1, slope.c1);
        let (c0, c1) = (base.c0, slope.c0);
        let q2 = b1 * b1 - 4.0 * a1 * c1;
        let q1 = 2.0 * b0 * b1 - 4.0 * (a0 * c1 + a1 * c0);
        let q0 = b0 * b0 - 4.0 * a0 * c0;
        let sol = solve_quadratic(q2, q1, q0).map_err(|_| {
            Error::Structural("perfect-square condition does not depend on k".into())
        })?;
        match sol.roots.as_slice() {
            [k] => vec![(*k, KBranch::PlusSqrtK)],
            [kp, km] => vec![(*kp, KBranch::PlusSqrtK), (*km, KBranch::MinusSqrtK)],
            _ => unreachable!("quadratic yields one or two roots"),
        }
    };
    Ok(roots
        .into_iter()
        .map(|(k, branch)| {
            let r = radicand_coeffs(problem, k);
            let scale = r.magnitude().powi(2).max(f64::MIN_POSITIVE);
            KCandidate { k, branch, discriminant_residual: r.discriminant().norm() / scale }
        })
        .collect())
}

/// Square root of a perfect-square quadratic as a linear polynomial.
fn sqrt_poly(r: &Poly) -> Poly {
    if r.c2.norm() >= r.c0.norm() {
        let q1 = principal_sqrt(r.c2);
        if q1.norm() == 0.0 {
            return Poly::default();
        }
        Poly::linear(r.c1 / (2.0 * q1), q1)
    } else {
        let q0 = principal_sqrt(r.c0);
        Poly::linear(q0, r.c1 / (2.0 * q0))
    }
}

/// One `(k, ±)` branch of the reduction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuSolution {
    pub k: ComplexScalar,
    pub k_branch: KBranch,
    pub pi_sign: PiSign,
    pub pi: Poly,
    pub tau: Poly,
    pub lambda: ComplexScalar,
}

impl NuSolution {
    /// `τ'`, constant for a linear τ.
    pub fn tau_prime(&self) -> ComplexScalar {
        self.tau.c1
    }
}

/// Every enumerated branch plus the ones with `Re(τ') < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NuSelection {
    pub branches: Vec<NuSolution>,
    pub selected: Vec<NuSolution>,
}

impl NuSelection {
    /// First admissible branch.
    pub fn solution(&self) -> &NuSolution {
        &self.selected[0]
    }

    /// True if more than one branch has a negative τ'.
    pub fn is_ambiguous(&self) -> bool {
        self.selected.len() > 1
    }
}

pub fn pi_tau_select(problem: &NuProblem) -> Result<NuSelection> {
    let branches = enumerate_branches(problem)?;
    let selected: Vec<NuSolution> =
        branches.iter().copied().filter(|b| b.tau_prime().re < 0.0).collect();
    if selected.is_empty() {
        return Err(Error::NoPhysicalBranch {
            tau_primes: branches.iter().map(|b| (b.tau_prime().re, b.tau_prime().im)).collect(),
        });
    }
    Ok(NuSelection { branches, selected })
}

/// Every `(k, ±)` branch, admissible or not.
pub fn enumerate_branches(problem: &NuProblem) -> Result<Vec<NuSolution>> {
    let p = problem.half_shift();
    let mut branches = Vec::with_capacity(4);
    for cand in k_candidates(problem)? {
        let q = sqrt_poly(&radicand_coeffs(problem, cand.k));
        for (sign, pi) in [(PiSign::PlusPi, p + q), (PiSign::MinusPi, p - q)] {
            let tau = problem.tau_bar + pi.scale(2.0.into());
            branches.push(NuSolution {
                k: cand.k,
                k_branch: cand.branch,
                pi_sign: sign,
                pi,
                tau,
                lambda: cand.k + pi.c1,
            });
        }
    }
    Ok(branches)
}

/// `λ_n = −n·τ' − n(n−1)·σ''/2`.
pub fn lambda_n_of(problem: &NuProblem, tau: &Poly, n: u32) -> ComplexScalar {
    let n = n as f64;
    let sigma_second = problem.sigma.c2 * 2.0;
    -(tau.c1 * n) - sigma_second * (n * (n - 1.0) / 2.0)
}
