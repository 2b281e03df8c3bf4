use thiserror::Error;

/// Errors raised across the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow evaluating {term} at r = {r}")]
    Overflow { term: &'static str, r: f64 },

    #[error("degenerate Jacobi parameters: recurrence leading coefficient vanishes at k = {k}")]
    DegenerateJacobi { k: usize },

    #[error("quadratic has no solution: leading and linear coefficients both vanish")]
    NoSolution,

    #[error("structural error: {0}")]
    Structural(String),

    #[error("no branch with Re(tau') < 0; tau' values: {tau_primes:?}")]
    NoPhysicalBranch { tau_primes: Vec<(f64, f64)> },

    #[error("singular coefficient: {denominator} = 0")]
    Singular { denominator: &'static str },

    #[error("pole of the weight function at s = {0}")]
    Pole(String),

    #[error("wavefunction is not normalizable: diverges at {end}")]
    NonNormalizable { end: DivergenceEnd },

    #[error("sample spacing too coarse: truncation estimate {estimate:.3e} exceeds tolerance {tolerance:.3e}")]
    Resolution { estimate: f64, tolerance: f64 },

    #[error("potential is not finite at r = {r}")]
    Sampling { r: f64 },

    #[error("bisection did not converge after {iterations} iterations")]
    Convergence { iterations: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivergenceEnd {
    Origin,
    Infinity,
}

impl std::fmt::Display for DivergenceEnd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DivergenceEnd::Origin => f.write_str("origin"),
            DivergenceEnd::Infinity => f.write_str("infinity"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
