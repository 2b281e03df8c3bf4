//! Numerical substrate for the closed-form pipeline: complex helpers,
//! overflow-safe hyperbolics, Jacobi polynomials with complex parameters and
//! a stable complex quadratic solver.

mod complex;
mod hyperbolic;
mod jacobi;
mod quadratic;

pub use complex::{principal_pow, principal_sqrt, ComplexScalar};
pub use hyperbolic::{hyperbolic_pair, HyperbolicPair, ASYMPTOTIC_THRESHOLD};
pub use jacobi::{jacobi, jacobi_explicit_sum, JacobiSpec};
pub use quadratic::{scaled_residual, solve_quadratic, QuadraticSolution};
