use super::complex::ComplexScalar;
use crate::error::{Error, Result};

/// Degree, complex superscript parameters and complex argument of
/// `P_n^{(a, b)}(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiSpec {
    pub n: usize,
    pub a: ComplexScalar,
    pub b: ComplexScalar,
    pub x: ComplexScalar,
}

/// Jacobi polynomial by the three-term recurrence in the degree.
///
/// Normalization is the standard one, `P_n^{(a,b)}(1) = binomial(n + a, n)`.
/// `P_1` is formed directly, so the recurrence is used for `k >= 2` and its
/// leading coefficient `2k(k+a+b)(2k+a+b−2)` must not vanish there.
pub fn jacobi(spec: &JacobiSpec) -> Result<ComplexScalar> {
    let JacobiSpec { n, a, b, x } = *spec;
    let one = ComplexScalar::new(1.0, 0.0);
    if n == 0 {
        return Ok(one);
    }
    let ab = a + b;
    let p1 = (a + 1.0) + (ab + 2.0) * (x - 1.0) * 0.5;
    if n == 1 {
        return Ok(p1);
    }
    let (mut prev, mut cur) = (one, p1);
    for k in 2..=n {
        let kf = k as f64;
        let two_k_ab = ab + 2.0 * kf;
        let lead = 2.0 * kf * (ab + kf) * (two_k_ab - 2.0);
        if lead.norm() == 0.0 {
            return Err(Error::DegenerateJacobi { k });
        }
        let mid = (two_k_ab - 1.0) * (two_k_ab * (two_k_ab - 2.0) * x + a * a - b * b);
        let tail = 2.0 * (a + kf - 1.0) * (b + kf - 1.0) * two_k_ab;
        let next = (mid * cur - tail * prev) / lead;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Explicit finite-sum evaluation
/// `Σ_s C(n+a, n−s)·C(n+b, s)·((x−1)/2)^s·((x+1)/2)^{n−s}`.
///
/// O(n²) and free of recurrence denominators; kept as an independent
/// reference for checking [`jacobi`], not used by the pipeline.
pub fn jacobi_explicit_sum(spec: &JacobiSpec) -> ComplexScalar {
    let JacobiSpec { n, a, b, x } = *spec;
    let binom = |top: ComplexScalar, k: usize| {
        (0..k).fold(ComplexScalar::new(1.0, 0.0), |acc, j| acc * (top - j as f64) / (j + 1) as f64)
    };
    let minus = (x - 1.0) * 0.5;
    let plus = (x + 1.0) * 0.5;
    let nf = n as f64;
    (0..=n)
        .map(|s| binom(a + nf, n - s) * binom(b + nf, s) * minus.powu(s as u32) * plus.powu((n - s) as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> ComplexScalar {
        ComplexScalar::new(re, 0.0)
    }

    fn spec(n: usize, a: f64, b: f64, x: f64) -> JacobiSpec {
        JacobiSpec { n, a: c(a), b: c(b), x: c(x) }
    }

    #[test]
    fn sum_agrees_on_complex_parameters() {
        let s = JacobiSpec {
            n: 5,
            a: ComplexScalar::new(1.5, -0.7),
            b: ComplexScalar::new(-0.3, 2.0),
            x: ComplexScalar::new(0.2, 1.1),
        };
        let r = jacobi(&s).unwrap();
        let e = jacobi_explicit_sum(&s);
        assert!((r - e).norm() <= 1e-12 * e.norm());
    }

    #[test]
    fn degree_zero_is_one() {
        let s = JacobiSpec {
            n: 0,
            a: ComplexScalar::new(3.0, -2.0),
            b: ComplexScalar::new(-7.0, 1.0),
            x: ComplexScalar::new(0.3, 9.0),
        };
        assert_eq!(jacobi(&s).unwrap(), c(1.0));
    }

    #[test]
    fn legendre_p1() {
        assert!((jacobi(&spec(1, 0.0, 0.0, 0.5)).unwrap() - c(0.5)).norm() < 1e-15);
    }

    #[test]
    fn legendre_p3_closed_form() {
        let x: f64 = 0.3;
        let want = 0.5 * (5.0 * x.powi(3) - 3.0 * x);
        assert!((jacobi(&spec(3, 0.0, 0.0, x)).unwrap() - c(want)).norm() < 1e-15);
    }

    #[test]
    fn endpoint_binomial() {
        // P_2^{(1,1)}(1) = binomial(3, 2)
        assert!((jacobi(&spec(2, 1.0, 1.0, 1.0)).unwrap() - c(3.0)).norm() < 1e-14);
    }

    #[test]
    fn degenerate_parameters_name_k() {
        // a + b = -3 makes k + a + b vanish at k = 3
        let err = jacobi(&spec(4, -1.0, -2.0, 0.2)).unwrap_err();
        assert_eq!(err, Error::DegenerateJacobi { k: 3 });
    }
}
