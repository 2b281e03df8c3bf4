use crate::error::{Error, Result};

/// Above this argument `coth` is taken as 1 and `cosech²` as `4e^{−2z}`.
pub const ASYMPTOTIC_THRESHOLD: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPair {
    pub coth: f64,
    pub cosech2: f64,
}

/// `coth(z)` and `cosech²(z)` for `z > 0` without overflowing `e^z`.
pub fn hyperbolic_pair(z: f64) -> Result<HyperbolicPair> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("hyperbolic_pair needs z > 0, got {z}")));
    }
    if z > ASYMPTOTIC_THRESHOLD {
        return Ok(HyperbolicPair {
            coth: 1.0,
            cosech2: 4.0 * (-2.0 * z).exp(),
        });
    }
    let s = z.sinh();
    Ok(HyperbolicPair {
        coth: z.cosh() / s,
        cosech2: 1.0 / (s * s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coth_at_ln3_is_five_quarters() {
        let p = hyperbolic_pair(3f64.ln()).unwrap();
        assert!((p.coth - 1.25).abs() < 1e-15);
    }

    #[test]
    fn identity_on_log_grid() {
        let (lo, hi) = (1e-6f64.ln(), 30f64.ln());
        for i in 0..1000 {
            let z = (lo + (hi - lo) * i as f64 / 999.0).exp();
            let p = hyperbolic_pair(z).unwrap();
            let lhs = p.coth * p.coth - p.cosech2;
            assert!(
                (lhs - 1.0).abs() <= 1e-12 * p.coth * p.coth,
                "z = {z}: coth² − cosech² = {lhs}"
            );
        }
    }

    #[test]
    fn asymptotic_branch() {
        let p = hyperbolic_pair(30.0).unwrap();
        assert!((p.coth - 1.0).abs() < 1e-15);
        assert!(p.cosech2 < 1e-25);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(hyperbolic_pair(0.0).is_err());
        assert!(hyperbolic_pair(-1.0).is_err());
        assert!(hyperbolic_pair(f64::NAN).is_err());
    }
}
