use num_complex::Complex64;

/// Complex scalar used throughout the closed-form pipeline.
pub type ComplexScalar = Complex64;

/// Principal square root: `Re(result) >= 0`, and negative reals (including a
/// negative zero imaginary part) map onto the positive imaginary axis.
pub fn principal_sqrt(z: ComplexScalar) -> ComplexScalar {
    if z.re == 0.0 && z.im == 0.0 {
        return ComplexScalar::new(0.0, 0.0);
    }
    let t = ((z.re.hypot(z.im) + z.re.abs()) * 0.5).sqrt();
    if z.re >= 0.0 {
        ComplexScalar::new(t, z.im / (2.0 * t))
    } else {
        let im = if z.im < 0.0 { -t } else { t };
        ComplexScalar::new(z.im.abs() / (2.0 * t), im)
    }
}

/// `base^exponent` through the principal logarithm, `Arg(base) ∈ (−π, π]`.
///
/// `0^w` is 1 for `w = 0`, 0 for `Re(w) > 0`, and infinite otherwise.
pub fn principal_pow(base: ComplexScalar, exponent: ComplexScalar) -> ComplexScalar {
    if exponent.re == 0.0 && exponent.im == 0.0 {
        return ComplexScalar::new(1.0, 0.0);
    }
    if base.re == 0.0 && base.im == 0.0 {
        return if exponent.re > 0.0 {
            ComplexScalar::new(0.0, 0.0)
        } else {
            ComplexScalar::new(f64::INFINITY, 0.0)
        };
    }
    let ln = ComplexScalar::new(base.re.hypot(base.im).ln(), base.im.atan2(base.re));
    (exponent * ln).exp()
}
