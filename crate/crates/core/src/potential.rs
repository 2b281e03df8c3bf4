//! The generalized inverted hyperbolic potential
//!
//! ```text
//! V(r) = −a·V0·coth(αr) + b·V1·coth²(αr) − c·V2·cosech²(αr) + d
//! ```
//!
//! together with its Rosen–Morse, Pöschl–Teller and Scarf specializations,
//! the effective (centrifugal-augmented) potential and the `1/r² ≈
//! α²cosech²(αr)` approximation used by the closed-form solution.
//!
//! Units follow the figure conventions: depths and `d` in MeV, `α` in fm⁻¹,
//! `ħ` and `m` explicit with natural defaults `ħ = 1`, `2m = 1`.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::special::hyperbolic_pair;

/// Shape coefficients, depths and range of the potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub alpha: f64,
}

impl PotentialParams {
    /// Parameter set of the general-potential figure sweep (a = 1, b = 0.01,
    /// c = 2, d = 2, V0 = 1, V1 = 0.5, V2 = 0.02) at the given range.
    pub fn figure_general(alpha: f64) -> Self {
        PotentialParams { a: 1.0, b: 0.01, c: 2.0, d: 2.0, v0: 1.0, v1: 0.5, v2: 0.02, alpha }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("d", self.d),
            ("V0", self.v0),
            ("V1", self.v1),
            ("V2", self.v2),
            ("alpha", self.alpha),
        ];
        if let Some((name, v)) = fields.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Domain(format!("{name} must be finite, got {v}")));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::Domain(format!("alpha must be > 0, got {}", self.alpha)));
        }
        Ok(())
    }

    /// `−aV0 + bV1 + d`, the limit of V as r → ∞.
    pub fn asymptote(&self) -> f64 {
        -self.a * self.v0 + self.b * self.v1 + self.d
    }

    /// Coefficient of `1/(αr)²` in the small-r expansion, `bV1 − cV2`.
    pub fn inverse_square_strength(&self) -> f64 {
        self.b * self.v1 - self.c * self.v2
    }

    pub fn with_alpha(self, alpha: f64) -> Self {
        PotentialParams { alpha, ..self }
    }
}

/// ħ and the particle mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for PhysicalConstants {
    /// Natural units, `ħ = 1` and `2m = 1`.
    fn default() -> Self {
        PhysicalConstants { hbar: 1.0, mass: 0.5 }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(Error::Domain(format!("hbar must be > 0, got {}", self.hbar)));
        }
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(Error::Domain(format!("mass must be > 0, got {}", self.mass)));
        }
        Ok(())
    }

    /// `ħ²/(2m)`.
    pub fn kinetic_scale(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass)
    }
}

/// Radial and orbital quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumState {
    pub n: u32,
    pub l: u32,
}

/// `l(l+1)` as a float.
pub(crate) fn centrifugal_factor(l: u32) -> f64 {
    let l = l as f64;
    l * (l + 1.0)
}

pub fn eval_potential(params: &PotentialParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("potential is singular at r <= 0 (r = {r})")));
    }
    let h = hyperbolic_pair(params.alpha * r)?;
    let coth_term = -params.a * params.v0 * h.coth;
    let coth2_term = params.b * params.v1 * h.coth * h.coth;
    let cosech2_term = -params.c * params.v2 * h.cosech2;
    for (name, t) in [("coth", coth_term), ("coth²", coth2_term), ("cosech²", cosech2_term)] {
        if !t.is_finite() {
            return Err(Error::Overflow { term: name, r });
        }
    }
    let v = coth_term + coth2_term + cosech2_term + params.d;
    if !v.is_finite() {
        return Err(Error::Overflow { term: "sum", r });
    }
    Ok(v)
}

/// `V(r) + ħ²l(l+1)/(2m r²)`.
pub fn effective_potential(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    l: u32,
    r: f64,
) -> Result<f64> {
    let v = eval_potential(params, r)?;
    if l == 0 {
        return Ok(v);
    }
    let barrier = consts.kinetic_scale() * centrifugal_factor(l) / (r * r);
    if !barrier.is_finite() {
        return Err(Error::Overflow { term: "centrifugal", r });
    }
    Ok(v + barrier)
}

/// Named specializations of the general potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    RosenMorse,
    PoschlTeller,
    Scarf,
}

impl std::str::FromStr for SpecialCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rosen-morse" => Ok(SpecialCase::RosenMorse),
            "poschl-teller" => Ok(SpecialCase::PoschlTeller),
            "scarf" => Ok(SpecialCase::Scarf),
            other => Err(Error::Domain(format!("unknown special case {other:?}"))),
        }
    }
}

/// Depths and shape knobs handed to [`special_case_params`]; knobs a special
/// case forces are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpecialCaseInput {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Build the general parameter set for a named special case.
///
/// * Rosen–Morse: `b = d = 0`; `a` is the coefficient of the general form,
///   so `a = −1` gives `+V0·coth`. See [`rosen_morse_subscript`] for the
///   other reading of the label `V_{−a,0,c,0}`.
/// * Pöschl–Teller: `a = b = d = 0` and `c` is taken as the coefficient of
///   `+c·V2·cosech²`, stored negated in the general form.
/// * Scarf: `a = c = d = 0`.
pub fn special_case_params(
    kind: SpecialCase,
    input: SpecialCaseInput,
    alpha: f64,
) -> Result<PotentialParams> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("alpha must be > 0, got {alpha}")));
    }
    let base = PotentialParams {
        a: 0.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
        v0: input.v0,
        v1: input.v1,
        v2: input.v2,
        alpha,
    };
    let params = match kind {
        SpecialCase::RosenMorse => PotentialParams { a: input.a, c: input.c, ..base },
        SpecialCase::PoschlTeller => PotentialParams { c: -input.c, ..base },
        SpecialCase::Scarf => PotentialParams { b: input.b, ..base },
    };
    params.validate()?;
    Ok(params)
}

/// Rosen–Morse with `a` read as the subscript of `V_{−a,0,c,0}`, i.e.
/// `V = a·V0·coth(αr) − c·V2·cosech²(αr)`.
pub fn rosen_morse_subscript(a: f64, c: f64, v0: f64, v2: f64, alpha: f64) -> Result<PotentialParams> {
    special_case_params(
        SpecialCase::RosenMorse,
        SpecialCaseInput { v0, v2, a: -a, c, ..Default::default() },
        alpha,
    )
}

/// Centrifugal term and its hyperbolic approximation at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalApprox {
    /// `α²cosech²(αr)`
    pub approx: f64,
    /// `1/r²`
    pub exact: f64,
    /// `|approx − exact|·r²`
    pub rel_error: f64,
}

/// The approximation is intended for `αr ≪ 1`.
pub fn centrifugal_approx(alpha: f64, r: f64) -> Result<CentrifugalApprox> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("alpha must be > 0, got {alpha}")));
    }
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be > 0, got {r}")));
    }
    let x = alpha * r;
    let h = hyperbolic_pair(x)?;
    Ok(CentrifugalApprox {
        approx: alpha * alpha * h.cosech2,
        exact: 1.0 / (r * r),
        rel_error: one_minus_x_over_sinh_sq(x),
    })
}

/// `1 − (x/sinh x)²`, accurate as x → 0.
fn one_minus_x_over_sinh_sq(x: f64) -> f64 {
    if x > 1.0 {
        let q = x / x.sinh();
        return 1.0 - q * q;
    }
    // sinh x − x = x³/3! + x⁵/5! + …
    let x2 = x * x;
    let mut term = x * x2 / 6.0;
    let mut excess = 0.0_f64;
    let mut k = 3.0;
    while term.abs() > 1e-18 * excess.abs().max(f64::MIN_POSITIVE) {
        excess += term;
        term *= x2 / ((k + 1.0) * (k + 2.0));
        k += 2.0;
    }
    let s = x + excess;
    excess * (s + x) / (s * s)
}

/// One sample of a scan; `None` marks a point where V is not finite.
pub type ScanPoint = (f64, Option<f64>);

/// Uniform scan of V (or of the effective potential when `l` is given) over
/// `[r_min, r_max]`, endpoints included.
pub fn scan_series(
    params: &PotentialParams,
    consts: &PhysicalConstants,
    r_min: f64,
    r_max: f64,
    n_points: usize,
    l: Option<u32>,
    exec: Execution,
) -> Result<Vec<ScanPoint>> {
    if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
        return Err(Error::Domain(format!(
            "scan needs 0 < r_min < r_max, got [{r_min}, {r_max}]"
        )));
    }
    if n_points < 2 {
        return Err(Error::Domain(format!("scan needs n_points >= 2, got {n_points}")));
    }
    params.validate()?;
    let step = (r_max - r_min) / (n_points - 1) as f64;
    let points = exec.map_range(n_points, |i| {
        let r = if i == n_points - 1 { r_max } else { r_min + step * i as f64 };
        let v = match l {
            Some(l) => effective_potential(params, consts, l, r),
            None => eval_potential(params, r),
        };
        match v {
            Ok(v) => Ok((r, Some(v))),
            Err(Error::Overflow { .. }) => Ok((r, None)),
            Err(e) => Err(e),
        }
    });
    points.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> PotentialParams {
        PotentialParams::figure_general(1.0)
    }

    #[test]
    fn figure_general_asymptote() {
        let v = eval_potential(&fig1(), 20.0).unwrap();
        assert!((v - 1.005).abs() < 1e-6, "{v}");
        assert!((fig1().asymptote() - 1.005).abs() < 1e-15);
    }

    #[test]
    fn constant_only() {
        let p = PotentialParams { a: 0.0, b: 0.0, c: 0.0, d: 5.0, v0: 3.0, v1: 7.0, v2: 11.0, alpha: 1.0 };
        for r in [1e-3, 0.5, 2.0, 100.0] {
            assert_eq!(eval_potential(&p, r).unwrap(), 5.0);
        }
    }

    #[test]
    fn small_r_inverse_square() {
        let p = fig1();
        assert!((p.inverse_square_strength() + 0.035).abs() < 1e-15);
        // V·r² → −0.035 as r → 0
        let r = 1e-5;
        let scaled = eval_potential(&p, r).unwrap() * r * r;
        assert!((scaled + 0.035).abs() < 1e-4, "{scaled}");
        assert!(eval_potential(&p, 1e-8).unwrap() < -1e12);
    }

    #[test]
    fn origin_is_a_domain_error() {
        assert!(matches!(eval_potential(&fig1(), 0.0), Err(Error::Domain(_))));
        assert!(matches!(eval_potential(&fig1(), -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn overflow_names_term() {
        let err = eval_potential(&fig1(), 1e-170).unwrap_err();
        assert!(matches!(err, Error::Overflow { term: "coth²", .. }), "{err:?}");
    }

    #[test]
    fn special_cases_force_knobs() {
        let input = SpecialCaseInput { v0: 1.0, v1: 0.5, v2: 0.02, a: -1.0, b: 0.05, c: 2.0 };
        let rm = special_case_params(SpecialCase::RosenMorse, input, 1.0).unwrap();
        assert_eq!((rm.a, rm.b, rm.c, rm.d), (-1.0, 0.0, 2.0, 0.0));
        let pt = special_case_params(SpecialCase::PoschlTeller, SpecialCaseInput { c: -2.0, ..input }, 1.0).unwrap();
        assert_eq!((pt.a, pt.b, pt.c, pt.d), (0.0, 0.0, 2.0, 0.0));
        let sc = special_case_params(SpecialCase::Scarf, input, 1.0).unwrap();
        assert_eq!((sc.a, sc.b, sc.c, sc.d), (0.0, 0.05, 0.0, 0.0));
        assert!(special_case_params(SpecialCase::Scarf, input, 0.0).is_err());
    }

    #[test]
    fn rosen_morse_conventions_differ_by_sign_of_a() {
        let sub = rosen_morse_subscript(1.0, 2.0, 1.0, 0.02, 1.0).unwrap();
        let input = SpecialCaseInput { v0: 1.0, v2: 0.02, a: -1.0, c: 2.0, ..Default::default() };
        let coeff = special_case_params(SpecialCase::RosenMorse, input, 1.0).unwrap();
        assert_eq!(sub, coeff);
    }

    #[test]
    fn effective_adds_barrier() {
        let c = PhysicalConstants::default();
        let p = fig1();
        assert_eq!(effective_potential(&p, &c, 0, 1.3).unwrap(), eval_potential(&p, 1.3).unwrap());
        // ħ²·l(l+1)/(2m) = 2 for l = 1 in natural units
        let want = eval_potential(&p, 1.0).unwrap() + 2.0;
        let got = effective_potential(&p, &c, 1, 1.0).unwrap();
        assert!((got - want).abs() < 1e-15);
        for r in [0.01, 0.3, 1.0, 7.0, 35.0] {
            assert!(effective_potential(&p, &c, 3, r).unwrap() > effective_potential(&p, &c, 1, r).unwrap());
        }
    }

    #[test]
    fn centrifugal_small_argument() {
        let c = centrifugal_approx(1.0, 1e-6).unwrap();
        assert!(c.rel_error < 1e-12);
        assert!((c.approx * 1e-12 - 1.0).abs() < 1e-9);
        // series: x²/3 − x⁴/15 + …
        let c = centrifugal_approx(1.0, 0.1).unwrap();
        let estimate = 0.01 / 3.0;
        assert!((c.rel_error - estimate).abs() < 0.05 * estimate);
        // 1 − (x/sinh x)² at x = 0.1, 30-digit reference
        assert!((c.rel_error - 0.003_326_677_233_881_650_1).abs() < 1e-16);
    }

    #[test]
    fn centrifugal_branches_agree_at_switch() {
        let below = one_minus_x_over_sinh_sq(1.0 - 1e-12);
        let above = one_minus_x_over_sinh_sq(1.0 + 1e-12);
        assert!((below - above).abs() < 1e-12);
    }

    #[test]
    fn scan_endpoints() {
        let c = PhysicalConstants::default();
        let s = scan_series(&fig1(), &c, 0.5, 3.0, 2, None, Execution::Sequential).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], (0.5, Some(eval_potential(&fig1(), 0.5).unwrap())));
        assert_eq!(s[1], (3.0, Some(eval_potential(&fig1(), 3.0).unwrap())));
    }

    #[test]
    fn scan_reports_gaps() {
        let c = PhysicalConstants::default();
        let s = scan_series(&fig1(), &c, 1e-170, 1.0, 3, None, Execution::Sequential).unwrap();
        assert_eq!(s[0].1, None);
        assert!(s[1].1.is_some());
    }

    #[test]
    fn scan_rejects_bad_range() {
        let c = PhysicalConstants::default();
        assert!(scan_series(&fig1(), &c, 0.0, 1.0, 10, None, Execution::Sequential).is_err());
        assert!(scan_series(&fig1(), &c, 2.0, 1.0, 10, None, Execution::Sequential).is_err());
        assert!(scan_series(&fig1(), &c, 0.1, 1.0, 1, None, Execution::Sequential).is_err());
    }
}
