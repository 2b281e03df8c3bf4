//! JSON fragments shared by the report commands.

use hypnu::analytic::printed::PrintedForms;
use hypnu::analytic::{EnergyLevel, QuantizationCheck};
use hypnu::nu::{KCandidate, NuSolution, Poly};
use hypnu::oracle::{ComparisonReport, NumericSpectrum, OriginBehaviour};
use hypnu::special::ComplexScalar;
use hypnu::{PhysicalConstants, PotentialParams};
use serde_json::{json, Value};

use crate::config::RunConfig;

/// Version of every JSON document this crate emits; bump on breaking
/// changes to field names or nesting.
pub const SCHEMA_VERSION: &str = "1.0.0";

pub fn complex(z: ComplexScalar) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn poly(p: &Poly) -> Value {
    json!({ "c0": complex(p.c0), "c1": complex(p.c1), "c2": complex(p.c2) })
}

pub fn params(p: &PotentialParams) -> Value {
    json!({
        "a": p.a, "b": p.b, "c": p.c, "d": p.d,
        "V0": p.v0, "V1": p.v1, "V2": p.v2, "alpha": p.alpha,
    })
}

pub fn constants(c: &PhysicalConstants) -> Value {
    json!({ "hbar": c.hbar, "mass": c.mass })
}

pub fn config(cfg: &RunConfig, kind: &str, effective: &PotentialParams) -> Value {
    json!({
        "kind": kind,
        "potential": params(&cfg.potential),
        "effective_potential_params": params(effective),
        "constants": constants(&cfg.constants),
        "state": { "n": cfg.state.n, "l": cfg.state.l },
        "grid": { "r_min": cfg.grid.r_min, "r_max": cfg.grid.r_max, "n_points": cfg.grid.n_points },
    })
}

pub fn level(l: &EnergyLevel) -> Value {
    json!({
        "branch": l.branch.label(),
        "energy": complex(l.energy),
        "eps2": complex(l.eps2),
        "energy_alt_grouping": complex(l.energy_alt_grouping),
        "residual_quantization": l.residual_quantization,
        "residual_ode": l.residual_ode,
        "residual_ode_note": l.residual_ode_note,
        "imag_magnitude": l.imag_magnitude,
    })
}

pub fn cross_check(c: &QuantizationCheck) -> Value {
    json!({
        "lambda": complex(c.lambda),
        "lambda_n": complex(c.lambda_n),
        "residual": c.residual,
        "tau_prime": complex(c.tau_prime),
        "admissible_branches": c.admissible_branches,
    })
}

pub fn k_candidate(k: &KCandidate) -> Value {
    json!({
        "k": complex(k.k),
        "branch": format!("{:?}", k.branch),
        "discriminant_residual": k.discriminant_residual,
    })
}

pub fn nu_solution(s: &NuSolution) -> Value {
    json!({
        "k": complex(s.k),
        "k_branch": format!("{:?}", s.k_branch),
        "pi_sign": format!("{:?}", s.pi_sign),
        "pi": poly(&s.pi),
        "tau": poly(&s.tau),
        "tau_prime": complex(s.tau_prime()),
        "lambda": complex(s.lambda),
        "admissible": s.tau_prime().re < 0.0,
    })
}

pub fn printed(p: &PrintedForms) -> Value {
    json!({
        "n": p.n,
        "u": complex(p.u),
        "v": complex(p.v),
        "radicand_mechanical_x4": poly(&p.radicand_mechanical_x4),
        "radicand_printed_x4": poly(&p.radicand_printed_x4),
        "radicand_delta": p.radicand_delta,
        "k_mechanical": p.k_mechanical.iter().map(|k| complex(*k)).collect::<Vec<_>>(),
        "k_printed": p.k_printed.iter().map(|k| complex(*k)).collect::<Vec<_>>(),
        "k_delta": p.k_delta,
        "tau_mechanical": p.tau_mechanical.as_ref().map(poly),
        "tau_printed": poly(&p.tau_printed),
        "tau_delta": p.tau_delta,
        "lambda_mechanical": p.lambda_mechanical.map(complex),
        "lambda_n_mechanical": p.lambda_n_mechanical.map(complex),
        "lambda_printed_minus": complex(p.lambda_printed_minus),
        "lambda_printed_plus": complex(p.lambda_printed_plus),
        "lambda_n_printed_tau": complex(p.lambda_n_printed_tau),
        "lambda_n_printed_u": complex(p.lambda_n_printed_u),
        "lambda_n_u_for_n_delta": p.lambda_n_u_for_n_delta,
        "residual_printed_minus": p.residual_printed_minus,
        "residual_printed_plus": p.residual_printed_plus,
        "sigma_inline": complex(p.sigma_inline),
    })
}

pub fn origin(o: OriginBehaviour) -> Value {
    let (class, strength) = match o {
        OriginBehaviour::Regular => ("regular", 0.0),
        OriginBehaviour::Repulsive { strength } => ("repulsive", strength),
        OriginBehaviour::AttractiveSubcritical { strength } => ("attractive_subcritical", strength),
        OriginBehaviour::FallToCenter { strength } => ("fall_to_center", strength),
    };
    json!({ "class": class, "strength": strength, "reliable": o.is_reliable(), "note": o.note() })
}

pub fn spectrum(s: &NumericSpectrum, asymptote: f64) -> Value {
    json!({
        "method": s.method.label(),
        "grid": { "r_min": s.grid.r_min, "r_max": s.grid.r_max, "n_points": s.grid.n_points },
        "levels": s.levels.iter().map(|l| json!({
            "index": l.index,
            "energy": l.energy,
            "node_count": l.node_count,
            "bound": l.energy < asymptote,
        })).collect::<Vec<_>>(),
        "notes": s.notes,
    })
}

pub fn comparison(c: &ComparisonReport) -> Value {
    json!({
        "rows": c.rows.iter().map(|r| json!({
            "n": r.n,
            "l": r.l,
            "branch": r.branch,
            "analytic_re": r.analytic_re,
            "analytic_im": r.analytic_im,
            "numeric": r.numeric,
            "abs_delta": r.abs_delta,
            "rel_delta": r.rel_delta,
        })).collect::<Vec<_>>(),
        "summary": c.summary.map(|s| json!({
            "max_abs_delta": s.max_abs_delta,
            "mean_abs_delta": s.mean_abs_delta,
            "max_rel_delta": s.max_rel_delta,
        })),
        "notes": c.notes,
    })
}

/// `{"error": message}` for a section that could not be produced.
pub fn failure(e: &dyn std::fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}
