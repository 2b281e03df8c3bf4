//! Run configuration: a TOML document whose keys are dotted section paths
//! (`potential.a = 1`, or the same keys under `[potential]`).

use hypnu::oracle::RadialGrid;
use hypnu::{PhysicalConstants, PotentialParams};
use serde::Deserialize;
use std::path::PathBuf;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputConfig {
    pub format: Option<OutputFormat>,
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateConfig {
    pub n: Vec<u32>,
    pub l: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub potential: PotentialParams,
    pub constants: PhysicalConstants,
    pub state: StateConfig,
    pub grid: RadialGrid,
    pub output: OutputConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        parse_config("").expect("defaults are valid")
    }
}

impl RunConfig {
    /// Grid for a different `alpha`: an explicit `grid.r_max` is kept,
    /// otherwise it follows `40/alpha`.
    pub fn grid_for(&self, alpha: f64, r_max_explicit: bool) -> RadialGrid {
        RadialGrid {
            r_max: if r_max_explicit { self.grid.r_max } else { 40.0 / alpha },
            ..self.grid
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawConfig {
    potential: RawPotential,
    constants: RawConstants,
    state: RawState,
    grid: RawGrid,
    output: RawOutput,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawPotential {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    #[serde(rename = "V0")]
    v0: f64,
    #[serde(rename = "V1")]
    v1: f64,
    #[serde(rename = "V2")]
    v2: f64,
    alpha: f64,
}

impl Default for RawPotential {
    fn default() -> Self {
        let p = PotentialParams::figure_general(1.0);
        RawPotential { a: p.a, b: p.b, c: p.c, d: p.d, v0: p.v0, v1: p.v1, v2: p.v2, alpha: p.alpha }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawConstants {
    hbar: f64,
    mass: f64,
}

impl Default for RawConstants {
    fn default() -> Self {
        let c = PhysicalConstants::default();
        RawConstants { hbar: c.hbar, mass: c.mass }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawState {
    n: Vec<u32>,
    l: Vec<u32>,
}

impl Default for RawState {
    fn default() -> Self {
        RawState { n: vec![0], l: vec![0] }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawGrid {
    r_min: f64,
    r_max: Option<f64>,
    n_points: i64,
}

impl Default for RawGrid {
    fn default() -> Self {
        RawGrid { r_min: 1e-6, r_max: None, n_points: RadialGrid::DEFAULT_POINTS as i64 }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawOutput {
    format: Option<OutputFormat>,
    path: Option<PathBuf>,
}

/// Parsed config plus whether `grid.r_max` was given explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedConfig {
    pub config: RunConfig,
    pub r_max_explicit: bool,
}

pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    load_config(text).map(|c| c.config)
}

pub fn load_config(text: &str) -> Result<LoadedConfig, CliError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((0, 0), |s| line_column(text, s.start));
        CliError::Parse { line, column, message: e.message().to_string() }
    })?;
    let invalid = |field: &str, constraint: String| CliError::Validation { field: field.to_string(), constraint };

    let p = &raw.potential;
    for (field, v) in [
        ("potential.a", p.a),
        ("potential.b", p.b),
        ("potential.c", p.c),
        ("potential.d", p.d),
        ("potential.V0", p.v0),
        ("potential.V1", p.v1),
        ("potential.V2", p.v2),
        ("potential.alpha", p.alpha),
        ("constants.hbar", raw.constants.hbar),
        ("constants.mass", raw.constants.mass),
        ("grid.r_min", raw.grid.r_min),
    ] {
        if !v.is_finite() {
            return Err(invalid(field, format!("must be finite (got {v})")));
        }
    }
    if p.alpha <= 0.0 {
        return Err(invalid("potential.alpha", format!("must be > 0 (got {})", p.alpha)));
    }
    if raw.constants.hbar <= 0.0 {
        return Err(invalid("constants.hbar", format!("must be > 0 (got {})", raw.constants.hbar)));
    }
    if raw.constants.mass <= 0.0 {
        return Err(invalid("constants.mass", format!("must be > 0 (got {})", raw.constants.mass)));
    }
    if raw.grid.r_min <= 0.0 {
        return Err(invalid("grid.r_min", format!("must be > 0 (got {})", raw.grid.r_min)));
    }
    let r_max = raw.grid.r_max.unwrap_or(40.0 / p.alpha);
    if !(r_max.is_finite() && r_max > raw.grid.r_min) {
        return Err(invalid("grid.r_max", format!("must be finite and exceed grid.r_min (got {r_max})")));
    }
    if raw.grid.n_points < RadialGrid::MIN_POINTS as i64 {
        return Err(invalid(
            "grid.n_points",
            format!("must be at least {} (got {})", RadialGrid::MIN_POINTS, raw.grid.n_points),
        ));
    }

    let potential = PotentialParams { a: p.a, b: p.b, c: p.c, d: p.d, v0: p.v0, v1: p.v1, v2: p.v2, alpha: p.alpha };
    let constants = PhysicalConstants { hbar: raw.constants.hbar, mass: raw.constants.mass };
    let grid = RadialGrid { r_min: raw.grid.r_min, r_max, n_points: raw.grid.n_points as usize };
    Ok(LoadedConfig {
        config: RunConfig {
            potential,
            constants,
            state: StateConfig { n: raw.state.n, l: raw.state.l },
            grid,
            output: OutputConfig { format: raw.output.format, path: raw.output.path },
        },
        r_max_explicit: raw.grid.r_max.is_some(),
    })
}

/// 1-based line and column of a byte offset.
fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_all_defaults() {
        let c = parse_config("").unwrap();
        assert_eq!(c.potential, PotentialParams::figure_general(1.0));
        assert_eq!(c.constants, PhysicalConstants::default());
        assert_eq!(c.state, StateConfig { n: vec![0], l: vec![0] });
        assert_eq!((c.grid.r_min, c.grid.r_max, c.grid.n_points), (1e-6, 40.0, 2000));
        assert_eq!(c.output, OutputConfig { format: None, path: None });
    }

    #[test]
    fn dotted_and_table_forms_agree() {
        let dotted = parse_config("potential.a = 2\npotential.V0 = 3\nstate.n = [0, 1]\n").unwrap();
        let table = parse_config("[potential]\na = 2\nV0 = 3\n[state]\nn = [0, 1]\n").unwrap();
        assert_eq!(dotted, table);
        assert_eq!(dotted.potential.a, 2.0);
        assert_eq!(dotted.potential.v0, 3.0);
    }

    #[test]
    fn alpha_scales_default_grid() {
        let c = parse_config("potential.alpha = 4").unwrap();
        assert_eq!(c.grid.r_max, 10.0);
    }

    #[test]
    fn unknown_key_reports_position() {
        match parse_config("potential.a = 1\npotential.zeta = 2\n") {
            Err(CliError::Parse { line, column, message }) => {
                assert_eq!(line, 2);
                assert!(column >= 1);
                assert!(message.contains("zeta"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_reports_position() {
        match parse_config("potential.a = 1\n\ngrid.n_points = = 3\n") {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation_names_the_field() {
        for (doc, field) in [
            ("potential.alpha = -1", "potential.alpha"),
            ("constants.mass = 0", "constants.mass"),
            ("grid.n_points = 8", "grid.n_points"),
            ("grid.r_min = 5\ngrid.r_max = 1", "grid.r_max"),
        ] {
            match parse_config(doc) {
                Err(CliError::Validation { field: f, .. }) => assert_eq!(f, field, "{doc}"),
                other => panic!("{doc}: {other:?}"),
            }
        }
    }
}
