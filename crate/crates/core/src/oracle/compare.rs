use super::NumericSpectrum;
use crate::analytic::EnergyLevel;

/// How analytic and numeric levels are paired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Matching {
    /// Analytic `n` against the numeric level with index `n`.
    #[default]
    ByIndex,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub n: u32,
    pub l: u32,
    pub branch: &'static str,
    pub analytic_re: f64,
    pub analytic_im: f64,
    pub numeric: f64,
    /// `|E_analytic − E_numeric|` with the analytic value complex.
    pub abs_delta: f64,
    /// `abs_delta / |E_numeric|` (infinite if the numeric level is zero).
    pub rel_delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonSummary {
    pub max_abs_delta: f64,
    pub mean_abs_delta: f64,
    pub max_rel_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    /// `None` when there are no rows.
    pub summary: Option<ComparisonSummary>,
    pub notes: Vec<String>,
}

/// Tabulates analytic against numeric levels. Agreement is measured, never
/// asserted.
pub fn compare_levels(analytic: &[EnergyLevel], numeric: &NumericSpectrum, matching: Matching) -> ComparisonReport {
    let Matching::ByIndex = matching;
    let mut report = ComparisonReport::default();
    for level in analytic {
        let Some(num) = numeric.levels.iter().find(|x| x.index == level.n as usize) else {
            report.notes.push(format!(
                "no {} level with index {} for analytic n = {}, l = {}",
                numeric.method.label(),
                level.n,
                level.n,
                level.l
            ));
            continue;
        };
        let abs_delta = (level.energy - num.energy).norm();
        report.rows.push(ComparisonRow {
            n: level.n,
            l: level.l,
            branch: level.branch.label(),
            analytic_re: level.energy.re,
            analytic_im: level.energy.im,
            numeric: num.energy,
            abs_delta,
            rel_delta: abs_delta / num.energy.abs(),
        });
    }
    if numeric.levels.len() > analytic.len() {
        report.notes.push(format!(
            "length mismatch: {} numeric levels, {} analytic levels",
            numeric.levels.len(),
            analytic.len()
        ));
    }
    if !report.rows.is_empty() {
        let count = report.rows.len() as f64;
        report.summary = Some(ComparisonSummary {
            max_abs_delta: report.rows.iter().map(|r| r.abs_delta).fold(0.0, f64::max),
            mean_abs_delta: report.rows.iter().map(|r| r.abs_delta).sum::<f64>() / count,
            max_rel_delta: report.rows.iter().map(|r| r.rel_delta).fold(0.0, f64::max),
        });
    }
    report
}
