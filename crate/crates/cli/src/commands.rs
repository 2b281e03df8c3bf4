//! Subcommand implementations. Each returns the rendered document; writing
//! it out is left to the binary.

use hypnu::analytic::printed;
use hypnu::analytic::{
    dimensionless_params, energy_levels, energy_levels_with, paper_triple, quantization_cross_check,
    unnormalized_wavefunction, ConstantTermForm, EnergyLevel, RootBranch,
};
use hypnu::nu::{enumerate_branches, k_candidates, lambda_n_of, radicand_coeffs};
use hypnu::oracle::{
    approximation_study, compare_levels, fd_spectrum, numerov_spectrum, origin_behaviour, Matching,
    NumericSpectrum, RadialGrid,
};
use hypnu::potential::{
    eval_potential, rosen_morse_subscript, scan_series, special_case_params, SpecialCase, SpecialCaseInput,
};
use hypnu::{Error, Execution, PotentialParams};
use serde_json::{json, Value};

use crate::config::{LoadedConfig, RunConfig};
use crate::error::CliError;
use crate::format::{cell, gap_cell, CsvDoc};
use crate::report::{self, SCHEMA_VERSION};

/// Which member of the potential family the config describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Kind {
    #[default]
    General,
    RosenMorse,
    PoschlTeller,
    Scarf,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::General => "general",
            Kind::RosenMorse => "rosen-morse",
            Kind::PoschlTeller => "poschl-teller",
            Kind::Scarf => "scarf",
        }
    }
}

/// How `potential.a` is read for the Rosen–Morse case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RmConvention {
    /// `a` is the coefficient in `−aV0·coth`.
    #[default]
    Coefficient,
    /// `a` is the subscript of `V_{−a,0,c,0} = aV0·coth − cV2·cosech²`.
    Subscript,
}

pub const SELECTION_RULE: &str = "physical_energy is Re(E) of the branch with the smaller |Im E|; ties go to the plus root";

/// Everything a command needs besides its own flags.
#[derive(Debug, Clone)]
pub struct Context {
    pub loaded: LoadedConfig,
    pub kind: Kind,
    pub rm_convention: RmConvention,
    pub exec: Execution,
    /// Unix time for `# generated` lines; `None` keeps output reproducible.
    pub stamp: Option<u64>,
}

impl Context {
    pub fn new(loaded: LoadedConfig) -> Self {
        Context { loaded, kind: Kind::General, rm_convention: RmConvention::Coefficient, exec: Execution::Parallel, stamp: None }
    }

    pub fn config(&self) -> &RunConfig {
        &self.loaded.config
    }

    /// Potential parameters after the special-case substitution, at `alpha`.
    pub fn params_at(&self, alpha: f64) -> Result<PotentialParams, CliError> {
        let p = self.config().potential;
        let input = SpecialCaseInput { v0: p.v0, v1: p.v1, v2: p.v2, a: p.a, b: p.b, c: p.c };
        let params = match (self.kind, self.rm_convention) {
            (Kind::General, _) => {
                let q = p.with_alpha(alpha);
                q.validate()?;
                q
            }
            (Kind::RosenMorse, RmConvention::Coefficient) => special_case_params(SpecialCase::RosenMorse, input, alpha)?,
            (Kind::RosenMorse, RmConvention::Subscript) => rosen_morse_subscript(p.a, p.c, p.v0, p.v2, alpha)?,
            (Kind::PoschlTeller, _) => special_case_params(SpecialCase::PoschlTeller, input, alpha)?,
            (Kind::Scarf, _) => special_case_params(SpecialCase::Scarf, input, alpha)?,
        };
        Ok(params)
    }

    pub fn params(&self) -> Result<PotentialParams, CliError> {
        self.params_at(self.config().potential.alpha)
    }

    fn states(&self) -> Vec<(u32, u32)> {
        let s = &self.config().state;
        s.l.iter().flat_map(|&l| s.n.iter().map(move |&n| (n, l))).collect()
    }

    fn n_states(&self) -> usize {
        self.config().state.n.iter().max().map_or(0, |&m| m as usize + 1)
    }

    fn stamp_lines(&self) -> Vec<String> {
        self.stamp.map(|t| format!("generated_unix = {t}")).into_iter().collect()
    }
}

fn alpha_label(a: f64) -> String {
    format!("{a}")
}

type Series = Vec<(f64, Option<f64>)>;

fn scan_columns(
    ctx: &Context,
    labels: Vec<String>,
    series: Vec<Result<Series, CliError>>,
) -> Result<String, CliError> {
    let series: Vec<_> = series.into_iter().collect::<Result<_, _>>()?;
    let mut doc = CsvDoc { header: vec!["r".to_string()], ..Default::default() };
    doc.header.extend(labels);
    if let Some(first) = series.first() {
        for (i, (r, _)) in first.iter().enumerate() {
            let mut row = vec![cell(*r)];
            row.extend(series.iter().map(|s| gap_cell(s[i].1)));
            doc.rows.push(row);
        }
    }
    doc.trailing = ctx.stamp_lines();
    Ok(doc.render())
}

/// `r,V_alpha=…` columns, one per `alpha`, on a shared radial grid.
pub fn cmd_potential(ctx: &Context, alphas: &[f64], points: Option<usize>) -> Result<String, CliError> {
    if alphas.is_empty() {
        return Err(CliError::Usage("--alpha needs at least one value".into()));
    }
    let g = ctx.config().grid;
    let n = points.unwrap_or(g.n_points);
    let consts = ctx.config().constants;
    let series = ctx.exec.map(alphas, |&alpha| {
        let p = ctx.params_at(alpha)?;
        Ok(scan_series(&p, &consts, g.r_min, g.r_max, n, None, Execution::Sequential)?)
    });
    scan_columns(ctx, alphas.iter().map(|a| format!("V_alpha={}", alpha_label(*a))).collect(), series)
}

/// `r,Veff_l=…` columns, one per `l`, at the config `alpha`.
pub fn cmd_effective(ctx: &Context, ls: &[u32], points: Option<usize>) -> Result<String, CliError> {
    if ls.is_empty() {
        return Err(CliError::Usage("--l needs at least one value".into()));
    }
    let g = ctx.config().grid;
    let n = points.unwrap_or(g.n_points);
    let consts = ctx.config().constants;
    let p = ctx.params()?;
    let series = ctx.exec.map(ls, |&l| Ok(scan_series(&p, &consts, g.r_min, g.r_max, n, Some(l), Execution::Sequential)?));
    scan_columns(ctx, ls.iter().map(|l| format!("Veff_l={l}")).collect(), series)
}

fn chosen(levels: &[EnergyLevel; 2]) -> &EnergyLevel {
    if levels[1].imag_magnitude < levels[0].imag_magnitude {
        &levels[1]
    } else {
        &levels[0]
    }
}

fn singular_entry(n: u32, l: u32, e: &Error) -> Option<Value> {
    match e {
        Error::Singular { denominator } => Some(json!({
            "n": n, "l": l, "status": "singular", "singular": format!("{denominator}=0"),
        })),
        _ => None,
    }
}

fn error_entry(n: u32, l: u32, e: &Error) -> Value {
    singular_entry(n, l, e).unwrap_or_else(|| json!({ "n": n, "l": l, "status": "error", "error": e.to_string() }))
}

type LevelGrid = Vec<((u32, u32), Result<[EnergyLevel; 2], Error>)>;

fn analytic_levels(ctx: &Context, p: &PotentialParams, form: ConstantTermForm) -> LevelGrid {
    let consts = ctx.config().constants;
    let states = ctx.states();
    let levels = ctx.exec.map(&states, |&(n, l)| energy_levels_with(p, &consts, n, l, form));
    states.into_iter().zip(levels).collect()
}

fn analytic_entries(grid: &LevelGrid) -> Vec<Value> {
    grid.iter()
        .map(|((n, l), res)| match res {
            Ok(levels) => {
                let pick = chosen(levels);
                json!({
                    "n": n,
                    "l": l,
                    "status": "ok",
                    "levels": levels.iter().map(report::level).collect::<Vec<_>>(),
                    "chosen_branch": pick.branch.label(),
                    "physical_energy": pick.physical_energy(),
                })
            }
            Err(e) => error_entry(*n, *l, e),
        })
        .collect()
}

/// Both branches of every configured `(n, l)`.
pub fn cmd_spectrum(ctx: &Context) -> Result<Value, CliError> {
    let p = ctx.params()?;
    let grid = analytic_levels(ctx, &p, ConstantTermForm::AsPrinted);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "spectrum",
        "kind": ctx.kind.label(),
        "parameters": report::params(&p),
        "constants": report::constants(&ctx.config().constants),
        "selection_rule": SELECTION_RULE,
        "entries": analytic_entries(&grid),
    }))
}

/// Closed-form `R(r)` on the config grid with `#` metadata after the table.
pub fn cmd_wavefunction(ctx: &Context, n: u32, l: u32, branch: RootBranch) -> Result<String, CliError> {
    let p = ctx.params()?;
    let consts = ctx.config().constants;
    let levels = energy_levels(&p, &consts, n, l)?;
    let level = levels.iter().find(|lv| lv.branch == branch).expect("both branches returned");
    let mut wf = unnormalized_wavefunction(&p, &consts, level)?;
    let normalization = match wf.normalize() {
        Ok(integral) => format!("normalized (integral before rescaling = {})", cell(integral)),
        Err(e @ Error::NonNormalizable { .. }) => format!("not normalized: {e}; N_n left at 1"),
        Err(e) => return Err(e.into()),
    };
    let g = ctx.config().grid;
    let mut doc = CsvDoc {
        header: ["r", "Re(R)", "Im(R)", "|R|^2"].map(String::from).to_vec(),
        ..Default::default()
    };
    let mut prev: Option<(f64, f64)> = None;
    let mut emitted = 0.0;
    for i in 0..g.n_points {
        let r = g.r(i);
        let v = wf.value(r);
        let d = v.norm_sqr();
        if let Some((r0, d0)) = prev {
            emitted += 0.5 * (r - r0) * (d + d0);
        }
        prev = Some((r, d));
        doc.rows.push(vec![cell(r), cell(v.re), cell(v.im), cell(d)]);
    }
    doc.trailing = vec![
        format!("n = {n}, l = {l}, branch = {}", branch.label()),
        format!("E = {}", complex_text(level.energy)),
        format!("N_n = {}", complex_text(wf.norm_constant)),
        format!("normalization: {normalization}"),
        format!("trapezoid integral of |R|^2 over emitted rows = {}", cell(emitted)),
    ];
    doc.trailing.extend(ctx.stamp_lines());
    Ok(doc.render())
}

fn complex_text(z: hypnu::special::ComplexScalar) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {}i", cell(z.re), cell(z.im.abs()))
}

/// FD and Numerov spectra for one `l`.
pub struct OraclePair {
    pub fd: Result<NumericSpectrum, Error>,
    pub numerov: Result<NumericSpectrum, Error>,
}

fn numerov_window(p: &PotentialParams, ctx: &Context, l: u32, grid: &RadialGrid, fd: &NumericSpectrum) -> Option<(f64, f64)> {
    let kin = ctx.config().constants.kinetic_scale() * (l as f64) * (l as f64 + 1.0);
    let floor = (1..grid.n_points - 1)
        .filter_map(|i| {
            let r = grid.r(i);
            eval_potential(p, r).ok().map(|v| v + kin / (r * r))
        })
        .fold(f64::INFINITY, f64::min);
    let e = fd.energies();
    let last = *e.last()?;
    let gap = if e.len() > 1 { 0.5 * (last - e[e.len() - 2]) } else { 0.5 * (last - floor) };
    let pad = gap.max(1e-6 * last.abs().max(1.0));
    Some((floor - 1e-9 * floor.abs().max(1.0), last + pad))
}

pub fn oracle_pair(ctx: &Context, p: &PotentialParams, l: u32, n_states: usize, exec: Execution) -> OraclePair {
    let consts = ctx.config().constants;
    let grid = ctx.config().grid;
    let v = |r: f64| eval_potential(p, r).unwrap_or(f64::NAN);
    let fd = fd_spectrum(v, l, &consts, &grid, n_states, exec);
    let numerov = match &fd {
        Ok(s) if s.is_empty() => Ok(NumericSpectrum { method: hypnu::oracle::Method::Numerov, ..s.clone() }),
        Ok(s) => match numerov_window(p, ctx, l, &grid, s) {
            Some(w) => numerov_spectrum(v, l, &consts, &grid, w, n_states, exec),
            None => Err(Error::Precondition("no finite effective potential on the grid".into())),
        },
        Err(e) => Err(e.clone()),
    };
    OraclePair { fd, numerov }
}

fn oracle_section(ctx: &Context, p: &PotentialParams) -> (Vec<Value>, Vec<(u32, OraclePair)>) {
    let consts = ctx.config().constants;
    let n_states = ctx.n_states();
    let asym = p.asymptote();
    let ls = ctx.config().state.l.clone();
    let pairs: Vec<(u32, OraclePair)> =
        ls.iter().copied().zip(ctx.exec.map(&ls, |&l| oracle_pair(ctx, p, l, n_states, Execution::Sequential))).collect();
    let values = pairs
        .iter()
        .map(|(l, pair)| {
            let spec = |s: &Result<NumericSpectrum, Error>| match s {
                Ok(s) => report::spectrum(s, asym),
                Err(e) => report::failure(e),
            };
            let agreement = match (&pair.fd, &pair.numerov) {
                (Ok(a), Ok(b)) => a
                    .levels
                    .iter()
                    .filter_map(|x| b.levels.iter().find(|y| y.index == x.index).map(|y| (x, y)))
                    .map(|(x, y)| json!({
                        "index": x.index,
                        "fd": x.energy,
                        "numerov": y.energy,
                        "rel_delta": (x.energy - y.energy).abs() / x.energy.abs().max(f64::MIN_POSITIVE),
                    }))
                    .collect::<Vec<_>>(),
                _ => vec![],
            };
            json!({
                "l": l,
                "asymptote": asym,
                "origin_behaviour": report::origin(origin_behaviour(p, &consts, *l)),
                "fd": spec(&pair.fd),
                "numerov": spec(&pair.numerov),
                "fd_vs_numerov": agreement,
            })
        })
        .collect();
    (values, pairs)
}

/// Numerical spectra for every configured `l`.
pub fn cmd_oracle(ctx: &Context) -> Result<Value, CliError> {
    let p = ctx.params()?;
    let (entries, _) = oracle_section(ctx, &p);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "oracle",
        "kind": ctx.kind.label(),
        "parameters": report::params(&p),
        "n_states": ctx.n_states(),
        "entries": entries,
    }))
}

fn nu_entry(ctx: &Context, p: &PotentialParams, n: u32, l: u32, level: &EnergyLevel) -> Value {
    let consts = ctx.config().constants;
    let dp = dimensionless_params(p, &consts, level.energy, l);
    let problem = paper_triple(&dp);
    let ks = k_candidates(&problem);
    let branches = enumerate_branches(&problem);
    let printed = printed::evaluate(&dp, n);
    json!({
        "n": n,
        "l": l,
        "branch": level.branch.label(),
        "energy": report::complex(level.energy),
        "dimensionless": {
            "eps2": report::complex(dp.eps2),
            "beta2": report::complex(dp.beta2),
            "gamma2": report::complex(dp.gamma2),
        },
        "triple": {
            "sigma": report::poly(&problem.sigma),
            "sigma_bar": report::poly(&problem.sigma_bar),
            "tau_bar": report::poly(&problem.tau_bar),
        },
        "radicand_at_k0": report::poly(&radicand_coeffs(&problem, 0.0.into())),
        "k_candidates": match &ks {
            Ok(ks) => json!(ks.iter().map(report::k_candidate).collect::<Vec<_>>()),
            Err(e) => report::failure(e),
        },
        "branches": match &branches {
            Ok(bs) => json!(bs.iter().map(|b| {
                let mut v = report::nu_solution(b);
                v["lambda_n"] = report::complex(lambda_n_of(&problem, &b.tau, n));
                v
            }).collect::<Vec<_>>()),
            Err(e) => report::failure(e),
        },
        "printed_forms": match &printed {
            Ok(pf) => report::printed(pf),
            Err(e) => report::failure(e),
        },
    })
}

fn nu_entries(ctx: &Context, p: &PotentialParams, grid: &LevelGrid) -> Vec<Value> {
    grid.iter()
        .map(|((n, l), res)| match res {
            Ok(levels) => nu_entry(ctx, p, *n, *l, chosen(levels)),
            Err(e) => error_entry(*n, *l, e),
        })
        .collect()
}

/// NU-engine outputs next to the printed closed forms at each level.
pub fn cmd_nu_check(ctx: &Context) -> Result<Value, CliError> {
    let p = ctx.params()?;
    let grid = analytic_levels(ctx, &p, ConstantTermForm::AsPrinted);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "nu-check",
        "kind": ctx.kind.label(),
        "parameters": report::params(&p),
        "entries": nu_entries(ctx, &p, &grid),
    }))
}

/// Every diagnostic in one document; failures are embedded per section.
pub fn cmd_validate(ctx: &Context) -> Result<Value, CliError> {
    let p = ctx.params()?;
    let cfg = ctx.config();
    let consts = cfg.constants;
    let grid = analytic_levels(ctx, &p, ConstantTermForm::AsPrinted);
    let vaux = analytic_levels(ctx, &p, ConstantTermForm::WithVaux);

    let radii: Vec<f64> = [0.5, 1.0, 2.0, 5.0, 10.0, 20.0].iter().map(|x| x / p.alpha).collect();
    let potential = json!({
        "asymptote": p.asymptote(),
        "inverse_square_strength": p.inverse_square_strength(),
        "samples": radii.iter().map(|&r| json!({
            "r": r,
            "V": eval_potential(&p, r).ok(),
        })).collect::<Vec<_>>(),
    });

    let ok_levels = || grid.iter().filter_map(|(_, r)| r.as_ref().ok()).flat_map(|ls| ls.iter());
    let cross_checks: Vec<Value> = ok_levels()
        .map(|lv| {
            let mut v = json!({ "n": lv.n, "l": lv.l, "branch": lv.branch.label() });
            match quantization_cross_check(&p, &consts, lv) {
                Ok(c) => v["check"] = report::cross_check(&c),
                Err(e) => v["error"] = json!(e.to_string()),
            }
            v
        })
        .collect();
    let ode: Vec<Value> = ok_levels()
        .map(|lv| json!({
            "n": lv.n, "l": lv.l, "branch": lv.branch.label(),
            "residual": lv.residual_ode, "note": lv.residual_ode_note,
        }))
        .collect();
    let grouping: Vec<Value> = ok_levels()
        .map(|lv| json!({
            "n": lv.n, "l": lv.l, "branch": lv.branch.label(),
            "ode_bracket": report::complex(lv.energy),
            "spectrum_inversion": report::complex(lv.energy_alt_grouping),
        }))
        .collect();

    let (oracle, pairs) = oracle_section(ctx, &p);
    let mut comparison = Vec::new();
    for (l, pair) in &pairs {
        for branch in [RootBranch::PlusRoot, RootBranch::MinusRoot] {
            let levels: Vec<EnergyLevel> = grid
                .iter()
                .filter(|((_, gl), _)| gl == l)
                .filter_map(|(_, r)| r.as_ref().ok())
                .flat_map(|ls| ls.iter().filter(|x| x.branch == branch).cloned())
                .collect();
            for (name, spec) in [("finite_difference", &pair.fd), ("numerov", &pair.numerov)] {
                let body = match spec {
                    Ok(s) => report::comparison(&compare_levels(&levels, s, Matching::ByIndex)),
                    Err(e) => report::failure(e),
                };
                comparison.push(json!({ "l": l, "branch": branch.label(), "method": name, "report": body }));
            }
        }
    }

    let study: Vec<Value> = {
        let ls: Vec<u32> = cfg.state.l.iter().copied().filter(|&l| l >= 1).collect();
        let n_states = ctx.n_states();
        ctx.exec
            .map(&ls, |&l| approximation_study(&p, &consts, l, &cfg.grid, n_states, Execution::Sequential))
            .into_iter()
            .zip(&ls)
            .map(|(res, l)| match res {
                Ok(s) => json!({
                    "l": l,
                    "alpha": s.alpha,
                    "levels": s.levels.iter().map(|x| json!({
                        "index": x.index, "exact": x.exact, "approx": x.approx,
                        "shift": x.shift, "rel_shift": x.rel_shift,
                    })).collect::<Vec<_>>(),
                }),
                Err(e) => json!({ "l": l, "error": e.to_string() }),
            })
            .collect()
    };

    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "validate",
        "config": report::config(cfg, ctx.kind.label(), &p),
        "selection_rule": SELECTION_RULE,
        "potential": potential,
        "analytic": analytic_entries(&grid),
        "analytic_with_vaux": analytic_entries(&vaux),
        "eps_grouping_variants": grouping,
        "quantization_cross_check": cross_checks,
        "ode_residuals": ode,
        "oracle": oracle,
        "comparison": comparison,
        "nu_diagnostics": nu_entries(ctx, &p, &grid),
        "centrifugal_study": study,
    }))
}
