//! Acceptance suite: one PASS/FAIL line per criterion, at the stated
//! tolerances and runtime budgets.
//!
//! Criteria listed in `EXPECTED_RED` are implemented at full strength and
//! reported as FAIL; they do not fail the process because the target
//! expression is algebraically different from what the method produces (see
//! the project notes). Any other failure, or an expected-red criterion that
//! starts passing, exits nonzero.

use hypnu::analytic::printed;
use hypnu::analytic::{energy_levels, paper_triple, DimensionlessParams};
use hypnu::nu::{k_candidates, lambda_n_of, radicand_coeffs};
use hypnu::oracle::{approximation_sweep, fd_spectrum, numerov_spectrum, NumericSpectrum, RadialGrid};
use hypnu::potential::centrifugal_approx;
use hypnu::special::{jacobi, jacobi_explicit_sum, principal_sqrt, ComplexScalar, JacobiSpec};
use hypnu::{Error, Execution, PhysicalConstants, PotentialParams};
use hypnu_cli::commands::{cmd_effective, cmd_potential, cmd_spectrum, cmd_validate};
use hypnu_cli::{load_config, Context, Kind, RmConvention};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

const EXPECTED_RED: &[u32] = &[2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn context(config: &str) -> Context {
    let text = std::fs::read_to_string(root().join("configs").join(config)).unwrap();
    Context::new(load_config(&text).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_complex(r: &mut ChaCha8Rng, scale: f64) -> ComplexScalar {
    ComplexScalar::new(r.gen_range(-scale..scale), r.gen_range(-scale..scale))
}

fn rand_dimensionless(r: &mut ChaCha8Rng) -> DimensionlessParams {
    let (eps2, beta2, gamma2) = (rand_complex(r, 3.0), rand_complex(r, 3.0), rand_complex(r, 3.0));
    DimensionlessParams { eps2, beta2, gamma2, beta: principal_sqrt(beta2) }
}

fn rel(a: ComplexScalar, b: ComplexScalar) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

fn c1_radicand() -> Outcome {
    let mut r = rng(1);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let dp = rand_dimensionless(&mut r);
        let k = rand_complex(&mut r, 3.0);
        let got = radicand_coeffs(&paper_triple(&dp), k).scale(4.0.into());
        let want = [dp.beta2 + 4.0 * dp.eps2 + 4.0 * k, -4.0 * dp.beta2, 4.0 * k - 4.0 * dp.gamma2];
        for (g, w) in [got.c0, got.c1, got.c2].into_iter().zip(want) {
            worst = worst.max(rel(g, w));
        }
    }
    outcome(worst <= 1e-14, format!("max relative deviation {worst:.2e} (tol 1e-14, 100 cases)"))
}

fn c2_k_candidates() -> Outcome {
    let mut r = rng(2);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let dp = rand_dimensionless(&mut r);
        let (e, b2, g2) = (dp.eps2, dp.beta2, dp.gamma2);
        let u = principal_sqrt(e * e + e * b2 / 2.0) + g2;
        let v = ComplexScalar::i() * dp.beta * principal_sqrt(g2 + 2.5 * b2);
        let root = principal_sqrt(u * u - v * v);
        let printed = [g2 - e - b2 / 4.0 + root, g2 - e - b2 / 4.0 - root];
        let ks: Vec<ComplexScalar> = match k_candidates(&paper_triple(&dp)) {
            Ok(ks) => ks.iter().map(|c| c.k).collect(),
            Err(e) => return outcome(false, format!("k_candidates failed: {e}")),
        };
        for p in printed {
            let nearest = ks.iter().map(|k| rel(*k, p)).fold(f64::INFINITY, f64::min);
            worst = worst.max(nearest);
        }
    }
    outcome(worst <= 1e-10, format!("max relative distance printed→mechanical k {worst:.2e} (tol 1e-10)"))
}

fn c3_lambda_n() -> Outcome {
    let mut r = rng(3);
    let mut worst = 0.0_f64;
    let mut zero_exact = true;
    let mut typo_reported = true;
    for _ in 0..50 {
        let dp = rand_dimensionless(&mut r);
        let problem = paper_triple(&dp);
        for n in 0..6u32 {
            let pf = match printed::evaluate(&dp, n) {
                Ok(pf) => pf,
                Err(e) => return outcome(false, format!("printed forms failed: {e}")),
            };
            let got = lambda_n_of(&problem, &pf.tau_printed, n);
            let nf = n as f64;
            let want = nf * principal_sqrt(pf.u + pf.v) - nf * (nf + 1.0);
            if n == 0 {
                zero_exact &= got == ComplexScalar::new(0.0, 0.0);
            } else {
                worst = worst.max(rel(got, want));
            }
            let u_form = pf.u * principal_sqrt(pf.u + pf.v) - pf.u * (pf.u + 1.0);
            typo_reported &= pf.lambda_n_printed_u == u_form && pf.lambda_n_u_for_n_delta.is_finite();
        }
    }
    outcome(
        worst <= 1e-12 && zero_exact && typo_reported,
        format!("max rel deviation {worst:.2e}; lambda_0 exact: {zero_exact}; u-for-n form in diagnostics: {typo_reported}"),
    )
}

fn c4_back_substitution() -> Outcome {
    let mut r = rng(4);
    let consts = PhysicalConstants::default();
    let mut worst = 0.0_f64;
    let mut done = 0;
    while done < 100 {
        let p = PotentialParams {
            a: r.gen_range(0.1..3.0),
            b: r.gen_range(-1.0..1.0),
            c: r.gen_range(-3.0..3.0),
            d: r.gen_range(-2.0..2.0),
            v0: r.gen_range(0.1..2.0),
            v1: r.gen_range(0.0..1.0),
            v2: r.gen_range(0.0..0.5),
            alpha: r.gen_range(0.3..4.0),
        };
        let (n, l) = (r.gen_range(0..5), r.gen_range(0..4));
        match energy_levels(&p, &consts, n, l) {
            Ok(levels) => {
                for lv in &levels {
                    worst = worst.max(lv.residual_quantization);
                }
                done += 1;
            }
            Err(Error::Singular { .. }) => continue,
            Err(e) => return outcome(false, format!("energy_levels failed: {e}")),
        }
    }
    outcome(worst <= 1e-10, format!("max scaled residual {worst:.2e} over 100 sets x 2 branches (tol 1e-10)"))
}

fn binomial(top: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (top - j as f64) / (j + 1) as f64)
}

fn c5_jacobi() -> Outcome {
    let mut r = rng(5);
    let mut worst = 0.0_f64;
    let mut compared = 0;
    while compared < 200 {
        let spec = JacobiSpec {
            n: r.gen_range(0..=8),
            a: rand_complex(&mut r, 3.5),
            b: rand_complex(&mut r, 3.5),
            x: rand_complex(&mut r, 1.4),
        };
        if spec.a.norm() > 5.0 || spec.b.norm() > 5.0 || spec.x.norm() > 2.0 {
            continue;
        }
        let rec = match jacobi(&spec) {
            Ok(v) => v,
            Err(e) => return outcome(false, format!("jacobi failed: {e}")),
        };
        worst = worst.max(rel(rec, jacobi_explicit_sum(&spec)));
        compared += 1;
    }
    let mut endpoint = 0.0_f64;
    for a in 0..=4u32 {
        for n in 0..=6u32 {
            for b in [0.0, 1.5, 3.0] {
                let spec = JacobiSpec { n: n as usize, a: (a as f64).into(), b: ComplexScalar::new(b, 0.0), x: 1.0.into() };
                let want = binomial((n + a) as f64, n);
                endpoint = endpoint.max((jacobi(&spec).unwrap().re - want).abs() / want);
            }
        }
    }
    outcome(
        worst <= 1e-10 && endpoint <= 1e-12,
        format!("recurrence vs sum {worst:.2e} (tol 1e-10, 200 cases); endpoint identity {endpoint:.2e} (tol 1e-12)"),
    )
}

fn c6_oracle() -> Outcome {
    let unit = PhysicalConstants { hbar: 1.0, mass: 0.5 };
    let exec = Execution::Parallel;
    let box_grid = |n| RadialGrid::new(1e-12, 1.0 + 1e-12, n).unwrap();
    let osc_grid = |n| RadialGrid::new(1e-12, 10.0, n).unwrap();
    let zero = |_: f64| 0.0;
    let osc = |r: f64| r * r;
    let run = || -> Result<(f64, f64, f64, f64, f64, f64), Error> {
        let box_fd = fd_spectrum(zero, 0, &unit, &box_grid(2000), 1, exec)?;
        let box_err = (box_fd.levels[0].energy / (PI * PI) - 1.0).abs();

        let osc_fd = fd_spectrum(osc, 0, &unit, &osc_grid(2000), 3, exec)?;
        let osc_nv = numerov_spectrum(osc, 0, &unit, &osc_grid(2000), (0.0, 12.0), 3, exec)?;
        let exact = [3.0, 7.0, 11.0];
        let osc_err = |s: &NumericSpectrum| {
            s.levels.iter().zip(exact).map(|(l, e)| (l.energy / e - 1.0).abs()).fold(f64::NAN, f64::max)
        };
        let osc_worst = osc_err(&osc_fd).max(osc_err(&osc_nv));
        if osc_fd.len() != 3 || osc_nv.len() != 3 {
            return Err(Error::Precondition("oscillator levels missing".into()));
        }

        let cross = |a: &NumericSpectrum, b: &NumericSpectrum| {
            a.levels.iter().zip(&b.levels).map(|(x, y)| (x.energy / y.energy - 1.0).abs()).fold(0.0, f64::max)
        };
        let fine_box = box_grid(8000);
        let box_cross = cross(
            &fd_spectrum(zero, 0, &unit, &fine_box, 3, exec)?,
            &numerov_spectrum(zero, 0, &unit, &fine_box, (1.0, 100.0), 3, exec)?,
        );
        let fine_osc = osc_grid(20000);
        let osc_cross = cross(
            &fd_spectrum(osc, 0, &unit, &fine_osc, 3, exec)?,
            &numerov_spectrum(osc, 0, &unit, &fine_osc, (0.0, 12.0), 3, exec)?,
        );

        let err_at = |n| fd_spectrum(zero, 0, &unit, &box_grid(n), 1, exec).map(|s| (s.levels[0].energy - PI * PI).abs());
        let ratio = err_at(1001)? / err_at(2001)?;
        Ok((box_err, osc_worst, box_cross, osc_cross, ratio, 0.0))
    };
    match run() {
        Ok((box_err, osc, box_cross, osc_cross, ratio, _)) => outcome(
            box_err <= 1e-3 && osc <= 1e-3 && box_cross <= 1e-6 && osc_cross <= 1e-6 && (3.5..=4.5).contains(&ratio),
            format!(
                "box {box_err:.2e}, oscillator {osc:.2e} (tol 1e-3); FD/Numerov box {box_cross:.2e}, oscillator {osc_cross:.2e} (tol 1e-6); O(h^2) ratio {ratio:.3}"
            ),
        ),
        Err(e) => outcome(false, format!("oracle failed: {e}")),
    }
}

fn c7_centrifugal() -> Outcome {
    let mut worst = 0.0_f64;
    for alpha in [0.5, 1.0, 2.0, 4.0] {
        for i in 1..=300 {
            let x = i as f64 * 1e-3;
            let rel_err = centrifugal_approx(alpha, x / alpha).unwrap().rel_error;
            worst = worst.max(rel_err / (x * x / 3.0));
        }
    }
    let p = PotentialParams::figure_general(1.0);
    let sweep = approximation_sweep(
        &p,
        &PhysicalConstants::default(),
        1,
        &[1.0, 2.0, 3.0, 4.0],
        3,
        RadialGrid::default_for,
        Execution::Parallel,
    );
    let reports = match sweep {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("approximation study failed: {e}")),
    };
    let per_level: Vec<Vec<f64>> =
        (0..3).map(|k| reports.iter().map(|r| r.levels[k].shift.abs()).collect()).collect();
    let monotone = per_level.iter().all(|s| s.windows(2).all(|w| w[1] > w[0]));
    outcome(
        worst <= 1.1 && monotone,
        format!(
            "max rel_error / ((alpha r)^2/3) = {worst:.4} (tol 1.1); ground-level |shift| across alpha=1..4: {:?}; monotone for all 3 levels: {monotone}",
            per_level[0].iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>()
        ),
    )
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<Option<f64>>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(|c| c.parse().ok()).collect()).collect();
    (header, rows)
}

/// Column `col` of a scan restricted to `r < 0.015` (αr < 0.08 for every
/// plotted α, inside any small-r barrier) must rise strictly with r from a
/// very negative first value.
fn diverges_down(ctx: &Context, alphas: &[f64], col: usize) -> bool {
    let mut zoom = ctx.clone();
    zoom.loaded.config.grid = RadialGrid::new(1e-6, 0.015, 400).unwrap();
    let (_, rows) = parse_csv(&cmd_potential(&zoom, alphas, None).unwrap());
    let v: Vec<f64> = rows.iter().filter_map(|r| r[col]).collect();
    v.len() == rows.len() && v[0] < -1e6 && v.windows(2).all(|w| w[0] < w[1])
}

fn attractive_core(p: &PotentialParams) -> bool {
    p.b * p.v1 < p.c * p.v2
}

fn c8_figures() -> Outcome {
    let alphas = [1.0, 2.0, 3.0, 4.0];
    let mut notes = Vec::new();
    let mut pass = true;

    let fig1 = context("fig1_general.toml");
    let (_, rows) = parse_csv(&cmd_potential(&fig1, &alphas, None).unwrap());
    let at20 = rows
        .iter()
        .min_by(|a, b| (a[0].unwrap() - 20.0).abs().total_cmp(&(b[0].unwrap() - 20.0).abs()))
        .unwrap();
    let asym_err = at20[1..].iter().map(|v| (v.unwrap() - 1.005).abs()).fold(0.0, f64::max);
    pass &= asym_err <= 1e-3 && (at20[0].unwrap() - 20.0).abs() < 0.05;
    notes.push(format!("Fig1 |V(20) - 1.005| = {asym_err:.1e}"));
    let general_div = attractive_core(&fig1.params().unwrap()) && (1..=4).all(|c| diverges_down(&fig1, &alphas, c));
    pass &= general_div;

    let mut fig2 = context("fig2_rosen_morse.toml");
    fig2.kind = Kind::RosenMorse;
    let mut rm_div = true;
    for conv in [RmConvention::Coefficient, RmConvention::Subscript] {
        fig2.rm_convention = conv;
        let (header, rows) = parse_csv(&cmd_potential(&fig2, &alphas, None).unwrap());
        rm_div &= header.len() == 5 && rows.iter().all(|r| r.len() == 5);
        rm_div &= attractive_core(&fig2.params().unwrap()) && (1..=4).all(|c| diverges_down(&fig2, &alphas, c));
    }
    pass &= rm_div;
    notes.push(format!("r->0 divergence: general {general_div}, Rosen-Morse (both conventions) {rm_div}"));

    for (file, kind) in [("fig3_poschl_teller.toml", Kind::PoschlTeller), ("fig4_scarf.toml", Kind::Scarf)] {
        let mut c = context(file);
        c.kind = kind;
        let (header, rows) = parse_csv(&cmd_potential(&c, &alphas, None).unwrap());
        pass &= header.len() == 5 && rows.iter().all(|r| r.len() == 5);
    }

    let fig5 = context("fig5_effective.toml");
    let (header, rows) = parse_csv(&cmd_effective(&fig5, &[1, 2, 3], None).unwrap());
    let ordered = header.len() == 4
        && rows.iter().all(|r| {
            let v: Vec<f64> = r[1..].iter().map(|x| x.unwrap_or(f64::NAN)).collect();
            v[0] < v[1] && v[1] < v[2]
        });
    pass &= ordered;
    notes.push(format!("Fig5 columns strictly ordered in l at all {} radii: {ordered}", rows.len()));
    outcome(pass, notes.join("; "))
}

fn finite_complex(v: &Value) -> bool {
    v["re"].as_f64().is_some_and(f64::is_finite) && v["im"].as_f64().is_some_and(f64::is_finite)
}

fn schema_errors(name: &str, doc: &Value) -> usize {
    let text = std::fs::read_to_string(root().join("schemas").join(format!("{name}.schema.json"))).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap().iter_errors(doc).count()
}

fn c9_validate() -> Outcome {
    let mut c = context("fig1_general.toml");
    c.loaded.config.state.n = vec![0, 1, 2];
    c.loaded.config.state.l = vec![0, 1, 2];
    let doc = match cmd_validate(&c) {
        Ok(d) => d,
        Err(e) => return outcome(false, format!("validate failed: {e}")),
    };
    let again = cmd_validate(&c).unwrap();
    let arr = |k: &str| doc[k].as_array().cloned().unwrap_or_default();

    let analytic = arr("analytic");
    let analytic_ok = analytic.len() == 9
        && analytic.iter().all(|e| {
            e["status"] == "ok" && e["levels"].as_array().unwrap().iter().all(|l| finite_complex(&l["energy"]))
        });
    let oracle_ok = arr("oracle").len() == 3
        && arr("oracle").iter().all(|o| {
            ["fd", "numerov"].iter().all(|m| {
                let lv = o[m]["levels"].as_array();
                lv.is_some_and(|lv| lv.len() == 3 && lv.iter().all(|x| x["energy"].as_f64().is_some_and(f64::is_finite)))
            })
        });
    let deltas_ok = !arr("comparison").is_empty()
        && arr("comparison").iter().all(|c| {
            c["report"]["rows"].as_array().is_some_and(|rows| {
                rows.len() == 3 && rows.iter().all(|r| r["abs_delta"].as_f64().is_some_and(f64::is_finite))
            })
        });
    let ode_ok = arr("ode_residuals").len() == 18
        && arr("ode_residuals").iter().all(|o| o["residual"].as_f64().is_some_and(f64::is_finite) || o["note"].is_string());
    let grouping_ok = arr("eps_grouping_variants").len() == 18
        && arr("eps_grouping_variants")
            .iter()
            .all(|g| finite_complex(&g["ode_bracket"]) && finite_complex(&g["spectrum_inversion"]));
    let nu_ok = arr("nu_diagnostics").len() == 9
        && arr("nu_diagnostics").iter().all(|n| n["printed_forms"]["k_delta"].as_f64().is_some_and(f64::is_finite));
    let schema = schema_errors("validate", &doc);
    let reproducible = doc == again;
    outcome(
        analytic_ok && oracle_ok && deltas_ok && ode_ok && grouping_ok && nu_ok && schema == 0 && reproducible,
        format!(
            "analytic {analytic_ok}, oracle {oracle_ok}, deltas {deltas_ok}, ode {ode_ok}, eps2 variants {grouping_ok}, NU diagnostics {nu_ok}, schema errors {schema}, reproducible {reproducible}"
        ),
    )
}

fn exit_code(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_hypnu")).args(args).current_dir(root()).output().ok()?.status.code()
}

fn c10_singular() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (file, kind, flag) in [
        ("fig3_poschl_teller.toml", Kind::PoschlTeller, "poschl-teller"),
        ("fig4_scarf.toml", Kind::Scarf, "scarf"),
    ] {
        let mut c = context(file);
        c.kind = kind;
        let spectrum = cmd_spectrum(&c).unwrap();
        let singular = spectrum["entries"]
            .as_array()
            .unwrap()
            .iter()
            .all(|e| e["status"] == "singular" && e["singular"] == "beta=0");
        let report = cmd_validate(&c).unwrap();
        let oracle_valid = report["oracle"].as_array().unwrap().iter().all(|o| {
            ["fd", "numerov"].iter().all(|m| {
                o[m]["levels"].as_array().is_some_and(|lv| {
                    lv.len() == 3
                        && lv.iter().enumerate().all(|(k, x)| x["index"] == k && x["node_count"] == k)
                        && lv.windows(2).all(|w| w[0]["energy"].as_f64() < w[1]["energy"].as_f64())
                })
            })
        });
        let config = format!("configs/{file}");
        let wf = exit_code(&["wavefunction", "--kind", flag, "--config", &config]);
        let val = exit_code(&["validate", "--kind", flag, "--config", &config, "--out", "-"]);
        pass &= singular && oracle_valid && wf == Some(4) && val == Some(0);
        notes.push(format!("{flag}: singular {singular}, oracle valid {oracle_valid}, wavefunction exit {wf:?}, validate exit {val:?}"));
    }
    outcome(pass, notes.join("; "))
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "NU radicand transcription", Duration::from_secs(1), c1_radicand),
        (2, "k-candidate printed form", Duration::from_secs(1), c2_k_candidates),
        (3, "lambda_n mechanical check", Duration::from_secs(1), c3_lambda_n),
        (4, "quantization back-substitution", Duration::from_secs(1), c4_back_substitution),
        (5, "Jacobi recurrence and endpoint", Duration::from_secs(1), c5_jacobi),
        (6, "numerical oracle correctness", Duration::from_secs(10), c6_oracle),
        (7, "centrifugal approximation", Duration::from_secs(20), c7_centrifugal),
        (8, "figure reproduction", Duration::from_secs(5), c8_figures),
        (9, "end-to-end validation report", Duration::from_secs(30), c9_validate),
        (10, "singular-case surfacing", Duration::from_secs(10), c10_singular),
    ];
    let mut unexpected = Vec::new();
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = result.pass && in_time;
        let red_expected = EXPECTED_RED.contains(&id);
        let tag = if pass { "PASS" } else { "FAIL" };
        let note = match (pass, red_expected) {
            (false, true) => " [expected: unattainable as specified]",
            (true, true) => " [expected red but passed]",
            _ => "",
        };
        println!(
            "[{tag}] {id:>2} {name}: {} | {:.3}s (budget {}s){note}",
            result.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        if pass == red_expected {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
