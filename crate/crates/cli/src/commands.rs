use iso_euler::eos::{Eos, IsentropicEos, ModifiedTait, ZeroPressure};
use iso_euler::export::{format_float, CsvTable};
use iso_euler::fvcheck::{convergence_table, run_bubble, run_noh, NohRunOptions, DEFAULT_CFL};
use iso_euler::similarity::{
    integrate, CaseIParams, CaseITransformedState, DeltaSystem, GeneralSystem, IntegratorOptions,
    SimilarityMap, SimilarityState, Trajectory,
};
use iso_euler::{bubble_solution, solve_noh_shock, EosSpec, ScalingExponents, SymmetryCase};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{
    BubbleConfig, BubbleSuite, NohConfig, NohSuite, SimilarityConfig, VerifyConfig,
};
use crate::error::{config, numerical, CliError};

/// A named result: a table written as `<name>.csv` or `<name>.json`, or a
/// JSON document always written as `<name>.json`.
pub enum Artifact {
    Table(String, CsvTable),
    Json(String, Value),
}

pub struct Outcome {
    pub artifacts: Vec<Artifact>,
    /// Set when a verification threshold was missed.
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(artifacts: Vec<Artifact>) -> Self {
        Self {
            artifacts,
            failure: None,
        }
    }
}

fn build_eos(spec: Option<EosSpec>, fallback: Eos) -> Result<Eos, CliError> {
    spec.map_or(Ok(fallback), |s| Eos::from_spec(&s).map_err(config))
}

fn number(x: f64) -> Value {
    // keeps the 17-digit text, so the report matches the tables digit for digit
    serde_json::from_str(&format_float(x)).unwrap_or(Value::Null)
}

pub fn noh(cfg: &NohConfig) -> Result<Outcome, CliError> {
    let mut eos = build_eos(cfg.eos, Eos::Tait(ModifiedTait::water()))?;
    if !(cfg.rho0 > 0.0) {
        return Err(config(format!("`rho0` must be positive, got {}", cfg.rho0)));
    }
    eos.validity().check(cfg.rho0).map_err(config)?;
    if cfg.normalize_sie {
        eos = eos.normalized_at(cfg.rho0).map_err(config)?;
    }
    let speeds = cfg.u0.values("u0")?;
    let shocks = speeds
        .par_iter()
        .map(|&u0| {
            solve_noh_shock(&eos, cfg.rho0, u0).map_err(|e| numerical(format!("u0={u0}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = CsvTable::new(&[
        "u0",
        "rho2",
        "D0",
        "P2",
        "I2",
        "residual_mass",
        "residual_momentum",
    ]);
    for s in &shocks {
        let (mass, momentum) = s.residuals(&eos);
        table.push_floats(&[s.u0, s.rho2, s.d0, s.p2, s.i2, mass, momentum]);
    }
    Ok(Outcome::ok(vec![Artifact::Table("noh".into(), table)]))
}

pub fn bubble(cfg: &BubbleConfig) -> Result<Outcome, CliError> {
    if cfg.points == 0 {
        return Err(config("`points` must be positive"));
    }
    if !(cfg.t > 0.0) {
        return Err(config(format!("`t` must be positive, got {}", cfg.t)));
    }
    let mut profiles = CsvTable::new(&["n", "xi", "u", "rho", "P", "I"]);
    let mut edges = CsvTable::new(&["n", "gamma", "omega", "w0", "xi0"]);
    for &geometry in &cfg.geometries {
        let sol = bubble_solution(geometry, cfg.b, cfg.rho_ref).map_err(config)?;
        let n = geometry.index().to_string();
        edges.push_cells(
            std::iter::once(n.clone())
                .chain([sol.gamma, sol.omega, sol.w0, sol.xi0].map(format_float))
                .collect(),
        );
        for k in 1..=cfg.points {
            let xi = sol.xi0 * k as f64 / cfg.points as f64;
            let f = sol.fields(xi * cfg.t, cfg.t).map_err(numerical)?;
            profiles.push_cells(
                std::iter::once(n.clone())
                    .chain([xi, f.u, f.rho, f.p, f.sie].map(format_float))
                    .collect(),
            );
        }
    }
    Ok(Outcome::ok(vec![
        Artifact::Table("bubble".into(), profiles),
        Artifact::Table("bubble_edges".into(), edges),
    ]))
}

fn integrator_options(cfg: &SimilarityConfig) -> Result<IntegratorOptions, CliError> {
    let mut opts = IntegratorOptions::default();
    if let Some(rtol) = cfg.rtol {
        opts.rtol = rtol;
    }
    if let Some(atol) = cfg.atol {
        opts.atol = atol;
    }
    if let Some(max_steps) = cfg.max_steps {
        opts.max_steps = max_steps;
    }
    if !(opts.rtol > 0.0 && opts.atol > 0.0) {
        return Err(config("`rtol` and `atol` must be positive"));
    }
    Ok(opts)
}

const SIMILARITY_HEADER: [&str; 6] = ["xi", "w", "j", "W", "J", "termination_reason"];

fn trajectory_table<F>(n: usize, reason: &str, mut row: F) -> Result<CsvTable, CliError>
where
    F: FnMut(usize) -> Result<[Option<f64>; 5], CliError>,
{
    let mut table = CsvTable::new(&SIMILARITY_HEADER);
    for k in 0..n {
        let mut cells: Vec<String> = row(k)?
            .iter()
            .map(|v| v.map(format_float).unwrap_or_default())
            .collect();
        cells.push(if k + 1 == n {
            reason.to_owned()
        } else {
            String::new()
        });
        table.push_cells(cells);
    }
    Ok(table)
}

fn termination_report<const N: usize>(tr: &Trajectory<N>, case: SymmetryCase) -> Value {
    use iso_euler::similarity::Termination::*;
    let at = match &tr.termination {
        Completed => None,
        SingularLocus { x } | StepUnderflow { x, .. } | MaxSteps { x } => Some(*x),
    };
    let cause = match &tr.termination {
        StepUnderflow { cause: Some(c), .. } => Value::String(c.to_string()),
        _ => Value::Null,
    };
    json!({
        "case": case.roman(),
        "termination_reason": tr.termination.reason(),
        "stopped_at": at.map_or(Value::Null, number),
        "cause": cause,
        "accepted_steps": tr.accepted,
        "rejected_steps": tr.rejected,
    })
}

pub fn similarity(cfg: &SimilarityConfig) -> Result<Outcome, CliError> {
    let [a1, a2, a3] = cfg.a;
    let exps = ScalingExponents::new(a1, a2, a3).map_err(config)?;
    let case = exps.case();
    let opts = integrator_options(cfg)?;
    let start = SimilarityState::new(cfg.start.xi, cfg.start.w, cfg.start.j);

    let (table, report) = if case == SymmetryCase::I {
        let psi = exps.power_laws().psi.unwrap_or(f64::NAN);
        let amplitude = match cfg.eos {
            None => 1.0,
            Some(EosSpec::Polytropic { a1, psi: p, .. }) if (p - psi).abs() <= 1e-12 * psi.abs() => a1,
            Some(_) => {
                return Err(config(format!(
                    "case I needs `eos` of type polytropic with psi = {psi} (the group's pressure exponent)"
                )))
            }
        };
        let params = CaseIParams::new(exps, amplitude, cfg.geometry).map_err(config)?;
        let t0 = params.to_transformed(&start).map_err(config)?;
        let sys = DeltaSystem { params };
        let tr =
            integrate(&sys, t0.big_j, [t0.big_w, t0.xi.ln()], cfg.end, &opts).map_err(numerical)?;
        let table = trajectory_table(tr.len(), tr.termination.reason(), |k| {
            let (big_j, [big_w, ln_xi]) = (tr.x[k], tr.y[k]);
            let s = params
                .from_transformed(&CaseITransformedState {
                    xi: ln_xi.exp(),
                    big_j,
                    big_w,
                })
                .map_err(numerical)?;
            Ok([Some(s.xi), Some(s.w), Some(s.j), Some(big_w), Some(big_j)])
        })?;
        (table, termination_report(&tr, case))
    } else {
        let eos = build_eos(cfg.eos, Eos::Zero(ZeroPressure::new()))?;
        let map = SimilarityMap::from_scaling(&exps).map_err(config)?;
        let sys = GeneralSystem {
            map,
            eos: &eos,
            r: cfg.r,
            geometry: cfg.geometry,
        };
        let tr =
            integrate(&sys, start.xi, [start.w, start.j], cfg.end, &opts).map_err(numerical)?;
        let table = trajectory_table(tr.len(), tr.termination.reason(), |k| {
            Ok([
                Some(tr.x[k]),
                Some(tr.y[k][0]),
                Some(tr.y[k][1]),
                None,
                None,
            ])
        })?;
        (table, termination_report(&tr, case))
    };
    Ok(Outcome::ok(vec![
        Artifact::Table("similarity".into(), table),
        Artifact::Json("similarity_termination".into(), report),
    ]))
}

struct Check {
    name: &'static str,
    value: f64,
    threshold: f64,
    pass: bool,
}

impl Check {
    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "value": number(self.value),
            "threshold": number(self.threshold),
            "pass": self.pass,
        })
    }
}

fn convergence(errors: &[(usize, f64)]) -> CsvTable {
    let mut table = CsvTable::new(&["N", "L1_rho", "order"]);
    for rec in convergence_table(errors) {
        table.push_cells(vec![
            rec.n.to_string(),
            format_float(rec.l1_rho),
            rec.order.map(format_float).unwrap_or_default(),
        ]);
    }
    table
}

fn check_resolutions(list: &[usize], name: &str) -> Result<(), CliError> {
    if list.len() < 2 || list.iter().any(|&n| n < 4) || list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(config(format!(
            "`{name}.resolutions` needs at least two increasing values of 4 or more"
        )));
    }
    Ok(())
}

fn verify_noh(suite: &NohSuite, checks: &mut Vec<Check>) -> Result<CsvTable, CliError> {
    check_resolutions(&suite.resolutions, "noh")?;
    let eos = build_eos(suite.eos, Eos::Tait(ModifiedTait::water()))?;
    let defaults = NohRunOptions::default();
    let opts = NohRunOptions {
        domain_factor: suite.domain_factor.unwrap_or(defaults.domain_factor),
        cfl: suite.cfl.unwrap_or(defaults.cfl),
    };
    let mut all = suite.resolutions.clone();
    let speed_n = suite.speed_resolution.unwrap_or(*all.last().unwrap());
    if !all.contains(&speed_n) {
        all.push(speed_n);
    }
    let runs = all
        .par_iter()
        .map(|&n| run_noh(&eos, suite.rho0, suite.u0, n, suite.t_final, &opts).map_err(numerical))
        .collect::<Result<Vec<_>, _>>()?;

    let errors: Vec<(usize, f64)> = suite
        .resolutions
        .iter()
        .map(|n| {
            (
                *n,
                runs[all.iter().position(|m| m == n).unwrap()].report.l1_rho,
            )
        })
        .collect();
    let worst_ratio = errors
        .windows(2)
        .map(|w| w[1].1 / w[0].1)
        .fold(0.0, f64::max);
    checks.push(Check {
        name: "noh_l1_rho_decreasing_max_ratio",
        value: worst_ratio,
        threshold: 1.0,
        pass: worst_ratio < 1.0,
    });

    let finest = &runs[suite.resolutions.len() - 1];
    let cells = finest.shock_position.map_or(f64::INFINITY, |p| {
        (p - finest.exact_position).abs() / finest.grid.dr()
    });
    checks.push(Check {
        name: "noh_shock_position_cells",
        value: cells,
        threshold: suite.max_shock_cells,
        pass: cells <= suite.max_shock_cells,
    });

    let speed_run = &runs[all.iter().position(|&m| m == speed_n).unwrap()];
    let speed_error = speed_run.shock_speed.map_or(f64::INFINITY, |s| {
        (s - speed_run.shock.d0).abs() / speed_run.shock.d0
    });
    checks.push(Check {
        name: "noh_shock_speed_rel_error",
        value: speed_error,
        threshold: suite.max_speed_error,
        pass: speed_error <= suite.max_speed_error,
    });
    Ok(convergence(&errors))
}

fn verify_bubble(suite: &BubbleSuite, checks: &mut Vec<Check>) -> Result<CsvTable, CliError> {
    check_resolutions(&suite.resolutions, "bubble")?;
    let sol = bubble_solution(suite.geometry, suite.b, suite.rho_ref).map_err(config)?;
    let cfl = suite.cfl.unwrap_or(DEFAULT_CFL);
    let errors = suite
        .resolutions
        .par_iter()
        .map(|&n| {
            run_bubble(&sol, n, suite.t0, suite.t_final, cfl)
                .map(|run| (n, run.report.l1_rho))
                .map_err(numerical)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let table = convergence(&errors);
    let order = convergence_table(&errors)
        .last()
        .and_then(|r| r.order)
        .unwrap_or(f64::NAN);
    checks.push(Check {
        name: "bubble_l1_rho_order",
        value: order,
        threshold: suite.min_order,
        pass: order >= suite.min_order,
    });
    Ok(table)
}

pub fn verify(cfg: &VerifyConfig) -> Result<Outcome, CliError> {
    if cfg.noh.is_none() && cfg.bubble.is_none() {
        return Err(config("`verify` needs a `noh` or `bubble` suite"));
    }
    let mut checks = Vec::new();
    let mut artifacts = Vec::new();
    if let Some(suite) = &cfg.noh {
        artifacts.push(Artifact::Table(
            "noh_convergence".into(),
            verify_noh(suite, &mut checks)?,
        ));
    }
    if let Some(suite) = &cfg.bubble {
        artifacts.push(Artifact::Table(
            "bubble_convergence".into(),
            verify_bubble(suite, &mut checks)?,
        ));
    }
    let pass = checks.iter().all(|c| c.pass);
    artifacts.push(Artifact::Json(
        "verify_report".into(),
        json!({
            "pass": pass,
            "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        }),
    ));
    let failure = (!pass).then(|| {
        let missed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        format!("thresholds missed: {}", missed.join(", "))
    });
    Ok(Outcome { artifacts, failure })
}
