//! First-order finite-volume solver for the isentropic Euler system, used to
//! cross-check the closed-form solutions by grid convergence.
//!
//! The unknowns are cell averages of `rho` and `rho u`; pressure is always
//! `f(rho)` and never evolved. In geometry `n` the update is written for
//! volume-weighted averages,
//!
//! ```text
//! V_i d(rho)_i/dt    = -(A+ F+ - A- F-)
//! V_i d(rho u)_i/dt  = -(A+ G+ - A- G-) + P_i (A+ - A-)
//! ```
//!
//! with face areas `A = r^n`, HLL fluxes `F`, `G`, and wave speeds `u ± c`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::eos::{EosError, IsentropicEos};
use crate::geometry::Geometry;
use crate::rh::{NohShock, RhError};
use crate::solutions::{BubbleSolution, NohSolution, SolutionError};

/// Largest accepted Courant number.
pub const MAX_CFL: f64 = 0.9;
/// Default Courant number.
pub const DEFAULT_CFL: f64 = 0.8;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, used for cell averages.
const GL_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683,
    0.0,
    0.538_469_310_105_683,
    0.906_179_845_938_664,
];
const GL_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189,
    0.478_628_670_499_366,
    0.568_888_888_888_889,
    0.478_628_670_499_366,
    0.236_926_885_056_189,
];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FvError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("Courant number {cfl} exceeds {MAX_CFL}")]
    CflViolation { cfl: f64 },
    #[error("density lost positivity in cell {cell} (r={r}): rho={rho}")]
    Positivity { cell: usize, r: f64, rho: f64 },
    #[error(transparent)]
    Eos(#[from] EosError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    Rh(#[from] RhError),
}

/// Exact `(rho, u)` as a function of `(r, t)`.
pub type FieldFn = Arc<dyn Fn(f64, f64) -> (f64, f64) + Send + Sync>;

/// Ghost-cell rule at one end of the grid.
#[derive(Clone)]
pub enum Boundary {
    /// Mirror with negated velocity.
    Wall,
    /// Fixed ghost state.
    Inflow { rho: f64, u: f64 },
    /// Wrap around; must be set at both ends.
    Periodic,
    /// Copy of the adjacent cell.
    Transmissive,
    /// Exact solution evaluated at the ghost-cell center.
    Exact(FieldFn),
}

impl fmt::Debug for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary::Wall => f.write_str("Wall"),
            Boundary::Inflow { rho, u } => write!(f, "Inflow {{ rho: {rho}, u: {u} }}"),
            Boundary::Periodic => f.write_str("Periodic"),
            Boundary::Transmissive => f.write_str("Transmissive"),
            Boundary::Exact(_) => f.write_str("Exact(..)"),
        }
    }
}

/// Uniform grid of cell averages on `[r_lo, r_hi]`.
#[derive(Debug, Clone)]
pub struct Grid1D {
    geometry: Geometry,
    r_lo: f64,
    r_hi: f64,
    n_cells: usize,
    dr: f64,
    t: f64,
    cfl: f64,
    rho: Vec<f64>,
    mom: Vec<f64>,
    lower: Boundary,
    upper: Boundary,
}

/// Per-variable L1 norms against the cell projection of an exact solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorReport {
    pub n_cells: usize,
    pub t: f64,
    pub l1_rho: f64,
    pub l1_u: f64,
    pub l1_p: f64,
}

impl Grid1D {
    /// Uniform state `(rho, u)` at `t = 0`.
    #[allow(clippy::too_many_arguments)]
    pub fn uniform(
        geometry: Geometry,
        r_lo: f64,
        r_hi: f64,
        n_cells: usize,
        rho: f64,
        u: f64,
        lower: Boundary,
        upper: Boundary,
        cfl: f64,
    ) -> Result<Self, FvError> {
        let mut grid = Self::empty(geometry, r_lo, r_hi, n_cells, lower, upper, cfl)?;
        grid.set_state(vec![rho; n_cells], vec![rho * u; n_cells])?;
        Ok(grid)
    }

    /// Cell averages of an exact solution at time `t`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_exact<F: Fn(f64, f64) -> (f64, f64)>(
        geometry: Geometry,
        r_lo: f64,
        r_hi: f64,
        n_cells: usize,
        t: f64,
        exact: F,
        lower: Boundary,
        upper: Boundary,
        cfl: f64,
    ) -> Result<Self, FvError> {
        let mut grid = Self::empty(geometry, r_lo, r_hi, n_cells, lower, upper, cfl)?;
        grid.t = t;
        let (rho, mom) = grid.project(t, &exact);
        grid.set_state(rho, mom)?;
        Ok(grid)
    }

    fn empty(
        geometry: Geometry,
        r_lo: f64,
        r_hi: f64,
        n_cells: usize,
        lower: Boundary,
        upper: Boundary,
        cfl: f64,
    ) -> Result<Self, FvError> {
        if n_cells == 0 {
            return Err(FvError::InvalidGrid("need at least one cell".into()));
        }
        if !(r_hi > r_lo && r_lo.is_finite() && r_hi.is_finite()) {
            return Err(FvError::InvalidGrid(format!(
                "domain [{r_lo}, {r_hi}] is empty"
            )));
        }
        if geometry != Geometry::Planar && r_lo < 0.0 {
            return Err(FvError::InvalidGrid(format!(
                "curvilinear grid must have r_lo >= 0, got {r_lo}"
            )));
        }
        let periodic = (
            matches!(lower, Boundary::Periodic),
            matches!(upper, Boundary::Periodic),
        );
        if periodic.0 != periodic.1 {
            return Err(FvError::InvalidGrid(
                "periodic boundary must be set at both ends".into(),
            ));
        }
        if periodic.0 && geometry != Geometry::Planar {
            return Err(FvError::InvalidGrid(
                "periodic boundaries need planar geometry".into(),
            ));
        }
        if !(cfl > 0.0) {
            return Err(FvError::InvalidGrid(format!(
                "Courant number must be positive, got {cfl}"
            )));
        }
        if cfl > MAX_CFL {
            return Err(FvError::CflViolation { cfl });
        }
        Ok(Self {
            geometry,
            r_lo,
            r_hi,
            n_cells,
            dr: (r_hi - r_lo) / n_cells as f64,
            t: 0.0,
            cfl,
            rho: Vec::new(),
            mom: Vec::new(),
            lower,
            upper,
        })
    }

    /// Replaces the cell averages of `rho` and `rho u`.
    pub fn set_state(&mut self, rho: Vec<f64>, mom: Vec<f64>) -> Result<(), FvError> {
        let n = self.n_cells;
        if rho.len() != n || mom.len() != n {
            return Err(FvError::InvalidGrid(format!(
                "expected {n} cells, got {} densities and {} momenta",
                rho.len(),
                mom.len()
            )));
        }
        self.rho = rho;
        self.mom = mom;
        self.check_positive()
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn dr(&self) -> f64 {
        self.dr
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn cfl(&self) -> f64 {
        self.cfl
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.r_lo, self.r_hi)
    }

    pub fn rho(&self) -> &[f64] {
        &self.rho
    }

    pub fn momentum(&self) -> &[f64] {
        &self.mom
    }

    pub fn face(&self, i: usize) -> f64 {
        self.r_lo + i as f64 * self.dr
    }

    pub fn center(&self, i: usize) -> f64 {
        self.r_lo + (i as f64 + 0.5) * self.dr
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.n_cells()).map(|i| self.center(i)).collect()
    }

    pub fn volume(&self, i: usize) -> f64 {
        self.geometry.volume(self.face(i + 1)) - self.geometry.volume(self.face(i))
    }

    pub fn velocity(&self, i: usize) -> f64 {
        self.mom[i] / self.rho[i]
    }

    /// `sum rho_i V_i`.
    pub fn total_mass(&self) -> f64 {
        (0..self.n_cells())
            .map(|i| self.rho[i] * self.volume(i))
            .sum()
    }

    /// Rows of `(r_center, rho, u, P)`.
    pub fn snapshot<E: IsentropicEos + ?Sized>(&self, eos: &E) -> Vec<[f64; 4]> {
        (0..self.n_cells())
            .map(|i| {
                [
                    self.center(i),
                    self.rho[i],
                    self.velocity(i),
                    eos.pressure_fn(self.rho[i]),
                ]
            })
            .collect()
    }

    fn check_positive(&self) -> Result<(), FvError> {
        for (i, &rho) in self.rho.iter().enumerate() {
            if !(rho > 0.0 && rho.is_finite() && self.mom[i].is_finite()) {
                return Err(FvError::Positivity {
                    cell: i,
                    r: self.center(i),
                    rho,
                });
            }
        }
        Ok(())
    }

    /// Volume-weighted averages of `rho` and `rho u` over each cell.
    fn project<F: Fn(f64, f64) -> (f64, f64)>(&self, t: f64, exact: &F) -> (Vec<f64>, Vec<f64>) {
        (0..self.n_cells())
            .map(|i| {
                let (a, b) = (self.face(i), self.face(i + 1));
                let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
                let (mut m, mut p) = (0.0, 0.0);
                for (x, w) in GL_NODES.iter().zip(GL_WEIGHTS) {
                    let r = mid + half * x;
                    let weight = w * half * self.geometry.area(r);
                    let (rho, u) = exact(r, t);
                    m += weight * rho;
                    p += weight * rho * u;
                }
                let v = self.volume(i);
                (m / v, p / v)
            })
            .unzip()
    }

    fn max_wave_speed<E: IsentropicEos + ?Sized>(&self, eos: &E) -> f64 {
        self.rho
            .iter()
            .zip(&self.mom)
            .map(|(&rho, &mom)| (mom / rho).abs() + sound(eos, rho))
            .fold(0.0, f64::max)
    }

    /// Largest step allowed by the grid's Courant number.
    pub fn stable_dt<E: IsentropicEos + ?Sized>(&self, eos: &E) -> f64 {
        self.cfl * self.dr / self.max_wave_speed(eos)
    }

    /// Advances by `cfl` times the stable step.
    pub fn step<E: IsentropicEos + ?Sized>(&mut self, eos: &E) -> Result<f64, FvError> {
        let dt = self.stable_dt(eos);
        self.step_dt(eos, dt)?;
        Ok(dt)
    }

    fn ghost(&self, side: Side) -> (f64, f64) {
        let last = self.n_cells() - 1;
        let (boundary, inner, ghost_r) = match side {
            Side::Lower => (&self.lower, 0, self.r_lo - 0.5 * self.dr),
            Side::Upper => (&self.upper, last, self.r_hi + 0.5 * self.dr),
        };
        match boundary {
            Boundary::Wall => (self.rho[inner], -self.mom[inner]),
            Boundary::Inflow { rho, u } => (*rho, rho * u),
            Boundary::Periodic => {
                let other = if inner == 0 { last } else { 0 };
                (self.rho[other], self.mom[other])
            }
            Boundary::Transmissive => (self.rho[inner], self.mom[inner]),
            Boundary::Exact(f) => {
                let (rho, u) = f(ghost_r, self.t);
                (rho, rho * u)
            }
        }
    }

    /// One explicit update of length `dt`. Rejects steps whose Courant
    /// number exceeds [`MAX_CFL`].
    pub fn step_dt<E: IsentropicEos + ?Sized>(&mut self, eos: &E, dt: f64) -> Result<(), FvError> {
        let cfl = dt * self.max_wave_speed(eos) / self.dr;
        if !(dt > 0.0) || cfl > MAX_CFL * (1.0 + 1e-12) {
            return Err(FvError::CflViolation { cfl });
        }
        let n = self.n_cells();
        let lower = self.ghost(Side::Lower);
        let upper = self.ghost(Side::Upper);
        let state = |k: usize| -> (f64, f64) {
            match k {
                0 => lower,
                k if k == n + 1 => upper,
                k => (self.rho[k - 1], self.mom[k - 1]),
            }
        };
        // face k sits between extended cells k and k+1, i.e. at self.face(k)
        let fluxes: Vec<(f64, f64)> = (0..=n).map(|k| hll(eos, state(k), state(k + 1))).collect();

        let mut rho = self.rho.clone();
        let mut mom = self.mom.clone();
        for i in 0..n {
            let (a_lo, a_hi) = (
                self.geometry.area(self.face(i)),
                self.geometry.area(self.face(i + 1)),
            );
            let v = self.volume(i);
            let (fl, fh) = (fluxes[i], fluxes[i + 1]);
            let source = eos.pressure_fn(self.rho[i]) * (a_hi - a_lo);
            rho[i] -= dt / v * (a_hi * fh.0 - a_lo * fl.0);
            mom[i] -= dt / v * (a_hi * fh.1 - a_lo * fl.1 - source);
        }
        let previous = (
            std::mem::replace(&mut self.rho, rho),
            std::mem::replace(&mut self.mom, mom),
        );
        if let Err(e) = self.check_positive() {
            self.rho = previous.0;
            self.mom = previous.1;
            return Err(e);
        }
        self.t += dt;
        Ok(())
    }

    /// Steps until `t_final`, shortening the last step to land on it.
    /// `observe` is called after every step.
    pub fn advance_to<E: IsentropicEos + ?Sized, O: FnMut(&Grid1D)>(
        &mut self,
        eos: &E,
        t_final: f64,
        mut observe: O,
    ) -> Result<usize, FvError> {
        let mut steps = 0;
        while self.t < t_final {
            let dt = self.stable_dt(eos).min(t_final - self.t);
            self.step_dt(eos, dt)?;
            if t_final - self.t <= 1e-14 * t_final.abs() {
                self.t = t_final;
            }
            steps += 1;
            observe(self);
        }
        Ok(steps)
    }

    /// Density midpoint crossing between `rho_in` (inner) and `rho_out`,
    /// searched from the upper end inwards.
    pub fn front_position(&self, rho_in: f64, rho_out: f64) -> Option<f64> {
        let mid = 0.5 * (rho_in + rho_out);
        let side = |rho: f64| (rho - mid) * (rho_in - rho_out) >= 0.0;
        (0..self.n_cells() - 1).rev().find_map(|i| {
            if side(self.rho[i]) && !side(self.rho[i + 1]) {
                let (a, b) = (self.rho[i], self.rho[i + 1]);
                let frac = (a - mid) / (a - b);
                Some(self.center(i) + frac * self.dr)
            } else {
                None
            }
        })
    }
}

#[derive(Clone, Copy)]
enum Side {
    Lower,
    Upper,
}

fn sound<E: IsentropicEos + ?Sized>(eos: &E, rho: f64) -> f64 {
    (eos.bulk_modulus_fn(rho).max(0.0) / rho).sqrt()
}

/// HLL flux of `(rho u, rho u² + P)` between conserved states.
fn hll<E: IsentropicEos + ?Sized>(eos: &E, left: (f64, f64), right: (f64, f64)) -> (f64, f64) {
    let (rl, ml) = left;
    let (rr, mr) = right;
    let (ul, ur) = (ml / rl, mr / rr);
    let (cl, cr) = (sound(eos, rl), sound(eos, rr));
    let fl = (ml, ml * ul + eos.pressure_fn(rl));
    let fr = (mr, mr * ur + eos.pressure_fn(rr));
    let sl = (ul - cl).min(ur - cr);
    let sr = (ul + cl).max(ur + cr);
    if sl >= 0.0 {
        fl
    } else if sr <= 0.0 {
        fr
    } else {
        let inv = 1.0 / (sr - sl);
        (
            (sr * fl.0 - sl * fr.0 + sl * sr * (rr - rl)) * inv,
            (sr * fl.1 - sl * fr.1 + sl * sr * (mr - ml)) * inv,
        )
    }
}

/// L1 norms of `rho`, `u` and `P` against the cell projection of `exact`.
///
/// The reference `u` and `P` are derived from the projected `rho` and
/// `rho u` the same way the solver derives them, so a grid filled with the
/// projection has zero error.
pub fn l1_error<E: IsentropicEos + ?Sized, F: Fn(f64, f64) -> (f64, f64)>(
    grid: &Grid1D,
    eos: &E,
    exact: F,
) -> ErrorReport {
    let (rho_ex, mom_ex) = grid.project(grid.t, &exact);
    let mut report = ErrorReport {
        n_cells: grid.n_cells(),
        t: grid.t,
        l1_rho: 0.0,
        l1_u: 0.0,
        l1_p: 0.0,
    };
    for i in 0..grid.n_cells() {
        let v = grid.volume(i);
        let (rho, rho_e) = (grid.rho[i], rho_ex[i]);
        report.l1_rho += v * (rho - rho_e).abs();
        report.l1_u += v * (grid.mom[i] / rho - mom_ex[i] / rho_e).abs();
        report.l1_p += v * (eos.pressure_fn(rho) - eos.pressure_fn(rho_e)).abs();
    }
    report
}

/// Outcome of a finite-volume Noh run.
#[derive(Debug, Clone)]
pub struct NohRun {
    pub grid: Grid1D,
    pub report: ErrorReport,
    pub shock: NohShock,
    /// Density-midpoint position at `t_final`.
    pub shock_position: Option<f64>,
    /// `D0 t_final`.
    pub exact_position: f64,
    /// Least-squares slope of the tracked position over the second half of the run.
    pub shock_speed: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NohRunOptions {
    /// Domain is `[0, domain_factor * D0 * t_final]`.
    pub domain_factor: f64,
    pub cfl: f64,
}

impl Default for NohRunOptions {
    fn default() -> Self {
        Self {
            domain_factor: 2.0,
            cfl: DEFAULT_CFL,
        }
    }
}

/// Planar Noh problem: wall at `r = 0`, inflow `(rho0, -u0)` at the outer edge.
pub fn run_noh<E: IsentropicEos + Copy>(
    eos: &E,
    rho0: f64,
    u0: f64,
    n_cells: usize,
    t_final: f64,
    opts: &NohRunOptions,
) -> Result<NohRun, FvError> {
    let sol = NohSolution::new(*eos, rho0, u0, Geometry::Planar)?;
    let shock = sol.shock;
    let r_hi = opts.domain_factor * shock.d0 * t_final;
    let mut grid = Grid1D::uniform(
        Geometry::Planar,
        0.0,
        r_hi,
        n_cells,
        rho0,
        -u0,
        Boundary::Wall,
        Boundary::Inflow { rho: rho0, u: -u0 },
        opts.cfl,
    )?;
    let mut track = Vec::new();
    grid.advance_to(eos, t_final, |g| {
        if g.t() >= 0.5 * t_final {
            if let Some(x) = g.front_position(shock.rho2, shock.rho0) {
                track.push((g.t(), x));
            }
        }
    })?;
    let report = l1_error(&grid, eos, |r, t| {
        let s = sol.fields(r, t).expect("t > 0 and r >= 0");
        (s.rho, s.u)
    });
    Ok(NohRun {
        shock_position: grid.front_position(shock.rho2, shock.rho0),
        exact_position: shock.d0 * t_final,
        shock_speed: fit_slope(&track),
        grid,
        report,
        shock,
    })
}

fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone)]
pub struct BubbleRun {
    pub grid: Grid1D,
    pub report: ErrorReport,
}

/// Bubble on `[0.25, 0.75] * xi0 * t0`, started from exact cell averages at
/// `t0` with exact ghost states at both ends.
pub fn run_bubble(
    sol: &BubbleSolution,
    n_cells: usize,
    t0: f64,
    t_final: f64,
    cfl: f64,
) -> Result<BubbleRun, FvError> {
    if !(t0 > 0.0 && t_final >= t0) {
        return Err(FvError::InvalidGrid(format!(
            "need 0 < t0 <= t_final, got t0={t0}, t_final={t_final}"
        )));
    }
    let eos = sol.eos();
    let exact = {
        let sol = *sol;
        move |r: f64, t: f64| {
            let s = sol.closed_form(r / t);
            (s.rho, s.u)
        }
    };
    let ghost: FieldFn = Arc::new(exact);
    let (r_lo, r_hi) = (0.25 * sol.xi0 * t0, 0.75 * sol.xi0 * t0);
    let mut grid = Grid1D::from_exact(
        sol.geometry,
        r_lo,
        r_hi,
        n_cells,
        t0,
        exact,
        Boundary::Exact(ghost.clone()),
        Boundary::Exact(ghost),
        cfl,
    )?;
    grid.advance_to(&eos, t_final, |_| {})?;
    let report = l1_error(&grid, &eos, exact);
    Ok(BubbleRun { grid, report })
}

/// One row of a convergence table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRecord {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "L1_rho")]
    pub l1_rho: f64,
    /// `log(e_prev / e) / log(N / N_prev)`; absent on the coarsest grid.
    pub order: Option<f64>,
}

/// Observed orders between successive `(N, error)` pairs.
pub fn convergence_table(errors: &[(usize, f64)]) -> Vec<ConvergenceRecord> {
    errors
        .iter()
        .enumerate()
        .map(|(k, &(n, e))| ConvergenceRecord {
            n,
            l1_rho: e,
            order: (k > 0).then(|| {
                let (n_prev, e_prev) = errors[k - 1];
                (e_prev / e).ln() / (n as f64 / n_prev as f64).ln()
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::{ModifiedTait, ModifiedTaitParams};

    #[test]
    fn uniform_state_is_steady_with_periodic_ends() {
        let eos = ModifiedTait::water();
        let mut g = Grid1D::uniform(
            Geometry::Planar,
            0.0,
            1.0,
            50,
            1.2,
            0.0,
            Boundary::Periodic,
            Boundary::Periodic,
            0.8,
        )
        .unwrap();
        for _ in 0..20 {
            g.step(&eos).unwrap();
        }
        for i in 0..50 {
            assert!((g.rho()[i] - 1.2).abs() < 1e-14);
            assert!(g.momentum()[i].abs() < 1e-14);
        }
    }

    #[test]
    fn cfl_limits() {
        let eos = ModifiedTait::water();
        let bad = Grid1D::uniform(
            Geometry::Planar,
            0.0,
            1.0,
            10,
            1.0,
            0.0,
            Boundary::Wall,
            Boundary::Wall,
            0.95,
        );
        assert!(matches!(bad, Err(FvError::CflViolation { .. })));
        let mut g = Grid1D::uniform(
            Geometry::Planar,
            0.0,
            1.0,
            10,
            1.0,
            0.0,
            Boundary::Wall,
            Boundary::Wall,
            0.5,
        )
        .unwrap();
        let dt = g.stable_dt(&eos);
        assert!(matches!(
            g.step_dt(&eos, 2.0 * dt),
            Err(FvError::CflViolation { .. })
        ));
        assert!(g.step_dt(&eos, dt).is_ok());
    }

    #[test]
    fn rejects_bad_grids() {
        let w = || Boundary::Wall;
        assert!(Grid1D::uniform(Geometry::Planar, 1.0, 0.0, 10, 1.0, 0.0, w(), w(), 0.5).is_err());
        assert!(Grid1D::uniform(Geometry::Planar, 0.0, 1.0, 0, 1.0, 0.0, w(), w(), 0.5).is_err());
        assert!(Grid1D::uniform(Geometry::Planar, 0.0, 1.0, 10, -1.0, 0.0, w(), w(), 0.5).is_err());
        assert!(Grid1D::uniform(
            Geometry::Planar,
            0.0,
            1.0,
            10,
            1.0,
            0.0,
            Boundary::Periodic,
            w(),
            0.5
        )
        .is_err());
        assert!(
            Grid1D::uniform(Geometry::Spherical, -1.0, 1.0, 10, 1.0, 0.0, w(), w(), 0.5).is_err()
        );
    }

    #[test]
    fn closed_spherical_box_conserves_mass() {
        let eos = ModifiedTait::water();
        let mut g = Grid1D::from_exact(
            Geometry::Spherical,
            0.0,
            1.0,
            64,
            0.0,
            |r, _| (1.0 + 0.1 * (3.0 * r).sin(), 0.05 * r * (1.0 - r)),
            Boundary::Wall,
            Boundary::Wall,
            0.8,
        )
        .unwrap();
        let m0 = g.total_mass();
        for _ in 0..50 {
            let before = g.total_mass();
            g.step(&eos).unwrap();
            assert!((g.total_mass() - before).abs() <= 1e-12 * before);
        }
        assert!((g.total_mass() - m0).abs() <= 1e-12 * m0);
    }

    #[test]
    fn projection_has_zero_error() {
        let eos = ModifiedTait::water();
        let exact = |r: f64, _t: f64| (1.0 + r * r, -0.3 * r);
        let g = Grid1D::from_exact(
            Geometry::Cylindrical,
            0.1,
            2.0,
            40,
            0.7,
            exact,
            Boundary::Transmissive,
            Boundary::Transmissive,
            0.5,
        )
        .unwrap();
        let e = l1_error(&g, &eos, exact);
        assert_eq!((e.l1_rho, e.l1_u, e.l1_p), (0.0, 0.0, 0.0));
    }

    #[test]
    fn hll_is_consistent() {
        let eos = ModifiedTait::water();
        let s = (1.1, 1.1 * 0.3);
        let f = hll(&eos, s, s);
        assert!((f.0 - 0.33).abs() < 1e-15);
        assert!((f.1 - (0.33 * 0.3 + eos.pressure_fn(1.1))).abs() < 1e-15);
    }

    #[test]
    fn noh_shock_lands_near_exact_position() {
        let eos = ModifiedTait::new(ModifiedTaitParams::WATER).unwrap();
        let run = run_noh(&eos, 1.0, 0.1, 200, 1.0, &NohRunOptions::default()).unwrap();
        let pos = run.shock_position.unwrap();
        assert!(
            (pos - run.exact_position).abs() < 3.0 * run.grid.dr(),
            "{pos} vs {}",
            run.exact_position
        );
    }

    #[test]
    fn convergence_orders() {
        let t = convergence_table(&[(100, 0.4), (200, 0.2), (400, 0.05)]);
        assert_eq!(t[0].order, None);
        assert!((t[1].order.unwrap() - 1.0).abs() < 1e-15);
        assert!((t[2].order.unwrap() - 2.0).abs() < 1e-15);
    }
}
