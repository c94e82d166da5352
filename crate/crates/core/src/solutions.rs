//! Closed-form flow fields: the shock-free homologous Tait bubble and the
//! planar Noh stagnation shock.

use serde::Serialize;
use thiserror::Error;

use crate::eos::{EosError, IsentropicEos, ModifiedTait, ModifiedTaitParams};
use crate::geometry::Geometry;
use crate::rh::{solve_noh_shock, NohShock, RhError};
use crate::scaling::{PowerLawExponents, ScalingExponents, SymmetryCase};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolutionError {
    #[error("bubble solution needs B < 0, got B={0}")]
    NonNegativeB(f64),
    #[error("reference density must be positive, got {0}")]
    InvalidReferenceDensity(f64),
    #[error("r/t = {xi} lies outside the bubble (0, {xi0}]")]
    OutsideBubble { xi: f64, xi0: f64 },
    #[error("fields are unbounded at t = 0")]
    UnboundedField,
    #[error("time must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),
    #[error("Noh solution is restricted to planar geometry, got n={0}")]
    CurvilinearNoh(Geometry),
    #[error("inputs must be positive: {0}")]
    NonPositiveInput(&'static str),
    #[error(transparent)]
    Rh(#[from] RhError),
    #[error(transparent)]
    Eos(#[from] EosError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Unshocked,
    Shocked,
    Bubble,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Unshocked => "unshocked",
            Region::Shocked => "shocked",
            Region::Bubble => "bubble",
        }
    }
}

/// One sample of `(u, rho, P, I)` at `(r, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FlowSample {
    pub r: f64,
    pub t: f64,
    pub u: f64,
    pub rho: f64,
    pub p: f64,
    pub sie: f64,
    pub region: Region,
}

/// Shock-free homologous flow `u = -r/t` of a modified Tait fluid.
///
/// The density `rho = w0 (r/t)^(2/(gamma-1))` solves both the mass and
/// momentum equations only when `gamma = (n-3)/(n+1)` and
/// `w0 = ((1-gamma)/omega)^(1/(gamma-1))`, `omega = B gamma / rho_ref^gamma`.
/// Since `gamma < 0` for every geometry, `B < 0`.
///
/// Pressure is positive for `r/t < xi0` and vanishes at
/// `xi0 = (rho_ref / w0)^((gamma-1)/2)`, the edge of the bubble.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BubbleSolution {
    pub geometry: Geometry,
    pub b: f64,
    pub gamma: f64,
    pub rho_ref: f64,
    pub omega: f64,
    pub w0: f64,
    pub xi0: f64,
    pub sie_offset: f64,
}

/// `gamma = (n-3)/(n+1)`.
pub fn bubble_gamma(geometry: Geometry) -> f64 {
    let n = geometry.n();
    (n - 3.0) / (n + 1.0)
}

pub fn bubble_solution(
    geometry: Geometry,
    b: f64,
    rho_ref: f64,
) -> Result<BubbleSolution, SolutionError> {
    if !(b < 0.0 && b.is_finite()) {
        return Err(SolutionError::NonNegativeB(b));
    }
    if !(rho_ref > 0.0 && rho_ref.is_finite()) {
        return Err(SolutionError::InvalidReferenceDensity(rho_ref));
    }
    let gamma = bubble_gamma(geometry);
    let omega = b * gamma / rho_ref.powf(gamma);
    let w0 = ((1.0 - gamma) / omega).powf(1.0 / (gamma - 1.0));
    let xi0 = (rho_ref / w0).powf(0.5 * (gamma - 1.0));
    Ok(BubbleSolution {
        geometry,
        b,
        gamma,
        rho_ref,
        omega,
        w0,
        xi0,
        sie_offset: 0.0,
    })
}

impl BubbleSolution {
    pub fn with_sie_offset(mut self, sie_offset: f64) -> Self {
        self.sie_offset = sie_offset;
        self
    }

    pub fn eos(&self) -> ModifiedTait {
        ModifiedTait::new(ModifiedTaitParams {
            b: self.b,
            gamma: self.gamma,
            rho_ref: self.rho_ref,
        })
        .expect("B gamma > 0 by construction")
        .with_sie_offset(self.sie_offset)
    }

    /// `w(xi) = w0 xi^(2/(gamma-1))`, equal to the density since the
    /// kinematic group leaves density unscaled.
    pub fn density_at(&self, xi: f64) -> f64 {
        self.w0 * xi.powf(2.0 / (self.gamma - 1.0))
    }

    /// Fields as functions of `xi = r/t`, without the bubble-extent check.
    /// `r` and `t` of the sample are set to `xi` and 1.
    pub fn closed_form(&self, xi: f64) -> FlowSample {
        let eos = self.eos();
        let rho = self.density_at(xi);
        FlowSample {
            r: xi,
            t: 1.0,
            u: -xi,
            rho,
            p: eos.pressure_fn(rho),
            sie: eos.sie_fn(rho) + self.sie_offset,
            region: Region::Bubble,
        }
    }

    /// Fields at `(r, t)` for `t > 0` and `0 < r/t <= xi0`.
    pub fn fields(&self, r: f64, t: f64) -> Result<FlowSample, SolutionError> {
        if t == 0.0 {
            return Err(SolutionError::UnboundedField);
        }
        if !(t > 0.0) {
            return Err(SolutionError::NonPositiveTime(t));
        }
        let xi = r / t;
        if !(xi > 0.0 && xi <= self.xi0) {
            return Err(SolutionError::OutsideBubble { xi, xi0: self.xi0 });
        }
        Ok(FlowSample {
            r,
            t,
            ..self.closed_form(xi)
        })
    }
}

/// [`BubbleSolution::fields`] as a free function.
pub fn bubble_fields(sol: &BubbleSolution, r: f64, t: f64) -> Result<FlowSample, SolutionError> {
    sol.fields(r, t)
}

/// Planar Noh flow: uniform inflow `-u0` of density `rho0` stagnating
/// against a wall at `r = 0`, with a shock at `r = D0 t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NohSolution<E> {
    pub eos: E,
    pub shock: NohShock,
}

impl<E: IsentropicEos> NohSolution<E> {
    pub fn new(eos: E, rho0: f64, u0: f64, geometry: Geometry) -> Result<Self, SolutionError> {
        if geometry != Geometry::Planar {
            return Err(SolutionError::CurvilinearNoh(geometry));
        }
        let shock = solve_noh_shock(&eos, rho0, u0)?;
        Ok(Self { eos, shock })
    }

    pub fn shock_position(&self, t: f64) -> f64 {
        self.shock.d0 * t
    }

    /// Piecewise-constant fields. The shock line itself returns the shocked state.
    pub fn fields(&self, r: f64, t: f64) -> Result<FlowSample, SolutionError> {
        if !(t > 0.0) {
            return Err(SolutionError::NonPositiveTime(t));
        }
        if !(r >= 0.0) {
            return Err(SolutionError::NegativeRadius(r));
        }
        let s = &self.shock;
        Ok(if r > s.d0 * t {
            FlowSample {
                r,
                t,
                u: -s.u0,
                rho: s.rho0,
                p: s.p0,
                sie: s.i0,
                region: Region::Unshocked,
            }
        } else {
            FlowSample {
                r,
                t,
                u: 0.0,
                rho: s.rho2,
                p: s.p2,
                sie: s.i2,
                region: Region::Shocked,
            }
        })
    }
}

impl NohSolution<ModifiedTait> {
    /// Tait fluid with `I0` chosen so that `I(rho0) = 0`.
    pub fn tait(params: ModifiedTaitParams, rho0: f64, u0: f64) -> Result<Self, SolutionError> {
        if !(rho0 > 0.0) {
            return Err(SolutionError::NonPositiveInput("rho0"));
        }
        let eos = ModifiedTait::new(params)?.normalized_at(rho0)?;
        Self::new(eos, rho0, u0, Geometry::Planar)
    }
}

/// [`NohSolution::fields`] as a free function.
pub fn noh_fields<E: IsentropicEos>(
    sol: &NohSolution<E>,
    r: f64,
    t: f64,
) -> Result<FlowSample, SolutionError> {
    sol.fields(r, t)
}

/// Scaling group left invariant by the Noh problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NohSymmetry {
    pub exponents: ScalingExponents,
    pub case: SymmetryCase,
    pub power_laws: PowerLawExponents,
}

/// The uniform inflow is invariant only when `a1 = a2` (constant velocity)
/// and `a3 = 0` (constant density): the kinematic group, which admits any EOS.
pub fn noh_symmetry_constraints(u0: f64, rho0: f64) -> Result<NohSymmetry, SolutionError> {
    if !(u0 > 0.0) {
        return Err(SolutionError::NonPositiveInput("u0"));
    }
    if !(rho0 > 0.0) {
        return Err(SolutionError::NonPositiveInput("rho0"));
    }
    let exponents = ScalingExponents::kinematic();
    Ok(NohSymmetry {
        exponents,
        case: exponents.case(),
        power_laws: exponents.power_laws(),
    })
}
