//! Similarity variables and the reduced ODE systems.
//!
//! Under a scaling group with exponents `(alpha, zeta, beta, lambda, tau)`
//! the flow is written as
//!
//! ```text
//! xi = r / t^alpha,  rho = r^zeta w(xi),  u = r^beta j(xi),
//! P = r^lambda m(xi),  I = r^tau h(xi)
//! ```
//!
//! and the two flow equations collapse to a pair of ODEs in `w(xi)` and
//! `j(xi)`. Both equations contain both derivatives, so the right-hand side
//! is obtained by solving a 2x2 linear system. Its determinant vanishes on
//! the sonic locus `(alpha xi^(1/alpha) - j)² = r^(-zeta-2beta) K_S / w`.

mod integrate;
mod systems;

pub use integrate::{integrate, IntegratorOptions, OdeSystem, Termination, Trajectory};
pub use systems::{
    case1_delta_rhs, case2_closed_form, delta_terms, general_rhs, CaseIParams,
    CaseITransformedState, DeltaRhs, DeltaSystem, DeltaTerms, GeneralSystem,
    HomologousDensitySystem, ZeroPressureSystem,
};

use thiserror::Error;

use crate::eos::EosError;
use crate::scaling::{PowerLawExponents, ScalingError, ScalingExponents, SymmetryCase};

/// Smallest `|xi|` accepted by the reduced systems.
pub const MIN_XI: f64 = 1e-300;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimilarityError {
    #[error("r and t must be positive, got r={r}, t={t}")]
    NonPositiveCoordinates { r: f64, t: f64 },
    #[error("similarity variable xi={xi} must be positive and at least {MIN_XI}")]
    InvalidXi { xi: f64 },
    #[error("singular denominator xi (alpha xi^(1/alpha) - j) = 0 at xi={xi}")]
    SingularDenominator { xi: f64 },
    #[error("sonic point: reduced system is singular at xi={xi}")]
    SonicPoint { xi: f64 },
    #[error("critical point of the autonomous system: Delta_2 = 0 at J={j}, W={w}")]
    CriticalPoint { j: f64, w: f64 },
    #[error("exponent {0} is undefined for this scaling group (zero denominator)")]
    UndefinedExponent(&'static str),
    #[error("scaling group is case {found}, expected case {expected}")]
    WrongCase {
        expected: SymmetryCase,
        found: SymmetryCase,
    },
    #[error("non-finite state {0}")]
    NonFinite(String),
    #[error(transparent)]
    Eos(#[from] EosError),
    #[error(transparent)]
    Scaling(#[from] ScalingError),
}

/// A point in similarity coordinates. `m` and `h` are present when pressure
/// and SIE were supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityState {
    pub xi: f64,
    pub w: f64,
    pub j: f64,
    pub m: Option<f64>,
    pub h: Option<f64>,
}

impl SimilarityState {
    pub fn new(xi: f64, w: f64, j: f64) -> Self {
        Self {
            xi,
            w,
            j,
            m: None,
            h: None,
        }
    }
}

/// A physical field sample reconstructed from similarity coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalPoint {
    pub r: f64,
    pub t: f64,
    pub rho: f64,
    pub u: f64,
    pub pressure: Option<f64>,
    pub sie: Option<f64>,
}

/// Spatial and temporal derivatives of `rho` and `u` in terms of the
/// similarity derivatives `w'` and `j'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDerivatives {
    pub drho_dt: f64,
    pub drho_dr: f64,
    pub du_dt: f64,
    pub du_dr: f64,
}

/// Change of variables between `(r, t, rho, u, P, I)` and `(xi, w, j, m, h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityMap {
    pub alpha: f64,
    pub zeta: f64,
    pub beta: f64,
    pub lambda: f64,
    pub tau: f64,
}

impl SimilarityMap {
    pub fn new(p: &PowerLawExponents) -> Result<Self, SimilarityError> {
        Ok(Self {
            alpha: p.alpha,
            zeta: p.zeta.ok_or(SimilarityError::UndefinedExponent("zeta"))?,
            beta: p.beta.ok_or(SimilarityError::UndefinedExponent("beta"))?,
            lambda: p
                .lambda
                .ok_or(SimilarityError::UndefinedExponent("lambda"))?,
            tau: p.tau.ok_or(SimilarityError::UndefinedExponent("tau"))?,
        })
    }

    pub fn from_scaling(exps: &ScalingExponents) -> Result<Self, SimilarityError> {
        Self::new(&exps.power_laws())
    }

    /// `alpha = 1`, all field exponents zero: fields equal their similarity forms.
    pub fn kinematic() -> Self {
        Self {
            alpha: 1.0,
            zeta: 0.0,
            beta: 0.0,
            lambda: 0.0,
            tau: 0.0,
        }
    }

    fn check(r: f64, t: f64) -> Result<(), SimilarityError> {
        if r > 0.0 && t > 0.0 && r.is_finite() && t.is_finite() {
            Ok(())
        } else {
            Err(SimilarityError::NonPositiveCoordinates { r, t })
        }
    }

    pub fn xi(&self, r: f64, t: f64) -> Result<f64, SimilarityError> {
        Self::check(r, t)?;
        Ok(r / t.powf(self.alpha))
    }

    /// Time at which the point `r` lies on the level set `xi`.
    pub fn time_at(&self, xi: f64, r: f64) -> Result<f64, SimilarityError> {
        if !(xi > 0.0) {
            return Err(SimilarityError::InvalidXi { xi });
        }
        Self::check(r, 1.0)?;
        Ok((r / xi).powf(1.0 / self.alpha))
    }

    pub fn to_similarity(
        &self,
        r: f64,
        t: f64,
        rho: f64,
        u: f64,
    ) -> Result<SimilarityState, SimilarityError> {
        let xi = self.xi(r, t)?;
        Ok(SimilarityState::new(
            xi,
            rho * r.powf(-self.zeta),
            u * r.powf(-self.beta),
        ))
    }

    pub fn to_similarity_full(
        &self,
        r: f64,
        t: f64,
        rho: f64,
        u: f64,
        pressure: f64,
        sie: f64,
    ) -> Result<SimilarityState, SimilarityError> {
        let mut state = self.to_similarity(r, t, rho, u)?;
        state.m = Some(pressure * r.powf(-self.lambda));
        state.h = Some(sie * r.powf(-self.tau));
        Ok(state)
    }

    /// Physical fields at radius `r` on the level set `state.xi`.
    pub fn from_similarity(
        &self,
        state: &SimilarityState,
        r: f64,
    ) -> Result<PhysicalPoint, SimilarityError> {
        let t = self.time_at(state.xi, r)?;
        Ok(PhysicalPoint {
            r,
            t,
            rho: r.powf(self.zeta) * state.w,
            u: r.powf(self.beta) * state.j,
            pressure: state.m.map(|m| r.powf(self.lambda) * m),
            sie: state.h.map(|h| r.powf(self.tau) * h),
        })
    }

    /// Chain-rule expansion of the field derivatives at `(r, t)`.
    pub fn field_derivatives(
        &self,
        r: f64,
        t: f64,
        w: f64,
        dw: f64,
        j: f64,
        dj: f64,
    ) -> Result<FieldDerivatives, SimilarityError> {
        Self::check(r, t)?;
        let Self {
            alpha, zeta, beta, ..
        } = *self;
        let t_pow = t.powf(-alpha);
        let dt_factor = -alpha * t_pow / t;
        Ok(FieldDerivatives {
            drho_dt: dt_factor * r.powf(zeta + 1.0) * dw,
            drho_dr: zeta * r.powf(zeta - 1.0) * w + r.powf(zeta) * t_pow * dw,
            du_dt: dt_factor * r.powf(beta + 1.0) * dj,
            du_dr: beta * r.powf(beta - 1.0) * j + r.powf(beta) * t_pow * dj,
        })
    }
}
