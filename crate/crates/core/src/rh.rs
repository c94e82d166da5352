//! Jump conditions across a shock in an isentropic fluid, and the planar
//! Noh stagnation shock.
//!
//! With `P = f(rho)` the energy jump condition is not imposed; mass and
//! momentum alone connect the two states. For the Noh problem (inflow
//! `-u0` into a wall, fluid brought to rest behind the shock) they reduce to
//!
//! ```text
//! f(rho2) = f(rho0) + rho0 rho2 u0² / (rho2 - rho0)
//! D0      = rho0 u0 / (rho2 - rho0)
//! ```

use serde::Serialize;
use thiserror::Error;

use crate::eos::{EosError, IsentropicEos, ModifiedTait, ModifiedTaitParams};
use crate::roots::{bracketed_root, log_space, sign_changes, RootError, RootOptions};

/// Smallest compression `rho2/rho0 - 1` scanned for a root.
pub const MIN_COMPRESSION: f64 = 1e-9;
/// Largest compression scanned, unless the EOS validity interval ends first.
pub const MAX_COMPRESSION: f64 = 1e6;
/// Scan points per decade of compression.
const SCAN_PER_DECADE: usize = 10;
/// Accepted root residual relative to `max(|f(rho2)|, rho0 u0²)`.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RhError {
    #[error("density must be positive, got {0}")]
    NonPositiveDensity(f64),
    #[error("inflow speed u0 must be positive, got {0}")]
    NonPositiveInflow(f64),
    #[error("bulk modulus must be positive at rho0={rho0}, got {modulus}")]
    NotHyperbolic { rho0: f64, modulus: f64 },
    #[error("no sign change of the shock density equation for rho2/rho0 - 1 in [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error("root residual {residual} exceeds tolerance {ROOT_RESIDUAL_TOL}")]
    InaccurateRoot { residual: f64 },
    #[error("ideal-gas reference needs gamma > 1, got {0}")]
    InvalidGamma(f64),
    #[error(transparent)]
    Eos(#[from] EosError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// States on either side of a discontinuity moving at speed `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpState {
    pub rho1: f64,
    pub u1: f64,
    pub rho2: f64,
    pub u2: f64,
    pub d: f64,
}

impl JumpState {
    /// Compressive shock: `rho2 > rho1`, `P2 > P1`, `u2 != u1`.
    pub fn is_admissible<E: IsentropicEos + ?Sized>(&self, eos: &E) -> bool {
        self.rho2 > self.rho1
            && eos.pressure_fn(self.rho2) > eos.pressure_fn(self.rho1)
            && self.u2 != self.u1
    }
}

/// `(mass, momentum)` jump residuals:
///
/// ```text
/// (u1 - D) rho1 - (u2 - D) rho2
/// f(rho1) + rho1 (u1 - D) u1 - f(rho2) - rho2 (u2 - D) u2
/// ```
pub fn jump_residuals<E: IsentropicEos + ?Sized>(eos: &E, s: &JumpState) -> (f64, f64) {
    let mass = (s.u1 - s.d) * s.rho1 - (s.u2 - s.d) * s.rho2;
    let momentum = eos.pressure_fn(s.rho1) + s.rho1 * (s.u1 - s.d) * s.u1
        - eos.pressure_fn(s.rho2)
        - s.rho2 * (s.u2 - s.d) * s.u2;
    (mass, momentum)
}

/// Shocked state of the planar Noh problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NohShock {
    pub rho0: f64,
    pub u0: f64,
    pub rho2: f64,
    /// Shock speed.
    pub d0: f64,
    /// `f(rho0)`, the inflow pressure.
    pub p0: f64,
    /// `I(rho0)`, the inflow SIE.
    pub i0: f64,
    pub p2: f64,
    pub i2: f64,
    /// Root residual relative to `max(|f(rho2)|, rho0 u0²)`.
    pub residual: f64,
    /// The compression scan found more than one root; the smallest is kept.
    pub multiple_roots: bool,
}

impl NohShock {
    pub fn jump_state(&self) -> JumpState {
        JumpState {
            rho1: self.rho0,
            u1: -self.u0,
            rho2: self.rho2,
            u2: 0.0,
            d: self.d0,
        }
    }

    pub fn residuals<E: IsentropicEos + ?Sized>(&self, eos: &E) -> (f64, f64) {
        jump_residuals(eos, &self.jump_state())
    }
}

/// Solves the Noh shock equation for any isentropic EOS.
///
/// The unknown is the compression `x = rho2/rho0 - 1`, scanned on a
/// logarithmic grid from [`MIN_COMPRESSION`] up to [`MAX_COMPRESSION`] (or
/// the EOS density limit) for sign changes of
/// `f(rho0 (1 + x)) - f(rho0) - rho0 u0² (1 + x) / x`, which tends to
/// `-inf` as `x -> 0+`. The first bracket is refined to a relative width of
/// `1e-14`.
pub fn solve_noh_shock<E: IsentropicEos + ?Sized>(
    eos: &E,
    rho0: f64,
    u0: f64,
) -> Result<NohShock, RhError> {
    if !(rho0 > 0.0 && rho0.is_finite()) {
        return Err(RhError::NonPositiveDensity(rho0));
    }
    if !(u0 > 0.0 && u0.is_finite()) {
        return Err(RhError::NonPositiveInflow(u0));
    }
    let modulus = eos.bulk_modulus(rho0)?;
    if !(modulus > 0.0) {
        return Err(RhError::NotHyperbolic { rho0, modulus });
    }
    let p0 = eos.pressure_fn(rho0);
    let momentum = rho0 * u0 * u0;
    let g = |x: f64| eos.pressure_fn(rho0 * (1.0 + x)) - p0 - momentum * (1.0 + x) / x;

    let hi = MAX_COMPRESSION.min(eos.validity().rho_max / rho0 - 1.0);
    if !(hi > MIN_COMPRESSION) {
        return Err(RhError::NoBracket {
            lo: MIN_COMPRESSION,
            hi,
        });
    }
    let decades = (hi / MIN_COMPRESSION).log10().ceil().max(1.0) as usize;
    let grid = log_space(MIN_COMPRESSION, hi, decades * SCAN_PER_DECADE + 1);
    let brackets = sign_changes(g, &grid);
    let &(a, b) = brackets.first().ok_or(RhError::NoBracket {
        lo: MIN_COMPRESSION,
        hi,
    })?;
    let x = bracketed_root(g, a, b, &RootOptions::default())?;

    let rho2 = rho0 * (1.0 + x);
    let p2 = eos.pressure(rho2)?;
    let residual = g(x).abs() / p2.abs().max(momentum);
    if residual > ROOT_RESIDUAL_TOL {
        return Err(RhError::InaccurateRoot { residual });
    }
    Ok(NohShock {
        rho0,
        u0,
        rho2,
        d0: u0 / x,
        p0,
        i0: eos.sie(rho0)?,
        p2,
        i2: eos.sie(rho2)?,
        residual,
        multiple_roots: brackets.len() > 1,
    })
}

/// Noh shock for a modified Tait fluid with `I0` chosen so that `I(rho0) = 0`.
pub fn solve_noh_shock_tait(
    params: ModifiedTaitParams,
    rho0: f64,
    u0: f64,
) -> Result<NohShock, RhError> {
    if !(rho0 > 0.0) {
        return Err(RhError::NonPositiveDensity(rho0));
    }
    let eos = ModifiedTait::new(params)?.normalized_at(rho0)?;
    solve_noh_shock(&eos, rho0, u0)
}

/// Planar Noh state for a cold ideal gas with the full energy equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdealGasNoh {
    pub gamma: f64,
    pub rho0: f64,
    pub u0: f64,
    pub rho2: f64,
    pub d0: f64,
    pub p2: f64,
    pub i2: f64,
}

impl IdealGasNoh {
    /// `P2 rho2^(-gamma)`, whose logarithm is the shocked entropy up to `c_v`
    /// and an additive constant.
    pub fn entropy_argument(&self) -> f64 {
        self.p2 * self.rho2.powf(-self.gamma)
    }
}

pub fn ideal_gas_noh_reference(gamma: f64, rho0: f64, u0: f64) -> Result<IdealGasNoh, RhError> {
    if !(gamma > 1.0 && gamma.is_finite()) {
        return Err(RhError::InvalidGamma(gamma));
    }
    if !(rho0 > 0.0) {
        return Err(RhError::NonPositiveDensity(rho0));
    }
    if !(u0 > 0.0) {
        return Err(RhError::NonPositiveInflow(u0));
    }
    Ok(IdealGasNoh {
        gamma,
        rho0,
        u0,
        rho2: rho0 * (gamma + 1.0) / (gamma - 1.0),
        d0: 0.5 * u0 * (gamma - 1.0),
        p2: 0.5 * rho0 * u0 * u0 * (gamma + 1.0),
        i2: 0.5 * u0 * u0,
    })
}

/// `(1/2) u0² rho0^(1-gamma) (gamma+1) ((gamma+1)/(gamma-1))^(-gamma)`,
/// the closed-form entropy argument of the shocked ideal gas.
pub fn ideal_gas_entropy_argument(gamma: f64, rho0: f64, u0: f64) -> f64 {
    0.5 * u0
        * u0
        * rho0.powf(1.0 - gamma)
        * (gamma + 1.0)
        * ((gamma + 1.0) / (gamma - 1.0)).powf(-gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuous_state_has_no_jump() {
        let eos = ModifiedTait::water();
        let s = JumpState {
            rho1: 1.3,
            u1: 0.2,
            rho2: 1.3,
            u2: 0.2,
            d: 0.7,
        };
        assert_eq!(jump_residuals(&eos, &s), (0.0, 0.0));
    }

    #[test]
    fn mass_residual_example() {
        let eos = ModifiedTait::water();
        let s = JumpState {
            rho1: 1.0,
            u1: -0.1,
            rho2: 2.0,
            u2: 0.0,
            d: 0.0,
        };
        assert!((jump_residuals(&eos, &s).0 + 0.1).abs() < 1e-16);
    }

    #[test]
    fn water_noh_shock() {
        let s = solve_noh_shock_tait(ModifiedTaitParams::WATER, 1.0, 0.1).unwrap();
        assert!((s.rho2 - 1.4183671188644846).abs() < 1e-12);
        assert!((s.d0 - 0.23902452054888065).abs() < 1e-12);
        assert!((s.p2 - 0.03390245205488809).abs() < 1e-12);
        assert!((s.i2 - 0.0028777256476777697).abs() < 1e-13);
        assert_eq!(s.i0, 0.0);
        assert!(!s.multiple_roots);
        let eos = ModifiedTait::water();
        assert_eq!(eos.entropy_invariant(s.rho2, s.p2), 0.0);
        assert!(s.jump_state().is_admissible(&eos));
    }

    #[test]
    fn rejects_degenerate_inflow() {
        let p = ModifiedTaitParams::WATER;
        assert_eq!(
            solve_noh_shock_tait(p, 1.0, 0.0),
            Err(RhError::NonPositiveInflow(0.0))
        );
        assert!(solve_noh_shock_tait(p, 1.0, -0.1).is_err());
        assert!(solve_noh_shock_tait(p, 0.0, 0.1).is_err());
    }

    #[test]
    fn pressureless_fluid_has_no_shock() {
        let eos = crate::eos::ZeroPressure::new();
        assert!(matches!(
            solve_noh_shock(&eos, 1.0, 0.1),
            Err(RhError::NotHyperbolic { .. })
        ));
    }

    #[test]
    fn ideal_gas_closed_form() {
        let s = ideal_gas_noh_reference(5.0 / 3.0, 1.0, 0.3).unwrap();
        assert!((s.rho2 - 4.0).abs() < 1e-14);
        assert!((s.d0 - 0.1).abs() < 1e-15);
        assert!((s.p2 - 0.12).abs() < 1e-15);
        assert!(
            (s.entropy_argument() - ideal_gas_entropy_argument(5.0 / 3.0, 1.0, 0.3)).abs() < 1e-15
        );
        assert!(ideal_gas_noh_reference(1.0, 1.0, 0.3).is_err());
    }
}
