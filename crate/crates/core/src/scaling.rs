//! Scaling-group constraint algebra.
//!
//! A scaling group acts as `t -> e^(eps a1) t`, `r -> e^(eps a2) r`,
//! `rho -> e^(eps a3) rho`, with the velocity, pressure, and SIE exponents
//! forced by the flow equations, the jump conditions, and the isentropic
//! thermodynamic relation:
//!
//! ```text
//! a4 = a2 - a1          (u ~ r/t)
//! a5 = a3 + 2a2 - 2a1   (P ~ rho r²/t²)
//! a6 = 2a2 - 2a1        (I ~ r²/t²)
//! ```
//!
//! The admissible EOS for a given `(a1, a2, a3)` falls in one of four
//! classes, see [`SymmetryCase`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eos::{EosError, IsentropicEos};

/// Relative tolerance used when comparing scaling constants.
pub const EQUALITY_RTOL: f64 = 1e-12;

/// Relative finite-difference step for `dK_S/drho`.
pub const KS_FD_STEP: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScalingError {
    #[error("time scaling constant a1 must be nonzero")]
    DegenerateTimeScaling,
    #[error("scaling constants must be finite, got ({0}, {1}, {2})")]
    NonFinite(f64, f64, f64),
    #[error("time must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("shock trajectory exponent sigma = {sigma} <= -1 is not integrable from t = 0")]
    NonIntegrableTrajectory { sigma: f64 },
}

/// The independent scaling constants `(a1, a2, a3)`; `a4..a6` are derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingExponents {
    a1: f64,
    a2: f64,
    a3: f64,
}

impl ScalingExponents {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self, ScalingError> {
        if !(a1.is_finite() && a2.is_finite() && a3.is_finite()) {
            return Err(ScalingError::NonFinite(a1, a2, a3));
        }
        if a1 == 0.0 {
            return Err(ScalingError::DegenerateTimeScaling);
        }
        Ok(Self { a1, a2, a3 })
    }

    /// The purely kinematic group `(1, 1, 0)`.
    pub fn kinematic() -> Self {
        Self {
            a1: 1.0,
            a2: 1.0,
            a3: 0.0,
        }
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }
    pub fn a2(&self) -> f64 {
        self.a2
    }
    pub fn a3(&self) -> f64 {
        self.a3
    }
    pub fn a4(&self) -> f64 {
        self.a2 - self.a1
    }
    pub fn a5(&self) -> f64 {
        self.a3 + 2.0 * self.a2 - 2.0 * self.a1
    }
    pub fn a6(&self) -> f64 {
        2.0 * self.a2 - 2.0 * self.a1
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a1, self.a2, self.a3]
    }

    fn scale(&self) -> f64 {
        self.a1.abs().max(self.a2.abs()).max(self.a3.abs())
    }

    fn is_negligible(&self, x: f64) -> bool {
        x.abs() <= EQUALITY_RTOL * self.scale()
    }

    /// `a1 == a2` to [`EQUALITY_RTOL`].
    pub fn time_space_equal(&self) -> bool {
        self.is_negligible(self.a1 - self.a2)
    }

    /// `a3 == 0` to [`EQUALITY_RTOL`].
    pub fn density_unscaled(&self) -> bool {
        self.is_negligible(self.a3)
    }

    pub fn case(&self) -> SymmetryCase {
        match (self.time_space_equal(), self.density_unscaled()) {
            (false, false) => SymmetryCase::I,
            (true, false) => SymmetryCase::II,
            (false, true) => SymmetryCase::III,
            (true, true) => SymmetryCase::IV,
        }
    }

    pub fn power_laws(&self) -> PowerLawExponents {
        let Self { a1, a2, a3 } = *self;
        let a5 = self.a5();
        let over_a2 = |num: f64| (!self.is_negligible(a2)).then(|| num / a2);
        PowerLawExponents {
            sigma: (a2 - a1) / a1,
            psi: (!self.is_negligible(a3)).then(|| a5 / a3),
            alpha: a2 / a1,
            zeta: over_a2(a3),
            lambda: over_a2(a5),
            beta: over_a2(a2 - a1),
            tau: over_a2(2.0 * a2 - 2.0 * a1),
        }
    }

    pub fn report(&self) -> ExponentReport {
        ExponentReport {
            a: self.as_array(),
            case: self.case(),
            exponents: self.power_laws(),
        }
    }
}

/// Power-law exponents of the similarity variables.
///
/// `sigma` and `alpha` have `a1` in the denominator and are always defined;
/// the others are `None` when their denominator vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawExponents {
    /// Shock velocity `D ~ t^sigma`.
    pub sigma: f64,
    /// Bulk modulus `K_S ~ rho^psi`.
    pub psi: Option<f64>,
    /// `xi = r / t^alpha`.
    pub alpha: f64,
    /// `rho = r^zeta w(xi)`.
    pub zeta: Option<f64>,
    /// `P = r^lambda m(xi)`.
    pub lambda: Option<f64>,
    /// `u = r^beta j(xi)`.
    pub beta: Option<f64>,
    /// `I = r^tau h(xi)`.
    pub tau: Option<f64>,
}

/// EOS class admitted by a scaling group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryCase {
    /// `a1 != a2`, `a3 != 0`: `K_S = A1 rho^psi`, ideal-gas-like.
    I,
    /// `a1 == a2`, `a3 != 0`: `P = 0`, `I = I0`.
    II,
    /// `a1 != a2`, `a3 == 0`: `P = I = 0`.
    III,
    /// `a1 == a2`, `a3 == 0`: kinematic scaling, any EOS.
    IV,
}

impl SymmetryCase {
    pub fn admissible_eos(&self) -> &'static str {
        match self {
            SymmetryCase::I => {
                "K_S = A1 rho^psi, P = (A1/psi) rho^psi, I = A1 rho^(psi-1)/(psi(psi-1))"
            }
            SymmetryCase::II => "K_S = 0, P = 0, I = I0",
            SymmetryCase::III => "K_S = 0, P = 0, I = 0",
            SymmetryCase::IV => "arbitrary isentropic EOS",
        }
    }

    pub fn roman(&self) -> &'static str {
        match self {
            SymmetryCase::I => "I",
            SymmetryCase::II => "II",
            SymmetryCase::III => "III",
            SymmetryCase::IV => "IV",
        }
    }
}

impl fmt::Display for SymmetryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

/// JSON report: `{"a":[a1,a2,a3],"case":"I..IV","exponents":{...}}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentReport {
    pub a: [f64; 3],
    pub case: SymmetryCase,
    pub exponents: PowerLawExponents,
}

pub fn derive_exponents(
    a1: f64,
    a2: f64,
    a3: f64,
) -> Result<(ScalingExponents, PowerLawExponents), ScalingError> {
    let exps = ScalingExponents::new(a1, a2, a3)?;
    Ok((exps, exps.power_laws()))
}

pub fn classify(a1: f64, a2: f64, a3: f64) -> Result<SymmetryCase, ScalingError> {
    Ok(ScalingExponents::new(a1, a2, a3)?.case())
}

/// Residual of the bulk-modulus determining equation
/// `a3 rho K_S'(rho) - (a3 + 2a2 - 2a1) K_S(rho)`.
///
/// Vanishes when the EOS is compatible with the scaling group. `K_S'` is a
/// centered difference with step `KS_FD_STEP * rho`.
pub fn ks_determining_residual<E: IsentropicEos + ?Sized>(
    eos: &E,
    exps: &ScalingExponents,
    rho: f64,
) -> Result<f64, EosError> {
    let h = KS_FD_STEP * rho;
    let k = eos.bulk_modulus(rho)?;
    let dk = (eos.bulk_modulus(rho + h)? - eos.bulk_modulus(rho - h)?) / (2.0 * h);
    Ok(exps.a3() * rho * dk - exps.a5() * k)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockKinematics {
    pub position: f64,
    pub velocity: f64,
}

/// Scale-invariant shock law `D(t) = D0 t^sigma` and its integral from 0.
pub fn shock_trajectory(
    a1: f64,
    a2: f64,
    d0: f64,
    t: f64,
) -> Result<ShockKinematics, ScalingError> {
    let exps = ScalingExponents::new(a1, a2, 0.0)?;
    if !(t > 0.0) {
        return Err(ScalingError::NonPositiveTime(t));
    }
    let sigma = exps.power_laws().sigma;
    if sigma <= -1.0 {
        return Err(ScalingError::NonIntegrableTrajectory { sigma });
    }
    Ok(ShockKinematics {
        velocity: d0 * t.powf(sigma),
        position: d0 * t.powf(sigma + 1.0) / (sigma + 1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::{ModifiedTait, PolytropicCaseI};

    #[test]
    fn kinematic_exponents() {
        let (_, p) = derive_exponents(1.0, 1.0, 0.0).unwrap();
        assert_eq!(p.alpha, 1.0);
        assert_eq!(p.beta, Some(0.0));
        assert_eq!(p.zeta, Some(0.0));
        assert_eq!(p.tau, Some(0.0));
        assert_eq!(p.lambda, Some(0.0));
        assert_eq!(p.sigma, 0.0);
        assert_eq!(p.psi, None);
    }

    #[test]
    fn general_exponents() {
        let (e, p) = derive_exponents(1.0, 2.0, 1.0).unwrap();
        assert_eq!((e.a4(), e.a5(), e.a6()), (1.0, 3.0, 2.0));
        assert_eq!(p.sigma, 1.0);
        assert_eq!(p.psi, Some(3.0));
        assert_eq!(p.alpha, 2.0);
        assert_eq!(p.zeta, Some(0.5));
        assert_eq!(p.lambda, Some(1.5));
        assert_eq!(p.beta, Some(0.5));
        assert_eq!(p.tau, Some(1.0));
        assert_eq!(p.beta.unwrap(), 1.0 - 1.0 / p.alpha);
    }

    #[test]
    fn zero_a2_leaves_ratios_absent() {
        let (_, p) = derive_exponents(1.0, 0.0, 2.0).unwrap();
        assert!(p.zeta.is_none() && p.beta.is_none() && p.lambda.is_none() && p.tau.is_none());
        assert_eq!(p.psi, Some(0.0));
        assert_eq!(p.sigma, -1.0);
    }

    #[test]
    fn rejects_degenerate_time() {
        assert_eq!(
            derive_exponents(0.0, 1.0, 1.0).unwrap_err(),
            ScalingError::DegenerateTimeScaling
        );
        assert!(classify(0.0, 1.0, 0.0).is_err());
        assert!(ScalingExponents::new(1.0, f64::NAN, 0.0).is_err());
    }

    #[test]
    fn classification_table() {
        assert_eq!(classify(1.0, 1.0, 0.0).unwrap(), SymmetryCase::IV);
        assert_eq!(classify(1.0, 2.0, 1.0).unwrap(), SymmetryCase::I);
        assert_eq!(classify(1.0, 1.0, 3.0).unwrap(), SymmetryCase::II);
        assert_eq!(classify(1.0, 2.0, 0.0).unwrap(), SymmetryCase::III);
        // within tolerance
        assert_eq!(classify(1.0, 1.0 + 1e-14, 1e-15).unwrap(), SymmetryCase::IV);
        assert_eq!(classify(1.0, 1.0 + 1e-9, 0.0).unwrap(), SymmetryCase::III);
    }

    #[test]
    fn determining_residual_power_law() {
        let exps = ScalingExponents::new(1.0, 2.0, 1.0).unwrap();
        let eos = PolytropicCaseI::new(0.7, exps.power_laws().psi.unwrap()).unwrap();
        for rho in [0.01, 0.5, 1.0, 3.0, 100.0] {
            let res = ks_determining_residual(&eos, &exps, rho).unwrap();
            let scale = exps.a5() * eos.bulk_modulus(rho).unwrap();
            assert!(res.abs() <= 1e-8 * scale, "rho={rho} res={res}");
        }
    }

    #[test]
    fn determining_residual_kinematic_is_exact_zero() {
        let eos = ModifiedTait::water();
        let exps = ScalingExponents::kinematic();
        for rho in [0.3, 1.0, 1.5, 9.0] {
            assert_eq!(ks_determining_residual(&eos, &exps, rho).unwrap(), 0.0);
        }
    }

    #[test]
    fn determining_residual_tait_is_incompatible_with_general_group() {
        let eos = ModifiedTait::water();
        let exps = ScalingExponents::new(1.0, 2.0, 1.0).unwrap();
        // K_S = 7B rho^7, so a3 rho K' - a5 K = (7 - 3) K != 0
        let res = ks_determining_residual(&eos, &exps, 1.5).unwrap();
        let k = eos.bulk_modulus(1.5).unwrap();
        assert!((res - 4.0 * k).abs() < 1e-6 * k, "{res} vs {}", 4.0 * k);
    }

    #[test]
    fn shock_laws() {
        let s = shock_trajectory(1.0, 1.0, 0.3, 5.0).unwrap();
        assert_eq!(s.velocity, 0.3);
        assert!((s.position - 1.5).abs() < 1e-15);
        let s = shock_trajectory(1.0, 2.0, 1.0, 2.0).unwrap();
        assert_eq!((s.velocity, s.position), (2.0, 2.0));
        let s = shock_trajectory(1.0, 0.5, 1.0, 4.0).unwrap();
        assert_eq!(s.velocity, 0.5);
        assert!(matches!(
            shock_trajectory(1.0, 0.0, 1.0, 1.0),
            Err(ScalingError::NonIntegrableTrajectory { .. })
        ));
        assert!(shock_trajectory(1.0, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = ScalingExponents::new(1.0, 1.0, 0.0).unwrap().report();
        let v = serde_json::to_value(report).unwrap();
        assert_eq!(v["case"], "IV");
        assert!(v["exponents"]["psi"].is_null());
        assert_eq!(v["a"].as_array().unwrap().len(), 3);
        assert_eq!(v["exponents"]["sigma"].as_f64(), Some(0.0));
    }
}
