//! Isentropic equations of state `P = f(rho)`.
//!
//! Units are fixed throughout the crate: density in g/cm³, pressure in Mbar,
//! length in cm, time in μs (so velocities are in cm/μs and specific energies
//! in Mbar·cm³/g).
//!
//! Every EOS exposes the pressure function `f`, its slope `f'`, and the
//! specific internal energy (SIE) function `g` with `rho² g'(rho) = f(rho)`.
//! The SIE carries an additive constant `I0`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Lower end of the default density validity interval.
pub const DEFAULT_RHO_MIN: f64 = 1e-9;
/// Upper end of the default density validity interval.
pub const DEFAULT_RHO_MAX: f64 = 1e9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EosError {
    #[error("density {rho} outside validity interval ({min}, {max})")]
    OutOfDomain { rho: f64, min: f64, max: f64 },
    #[error("bulk modulus {modulus} is negative at density {rho}")]
    NegativeBulkModulus { rho: f64, modulus: f64 },
    #[error("invalid EOS parameter: {0}")]
    InvalidParameter(String),
}

/// Open density interval on which an EOS is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Validity {
    pub rho_min: f64,
    pub rho_max: f64,
}

impl Default for Validity {
    fn default() -> Self {
        Self {
            rho_min: DEFAULT_RHO_MIN,
            rho_max: DEFAULT_RHO_MAX,
        }
    }
}

impl Validity {
    pub fn new(rho_min: f64, rho_max: f64) -> Result<Self, EosError> {
        if !(rho_min > 0.0 && rho_max > rho_min && rho_max.is_finite()) {
            return Err(EosError::InvalidParameter(format!(
                "validity interval ({rho_min}, {rho_max}) must satisfy 0 < rho_min < rho_max < inf"
            )));
        }
        Ok(Self { rho_min, rho_max })
    }

    pub fn contains(&self, rho: f64) -> bool {
        rho >= self.rho_min && rho <= self.rho_max
    }

    pub fn check(&self, rho: f64) -> Result<(), EosError> {
        if self.contains(rho) {
            Ok(())
        } else {
            Err(EosError::OutOfDomain {
                rho,
                min: self.rho_min,
                max: self.rho_max,
            })
        }
    }
}

/// An isentropic closure `P = f(rho)`, `I = g(rho) + I0`.
///
/// Implementors supply the raw functions; the provided methods add the
/// domain checks. The raw functions are also used directly by solvers that
/// have already validated their densities.
pub trait IsentropicEos: Send + Sync {
    /// `f(rho)`, without domain checks.
    fn pressure_fn(&self, rho: f64) -> f64;

    /// `f'(rho)`, without domain checks.
    fn pressure_slope(&self, rho: f64) -> f64;

    /// `g(rho)`, an antiderivative of `f(rho)/rho²`, without domain checks.
    fn sie_fn(&self, rho: f64) -> f64;

    /// The SIE offset `I0`.
    fn sie_offset(&self) -> f64;

    fn validity(&self) -> Validity;

    /// `rho f'(rho)`. Families with a closed form override this.
    fn bulk_modulus_fn(&self, rho: f64) -> f64 {
        rho * self.pressure_slope(rho)
    }

    fn pressure(&self, rho: f64) -> Result<f64, EosError> {
        self.validity().check(rho)?;
        Ok(self.pressure_fn(rho))
    }

    fn bulk_modulus(&self, rho: f64) -> Result<f64, EosError> {
        self.validity().check(rho)?;
        Ok(self.bulk_modulus_fn(rho))
    }

    /// `c = sqrt(K_S / rho)`.
    fn sound_speed(&self, rho: f64) -> Result<f64, EosError> {
        let modulus = self.bulk_modulus(rho)?;
        if modulus < 0.0 {
            return Err(EosError::NegativeBulkModulus { rho, modulus });
        }
        Ok((modulus / rho).sqrt())
    }

    /// `I = g(rho) + I0`.
    fn sie(&self, rho: f64) -> Result<f64, EosError> {
        self.validity().check(rho)?;
        Ok(self.sie_fn(rho) + self.sie_offset())
    }

    /// `P - f(rho)`: zero exactly when `(rho, P)` lies on this isentrope.
    fn entropy_invariant(&self, rho: f64, pressure: f64) -> f64 {
        pressure - self.pressure_fn(rho)
    }
}

impl<E: IsentropicEos + ?Sized> IsentropicEos for &E {
    fn pressure_fn(&self, rho: f64) -> f64 {
        (**self).pressure_fn(rho)
    }
    fn pressure_slope(&self, rho: f64) -> f64 {
        (**self).pressure_slope(rho)
    }
    fn sie_fn(&self, rho: f64) -> f64 {
        (**self).sie_fn(rho)
    }
    fn sie_offset(&self) -> f64 {
        (**self).sie_offset()
    }
    fn validity(&self) -> Validity {
        (**self).validity()
    }
    fn bulk_modulus_fn(&self, rho: f64) -> f64 {
        (**self).bulk_modulus_fn(rho)
    }
}

/// Parameters of the modified Tait EOS `P = B[(rho/rho_ref)^gamma - 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModifiedTaitParams {
    /// Mbar.
    pub b: f64,
    pub gamma: f64,
    /// g/cm³.
    pub rho_ref: f64,
}

impl ModifiedTaitParams {
    /// Water: `rho_ref = 1 g/cm³`, `B = 3.214e-3 Mbar`, `gamma = 7`.
    pub const WATER: Self = Self {
        b: 3.214e-3,
        gamma: 7.0,
        rho_ref: 1.0,
    };

    pub fn validate(&self) -> Result<(), EosError> {
        let Self { b, gamma, rho_ref } = *self;
        if !(rho_ref > 0.0 && rho_ref.is_finite()) {
            return Err(EosError::InvalidParameter(format!(
                "Tait rho_ref must be positive, got {rho_ref}"
            )));
        }
        if gamma == 0.0 || gamma == 1.0 || !gamma.is_finite() {
            return Err(EosError::InvalidParameter(format!(
                "Tait gamma must be finite and differ from 0 and 1, got {gamma}"
            )));
        }
        if !(b * gamma > 0.0 && b.is_finite()) {
            return Err(EosError::InvalidParameter(format!(
                "Tait B*gamma must be positive, got B={b}, gamma={gamma}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModifiedTait {
    params: ModifiedTaitParams,
    sie_offset: f64,
    validity: Validity,
}

impl ModifiedTait {
    pub fn new(params: ModifiedTaitParams) -> Result<Self, EosError> {
        params.validate()?;
        Ok(Self {
            params,
            sie_offset: 0.0,
            validity: Validity::default(),
        })
    }

    pub fn water() -> Self {
        Self::new(ModifiedTaitParams::WATER).expect("water parameters are valid")
    }

    pub fn with_sie_offset(mut self, sie_offset: f64) -> Self {
        self.sie_offset = sie_offset;
        self
    }

    /// Chooses `I0` so that `I(rho0) = 0`.
    pub fn normalized_at(mut self, rho0: f64) -> Result<Self, EosError> {
        self.validity.check(rho0)?;
        self.sie_offset = -self.sie_fn(rho0);
        Ok(self)
    }

    pub fn with_validity(mut self, validity: Validity) -> Self {
        self.validity = validity;
        self
    }

    pub fn params(&self) -> ModifiedTaitParams {
        self.params
    }

    fn compression_power(&self, rho: f64) -> f64 {
        (rho / self.params.rho_ref).powf(self.params.gamma)
    }
}

impl IsentropicEos for ModifiedTait {
    fn pressure_fn(&self, rho: f64) -> f64 {
        self.params.b * (self.compression_power(rho) - 1.0)
    }

    fn pressure_slope(&self, rho: f64) -> f64 {
        let ModifiedTaitParams { b, gamma, rho_ref } = self.params;
        b * gamma / rho_ref * (rho / rho_ref).powf(gamma - 1.0)
    }

    fn bulk_modulus_fn(&self, rho: f64) -> f64 {
        self.params.b * self.params.gamma * self.compression_power(rho)
    }

    fn sie_fn(&self, rho: f64) -> f64 {
        let ModifiedTaitParams { b, gamma, .. } = self.params;
        (self.pressure_fn(rho) + gamma * b) / ((gamma - 1.0) * rho)
    }

    fn sie_offset(&self) -> f64 {
        self.sie_offset
    }

    fn validity(&self) -> Validity {
        self.validity
    }
}

/// Power-law EOS admitted by the fully general scaling group:
/// `K_S = A1 rho^psi`, `P = (A1/psi) rho^psi`, `I = A1 rho^(psi-1) / (psi (psi-1))`.
///
/// The integration constants `P0` and `I0` are forced to zero, so the family
/// satisfies the ideal-gas-like relation `P = (psi - 1) rho I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolytropicCaseI {
    a1: f64,
    psi: f64,
    validity: Validity,
}

impl PolytropicCaseI {
    pub fn new(a1: f64, psi: f64) -> Result<Self, EosError> {
        if !(a1 > 0.0 && a1.is_finite()) {
            return Err(EosError::InvalidParameter(format!(
                "polytropic A1 must be positive, got {a1}"
            )));
        }
        if !(psi > 1.0 && psi.is_finite()) {
            return Err(EosError::InvalidParameter(format!(
                "polytropic psi must exceed 1, got {psi}"
            )));
        }
        Ok(Self {
            a1,
            psi,
            validity: Validity::default(),
        })
    }

    pub fn with_validity(mut self, validity: Validity) -> Self {
        self.validity = validity;
        self
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }
}

impl IsentropicEos for PolytropicCaseI {
    fn pressure_fn(&self, rho: f64) -> f64 {
        self.a1 / self.psi * rho.powf(self.psi)
    }

    fn pressure_slope(&self, rho: f64) -> f64 {
        self.a1 * rho.powf(self.psi - 1.0)
    }

    fn bulk_modulus_fn(&self, rho: f64) -> f64 {
        self.a1 * rho.powf(self.psi)
    }

    fn sie_fn(&self, rho: f64) -> f64 {
        self.a1 * rho.powf(self.psi - 1.0) / (self.psi * (self.psi - 1.0))
    }

    fn sie_offset(&self) -> f64 {
        0.0
    }

    fn validity(&self) -> Validity {
        self.validity
    }
}

/// Pressureless fluid: `P = 0`, `K_S = 0`, `I = I0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ZeroPressure {
    sie_offset: f64,
    validity: Validity,
}

impl ZeroPressure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_sie_offset(mut self, sie_offset: f64) -> Self {
        self.sie_offset = sie_offset;
        self
    }

    pub fn with_validity(mut self, validity: Validity) -> Self {
        self.validity = validity;
        self
    }
}

impl IsentropicEos for ZeroPressure {
    fn pressure_fn(&self, _rho: f64) -> f64 {
        0.0
    }

    fn pressure_slope(&self, _rho: f64) -> f64 {
        0.0
    }

    fn sie_fn(&self, _rho: f64) -> f64 {
        0.0
    }

    fn sie_offset(&self) -> f64 {
        self.sie_offset
    }

    fn validity(&self) -> Validity {
        self.validity
    }
}

/// JSON form of the shipped EOS families.
///
/// ```json
/// {"type": "tait", "B": 3.214e-3, "gamma": 7.0, "rho_ref": 1.0, "I0": 0.0}
/// {"type": "polytropic", "A1": 1.0, "psi": 3.0}
/// {"type": "zero", "I0": 0.5}
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", try_from = "RawEosSpec")]
pub enum EosSpec {
    Tait {
        #[serde(rename = "B")]
        b: f64,
        gamma: f64,
        rho_ref: f64,
        #[serde(rename = "I0", default)]
        i0: f64,
    },
    Polytropic {
        #[serde(rename = "A1")]
        a1: f64,
        psi: f64,
        #[serde(rename = "I0", default)]
        i0: f64,
    },
    Zero {
        #[serde(rename = "I0", default)]
        i0: f64,
    },
}

/// Flat form of [`EosSpec`] used for parsing, so that unknown keys are
/// rejected by name and keys foreign to the chosen family are reported.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEosSpec {
    #[serde(rename = "type")]
    kind: String,
    #[serde(rename = "B")]
    b: Option<f64>,
    gamma: Option<f64>,
    rho_ref: Option<f64>,
    #[serde(rename = "A1")]
    a1: Option<f64>,
    psi: Option<f64>,
    #[serde(rename = "I0")]
    i0: Option<f64>,
}

impl TryFrom<RawEosSpec> for EosSpec {
    type Error = String;

    fn try_from(raw: RawEosSpec) -> Result<Self, String> {
        let present = [
            ("B", raw.b.is_some()),
            ("gamma", raw.gamma.is_some()),
            ("rho_ref", raw.rho_ref.is_some()),
            ("A1", raw.a1.is_some()),
            ("psi", raw.psi.is_some()),
        ];
        let allowed: &[&str] = match raw.kind.as_str() {
            "tait" => &["B", "gamma", "rho_ref"],
            "polytropic" => &["A1", "psi"],
            "zero" => &[],
            other => {
                return Err(format!(
                    "unknown EOS type `{other}`, expected tait, polytropic or zero"
                ))
            }
        };
        if let Some((key, _)) = present.iter().find(|(k, p)| *p && !allowed.contains(k)) {
            return Err(format!(
                "key `{key}` does not apply to EOS type `{}`",
                raw.kind
            ));
        }
        let need = |v: Option<f64>, key: &str| {
            v.ok_or_else(|| format!("missing key `{key}` for EOS type `{}`", raw.kind))
        };
        let i0 = raw.i0.unwrap_or(0.0);
        Ok(match raw.kind.as_str() {
            "tait" => EosSpec::Tait {
                b: need(raw.b, "B")?,
                gamma: need(raw.gamma, "gamma")?,
                rho_ref: need(raw.rho_ref, "rho_ref")?,
                i0,
            },
            "polytropic" => EosSpec::Polytropic {
                a1: need(raw.a1, "A1")?,
                psi: need(raw.psi, "psi")?,
                i0,
            },
            _ => EosSpec::Zero { i0 },
        })
    }
}

/// Any of the shipped EOS families, built from an [`EosSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eos {
    Tait(ModifiedTait),
    Polytropic(PolytropicCaseI),
    Zero(ZeroPressure),
}

impl Eos {
    pub fn from_spec(spec: &EosSpec) -> Result<Self, EosError> {
        match *spec {
            EosSpec::Tait {
                b,
                gamma,
                rho_ref,
                i0,
            } => Ok(Eos::Tait(
                ModifiedTait::new(ModifiedTaitParams { b, gamma, rho_ref })?.with_sie_offset(i0),
            )),
            EosSpec::Polytropic { a1, psi, i0 } => {
                if i0 != 0.0 {
                    return Err(EosError::InvalidParameter(format!(
                        "polytropic EOS requires I0 = 0, got {i0}"
                    )));
                }
                Ok(Eos::Polytropic(PolytropicCaseI::new(a1, psi)?))
            }
            EosSpec::Zero { i0 } => Ok(Eos::Zero(ZeroPressure::new().with_sie_offset(i0))),
        }
    }

    pub fn to_spec(&self) -> EosSpec {
        match self {
            Eos::Tait(t) => EosSpec::Tait {
                b: t.params.b,
                gamma: t.params.gamma,
                rho_ref: t.params.rho_ref,
                i0: t.sie_offset,
            },
            Eos::Polytropic(p) => EosSpec::Polytropic {
                a1: p.a1,
                psi: p.psi,
                i0: 0.0,
            },
            Eos::Zero(z) => EosSpec::Zero { i0: z.sie_offset },
        }
    }

    /// Same EOS with `I0` chosen so that `I(rho0) = 0`.
    ///
    /// The polytropic family has `I0 = 0` fixed and is returned unchanged.
    pub fn normalized_at(self, rho0: f64) -> Result<Self, EosError> {
        match self {
            Eos::Tait(t) => Ok(Eos::Tait(t.normalized_at(rho0)?)),
            Eos::Polytropic(_) => Ok(self),
            Eos::Zero(z) => Ok(Eos::Zero(z.with_sie_offset(0.0))),
        }
    }

    fn inner(&self) -> &dyn IsentropicEos {
        match self {
            Eos::Tait(t) => t,
            Eos::Polytropic(p) => p,
            Eos::Zero(z) => z,
        }
    }
}

impl IsentropicEos for Eos {
    fn pressure_fn(&self, rho: f64) -> f64 {
        self.inner().pressure_fn(rho)
    }
    fn pressure_slope(&self, rho: f64) -> f64 {
        self.inner().pressure_slope(rho)
    }
    fn sie_fn(&self, rho: f64) -> f64 {
        self.inner().sie_fn(rho)
    }
    fn sie_offset(&self) -> f64 {
        self.inner().sie_offset()
    }
    fn validity(&self) -> Validity {
        self.inner().validity()
    }
    fn bulk_modulus_fn(&self, rho: f64) -> f64 {
        self.inner().bulk_modulus_fn(rho)
    }
}

impl TryFrom<EosSpec> for Eos {
    type Error = EosError;

    fn try_from(spec: EosSpec) -> Result<Self, Self::Error> {
        Eos::from_spec(&spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn tait_reference_density_has_zero_pressure() {
        let eos = ModifiedTait::water();
        assert_eq!(eos.pressure(1.0).unwrap(), 0.0);
    }

    #[test]
    fn tait_water_pressure_at_1_1() {
        let eos = ModifiedTait::water();
        // 3.214e-3 * (1.1^7 - 1), 1.1^7 = 1.9487171
        let expected = 3.214e-3 * (1.9487171 - 1.0);
        assert!(rel(eos.pressure(1.1).unwrap(), expected) < 1e-12);
        assert!((eos.pressure(1.1).unwrap() - 3.049e-3).abs() < 1e-6);
    }

    #[test]
    fn polytropic_pressure_and_modulus() {
        let eos = PolytropicCaseI::new(1.0, 2.0).unwrap();
        assert_eq!(eos.pressure(2.0).unwrap(), 2.0);
        let eos = PolytropicCaseI::new(2.5, 1.7).unwrap();
        for rho in [0.3, 1.0, 4.2] {
            assert!(rel(eos.bulk_modulus(rho).unwrap(), 2.5 * rho.powf(1.7)) < 1e-15);
            let expected_sie = 2.5 * rho.powf(0.7) / (1.7 * 0.7);
            assert!(rel(eos.sie(rho).unwrap(), expected_sie) < 1e-15);
        }
    }

    #[test]
    fn tait_bulk_modulus_at_reference() {
        let eos = ModifiedTait::water();
        assert!(rel(eos.bulk_modulus(1.0).unwrap(), 7.0 * 3.214e-3) < 1e-15);
    }

    #[test]
    fn zero_pressure_has_no_stiffness() {
        let eos = ZeroPressure::new();
        assert_eq!(eos.bulk_modulus(3.0).unwrap(), 0.0);
        assert_eq!(eos.sound_speed(3.0).unwrap(), 0.0);
    }

    #[test]
    fn sound_speeds() {
        let eos = ModifiedTait::water();
        let c = eos.sound_speed(1.0).unwrap();
        assert!(rel(c, (7.0f64 * 3.214e-3).sqrt()) < 1e-15);
        assert!((c - 0.14999).abs() < 1e-5);
        let poly = PolytropicCaseI::new(1.0, 3.0).unwrap();
        assert!(rel(poly.sound_speed(1.0).unwrap(), 1.0) < 1e-15);
    }

    #[test]
    fn tait_sie_normalized_at_reference() {
        let b = ModifiedTaitParams::WATER.b;
        let eos = ModifiedTait::water().with_sie_offset(-7.0 * b / 6.0);
        assert!(eos.sie(1.0).unwrap().abs() < 1e-18);
        let normalized = ModifiedTait::water().normalized_at(1.0).unwrap();
        assert!(rel(normalized.sie_offset(), -7.0 * b / 6.0) < 1e-14);
    }

    #[test]
    fn entropy_invariant_values() {
        let eos = ModifiedTait::water();
        for rho in [0.5, 1.0, 1.7] {
            assert_eq!(eos.entropy_invariant(rho, eos.pressure_fn(rho)), 0.0);
        }
        // -3.214e-3 * (1.2^7 - 1), 1.2^7 = 3.5831808
        let expected = -3.214e-3 * (3.5831808 - 1.0);
        assert!(rel(eos.entropy_invariant(1.2, 0.0), expected) < 1e-12);
    }

    #[test]
    fn domain_errors() {
        let eos = ModifiedTait::water();
        assert!(matches!(
            eos.pressure(0.0),
            Err(EosError::OutOfDomain { .. })
        ));
        assert!(matches!(
            eos.pressure(-1.0),
            Err(EosError::OutOfDomain { .. })
        ));
        let narrow = eos.with_validity(Validity::new(0.5, 2.0).unwrap());
        assert!(narrow.sie(2.5).is_err());
        assert!(narrow.bulk_modulus(0.4).is_err());
        assert!(narrow.sound_speed(1.5).is_ok());
        assert!(Validity::new(0.0, 1.0).is_err());
        assert!(Validity::new(2.0, 1.0).is_err());
    }

    #[test]
    fn parameter_validation() {
        let bad = |b, gamma, rho_ref| ModifiedTait::new(ModifiedTaitParams { b, gamma, rho_ref });
        assert!(bad(1e-3, 1.0, 1.0).is_err());
        assert!(bad(1e-3, 0.0, 1.0).is_err());
        assert!(bad(1e-3, 7.0, 0.0).is_err());
        assert!(bad(-1e-3, 7.0, 1.0).is_err());
        // negative B is fine when gamma < 0
        assert!(bad(-1e-3, -3.0, 1.0).is_ok());
        assert!(PolytropicCaseI::new(1.0, 1.0).is_err());
        assert!(PolytropicCaseI::new(0.0, 2.0).is_err());
    }

    #[test]
    fn negative_b_tait_keeps_positive_modulus() {
        let eos = ModifiedTait::new(ModifiedTaitParams {
            b: -1e-3,
            gamma: -3.0,
            rho_ref: 1.0,
        })
        .unwrap();
        for rho in [0.01, 0.5, 1.0, 30.0] {
            assert!(eos.bulk_modulus(rho).unwrap() > 0.0);
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let json = r#"{"type":"tait","B":0.003214,"gamma":7.0,"rho_ref":1.0}"#;
        let spec: EosSpec = serde_json::from_str(json).unwrap();
        let eos = Eos::from_spec(&spec).unwrap();
        assert_eq!(eos, Eos::Tait(ModifiedTait::water()));
        let back: EosSpec =
            serde_json::from_str(&serde_json::to_string(&eos.to_spec()).unwrap()).unwrap();
        assert_eq!(back, spec);

        let poly: EosSpec =
            serde_json::from_str(r#"{"type":"polytropic","A1":1.0,"psi":3.0}"#).unwrap();
        assert!(matches!(Eos::from_spec(&poly).unwrap(), Eos::Polytropic(_)));
        let zero: EosSpec = serde_json::from_str(r#"{"type":"zero","I0":0.25}"#).unwrap();
        assert_eq!(Eos::from_spec(&zero).unwrap().sie(1.0).unwrap(), 0.25);
    }

    #[test]
    fn spec_json_rejects_unknown_keys_and_bad_values() {
        let err = serde_json::from_str::<EosSpec>(
            r#"{"type":"tait","B":1,"gamma":7,"rho_ref":1,"bogus":2}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
        assert!(serde_json::from_str::<EosSpec>(r#"{"type":"steam"}"#).is_err());
        let err = serde_json::from_str::<EosSpec>(r#"{"type":"zero","psi":2}"#).unwrap_err();
        assert!(err.to_string().contains("psi"), "{err}");
        let err =
            serde_json::from_str::<EosSpec>(r#"{"type":"tait","B":1,"gamma":7}"#).unwrap_err();
        assert!(err.to_string().contains("rho_ref"), "{err}");
        let spec: EosSpec =
            serde_json::from_str(r#"{"type":"polytropic","A1":1.0,"psi":3.0,"I0":1.0}"#).unwrap();
        assert!(Eos::from_spec(&spec).is_err());
    }
}
