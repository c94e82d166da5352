//! JSON run configurations. Unknown keys are rejected by name.

use std::path::Path;

use iso_euler::{EosSpec, Geometry};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::{config, CliError};

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| config(format!("{}: {e}", path.display())))
}

fn default_rho() -> f64 {
    1.0
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

/// `count` values from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

impl Sweep {
    pub fn values(&self, name: &str) -> Result<Vec<f64>, CliError> {
        let Sweep {
            min,
            max,
            count,
            spacing,
        } = *self;
        if !(min > 0.0 && max >= min && max.is_finite()) {
            return Err(config(format!(
                "`{name}` needs 0 < min <= max, got min={min}, max={max}"
            )));
        }
        if count == 0 || (count == 1 && min != max) {
            return Err(config(format!(
                "`{name}.count` must be at least 2 for a range, got {count}"
            )));
        }
        if count == 1 {
            return Ok(vec![min]);
        }
        let last = (count - 1) as f64;
        Ok((0..count)
            .map(|k| match (k, spacing) {
                (0, _) => min,
                (k, _) if k == count - 1 => max,
                (k, Spacing::Linear) => min + (max - min) * k as f64 / last,
                (k, Spacing::Log) => (min.ln() + (max.ln() - min.ln()) * k as f64 / last).exp(),
            })
            .collect())
    }
}

/// `noh`: jump solutions over a sweep of inflow speeds.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NohConfig {
    /// Defaults to Tait water.
    pub eos: Option<EosSpec>,
    #[serde(default = "default_rho")]
    pub rho0: f64,
    pub u0: Sweep,
    /// Shift `I0` so the inflow has zero SIE.
    #[serde(default = "yes")]
    pub normalize_sie: bool,
}

/// `bubble`: closed-form bubble profiles.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BubbleConfig {
    #[serde(rename = "B", default = "default_bubble_b")]
    pub b: f64,
    #[serde(default = "default_rho")]
    pub rho_ref: f64,
    #[serde(default = "all_geometries")]
    pub geometries: Vec<Geometry>,
    /// Samples per profile on `(0, xi0]`.
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default = "default_rho")]
    pub t: f64,
}

fn default_bubble_b() -> f64 {
    -1e-3
}

fn all_geometries() -> Vec<Geometry> {
    Geometry::ALL.to_vec()
}

fn default_points() -> usize {
    200
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StartPoint {
    pub xi: f64,
    pub w: f64,
    pub j: f64,
}

/// `similarity`: integrate the reduced ODEs of a scaling group.
///
/// Case I groups integrate the autonomous form in `J`, so `end` is a value
/// of `J`; every other group integrates in `xi` and `end` is a value of `xi`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimilarityConfig {
    pub a: [f64; 3],
    /// Case I defaults to the power-law EOS of the group with `A1 = 1`;
    /// other cases default to zero pressure.
    pub eos: Option<EosSpec>,
    #[serde(default)]
    pub geometry: Geometry,
    pub start: StartPoint,
    pub end: f64,
    /// Radius at which a non-power-law bulk modulus is evaluated.
    #[serde(default = "default_rho")]
    pub r: f64,
    pub rtol: Option<f64>,
    pub atol: Option<f64>,
    pub max_steps: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NohSuite {
    pub eos: Option<EosSpec>,
    #[serde(default = "default_rho")]
    pub rho0: f64,
    pub u0: f64,
    #[serde(default = "default_rho")]
    pub t_final: f64,
    pub resolutions: Vec<usize>,
    pub cfl: Option<f64>,
    pub domain_factor: Option<f64>,
    /// Resolution at which the shock speed is measured.
    pub speed_resolution: Option<usize>,
    #[serde(default = "default_shock_cells")]
    pub max_shock_cells: f64,
    #[serde(default = "default_speed_error")]
    pub max_speed_error: f64,
}

fn default_shock_cells() -> f64 {
    2.0
}

fn default_speed_error() -> f64 {
    0.05
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BubbleSuite {
    #[serde(rename = "B", default = "default_bubble_b")]
    pub b: f64,
    #[serde(default = "default_rho")]
    pub rho_ref: f64,
    #[serde(default)]
    pub geometry: Geometry,
    pub resolutions: Vec<usize>,
    #[serde(default = "default_rho")]
    pub t0: f64,
    pub t_final: f64,
    pub cfl: Option<f64>,
    #[serde(default = "default_min_order")]
    pub min_order: f64,
}

fn default_min_order() -> f64 {
    0.8
}

/// `verify`: finite-volume convergence suites with pass/fail thresholds.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub noh: Option<NohSuite>,
    pub bubble: Option<BubbleSuite>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_key_is_named() {
        let err = serde_json::from_str::<NohConfig>(
            r#"{"u0": {"min": 0.1, "max": 1, "count": 3}, "rho_0": 1}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("rho_0"), "{err}");
    }

    #[test]
    fn nested_unknown_key_is_named() {
        let err = serde_json::from_str::<NohConfig>(r#"{"u0": {"min": 0.1, "max": 1, "n": 3}}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("`n`"), "{err}");
    }

    #[test]
    fn sweep_endpoints_are_exact() {
        let s = Sweep {
            min: 0.01,
            max: 1.0,
            count: 100,
            spacing: Spacing::Linear,
        };
        let v = s.values("u0").unwrap();
        assert_eq!((v[0], v[99], v.len()), (0.01, 1.0, 100));
        let log = Sweep {
            spacing: Spacing::Log,
            ..s
        };
        assert!((log.values("u0").unwrap()[50] - 0.01 * 100f64.powf(50.0 / 99.0)).abs() < 1e-15);
    }

    #[test]
    fn bad_sweeps_are_config_errors() {
        let s = Sweep {
            min: 0.0,
            max: 1.0,
            count: 3,
            spacing: Spacing::Linear,
        };
        assert!(matches!(s.values("u0"), Err(CliError::Config(_))));
    }

    #[test]
    fn geometry_is_an_integer() {
        let c: BubbleConfig = serde_json::from_str(r#"{"geometries": [2, 0]}"#).unwrap();
        assert_eq!(c.geometries, vec![Geometry::Spherical, Geometry::Planar]);
        assert!(serde_json::from_str::<BubbleConfig>(r#"{"geometries": [3]}"#).is_err());
    }
}
