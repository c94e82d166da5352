use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("geometry factor n must be 0, 1, or 2, got {0}")]
pub struct InvalidGeometry(pub u8);

/// One-dimensional flow geometry, labelled by the factor `n` in the
/// `n rho u / r` source term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Geometry {
    #[default]
    Planar,
    Cylindrical,
    Spherical,
}

impl Geometry {
    pub const ALL: [Geometry; 3] = [Geometry::Planar, Geometry::Cylindrical, Geometry::Spherical];

    pub fn index(self) -> u8 {
        match self {
            Geometry::Planar => 0,
            Geometry::Cylindrical => 1,
            Geometry::Spherical => 2,
        }
    }

    pub fn n(self) -> f64 {
        f64::from(self.index())
    }

    /// `r^n`, the volume weight per unit `dr` (up to a constant).
    pub fn area(self, r: f64) -> f64 {
        r.powi(i32::from(self.index()))
    }

    /// `r^(n+1) / (n+1)`, a primitive of [`Geometry::area`].
    pub fn volume(self, r: f64) -> f64 {
        let k = i32::from(self.index()) + 1;
        r.powi(k) / f64::from(k)
    }
}

impl TryFrom<u8> for Geometry {
    type Error = InvalidGeometry;

    fn try_from(n: u8) -> Result<Self, Self::Error> {
        match n {
            0 => Ok(Geometry::Planar),
            1 => Ok(Geometry::Cylindrical),
            2 => Ok(Geometry::Spherical),
            _ => Err(InvalidGeometry(n)),
        }
    }
}

impl From<Geometry> for u8 {
    fn from(g: Geometry) -> u8 {
        g.index()
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_u8() {
        for g in Geometry::ALL {
            assert_eq!(Geometry::try_from(g.index()).unwrap(), g);
        }
        assert_eq!(Geometry::try_from(3), Err(InvalidGeometry(3)));
    }

    #[test]
    fn volume_is_primitive_of_area() {
        for g in Geometry::ALL {
            let (a, b) = (0.3, 0.3 + 1e-6);
            let mid = g.area(0.5 * (a + b)) * (b - a);
            assert!(((g.volume(b) - g.volume(a)) - mid).abs() < 1e-15);
        }
    }

    #[test]
    fn json_uses_integer() {
        assert_eq!(serde_json::to_string(&Geometry::Spherical).unwrap(), "2");
        assert!(serde_json::from_str::<Geometry>("4").is_err());
    }
}
