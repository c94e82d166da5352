use crate::eos::IsentropicEos;
use crate::geometry::Geometry;
use crate::scaling::{ScalingExponents, SymmetryCase};

use super::integrate::OdeSystem;
use super::{SimilarityError, SimilarityMap, SimilarityState, MIN_XI};

/// Relative size below which a denominator is treated as zero.
const SINGULAR_RTOL: f64 = 1e-14;

fn check_xi(xi: f64) -> Result<(), SimilarityError> {
    if xi >= MIN_XI && xi.is_finite() {
        Ok(())
    } else {
        Err(SimilarityError::InvalidXi { xi })
    }
}

/// `D = alpha xi^(1/alpha) - j`, the similarity-frame relative velocity.
fn relative_velocity(map: &SimilarityMap, xi: f64, j: f64) -> Result<f64, SimilarityError> {
    let front = map.alpha * xi.powf(1.0 / map.alpha);
    let d = front - j;
    if d.abs() <= SINGULAR_RTOL * front.abs().max(j.abs()) {
        return Err(SimilarityError::SingularDenominator { xi });
    }
    Ok(d)
}

/// `r^(-zeta - 2 beta) K_S(r^zeta w)`.
fn scaled_modulus<E: IsentropicEos + ?Sized>(
    map: &SimilarityMap,
    eos: &E,
    r: f64,
    w: f64,
) -> Result<f64, SimilarityError> {
    let modulus = eos.bulk_modulus(r.powf(map.zeta) * w)?;
    Ok(r.powf(-map.zeta - 2.0 * map.beta) * modulus)
}

/// `(w', j')` from the coupled reduced mass and momentum equations.
///
/// With `D = alpha xi^(1/alpha) - j` and `K = r^(-zeta-2beta) K_S(r^zeta w)`
/// the pair is linear in the derivatives:
///
/// ```text
///  xi D w' - xi w j'      = (zeta + beta + n) j w
/// -K xi w' + xi w² D j'   = beta w² j² + K zeta w
/// ```
///
/// and is solved by Cramer's rule. `r` only matters when `K_S` is not
/// compatible with the scaling group; for cases I-IV its powers cancel.
pub fn general_rhs<E: IsentropicEos + ?Sized>(
    state: &SimilarityState,
    map: &SimilarityMap,
    eos: &E,
    r: f64,
    geometry: Geometry,
) -> Result<[f64; 2], SimilarityError> {
    let SimilarityState { xi, w, j, .. } = *state;
    check_xi(xi)?;
    if !(r > 0.0) {
        return Err(SimilarityError::NonPositiveCoordinates { r, t: f64::NAN });
    }
    let d = relative_velocity(map, xi, j)?;
    let k = scaled_modulus(map, eos, r, w)?;
    let b1 = (map.zeta + map.beta + geometry.n()) * j * w;
    let b2 = map.beta * w * w * j * j + k * map.zeta * w;
    let sonic = w * d * d - k;
    if sonic.abs() <= SINGULAR_RTOL * (w * d * d).abs().max(k.abs()) {
        return Err(SimilarityError::SonicPoint { xi });
    }
    let det = xi * xi * w * sonic;
    let dw = xi * w * (b1 * w * d + b2) / det;
    let dj = xi * (d * b2 + k * b1) / det;
    if !(dw.is_finite() && dj.is_finite()) {
        return Err(SimilarityError::NonFinite(format!(
            "w'={dw}, j'={dj} at xi={xi}"
        )));
    }
    Ok([dw, dj])
}

/// [`general_rhs`] as an ODE in `xi` with state `[w, j]`.
#[derive(Debug, Clone, Copy)]
pub struct GeneralSystem<'a, E: ?Sized> {
    pub map: SimilarityMap,
    pub eos: &'a E,
    pub r: f64,
    pub geometry: Geometry,
}

impl<E: IsentropicEos + ?Sized> OdeSystem<2> for GeneralSystem<'_, E> {
    fn derivative(&self, xi: f64, y: &[f64; 2]) -> Result<[f64; 2], SimilarityError> {
        general_rhs(
            &SimilarityState::new(xi, y[0], y[1]),
            &self.map,
            self.eos,
            self.r,
            self.geometry,
        )
    }

    fn singularity_indicator(&self, xi: f64, y: &[f64; 2]) -> Option<f64> {
        let front = self.map.alpha * xi.powf(1.0 / self.map.alpha);
        let d = front - y[1];
        let k = scaled_modulus(&self.map, self.eos, self.r, y[0]).ok()?;
        Some(d * (y[0] * d * d - k))
    }
}

/// Pressureless reduction with `zeta = 0` (`K_S = 0`), state `[w, j]`.
///
/// ```text
/// j' = beta j² / (xi D)
/// w' = (xi w j' + (beta + n) j w) / (xi D)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroPressureSystem {
    pub alpha: f64,
    pub beta: f64,
    pub geometry: Geometry,
}

impl ZeroPressureSystem {
    /// `alpha = 1`, `beta = 0`.
    pub fn kinematic(geometry: Geometry) -> Self {
        Self {
            alpha: 1.0,
            beta: 0.0,
            geometry,
        }
    }

    fn map(&self) -> SimilarityMap {
        SimilarityMap {
            alpha: self.alpha,
            zeta: 0.0,
            beta: self.beta,
            lambda: 0.0,
            tau: 2.0 * self.beta,
        }
    }
}

impl OdeSystem<2> for ZeroPressureSystem {
    fn derivative(&self, xi: f64, y: &[f64; 2]) -> Result<[f64; 2], SimilarityError> {
        check_xi(xi)?;
        let [w, j] = *y;
        let denom = xi * relative_velocity(&self.map(), xi, j)?;
        let dj = self.beta * j * j / denom;
        let dw = (xi * w * dj + (self.beta + self.geometry.n()) * j * w) / denom;
        Ok([dw, dj])
    }

    fn singularity_indicator(&self, xi: f64, y: &[f64; 2]) -> Option<f64> {
        Some(self.alpha * xi.powf(1.0 / self.alpha) - y[1])
    }
}

/// Density equation of the kinematic group restricted to the homologous
/// flow `j = -xi`: `w' = -(n + 1) w / (2 xi)`, state `[w]`.
///
/// In planar geometry the homologous Tait flow sits exactly on the sonic
/// locus, where the coupled system has no unique solution; this reduced
/// form remains regular there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomologousDensitySystem {
    pub geometry: Geometry,
}

impl OdeSystem<1> for HomologousDensitySystem {
    fn derivative(&self, xi: f64, y: &[f64; 1]) -> Result<[f64; 1], SimilarityError> {
        check_xi(xi)?;
        Ok([-(self.geometry.n() + 1.0) * y[0] / (2.0 * xi)])
    }
}

/// Closed-form pressureless solution for the `alpha = 1`, `beta = 0`
/// reduction: `w = w0 (xi - j0)^n xi^(-n)`, `j = j0`.
///
/// For `n > 0`, `xi = j0` is where the ODE denominator vanishes and is
/// reported as [`SimilarityError::SingularDenominator`].
pub fn case2_closed_form(
    xi: f64,
    j0: f64,
    w0: f64,
    geometry: Geometry,
) -> Result<(f64, f64), SimilarityError> {
    if xi == 0.0 || !xi.is_finite() || xi.abs() < MIN_XI {
        return Err(SimilarityError::InvalidXi { xi });
    }
    let n = i32::from(geometry.index());
    if n > 0 && (xi - j0).abs() <= SINGULAR_RTOL * xi.abs().max(j0.abs()) {
        return Err(SimilarityError::SingularDenominator { xi });
    }
    let w = w0 * ((xi - j0) / xi).powi(n);
    Ok((w, j0))
}

/// Parameters of the power-law (case I) flow: the scaling constants, the
/// EOS amplitude `A1` in `K_S = A1 rho^psi`, and the geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseIParams {
    pub exps: ScalingExponents,
    pub amplitude: f64,
    pub geometry: Geometry,
}

impl CaseIParams {
    pub fn new(
        exps: ScalingExponents,
        amplitude: f64,
        geometry: Geometry,
    ) -> Result<Self, SimilarityError> {
        let found = exps.case();
        if found != SymmetryCase::I {
            return Err(SimilarityError::WrongCase {
                expected: SymmetryCase::I,
                found,
            });
        }
        if exps.a2() == 0.0 {
            return Err(SimilarityError::UndefinedExponent("alpha"));
        }
        Ok(Self {
            exps,
            amplitude,
            geometry,
        })
    }

    pub fn map(&self) -> SimilarityMap {
        SimilarityMap::from_scaling(&self.exps).expect("case I has a2 != 0")
    }

    /// `kappa` in `w = xi^kappa W`: `a1 a3 / ((a2 - a1) a2)`.
    pub fn kappa(&self) -> f64 {
        let (a1, a2, a3) = (self.exps.a1(), self.exps.a2(), self.exps.a3());
        a1 * a3 / ((a2 - a1) * a2)
    }

    /// `psi = a5 / a3`.
    pub fn psi(&self) -> f64 {
        self.exps.a5() / self.exps.a3()
    }

    pub fn to_transformed(
        &self,
        state: &SimilarityState,
    ) -> Result<CaseITransformedState, SimilarityError> {
        check_xi(state.xi)?;
        let alpha = self.map().alpha;
        Ok(CaseITransformedState {
            xi: state.xi,
            big_j: state.j * state.xi.powf(-1.0 / alpha),
            big_w: state.w * state.xi.powf(-self.kappa()),
        })
    }

    pub fn from_transformed(
        &self,
        state: &CaseITransformedState,
    ) -> Result<SimilarityState, SimilarityError> {
        check_xi(state.xi)?;
        let alpha = self.map().alpha;
        Ok(SimilarityState::new(
            state.xi,
            state.big_w * state.xi.powf(self.kappa()),
            state.big_j * state.xi.powf(1.0 / alpha),
        ))
    }
}

/// Case I point in the reduced variables `J = j xi^(-a1/a2)`,
/// `W = w xi^(-a1 a3 / ((a2 - a1) a2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseITransformedState {
    pub xi: f64,
    pub big_j: f64,
    pub big_w: f64,
}

/// The three determinants of the autonomous case I system, with
/// `xi W' = delta1 / delta` and `xi J' = delta2 / delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaTerms {
    pub delta: f64,
    pub delta1: f64,
    pub delta2: f64,
}

/// Evaluates the determinants at `(J, W)`.
///
/// Substituting the reduced variables into the coupled equations, with
/// `X = xi W'`, `Y = xi J'` and `q = A1 W^psi`, gives
///
/// ```text
/// (alpha - J) X - W Y         = W r1
/// -q X + W² (alpha - J) Y     = W² r2 + q W (zeta + kappa)
///
/// r1 = (zeta + beta + n) J + J/alpha - (alpha - J) kappa
/// r2 = beta J² - (alpha - J) J / alpha
/// ```
///
/// All three terms carry the common factor `a1² a2 W^(2a1/a3 - 1)`, so that
/// `delta = a2 (a2 - a1 J)² W^(2a1/a3) - A1 a1² a2 W^(2a2/a3)`.
pub fn delta_terms(params: &CaseIParams, big_j: f64, big_w: f64) -> DeltaTerms {
    let (a1, a2, a3) = (params.exps.a1(), params.exps.a2(), params.exps.a3());
    let map = params.map();
    let (alpha, beta, zeta) = (map.alpha, map.beta, map.zeta);
    let kappa = params.kappa();
    let n = params.geometry.n();
    let (jj, ww) = (big_j, big_w);

    let lead = alpha - jj;
    let r1 = (zeta + beta + n) * jj + jj / alpha - lead * kappa;
    let r2 = beta * jj * jj - lead * jj / alpha;
    let q = params.amplitude * ww.powf(params.psi());
    let sonic = lead * lead * ww - q;
    let delta1 = ww * (lead * ww * r1 + ww * r2 + q * (zeta + kappa));
    let delta2 = lead * (ww * r2 + q * (zeta + kappa)) + q * r1;

    let scale = a1 * a1 * a2 * ww.powf(2.0 * a1 / a3 - 1.0);
    DeltaTerms {
        delta: scale * sonic,
        delta1: scale * delta1,
        delta2: scale * delta2,
    }
}

/// Right-hand side of the autonomous case I system in `J`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaRhs {
    /// `delta1 / delta2`.
    pub dw_dj: f64,
    /// `delta / delta2`.
    pub dlnxi_dj: f64,
    /// `delta` vanishes: the quadrature for `xi` is stationary here.
    pub on_sonic_locus: bool,
}

pub fn case1_delta_rhs(
    params: &CaseIParams,
    big_j: f64,
    big_w: f64,
) -> Result<DeltaRhs, SimilarityError> {
    let terms = delta_terms(params, big_j, big_w);
    let size = terms.delta1.abs().max(terms.delta.abs());
    if terms.delta2.abs() <= SINGULAR_RTOL * size || terms.delta2 == 0.0 {
        return Err(SimilarityError::CriticalPoint { j: big_j, w: big_w });
    }
    let on_sonic_locus =
        terms.delta.abs() <= SINGULAR_RTOL * terms.delta1.abs().max(terms.delta2.abs());
    Ok(DeltaRhs {
        dw_dj: terms.delta1 / terms.delta2,
        dlnxi_dj: terms.delta / terms.delta2,
        on_sonic_locus,
    })
}

/// Autonomous case I system with independent variable `J` and state
/// `[W, ln xi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaSystem {
    pub params: CaseIParams,
}

impl OdeSystem<2> for DeltaSystem {
    fn derivative(&self, big_j: f64, y: &[f64; 2]) -> Result<[f64; 2], SimilarityError> {
        let rhs = case1_delta_rhs(&self.params, big_j, y[0])?;
        Ok([rhs.dw_dj, rhs.dlnxi_dj])
    }

    fn singularity_indicator(&self, big_j: f64, y: &[f64; 2]) -> Option<f64> {
        let t = delta_terms(&self.params, big_j, y[0]);
        Some(t.delta.signum() * t.delta2.signum())
    }
}
