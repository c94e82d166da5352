//! Dormand-Prince 5(4) integrator with sign-change detection of singular loci.

use super::SimilarityError;

/// An ODE `y' = F(x, y)` in `N` unknowns.
pub trait OdeSystem<const N: usize> {
    fn derivative(&self, x: f64, y: &[f64; N]) -> Result<[f64; N], SimilarityError>;

    /// A continuous function whose zeros are the singular loci of the system.
    /// The integrator stops where it changes sign.
    fn singularity_indicator(&self, _x: f64, _y: &[f64; N]) -> Option<f64> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorOptions {
    pub rtol: f64,
    pub atol: f64,
    /// First trial step; chosen from the initial slope when `None`.
    pub initial_step: Option<f64>,
    /// Disables error control and takes steps of exactly this size.
    pub fixed_step: Option<f64>,
    /// Smallest step, relative to `max(1, |x|)`, before giving up.
    pub min_step: f64,
    pub max_steps: usize,
    /// Width, relative to `max(1, |x|)`, to which a singular point is bracketed.
    pub event_tol: f64,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-12,
            initial_step: None,
            fixed_step: None,
            min_step: 1e-14,
            max_steps: 1_000_000,
            event_tol: 1e-12,
        }
    }
}

impl IntegratorOptions {
    pub fn with_tolerances(rtol: f64, atol: f64) -> Self {
        Self {
            rtol,
            atol,
            ..Self::default()
        }
    }

    pub fn fixed(step: f64) -> Self {
        Self {
            fixed_step: Some(step),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Termination {
    Completed,
    /// The singularity indicator changed sign; `x` is the bracketed zero.
    SingularLocus {
        x: f64,
    },
    /// The step size collapsed without a sign change of the indicator.
    StepUnderflow {
        x: f64,
        cause: Option<SimilarityError>,
    },
    MaxSteps {
        x: f64,
    },
}

impl Termination {
    pub fn reason(&self) -> &'static str {
        match self {
            Termination::Completed => "completed",
            Termination::SingularLocus { .. } => "singular_locus",
            Termination::StepUnderflow { .. } => "step_underflow",
            Termination::MaxSteps { .. } => "max_steps",
        }
    }

    pub fn is_completed(&self) -> bool {
        matches!(self, Termination::Completed)
    }
}

/// Accepted points of an integration, including the initial point.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<const N: usize> {
    pub x: Vec<f64>,
    pub y: Vec<[f64; N]>,
    pub termination: Termination,
    pub accepted: usize,
    pub rejected: usize,
}

impl<const N: usize> Trajectory<N> {
    pub fn last(&self) -> (f64, [f64; N]) {
        (*self.x.last().unwrap(), *self.y.last().unwrap())
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
/// Fifth-order minus embedded fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

struct Step<const N: usize> {
    y: [f64; N],
    f: [f64; N],
    err: [f64; N],
}

/// One Dormand-Prince step of signed length `h` from `(x, y)` with slope `f0`.
fn dp_step<S: OdeSystem<N>, const N: usize>(
    sys: &S,
    x: f64,
    y: &[f64; N],
    f0: &[f64; N],
    h: f64,
) -> Result<Step<N>, SimilarityError> {
    let mut k = [[0.0; N]; 7];
    k[0] = *f0;
    for s in 1..7 {
        let mut ys = *y;
        for (i, v) in ys.iter_mut().enumerate() {
            *v += h * (0..s).map(|m| A[s][m] * k[m][i]).sum::<f64>();
        }
        if s == 6 {
            // last stage point is the fifth-order solution (FSAL)
            k[6] = sys.derivative(x + h, &ys)?;
            let mut err = [0.0; N];
            for (i, e) in err.iter_mut().enumerate() {
                *e = h * (0..7).map(|m| E[m] * k[m][i]).sum::<f64>();
            }
            return Ok(Step {
                y: ys,
                f: k[6],
                err,
            });
        }
        k[s] = sys.derivative(x + C[s] * h, &ys)?;
    }
    unreachable!()
}

fn error_norm<const N: usize>(
    y: &[f64; N],
    y_new: &[f64; N],
    err: &[f64; N],
    rtol: f64,
    atol: f64,
) -> f64 {
    let sum: f64 = (0..N)
        .map(|i| {
            let sc = atol + rtol * y[i].abs().max(y_new[i].abs());
            (err[i] / sc).powi(2)
        })
        .sum();
    (sum / N as f64).sqrt()
}

fn initial_step<const N: usize>(
    y: &[f64; N],
    f: &[f64; N],
    span: f64,
    opts: &IntegratorOptions,
) -> f64 {
    let sc = |i: usize| opts.atol + opts.rtol * y[i].abs();
    let d0 = (0..N).map(|i| (y[i] / sc(i)).powi(2)).sum::<f64>().sqrt();
    let d1 = (0..N).map(|i| (f[i] / sc(i)).powi(2)).sum::<f64>().sqrt();
    let h = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    h.min(span.abs())
}

fn crosses(a: Option<f64>, b: Option<f64>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if a.signum() * b.signum() < 0.0)
}

/// Integrates from `(x0, y0)` towards `x_end` in either direction.
///
/// Returns an error only when the initial point itself is singular. All
/// other stops are reported through [`Trajectory::termination`], with the
/// points reached so far.
pub fn integrate<S: OdeSystem<N>, const N: usize>(
    sys: &S,
    x0: f64,
    y0: [f64; N],
    x_end: f64,
    opts: &IntegratorOptions,
) -> Result<Trajectory<N>, SimilarityError> {
    let mut f = sys.derivative(x0, &y0)?;
    let mut traj = Trajectory {
        x: vec![x0],
        y: vec![y0],
        termination: Termination::Completed,
        accepted: 0,
        rejected: 0,
    };
    let span = x_end - x0;
    if span == 0.0 {
        return Ok(traj);
    }
    let dir = span.signum();
    let (mut x, mut y) = (x0, y0);
    let mut h = opts
        .fixed_step
        .or(opts.initial_step)
        .unwrap_or_else(|| initial_step(&y0, &f, span, opts))
        .abs();
    let mut indicator = sys.singularity_indicator(x, &y);
    let mut last_failure = None;

    loop {
        let remaining = (x_end - x).abs();
        if remaining <= 4.0 * f64::EPSILON * x_end.abs().max(1.0) {
            traj.termination = Termination::Completed;
            return Ok(traj);
        }
        if traj.accepted + traj.rejected >= opts.max_steps {
            traj.termination = Termination::MaxSteps { x };
            return Ok(traj);
        }
        let h_min = opts.min_step * x.abs().max(1.0);
        if h < h_min {
            // Steps shrink geometrically towards a singular point without
            // crossing it; probe ahead with growing steps for a sign change.
            if let Some(ind) = indicator {
                let mut probe = 2.0 * h_min;
                while probe < remaining {
                    let beyond = dp_step(sys, x, &y, &f, dir * probe)
                        .ok()
                        .and_then(|s| sys.singularity_indicator(x + dir * probe, &s.y));
                    if crosses(Some(ind), beyond) {
                        let x_sing = locate(sys, x, &y, &f, dir, probe, ind, opts);
                        traj.termination = Termination::SingularLocus { x: x_sing };
                        return Ok(traj);
                    }
                    probe *= 2.0;
                    if probe > 1e6 * h_min {
                        break;
                    }
                }
            }
            traj.termination = Termination::StepUnderflow {
                x,
                cause: last_failure,
            };
            return Ok(traj);
        }
        let hs = h.min(remaining);

        let step = match dp_step(sys, x, &y, &f, dir * hs) {
            Ok(step) => step,
            Err(e) => {
                if opts.fixed_step.is_some() {
                    traj.termination = Termination::StepUnderflow { x, cause: Some(e) };
                    return Ok(traj);
                }
                last_failure = Some(e);
                traj.rejected += 1;
                h = 0.25 * hs;
                continue;
            }
        };
        let x_new = if hs == remaining { x_end } else { x + dir * hs };

        let next_indicator = sys.singularity_indicator(x_new, &step.y);
        if crosses(indicator, next_indicator) {
            let x_sing = locate(sys, x, &y, &f, dir, hs, indicator.unwrap(), opts);
            traj.termination = Termination::SingularLocus { x: x_sing };
            return Ok(traj);
        }

        let err = error_norm(&y, &step.y, &step.err, opts.rtol, opts.atol);
        if opts.fixed_step.is_some() || err <= 1.0 {
            x = x_new;
            y = step.y;
            f = step.f;
            indicator = next_indicator;
            traj.x.push(x);
            traj.y.push(y);
            traj.accepted += 1;
            last_failure = None;
            if opts.fixed_step.is_none() {
                let fac = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
                };
                h = hs * fac;
            }
        } else if err.is_finite() {
            traj.rejected += 1;
            h = hs * (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
        } else {
            traj.rejected += 1;
            h = 0.25 * hs;
        }
    }
}

/// Bisects on the step length for the zero of the singularity indicator
/// between `x` and `x + dir * h`. Trial steps that fail count as beyond it.
#[allow(clippy::too_many_arguments)]
fn locate<S: OdeSystem<N>, const N: usize>(
    sys: &S,
    x: f64,
    y: &[f64; N],
    f: &[f64; N],
    dir: f64,
    h: f64,
    start_indicator: f64,
    opts: &IntegratorOptions,
) -> f64 {
    let (mut lo, mut hi) = (0.0, h);
    let width = opts.event_tol * x.abs().max(1.0);
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let same_side = dp_step(sys, x, y, f, dir * mid)
            .ok()
            .and_then(|s| sys.singularity_indicator(x + dir * mid, &s.y))
            .is_some_and(|v| v.signum() * start_indicator.signum() > 0.0);
        if same_side {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    x + dir * 0.5 * (lo + hi)
}
