//! Bracketing scalar root finder.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")]
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("function is not finite at x={x}")]
    NonFinite { x: f64 },
    #[error("no convergence after {0} iterations")]
    MaxIterations(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Stop once the bracket is narrower than `xtol * max(|a|, |b|)`.
    pub xtol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            xtol: 1e-14,
            max_iter: 500,
        }
    }
}

fn eval<F: FnMut(f64) -> f64>(f: &mut F, x: f64) -> Result<f64, RootError> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(RootError::NonFinite { x })
    }
}

/// Secant steps safeguarded by bisection on a sign-changing bracket.
///
/// A secant candidate is used when it falls strictly inside the bracket and
/// the previous step at least halved the bracket; otherwise the midpoint is
/// taken. Convergence is never slower than bisection every other step.
pub fn bracketed_root<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    opts: &RootOptions,
) -> Result<f64, RootError> {
    let (mut a, mut b) = if a < b { (a, b) } else { (b, a) };
    let mut fa = eval(&mut f, a)?;
    let mut fb = eval(&mut f, b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(RootError::NoSignChange { a, b, fa, fb });
    }
    let mut last_width = b - a;
    let mut use_secant = true;
    for _ in 0..opts.max_iter {
        let width = b - a;
        if width <= opts.xtol * a.abs().max(b.abs()) {
            return Ok(if fa.abs() < fb.abs() { a } else { b });
        }
        let mid = a + 0.5 * width;
        let secant = b - fb * (b - a) / (fb - fa);
        let x = if use_secant && secant > a && secant < b {
            secant
        } else {
            mid
        };
        let fx = eval(&mut f, x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        use_secant = (b - a) <= 0.5 * last_width;
        last_width = width;
    }
    Err(RootError::MaxIterations(opts.max_iter))
}

/// Consecutive pairs of `points` across which `f` changes sign.
///
/// Points where `f` is not finite break the scan without producing a bracket.
pub fn sign_changes<F: FnMut(f64) -> f64>(mut f: F, points: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &x in points {
        let v = f(x);
        if !v.is_finite() {
            prev = None;
            continue;
        }
        if let Some((px, pv)) = prev {
            if v == 0.0 || (pv != 0.0 && pv.signum() != v.signum()) {
                out.push((px, x));
            }
        }
        prev = Some((x, v));
    }
    out
}

/// `count` points spaced evenly in `log10` from `lo` to `hi` inclusive.
pub fn log_space(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && count >= 2);
    let (l0, l1) = (lo.log10(), hi.log10());
    (0..count)
        .map(|i| {
            if i == count - 1 {
                hi
            } else {
                10f64.powf(l0 + (l1 - l0) * i as f64 / (count - 1) as f64)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bracketed_root(|x| x * x - 2.0, 0.0, 2.0, &RootOptions::default()).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn transcendental() {
        let r = bracketed_root(|x| x.cos() - x, 0.0, 1.0, &RootOptions::default()).unwrap();
        assert!((r.cos() - r).abs() < 1e-15);
    }

    #[test]
    fn steep_function_falls_back_to_bisection() {
        let r =
            bracketed_root(|x| (x - 1e-3).powi(11), -1.0, 5.0, &RootOptions::default()).unwrap();
        assert!((r - 1e-3).abs() < 1e-6);
    }

    #[test]
    fn rejects_missing_sign_change() {
        assert!(matches!(
            bracketed_root(|x| x * x + 1.0, -1.0, 1.0, &RootOptions::default()),
            Err(RootError::NoSignChange { .. })
        ));
    }

    #[test]
    fn counts_sign_changes() {
        let pts: Vec<f64> = (0..=100).map(|i| i as f64 * 0.1).collect();
        let brackets = sign_changes(|x| (x - 2.05) * (x - 7.05), &pts);
        assert_eq!(brackets.len(), 2);
        assert!(brackets[0].0 < 2.05 && brackets[0].1 > 2.05);
    }

    #[test]
    fn log_space_endpoints() {
        let p = log_space(1e-9, 1e6, 16);
        assert_eq!(p[0], 1e-9);
        assert_eq!(p[15], 1e6);
        assert!((p[1] - 1e-8).abs() < 1e-20);
    }
}
