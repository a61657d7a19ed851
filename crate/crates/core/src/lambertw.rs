//! Principal branch of the Lambert W function on the non-negative reals.

use std::f64::consts::E;

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 50;

/// Residual contract: `|w·e^w - x| <= RESIDUAL_TOL · max(1, x)`.
pub const RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WResult {
    pub w: f64,
    pub iterations: usize,
    /// `w·e^w - x` at the returned `w`.
    pub residual: f64,
}

/// W₀(x) for `x >= 0` by damped Halley iteration.
pub fn lambert_w0(x: f64) -> Result<WResult> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!(
            "lambert_w0 is only defined here for x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(WResult { w: 0.0, iterations: 0, residual: 0.0 });
    }
    if x.is_infinite() {
        return Err(Error::Domain("lambert_w0 of infinity".into()));
    }

    let mut w = if x > E {
        let l = x.ln();
        l - l.ln()
    } else if x < 0.25 {
        // W(x) = x - x² + O(x³)
        x * (1.0 - x)
    } else {
        0.8 * x.ln_1p()
    };

    for iteration in 1..=MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        let mut next = w - step;
        if next < 0.0 {
            // W is non-negative here; halve toward zero rather than overshoot
            next = 0.5 * w;
        }
        let converged = (next - w).abs() <= 4.0 * f64::EPSILON * next.abs().max(f64::MIN_POSITIVE);
        w = next;
        if converged {
            let residual = w * w.exp() - x;
            return Ok(WResult { w, iterations: iteration, residual });
        }
    }
    let residual = w * w.exp() - x;
    if residual.abs() <= RESIDUAL_TOL * x.max(1.0) {
        return Ok(WResult { w, iterations: MAX_ITERATIONS, residual });
    }
    Err(Error::Convergence { x, iterations: MAX_ITERATIONS })
}
