//! Golden-section search for maximizing a unimodal function on a closed
//! interval.
//!
//! Each iteration keeps one interior probe and evaluates one new point, so
//! the bracket shrinks by the golden ratio conjugate per iteration and the
//! whole search costs `iterations + 2` function evaluations.

/// 1/φ = (√5 - 1)/2.
pub const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Shrink factor used when quoting the iteration bound.
pub const QUOTED_RATIO: f64 = 0.618;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenOutcome {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
    /// Final bracket.
    pub lo: f64,
    pub hi: f64,
}

/// Smallest `N >= 0` with `width · 0.618^N <= epsilon`.
pub fn iteration_bound(width: f64, epsilon: f64) -> usize {
    if !(width > epsilon) {
        return 0;
    }
    ((width / epsilon).ln() / (1.0 / QUOTED_RATIO).ln()).ceil() as usize
}

/// Maximize `f` on `[lo, hi]`, stopping once the bracket is no wider than
/// `epsilon` or after `max_iter` iterations. Returns the best of the final
/// bracket's endpoints, midpoint and interior probes, so a maximum sitting on
/// either end of `[lo, hi]` is returned exactly.
pub fn maximize<F>(f: F, lo: f64, hi: f64, epsilon: f64, max_iter: usize) -> GoldenOutcome
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let mut iterations = 0;
    let mut best = (0.5 * (a + b), f(0.5 * (a + b)));
    let consider = |best: &mut (f64, f64), x: f64, v: f64| {
        if v > best.1 {
            *best = (x, v);
        }
    };
    if b - a > epsilon {
        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let mut f1 = f(x1);
        let mut f2 = f(x2);
        while b - a > epsilon && iterations < max_iter {
            iterations += 1;
            if f1 < f2 {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + INV_PHI * (b - a);
                f2 = f(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - INV_PHI * (b - a);
                f1 = f(x1);
            }
        }
        best = (0.5 * (a + b), f(0.5 * (a + b)));
        consider(&mut best, x1, f1);
        consider(&mut best, x2, f2);
    }
    consider(&mut best, a, f(a));
    consider(&mut best, b, f(b));
    GoldenOutcome { x: best.0, value: best.1, iterations, lo: a, hi: b }
}
