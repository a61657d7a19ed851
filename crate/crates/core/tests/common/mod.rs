//! Brute-force oracles and random instance generation shared by the
//! integration tests. Nothing here calls the solver; oracles only evaluate
//! model formulas on grids over the feasible set.

#![allow(dead_code)]

use hybrid_aee::exec::{argmax_range, Execution};
use hybrid_aee::model::{LinkGains, Scenario, SystemParams};
use hybrid_aee::units::{db_to_linear, dbm_to_watts, Decibel, DbmPower};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_a11e;

fn dbm(x: f64) -> f64 {
    dbm_to_watts(DbmPower(x)).unwrap()
}

fn db(x: f64) -> f64 {
    db_to_linear(Decibel(x)).unwrap()
}

/// Random scenario: gains in [-90, -50] dB, source/jam-limit/budget/static
/// powers in [0, 20] dBm, ν in [0.1, 0.9], ρ_d in [-20, 0] dBm per bps/Hz,
/// σ² = -100 dBm.
pub fn random_scenario(rng: &mut impl Rng) -> Scenario {
    let mut gain = || db(rng.random_range(-90.0..=-50.0));
    let gains = LinkGains { g_su: gain(), g_sa: gain(), g_au: gain() };
    let mut power = || dbm(rng.random_range(0.0..=20.0));
    let (p_s, p_jm, p_m, p_fr, p_ft) = (power(), power(), power(), power(), power());
    let params = SystemParams {
        p_s,
        sigma2: dbm(-100.0),
        p_jm,
        p_m,
        p_fr,
        p_ft,
        rho_d: dbm(rng.random_range(-20.0..=0.0)),
        nu: rng.random_range(0.1..=0.9),
    };
    Scenario::new(gains, params).unwrap()
}

/// Both pure modes have a non-empty feasible set.
pub fn both_modes_feasible(s: &Scenario) -> bool {
    s.params.p_m > s.params.p_fr && s.params.p_m > s.params.p_ft
}

/// `n` random scenarios with both modes feasible, from a fixed seed.
pub fn feasible_instances(n: usize, seed: u64) -> Vec<Scenario> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let s = random_scenario(&mut rng);
        if both_modes_feasible(&s) {
            out.push(s);
        }
    }
    out
}

/// Scenarios biased toward the high-SNR, low-static-power regime in which the
/// closed-form jamming power is expected to be tight.
pub fn high_snr_instances(n: usize, seed: u64) -> Vec<Scenario> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let gains = LinkGains {
                g_su: db(rng.random_range(-60.0..=-50.0)),
                g_sa: db(rng.random_range(-90.0..=-50.0)),
                g_au: db(rng.random_range(-90.0..=-50.0)),
            };
            let params = SystemParams {
                p_s: dbm(rng.random_range(10.0..=20.0)),
                sigma2: dbm(-100.0),
                p_jm: dbm(20.0),
                p_m: dbm(20.0),
                p_fr: dbm(0.0),
                p_ft: dbm(rng.random_range(-70.0..=-30.0)),
                rho_d: dbm(-10.0),
                nu: rng.random_range(0.1..=0.9),
            };
            Scenario::new(gains, params).unwrap()
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct GridMax {
    pub x: f64,
    pub value: f64,
    /// Grid spacing around the argmax.
    pub step: f64,
}

/// Largest feasible decoding rate: C1 (r ≤ R_A), C2 and the budget at α = 1.
pub fn eaves_feasible_top(s: &Scenario) -> f64 {
    let r_a = (1.0 + s.params.p_s * s.gains.g_sa / s.params.sigma2).log2();
    r_a.min((s.params.p_m - s.params.p_fr) / s.params.rho_d).max(0.0)
}

/// Largest feasible jamming power: C3 and the budget at α = 0.
pub fn jam_feasible_top(s: &Scenario) -> f64 {
    s.params.p_jm.min(s.params.nu * (s.params.p_m - s.params.p_ft)).max(0.0)
}

/// Eavesdropping AEE maximized over `n` uniform points of the feasible rate
/// interval.
pub fn eaves_grid_max(s: &Scenario, n: usize, exec: Execution) -> GridMax {
    let top = eaves_feasible_top(s);
    let step = top / (n - 1) as f64;
    let at = |i: usize| if i == n - 1 { top } else { i as f64 * step };
    let (k, value) = argmax_range(exec, n, |i| s.aee_eaves(at(i))).unwrap();
    GridMax { x: at(k), value, step }
}

/// Jamming AEE maximized over 0 plus `n - 1` log-spaced points spanning ten
/// decades below the top of the feasible interval.
pub fn jam_grid_max(s: &Scenario, n: usize, exec: Execution) -> GridMax {
    let top = jam_feasible_top(s);
    let (a, b) = ((top * 1e-10).ln(), top.ln());
    let m = n - 1;
    let at = |i: usize| match i {
        0 => 0.0,
        i if i == m => top,
        i => (a + (b - a) * (i - 1) as f64 / (m - 1) as f64).exp(),
    };
    let (k, value) = argmax_range(exec, n, |i| s.aee_jam(at(i))).unwrap();
    let ratio = ((b - a) / (m - 1) as f64).exp();
    GridMax { x: at(k), value, step: at(k) * (ratio - 1.0) }
}

/// Number of sign changes in the first differences of `values`, ignoring
/// differences no larger than `tol` in magnitude, and whether every change
/// goes from rising to falling.
pub fn sign_changes(values: &[f64], tol: f64) -> (usize, bool) {
    let signs: Vec<i8> = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|d| d.abs() > tol)
        .map(|d| if d > 0.0 { 1 } else { -1 })
        .collect();
    let changes: Vec<(i8, i8)> = signs.windows(2).filter(|w| w[0] != w[1]).map(|w| (w[0], w[1])).collect();
    let rise_then_fall = changes.iter().all(|&(a, b)| a == 1 && b == -1);
    (changes.len(), rise_then_fall)
}

/// W by bisection on `w·e^w = x` over `[0, max(1, x)]`.
pub fn bisect_lambert(x: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, x.max(1.0));
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid * mid.exp() < x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
