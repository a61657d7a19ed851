//! Jointly optimal attack strategy.
//!
//! The joint problem splits into three pieces: the mode share α is always an
//! extreme point, the eavesdropping rate has a closed form, and the jamming
//! AEE is pseudo-concave in P_J so a golden-section search over the feasible
//! bracket finds its global maximum. The joint optimum picks whichever pure
//! mode scores higher.

use std::f64::consts::E;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::{map_slice, Execution};
use crate::golden;
use crate::lambertw::lambert_w0;
use crate::model::{AttackDecision, Scenario};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsConfig {
    /// Bracket tolerance on P_J (W).
    pub epsilon: f64,
    pub max_iter: usize,
}

impl Default for GsConfig {
    fn default() -> Self {
        GsConfig { epsilon: 1e-9, max_iter: 200 }
    }
}

impl GsConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                value: self.epsilon,
                reason: "must be finite and strictly positive",
            });
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidParameter {
                name: "max_iter",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Eavesdrop,
    Jam,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Eavesdrop => "Eavesdrop",
            Mode::Jam => "Jam",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optimal eavesdropping-only outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EavesSolve {
    pub r_a_star: f64,
    pub aee: f64,
    /// False when the budget cannot cover the static receive consumption;
    /// rate and AEE are then forced to zero.
    pub feasible: bool,
}

/// Optimal jamming-only outcome with golden-section diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JamSolve {
    pub p_j_star: f64,
    pub aee: f64,
    pub bracket_lo: f64,
    /// `min(P_Jm, ν(P_m - P_ft))`, or 0 when that is negative.
    pub bracket_hi: f64,
    pub iterations: usize,
    pub feasible: bool,
}

impl JamSolve {
    /// Iteration ceiling for this bracket: the smallest N with
    /// `P^u · 0.618^N <= ε`, plus two.
    pub fn iteration_ceiling(&self, epsilon: f64) -> usize {
        golden::iteration_bound(self.bracket_hi - self.bracket_lo, epsilon) + 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveResult {
    pub decision: AttackDecision,
    pub aee_eaves_opt: f64,
    pub aee_jam_opt: f64,
    pub aee_joint: f64,
    pub mode: Mode,
    pub r_a_star: f64,
    pub eaves_diag: EavesSolve,
    pub jam_diag: JamSolve,
}

/// `min(R_DE, budget_rate)` clamped at zero, where `budget_rate` is the
/// largest rate the remaining budget `(P_m - P_fr)/ρ_d` can pay for.
pub fn rate_within_budget(r_de: f64, budget_rate: f64) -> f64 {
    r_de.min(budget_rate).max(0.0)
}

/// Optimal decoding rate `min(R_DE, (P_m - P_fr)/ρ_d)` and its AEE.
pub fn optimal_eaves_rate(s: &Scenario) -> EavesSolve {
    let p = &s.params;
    if p.p_m < p.p_fr {
        return EavesSolve { r_a_star: 0.0, aee: 0.0, feasible: false };
    }
    let r_a_star = rate_within_budget(s.degraded_rate_eaves(), (p.p_m - p.p_fr) / p.rho_d);
    EavesSolve { r_a_star, aee: s.aee_eaves(r_a_star), feasible: true }
}

/// Upper end of the jamming-power bracket, `min(P_Jm, ν(P_m - P_ft))`.
pub fn jam_power_ceiling(s: &Scenario) -> f64 {
    let p = &s.params;
    p.p_jm.min(p.nu * (p.p_m - p.p_ft))
}

/// Maximize jamming AEE over `[0, min(P_Jm, ν(P_m - P_ft))]` by
/// golden-section search.
pub fn optimal_jam_power(s: &Scenario, cfg: &GsConfig) -> Result<JamSolve> {
    cfg.validate()?;
    let upper = jam_power_ceiling(s);
    if s.params.p_m < s.params.p_ft || !(upper > 0.0) {
        return Ok(JamSolve {
            p_j_star: 0.0,
            aee: 0.0,
            bracket_lo: 0.0,
            bracket_hi: upper.max(0.0),
            iterations: 0,
            feasible: false,
        });
    }
    let out = golden::maximize(|p_j| s.aee_jam(p_j), 0.0, upper, cfg.epsilon, cfg.max_iter);
    Ok(JamSolve {
        p_j_star: out.x,
        aee: out.value,
        bracket_lo: 0.0,
        bracket_hi: upper,
        iterations: out.iterations,
        feasible: true,
    })
}

/// Regime in which the closed-form jamming power is expected to be tight.
pub const APPROX_MIN_GAMMA_SU: f64 = 1e4;
pub const APPROX_MIN_GAMMA_AU: f64 = 1e2;
pub const APPROX_MIN_STATIC_RATIO: f64 = 10.0;

/// Closed-form asymptotic jamming power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JamApprox {
    /// `P_S g_SU W / (g_AU (1 - W))`, unclamped.
    pub p_j: f64,
    /// `W(e/γ_SU)`.
    pub w: f64,
    /// False when γ_SU <= 1, where `W >= 1` and the formula has no meaning.
    pub valid: bool,
}

impl JamApprox {
    /// High-SNR, jamming-dominated regime: γ_SU ≥ 10⁴, γ_AU(p̂) ≥ 10²,
    /// p̂ ≥ 10·P_ft.
    pub fn in_asymptotic_regime(&self, s: &Scenario) -> bool {
        self.valid
            && s.gamma_su() >= APPROX_MIN_GAMMA_SU
            && s.snrs(self.p_j).gamma_au >= APPROX_MIN_GAMMA_AU
            && self.p_j >= APPROX_MIN_STATIC_RATIO * s.params.p_ft
    }
}

/// Asymptotic closed form for the optimal jamming power, for diagnostics
/// only; [`solve_joint`] never uses it.
pub fn approx_jam_power(s: &Scenario) -> Result<JamApprox> {
    let gamma_su = s.gamma_su();
    let w = lambert_w0(E / gamma_su)?.w;
    let p_j = s.params.p_s * s.gains.g_su * w / (s.gains.g_au * (1.0 - w));
    Ok(JamApprox { p_j, w, valid: gamma_su > 1.0 })
}

/// Mode share: 1 (eavesdrop) only when eavesdropping is strictly better.
pub fn optimize_alpha(aee_eaves: f64, aee_jam: f64) -> f64 {
    if aee_eaves > aee_jam {
        1.0
    } else {
        0.0
    }
}

pub fn solve_joint(s: &Scenario, cfg: &GsConfig) -> Result<SolveResult> {
    s.validate()?;
    cfg.validate()?;
    let p = &s.params;
    if p.p_m < p.p_fr && p.p_m < p.p_ft {
        return Err(Error::Infeasible { p_m: p.p_m, p_fr: p.p_fr, p_ft: p.p_ft });
    }

    let eaves = optimal_eaves_rate(s);
    let jam = optimal_jam_power(s, cfg)?;
    let alpha = optimize_alpha(eaves.aee, jam.aee);
    let (mode, decision) = if alpha == 1.0 {
        (Mode::Eavesdrop, AttackDecision::eavesdrop(eaves.r_a_star))
    } else {
        (Mode::Jam, AttackDecision::jam(jam.p_j_star))
    };
    Ok(SolveResult {
        decision,
        aee_eaves_opt: eaves.aee,
        aee_jam_opt: jam.aee,
        aee_joint: eaves.aee.max(jam.aee),
        mode,
        r_a_star: eaves.r_a_star,
        eaves_diag: eaves,
        jam_diag: jam,
    })
}

/// Solve many independent scenarios, in input order.
pub fn solve_batch(exec: Execution, scenarios: &[Scenario], cfg: &GsConfig) -> Vec<Result<SolveResult>> {
    map_slice(exec, scenarios, |s| solve_joint(s, cfg))
}
