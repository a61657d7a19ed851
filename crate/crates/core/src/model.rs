//! System model: link SNRs, secrecy and degraded-secrecy rates, attacker
//! power consumption and attacker energy efficiency (AEE).
//!
//! All quantities are linear: watts, unitless power gains, bps/Hz. A coherence
//! block lasts 1 s, so energy per block and power coincide.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::units::{db_to_linear, dbm_to_watts, Decibel, DbmPower};

/// Relative slack used when checking the power budget, so that a decision
/// sitting exactly on the budget line survives rounding.
pub const BUDGET_TOLERANCE: f64 = 1e-12;

/// Channel power gains of the source→user, source→attacker and
/// attacker→user links.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGains {
    pub g_su: f64,
    pub g_sa: f64,
    pub g_au: f64,
}

impl LinkGains {
    pub fn validate(&self) -> Result<()> {
        positive("g_su", self.g_su)?;
        positive("g_sa", self.g_sa)?;
        positive("g_au", self.g_au)
    }
}

/// Source, noise and attacker-side power parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Source transmit power (W).
    pub p_s: f64,
    /// Noise power at both the user and the attacker (W).
    pub sigma2: f64,
    /// Maximum jamming power (W).
    pub p_jm: f64,
    /// Attacker total power budget (W).
    pub p_m: f64,
    /// Static receive-circuit consumption (W).
    pub p_fr: f64,
    /// Static transmit-circuit consumption (W).
    pub p_ft: f64,
    /// Decoding consumption per unit rate (W per bps/Hz).
    pub rho_d: f64,
    /// Power amplifier efficiency, in (0, 1].
    pub nu: f64,
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        positive("p_s", self.p_s)?;
        positive("sigma2", self.sigma2)?;
        positive("p_jm", self.p_jm)?;
        positive("p_m", self.p_m)?;
        non_negative("p_fr", self.p_fr)?;
        non_negative("p_ft", self.p_ft)?;
        positive("rho_d", self.rho_d)?;
        if !(self.nu > 0.0 && self.nu <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "nu",
                value: self.nu,
                reason: "must lie in (0, 1]",
            });
        }
        Ok(())
    }
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and strictly positive",
        })
    }
}

fn non_negative(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and non-negative",
        })
    }
}

/// The decision triple: eavesdropping share `alpha`, decoding rate `r_a`
/// (bps/Hz) and jamming power `p_j` (W).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackDecision {
    pub alpha: f64,
    pub r_a: f64,
    pub p_j: f64,
}

impl AttackDecision {
    pub fn eavesdrop(r_a: f64) -> Self {
        AttackDecision { alpha: 1.0, r_a, p_j: 0.0 }
    }

    pub fn jam(p_j: f64) -> Self {
        AttackDecision { alpha: 0.0, r_a: 0.0, p_j }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: self.alpha,
                reason: "must lie in [0, 1]",
            });
        }
        non_negative("r_a", self.r_a)?;
        non_negative("p_j", self.p_j)
    }
}

/// A constraint of the joint problem that a decision can break.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Decoding rate above the source→attacker link rate.
    RateAboveLink,
    NegativeRate,
    JamPowerAboveMax,
    NegativeJamPower,
    AlphaBelowZero,
    AlphaAboveOne,
    /// Weighted consumption above the attacker budget.
    PowerBudget,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Snrs {
    pub gamma_su: f64,
    pub gamma_sa: f64,
    pub gamma_au: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSummary {
    /// Source→user rate R_U.
    pub r_u: f64,
    /// Source→attacker rate R_A, the largest decodable rate.
    pub r_a_max: f64,
    pub gamma_su: f64,
    pub gamma_sa: f64,
}

#[inline]
fn log2_1p(x: f64) -> f64 {
    x.ln_1p() / LN_2
}

/// Link gains plus system parameters: everything needed to evaluate a
/// decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub gains: LinkGains,
    pub params: SystemParams,
}

impl Scenario {
    pub fn new(gains: LinkGains, params: SystemParams) -> Result<Self> {
        let s = Scenario { gains, params };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        self.gains.validate()?;
        self.params.validate()
    }

    /// Low-power IoT reference setup: P_S = 10 dBm, P_Jm = P_m = 13 dBm,
    /// g_SU = -60 dB, g_SA = g_AU = -70 dB, σ² = -100 dBm, ν = 0.7,
    /// P_ft = P_fr = -0.33 dBm, ρ_d = -10.33 dBm per bps/Hz.
    pub fn baseline() -> Self {
        let dbm = |x| dbm_to_watts(DbmPower(x)).expect("finite constant");
        let db = |x| db_to_linear(Decibel(x)).expect("finite constant");
        Scenario {
            gains: LinkGains { g_su: db(-60.0), g_sa: db(-70.0), g_au: db(-70.0) },
            params: SystemParams {
                p_s: dbm(10.0),
                sigma2: dbm(-100.0),
                p_jm: dbm(13.0),
                p_m: dbm(13.0),
                p_fr: dbm(-0.33),
                p_ft: dbm(-0.33),
                rho_d: dbm(-10.33),
                nu: 0.7,
            },
        }
    }

    pub fn snrs(&self, p_j: f64) -> Snrs {
        let p = &self.params;
        Snrs {
            gamma_su: p.p_s * self.gains.g_su / p.sigma2,
            gamma_sa: p.p_s * self.gains.g_sa / p.sigma2,
            gamma_au: p_j * self.gains.g_au / p.sigma2,
        }
    }

    pub fn gamma_su(&self) -> f64 {
        self.params.p_s * self.gains.g_su / self.params.sigma2
    }

    pub fn rates(&self) -> RateSummary {
        let s = self.snrs(0.0);
        RateSummary {
            r_u: log2_1p(s.gamma_su),
            r_a_max: log2_1p(s.gamma_sa),
            gamma_su: s.gamma_su,
            gamma_sa: s.gamma_sa,
        }
    }

    /// Secrecy rate under eavesdropping, `max(0, R_U - R_A)`.
    pub fn secrecy_rate_eaves(&self) -> f64 {
        let r = self.rates();
        (r.r_u - r.r_a_max).max(0.0)
    }

    /// Secrecy rate under jamming, `log2(1 + γ_SU / (1 + γ_AU))`.
    pub fn secrecy_rate_jam(&self, p_j: f64) -> f64 {
        let s = self.snrs(p_j);
        log2_1p(s.gamma_su / (1.0 + s.gamma_au))
    }

    /// Degraded secrecy rate under eavesdropping, `min(R_A, R_U)`.
    pub fn degraded_rate_eaves(&self) -> f64 {
        let r = self.rates();
        r.r_a_max.min(r.r_u)
    }

    /// Degraded secrecy rate under jamming,
    /// `log2((1+γ_SU)(1+γ_AU) / (1+γ_SU+γ_AU))`.
    ///
    /// Evaluated as `log2(1+γ_AU) - log2(1 + γ_AU/(1+γ_SU))`, which keeps full
    /// relative precision when the jamming SNR is tiny.
    pub fn degraded_rate_jam(&self, p_j: f64) -> f64 {
        let s = self.snrs(p_j);
        let v = log2_1p(s.gamma_au) - log2_1p(s.gamma_au / (1.0 + s.gamma_su));
        v.max(0.0)
    }

    pub fn consumption_eaves(&self, r_a: f64) -> f64 {
        self.params.p_fr + self.params.rho_d * r_a
    }

    pub fn consumption_jam(&self, p_j: f64) -> f64 {
        self.params.p_ft + p_j / self.params.nu
    }

    /// Eavesdropping AEE `min(r_a, R_U) / (P_fr + ρ_d r_a)`.
    ///
    /// The denominator uses the raw `r_a` even above R_U. A zero denominator
    /// (P_fr = 0 and r_a = 0) yields 0.
    pub fn aee_eaves(&self, r_a: f64) -> f64 {
        let den = self.consumption_eaves(r_a);
        if den <= 0.0 {
            return 0.0;
        }
        r_a.min(self.rates().r_u) / den
    }

    /// Jamming AEE `R_DJ / (P_ft + P_J/ν)`; 0 when P_ft = 0 and P_J = 0.
    pub fn aee_jam(&self, p_j: f64) -> f64 {
        let den = self.consumption_jam(p_j);
        if den <= 0.0 {
            return 0.0;
        }
        self.degraded_rate_jam(p_j) / den
    }

    /// Weighted-sum AEE of a mixed decision.
    pub fn aee_combined(&self, d: &AttackDecision) -> Result<f64> {
        d.validate()?;
        let r_u = self.rates().r_u;
        let num = d.alpha * d.r_a.min(r_u) + (1.0 - d.alpha) * self.degraded_rate_jam(d.p_j);
        let den = self.weighted_consumption(d);
        if !(den > 0.0) {
            return Err(Error::Domain(format!(
                "zero total consumption for decision {d:?}"
            )));
        }
        Ok(num / den)
    }

    /// Left-hand side of the power-budget constraint.
    pub fn weighted_consumption(&self, d: &AttackDecision) -> f64 {
        d.alpha * self.consumption_eaves(d.r_a) + (1.0 - d.alpha) * self.consumption_jam(d.p_j)
    }

    /// First constraint the decision breaks, if any.
    pub fn violated_constraint(&self, d: &AttackDecision) -> Option<Constraint> {
        let p = &self.params;
        if d.r_a > self.rates().r_a_max {
            Some(Constraint::RateAboveLink)
        } else if d.r_a < 0.0 {
            Some(Constraint::NegativeRate)
        } else if d.p_j > p.p_jm {
            Some(Constraint::JamPowerAboveMax)
        } else if d.p_j < 0.0 {
            Some(Constraint::NegativeJamPower)
        } else if d.alpha < 0.0 {
            Some(Constraint::AlphaBelowZero)
        } else if d.alpha > 1.0 {
            Some(Constraint::AlphaAboveOne)
        } else if self.weighted_consumption(d) > p.p_m * (1.0 + BUDGET_TOLERANCE) {
            Some(Constraint::PowerBudget)
        } else {
            None
        }
    }

    pub fn is_feasible(&self, d: &AttackDecision) -> bool {
        self.violated_constraint(d).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn snr_examples() {
        let s = Scenario::baseline();
        let snr = s.snrs(0.0);
        assert!(close(snr.gamma_su, 1e5, 1e-12));
        assert_eq!(snr.gamma_au, 0.0);
        assert!(close(snr.gamma_sa, 1e4, 1e-12));
    }

    #[test]
    fn secrecy_eaves_examples() {
        let mut s = Scenario::baseline();
        let expected = 100001f64.log2() - 10001f64.log2();
        assert!(close(s.secrecy_rate_eaves(), expected, 1e-12));
        assert!((s.secrecy_rate_eaves() - 3.3217).abs() < 1e-4);

        s.gains.g_sa = s.gains.g_su;
        assert_eq!(s.secrecy_rate_eaves(), 0.0);

        let mut swapped = Scenario::baseline();
        std::mem::swap(&mut swapped.gains.g_su, &mut swapped.gains.g_sa);
        assert_eq!(swapped.secrecy_rate_eaves(), 0.0);
    }

    #[test]
    fn secrecy_jam_examples() {
        let s = Scenario::baseline();
        assert!(close(s.secrecy_rate_jam(0.0), s.rates().r_u, 1e-15));
        let expected = (1.0 + 1e5 / 1001.0f64).log2();
        assert!(close(s.secrecy_rate_jam(0.001), expected, 1e-12));
        assert!(s.secrecy_rate_jam(1e6) < 1e-4);
    }

    #[test]
    fn degraded_eaves_examples() {
        let mut s = Scenario::baseline();
        assert!((s.degraded_rate_eaves() - 13.2879).abs() < 1e-4);
        s.gains.g_sa = s.gains.g_su;
        assert!(close(s.degraded_rate_eaves(), s.rates().r_u, 1e-15));
        s.params.p_s = 1e-30;
        assert!(s.degraded_rate_eaves() < 1e-10);
    }

    #[test]
    fn degraded_jam_examples() {
        let s = Scenario::baseline();
        assert_eq!(s.degraded_rate_jam(0.0), 0.0);
        let expected = (100001.0 * 1001.0 / 101001.0f64).log2();
        assert!(close(s.degraded_rate_jam(0.001), expected, 1e-12));
        assert!((s.degraded_rate_jam(0.001) - 9.953).abs() < 1e-3);
    }

    #[test]
    fn consumption_examples() {
        let mut s = Scenario::baseline();
        assert_eq!(s.consumption_eaves(0.0), s.params.p_fr);
        assert!((s.consumption_eaves(13.2879) - 2.158e-3).abs() < 1e-6);
        assert_eq!(s.consumption_jam(0.0), s.params.p_ft);
        assert!((s.consumption_jam(0.0133) - (s.params.p_ft + 0.0133 / 0.7)).abs() < 1e-18);
        assert!((s.consumption_jam(0.0133) - 0.019953).abs() < 0.002 * 0.019953);
        s.params.nu = 1.0;
        assert_eq!(s.consumption_jam(0.01), s.params.p_ft + 0.01);
        s.params.rho_d = 0.0;
        assert_eq!(s.consumption_eaves(42.0), s.params.p_fr);
    }

    #[test]
    fn aee_eaves_examples() {
        let mut s = Scenario::baseline();
        assert_eq!(s.aee_eaves(0.0), 0.0);
        assert!(close(s.aee_eaves(13.2879), 6157.0, 0.01));
        // lift R_A above R_U so a rate beyond R_U is admissible
        s.gains.g_sa = 10.0 * s.gains.g_su;
        let r_u = s.rates().r_u;
        assert!(s.aee_eaves(r_u + 1.0) < s.aee_eaves(r_u));
        s.params.p_fr = 0.0;
        assert_eq!(s.aee_eaves(0.0), 0.0);
    }

    #[test]
    fn aee_jam_examples() {
        let mut s = Scenario::baseline();
        assert_eq!(s.aee_jam(0.0), 0.0);
        assert!(close(s.aee_jam(1.6e-4), 6343.0, 0.01));
        assert!(close(s.aee_jam(0.0133), 678.0, 0.01));
        s.params.p_ft = 0.0;
        assert_eq!(s.aee_jam(0.0), 0.0);
    }

    #[test]
    fn aee_combined_reduces_and_mixes() {
        let s = Scenario::baseline();
        let r = 13.2879;
        let p_j = 0.001;
        assert_eq!(s.aee_combined(&AttackDecision::eavesdrop(r)).unwrap(), s.aee_eaves(r));
        assert_eq!(s.aee_combined(&AttackDecision::jam(p_j)).unwrap(), s.aee_jam(p_j));

        let d = AttackDecision { alpha: 0.5, r_a: r, p_j };
        let r_u = s.rates().r_u;
        let num = 0.5 * r.min(r_u) + 0.5 * s.degraded_rate_jam(p_j);
        let den = 0.5 * (s.params.p_fr + s.params.rho_d * r) + 0.5 * (s.params.p_ft + p_j / 0.7);
        assert!(close(s.aee_combined(&d).unwrap(), num / den, 1e-14));
    }

    #[test]
    fn aee_combined_rejects_zero_denominator() {
        let mut s = Scenario::baseline();
        s.params.p_fr = 0.0;
        assert!(s.aee_combined(&AttackDecision::eavesdrop(0.0)).is_err());
        assert!(s.aee_combined(&AttackDecision { alpha: 1.5, r_a: 0.0, p_j: 0.0 }).is_err());
    }

    #[test]
    fn weighted_consumption_examples() {
        let s = Scenario::baseline();
        let p = s.params;
        assert_eq!(s.weighted_consumption(&AttackDecision::eavesdrop(0.0)), p.p_fr);
        assert_eq!(s.weighted_consumption(&AttackDecision::jam(p.p_jm)), p.p_ft + p.p_jm / p.nu);
        let r_a = s.rates().r_a_max.min((p.p_m - p.p_fr) / p.rho_d);
        let bench = AttackDecision { alpha: 0.5, r_a, p_j: 0.001 };
        let c = s.weighted_consumption(&bench);
        let expected = 0.5 * (p.p_fr + p.rho_d * r_a) + 0.5 * (p.p_ft + 0.001 / p.nu);
        assert!((c - expected).abs() < 1e-18);
        assert!((c - 2.2569e-3).abs() < 1e-7);
        assert!(s.is_feasible(&bench));
        assert!(!s.is_feasible(&AttackDecision::jam(p.p_jm)));
        assert_eq!(
            s.violated_constraint(&AttackDecision::eavesdrop(20.0)),
            Some(Constraint::RateAboveLink)
        );
    }

    #[test]
    fn validation_rejects_out_of_range() {
        let mut s = Scenario::baseline();
        s.params.nu = 1.2;
        assert!(s.validate().is_err());
        s.params.nu = 0.5;
        s.gains.g_au = 0.0;
        assert!(s.validate().is_err());
        s.gains.g_au = 1e-7;
        s.params.p_fr = -1.0;
        assert!(s.validate().is_err());
    }

    #[test]
    fn degraded_jam_is_concave_on_log_grid() {
        let s = Scenario::baseline();
        let n = 2000;
        let (lo, hi) = (1e-9f64.ln(), s.params.p_jm.ln());
        let xs: Vec<f64> = (0..n).map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp()).collect();
        for w in xs.windows(3) {
            let (x0, x1, x2) = (w[0], w[1], w[2]);
            let (f0, f1, f2) = (s.degraded_rate_jam(x0), s.degraded_rate_jam(x1), s.degraded_rate_jam(x2));
            let d2 = 2.0 * ((f2 - f1) / (x2 - x1) - (f1 - f0) / (x1 - x0)) / (x2 - x0);
            assert!(d2 <= 1e-9, "second difference {d2} at {x1}");
        }
    }

    fn scenario_strategy() -> impl Strategy<Value = Scenario> {
        (-90.0f64..-50.0, -90.0f64..-50.0, -90.0f64..-50.0, 0.0f64..20.0, 0.1f64..0.9).prop_map(
            |(su, sa, au, ps, nu)| {
                let mut s = Scenario::baseline();
                s.gains = LinkGains {
                    g_su: db_to_linear(Decibel(su)).unwrap(),
                    g_sa: db_to_linear(Decibel(sa)).unwrap(),
                    g_au: db_to_linear(Decibel(au)).unwrap(),
                };
                s.params.p_s = dbm_to_watts(DbmPower(ps)).unwrap();
                s.params.nu = nu;
                s
            },
        )
    }

    proptest! {
        #[test]
        fn degraded_jam_identity(s in scenario_strategy(), p_j in 0.0f64..1.0) {
            let lhs = s.degraded_rate_jam(p_j);
            let rhs = s.rates().r_u - s.secrecy_rate_jam(p_j);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * s.rates().r_u.max(1.0));
        }

        #[test]
        fn jam_rates_monotone(s in scenario_strategy(), a in 1e-9f64..0.1, f in 1.01f64..10.0) {
            let b = a * f;
            prop_assert!(s.degraded_rate_jam(b) > s.degraded_rate_jam(a));
            prop_assert!(s.secrecy_rate_jam(b) < s.secrecy_rate_jam(a));
        }

        #[test]
        fn eaves_rates_clamped(s in scenario_strategy()) {
            let r = s.rates();
            prop_assert!(s.secrecy_rate_eaves() >= 0.0);
            prop_assert!(s.degraded_rate_eaves() <= r.r_u.min(r.r_a_max));
        }

        #[test]
        fn combined_reduces_exactly(s in scenario_strategy(), r_a in 0.0f64..20.0, p_j in 0.0f64..0.02) {
            prop_assert_eq!(s.aee_combined(&AttackDecision::eavesdrop(r_a)).unwrap(), s.aee_eaves(r_a));
            prop_assert_eq!(s.aee_combined(&AttackDecision::jam(p_j)).unwrap(), s.aee_jam(p_j));
        }
    }
}
