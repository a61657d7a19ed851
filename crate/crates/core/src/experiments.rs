//! Parameter sweeps, benchmark comparison and mode-switching analysis.
//!
//! Every experiment here is deterministic. Row-level work fans out through
//! [`exec`](crate::exec) and is collected in grid order.

use std::fmt;
use std::str::FromStr;

use log::{info, warn};

use crate::error::{Error, Result};
use crate::exec::{argmax_range, map_range, map_slice, Execution};
use crate::model::{AttackDecision, Scenario};
use crate::solver::{self, optimal_eaves_rate, optimal_jam_power, solve_joint, GsConfig, JamSolve, Mode};
use crate::units::{dbm_to_watts, DbmPower};

/// A parameter that a sweep can vary, in its user-facing unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParameter {
    /// Amplifier efficiency, percent.
    Nu,
    /// Decoding consumption, dBm per bps/Hz.
    RhoD,
    /// Attacker budget, dBm.
    PM,
    /// g_SU/g_SA as a linear ratio; g_SA varies, g_SU stays fixed.
    RatioSuSa,
    /// g_SU/g_AU as a linear ratio; g_AU varies, g_SU stays fixed.
    RatioSuAu,
}

impl SweepParameter {
    pub const ALL: [SweepParameter; 5] = [
        SweepParameter::Nu,
        SweepParameter::RhoD,
        SweepParameter::PM,
        SweepParameter::RatioSuSa,
        SweepParameter::RatioSuAu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Nu => "nu",
            SweepParameter::RhoD => "rho_d",
            SweepParameter::PM => "p_m",
            SweepParameter::RatioSuSa => "ratio_su_sa",
            SweepParameter::RatioSuAu => "ratio_su_au",
        }
    }

    /// Column header for the swept value, carrying its unit.
    pub fn value_column(self) -> &'static str {
        match self {
            SweepParameter::Nu => "nu_pct",
            SweepParameter::RhoD => "rho_d_dbm_per_rate",
            SweepParameter::PM => "p_m_dbm",
            SweepParameter::RatioSuSa => "ratio_su_sa",
            SweepParameter::RatioSuAu => "ratio_su_au",
        }
    }

    /// Default grid: ν 10–90 % (17 points), ρ_d −20–0 dBm (41), P_m 0–13 dBm
    /// (27), each gain ratio 1–1000 on 31 log-spaced points.
    pub fn default_spec(self) -> SweepSpec {
        let (lo, hi, points, scale) = match self {
            SweepParameter::Nu => (10.0, 90.0, 17, Scale::Linear),
            SweepParameter::RhoD => (-20.0, 0.0, 41, Scale::Linear),
            SweepParameter::PM => (0.0, 13.0, 27, Scale::Linear),
            SweepParameter::RatioSuSa | SweepParameter::RatioSuAu => (1.0, 1000.0, 31, Scale::Log),
        };
        SweepSpec { parameter: self, lo, hi, points, scale }
    }

    /// Copy of `base` with this parameter set to `value`.
    pub fn apply(self, base: &Scenario, value: f64) -> Result<Scenario> {
        let mut s = *base;
        match self {
            SweepParameter::Nu => s.params.nu = value / 100.0,
            SweepParameter::RhoD => s.params.rho_d = dbm_to_watts(DbmPower(value))?,
            SweepParameter::PM => s.params.p_m = dbm_to_watts(DbmPower(value))?,
            SweepParameter::RatioSuSa => s.gains.g_sa = s.gains.g_su / value,
            SweepParameter::RatioSuAu => s.gains.g_au = s.gains.g_su / value,
        }
        s.validate()?;
        Ok(s)
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepParameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidSweep(format!("unknown sweep parameter `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::InvalidSweep(format!(
                "range [{}, {}] for `{}` is empty or not finite",
                self.lo, self.hi, self.parameter
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidSweep(format!("need at least 2 points, got {}", self.points)));
        }
        if self.scale == Scale::Log && self.lo <= 0.0 {
            return Err(Error::InvalidSweep("log-scale sweep needs a positive lower bound".into()));
        }
        Ok(())
    }

    /// Grid values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    return self.hi;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.lo + (self.hi - self.lo) * t,
                    Scale::Log => (self.lo.ln() + (self.hi.ln() - self.lo.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

/// Fixed, non-adaptive reference strategy: half the block each mode, a fixed
/// jamming power and the largest decodable rate the budget allows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkScheme {
    pub alpha: f64,
    /// Jamming power (W).
    pub p_j: f64,
}

impl Default for BenchmarkScheme {
    /// α = 0.5, P_J = 0 dBm.
    fn default() -> Self {
        BenchmarkScheme { alpha: 0.5, p_j: 1e-3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchmarkEval {
    pub decision: AttackDecision,
    pub aee: f64,
    /// False when the decision breaks a constraint (typically the budget) or
    /// the rate rule went negative and was clamped.
    pub feasible: bool,
}

impl BenchmarkScheme {
    /// Decoding rate `min(log2(1+γ_SA), (P_m - P_fr)/ρ_d)`, clamped at zero.
    pub fn decision(&self, s: &Scenario) -> (AttackDecision, bool) {
        let p = &s.params;
        let rule = s.rates().r_a_max.min((p.p_m - p.p_fr) / p.rho_d);
        let d = AttackDecision { alpha: self.alpha, r_a: rule.max(0.0), p_j: self.p_j };
        (d, rule >= 0.0)
    }

    pub fn evaluate(&self, s: &Scenario) -> BenchmarkEval {
        let (decision, rule_ok) = self.decision(s);
        let aee = s.aee_combined(&decision).unwrap_or(0.0);
        BenchmarkEval { decision, aee, feasible: rule_ok && s.is_feasible(&decision) }
    }
}

/// AEE of the default benchmark scheme.
pub fn benchmark_aee(s: &Scenario) -> BenchmarkEval {
    BenchmarkScheme::default().evaluate(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    /// Benchmark breaks a constraint; the row is excluded from averages.
    BenchmarkInfeasible,
    /// Neither attack mode fits the budget.
    Infeasible,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::BenchmarkInfeasible => "benchmark_infeasible",
            RowStatus::Infeasible => "infeasible",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub status: RowStatus,
    pub aee_benchmark: f64,
    pub aee_eaves_opt: f64,
    pub aee_jam_opt: f64,
    pub aee_joint: f64,
    pub gain_eaves_pct: Option<f64>,
    pub gain_jam_pct: Option<f64>,
    pub gain_joint_pct: Option<f64>,
    pub mode: Option<Mode>,
    /// Joint optimum.
    pub decision: Option<AttackDecision>,
}

fn percent_gain(opt: f64, bench: f64) -> f64 {
    100.0 * (opt - bench) / bench
}

fn sweep_row(s: &Scenario, value: f64, cfg: &GsConfig) -> SweepRow {
    let bench = benchmark_aee(s);
    let solved = match solve_joint(s, cfg) {
        Ok(r) => r,
        Err(e) => {
            warn!("sweep point {value}: {e}");
            return SweepRow {
                value,
                status: RowStatus::Infeasible,
                aee_benchmark: bench.aee,
                aee_eaves_opt: 0.0,
                aee_jam_opt: 0.0,
                aee_joint: 0.0,
                gain_eaves_pct: None,
                gain_jam_pct: None,
                gain_joint_pct: None,
                mode: None,
                decision: None,
            };
        }
    };
    let usable = bench.feasible && bench.aee > 0.0;
    if !usable {
        info!("sweep point {value}: benchmark decision {:?} is infeasible; row excluded", bench.decision);
    }
    let gain = |opt| usable.then(|| percent_gain(opt, bench.aee));
    SweepRow {
        value,
        status: if usable { RowStatus::Ok } else { RowStatus::BenchmarkInfeasible },
        aee_benchmark: bench.aee,
        aee_eaves_opt: solved.aee_eaves_opt,
        aee_jam_opt: solved.aee_jam_opt,
        aee_joint: solved.aee_joint,
        gain_eaves_pct: gain(solved.aee_eaves_opt),
        gain_jam_pct: gain(solved.aee_jam_opt),
        gain_joint_pct: gain(solved.aee_joint),
        mode: Some(solved.mode),
        decision: Some(solved.decision),
    }
}

/// One row per grid point. Per-row infeasibility is flagged, never fatal.
pub fn run_sweep(base: &Scenario, spec: &SweepSpec, cfg: &GsConfig, exec: Execution) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    cfg.validate()?;
    base.validate()?;
    let values = spec.values();
    let scenarios = values
        .iter()
        .map(|&v| spec.parameter.apply(base, v))
        .collect::<Result<Vec<_>>>()?;
    let indexed: Vec<(f64, Scenario)> = values.into_iter().zip(scenarios).collect();
    Ok(map_slice(exec, &indexed, |(v, s)| sweep_row(s, *v, cfg)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterGains {
    pub parameter: SweepParameter,
    pub gain_eaves_pct: f64,
    pub gain_jam_pct: f64,
    pub gain_joint_pct: f64,
    pub rows_used: usize,
    pub rows_excluded: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GainSummary {
    pub per_parameter: Vec<ParameterGains>,
    pub gain_eaves_pct: f64,
    pub gain_jam_pct: f64,
    pub gain_joint_pct: f64,
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    sum / n as f64
}

/// One sweep's rows, labelled by the parameter that was varied.
pub type LabelledSweep = (SweepParameter, Vec<SweepRow>);

/// Two-stage average: mean gain per parameter over its usable rows, then the
/// equal-weight mean across parameters.
pub fn average_gains(sweeps: &[LabelledSweep]) -> Result<GainSummary> {
    if sweeps.is_empty() {
        return Err(Error::InvalidSweep("no sweeps to average".into()));
    }
    let per_parameter = sweeps
        .iter()
        .map(|(param, rows)| {
            let used: Vec<&SweepRow> = rows.iter().filter(|r| r.status == RowStatus::Ok).collect();
            if used.is_empty() {
                return Err(Error::NoFeasibleRows(param.name().to_string()));
            }
            Ok(ParameterGains {
                parameter: *param,
                gain_eaves_pct: mean(used.iter().filter_map(|r| r.gain_eaves_pct)),
                gain_jam_pct: mean(used.iter().filter_map(|r| r.gain_jam_pct)),
                gain_joint_pct: mean(used.iter().filter_map(|r| r.gain_joint_pct)),
                rows_used: used.len(),
                rows_excluded: rows.len() - used.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GainSummary {
        gain_eaves_pct: mean(per_parameter.iter().map(|g| g.gain_eaves_pct)),
        gain_jam_pct: mean(per_parameter.iter().map(|g| g.gain_jam_pct)),
        gain_joint_pct: mean(per_parameter.iter().map(|g| g.gain_joint_pct)),
        per_parameter,
    })
}

/// Run every parameter's default sweep and average the gains.
pub fn benchmark_gains(
    base: &Scenario,
    cfg: &GsConfig,
    exec: Execution,
) -> Result<(Vec<LabelledSweep>, GainSummary)> {
    let sweeps = SweepParameter::ALL
        .into_iter()
        .map(|p| Ok((p, run_sweep(base, &p.default_spec(), cfg, exec)?)))
        .collect::<Result<Vec<_>>>()?;
    let summary = average_gains(&sweeps)?;
    Ok((sweeps, summary))
}

/// Copy of `base` with g_SA = g_AU = g_SU / `ratio`.
pub fn with_gain_ratio(base: &Scenario, ratio: f64) -> Scenario {
    let mut s = *base;
    s.gains.g_sa = s.gains.g_su / ratio;
    s.gains.g_au = s.gains.g_su / ratio;
    s
}

/// Bisection stops once the bracket is this narrow (dB).
pub const THRESHOLD_RESOLUTION_DB: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchThreshold {
    pub rho_d_dbm: f64,
    pub iterations: usize,
    pub mode_below: Mode,
    pub mode_above: Mode,
}

/// `η_E(r*) - η_J(P*)` at a given ρ_d (dBm per bps/Hz).
fn mode_margin(base: &Scenario, rho_d_dbm: f64, cfg: &GsConfig) -> Result<f64> {
    let s = SweepParameter::RhoD.apply(base, rho_d_dbm)?;
    let r = solve_joint(&s, cfg)?;
    Ok(r.aee_eaves_opt - r.aee_jam_opt)
}

fn mode_of(margin: f64) -> Mode {
    if margin > 0.0 {
        Mode::Eavesdrop
    } else {
        Mode::Jam
    }
}

/// Locate the decoding-cost ρ_d (dBm per bps/Hz) where the optimal mode
/// flips, by bisection in the dB domain.
pub fn find_switch_threshold(base: &Scenario, lo_dbm: f64, hi_dbm: f64, cfg: &GsConfig) -> Result<SwitchThreshold> {
    if !(lo_dbm < hi_dbm) {
        return Err(Error::InvalidSweep(format!("threshold range [{lo_dbm}, {hi_dbm}] is empty")));
    }
    let below = mode_of(mode_margin(base, lo_dbm, cfg)?);
    let above = mode_of(mode_margin(base, hi_dbm, cfg)?);
    if below == above {
        return Err(Error::NoCrossing { lo_dbm, hi_dbm });
    }
    let (mut lo, mut hi) = (lo_dbm, hi_dbm);
    let mut iterations = 0;
    while hi - lo > THRESHOLD_RESOLUTION_DB {
        let mid = 0.5 * (lo + hi);
        if mode_of(mode_margin(base, mid, cfg)?) == below {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(SwitchThreshold { rho_d_dbm: 0.5 * (lo + hi), iterations, mode_below: below, mode_above: above })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdRow {
    pub nu: f64,
    pub gain_ratio: f64,
    pub threshold: SwitchThreshold,
}

/// Default (ν, gain ratio) cases for the mode-switch table.
pub const THRESHOLD_CASES: [(f64, f64); 4] = [(0.1, 10.0), (0.1, 100.0), (0.7, 10.0), (0.7, 100.0)];

/// Threshold per (ν, g_SU/g_SA = g_SU/g_AU) case, searched over ρ_d ∈
/// [lo_dbm, hi_dbm].
pub fn threshold_table(
    base: &Scenario,
    cases: &[(f64, f64)],
    lo_dbm: f64,
    hi_dbm: f64,
    cfg: &GsConfig,
    exec: Execution,
) -> Result<Vec<ThresholdRow>> {
    map_slice(exec, cases, |&(nu, ratio)| {
        let mut s = with_gain_ratio(base, ratio);
        s.params.nu = nu;
        find_switch_threshold(&s, lo_dbm, hi_dbm, cfg).map(|threshold| ThresholdRow { nu, gain_ratio: ratio, threshold })
    })
    .into_iter()
    .collect()
}

/// Optimal decoding rate behaviour in normalized units: every quantity is
/// expressed in bps/Hz by dividing powers by ρ_d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateCase {
    /// Degraded secrecy rate under eavesdropping, min(R_A, R_U).
    pub r_de: f64,
    /// P_m / ρ_d.
    pub budget_rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateRow {
    pub case: usize,
    pub r_de: f64,
    pub budget_rate: f64,
    /// P_fr / ρ_d.
    pub static_rate: f64,
    pub r_a_star: f64,
}

/// Default cases: two budget-limited (R_DE ≥ P_m/ρ_d) and two link-limited.
pub const RATE_CASES: [RateCase; 4] = [
    RateCase { r_de: 50.0, budget_rate: 30.0 },
    RateCase { r_de: 50.0, budget_rate: 45.0 },
    RateCase { r_de: 50.0, budget_rate: 100.0 },
    RateCase { r_de: 20.0, budget_rate: 100.0 },
];

/// Scenario realizing a normalized rate case at a given `P_fr/ρ_d`: the
/// source→attacker link is set so R_A = R_DE with R_U above it.
fn rate_case_scenario(base: &Scenario, case: &RateCase, static_rate: f64) -> Scenario {
    let mut s = *base;
    let rho = s.params.rho_d;
    s.params.p_m = case.budget_rate * rho;
    s.params.p_fr = static_rate * rho;
    let gamma_sa = case.r_de.exp2() - 1.0;
    s.gains.g_sa = gamma_sa * s.params.sigma2 / s.params.p_s;
    s.gains.g_su = 2.0 * s.gains.g_sa;
    s
}

/// r*_A across a `P_fr/ρ_d` grid for each case.
pub fn rate_curves(base: &Scenario, cases: &[RateCase], static_rates: &[f64]) -> Vec<RateRow> {
    cases
        .iter()
        .enumerate()
        .flat_map(|(ci, case)| {
            static_rates.iter().map(move |&x| {
                let s = rate_case_scenario(base, case, x);
                RateRow {
                    case: ci,
                    r_de: case.r_de,
                    budget_rate: case.budget_rate,
                    static_rate: x,
                    r_a_star: optimal_eaves_rate(&s).r_a_star,
                }
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JamCase {
    pub p_ft_dbm: f64,
    /// g_SU / g_AU; g_SU stays fixed.
    pub gain_ratio: f64,
}

impl JamCase {
    pub fn scenario(&self, base: &Scenario) -> Result<Scenario> {
        let mut s = *base;
        s.params.p_ft = dbm_to_watts(DbmPower(self.p_ft_dbm))?;
        s.gains.g_au = s.gains.g_su / self.gain_ratio;
        s.validate()?;
        Ok(s)
    }
}

pub const JAM_CASES: [JamCase; 6] = [
    JamCase { p_ft_dbm: -0.33, gain_ratio: 10.0 },
    JamCase { p_ft_dbm: 5.0, gain_ratio: 10.0 },
    JamCase { p_ft_dbm: 10.0, gain_ratio: 10.0 },
    JamCase { p_ft_dbm: -0.33, gain_ratio: 100.0 },
    JamCase { p_ft_dbm: 5.0, gain_ratio: 100.0 },
    JamCase { p_ft_dbm: 10.0, gain_ratio: 100.0 },
];

#[derive(Debug, Clone, PartialEq)]
pub struct JamCurve {
    pub case: JamCase,
    /// (P_J, η_J) samples on a log grid spanning the feasible bracket.
    pub samples: Vec<(f64, f64)>,
    pub golden: JamSolve,
    /// Grid argmax (P_J, η_J).
    pub grid_peak: (f64, f64),
}

/// Smallest jamming power on the sampling grid (W).
pub const JAM_GRID_FLOOR: f64 = 1e-7;

/// Log-spaced grid of `points` values from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    SweepSpec { parameter: SweepParameter::Nu, lo, hi, points, scale: Scale::Log }.values()
}

/// η_J(P_J) samples per case, with the golden-section optimum alongside.
pub fn jam_curves(
    base: &Scenario,
    cases: &[JamCase],
    points: usize,
    cfg: &GsConfig,
    exec: Execution,
) -> Result<Vec<JamCurve>> {
    if points < 2 {
        return Err(Error::InvalidSweep(format!("need at least 2 points, got {points}")));
    }
    cases
        .iter()
        .map(|case| {
            let s = case.scenario(base)?;
            let golden = optimal_jam_power(&s, cfg)?;
            let hi = solver::jam_power_ceiling(&s);
            if !(hi > JAM_GRID_FLOOR) {
                return Err(Error::InvalidSweep(format!("jamming bracket too small for case {case:?}")));
            }
            let grid = log_grid(JAM_GRID_FLOOR, hi, points);
            let samples = map_range(exec, grid.len(), |i| (grid[i], s.aee_jam(grid[i])));
            let (k, v) = argmax_range(exec, samples.len(), |i| samples[i].1).expect("non-empty grid");
            Ok(JamCurve { case: *case, grid_peak: (samples[k].0, v), samples, golden })
        })
        .collect()
}
