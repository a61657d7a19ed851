//! CSV emission. Every table has a header row and a fixed column order;
//! numbers use the shortest representation that parses back to the same
//! `f64`, and absent values are empty fields.

use std::io::Write;

use csv::Writer;
use hybrid_aee::experiments::{GainSummary, JamCurve, RateRow, SweepParameter, SweepRow, ThresholdRow};
use hybrid_aee::SolveResult;

use crate::CliError;

pub fn num(x: f64) -> String {
    format!("{x:?}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub const SOLVE_COLUMNS: [&str; 13] = [
    "mode",
    "alpha",
    "r_a",
    "p_j",
    "aee_eaves_opt",
    "aee_jam_opt",
    "aee_joint",
    "r_a_star",
    "p_j_star",
    "gs_iterations",
    "gs_iteration_ceiling",
    "gs_bracket_lo",
    "gs_bracket_hi",
];

pub fn write_solve<W: Write>(out: W, r: &SolveResult, epsilon: f64) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record(SOLVE_COLUMNS)?;
    let d = &r.decision;
    let j = &r.jam_diag;
    w.write_record([
        r.mode.to_string(),
        num(d.alpha),
        num(d.r_a),
        num(d.p_j),
        num(r.aee_eaves_opt),
        num(r.aee_jam_opt),
        num(r.aee_joint),
        num(r.r_a_star),
        num(j.p_j_star),
        j.iterations.to_string(),
        j.iteration_ceiling(epsilon).to_string(),
        num(j.bracket_lo),
        num(j.bracket_hi),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn sweep_columns(parameter: SweepParameter) -> [&'static str; 13] {
    [
        parameter.value_column(),
        "status",
        "mode",
        "alpha",
        "r_a",
        "p_j",
        "aee_benchmark",
        "aee_eaves_opt",
        "aee_jam_opt",
        "aee_joint",
        "gain_eaves_pct",
        "gain_jam_pct",
        "gain_joint_pct",
    ]
}

pub fn write_sweep<W: Write>(out: W, parameter: SweepParameter, rows: &[SweepRow]) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record(sweep_columns(parameter))?;
    for r in rows {
        w.write_record([
            num(r.value),
            r.status.as_str().to_string(),
            r.mode.map(|m| m.to_string()).unwrap_or_default(),
            opt(r.decision.map(|d| d.alpha)),
            opt(r.decision.map(|d| d.r_a)),
            opt(r.decision.map(|d| d.p_j)),
            num(r.aee_benchmark),
            num(r.aee_eaves_opt),
            num(r.aee_jam_opt),
            num(r.aee_joint),
            opt(r.gain_eaves_pct),
            opt(r.gain_jam_pct),
            opt(r.gain_joint_pct),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_rate_curves<W: Write>(out: W, rows: &[RateRow]) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record(["case", "r_de", "budget_rate", "static_rate", "r_a_star"])?;
    for r in rows {
        w.write_record([r.case.to_string(), num(r.r_de), num(r.budget_rate), num(r.static_rate), num(r.r_a_star)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_jam_curves<W: Write>(out: W, curves: &[JamCurve]) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record([
        "curve",
        "p_ft_dbm",
        "gain_ratio",
        "p_j",
        "aee_jam",
        "gs_p_j_star",
        "gs_aee",
        "grid_peak_p_j",
        "grid_peak_aee",
    ])?;
    for (i, c) in curves.iter().enumerate() {
        for &(p_j, aee) in &c.samples {
            w.write_record([
                i.to_string(),
                num(c.case.p_ft_dbm),
                num(c.case.gain_ratio),
                num(p_j),
                num(aee),
                num(c.golden.p_j_star),
                num(c.golden.aee),
                num(c.grid_peak.0),
                num(c.grid_peak.1),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_thresholds<W: Write>(out: W, rows: &[ThresholdRow]) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record(["nu", "gain_ratio", "threshold_rho_d_dbm_per_rate", "mode_below", "mode_above", "bisection_iterations"])?;
    for r in rows {
        let t = &r.threshold;
        w.write_record([
            num(r.nu),
            num(r.gain_ratio),
            num(t.rho_d_dbm),
            t.mode_below.to_string(),
            t.mode_above.to_string(),
            t.iterations.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_gain_summary<W: Write>(out: W, g: &GainSummary) -> Result<(), CliError> {
    let mut w = Writer::from_writer(out);
    w.write_record(["parameter", "rows_used", "rows_excluded", "gain_eaves_pct", "gain_jam_pct", "gain_joint_pct"])?;
    for p in &g.per_parameter {
        w.write_record([
            p.parameter.name().to_string(),
            p.rows_used.to_string(),
            p.rows_excluded.to_string(),
            num(p.gain_eaves_pct),
            num(p.gain_jam_pct),
            num(p.gain_joint_pct),
        ])?;
    }
    let used: usize = g.per_parameter.iter().map(|p| p.rows_used).sum();
    let excluded: usize = g.per_parameter.iter().map(|p| p.rows_excluded).sum();
    w.write_record([
        "average".to_string(),
        used.to_string(),
        excluded.to_string(),
        num(g.gain_eaves_pct),
        num(g.gain_jam_pct),
        num(g.gain_joint_pct),
    ])?;
    w.flush()?;
    Ok(())
}
