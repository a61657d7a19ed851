//! Energy-efficient hybrid eavesdropping/jamming attacks on a three-node
//! secure link.
//!
//! An attacker with a fixed power budget either taps the source→user link
//! (paying a static receive cost plus a per-rate decoding cost) or jams the
//! user (paying a static transmit cost plus amplifier-scaled jamming power).
//! This crate computes the jointly optimal mode share, decoding rate and
//! jamming power that maximize the attacker energy efficiency (AEE): degraded
//! secrecy rate per watt.
//!
//! * [`units`]: dB/dBm conversions at the input boundary.
//! * [`model`]: rates, consumption and AEE.
//! * [`lambertw`], [`golden`]: numerical primitives.
//! * [`solver`]: per-mode optima and the joint solution.
//! * [`experiments`]: sweeps, benchmark gains, mode-switch thresholds.
//! * [`exec`]: rayon-backed batch helpers with a sequential fallback.

// Guards are written as `!(x > y)` on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exec;
pub mod experiments;
pub mod golden;
pub mod lambertw;
pub mod model;
pub mod solver;
pub mod units;

pub use error::{Error, Result};
pub use exec::Execution;
pub use model::{AttackDecision, LinkGains, Scenario, SystemParams};
pub use solver::{solve_joint, GsConfig, Mode, SolveResult};
