//! Surface-code error model.
//!
//! The logical error rate of a distance-`d` patch is modeled as
//! `P(d) = a * (p / p*)^((d + 1) / 2)`, with crossing prefactor `a` and
//! threshold `p*`. Everything else in this module is derived from that curve:
//! the minimum distance for a target error rate, the physical-qubit overhead
//! `2d^2`, and the logical cycle time `(4 t_2Q + 2 t_meas) * d`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::math::CEIL_SNAP_REL;

/// Surface-code curve constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QecParams {
    /// Crossing prefactor `a`.
    pub crossing_prefactor: f64,
    /// Threshold error rate `p*`.
    pub threshold: f64,
}

impl Default for QecParams {
    fn default() -> Self {
        Self {
            crossing_prefactor: 0.03,
            threshold: 0.01,
        }
    }
}

impl QecParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.crossing_prefactor > 0.0 && self.crossing_prefactor <= 1.0) {
            return Err(Error::invalid(
                "crossing_prefactor",
                format!("must be in (0, 1], got {}", self.crossing_prefactor),
            ));
        }
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return Err(Error::invalid(
                "threshold",
                format!("must be in (0, 1), got {}", self.threshold),
            ));
        }
        Ok(())
    }
}

/// Physical error rates and operation times of a hardware scenario.
/// Times are in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub one_q_gate_error: f64,
    pub two_q_gate_error: f64,
    pub idle_error: f64,
    pub meas_error: f64,
    pub t_gate_error: f64,
    pub meas_time_ns: f64,
    pub one_q_gate_time_ns: f64,
    pub two_q_gate_time_ns: f64,
    pub t_gate_time_ns: f64,
}

impl PhysicalParams {
    pub fn validate(&self) -> Result<()> {
        let rates = [
            ("one_q_gate_error", self.one_q_gate_error),
            ("two_q_gate_error", self.two_q_gate_error),
            ("idle_error", self.idle_error),
            ("meas_error", self.meas_error),
            ("t_gate_error", self.t_gate_error),
        ];
        for (name, r) in rates {
            if !(0.0..1.0).contains(&r) || !r.is_finite() {
                return Err(Error::invalid(name, format!("must be in [0, 1), got {r}")));
            }
        }
        let times = [
            ("meas_time_ns", self.meas_time_ns),
            ("one_q_gate_time_ns", self.one_q_gate_time_ns),
            ("two_q_gate_time_ns", self.two_q_gate_time_ns),
            ("t_gate_time_ns", self.t_gate_time_ns),
        ];
        for (name, t) in times {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::invalid(name, format!("must be > 0, got {t}")));
            }
        }
        Ok(())
    }

    /// The single physical error rate entering the surface-code curve:
    /// the worst gate error. Equals the flat rate for flat scenarios.
    pub fn effective_clifford_error(&self) -> f64 {
        self.one_q_gate_error.max(self.two_q_gate_error)
    }

    /// Name of the rate returned by [`effective_clifford_error`](Self::effective_clifford_error).
    pub fn effective_clifford_error_name(&self) -> &'static str {
        if self.two_q_gate_error >= self.one_q_gate_error {
            "two_q_gate_error"
        } else {
            "one_q_gate_error"
        }
    }
}

/// Surface-code distance: an odd integer >= 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct CodeDistance(u32);

impl CodeDistance {
    pub const MIN: CodeDistance = CodeDistance(3);

    pub fn new(d: u32) -> Result<Self> {
        if d < 3 {
            return Err(Error::invalid(
                "code distance",
                format!("must be >= 3, got {d}"),
            ));
        }
        if d.is_multiple_of(2) {
            return Err(Error::invalid(
                "code distance",
                format!("must be odd, got {d}"),
            ));
        }
        Ok(CodeDistance(d))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for CodeDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<u32> for CodeDistance {
    type Error = Error;
    fn try_from(d: u32) -> Result<Self> {
        CodeDistance::new(d)
    }
}

impl From<CodeDistance> for u32 {
    fn from(d: CodeDistance) -> u32 {
        d.0
    }
}

fn check_rates(p: f64, qec: &QecParams) -> Result<()> {
    qec.validate()?;
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::invalid(
            "physical error rate",
            format!("must be > 0, got {p}"),
        ));
    }
    if p >= qec.threshold {
        return Err(Error::AboveThreshold {
            rate_name: "physical error rate".into(),
            rate: p,
            threshold: qec.threshold,
        });
    }
    Ok(())
}

fn error_rate_unchecked(d: u32, p: f64, qec: &QecParams) -> f64 {
    let exponent = (d + 1).div_ceil(2) as i32;
    qec.crossing_prefactor * (p / qec.threshold).powi(exponent)
}

/// Logical error rate of a distance-`d` patch at physical error rate `p`.
/// Strictly decreasing in `d` for `p` below threshold.
pub fn logical_error_rate(d: CodeDistance, p: f64, qec: &QecParams) -> Result<f64> {
    check_rates(p, qec)?;
    Ok(error_rate_unchecked(d.get(), p, qec))
}

/// Smallest odd distance `d >= 3` with `logical_error_rate(d, p) <= p_target`.
pub fn required_distance(p_target: f64, p: f64, qec: &QecParams) -> Result<CodeDistance> {
    check_rates(p, qec)?;
    if !(p_target > 0.0 && p_target < 1.0) {
        return Err(Error::invalid(
            "p_target",
            format!("must be in (0, 1), got {p_target}"),
        ));
    }

    // Closed form d >= 2*ln(a/P)/ln(p*/p) - 1, snapped before the odd ceiling.
    let raw = 2.0 * (qec.crossing_prefactor / p_target).ln() / (qec.threshold / p).ln() - 1.0;
    if raw > 1e9 {
        return Err(Error::Infeasible(format!(
            "required code distance exceeds 1e9 (target {p_target:e} at physical rate {p:e})"
        )));
    }
    let rounded = raw.round();
    let snapped = if (raw - rounded).abs() <= CEIL_SNAP_REL * raw.abs().max(1.0) {
        rounded
    } else {
        raw.ceil()
    };
    let mut d = (snapped as i64).max(3);
    if d % 2 == 0 {
        d += 1;
    }
    let mut d = d as u32;

    // Settle float edge cases by direct evaluation so the result is exactly
    // the minimal odd distance meeting the target.
    while d > 3 && error_rate_unchecked(d - 2, p, qec) <= p_target {
        d -= 2;
    }
    while error_rate_unchecked(d, p, qec) > p_target {
        d += 2;
    }
    CodeDistance::new(d)
}

/// Physical qubits per logical qubit: `2 d^2`.
pub fn physical_qubits_per_logical(d: CodeDistance) -> u64 {
    let d = d.get() as u64;
    2 * d * d
}

/// Logical cycle time in nanoseconds: `(4 t_2Q + 2 t_meas) * d`.
pub fn logical_cycle_time_ns(d: CodeDistance, params: &PhysicalParams) -> f64 {
    (4.0 * params.two_q_gate_time_ns + 2.0 * params.meas_time_ns) * d.get() as f64
}
