//! Logical resource counts.
//!
//! Counts come from two places: a parametric model of the shift-scheduling
//! Grover oracle as a function of the number of scheduled days, and a JSON
//! counts file for arbitrary circuits.
//!
//! The per-day model is a linear interpolation anchored at the published
//! ten-day tally; each gate-class count for `n` days is `round(v10 * n / 10)`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::ceil_log2;

/// Logical resource tallies of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogicalCounts {
    /// Algorithmic logical qubits (including compilation ancillas).
    pub q_alg: u64,
    /// Measurement operations.
    pub m_meas: u64,
    /// Single-qubit rotation gates.
    pub m_r: u64,
    /// T gates.
    pub m_t: u64,
    /// Toffoli gates.
    pub m_tof: u64,
    /// Rotation depth.
    pub d_r: u64,
}

impl LogicalCounts {
    pub fn validate(&self) -> Result<()> {
        if self.q_alg == 0 {
            return Err(Error::invalid("q_alg", "empty circuit: q_alg must be >= 1"));
        }
        if self.d_r > self.m_r {
            return Err(Error::invalid(
                "d_r",
                format!(
                    "rotation depth {} exceeds rotation count {}",
                    self.d_r, self.m_r
                ),
            ));
        }
        Ok(())
    }

    /// Multiply all gate/measurement counts and the rotation depth by `k`,
    /// leaving the qubit count unchanged. This is the "k sequential
    /// repetitions" transform used by the search-extrapolation identity.
    pub fn repeated(&self, k: u64) -> LogicalCounts {
        LogicalCounts {
            q_alg: self.q_alg,
            m_meas: self.m_meas * k,
            m_r: self.m_r * k,
            m_t: self.m_t * k,
            m_tof: self.m_tof * k,
            d_r: self.d_r * k,
        }
    }
}

/// A shift-scheduling problem instance: the number of days to schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QissInstance {
    pub n_days: u64,
}

impl QissInstance {
    pub fn new(n_days: u64) -> Result<Self> {
        if n_days == 0 {
            return Err(Error::invalid("n_days", "must be >= 1"));
        }
        Ok(QissInstance { n_days })
    }
}

/// Ten-day anchor values for the per-day count model.
const ANCHOR_DAYS: u64 = 10;
const ANCHOR_M_MEAS: u64 = 5858;
const ANCHOR_M_R: u64 = 7938;
const ANCHOR_M_T: u64 = 912;
const ANCHOR_M_TOF: u64 = 5820;
const ANCHOR_D_R: u64 = 3653;
const ANCHOR_ROTATION_ANCILLAS: u64 = 38;

/// `round(v10 * n / 10)`, half away from zero, in exact integer arithmetic.
fn scale_per_day(v10: u64, n_days: u64) -> u64 {
    (v10 * n_days + ANCHOR_DAYS / 2) / ANCHOR_DAYS
}

/// Qubits used by the oracle circuit itself: `6n + 10 + ceil(log2(19n))`.
pub fn qiss_algorithm_qubits(inst: QissInstance) -> u64 {
    6 * inst.n_days + 10 + ceil_log2(19 * inst.n_days) as u64
}

/// Full logical counts for one Grover rotation at `n` scheduled days.
/// `q_alg` adds the rotation-synthesis ancillas on top of the circuit qubits.
pub fn qiss_logical_counts(inst: QissInstance) -> LogicalCounts {
    let n = inst.n_days;
    LogicalCounts {
        q_alg: qiss_algorithm_qubits(inst) + scale_per_day(ANCHOR_ROTATION_ANCILLAS, n),
        m_meas: scale_per_day(ANCHOR_M_MEAS, n),
        m_r: scale_per_day(ANCHOR_M_R, n),
        m_t: scale_per_day(ANCHOR_M_T, n),
        m_tof: scale_per_day(ANCHOR_M_TOF, n),
        d_r: scale_per_day(ANCHOR_D_R, n),
    }
}

/// Measurements spent reading out the shop qubits: `4 * n_days`. The rest of
/// `m_meas` comes from the rotation-synthesis ancilla protocol.
pub fn qiss_shop_measurements(inst: QissInstance) -> u64 {
    4 * inst.n_days
}

/// Size of the solution space: exactly `16^n` (16 shift combinations per day).
pub fn solution_space_size(inst: QissInstance) -> BigUint {
    BigUint::from(16u32).pow(u32::try_from(inst.n_days).unwrap_or(u32::MAX))
}

/// Parse a counts file: a JSON object with exactly the six count fields,
/// all non-negative integers. Unknown keys are rejected.
pub fn parse_counts(text: &str) -> Result<LogicalCounts> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let counts: LogicalCounts = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            Error::Parse(format!("counts file: {}", e.inner()))
        } else {
            Error::Parse(format!("counts file, field `{path}`: {}", e.inner()))
        }
    })?;
    counts.validate()?;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn days(n: u64) -> QissInstance {
        QissInstance::new(n).unwrap()
    }

    pub(crate) fn ten_day_counts() -> LogicalCounts {
        LogicalCounts {
            q_alg: 116,
            m_meas: 5858,
            m_r: 7938,
            m_t: 912,
            m_tof: 5820,
            d_r: 3653,
        }
    }

    #[test]
    fn algorithm_qubits_examples() {
        assert_eq!(qiss_algorithm_qubits(days(10)), 78);
        assert_eq!(qiss_algorithm_qubits(days(1)), 21);
        assert_eq!(qiss_algorithm_qubits(days(2)), 28);
    }

    #[test]
    fn ten_day_counts_match_anchor() {
        assert_eq!(qiss_logical_counts(days(10)), ten_day_counts());
        // 4 per day of the tallied measurements read out the shop qubits
        assert_eq!(qiss_shop_measurements(days(10)), 40);
        assert!(qiss_shop_measurements(days(10)) <= ten_day_counts().m_meas);
    }

    #[test]
    fn model_is_linear_from_anchor() {
        assert_eq!(qiss_logical_counts(days(20)).m_tof, 11640);
        let c1 = qiss_logical_counts(days(1));
        assert_eq!(
            c1,
            LogicalCounts {
                q_alg: 25,
                m_meas: 586,
                m_r: 794,
                m_t: 91,
                m_tof: 582,
                d_r: 365,
            }
        );
    }

    #[test]
    fn solution_space_examples() {
        assert_eq!(solution_space_size(days(1)), BigUint::from(16u32));
        assert_eq!(solution_space_size(days(2)), BigUint::from(256u32));
        assert_eq!(
            solution_space_size(days(11)).to_u64().unwrap(),
            17_592_186_044_416
        );
        // beyond u64 without wrapping
        assert_eq!(solution_space_size(days(20)).bits(), 81);
    }

    #[test]
    fn parse_round_trips_anchor() {
        let text = r#"{"q_alg":116,"m_meas":5858,"m_r":7938,"m_t":912,"m_tof":5820,"d_r":3653}"#;
        assert_eq!(parse_counts(text).unwrap(), ten_day_counts());
    }

    #[test]
    fn parse_rejects_invariant_violations() {
        let depth_too_big = r#"{"q_alg":4,"m_meas":0,"m_r":2,"m_t":0,"m_tof":0,"d_r":3}"#;
        let err = parse_counts(depth_too_big).unwrap_err().to_string();
        assert!(err.contains("d_r"), "{err}");

        let empty = r#"{"q_alg":0,"m_meas":0,"m_r":0,"m_t":0,"m_tof":0,"d_r":0}"#;
        let err = parse_counts(empty).unwrap_err().to_string();
        assert!(err.contains("q_alg"), "{err}");
    }

    #[test]
    fn parse_names_offending_field() {
        let negative = r#"{"q_alg":116,"m_meas":-3,"m_r":7938,"m_t":912,"m_tof":5820,"d_r":3653}"#;
        let err = parse_counts(negative).unwrap_err().to_string();
        assert!(err.contains("m_meas"), "{err}");

        let missing = r#"{"q_alg":116,"m_meas":5858,"m_r":7938,"m_t":912,"m_tof":5820}"#;
        let err = parse_counts(missing).unwrap_err().to_string();
        assert!(err.contains("d_r"), "{err}");

        let unknown =
            r#"{"q_alg":116,"m_meas":5858,"m_r":7938,"m_t":912,"m_tof":5820,"d_r":3653,"extra":1}"#;
        let err = parse_counts(unknown).unwrap_err().to_string();
        assert!(err.contains("extra"), "{err}");
    }

    proptest! {
        #[test]
        fn multiples_of_anchor_scale_exactly(k in 1u64..200) {
            let base = qiss_logical_counts(days(10));
            let scaled = qiss_logical_counts(days(10 * k));
            prop_assert_eq!(scaled.m_meas, base.m_meas * k);
            prop_assert_eq!(scaled.m_r, base.m_r * k);
            prop_assert_eq!(scaled.m_t, base.m_t * k);
            prop_assert_eq!(scaled.m_tof, base.m_tof * k);
            prop_assert_eq!(scaled.d_r, base.d_r * k);
        }

        #[test]
        fn solution_space_multiplies_by_sixteen(n in 1u64..60) {
            let a = solution_space_size(days(n));
            let b = solution_space_size(days(n + 1));
            prop_assert_eq!(b, a * 16u32);
        }

        #[test]
        fn model_counts_always_valid(n in 1u64..10_000) {
            qiss_logical_counts(days(n)).validate().unwrap();
        }
    }
}
