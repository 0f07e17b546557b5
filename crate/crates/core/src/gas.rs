//! Full Grover-adaptive-search runs and the classical baseline.
//!
//! A full search over `N = 16^n` schedules needs `sqrt(N) = 4^n` applications
//! of the Grover rotation. Rather than estimating the `4^n`-rotation circuit
//! directly, the single-rotation estimate is run at a budget scaled down by
//! the iteration count and its runtime multiplied back up; the qubit count is
//! the scaled-budget single-rotation total. The two routes are algebraically
//! identical for this cost model (see `repeated` on
//! [`LogicalCounts`](crate::counts::LogicalCounts)).
//!
//! The classical baseline checks one schedule per nanosecond: `16^n` ns.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::counts::{qiss_logical_counts, QissInstance};
use crate::error::{Error, Result};
use crate::estimator::{estimate_scenario, EstimateResult, EstimatorConfig};
use crate::scenarios::Scenario;

/// Outcome of one full-search extrapolation at a given problem size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GasRun {
    pub n_days: u64,
    /// Grover-rotation count, exactly `4^n_days`.
    pub iterations: BigUint,
    /// Upper-bound extrapolation: scaled-budget single rotation times `4^n`.
    pub quantum_runtime_ns: f64,
    /// Physical qubits of the scaled-budget single-rotation estimate.
    pub quantum_qubits: u64,
    pub classical_runtime_ns: f64,
    /// Strictly faster than the classical baseline; ties do not count.
    pub speedup: bool,
    /// Lower-bound extrapolation: full-budget single rotation times `4^n`.
    /// Absent when the full-budget estimate is itself infeasible.
    pub lower_bound_runtime_ns: Option<f64>,
    /// The scaled-budget single-rotation estimate behind the numbers.
    pub estimate: EstimateResult,
}

/// Rotations for a full search at `n` days: exactly `4^n`.
pub fn gas_iterations(n_days: u64) -> Result<BigUint> {
    if n_days == 0 {
        return Err(Error::invalid("n_days", "must be >= 1"));
    }
    let exp = u32::try_from(n_days)
        .map_err(|_| Error::invalid("n_days", "too large for an iteration count"))?;
    Ok(BigUint::from(4u32).pow(exp))
}

/// Per-iteration error budget: `eps / iterations`.
pub fn scaled_budget(eps: f64, iterations: &BigUint) -> Result<f64> {
    if iterations < &BigUint::from(1u32) {
        return Err(Error::invalid("iterations", "must be >= 1"));
    }
    let it = iterations
        .to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::invalid("iterations", "too large to scale a budget"))?;
    let scaled = eps / it;
    if !scaled.is_finite() || scaled <= 0.0 {
        return Err(Error::invalid(
            "error budget",
            format!("{eps} underflows when split over {iterations} iterations"),
        ));
    }
    Ok(scaled)
}

/// Exact classical brute-force runtime in nanoseconds: `16^n`.
pub fn classical_runtime_ns(n_days: u64) -> Result<BigUint> {
    if n_days == 0 {
        return Err(Error::invalid("n_days", "must be >= 1"));
    }
    let exp =
        u32::try_from(n_days).map_err(|_| Error::invalid("n_days", "too large for a runtime"))?;
    Ok(BigUint::from(16u32).pow(exp))
}

/// Classical brute-force runtime in seconds.
pub fn classical_runtime_secs(n_days: u64) -> Result<f64> {
    let ns = classical_runtime_ns(n_days)?;
    Ok(ns.to_f64().unwrap_or(f64::INFINITY) / 1e9)
}

/// Estimate a complete search at `n_days`, upper-bound extrapolation.
pub fn estimate_full_gas(
    n_days: u64,
    scenario: &Scenario,
    eps: f64,
    cfg: &EstimatorConfig,
) -> Result<GasRun> {
    let inst = QissInstance::new(n_days)?;
    let iterations = gas_iterations(n_days)?;
    let iter_f = iterations
        .to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::invalid("n_days", "iteration count overflows f64"))?;
    let eps_single = scaled_budget(eps, &iterations)?;
    let counts = qiss_logical_counts(inst);

    let single = estimate_scenario(scenario, &counts, eps_single, cfg)?;
    let quantum_runtime_ns = single.runtime_ns * iter_f;
    let classical_ns = classical_runtime_ns(n_days)?
        .to_f64()
        .unwrap_or(f64::INFINITY);

    let lower_bound_runtime_ns = estimate_scenario(scenario, &counts, eps, cfg)
        .ok()
        .map(|r| r.runtime_ns * iter_f);

    Ok(GasRun {
        n_days,
        iterations,
        quantum_runtime_ns,
        quantum_qubits: single.qubits_total,
        classical_runtime_ns: classical_ns,
        speedup: quantum_runtime_ns < classical_ns,
        lower_bound_runtime_ns,
        estimate: single,
    })
}

/// Scan problem sizes upward and return the first with a quantum speedup.
/// Sizes whose estimate is infeasible (factory chain, distance blow-up) are
/// skipped; scenario-level failures (above threshold, unsupported modality)
/// abort the scan.
pub fn crossover_days(
    scenario: &Scenario,
    eps: f64,
    max_days: u64,
    cfg: &EstimatorConfig,
) -> Result<Option<GasRun>> {
    for n in 1..=max_days {
        match estimate_full_gas(n, scenario, eps, cfg) {
            Ok(run) if run.speedup => return Ok(Some(run)),
            Ok(_) => continue,
            Err(e) if is_size_dependent(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn is_size_dependent(e: &Error) -> bool {
    match e {
        Error::Infeasible(_) => true,
        Error::Stage { source, .. } => is_size_dependent(source),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::find_scenario;

    fn cfg() -> EstimatorConfig {
        EstimatorConfig::default()
    }

    #[test]
    fn iteration_counts() {
        assert_eq!(gas_iterations(1).unwrap(), BigUint::from(4u32));
        assert_eq!(gas_iterations(7).unwrap(), BigUint::from(16_384u32));
        assert_eq!(gas_iterations(12).unwrap(), BigUint::from(16_777_216u32));
        assert!(gas_iterations(0).is_err());
    }

    #[test]
    fn budget_scaling() {
        let it = gas_iterations(7).unwrap();
        assert_eq!(scaled_budget(0.25, &it).unwrap(), 0.25 / 16_384.0);
        assert_eq!(scaled_budget(0.3, &BigUint::from(1u32)).unwrap(), 0.3);
        assert_eq!(scaled_budget(0.25, &BigUint::from(4u32)).unwrap(), 0.0625);
    }

    #[test]
    fn classical_baseline_values() {
        assert_eq!(classical_runtime_ns(1).unwrap(), BigUint::from(16u32));
        assert_eq!(classical_runtime_secs(11).unwrap(), 17592.186044416);
        // 16^20 ns in years, sanity bound for the washed-out regime
        let years = classical_runtime_secs(20).unwrap() / (365.25 * 86_400.0);
        assert!((3.8e7..3.9e7).contains(&years), "{years:e}");
    }

    #[test]
    fn single_day_run_is_four_single_rotations() {
        let sc = find_scenario("flat-1e-3").unwrap();
        let run = estimate_full_gas(1, &sc, 0.25, &cfg()).unwrap();
        assert_eq!(run.quantum_runtime_ns, run.estimate.runtime_ns * 4.0);
        assert_eq!(run.classical_runtime_ns, 16.0);
        assert!(!run.speedup);
        // lower bound never exceeds the upper bound
        assert!(run.lower_bound_runtime_ns.unwrap() <= run.quantum_runtime_ns);
    }

    #[test]
    fn high_fidelity_crossover_smoke() {
        let sc = find_scenario("flat-1e-9").unwrap();
        let run = crossover_days(&sc, 0.25, 12, &cfg()).unwrap().unwrap();
        assert_eq!(run.n_days, 11);
        assert!(run.speedup);
        let hours = run.quantum_runtime_ns / 1e9 / 3600.0;
        assert!((1.0..4.0).contains(&hours), "{hours}");
    }

    #[test]
    fn perfect_machine_runs_without_correction() {
        let sc = find_scenario("perfect").unwrap();
        let run = estimate_full_gas(10, &sc, 0.25, &cfg()).unwrap();
        assert_eq!(run.quantum_qubits, 264);
        assert_eq!(run.estimate.code_distance, None);
        assert!(run.quantum_runtime_ns > 0.0);
    }

    #[test]
    fn faster_measurement_never_worsens_the_crossover() {
        let fast = find_scenario("flat-1e-9").unwrap();
        let mut slow = fast.clone();
        slow.params.meas_time_ns *= 100.0;
        slow.params.one_q_gate_time_ns *= 100.0;
        slow.params.two_q_gate_time_ns *= 100.0;
        slow.params.t_gate_time_ns *= 100.0;
        let fast_day = crossover_days(&fast, 0.25, 20, &cfg())
            .unwrap()
            .map(|r| r.n_days)
            .unwrap_or(u64::MAX);
        let slow_day = crossover_days(&slow, 0.25, 20, &cfg())
            .unwrap()
            .map(|r| r.n_days)
            .unwrap_or(u64::MAX);
        assert!(fast_day <= slow_day, "{fast_day} > {slow_day}");
    }

    #[test]
    fn scenario_level_failures_abort_the_scan() {
        let sc = find_scenario("majorana-1e-4").unwrap();
        let err = crossover_days(&sc, 0.25, 5, &cfg()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedModality { .. }));
    }
}
