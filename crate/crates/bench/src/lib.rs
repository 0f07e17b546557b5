//! Shared fixtures for the pipeline benchmarks.

use qcost_core::counts::{qiss_logical_counts, QissInstance};
use qcost_core::scenarios::find_scenario;
use qcost_core::{EstimatorConfig, LogicalCounts, PhysicalParams, Scenario};

pub fn ten_day_counts() -> LogicalCounts {
    qiss_logical_counts(QissInstance::new(10).unwrap())
}

pub fn flat_1e3() -> PhysicalParams {
    find_scenario("flat-1e-3").unwrap().params
}

pub fn high_fidelity() -> Scenario {
    find_scenario("flat-1e-9").unwrap()
}

pub fn config() -> EstimatorConfig {
    EstimatorConfig::default()
}
