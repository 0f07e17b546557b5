//! Serializable report shapes. Durations are seconds here; the core library
//! works in nanoseconds.

use serde::Serialize;

use qcost_core::gas::GasRun;
use qcost_core::scenarios::RoadmapEntry;
use qcost_core::{EstimateResult, FactoryDesign};

pub const NS_PER_SEC: f64 = 1e9;

#[derive(Debug, Serialize)]
pub struct EstimateReport {
    pub scenario: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_days: Option<u64>,
    pub error_budget: f64,
    pub logical_qubits: u64,
    pub logical_cycles: u64,
    pub t_states: u64,
    pub logical_error_target: f64,
    pub code_distance: Option<u32>,
    pub cycle_time_s: f64,
    pub runtime_s: f64,
    pub factory: FactoryReport,
    pub factory_count: u64,
    pub qubits_logical: u64,
    pub qubits_distillation: u64,
    pub qubits_total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical_runtime_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speedup: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasibility: Option<FeasibilityReport>,
}

#[derive(Debug, Serialize)]
pub struct FactoryReport {
    pub rounds: Vec<RoundReport>,
    pub total_runtime_s: f64,
    pub qubits: u64,
    pub outputs_per_run: u64,
}

#[derive(Debug, Serialize)]
pub struct RoundReport {
    pub round: usize,
    pub distance: u32,
    pub unit: &'static str,
    pub unit_count: u64,
    pub input_t_error: f64,
    pub output_t_error: f64,
    pub clifford_error_bound: f64,
    pub acceptance_prob: f64,
}

#[derive(Debug, Serialize)]
pub struct FeasibilityReport {
    pub company: String,
    pub designation: String,
    pub year: Option<u32>,
    pub qubits: u64,
    pub lower_bound: bool,
}

impl FactoryReport {
    pub fn from_design(design: &FactoryDesign) -> Self {
        FactoryReport {
            rounds: design
                .rounds
                .iter()
                .enumerate()
                .map(|(i, r)| RoundReport {
                    round: i + 1,
                    distance: r.distance.get(),
                    unit: r.unit.name(),
                    unit_count: r.unit_count,
                    input_t_error: r.input_t_error,
                    output_t_error: r.output_t_error,
                    clifford_error_bound: r.clifford_error_bound,
                    acceptance_prob: r.acceptance_prob,
                })
                .collect(),
            total_runtime_s: design.total_runtime_ns / NS_PER_SEC,
            qubits: design.qubits,
            outputs_per_run: design.outputs_per_run,
        }
    }
}

impl FeasibilityReport {
    pub fn from_entry(e: &RoadmapEntry) -> Self {
        FeasibilityReport {
            company: e.company.clone(),
            designation: e.designation.clone(),
            year: e.year,
            qubits: e.qubits,
            lower_bound: e.lower_bound,
        }
    }
}

impl EstimateReport {
    pub fn single(
        scenario: &str,
        n_days: Option<u64>,
        error_budget: f64,
        r: &EstimateResult,
    ) -> Self {
        EstimateReport {
            scenario: scenario.to_string(),
            n_days,
            error_budget,
            logical_qubits: r.logical_qubits,
            logical_cycles: r.logical_cycles,
            t_states: r.t_states,
            logical_error_target: r.logical_error_target,
            code_distance: r.code_distance.map(|d| d.get()),
            cycle_time_s: r.cycle_time_ns / NS_PER_SEC,
            runtime_s: r.runtime_ns / NS_PER_SEC,
            factory: FactoryReport::from_design(&r.factory),
            factory_count: r.factory_count,
            qubits_logical: r.qubits_logical,
            qubits_distillation: r.qubits_distillation,
            qubits_total: r.qubits_total,
            iterations: None,
            classical_runtime_s: None,
            speedup: None,
            feasibility: None,
        }
    }

    pub fn full_gas(scenario: &str, error_budget: f64, run: &GasRun) -> Self {
        let mut report = Self::single(scenario, Some(run.n_days), error_budget, &run.estimate);
        // the headline runtime is the complete-search extrapolation
        report.runtime_s = run.quantum_runtime_ns / NS_PER_SEC;
        report.iterations = Some(run.iterations.to_string());
        report.classical_runtime_s = Some(run.classical_runtime_ns / NS_PER_SEC);
        report.speedup = Some(run.speedup);
        report
    }
}

/// One sweep output row. Field order defines the CSV header:
/// `scenario,n_days,code_distance,runtime_s,qubits_total,qubits_logical,`
/// `qubits_distillation,factories,t_states,classical_runtime_s,speedup,reason`
#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub scenario: String,
    pub n_days: Option<u64>,
    pub code_distance: Option<u32>,
    pub runtime_s: Option<f64>,
    pub qubits_total: Option<u64>,
    pub qubits_logical: Option<u64>,
    pub qubits_distillation: Option<u64>,
    pub factories: Option<u64>,
    pub t_states: Option<u64>,
    pub classical_runtime_s: Option<f64>,
    pub speedup: Option<bool>,
    pub reason: String,
}

impl SweepRow {
    pub fn success(scenario: &str, n_days: Option<u64>, r: &EstimateResult) -> Self {
        SweepRow {
            scenario: scenario.to_string(),
            n_days,
            code_distance: r.code_distance.map(|d| d.get()),
            runtime_s: Some(r.runtime_ns / NS_PER_SEC),
            qubits_total: Some(r.qubits_total),
            qubits_logical: Some(r.qubits_logical),
            qubits_distillation: Some(r.qubits_distillation),
            factories: Some(r.factory_count),
            t_states: Some(r.t_states),
            classical_runtime_s: None,
            speedup: None,
            reason: String::new(),
        }
    }

    pub fn success_full_gas(scenario: &str, run: &GasRun) -> Self {
        let mut row = Self::success(scenario, Some(run.n_days), &run.estimate);
        row.runtime_s = Some(run.quantum_runtime_ns / NS_PER_SEC);
        row.classical_runtime_s = Some(run.classical_runtime_ns / NS_PER_SEC);
        row.speedup = Some(run.speedup);
        row
    }

    pub fn failed(scenario: &str, n_days: Option<u64>, reason: String) -> Self {
        SweepRow {
            scenario: scenario.to_string(),
            n_days,
            code_distance: None,
            runtime_s: None,
            qubits_total: None,
            qubits_logical: None,
            qubits_distillation: None,
            factories: None,
            t_states: None,
            classical_runtime_s: None,
            speedup: None,
            reason,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CrossoverReport {
    pub scenario: String,
    pub max_days: u64,
    pub error_budget: f64,
    pub crossover_day: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum_runtime_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical_runtime_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum_qubits: Option<u64>,
}
