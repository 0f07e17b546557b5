//! The single-circuit estimation pipeline.
//!
//! Steps: split the error budget three ways, lay out logical qubits, count
//! logical cycles and T states, solve the code distance for the per-qubit
//! error target, size the distillation fleet so it keeps pace with the
//! circuit, and add up physical qubits. A perfect-qubit bypass skips error
//! correction and prices the circuit at a fixed clock.

use serde::{Deserialize, Serialize};

use crate::counts::LogicalCounts;
use crate::distill::{
    design_factory, factory_count, required_t_state_error, FactoryConfig, FactoryDesign,
};
use crate::error::{Error, Result};
use crate::math::{ceil_snapped, ceil_sqrt};
use crate::qec::{
    logical_cycle_time_ns, physical_qubits_per_logical, required_distance, CodeDistance,
    PhysicalParams, QecParams,
};
use crate::scenarios::{Modality, Scenario};

/// Equal three-way split of the total error budget.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBudget {
    pub total: f64,
    pub logical: f64,
    pub synthesis: f64,
    pub distillation: f64,
}

impl ErrorBudget {
    /// Probability that at least one of the three components fails,
    /// `1 - (1 - e_log)(1 - e_syn)(1 - e_dis)`. Slightly below `total`
    /// because multi-component failures are double-counted by the split.
    pub fn effective_failure(&self) -> f64 {
        1.0 - (1.0 - self.logical) * (1.0 - self.synthesis) * (1.0 - self.distillation)
    }
}

pub fn split_budget(eps: f64) -> Result<ErrorBudget> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(
            "error budget",
            format!("must be in (0, 1), got {eps}"),
        ));
    }
    let share = eps / 3.0;
    Ok(ErrorBudget {
        total: eps,
        logical: share,
        synthesis: share,
        distillation: share,
    })
}

/// Coefficients of the rotation-synthesis T-count model
/// `ceil(A log2(M_R / eps_syn) + B)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthesisConstants {
    pub a_coeff: f64,
    pub b_coeff: f64,
}

impl Default for SynthesisConstants {
    fn default() -> Self {
        SynthesisConstants {
            a_coeff: 0.53,
            b_coeff: 5.3,
        }
    }
}

/// Logical qubits after layout: `2 Q_alg + ceil(sqrt(8 Q_alg)) + 1`.
pub fn logical_qubits(q_alg: u64) -> u64 {
    2 * q_alg + ceil_sqrt(8 * q_alg) + 1
}

/// Average T states per arbitrary rotation. Zero when there are no rotations.
pub fn synthesis_factor(m_r: u64, eps_syn: f64, consts: &SynthesisConstants) -> u64 {
    if m_r == 0 {
        return 0;
    }
    assert!(eps_syn > 0.0, "eps_syn must be > 0");
    ceil_snapped(consts.a_coeff * (m_r as f64 / eps_syn).log2() + consts.b_coeff) as u64
}

/// Minimum logical cycles: `(M_meas + M_R + M_T) + synth * D_R + 3 M_Tof`.
pub fn logical_cycles(counts: &LogicalCounts, eps_syn: f64, consts: &SynthesisConstants) -> u64 {
    let synth = synthesis_factor(counts.m_r, eps_syn, consts);
    (counts.m_meas + counts.m_r + counts.m_t) + synth * counts.d_r + 3 * counts.m_tof
}

/// Total T states consumed: `synth * M_R + 4 M_Tof + M_T`.
pub fn t_state_count(counts: &LogicalCounts, eps_syn: f64, consts: &SynthesisConstants) -> u64 {
    let synth = synthesis_factor(counts.m_r, eps_syn, consts);
    synth * counts.m_r + 4 * counts.m_tof + counts.m_t
}

/// Per-qubit-per-cycle logical error target: `eps_log / (Q * C)`.
pub fn logical_error_target(eps_log: f64, q: u64, c: u64) -> f64 {
    eps_log / (q as u128 * c as u128) as f64
}

/// Knobs shared by every estimate.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EstimatorConfig {
    pub qec: QecParams,
    pub synthesis: SynthesisConstants,
    pub factory: FactoryConfig,
}

/// Full pipeline output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateResult {
    pub logical_qubits: u64,
    pub logical_cycles: u64,
    pub t_states: u64,
    pub logical_error_target: f64,
    /// `None` for the perfect-qubit bypass (and for empty circuits).
    pub code_distance: Option<CodeDistance>,
    pub cycle_time_ns: f64,
    pub runtime_ns: f64,
    pub factory: FactoryDesign,
    pub factory_count: u64,
    pub qubits_logical: u64,
    pub qubits_distillation: u64,
    pub qubits_total: u64,
}

/// Estimate one circuit on a surface-code machine.
pub fn estimate(
    counts: &LogicalCounts,
    params: &PhysicalParams,
    eps: f64,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    counts.validate()?;
    params.validate()?;
    let budget = split_budget(eps)?;

    let q = logical_qubits(counts.q_alg);
    let c = logical_cycles(counts, budget.synthesis, &cfg.synthesis);
    let m = t_state_count(counts, budget.synthesis, &cfg.synthesis);

    if c == 0 {
        // Circuit with no operations: nothing runs, nothing is encoded.
        return Ok(EstimateResult {
            logical_qubits: q,
            logical_cycles: 0,
            t_states: 0,
            logical_error_target: 0.0,
            code_distance: None,
            cycle_time_ns: 0.0,
            runtime_ns: 0.0,
            factory: FactoryDesign::no_distillation(),
            factory_count: 0,
            qubits_logical: 0,
            qubits_distillation: 0,
            qubits_total: 0,
        });
    }

    let p_eff = params.effective_clifford_error();
    let p_target = logical_error_target(budget.logical, q, c);
    let distance = required_distance(p_target, p_eff, &cfg.qec)
        .map_err(|e| e.in_stage("code-distance solving"))?;
    let cycle_time_ns = logical_cycle_time_ns(distance, params);
    let runtime_ns = cycle_time_ns * c as f64;

    let (factory, factories) = if m > 0 {
        let t_target = required_t_state_error(m, budget.distillation)
            .map_err(|e| e.in_stage("T-state target"))?;
        let design = design_factory(
            params.t_gate_error,
            p_eff,
            &cfg.qec,
            params,
            t_target,
            &cfg.factory,
        )
        .map_err(|e| e.in_stage("T-state factory synthesis"))?;
        let count = factory_count(m, &design, runtime_ns);
        (design, count)
    } else {
        (FactoryDesign::no_distillation(), 0)
    };

    let qubits_logical = q * physical_qubits_per_logical(distance);
    let qubits_distillation = factories * factory.qubits;
    Ok(EstimateResult {
        logical_qubits: q,
        logical_cycles: c,
        t_states: m,
        logical_error_target: p_target,
        code_distance: Some(distance),
        cycle_time_ns,
        runtime_ns,
        factory,
        factory_count: factories,
        qubits_logical,
        qubits_distillation,
        qubits_total: qubits_logical + qubits_distillation,
    })
}

/// Estimate on error-free qubits: no code, no distillation. The circuit runs
/// at `clock_ns` per logical cycle and the qubit count is the logical count.
pub fn estimate_perfect(
    counts: &LogicalCounts,
    eps: f64,
    clock_ns: f64,
    consts: &SynthesisConstants,
) -> Result<EstimateResult> {
    counts.validate()?;
    let budget = split_budget(eps)?;
    if !clock_ns.is_finite() || clock_ns <= 0.0 {
        return Err(Error::invalid(
            "perfect_clock_ns",
            format!("must be > 0, got {clock_ns}"),
        ));
    }
    let q = logical_qubits(counts.q_alg);
    let c = logical_cycles(counts, budget.synthesis, consts);
    let m = t_state_count(counts, budget.synthesis, consts);
    Ok(EstimateResult {
        logical_qubits: q,
        logical_cycles: c,
        t_states: m,
        logical_error_target: 0.0,
        code_distance: None,
        cycle_time_ns: clock_ns,
        runtime_ns: clock_ns * c as f64,
        factory: FactoryDesign::no_distillation(),
        factory_count: 0,
        qubits_logical: q,
        qubits_distillation: 0,
        qubits_total: q,
    })
}

/// Estimate a circuit on a named hardware scenario, dispatching between the
/// surface-code pipeline and the perfect-qubit bypass.
pub fn estimate_scenario(
    scenario: &Scenario,
    counts: &LogicalCounts,
    eps: f64,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    if scenario.modality == Modality::Majorana {
        return Err(Error::UnsupportedModality {
            name: scenario.name.clone(),
            modality: scenario.modality.to_string(),
        });
    }
    if scenario.perfect {
        estimate_perfect(counts, eps, scenario.perfect_clock_ns, &cfg.synthesis)
    } else {
        estimate(counts, &scenario.params, eps, cfg)
    }
}
